"""
Quiver and representation file formats.

Quiver file (UTF-8, LF or CRLF, ``#`` starts a comment)::

    [vertices]
    a 1 0          # id dim theta
    b 2 1/2
    [arrows]
    alpha a b      # id src tgt
    [options]
    seed 7         # QuiverSettings field name and value

Representation file: for each arrow, a line holding the arrow id followed
by d_t rows of d_s complex entries ``a+bi``. Arrows whose matrix has a zero
dimension carry no rows and may be omitted.

Parsing reports the first problem as a SpecParseError with its line and
column. Semantic problems (duplicate ids, undeclared vertices, a zero
dimension vector) are left to ``validate`` so they can all be listed at once.
"""

from dataclasses import dataclass, field
from pathlib import Path as FilePath
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union
import logging
import re

import numpy as np

from .quiver.model import Arrow, DimensionVector, Quiver, Weight
from .repspace.points import RepPoint
from .utils.errors import ShapeMismatchError, SpecParseError
from .utils.rationals import format_complex, format_rational, parse_complex, parse_rational
from .utils.settings import DEFAULT_SETTINGS, QuiverSettings, build_call_settings

logger = logging.getLogger(__name__)

SECTIONS = ("vertices", "arrows", "options")

_TOKEN = re.compile(r'\S+')
_HEADER = re.compile(r'^\[\s*([^\]\s]*)\s*\]$')
_DIM = re.compile(r'^\d+$')

PathLike = Union[str, FilePath]


@dataclass
class QuiverSpec:
    """A parsed quiver file: the (quiver, dims, weight) triple plus options."""

    quiver: Quiver
    dims: DimensionVector
    weight: Weight
    options: Dict[str, Any] = field(default_factory=dict)
    path: str = "<input>"

    def settings(self, overrides: Optional[Dict[str, Any]] = None, base: QuiverSettings = DEFAULT_SETTINGS) -> QuiverSettings:
        """Settings for this file: ``[options]`` first, then ``overrides`` (CLI flags) on top."""
        from_file = build_call_settings(self.options, base)
        return build_call_settings(overrides, from_file)


def _tokens(line: str) -> List[Tuple[str, int]]:
    """Tokens with their 1-based columns."""
    return [(match.group(0), match.start() + 1) for match in _TOKEN.finditer(line)]


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """Non-blank lines with comments removed, numbered from 1."""
    if text.startswith('\ufeff'):
        text = text[1:]
    # only LF and CRLF end a line
    for number, raw in enumerate(text.split('\n'), start=1):
        if raw.endswith('\r'):
            raw = raw[:-1]
        line = raw.split('#', 1)[0].rstrip()
        if line.strip():
            yield number, line


def parse_spec_text(text: str, path: str = "<input>") -> QuiverSpec:
    """
    Parse the text of a quiver file.

    Args:
        text: File contents
        path: Name used in error locations

    Returns:
        The parsed QuiverSpec (not yet validated)

    Raises:
        SpecParseError: On the first malformed line, with its location
    """
    vertices: List[str] = []
    arrows: List[Arrow] = []
    dims: Dict[str, int] = {}
    theta: Dict[str, Any] = {}
    options: Dict[str, Any] = {}
    section: Optional[str] = None

    for number, line in _content_lines(text):
        tokens = _tokens(line)
        header = _HEADER.match(line.strip())
        if header:
            name = header.group(1).lower()
            if name not in SECTIONS:
                column = line.index('[') + 2
                raise SpecParseError(
                    f"unknown section '[{header.group(1)}]'; expected one of "
                    + ", ".join(f"[{s}]" for s in SECTIONS),
                    number, column, path,
                )
            section = name
            continue
        if section is None:
            raise SpecParseError("content before the first section header", number, tokens[0][1], path)

        if section == "vertices":
            if len(tokens) != 3:
                raise SpecParseError(f"vertex line needs 'id dim theta', got {len(tokens)} field(s)", number, tokens[0][1], path)
            (vertex, _), (dim_text, dim_col), (theta_text, theta_col) = tokens
            if not _DIM.match(dim_text):
                raise SpecParseError(f"dimension '{dim_text}' is not a non-negative integer", number, dim_col, path)
            try:
                value = parse_rational(theta_text)
            except ValueError as e:
                raise SpecParseError(str(e), number, theta_col, path) from e
            vertices.append(vertex)
            dims[vertex] = int(dim_text)
            theta[vertex] = value

        elif section == "arrows":
            if len(tokens) != 3:
                raise SpecParseError(f"arrow line needs 'id src tgt', got {len(tokens)} field(s)", number, tokens[0][1], path)
            arrows.append(Arrow(*(token for token, _ in tokens)))

        else:
            if len(tokens) != 2:
                raise SpecParseError(f"option line needs 'name value', got {len(tokens)} field(s)", number, tokens[0][1], path)
            (name, name_col), (value_text, value_col) = tokens
            try:
                coerced = build_call_settings({name: value_text})
            except ValueError as e:
                column = name_col if "Unknown option" in str(e) else value_col
                raise SpecParseError(str(e), number, column, path) from e
            options[name] = getattr(coerced, name)

    spec = QuiverSpec(Quiver(tuple(vertices), tuple(arrows)), DimensionVector(dims), Weight(theta), options, path)
    logger.debug(f"Parsed {path}: {len(vertices)} vertices, {len(arrows)} arrows, {len(options)} option(s)")
    return spec


def _read(path: PathLike) -> str:
    """
    File contents decoded as UTF-8.

    Raises:
        OSError: If the file cannot be read
        SpecParseError: At the first byte that is not valid UTF-8
    """
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_start = data.rfind(b"\n", 0, e.start) + 1
        line = data.count(b"\n", 0, e.start) + 1
        prefix = data[line_start:e.start].decode("utf-8")
        if line_start == 0 and prefix.startswith('\ufeff'):
            prefix = prefix[1:]
        column = len(prefix) + 1
        raise SpecParseError(f"invalid UTF-8 byte 0x{data[e.start]:02x}", line, column, str(path)) from e


def load_spec(path: PathLike) -> QuiverSpec:
    """
    Read and parse a quiver file.

    Raises:
        OSError: If the file cannot be read
        SpecParseError: If it is malformed
    """
    return parse_spec_text(_read(path), str(path))


def format_spec(spec: QuiverSpec) -> str:
    """Canonical text of a quiver file; parsing it gives back the same spec."""
    lines = ["[vertices]"]
    for vertex in spec.quiver.vertices:
        lines.append(f"{vertex} {spec.dims[vertex]} {format_rational(spec.weight[vertex])}")
    lines.append("[arrows]")
    for arrow in spec.quiver.arrows:
        lines.append(f"{arrow.id} {arrow.src} {arrow.tgt}")
    if spec.options:
        lines.append("[options]")
        for name, value in spec.options.items():
            lines.append(f"{name} {value!r}")
    return "\n".join(lines) + "\n"


# ============================================================================
# Representation files
# ============================================================================

def parse_rep_text(text: str, quiver: Quiver, dims: DimensionVector, path: str = "<input>") -> RepPoint:
    """
    Parse a representation file against a quiver and dimension vector.

    Raises:
        SpecParseError: On an unknown or repeated arrow id or a malformed entry
        ShapeMismatchError: If an arrow has the wrong number of rows or
                            entries, or a non-empty arrow is missing; the
                            message names the arrow and its expected shape
    """
    lines = list(_content_lines(text))
    mats: Dict[str, np.ndarray] = {}
    position = 0
    while position < len(lines):
        number, line = lines[position]
        tokens = _tokens(line)
        arrow_id, column = tokens[0]
        if len(tokens) != 1:
            raise SpecParseError(f"expected an arrow id alone on the line, got {len(tokens)} fields", number, column, path)
        if arrow_id not in quiver.arrow_map:
            raise SpecParseError(f"unknown arrow '{arrow_id}'", number, column, path)
        if arrow_id in mats:
            raise SpecParseError(f"arrow '{arrow_id}' is listed twice", number, column, path)
        rows, cols = dims.shape(quiver.arrow(arrow_id))
        expected = f"{rows}x{cols} ({rows} row(s) of {cols} entries)"
        position += 1

        matrix = np.zeros((rows, cols), dtype=np.complex128)
        if rows and cols:
            for row in range(rows):
                if position >= len(lines):
                    raise ShapeMismatchError(f"{path}: arrow '{arrow_id}' expects shape {expected}, file ends after {row} row(s)")
                row_number, row_line = lines[position]
                entries = _tokens(row_line)
                if len(entries) == 1 and entries[0][0] in quiver.arrow_map:
                    raise ShapeMismatchError(
                        f"{path}:{row_number}: arrow '{arrow_id}' expects shape {expected}, got {row} row(s)"
                    )
                if len(entries) != cols:
                    raise ShapeMismatchError(
                        f"{path}:{row_number}: arrow '{arrow_id}' expects shape {expected}, "
                        f"row {row + 1} has {len(entries)} entries"
                    )
                for col, (entry, entry_col) in enumerate(entries):
                    try:
                        matrix[row, col] = parse_complex(entry)
                    except ValueError as e:
                        raise SpecParseError(str(e), row_number, entry_col, path) from e
                position += 1
        mats[arrow_id] = matrix

    for arrow in quiver.arrows:
        if arrow.id not in mats:
            rows, cols = dims.shape(arrow)
            if rows and cols:
                raise ShapeMismatchError(f"{path}: arrow '{arrow.id}' is missing, expected shape {rows}x{cols}")
            mats[arrow.id] = np.zeros((rows, cols), dtype=np.complex128)
    return RepPoint(quiver, dims, {arrow.id: mats[arrow.id] for arrow in quiver.arrows})


def load_rep(path: PathLike, quiver: Quiver, dims: DimensionVector) -> RepPoint:
    return parse_rep_text(_read(path), quiver, dims, str(path))


def format_rep(rho: RepPoint) -> str:
    """Representation file text for ``rho``; arrows with empty matrices are omitted."""
    lines = []
    for arrow in rho.quiver.arrows:
        mat = rho.mats[arrow.id]
        if mat.size == 0:
            continue
        lines.append(arrow.id)
        lines.extend(" ".join(format_complex(z) for z in row) for row in mat)
    return "\n".join(lines) + "\n"
