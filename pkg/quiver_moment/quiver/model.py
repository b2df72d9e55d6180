"""
Quiver Data Model

Finite quivers with named vertices and arrows, dimension vectors, rational
weights and paths, plus ``validate`` which reports every invariant violation
as data. The types are deliberately permissive on construction (a parsed
file may contain duplicates or dangling arrows); operations that need valid
input call ``ensure_valid`` first.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple
import logging

from ..utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


class Arrow(NamedTuple):
    """An arrow ``id: src -> tgt``."""

    id: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Quiver:
    """
    A finite quiver (Q0, Q1, s, t).

    Vertices and arrows keep their declaration order; every deterministic
    tie-break in the package uses that order. Loops and parallel arrows are
    allowed.
    """

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()

    @classmethod
    def build(cls, vertices: Sequence[str], arrows: Sequence[Sequence[str]] = ()) -> "Quiver":
        """Build from plain sequences, e.g. ``Quiver.build("ab", [("x", "a", "b")])``."""
        return cls(tuple(vertices), tuple(Arrow(*arrow) for arrow in arrows))

    @cached_property
    def vertex_index(self) -> Dict[str, int]:
        """Dense index of each vertex (first declaration wins)."""
        index: Dict[str, int] = {}
        for position, vertex in enumerate(self.vertices):
            index.setdefault(vertex, position)
        return index

    @cached_property
    def arrow_map(self) -> Dict[str, Arrow]:
        arrows: Dict[str, Arrow] = {}
        for arrow in self.arrows:
            arrows.setdefault(arrow.id, arrow)
        return arrows

    def arrow(self, arrow_id: str) -> Arrow:
        return self.arrow_map[arrow_id]

    def incoming(self, vertex: str) -> List[Arrow]:
        """Arrows with target ``vertex``, in declaration order."""
        return [arrow for arrow in self.arrows if arrow.tgt == vertex]

    def outgoing(self, vertex: str) -> List[Arrow]:
        """Arrows with source ``vertex``, in declaration order."""
        return [arrow for arrow in self.arrows if arrow.src == vertex]

    def in_degrees(self) -> Dict[str, int]:
        degrees = {vertex: 0 for vertex in self.vertices}
        for arrow in self.arrows:
            degrees[arrow.tgt] = degrees.get(arrow.tgt, 0) + 1
        return degrees

    def without_arrows(self, arrow_ids: Sequence[str]) -> "Quiver":
        """The quiver on the same vertices with the given arrows deleted."""
        dropped = set(arrow_ids)
        return Quiver(self.vertices, tuple(a for a in self.arrows if a.id not in dropped))


@dataclass(frozen=True)
class DimensionVector:
    """The dimensions d_a of the vector spaces V_a."""

    dims: Mapping[str, int]

    def __getitem__(self, vertex: str) -> int:
        return self.dims[vertex]

    def total(self) -> int:
        return sum(self.dims.values())

    def shape(self, arrow: Arrow) -> Tuple[int, int]:
        """Matrix shape (d_t, d_s) of an arrow."""
        return (self.dims[arrow.tgt], self.dims[arrow.src])


@dataclass(frozen=True)
class Weight:
    """A rational weight theta = (theta_a)."""

    theta: Mapping[str, Fraction]

    def __getitem__(self, vertex: str) -> Fraction:
        return self.theta[vertex]

    @classmethod
    def zero(cls, quiver: Quiver) -> "Weight":
        return cls({vertex: Fraction(0) for vertex in quiver.vertices})


@dataclass(frozen=True)
class Path:
    """A path of length >= 1: arrow ids with t(arrow_k) = s(arrow_k+1)."""

    arrows: Tuple[str, ...]
    quiver: Optional[Quiver] = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.arrows)

    def vertices(self) -> List[str]:
        """Visited vertices a_0, a_1, ..., a_l."""
        if self.quiver is None:
            raise ValueError("Path has no quiver attached")
        first = self.quiver.arrow(self.arrows[0])
        visited = [first.src]
        for arrow_id in self.arrows:
            visited.append(self.quiver.arrow(arrow_id).tgt)
        return visited

    def is_compatible(self) -> bool:
        """Non-empty and consecutive arrows compose."""
        if not self.arrows or self.quiver is None:
            return False
        try:
            arrows = [self.quiver.arrow(arrow_id) for arrow_id in self.arrows]
        except KeyError:
            return False
        return all(arrows[k].tgt == arrows[k + 1].src for k in range(len(arrows) - 1))

    def is_cycle(self) -> bool:
        if not self.is_compatible():
            return False
        visited = self.vertices()
        return visited[0] == visited[-1]


def validate(quiver: Quiver, dims: DimensionVector, weight: Weight) -> List[str]:
    """
    Collect every invariant violation of a (quiver, dims, weight) triple.

    Violations are data, not failures: valid input yields an empty list and
    nothing is ever raised.

    Returns:
        Human-readable violations, each naming its location
    """
    violations: List[str] = []
    if not quiver.vertices:
        violations.append("quiver has no vertices")

    seen_vertices = set()
    for vertex in quiver.vertices:
        if vertex in seen_vertices:
            violations.append(f"vertex '{vertex}': duplicate vertex id")
        seen_vertices.add(vertex)

    seen_arrows = set()
    for arrow in quiver.arrows:
        if arrow.id in seen_arrows:
            violations.append(f"arrow '{arrow.id}': duplicate arrow id")
        seen_arrows.add(arrow.id)
        if arrow.id in seen_vertices:
            violations.append(f"arrow '{arrow.id}': id is also a vertex id")
        for role, vertex in (("source", arrow.src), ("target", arrow.tgt)):
            if vertex not in seen_vertices:
                violations.append(f"arrow '{arrow.id}': {role} vertex '{vertex}' is not declared")

    declared = set(quiver.vertices)
    for label, mapping in (("dimension vector", dims.dims), ("weight", weight.theta)):
        missing = [v for v in quiver.vertices if v not in mapping]
        extra = [v for v in mapping if v not in declared]
        for vertex in dict.fromkeys(missing):
            violations.append(f"{label}: no entry for vertex '{vertex}'")
        for vertex in extra:
            violations.append(f"{label}: entry for undeclared vertex '{vertex}'")

    for vertex, dim in dims.dims.items():
        if isinstance(dim, bool) or not isinstance(dim, int):
            violations.append(f"vertex '{vertex}': dimension {dim!r} is not an integer")
        elif dim < 0:
            violations.append(f"vertex '{vertex}': dimension {dim} is negative")
    if dims.dims and all(isinstance(d, int) and d == 0 for d in dims.dims.values()):
        violations.append("dimension vector is zero")

    for vertex, value in weight.theta.items():
        if not isinstance(value, (int, Fraction)) or isinstance(value, bool):
            violations.append(f"vertex '{vertex}': weight {value!r} is not rational")

    if violations:
        logger.debug(f"validate found {len(violations)} violation(s)")
    return violations


def ensure_valid(quiver: Quiver, dims: DimensionVector, weight: Optional[Weight] = None) -> None:
    """Raise InvalidInputError listing every violation, if there are any."""
    violations = validate(quiver, dims, weight if weight is not None else Weight.zero(quiver))
    if violations:
        raise InvalidInputError(violations)
