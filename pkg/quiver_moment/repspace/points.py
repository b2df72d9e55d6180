"""
Matrix families over a quiver: points of the representation space, group
elements and Lie algebra elements.

Each family stores read-only complex128 copies of its matrices, keyed by
arrow id (RepPoint) or vertex id (GroupElement, LieElement), and checks keys
and shapes against the dimension vector on construction. Zero-dimensional
vertices are legal: their matrices are empty and contribute nothing to any
trace or norm.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple
import logging

import numpy as np

from ..quiver.model import DimensionVector, Quiver
from ..utils.errors import NotSkewHermitianError, NotUnitaryError, ShapeMismatchError, SingularElementError
from ..utils.settings import DEFAULT_SETTINGS, QuiverSettings

logger = logging.getLogger(__name__)


def _frozen(matrix, shape: Tuple[int, int], label: str) -> np.ndarray:
    array = np.array(matrix, dtype=np.complex128)
    if array.size == 0 and array.shape != shape and 0 in shape:
        array = np.zeros(shape, dtype=np.complex128)
    if array.shape != shape:
        raise ShapeMismatchError(
            f"{label}: expected shape {shape[0]}x{shape[1]}, got "
            f"{'x'.join(str(n) for n in array.shape) or 'scalar'}"
        )
    array.setflags(write=False)
    return array


def _check_keys(given: Iterable[str], expected: List[str], kind: str) -> None:
    given = list(given)
    missing = [key for key in expected if key not in given]
    extra = [key for key in given if key not in expected]
    if missing or extra:
        parts = []
        if missing:
            parts.append(f"missing {kind}(s) {', '.join(missing)}")
        if extra:
            parts.append(f"unknown {kind}(s) {', '.join(extra)}")
        raise ShapeMismatchError("; ".join(parts))


class _Family:
    """Shared arithmetic for keyed matrix families."""

    quiver: Quiver
    dims: DimensionVector

    def _items(self) -> Mapping[str, np.ndarray]:
        raise NotImplementedError

    def _like(self, matrices: Mapping[str, np.ndarray]):
        return type(self)(self.quiver, self.dims, matrices)

    def _check_compatible(self, other: "_Family") -> None:
        if type(other) is not type(self) or other.quiver != self.quiver or other.dims.dims != self.dims.dims:
            raise ShapeMismatchError(
                f"Cannot combine {type(self).__name__} and {type(other).__name__} "
                "over different quivers or dimension vectors"
            )

    def __add__(self, other):
        self._check_compatible(other)
        theirs = other._items()
        return self._like({key: mat + theirs[key] for key, mat in self._items().items()})

    def __sub__(self, other):
        self._check_compatible(other)
        theirs = other._items()
        return self._like({key: mat - theirs[key] for key, mat in self._items().items()})

    def __mul__(self, scalar: complex):
        return self._like({key: scalar * mat for key, mat in self._items().items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def frobenius_norm(self) -> float:
        return float(np.sqrt(sum(np.vdot(m, m).real for m in self._items().values())))

    def distance(self, other) -> float:
        """Largest componentwise Frobenius distance."""
        self._check_compatible(other)
        theirs = other._items()
        return max(
            (float(np.linalg.norm(mat - theirs[key])) for key, mat in self._items().items()),
            default=0.0,
        )

    def to_dict(self) -> Dict[str, List[List[float]]]:
        """Serialize as key -> row-major list of [re, im] pairs."""
        return {
            key: [[float(z.real), float(z.imag)] for z in mat.reshape(-1)]
            for key, mat in self._items().items()
        }


@dataclass(frozen=True, eq=False)
class RepPoint(_Family):
    """
    A point of the representation space: one d_t x d_s complex matrix per
    arrow. Tangent vectors use the same type, the space being linear.
    """

    quiver: Quiver
    dims: DimensionVector
    mats: Mapping[str, np.ndarray]

    def __post_init__(self):
        _check_keys(self.mats.keys(), [a.id for a in self.quiver.arrows], "arrow")
        frozen = {
            arrow.id: _frozen(self.mats[arrow.id], self.dims.shape(arrow), f"arrow '{arrow.id}'")
            for arrow in self.quiver.arrows
        }
        object.__setattr__(self, "mats", frozen)

    def _items(self):
        return self.mats

    def __getitem__(self, arrow_id: str) -> np.ndarray:
        return self.mats[arrow_id]

    @classmethod
    def zeros(cls, quiver: Quiver, dims: DimensionVector) -> "RepPoint":
        return cls(quiver, dims, {a.id: np.zeros(dims.shape(a)) for a in quiver.arrows})

    def norm_squared(self) -> float:
        """||rho||^2 = sum over arrows of the squared Frobenius norms.

        Summed in arrow declaration order, the same order ``inner`` uses, so
        ``inner(rho, rho).real == rho.norm_squared()`` exactly.
        """
        return complex(sum(np.vdot(m, m) for m in self.mats.values())).real

    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared()))


@dataclass(frozen=True, eq=False)
class LieElement(_Family):
    """
    An element of Lie(G): one d_a x d_a complex matrix per vertex.
    Skew-Hermitian families form Lie(K).
    """

    quiver: Quiver
    dims: DimensionVector
    comps: Mapping[str, np.ndarray]

    def __post_init__(self):
        _check_keys(self.comps.keys(), list(self.quiver.vertices), "vertex")
        frozen = {
            v: _frozen(self.comps[v], (self.dims[v], self.dims[v]), f"vertex '{v}'")
            for v in self.quiver.vertices
        }
        object.__setattr__(self, "comps", frozen)

    def _items(self):
        return self.comps

    def __getitem__(self, vertex: str) -> np.ndarray:
        return self.comps[vertex]

    @classmethod
    def zeros(cls, quiver: Quiver, dims: DimensionVector) -> "LieElement":
        return cls.scalar(quiver, dims, 0.0)

    @classmethod
    def scalar(cls, quiver: Quiver, dims: DimensionVector, c: complex) -> "LieElement":
        """The central element c*e."""
        return cls(quiver, dims, {v: c * np.eye(dims[v]) for v in quiver.vertices})

    def skew_defect(self, vertex: str) -> float:
        comp = self.comps[vertex]
        return float(np.linalg.norm(comp + comp.conj().T))

    def is_skew(self, settings: QuiverSettings = DEFAULT_SETTINGS) -> bool:
        return all(
            self.skew_defect(v) <= settings.skew_tol * (1.0 + np.linalg.norm(self.comps[v]))
            for v in self.quiver.vertices
        )

    def require_skew(self, settings: QuiverSettings = DEFAULT_SETTINGS) -> "LieElement":
        """
        Check the element lies in Lie(K) within tolerance and return its
        exactly skew-Hermitian part.

        Raises:
            NotSkewHermitianError: naming the first offending vertex
        """
        for vertex in self.quiver.vertices:
            comp = self.comps[vertex]
            defect = self.skew_defect(vertex)
            if defect > settings.skew_tol * (1.0 + np.linalg.norm(comp)):
                raise NotSkewHermitianError(
                    f"Component at vertex '{vertex}' is not skew-Hermitian "
                    f"(||x + x^H|| = {defect:.3e})"
                )
        return LieElement(
            self.quiver, self.dims,
            {v: (m - m.conj().T) / 2 for v, m in self.comps.items()},
        )

    def trace_sum(self) -> complex:
        """Sum over vertices of tr(comps_a)."""
        return complex(sum(np.trace(m) for m in self.comps.values()))


@dataclass(frozen=True, eq=False)
class GroupElement(_Family):
    """An element of G: one invertible d_a x d_a matrix per vertex."""

    quiver: Quiver
    dims: DimensionVector
    comps: Mapping[str, np.ndarray]

    def __post_init__(self):
        _check_keys(self.comps.keys(), list(self.quiver.vertices), "vertex")
        frozen = {
            v: _frozen(self.comps[v], (self.dims[v], self.dims[v]), f"vertex '{v}'")
            for v in self.quiver.vertices
        }
        object.__setattr__(self, "comps", frozen)

    def _items(self):
        return self.comps

    def __getitem__(self, vertex: str) -> np.ndarray:
        return self.comps[vertex]

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        """Group product (gh)_a = g_a h_a."""
        self._check_compatible(other)
        return GroupElement(self.quiver, self.dims, {v: g @ other.comps[v] for v, g in self.comps.items()})

    @classmethod
    def identity(cls, quiver: Quiver, dims: DimensionVector) -> "GroupElement":
        return cls.central(quiver, dims, 1.0)

    @classmethod
    def central(cls, quiver: Quiver, dims: DimensionVector, c: complex) -> "GroupElement":
        """The element c*e of the central subgroup H."""
        return cls(quiver, dims, {v: c * np.eye(dims[v]) for v in quiver.vertices})

    def require_invertible(self, settings: QuiverSettings = DEFAULT_SETTINGS) -> None:
        """
        Raises:
            SingularElementError: If a component's reciprocal condition number
                                  is below ``settings.rcond_min``
        """
        for vertex in self.quiver.vertices:
            comp = self.comps[vertex]
            if comp.size == 0:
                continue
            with np.errstate(all="ignore"):
                condition = np.linalg.cond(comp)
            rcond = 0.0 if not np.isfinite(condition) else 1.0 / condition
            if rcond < settings.rcond_min:
                raise SingularElementError(vertex, rcond)

    def require_unitary(self, settings: QuiverSettings = DEFAULT_SETTINGS) -> None:
        """
        Raises:
            NotUnitaryError: If some g_a^H g_a differs from the identity
        """
        for vertex in self.quiver.vertices:
            comp = self.comps[vertex]
            defect = float(np.linalg.norm(comp.conj().T @ comp - np.eye(comp.shape[0])))
            if defect > settings.unitary_tol * (1.0 + np.linalg.norm(comp)):
                raise NotUnitaryError(
                    f"Component at vertex '{vertex}' is not unitary (||g^H g - I|| = {defect:.3e})"
                )
