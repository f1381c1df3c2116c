"""First homology of a closed fiber surface with its intersection pairing.

Basis order is ``(A_1, B_1, ..., A_g, B_g)`` and the pairing matrix is
block diagonal with blocks ``[[0, 1], [-1, 0]]``, so ``<A_i, B_i> = +1``.
Orientation of curves is never canonical downstream, so matching of curve
classes is always done up to a global sign.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from . import _intmat
from .errors import GenusTooSmall, ModelMismatch


@dataclass(frozen=True)
class SurfaceModel:
    genus: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or isinstance(self.genus, bool):
            raise TypeError("genus must be an int")
        if self.genus < 1:
            raise GenusTooSmall(
                f"fiber genus must be at least 1 (got {self.genus}); "
                "the link must be nontrivially fibered"
            )

    @classmethod
    def empty(cls) -> "SurfaceModel":
        """The genus-0 surface; neutral element for connected sums.

        Only reachable through this constructor. Nothing with a nontrivial
        Floer theory lives on it, and the disc-obstruction checks fail on it.
        """
        obj = object.__new__(cls)
        object.__setattr__(obj, "genus", 0)
        return obj

    @property
    def dim(self) -> int:
        return 2 * self.genus

    @property
    def basis(self) -> tuple[str, ...]:
        labels = []
        for i in range(1, self.genus + 1):
            labels += [f"A{i}", f"B{i}"]
        return tuple(labels)

    @cached_property
    def intersection_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.dim
        rows = [[0] * n for _ in range(n)]
        for i in range(self.genus):
            rows[2 * i][2 * i + 1] = 1
            rows[2 * i + 1][2 * i] = -1
        return _intmat.as_matrix(rows)

    def curve(self, coefficients: Iterable[int]) -> "CurveClass":
        c = CurveClass(coefficients)
        self.require(c)
        return c

    def generator(self, label: str) -> "CurveClass":
        """Basis class by label, e.g. ``"A1"`` or ``"B2"``."""
        idx = self.basis.index(label)
        return CurveClass(int(i == idx) for i in range(self.dim))

    def zero(self) -> "CurveClass":
        return CurveClass((0,) * self.dim)

    def require(self, *classes: "CurveClass") -> None:
        for c in classes:
            if len(c) != self.dim:
                raise ModelMismatch(
                    f"class of length {len(c)} does not live on a genus-{self.genus} surface"
                )


@dataclass(frozen=True)
class CurveClass:
    """Integer homology class, coordinates in the ``(A_i, B_i)`` basis."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]):
        coeffs = tuple(coefficients)
        for x in coeffs:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"curve coefficients must be ints, got {x!r}")
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __neg__(self) -> "CurveClass":
        return CurveClass(-x for x in self.coefficients)

    def __add__(self, other: "CurveClass") -> "CurveClass":
        if len(other) != len(self):
            raise ModelMismatch("cannot add classes of different dimension")
        return CurveClass(x + y for x, y in zip(self, other))

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        return self + (-other)

    def __rmul__(self, k: int) -> "CurveClass":
        return CurveClass(k * x for x in self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def is_primitive(self) -> bool:
        return _intmat.content(self.coefficients) == 1

    def could_be_embedded_loop(self) -> bool:
        """Primitive or zero: the classes a simple closed curve can carry."""
        return self.is_zero() or self.is_primitive()

    def same_up_to_sign(self, other: "CurveClass") -> bool:
        return self == other or self == -other

    def __repr__(self):
        return f"CurveClass({list(self.coefficients)})"


def standard_surface(g: int) -> SurfaceModel:
    return SurfaceModel(g)


def intersection_number(S: SurfaceModel, c0: CurveClass, c1: CurveClass) -> int:
    """Algebraic intersection ``c0^T J c1``."""
    S.require(c0, c1)
    Jc1 = _intmat.matvec(S.intersection_matrix, c1.coefficients)
    return sum(x * y for x, y in zip(c0.coefficients, Jc1))


def independence_check(S: SurfaceModel, c0: CurveClass, c1: CurveClass) -> bool:
    """True iff the two classes are linearly independent over Q."""
    S.require(c0, c1)
    return _intmat.rank_q([c0.coefficients, c1.coefficients]) == 2
