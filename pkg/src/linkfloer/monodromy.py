"""Homological monodromy of fibered links.

Maps are integer matrices acting on column vectors of curve coordinates.
``compose(M1, M2)`` applies ``M2`` first. A positive Dehn twist along ``c``
acts on homology by the transvection ``x -> x + <x, c> c``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from . import _intmat
from .errors import GenusTooSmall, ModelMismatch, NotSymplectic
from .surface import CurveClass, SurfaceModel, standard_surface

DEFAULT_ORDER_BOUND = 4096

TREFOIL_MATRIX = ((1, 1), (-1, 0))


@dataclass(frozen=True)
class MonodromyMap:
    matrix: tuple[tuple[int, ...], ...]
    surface: SurfaceModel

    def __post_init__(self):
        m = _intmat.as_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        n = self.surface.dim
        if _intmat.shape(m) != (n, n) and not (n == 0 and m == ()):
            raise ModelMismatch(
                f"matrix of shape {_intmat.shape(m)} on a genus-{self.surface.genus} surface"
            )
        J = self.surface.intersection_matrix
        if _intmat.matmul(_intmat.matmul(_intmat.transpose(m), J), m) != J:
            raise NotSymplectic(f"matrix {m} does not preserve the intersection form")

    @classmethod
    def identity(cls, surface: SurfaceModel) -> "MonodromyMap":
        return cls(_intmat.identity(surface.dim), surface)

    @property
    def genus(self) -> int:
        return self.surface.genus

    def apply(self, c: CurveClass) -> CurveClass:
        self.surface.require(c)
        return CurveClass(_intmat.matvec(self.matrix, c.coefficients))

    def power(self, k: int) -> "MonodromyMap":
        if k < 0:
            return self.inverse().power(-k)
        return MonodromyMap(_intmat.matpow(self.matrix, k), self.surface)

    def inverse(self) -> "MonodromyMap":
        # M^T J M = J  =>  M^-1 = -J M^T J
        J = self.surface.intersection_matrix
        inv = _intmat.scale(_intmat.matmul(_intmat.matmul(J, _intmat.transpose(self.matrix)), J), -1)
        return MonodromyMap(inv, self.surface)

    def det(self) -> int:
        return _intmat.det(self.matrix)

    def charpoly(self) -> tuple[int, ...]:
        """Coefficients of ``det(t I - M)``, leading first."""
        return _intmat.charpoly(self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == _intmat.identity(self.surface.dim)

    def __matmul__(self, other: "MonodromyMap") -> "MonodromyMap":
        return compose(self, other)


def dehn_twist(S: SurfaceModel, c: CurveClass, sign: int = 1) -> MonodromyMap:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    S.require(c)
    J = S.intersection_matrix
    # column j is the image of the j-th basis vector e_j: e_j + sign <e_j, c> c
    Jc = _intmat.matvec(J, c.coefficients)
    n = S.dim
    rows = [[int(i == j) + sign * Jc[j] * c.coefficients[i] for j in range(n)] for i in range(n)]
    return MonodromyMap(rows, S)


def compose(M1: MonodromyMap, M2: MonodromyMap) -> MonodromyMap:
    if M1.surface != M2.surface:
        raise ModelMismatch("cannot compose maps on different surfaces")
    return MonodromyMap(_intmat.matmul(M1.matrix, M2.matrix), M1.surface)


def twist_word(S: SurfaceModel, word: Iterable[tuple[CurveClass, int]]) -> MonodromyMap:
    """Product ``T_{c_1}^{s_1} ... T_{c_k}^{s_k}``; the last twist acts first."""
    M = MonodromyMap.identity(S)
    for c, s in word:
        M = compose(M, dehn_twist(S, c, s))
    return M


def trefoil_monodromy() -> MonodromyMap:
    return MonodromyMap(TREFOIL_MATRIX, standard_surface(1))


def torus_knot_chain(n: int) -> list[CurveClass]:
    """Chain ``c_1..c_2n`` with ``c_{2i-1} = A_i`` and ``c_{2i} = B_i - B_{i+1}``."""
    S = standard_surface(n)
    chain = []
    for i in range(1, n + 1):
        chain.append(S.generator(f"A{i}"))
        b = S.generator(f"B{i}")
        if i < n:
            b = b - S.generator(f"B{i + 1}")
        chain.append(b)
    return chain


def torus_knot_monodromy(n: int) -> MonodromyMap:
    """Homological monodromy of T(2, 2n+1) as a product of positive chain twists."""
    if n < 1:
        raise GenusTooSmall(f"T(2,2n+1) needs n >= 1 (got {n})")
    S = standard_surface(n)
    return twist_word(S, ((c, 1) for c in torus_knot_chain(n)))


def connected_sum(M1: MonodromyMap, M2: MonodromyMap) -> MonodromyMap:
    g = M1.genus + M2.genus
    S = standard_surface(g) if g else SurfaceModel.empty()
    return MonodromyMap(_intmat.block_diag(M1.matrix, M2.matrix), S)


def empty_monodromy() -> MonodromyMap:
    return MonodromyMap.identity(SurfaceModel.empty())


def order(M: MonodromyMap, bound: int = DEFAULT_ORDER_BOUND) -> Optional[int]:
    """Smallest ``k <= bound`` with ``M^k = I``; ``None`` if it exceeds the bound."""
    if bound < 1:
        raise ValueError("bound must be positive")
    ident = _intmat.identity(M.surface.dim)
    P = M.matrix
    for k in range(1, bound + 1):
        if P == ident:
            return k
        P = _intmat.matmul(P, M.matrix)
    return None


def orbit_relations(
    M: MonodromyMap, c0: CurveClass, c1: CurveClass, bound: int
) -> frozenset[tuple[int, int]]:
    """All ``(k, sign)`` with ``0 <= k <= bound`` and ``M^k c0 = sign * c1``."""
    M.surface.require(c0, c1)
    out = set()
    x = c0
    neg = -c1
    for k in range(bound + 1):
        if x == c1:
            out.add((k, 1))
        if x == neg:
            out.add((k, -1))
        x = M.apply(x)
    return frozenset(out)


# ---------------------------------------------------------------------------
# link factors


@dataclass(frozen=True)
class Trefoil:
    genus = 1

    def monodromy(self) -> MonodromyMap:
        return trefoil_monodromy()


@dataclass(frozen=True)
class TorusKnot2:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise GenusTooSmall(f"T(2,2n+1) factor needs n >= 1 (got {self.n})")

    @property
    def genus(self) -> int:
        return self.n

    def monodromy(self) -> MonodromyMap:
        return torus_knot_monodromy(self.n)


@dataclass(frozen=True)
class _Hopf:
    # The default zero class on the genus-0 surface: the core of a Hopf band
    # is usually null-homologous once the fiber is capped off, so the
    # homological action is trivial unless a class is supplied.
    twist_curve: CurveClass = field(default_factory=lambda: CurveClass(()))
    sign = 1

    def __post_init__(self):
        if len(self.twist_curve) % 2:
            raise ModelMismatch("twist curve must have even length 2g")

    @property
    def genus(self) -> int:
        return len(self.twist_curve) // 2

    def monodromy(self) -> MonodromyMap:
        if self.genus == 0:
            return empty_monodromy()
        return dehn_twist(standard_surface(self.genus), self.twist_curve, self.sign)


@dataclass(frozen=True)
class HopfPositive(_Hopf):
    sign = 1


@dataclass(frozen=True)
class HopfNegative(_Hopf):
    sign = -1


@dataclass(frozen=True)
class ExplicitMatrix:
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", _intmat.as_matrix(self.matrix))
        self.monodromy()  # validates shape and symplecticity

    @property
    def genus(self) -> int:
        return len(self.matrix) // 2

    def monodromy(self) -> MonodromyMap:
        S = standard_surface(self.genus) if self.matrix else SurfaceModel.empty()
        return MonodromyMap(self.matrix, S)


@dataclass(frozen=True)
class TwistWord:
    genus: int
    word: tuple[tuple[CurveClass, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple((c, int(s)) for c, s in self.word))
        S = standard_surface(self.genus)
        for c, s in self.word:
            S.require(c)
            if s not in (1, -1):
                raise ValueError("twist signs must be +1 or -1")

    def monodromy(self) -> MonodromyMap:
        return twist_word(standard_surface(self.genus), self.word)


Factor = Union[Trefoil, TorusKnot2, HopfPositive, HopfNegative, ExplicitMatrix, TwistWord]


@dataclass(frozen=True)
class FiberedLinkSpec:
    """Combinatorial shadow of a fibered link after zero surgery.

    The closed fiber is the connected sum of the factor fibers.
    ``meridian_count`` is the number of link components, each of which
    supplies a meridian and so a fiber-sum site. Components that are
    meridians of other components add sites but no genus.
    """

    factors: tuple
    meridian_count: int = 1

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.meridian_count < 0:
            raise ValueError("meridian_count must be non-negative")

    @property
    def fiber_genus(self) -> int:
        return sum(f.genus for f in self.factors)

    @property
    def surface(self) -> SurfaceModel:
        g = self.fiber_genus
        return standard_surface(g) if g else SurfaceModel.empty()

    def monodromy(self) -> MonodromyMap:
        M = empty_monodromy()
        for f in self.factors:
            M = connected_sum(M, f.monodromy())
        return M

