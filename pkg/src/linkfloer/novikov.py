"""Exact arithmetic in the universal Novikov ring.

Elements are finite sums ``sum a_i T^{lam_i} e^{n_i}`` with rational
coefficients ``a_i``, rational energies ``lam_i`` and integer ``n_i``.
``deg T^lam e^n = 2n``. The energy filtration ``F^lam`` keeps terms with
``lam_i >= lam``; fixing a step ``lam_star`` gives the integer filtration
``F^q = F^{q * lam_star}``.

Finite sums automatically satisfy the finiteness condition below every
energy level, so no completion is modelled.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .errors import DegreeOfZero, LevelOfZero, NotHomogeneous

Rational = Union[int, Fraction, str]


def _q(x: Rational) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction or a 'p/q' string")
    return Fraction(x)


@dataclass(frozen=True)
class NovikovElement:
    """Canonical term list: sorted by ``(lam, n)``, merged, no zero coefficients.

    Build elements with :func:`T`, :func:`e`, :func:`const` or
    :meth:`from_terms`; the ring operators keep outputs canonical.
    """

    terms: tuple[tuple[Fraction, Fraction, int], ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Rational, Rational, int]]) -> "NovikovElement":
        acc: dict[tuple[Fraction, int], Fraction] = {}
        for a, lam, n in terms:
            if not isinstance(n, int) or isinstance(n, bool):
                raise TypeError(f"e-exponent must be an int, got {n!r}")
            key = (_q(lam), n)
            acc[key] = acc.get(key, Fraction(0)) + _q(a)
        return cls(tuple((a, lam, n) for (lam, n), a in sorted(acc.items()) if a != 0))

    def canonical(self) -> "NovikovElement":
        return NovikovElement.from_terms(self.terms)

    def is_canonical(self) -> bool:
        keys = [(lam, n) for _, lam, n in self.terms]
        return (
            all(a != 0 for a, _, _ in self.terms)
            and keys == sorted(keys)
            and len(set(keys)) == len(keys)
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = _coerce(other)
        return NovikovElement.from_terms(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return NovikovElement(tuple((-a, lam, n) for a, lam, n in self.terms))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return NovikovElement.from_terms(
            (a * b, l1 + l2, n1 + n2)
            for a, l1, n1 in self.terms
            for b, l2, n2 in other.terms
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in general")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def min_energy(self) -> Fraction:
        if not self.terms:
            raise LevelOfZero("the zero element has no minimal energy")
        return self.terms[0][1]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a, lam, n in self.terms:
            parts.append(f"{a}*T^({lam})*e^({n})")
        return " + ".join(parts)


def _coerce(x) -> NovikovElement:
    if isinstance(x, NovikovElement):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return const(x)
    raise TypeError(f"cannot combine NovikovElement with {type(x).__name__}")


def const(a: Rational) -> NovikovElement:
    return NovikovElement.from_terms([(a, 0, 0)])


def T(lam: Rational, a: Rational = 1) -> NovikovElement:
    return NovikovElement.from_terms([(a, lam, 0)])


def e(n: int, a: Rational = 1) -> NovikovElement:
    return NovikovElement.from_terms([(a, 0, n)])


def monomial(a: Rational, lam: Rational, n: int) -> NovikovElement:
    return NovikovElement.from_terms([(a, lam, n)])


ZERO = NovikovElement()
ONE = NovikovElement(((Fraction(1), Fraction(0), 0),))


def add(x: NovikovElement, y: NovikovElement) -> NovikovElement:
    return x + y


def mul(x: NovikovElement, y: NovikovElement) -> NovikovElement:
    return x * y


def degree(x: NovikovElement) -> int:
    if x.is_zero():
        raise DegreeOfZero("zero is homogeneous of every degree")
    ns = {n for _, _, n in x.terms}
    if len(ns) > 1:
        raise NotHomogeneous(f"mixed e-exponents {sorted(ns)}")
    return 2 * ns.pop()


@dataclass(frozen=True)
class FiltrationParam:
    lambda_star: Fraction

    def __init__(self, lambda_star: Rational = 1):
        value = _q(lambda_star)
        if value <= 0:
            raise ValueError(f"lambda_star must be positive, got {value}")
        object.__setattr__(self, "lambda_star", value)


def filtration_level(x: NovikovElement, p: FiltrationParam) -> int:
    """Largest ``q`` with ``x`` in ``F^{q * lambda_star}``."""
    return math.floor(x.min_energy() / p.lambda_star)


def graded_piece(x: NovikovElement, q: int, p: FiltrationParam) -> NovikovElement:
    """Terms with energy in ``[q lam*, (q+1) lam*)``: the image of ``x`` in ``gr_q``."""
    lo = q * p.lambda_star
    hi = lo + p.lambda_star
    return NovikovElement(tuple(t for t in x.terms if lo <= t[1] < hi))


def in_filtration(x: NovikovElement, lam: Rational) -> bool:
    lam = _q(lam)
    return all(t[1] >= lam for t in x.terms)


def graded_band_rank(degree: int) -> int:
    """Rank of ``gr_q(Lambda^degree)`` as used on the E_2 page.

    One generator ``T^lam e^m`` per energy band in each even degree ``2m``;
    odd degrees are empty.
    """
    return 1 if degree % 2 == 0 else 0


# ---------------------------------------------------------------------------
# free graded modules

_KNOWN_GROUPS = {
    (1,): "H*(pt) (x) Lambda",
    (1, 1): "H*(S^1) (x) Lambda",
    (1, 2, 1): "H*(T^2) (x) Lambda",
}


@dataclass(frozen=True)
class GradedModule:
    """Free Lambda-module with ``ranks[k]`` generators in degree ``k``."""

    ranks: tuple[int, ...]
    provenance: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        ranks = [int(r) for r in self.ranks]
        if any(r < 0 for r in ranks):
            raise ValueError(f"ranks must be non-negative: {ranks}")
        while ranks and ranks[-1] == 0:
            ranks.pop()
        object.__setattr__(self, "ranks", tuple(ranks))
        object.__setattr__(self, "provenance", tuple(self.provenance))

    @property
    def total_rank(self) -> int:
        return sum(self.ranks)

    @property
    def label(self) -> str:
        known = _KNOWN_GROUPS.get(self.ranks)
        if known:
            return known
        return "Lambda^(" + ",".join(map(str, self.ranks)) + ")"

    def __str__(self):
        return f"{self.label} ranks=({','.join(map(str, self.ranks))})"


def module_iso(m1: GradedModule, m2: GradedModule) -> bool:
    return m1.ranks == m2.ranks


def euler_characteristic(m: GradedModule) -> int:
    return sum((-1) ** k * r for k, r in enumerate(m.ranks))
