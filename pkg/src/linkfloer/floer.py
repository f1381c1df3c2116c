"""Disc-obstruction certificates and Floer cohomology of product tori.

For a loop ``gamma`` on the fiber, ``L_gamma = S^1 x gamma`` is a Lagrangian
torus in ``S^1 x M_L``, and in the fiber sum ``X_L`` when ``gamma`` misses
the meridians. The geometric input that makes HF computable is a vanishing
statement for holomorphic discs. Here it is reduced to homological checks
on the fiber plus attested facts about the fiber-sum pieces, and recorded
as an :class:`ObstructionCertificate`. HF is only produced through a
passing certificate.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    AmbientMismatch,
    EmptyInput,
    MaslovParityUnverified,
    ModelMismatch,
    NotCleanlyIntersecting,
    ObstructionUndetermined,
)
from .maslov import ParityCertificate
from .monodromy import FiberedLinkSpec
from .novikov import FiltrationParam, GradedModule, graded_band_rank
from .surface import CurveClass, SurfaceModel, independence_check, intersection_number

DEFAULT_WINDOW = (8, 8)


class Ambient(str, enum.Enum):
    INTERIOR = "interior"
    FIBER_SUM = "fiber_sum"


@dataclass(frozen=True)
class FiberSumRecord:
    """Attested facts about the summand glued in along one meridian torus."""

    complement_simply_connected: bool
    fiber_square_zero_symplectic_torus: bool
    meridian_disjoint_from_curves: bool
    vanishing_cycle_identification: bool
    summand: str = "E(1)"

    FLAGS = (
        "complement_simply_connected",
        "fiber_square_zero_symplectic_torus",
        "meridian_disjoint_from_curves",
        "vanishing_cycle_identification",
    )

    @classmethod
    def elliptic(cls) -> "FiberSumRecord":
        """All flags attested for a rational elliptic surface summand."""
        return cls(True, True, True, True, "E(1)")


@dataclass(frozen=True)
class TorusPairConfig:
    surface: SurfaceModel
    gamma0: CurveClass
    gamma1: CurveClass
    link: FiberedLinkSpec
    ambient: Ambient = Ambient.INTERIOR
    fiber_sum_data: tuple[FiberSumRecord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ambient", Ambient(self.ambient))
        object.__setattr__(self, "fiber_sum_data", tuple(self.fiber_sum_data))
        self.surface.require(self.gamma0, self.gamma1)
        if self.link.fiber_genus != self.surface.genus:
            raise ModelMismatch(
                f"link fiber has genus {self.link.fiber_genus}, surface has {self.surface.genus}"
            )
        if self.ambient is Ambient.FIBER_SUM and len(self.fiber_sum_data) != self.link.meridian_count:
            raise ValueError(
                f"fiber sum needs one record per meridian: {self.link.meridian_count} expected, "
                f"{len(self.fiber_sum_data)} given"
            )

    @classmethod
    def from_link(cls, link, gamma0, gamma1, ambient=Ambient.INTERIOR, fiber_sum_data=()):
        S = link.surface
        g0 = gamma0 if isinstance(gamma0, CurveClass) else CurveClass(gamma0)
        g1 = gamma1 if isinstance(gamma1, CurveClass) else CurveClass(gamma1)
        return cls(S, g0, g1, link, ambient, fiber_sum_data)

    def single(self, which: int = 0) -> "TorusPairConfig":
        g = (self.gamma0, self.gamma1)[which]
        return TorusPairConfig(self.surface, g, g, self.link, self.ambient, self.fiber_sum_data)

    @property
    def is_self_pair(self) -> bool:
        return self.gamma0.same_up_to_sign(self.gamma1)


# ---------------------------------------------------------------------------
# certificates


class Conclusion(str, enum.Enum):
    NO_DISCS = "NoNonconstantDiscs"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    anchor: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "anchor": self.anchor, "detail": self.detail}


@dataclass(frozen=True)
class ObstructionCertificate:
    """Record of which disc-vanishing hypotheses hold.

    ``scope`` is ``"interior"`` (discs in ``S^1 x M_L``) or ``"fiber_sum"``
    (discs in ``X_L`` for almost complex structures close to a split one).
    ``target`` is ``"pair"`` for the pair ``(L0, L1)`` or ``"single"`` for
    one torus on its own.
    """

    scope: str
    target: str
    checks: tuple[Check, ...]
    notes: tuple[str, ...] = ()
    conclusion: Conclusion = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "checks", tuple(self.checks))
        ok = all(c.passed for c in self.checks)
        object.__setattr__(self, "conclusion", Conclusion.NO_DISCS if ok else Conclusion.UNDETERMINED)

    @property
    def passed(self) -> bool:
        return self.conclusion is Conclusion.NO_DISCS

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "scope": self.scope,
            "target": self.target,
            "conclusion": self.conclusion.value,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }


_GENUS_ANCHOR = (
    "closed fiber has genus >= 1, so pi_2(S^1 x M_L) = 0 and there are no holomorphic spheres"
)
_PRIMITIVE_ANCHOR = (
    "gamma is a nontrivial, non-torsion loop; pi_1 of the fiber injects, so pi_2(S^1 x M_L, L) = 0"
)
_TRANSVERSE_ANCHOR = "gamma0 and gamma1 meet transversely in exactly one point: |<g0,g1>| = 1"
_INDEPENDENT_ANCHOR = (
    "no nonzero multiples of gamma0, gamma1 are homologous, so the subgroups they generate "
    "meet trivially and every Floer strip has zero area"
)
_PAIR_NOTE = (
    "classes in pi_2(S^1 x M_L, L0 u L1) can still have holomorphic representatives "
    "(e.g. the fiber cut along both curves); they are not Floer strips and are not counted"
)
_FIBER_SUM_ANCHORS = {
    "complement_simply_connected": "pi_1(X_i - N(F_i)) = 0 for the summand",
    "fiber_square_zero_symplectic_torus": "F_i is an embedded symplectic torus of square zero",
    "meridian_disjoint_from_curves": "the meridian m_i is chosen away from gamma0 and gamma1",
    "vanishing_cycle_identification": "F_i is identified with S^1 x m_i through vanishing cycles",
}


def _single_checks(S: SurfaceModel, gamma: CurveClass, label: str) -> list[Check]:
    return [
        Check("fiber_genus_at_least_one", S.genus >= 1, _GENUS_ANCHOR, f"genus = {S.genus}"),
        Check(
            f"{label}_primitive",
            (not gamma.is_zero()) and gamma.is_primitive(),
            _PRIMITIVE_ANCHOR,
            f"{label} = {list(gamma)}",
        ),
    ]


def _lemma1_checks(config: TorusPairConfig, target: str) -> list[Check]:
    S = config.surface
    if target == "single":
        return _single_checks(S, config.gamma0, "gamma")
    checks = _single_checks(S, config.gamma0, "gamma0")
    checks.append(_single_checks(S, config.gamma1, "gamma1")[1])
    pairing = intersection_number(S, config.gamma0, config.gamma1)
    checks.append(
        Check("single_transverse_intersection", abs(pairing) == 1, _TRANSVERSE_ANCHOR, f"<g0,g1> = {pairing}")
    )
    checks.append(
        Check(
            "curves_independent",
            independence_check(S, config.gamma0, config.gamma1),
            _INDEPENDENT_ANCHOR,
        )
    )
    return checks


def check_interior_discs(config: TorusPairConfig, target: str = "pair") -> ObstructionCertificate:
    """Certificate that no nonconstant discs or Floer strips exist in ``S^1 x M_L``.

    Failures are recorded, never raised. With ``target="single"`` only
    ``gamma0`` is examined.
    """
    notes = (_PAIR_NOTE,) if target == "pair" else ()
    return ObstructionCertificate("interior", target, _lemma1_checks(config, target), notes)


def check_fiber_sum_discs(config: TorusPairConfig, target: str = "pair") -> ObstructionCertificate:
    """Certificate that discs in the fiber sum ``X_L`` are constant.

    Passes iff the interior checks pass and every summand record attests
    all of its flags.
    """
    if config.ambient is not Ambient.FIBER_SUM:
        raise AmbientMismatch("fiber-sum certificate requested for an interior-only configuration")
    checks = _lemma1_checks(config, target)
    checks.append(
        Check(
            "meridian_sites_present",
            config.link.meridian_count >= 1,
            "every link component contributes a meridian torus S^1 x m_i to sum along",
            f"meridian_count = {config.link.meridian_count}",
        )
    )
    for i, rec in enumerate(config.fiber_sum_data, start=1):
        for flag in FiberSumRecord.FLAGS:
            checks.append(
                Check(f"site{i}.{flag}", bool(getattr(rec, flag)), _FIBER_SUM_ANCHORS[flag], rec.summand)
            )
    notes = (_PAIR_NOTE,) if target == "pair" else ()
    return ObstructionCertificate("fiber_sum", target, checks, notes)


def certificate_for(config: TorusPairConfig, target: str = "pair") -> ObstructionCertificate:
    if config.ambient is Ambient.FIBER_SUM:
        return check_fiber_sum_discs(config, target)
    return check_interior_discs(config, target)


# ---------------------------------------------------------------------------
# spectral sequence


def clean_intersection_betti(config: TorusPairConfig) -> tuple[int, ...]:
    """Betti numbers of ``L0 n L1``: a torus for a self pair, a circle otherwise."""
    if config.is_self_pair:
        return (1, 2, 1)
    pairing = intersection_number(config.surface, config.gamma0, config.gamma1)
    if abs(pairing) != 1:
        raise NotCleanlyIntersecting(
            f"<g0,g1> = {pairing}; only single transverse intersections are modelled"
        )
    return (1, 1)


@dataclass(frozen=True)
class SpectralSequencePage:
    """Finite window of the E_2 page of the energy spectral sequence.

    ``components[(p, q)][k]`` is the contribution of ``H^k`` of the clean
    intersection; ``entries[(p, q)]`` is their sum.
    """

    components: dict
    source_betti: tuple[int, ...]
    lambda_star: FiltrationParam
    window: tuple[int, int]

    @property
    def entries(self) -> dict:
        return {pq: sum(parts) for pq, parts in self.components.items()}

    def rank(self, p: int, q: int) -> int:
        return sum(self.components[(p, q)])

    def degree_multiplicities(self, p0: int, q: int) -> tuple[int, ...]:
        """Per-``k`` contributions summed over the two columns ``p0, p0 + 1``.

        The internal degrees of Lambda are all even, so each ``H^k`` shows up
        in exactly one of two consecutive columns.
        """
        a = self.components[(p0, q)]
        b = self.components[(p0 + 1, q)]
        return tuple(x + y for x, y in zip(a, b))


def e2_page(
    betti: Sequence[int],
    p: Optional[FiltrationParam] = None,
    window: tuple[int, int] = DEFAULT_WINDOW,
) -> SpectralSequencePage:
    """``E_2^{p,q} = sum_k H^k (x) gr_q(Lambda^{p-k})`` on ``0 <= p <= pmax, 0 <= q <= qmax``."""
    betti = tuple(int(b) for b in betti)
    if not betti:
        raise EmptyInput("betti vector is empty")
    if any(b < 0 for b in betti):
        raise ValueError("betti numbers must be non-negative")
    p = p or FiltrationParam(1)
    pmax, qmax = window
    components = {}
    for P in range(pmax + 1):
        for Q in range(qmax + 1):
            components[(P, Q)] = tuple(b * graded_band_rank(P - k) for k, b in enumerate(betti))
    return SpectralSequencePage(components, betti, p, (pmax, qmax))


def collapse(page: SpectralSequencePage, cert: ObstructionCertificate) -> GradedModule:
    """Degenerate the page at E_2 when the certificate rules out all discs.

    Every disc contributing to a higher differential would carry positive
    area; the certificate says there are none below any energy threshold.
    """
    if not cert.passed:
        raise ObstructionUndetermined(cert)
    provenance = (
        f"E2 page from betti {list(page.source_betti)}, lambda* = {page.lambda_star.lambda_star}",
        f"collapse gated by {cert.scope}/{cert.target} certificate: "
        "no nonconstant discs, so local curves have area below lambda* and no higher differentials",
    )
    return GradedModule(page.source_betti, provenance)


def _parity_gate(config: TorusPairConfig, parity: Sequence[Optional[ParityCertificate]]) -> None:
    if config.ambient is not Ambient.FIBER_SUM:
        return
    for i, cert in enumerate(parity):
        if cert is None or not cert.is_even:
            raise MaslovParityUnverified(
                f"torus {i}: Maslov class not certified even; HF in the fiber sum is not invariant"
            )


def hf_self(
    config: TorusPairConfig,
    which: int = 0,
    parity: Optional[ParityCertificate] = None,
    lambda_star: Optional[FiltrationParam] = None,
    window: tuple[int, int] = DEFAULT_WINDOW,
) -> GradedModule:
    """``HF(L, L)`` for ``L = S^1 x gamma_which``; always the torus cohomology when defined."""
    single = config.single(which)
    cert = certificate_for(single, "single")
    if not cert.passed:
        raise ObstructionUndetermined(cert)
    _parity_gate(single, [parity])
    page = e2_page((1, 2, 1), lambda_star, window)
    return collapse(page, cert)


def hf_pair(
    config: TorusPairConfig,
    parity: Optional[Sequence[Optional[ParityCertificate]]] = None,
    lambda_star: Optional[FiltrationParam] = None,
    window: tuple[int, int] = DEFAULT_WINDOW,
) -> GradedModule:
    """``HF(L0, L1)``; routes to :func:`hf_self` when ``gamma1 = +-gamma0``.

    ``parity`` holds one certificate per torus and is required in the fiber
    sum.
    """
    parity = tuple(parity) if parity is not None else (None, None)
    if config.is_self_pair:
        return hf_self(config, 0, parity[0], lambda_star, window)
    cert = certificate_for(config, "pair")
    if not cert.passed:
        raise ObstructionUndetermined(cert)
    _parity_gate(config, parity)
    page = e2_page(clean_intersection_betti(config), lambda_star, window)
    return collapse(page, cert)
