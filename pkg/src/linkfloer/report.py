"""Isotopy classification of the product tori named in a spec.

Every ordered pair of curves gets one :class:`PairEntry`. Verdicts are
evidential: a ``No`` always carries the Floer-theoretic witness that rules
the isotopy out, a ``YesViaMonodromy`` carries the orbit relations that
realise it, and anything else is ``Inconclusive`` or ``NoEvidence`` with a
reason. A failure on one pair is recorded on that pair and never stops
the report.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import (
    LinkFloerError,
    MaslovParityUnverified,
    ObstructionUndetermined,
    ValidationError,
)
from .floer import (
    Ambient,
    TorusPairConfig,
    certificate_for,
    hf_pair,
    hf_self,
)
from .monodromy import order, orbit_relations
from .novikov import GradedModule, module_iso
from .specfile import SpecFile, schema_validator
from .surface import intersection_number

REPORT_SCHEMA_VERSION = 1

# verdict vocabulary
NO = "No"
INCONCLUSIVE = "Inconclusive"
YES_VIA_MONODROMY = "YesViaMonodromy"
EVIDENCE_VIA_ORBIT = "EvidenceViaOrbit"
NO_EVIDENCE = "NoEvidence"

VERDICT_FIELDS = (
    "hamiltonian_isotopic",
    "symplectic_isotopy_interior",
    "lagrangian_isotopy_fibersum",
    "symplectic_isotopy_fibersum",
    "smooth_isotopy",
)


def rational_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Undetermined:
    """Stand-in for an HF group that could not be computed."""

    error: str
    reason: str
    failed_checks: tuple[str, ...] = ()

    @classmethod
    def from_exc(cls, exc: LinkFloerError) -> "Undetermined":
        failed = tuple(exc.certificate.failed()) if isinstance(exc, ObstructionUndetermined) else ()
        return cls(type(exc).__name__, str(exc), failed)


HFValue = Union[GradedModule, Undetermined]


def hf_to_dict(v: HFValue) -> dict:
    if isinstance(v, GradedModule):
        return {
            "kind": "module",
            "label": v.label,
            "ranks": list(v.ranks),
            "provenance": list(v.provenance),
        }
    return {
        "kind": "undetermined",
        "error": v.error,
        "reason": v.reason,
        "failed_checks": list(v.failed_checks),
    }


def hf_from_dict(d: dict) -> HFValue:
    if d["kind"] == "module":
        return GradedModule(tuple(d["ranks"]), tuple(d["provenance"]))
    return Undetermined(d["error"], d["reason"], tuple(d["failed_checks"]))


def hf_str(v: HFValue) -> str:
    if isinstance(v, GradedModule):
        return str(v)
    checks = f" [{', '.join(v.failed_checks)}]" if v.failed_checks else ""
    return f"undetermined ({v.error}){checks}"


@dataclass(frozen=True)
class Verdict:
    kind: str
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "witness": self.witness}

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        return cls(d["kind"], d["witness"])


def _relations_json(rels) -> list:
    return [[k, s] for k, s in sorted(rels)]


@dataclass(frozen=True)
class PairEntry:
    source: str
    target: str
    intersection_number: int
    hf_self_i: HFValue
    hf_pair: HFValue
    certificates: dict
    hamiltonian_isotopic: Verdict
    symplectic_isotopy_interior: Verdict
    lagrangian_isotopy_fibersum: Verdict
    symplectic_isotopy_fibersum: Verdict
    smooth_isotopy: Verdict

    def to_dict(self) -> dict:
        d = {
            "source": self.source,
            "target": self.target,
            "intersection_number": self.intersection_number,
            "hf_self_i": hf_to_dict(self.hf_self_i),
            "hf_pair": hf_to_dict(self.hf_pair),
            "certificates": self.certificates,
        }
        for name in VERDICT_FIELDS:
            d[name] = getattr(self, name).to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PairEntry":
        return cls(
            d["source"],
            d["target"],
            d["intersection_number"],
            hf_from_dict(d["hf_self_i"]),
            hf_from_dict(d["hf_pair"]),
            d["certificates"],
            **{name: Verdict.from_dict(d[name]) for name in VERDICT_FIELDS},
        )


@dataclass(frozen=True)
class IsotopyReport:
    link: dict
    monodromy: dict
    ambient: str
    lambda_star: str
    window: tuple[int, int]
    curves: tuple[dict, ...]
    pairs: tuple[PairEntry, ...]
    hypotheses: dict = field(default_factory=dict)
    schema_version: int = REPORT_SCHEMA_VERSION

    def pair(self, source: str, target: str) -> PairEntry:
        for p in self.pairs:
            if (p.source, p.target) == (source, target):
                return p
        raise KeyError((source, target))

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "link": self.link,
            "monodromy": self.monodromy,
            "ambient": self.ambient,
            "lambda_star": self.lambda_star,
            "window": list(self.window),
            "curves": list(self.curves),
            "pairs": [p.to_dict() for p in self.pairs],
            "hypotheses": self.hypotheses,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "IsotopyReport":
        return cls(
            link=d["link"],
            monodromy=d["monodromy"],
            ambient=d["ambient"],
            lambda_star=d["lambda_star"],
            window=tuple(d["window"]),
            curves=tuple(d["curves"]),
            pairs=tuple(PairEntry.from_dict(p) for p in d["pairs"]),
            hypotheses=d["hypotheses"],
            schema_version=d["schema_version"],
        )


# ---------------------------------------------------------------------------
# classification


def try_hf(fn, *args, **kw) -> HFValue:
    try:
        return fn(*args, **kw)
    except LinkFloerError as exc:
        return Undetermined.from_exc(exc)


def _hamiltonian(same: bool, hf_p: HFValue, hf_s: HFValue, source: str) -> Verdict:
    if same:
        return Verdict(INCONCLUSIVE, {"reason": "identical torus; HF(L, L) is compared with itself"})
    if isinstance(hf_p, GradedModule) and isinstance(hf_s, GradedModule):
        if not module_iso(hf_p, hf_s):
            return Verdict(
                NO,
                {
                    "hf_pair_ranks": list(hf_p.ranks),
                    "hf_self_ranks": list(hf_s.ranks),
                    "hf_self_of": source,
                    "argument": "HF(L0, L1) is invariant under Hamiltonian isotopy of L1 "
                    "and would equal HF(L0, L0)",
                },
            )
        return Verdict(INCONCLUSIVE, {"reason": "HF(L0, L1) and HF(L0, L0) agree"})
    bad = [v for v in (hf_p, hf_s) if isinstance(v, Undetermined)]
    return Verdict(INCONCLUSIVE, {"reason": "HF not computed: " + bad[0].reason})


def _fiber_sum_verdicts(spec: SpecFile, ci, cj, same, rels, mono_order):
    if spec.ambient is not Ambient.FIBER_SUM:
        reason = "ambient is interior only; no fiber sum specified"
        return None, Verdict(NO_EVIDENCE, {"reason": reason}), Verdict(INCONCLUSIVE, {"reason": reason})

    fs = TorusPairConfig(spec.link.surface, ci.curve, cj.curve, spec.link, Ambient.FIBER_SUM, spec.fiber_sum)
    cert = certificate_for(fs.single(0) if same else fs, "single" if same else "pair")

    if not rels:
        lag = Verdict(NO_EVIDENCE, {"reason": "no monodromy power maps one curve to the other"})
    elif mono_order is None:
        lag = Verdict(NO_EVIDENCE, {"reason": "monodromy order exceeds the bound"})
    elif not all(r.meridian_disjoint_from_curves for r in spec.fiber_sum):
        lag = Verdict(NO_EVIDENCE, {"reason": "meridians are not attested disjoint from the curves"})
    else:
        lag = Verdict(
            YES_VIA_MONODROMY,
            {
                "relations": _relations_json(rels),
                "monodromy_order": mono_order,
                "meridians_avoided": True,
            },
        )

    if same:
        return cert, lag, Verdict(INCONCLUSIVE, {"reason": "identical torus"})
    mi, mj = spec.maslov_for(ci), spec.maslov_for(cj)
    if mi is None or mj is None:
        return cert, lag, Verdict(
            INCONCLUSIVE, {"reason": "no Maslov disc data; parity of the Maslov class is unverified"}
        )
    try:
        parity = (mi.certificate(), mj.certificate())
        p_hf = hf_pair(fs, parity, spec.lambda_star, spec.window)
        s_hf = hf_self(fs, 0, parity[0], spec.lambda_star, spec.window)
    except (ObstructionUndetermined, MaslovParityUnverified) as exc:
        u = Undetermined.from_exc(exc)
        w = {"reason": f"{u.error}: {u.reason}"}
        if u.failed_checks:
            w["failed_checks"] = list(u.failed_checks)
        return cert, lag, Verdict(INCONCLUSIVE, w)
    except LinkFloerError as exc:
        return cert, lag, Verdict(INCONCLUSIVE, {"reason": f"{type(exc).__name__}: {exc}"})
    if module_iso(p_hf, s_hf):
        return cert, lag, Verdict(INCONCLUSIVE, {"reason": "HF(L0, L1) and HF(L0, L0) agree in X_L"})
    return cert, lag, Verdict(
        NO,
        {
            "parity": [parity[0].to_dict(), parity[1].to_dict()],
            "hf_pair_ranks": list(p_hf.ranks),
            "hf_self_ranks": list(s_hf.ranks),
            "argument": "X_L is simply connected, so symplectic isotopy is Hamiltonian; "
            "with even Maslov classes HF is an invariant and the groups differ",
        },
    )


def _pair_entry(spec: SpecFile, M, mono_order, orbit_bound, ci, cj) -> PairEntry:
    S = spec.link.surface
    interior = TorusPairConfig(S, ci.curve, cj.curve, spec.link, Ambient.INTERIOR)
    same = interior.is_self_pair
    cert = certificate_for(interior.single(0) if same else interior, "single" if same else "pair")
    certs = {"interior": cert.to_dict()}

    hf_s = try_hf(hf_self, interior, 0, None, spec.lambda_star, spec.window)
    hf_p = try_hf(hf_pair, interior, None, spec.lambda_star, spec.window)
    rels = orbit_relations(M, ci.curve, cj.curve, orbit_bound)

    if rels:
        interior_v = Verdict(
            YES_VIA_MONODROMY,
            {
                "relations": _relations_json(rels),
                "monodromy_order": mono_order,
                "argument": "moving the fiber once around the circle carries S^1 x gamma "
                "to S^1 x phi(gamma) through symplectic tori",
            },
        )
        smooth = Verdict(EVIDENCE_VIA_ORBIT, {"relations": _relations_json(rels)})
    else:
        interior_v = Verdict(NO_EVIDENCE, {"reason": f"no relation with k <= {orbit_bound}"})
        smooth = Verdict(NO_EVIDENCE, {"reason": f"no relation with k <= {orbit_bound}"})

    fs_cert, lag, symp_fs = _fiber_sum_verdicts(spec, ci, cj, same, rels, mono_order)
    if fs_cert is not None:
        certs["fiber_sum"] = fs_cert.to_dict()

    return PairEntry(
        source=ci.name,
        target=cj.name,
        intersection_number=intersection_number(S, ci.curve, cj.curve),
        hf_self_i=hf_s,
        hf_pair=hf_p,
        certificates=certs,
        hamiltonian_isotopic=_hamiltonian(same, hf_p, hf_s, ci.name),
        symplectic_isotopy_interior=interior_v,
        lagrangian_isotopy_fibersum=lag,
        symplectic_isotopy_fibersum=symp_fs,
        smooth_isotopy=smooth,
    )


def _hoist_anchors(pairs) -> dict:
    """Move each check's hypothesis statement into one shared table."""
    table = {}
    for p in pairs:
        for cert in p.certificates.values():
            for check in cert["checks"]:
                table[check["name"]] = check.pop("anchor")
    return table


def _link_echo(spec: SpecFile) -> dict:
    return {
        "factors": spec.raw["link"]["factors"],
        "meridian_count": spec.link.meridian_count,
        "fiber_genus": spec.link.fiber_genus,
    }


def classify(spec: SpecFile) -> IsotopyReport:
    """Run certificates, HF, orbit relations and Maslov parity for every ordered pair."""
    M = spec.link.monodromy()
    mono_order = order(M, spec.order_bound)
    orbit_bound = mono_order if mono_order is not None else spec.orbit_bound
    pairs = tuple(
        _pair_entry(spec, M, mono_order, orbit_bound, ci, cj) for ci in spec.curves for cj in spec.curves
    )
    hypotheses = _hoist_anchors(pairs)
    return IsotopyReport(
        link=_link_echo(spec),
        monodromy={
            "matrix": [list(r) for r in M.matrix],
            "charpoly": list(M.charpoly()),
            "order": mono_order,
            "order_bound": spec.order_bound,
            "orbit_bound": orbit_bound,
        },
        ambient=spec.ambient.value,
        lambda_star=rational_str(spec.lambda_star.lambda_star),
        window=spec.window,
        curves=tuple({"name": c.name, "class": list(c.curve)} for c in spec.curves),
        pairs=pairs,
        hypotheses=hypotheses,
    )


# ---------------------------------------------------------------------------
# output


def _witness_str(v: Verdict) -> str:
    w = v.witness
    if "relations" in w:
        return "relations " + " ".join(f"({k},{s:+d})" for k, s in w["relations"])
    if "hf_pair_ranks" in w:
        a = ",".join(map(str, w["hf_pair_ranks"]))
        b = ",".join(map(str, w["hf_self_ranks"]))
        extra = ""
        if "parity" in w:
            extra = "; Maslov " + ", ".join(p["verdict"] for p in w["parity"])
        return f"HF ranks ({a}) vs ({b}){extra}"
    return w.get("reason", "")


def render_text(r: IsotopyReport) -> str:
    m = r.monodromy
    kinds = ", ".join(f["kind"] for f in r.link["factors"])
    lines = [
        f"linkfloer isotopy report (schema {r.schema_version})",
        f"link: {kinds}; meridians {r.link['meridian_count']}; fiber genus {r.link['fiber_genus']}",
        f"monodromy: {m['matrix']}  order {m['order'] if m['order'] is not None else '>' + str(m['order_bound'])}"
        f"  charpoly {tuple(m['charpoly'])}",
        f"ambient: {r.ambient}  lambda* = {r.lambda_star}",
        "curves: " + ", ".join(f"{c['name']}={tuple(c['class'])}" for c in r.curves),
        "",
    ]
    labels = {
        "hamiltonian_isotopic": "Hamiltonian isotopic (S^1 x M_L)",
        "symplectic_isotopy_interior": "symplectic isotopy (S^1 x M_L)",
        "lagrangian_isotopy_fibersum": "Lagrangian isotopy (X_L)",
        "symplectic_isotopy_fibersum": "symplectic isotopy (X_L)",
        "smooth_isotopy": "smooth isotopy",
    }
    for p in r.pairs:
        lines.append(f"{p.source} -> {p.target}   <g0,g1> = {p.intersection_number}")
        lines.append(f"  HF({p.source},{p.source})".ljust(38) + hf_str(p.hf_self_i))
        lines.append(f"  HF({p.source},{p.target})".ljust(38) + hf_str(p.hf_pair))
        for name in VERDICT_FIELDS:
            v = getattr(p, name)
            lines.append(f"  {labels[name]}".ljust(38) + f"{v.kind}  [{_witness_str(v)}]")
        lines.append("")
    return "\n".join(lines)


def emit_report(r: IsotopyReport, format: str = "json") -> bytes:
    if format == "json":
        return (json.dumps(r.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode()
    if format == "text":
        return render_text(r).encode()
    raise ValueError(f"unknown format {format!r}")


def parse_report(text) -> IsotopyReport:
    """Read a JSON report back, validating it against the report schema."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError([("", exc.lineno, exc.msg)]) from None
    errs = sorted(schema_validator("report.schema.json").iter_errors(data), key=lambda e: list(map(str, e.absolute_path)))
    if errs:
        raise ValidationError(
            [("".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in e.absolute_path).lstrip("."), None, e.message) for e in errs]
        )
    return IsotopyReport.from_dict(data)
