"""Declarative input files.

A spec file is YAML restricted to plain mappings, sequences and scalars
(no anchors, aliases or tags, no duplicate keys), validated against
``data/spec.schema.json`` and then against the mathematical constraints
the schema cannot express. Every problem is reported with its field path
and, when known, its source line.
"""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

import jsonschema
import yaml

from .errors import LinkFloerError, ParseError, ValidationError
from .floer import DEFAULT_WINDOW, Ambient, FiberSumRecord
from .maslov import (
    C1_EVEN_JUSTIFICATION,
    BoundaryLabel,
    FramedDisc,
    ParityCertificate,
    parity_check,
)
from .monodromy import (
    DEFAULT_ORDER_BOUND,
    ExplicitMatrix,
    FiberedLinkSpec,
    HopfNegative,
    HopfPositive,
    TorusKnot2,
    Trefoil,
    TwistWord,
)
from .novikov import FiltrationParam
from .surface import CurveClass

SPEC_SCHEMA_VERSION = 1
DEFAULT_ORBIT_BOUND = 64


def load_schema(name: str) -> dict:
    text = resources.files("linkfloer").joinpath("data", name).read_text(encoding="utf-8")
    return json.loads(text)


@functools.lru_cache(maxsize=None)
def schema_validator(name: str) -> jsonschema.Draft202012Validator:
    return jsonschema.Draft202012Validator(load_schema(name))


@dataclass(frozen=True)
class MaslovData:
    fiber_disc: FramedDisc
    circle_disc: FramedDisc
    c1_even: bool
    c1_justification: str = ""

    def certificate(self) -> ParityCertificate:
        return parity_check(self.fiber_disc, self.circle_disc, self.c1_even, self.c1_justification)


@dataclass(frozen=True)
class NamedCurve:
    name: str
    curve: CurveClass
    maslov: Optional[MaslovData] = None


@dataclass(frozen=True)
class SpecFile:
    link: FiberedLinkSpec
    curves: tuple[NamedCurve, ...]
    ambient: Ambient
    fiber_sum: tuple[FiberSumRecord, ...]
    maslov: Optional[MaslovData]
    lambda_star: FiltrationParam
    order_bound: int
    orbit_bound: int
    window: tuple[int, int]
    raw: dict

    def maslov_for(self, c: NamedCurve) -> Optional[MaslovData]:
        return c.maslov if c.maslov is not None else self.maslov

    def without_maslov(self) -> "SpecFile":
        raw = dict(self.raw)
        raw.pop("maslov", None)
        raw["curves"] = [{k: v for k, v in c.items() if k != "maslov"} for c in raw["curves"]]
        return build_spec(raw)


# ---------------------------------------------------------------------------
# YAML layer


def _format_path(path) -> str:
    out = ""
    for p in path:
        if isinstance(p, int):
            out += f"[{p}]"
        else:
            out += ("." if out else "") + str(p)
    return out


def _index_lines(node, path=(), table=None) -> dict:
    table = {} if table is None else table
    table.setdefault(path, node.start_mark.line + 1)
    if isinstance(node, yaml.MappingNode):
        seen = set()
        for knode, vnode in node.value:
            key = knode.value
            if key in seen:
                raise ParseError([(_format_path(path + (key,)), knode.start_mark.line + 1, "duplicate key")])
            seen.add(key)
            table[path + (key,)] = knode.start_mark.line + 1
            _index_lines(vnode, path + (key,), table)
    elif isinstance(node, yaml.SequenceNode):
        for i, item in enumerate(node.value):
            _index_lines(item, path + (i,), table)
    return table


def _line_for(lines: dict, path) -> Optional[int]:
    path = tuple(path)
    while path not in lines and path:
        path = path[:-1]
    return lines.get(path)


def _load_yaml(text: str):
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError([("", None, f"not valid UTF-8: {exc}")]) from None
    if not text.strip():
        raise ParseError([("", 1, "empty spec file")])
    try:
        for tok in yaml.scan(text, Loader=yaml.SafeLoader):
            if isinstance(tok, (yaml.AnchorToken, yaml.AliasToken, yaml.TagToken)):
                raise ParseError(
                    [("", tok.start_mark.line + 1, "anchors, aliases and tags are not allowed")]
                )
        loader = yaml.SafeLoader(text)
        try:
            node = loader.get_single_node()
            data = loader.construct_document(node) if node is not None else None
        finally:
            loader.dispose()
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        line = mark.line + 1 if mark is not None else None
        raise ParseError([("", line, str(exc.problem or exc))]) from None
    except yaml.YAMLError as exc:
        raise ParseError([("", None, str(exc))]) from None
    if node is None:
        raise ParseError([("", 1, "empty spec file")])
    return data, _index_lines(node)


# ---------------------------------------------------------------------------
# building


def _factor(raw: dict):
    kind = raw["kind"]
    if kind == "trefoil":
        return Trefoil()
    if kind == "torus_knot2":
        return TorusKnot2(raw["n"])
    if kind in ("hopf_positive", "hopf_negative"):
        cls = HopfPositive if kind == "hopf_positive" else HopfNegative
        return cls(CurveClass(raw.get("twist_curve", [])))
    if kind == "explicit":
        return ExplicitMatrix(raw["matrix"])
    if kind == "twist_word":
        word = tuple((CurveClass(w["curve"]), w["sign"]) for w in raw["word"])
        return TwistWord(raw["genus"], word)
    raise AssertionError(kind)


def _disc(raw: dict, label: BoundaryLabel) -> FramedDisc:
    return FramedDisc(tuple(raw["caps"]), raw["defect"], label, raw.get("degenerate", False))


def _maslov(raw: Optional[dict]) -> Optional[MaslovData]:
    if raw is None:
        return None
    justification = raw.get("c1_justification", C1_EVEN_JUSTIFICATION if raw["c1_even"] else "")
    return MaslovData(
        _disc(raw["fiber_disc"], BoundaryLabel.FIBER),
        _disc(raw["circle_disc"], BoundaryLabel.CIRCLE),
        raw["c1_even"],
        justification,
    )


def build_spec(data: dict, lines: Optional[dict] = None) -> SpecFile:
    """Validate a decoded document and build the :class:`SpecFile`."""
    lines = lines or {}
    issues = []

    def issue(path, message):
        issues.append((_format_path(path), _line_for(lines, path), message))

    for err in sorted(schema_validator("spec.schema.json").iter_errors(data), key=lambda e: list(map(str, e.absolute_path))):
        issue(err.absolute_path, err.message)
    if issues:
        raise ValidationError(issues)

    factors = []
    for i, raw in enumerate(data["link"]["factors"]):
        try:
            factors.append(_factor(raw))
        except (LinkFloerError, ValueError) as exc:
            issue(("link", "factors", i), f"{type(exc).__name__}: {exc}")
    if issues:
        raise ValidationError(issues)
    link = FiberedLinkSpec(tuple(factors), data["link"]["meridian_count"])
    g = link.fiber_genus
    if g < 1:
        issue(
            ("link", "factors"),
            "total fiber genus is 0; the hypothesis that the link is nontrivially fibered "
            "(fiber genus >= 1) fails",
        )

    curves = []
    names = set()
    for i, raw in enumerate(data["curves"]):
        if raw["name"] in names:
            issue(("curves", i, "name"), f"duplicate curve name {raw['name']!r}")
        names.add(raw["name"])
        if len(raw["class"]) != 2 * g:
            issue(("curves", i, "class"), f"class has length {len(raw['class'])}, fiber needs {2 * g}")
        try:
            m = _maslov(raw.get("maslov"))
        except ValueError as exc:
            issue(("curves", i, "maslov"), str(exc))
            m = None
        curves.append(NamedCurve(raw["name"], CurveClass(raw["class"]), m))

    ambient_raw = data.get("ambient", {"mode": "interior"})
    ambient = Ambient(ambient_raw["mode"])
    records = ()
    if ambient is Ambient.FIBER_SUM:
        if "fiber_sum" not in ambient_raw:
            issue(("ambient",), "fiber_sum mode needs a fiber_sum list with one entry per meridian")
        else:
            records = tuple(
                FiberSumRecord(
                    r["complement_simply_connected"],
                    r["fiber_square_zero_symplectic_torus"],
                    r["meridian_disjoint_from_curves"],
                    r["vanishing_cycle_identification"],
                    r.get("summand", "E(1)"),
                )
                for r in ambient_raw["fiber_sum"]
            )
            if link.meridian_count < 1:
                issue(("link", "meridian_count"), "a fiber sum needs at least one meridian")
            if len(records) != link.meridian_count:
                issue(
                    ("ambient", "fiber_sum"),
                    f"{len(records)} records for {link.meridian_count} meridians",
                )
    elif "fiber_sum" in ambient_raw:
        issue(("ambient", "fiber_sum"), "fiber_sum records given but mode is interior")

    try:
        maslov = _maslov(data.get("maslov"))
    except ValueError as exc:
        issue(("maslov",), str(exc))
        maslov = None

    lam = Fraction(str(data.get("lambda_star", 1)))
    if lam <= 0:
        issue(("lambda_star",), "lambda_star must be positive")
        lam = Fraction(1)

    bounds = data.get("bounds", {})
    window = (bounds.get("pmax", DEFAULT_WINDOW[0]), bounds.get("qmax", DEFAULT_WINDOW[1]))
    if issues:
        raise ValidationError(issues)
    return SpecFile(
        link=link,
        curves=tuple(curves),
        ambient=ambient,
        fiber_sum=records,
        maslov=maslov,
        lambda_star=FiltrationParam(lam),
        order_bound=bounds.get("order", DEFAULT_ORDER_BOUND),
        orbit_bound=bounds.get("orbit", DEFAULT_ORBIT_BOUND),
        window=window,
        raw=data,
    )


def parse_spec(text) -> SpecFile:
    data, lines = _load_yaml(text)
    return build_spec(data, lines)


def read_spec(path) -> SpecFile:
    with open(path, "rb") as fh:
        return parse_spec(fh.read())
