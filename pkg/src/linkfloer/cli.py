"""Command-line front end.

Exit codes: 0 on success, 1 when the input spec is malformed or invalid,
2 on any other failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction

from .errors import SpecError
from .floer import Ambient, TorusPairConfig, hf_pair
from .maslov import BoundaryLabel, FramedDisc, maslov_index
from .monodromy import order, orbit_relations
from .novikov import FiltrationParam
from .report import classify, emit_report, hf_str, hf_to_dict, rational_str, try_hf
from .specfile import SpecFile, read_spec

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INTERNAL = 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1 or 3/2, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("lambda-star must be positive")
    return value


def _load(args) -> SpecFile:
    spec = read_spec(args.spec)
    changes = {}
    if getattr(args, "bound", None) is not None:
        changes["order_bound"] = args.bound
        changes["orbit_bound"] = args.bound
    if getattr(args, "lambda_star", None) is not None:
        changes["lambda_star"] = FiltrationParam(args.lambda_star)
    return dataclasses.replace(spec, **changes) if changes else spec


def _dump(obj, fmt: str, text: str) -> bytes:
    if fmt == "json":
        return (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode()
    return text.encode()


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> bytes:
    spec = _load(args)
    info = {
        "valid": True,
        "fiber_genus": spec.link.fiber_genus,
        "meridian_count": spec.link.meridian_count,
        "ambient": spec.ambient.value,
        "curves": [c.name for c in spec.curves],
    }
    text = (
        f"ok: genus {info['fiber_genus']}, {len(spec.curves)} curves "
        f"({', '.join(info['curves'])}), ambient {info['ambient']}\n"
    )
    return _dump(info, args.format, text)


def cmd_monodromy(args) -> bytes:
    spec = _load(args)
    M = spec.link.monodromy()
    k = order(M, spec.order_bound)
    bound = k if k is not None else spec.orbit_bound
    rels = {}
    for a in spec.curves:
        for b in spec.curves:
            rels[f"{a.name}->{b.name}"] = [list(r) for r in sorted(orbit_relations(M, a.curve, b.curve, bound))]
    out = {
        "matrix": [list(r) for r in M.matrix],
        "charpoly": list(M.charpoly()),
        "order": k,
        "order_bound": spec.order_bound,
        "orbit_relations": rels,
    }
    lines = [
        f"matrix   {out['matrix']}",
        f"charpoly {tuple(out['charpoly'])}",
        f"order    {k if k is not None else 'exceeds ' + str(spec.order_bound)}",
    ]
    for key, r in rels.items():
        lines.append(f"  {key}: " + (" ".join(f"({x},{s:+d})" for x, s in r) or "none"))
    return _dump(out, args.format, "\n".join(lines) + "\n")


def cmd_hf(args) -> bytes:
    spec = _load(args)
    S = spec.link.surface
    modes = [Ambient.INTERIOR] + ([Ambient.FIBER_SUM] if spec.ambient is Ambient.FIBER_SUM else [])
    out = {"lambda_star": rational_str(spec.lambda_star.lambda_star), "groups": []}
    lines = [f"lambda* = {out['lambda_star']}"]
    for mode in modes:
        data = spec.fiber_sum if mode is Ambient.FIBER_SUM else ()
        for a in spec.curves:
            for b in spec.curves:
                cfg = TorusPairConfig(S, a.curve, b.curve, spec.link, mode, data)
                parity = None
                if mode is Ambient.FIBER_SUM:
                    ms = [spec.maslov_for(c) for c in (a, b)]
                    parity = [m.certificate() if m is not None else None for m in ms]
                v = try_hf(hf_pair, cfg, parity, spec.lambda_star, spec.window)
                out["groups"].append({"ambient": mode.value, "pair": [a.name, b.name], "hf": hf_to_dict(v)})
                lines.append(f"{mode.value:10s} HF({a.name},{b.name}) = {hf_str(v)}")
    return _dump(out, args.format, "\n".join(lines) + "\n")


def cmd_maslov(args) -> bytes:
    if args.caps is not None:
        d = FramedDisc(tuple(args.caps), args.defect, BoundaryLabel.FIBER, degenerate=not args.caps)
        mu = maslov_index(d)
        return _dump({"caps": args.caps, "defect": args.defect, "maslov_index": mu}, args.format, f"{mu}\n")
    if args.spec is None:
        raise SystemExit("maslov: pass --spec or --caps")
    spec = _load(args)
    out = {}
    lines = []
    for c in spec.curves:
        m = spec.maslov_for(c)
        if m is None:
            out[c.name] = None
            lines.append(f"{c.name}: no disc data")
            continue
        cert = m.certificate()
        out[c.name] = cert.to_dict()
        lines.append(f"{c.name}: indices {cert.basis_indices}, c1 even {cert.c1_even}: {cert.verdict.value}")
    return _dump(out, args.format, "\n".join(lines) + "\n")


def cmd_classify(args) -> bytes:
    return emit_report(classify(_load(args)), args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkfloer", description="Isotopy classification of product Lagrangian tori."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec_required=True):
        p.add_argument("--spec", required=spec_required, help="input spec file (YAML)")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", help="write output here instead of stdout")
        return p

    common(sub.add_parser("validate", help="check a spec file")).set_defaults(fn=cmd_validate)

    p = common(sub.add_parser("monodromy", help="matrix, order and orbit relations"))
    p.add_argument("--bound", type=int, help="iteration bound for order and orbits")
    p.set_defaults(fn=cmd_monodromy)

    p = common(sub.add_parser("hf", help="Floer cohomology of every pair"))
    p.add_argument("--lambda-star", type=_rational)
    p.set_defaults(fn=cmd_hf)

    p = common(sub.add_parser("maslov", help="Maslov indices and parity certificates"), spec_required=False)
    p.add_argument("--caps", type=_int_list, help="cap framings, e.g. -1,-1,-1,-1")
    p.add_argument("--defect", type=int, default=0, help="framing defect")
    p.set_defaults(fn=cmd_maslov)

    p = common(sub.add_parser("classify", help="full isotopy report"))
    p.add_argument("--bound", type=int)
    p.add_argument("--lambda-star", type=_rational)
    p.set_defaults(fn=cmd_classify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "bound", None) is not None and args.bound < 1:
        print("error: --bound must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        data = args.fn(args)
    except SpecError as exc:
        for line in exc.format_issues():
            print(f"error: {line}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK
