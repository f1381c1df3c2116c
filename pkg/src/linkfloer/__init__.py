"""Lagrangian tori in link-surgery 4-manifolds.

Homological monodromy of fibered links, exact Novikov-ring arithmetic,
disc-obstruction certificates and Floer cohomology of product tori
``S^1 x gamma``, Maslov parity, and an isotopy classification report.
"""
from .errors import (
    AmbientMismatch,
    BasisNotSpanning,
    LinkFloerError,
    MaslovParityUnverified,
    ModelMismatch,
    NotSymplectic,
    ObstructionUndetermined,
    ParseError,
    SpecError,
    ValidationError,
)
from .floer import (
    Ambient,
    FiberSumRecord,
    ObstructionCertificate,
    TorusPairConfig,
    certificate_for,
    check_interior_discs,
    check_fiber_sum_discs,
    collapse,
    e2_page,
    hf_pair,
    hf_self,
)
from .maslov import FramedDisc, ParityCertificate, maslov_index, parity_check
from .monodromy import (
    FiberedLinkSpec,
    MonodromyMap,
    compose,
    connected_sum,
    dehn_twist,
    order,
    orbit_relations,
    torus_knot_monodromy,
    trefoil_monodromy,
    twist_word,
)
from .novikov import FiltrationParam, GradedModule, NovikovElement, euler_characteristic, module_iso
from .report import IsotopyReport, classify, emit_report, parse_report
from .specfile import SpecFile, parse_spec, read_spec
from .surface import CurveClass, SurfaceModel, intersection_number, standard_surface

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "BasisNotSpanning",
    "LinkFloerError",
    "MaslovParityUnverified",
    "ModelMismatch",
    "NotSymplectic",
    "ObstructionUndetermined",
    "ParseError",
    "SpecError",
    "ValidationError",
    "Ambient",
    "FiberSumRecord",
    "ObstructionCertificate",
    "TorusPairConfig",
    "certificate_for",
    "check_interior_discs",
    "check_fiber_sum_discs",
    "collapse",
    "e2_page",
    "hf_pair",
    "hf_self",
    "FramedDisc",
    "ParityCertificate",
    "maslov_index",
    "parity_check",
    "FiberedLinkSpec",
    "MonodromyMap",
    "compose",
    "connected_sum",
    "dehn_twist",
    "order",
    "orbit_relations",
    "torus_knot_monodromy",
    "trefoil_monodromy",
    "twist_word",
    "FiltrationParam",
    "GradedModule",
    "NovikovElement",
    "euler_characteristic",
    "module_iso",
    "IsotopyReport",
    "classify",
    "emit_report",
    "parse_report",
    "SpecFile",
    "parse_spec",
    "read_spec",
    "CurveClass",
    "SurfaceModel",
    "intersection_number",
    "standard_surface",
]
