"""Failed disc-obstruction hypotheses never produce an HF group."""
import pytest

from linkfloer.errors import ObstructionUndetermined, ValidationError
from linkfloer.floer import Ambient, TorusPairConfig, certificate_for, hf_pair
from linkfloer.report import Undetermined, classify
from linkfloer.specfile import build_spec

from strategies import trefoil_raw


def test_flag_failure_leaves_interior_intact():
    raw = trefoil_raw()
    raw["ambient"]["fiber_sum"][1]["complement_simply_connected"] = False
    report = classify(build_spec(raw))
    p = report.pair("L1", "L2")
    assert p.hamiltonian_isotopic.kind == "No"
    assert p.symplectic_isotopy_fibersum.kind == "Inconclusive"
    assert p.symplectic_isotopy_fibersum.witness["failed_checks"] == ["site2.complement_simply_connected"]


def test_genus_zero_is_rejected_before_classification():
    raw = trefoil_raw("interior")
    raw["link"]["factors"] = [{"kind": "hopf_negative"}]
    raw["curves"] = [{"name": "a", "class": []}]
    with pytest.raises(ValidationError):
        build_spec(raw)


def test_certificate_failure_is_recorded_not_raised():
    spec = build_spec(trefoil_raw("interior"))
    cfg = TorusPairConfig.from_link(spec.link, [2, 0], [0, 1])
    cert = certificate_for(cfg)
    assert cert.conclusion.value == "Undetermined"
    assert cert.failed() == ["gamma0_primitive", "single_transverse_intersection"]
    with pytest.raises(ObstructionUndetermined) as info:
        hf_pair(cfg)
    assert info.value.certificate == cert


def test_non_transverse_pair_in_fiber_sum():
    raw = trefoil_raw()
    raw["curves"][2]["class"] = [3, 1]
    spec = build_spec(raw)
    p = classify(spec).pair("L2", "L3")
    assert isinstance(p.hf_pair, Undetermined)
    assert p.certificates["fiber_sum"]["conclusion"] == "Undetermined"
    assert p.symplectic_isotopy_fibersum.kind == "Inconclusive"
    cfg = TorusPairConfig.from_link(spec.link, [0, 1], [3, 1], Ambient.FIBER_SUM, spec.fiber_sum)
    assert "single_transverse_intersection" in certificate_for(cfg).failed()
