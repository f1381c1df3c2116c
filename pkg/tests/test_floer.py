import pytest
from hypothesis import given, strategies as st

from linkfloer.errors import (
    AmbientMismatch,
    EmptyInput,
    MaslovParityUnverified,
    ModelMismatch,
    NotCleanlyIntersecting,
    ObstructionUndetermined,
)
from linkfloer.floer import (
    Ambient,
    Conclusion,
    FiberSumRecord,
    TorusPairConfig,
    certificate_for,
    check_interior_discs,
    check_fiber_sum_discs,
    clean_intersection_betti,
    collapse,
    e2_page,
    hf_pair,
    hf_self,
)
from linkfloer.maslov import circle_disc, fiber_disc, parity_check
from linkfloer.monodromy import FiberedLinkSpec, Trefoil
from linkfloer.novikov import FiltrationParam

LINK = FiberedLinkSpec((Trefoil(),), meridian_count=2)
G1, G2, G3 = [1, 0], [0, 1], [1, -1]
EVEN = parity_check(fiber_disc(), circle_disc(), True)
ODD = parity_check(fiber_disc(3), circle_disc(), True)


def interior(a, b, link=LINK):
    return TorusPairConfig.from_link(link, a, b)


def fiber_sum(a, b, records=None, link=LINK):
    records = records if records is not None else [FiberSumRecord.elliptic()] * link.meridian_count
    return TorusPairConfig.from_link(link, a, b, Ambient.FIBER_SUM, records)


def brute_force_e2(betti, pmax, qmax):
    """Count generators x (x) T^lam e^m of total degree p with lam in band q.

    Each band of the graded Novikov ring holds one generator T^lam e^m per
    integer m, sitting in degree 2m.
    """
    out = {}
    for p in range(pmax + 1):
        for q in range(qmax + 1):
            count = 0
            for k, b in enumerate(betti):
                for _basis in range(b):
                    for m in range(-p - len(betti), p + len(betti)):
                        if k + 2 * m == p:
                            count += 1
            out[(p, q)] = count
    return out


def test_interior_hf_values():
    assert hf_self(interior(G1, G2)).ranks == (1, 2, 1)
    assert hf_pair(interior(G1, G2)).ranks == (1, 1)
    assert hf_pair(interior(G1, G3)).ranks == (1, 1)
    assert hf_pair(interior(G2, G3)).ranks == (1, 1)


def test_self_pair_routes_to_hf_self():
    assert hf_pair(interior(G1, G1)).ranks == (1, 2, 1)
    assert hf_pair(interior(G1, [-1, 0])).ranks == (1, 2, 1)


def test_fiber_sum_hf_needs_even_parity():
    cfg = fiber_sum(G1, G2)
    assert hf_pair(cfg, (EVEN, EVEN)).ranks == (1, 1)
    assert hf_self(cfg, 0, EVEN).ranks == (1, 2, 1)
    with pytest.raises(MaslovParityUnverified):
        hf_pair(cfg)
    with pytest.raises(MaslovParityUnverified):
        hf_pair(cfg, (EVEN, ODD))
    with pytest.raises(MaslovParityUnverified):
        hf_self(cfg, 1, None)


def test_certificate_contents():
    cert = check_interior_discs(interior(G1, G2))
    assert cert.passed and cert.conclusion is Conclusion.NO_DISCS
    assert [c.name for c in cert.checks] == [
        "fiber_genus_at_least_one",
        "gamma0_primitive",
        "gamma1_primitive",
        "single_transverse_intersection",
        "curves_independent",
    ]
    assert all(c.anchor for c in cert.checks)
    assert cert.notes
    d = cert.to_dict()
    assert d["scope"] == "interior" and d["conclusion"] == "NoNonconstantDiscs"


def test_fiber_sum_certificate_flags():
    bad = FiberSumRecord(True, True, False, True)
    cert = check_fiber_sum_discs(fiber_sum(G1, G2, [FiberSumRecord.elliptic(), bad]))
    assert not cert.passed
    assert cert.failed() == ["site2.meridian_disjoint_from_curves"]
    with pytest.raises(ObstructionUndetermined) as info:
        hf_pair(fiber_sum(G1, G2, [FiberSumRecord.elliptic(), bad]), (EVEN, EVEN))
    assert info.value.certificate.failed() == ["site2.meridian_disjoint_from_curves"]


def test_lemma2_rejects_interior():
    with pytest.raises(AmbientMismatch):
        check_fiber_sum_discs(interior(G1, G2))
    assert certificate_for(interior(G1, G2)).scope == "interior"


@pytest.mark.parametrize(
    "a, b, failed",
    [
        ([2, 0], [0, 1], "gamma0_primitive"),
        ([1, 0], [0, 0], "gamma1_primitive"),
        ([1, 0], [1, 2], "single_transverse_intersection"),
    ],
)
def test_failed_hypotheses_block_hf(a, b, failed):
    cfg = interior(a, b)
    cert = check_interior_discs(cfg)
    assert failed in cert.failed()
    with pytest.raises(ObstructionUndetermined):
        hf_pair(cfg)


def test_config_validation():
    with pytest.raises(ModelMismatch):
        TorusPairConfig.from_link(LINK, [1, 0, 0, 0], G2)
    with pytest.raises(ValueError):
        fiber_sum(G1, G2, [FiberSumRecord.elliptic()])


def test_clean_intersection():
    assert clean_intersection_betti(interior(G1, G1)) == (1, 2, 1)
    assert clean_intersection_betti(interior(G1, G3)) == (1, 1)
    with pytest.raises(NotCleanlyIntersecting):
        clean_intersection_betti(interior([1, 0], [1, 3]))


def test_e2_page_examples():
    page = e2_page((1, 2, 1))
    assert page.rank(0, 0) == 2
    assert page.rank(1, 0) == 2
    assert page.degree_multiplicities(3, 2) == (1, 2, 1)
    assert e2_page((1, 1)).rank(4, 1) == 1
    with pytest.raises(EmptyInput):
        e2_page(())


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.integers(0, 6), st.integers(0, 4))
def test_e2_matches_brute_force(betti, pmax, qmax):
    page = e2_page(betti, FiltrationParam(1), (pmax, qmax))
    assert page.entries == brute_force_e2(betti, pmax, qmax)


def test_collapse_refuses_failed_certificate():
    cert = check_interior_discs(interior([2, 0], G2))
    with pytest.raises(ObstructionUndetermined):
        collapse(e2_page((1, 1)), cert)
