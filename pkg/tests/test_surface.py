import pytest
from hypothesis import given, strategies as st

from linkfloer.errors import GenusTooSmall, ModelMismatch
from linkfloer.surface import (
    CurveClass,
    SurfaceModel,
    independence_check,
    intersection_number,
    standard_surface,
)

from strategies import curve_classes


def direct_sum_pairing(x, y):
    # sum over handles of a_i b'_i - b_i a'_i
    return sum(x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i] for i in range(len(x) // 2))


def test_basis_and_form():
    S = standard_surface(2)
    assert S.basis == ("A1", "B1", "A2", "B2")
    assert S.intersection_matrix == ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))
    assert intersection_number(S, S.generator("A1"), S.generator("B1")) == 1
    assert intersection_number(S, S.generator("B2"), S.generator("A2")) == -1
    assert intersection_number(S, S.generator("A1"), S.generator("B2")) == 0


@pytest.mark.parametrize("g", [0, -1])
def test_genus_too_small(g):
    with pytest.raises(GenusTooSmall):
        SurfaceModel(g)


def test_genus_must_be_int():
    with pytest.raises(TypeError):
        SurfaceModel(1.0)


def test_length_mismatch():
    S = standard_surface(1)
    with pytest.raises(ModelMismatch):
        intersection_number(S, CurveClass([1, 0, 0, 0]), CurveClass([1, 0]))


def test_trefoil_curves_meet_once():
    S = standard_surface(1)
    g1, g2, g3 = CurveClass([1, 0]), CurveClass([0, 1]), CurveClass([1, -1])
    assert [abs(intersection_number(S, a, b)) for a, b in [(g1, g2), (g1, g3), (g2, g3)]] == [1, 1, 1]


def test_primitivity():
    assert CurveClass([1, -1]).is_primitive()
    assert not CurveClass([2, 4]).is_primitive()
    assert not CurveClass([0, 0]).is_primitive()
    assert CurveClass([0, 0]).is_zero()
    assert CurveClass([3, 2]).could_be_embedded_loop()


def test_independence():
    S = standard_surface(1)
    assert independence_check(S, CurveClass([1, 0]), CurveClass([0, 1]))
    assert not independence_check(S, CurveClass([1, 0]), CurveClass([-2, 0]))


def test_curve_arithmetic():
    a, b = CurveClass([1, 2]), CurveClass([0, -1])
    assert a + b == CurveClass([1, 1])
    assert a - b == CurveClass([1, 3])
    assert 3 * b == CurveClass([0, -3])
    assert (-a).same_up_to_sign(a)


@given(st.integers(1, 3).flatmap(lambda g: st.tuples(st.just(g), curve_classes(g), curve_classes(g), curve_classes(g))))
def test_pairing_matches_direct_sum_oracle(data):
    g, x, y, z = data
    S = standard_surface(g)
    assert intersection_number(S, x, y) == direct_sum_pairing(tuple(x), tuple(y))
    assert intersection_number(S, x, y) == -intersection_number(S, y, x)
    assert intersection_number(S, x + z, y) == intersection_number(S, x, y) + intersection_number(S, z, y)
