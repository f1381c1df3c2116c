import math

import pytest
import sympy
from hypothesis import given, strategies as st

from linkfloer import _intmat
from linkfloer.errors import GenusTooSmall, ModelMismatch, NotSymplectic
from linkfloer.monodromy import (
    ExplicitMatrix,
    FiberedLinkSpec,
    HopfNegative,
    HopfPositive,
    MonodromyMap,
    TorusKnot2,
    Trefoil,
    compose,
    connected_sum,
    dehn_twist,
    order,
    orbit_relations,
    torus_knot_monodromy,
    trefoil_monodromy,
    twist_word,
)
from linkfloer.surface import CurveClass, intersection_number, standard_surface

from strategies import curve_classes, twist_words

G1, G2, G3 = CurveClass([1, 0]), CurveClass([0, 1]), CurveClass([1, -1])

# exact orders of the T(2, 2n+1) homological monodromy, confirmed by
# sympy_order below before being written here
TORUS_KNOT_ORDERS = {1: 6, 2: 10, 3: 14, 4: 18}


def sympy_order(matrix, bound=100):
    M = sympy.Matrix(matrix)
    P = M
    for k in range(1, bound + 1):
        if P == sympy.eye(M.shape[0]):
            return k
        P = P * M
    return None


def test_trefoil_matrix_and_order():
    M = trefoil_monodromy()
    assert M.matrix == ((1, 1), (-1, 0))
    assert order(M, 12) == 6
    assert order(M, 5) is None
    assert M.charpoly() == (1, -1, 1)


def test_trefoil_orbits():
    M = trefoil_monodromy()
    assert orbit_relations(M, G1, G2, 6) == {(2, -1), (5, 1)}
    assert orbit_relations(M, G1, G3, 6) == {(1, 1), (4, -1)}
    assert orbit_relations(M, G1, G1, 6) == {(0, 1), (3, -1), (6, 1)}


def test_twist_on_torus():
    S = standard_surface(1)
    TA = dehn_twist(S, S.generator("A1"))
    TB = dehn_twist(S, S.generator("B1"))
    assert TA.matrix == ((1, -1), (0, 1))
    assert TB.matrix == ((1, 0), (1, 1))
    assert dehn_twist(S, S.generator("A1"), -1) == TA.inverse()
    prod = compose(TA, TB)
    assert prod.matrix == ((0, -1), (1, 1))
    assert order(prod) == 6
    assert prod.charpoly() == trefoil_monodromy().charpoly()


def test_twist_formula():
    # T_c(x) = x + <x, c> c on every basis vector
    S = standard_surface(2)
    c = CurveClass([1, 2, -1, 0])
    T = dehn_twist(S, c)
    for lab in S.basis:
        x = S.generator(lab)
        k = sum(a * b for a, b in zip(x, _intmat.matvec(S.intersection_matrix, tuple(c))))
        assert T.apply(x) == x + k * c


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_torus_knot_order_oracle(n):
    M = torus_knot_monodromy(n)
    assert sympy_order(M.matrix) == TORUS_KNOT_ORDERS[n]
    assert order(M) == TORUS_KNOT_ORDERS[n] == 2 * (2 * n + 1)
    assert M.power(2 * (2 * n + 1)).is_identity()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_torus_knot_charpoly_is_alternating(n):
    assert torus_knot_monodromy(n).charpoly() == tuple((-1) ** i for i in range(2 * n + 1))


def test_torus_knot_needs_positive_n():
    with pytest.raises(GenusTooSmall):
        torus_knot_monodromy(0)
    with pytest.raises(GenusTooSmall):
        TorusKnot2(0)


def test_not_symplectic():
    with pytest.raises(NotSymplectic):
        MonodromyMap(((2, 0), (0, 1)), standard_surface(1))
    with pytest.raises(NotSymplectic):
        ExplicitMatrix([[1, 1], [0, 2]])


def test_shape_mismatch():
    with pytest.raises(ModelMismatch):
        MonodromyMap(((1, 0), (0, 1)), standard_surface(2))
    with pytest.raises(ModelMismatch):
        compose(trefoil_monodromy(), torus_knot_monodromy(2))


def test_connected_sum_and_link_spec():
    link = FiberedLinkSpec((Trefoil(), TorusKnot2(2), HopfPositive()), meridian_count=3)
    assert link.fiber_genus == 3
    M = link.monodromy()
    assert M.genus == 3
    assert order(M) == math.lcm(6, 10)
    assert FiberedLinkSpec((HopfPositive(), HopfNegative())).fiber_genus == 0


def test_hopf_with_twist_curve():
    h = HopfNegative(CurveClass([1, 0]))
    assert h.monodromy() == dehn_twist(standard_surface(1), CurveClass([1, 0]), -1)


def test_negative_power_and_inverse():
    M = torus_knot_monodromy(2)
    assert compose(M, M.inverse()).is_identity()
    assert M.power(-3) == M.inverse().power(3)


def test_order_bound_validation():
    with pytest.raises(ValueError):
        order(trefoil_monodromy(), 0)


def test_infinite_order_stays_unbounded():
    S = standard_surface(1)
    assert order(dehn_twist(S, S.generator("A1")), 200) is None


@given(st.integers(1, 2).flatmap(lambda g: st.tuples(st.just(g), twist_words(g, 4), curve_classes(g), curve_classes(g))))
def test_twists_preserve_pairing(data):
    g, word, x, y = data
    S = standard_surface(g)
    M = twist_word(S, word)
    assert intersection_number(S, M.apply(x), M.apply(y)) == intersection_number(S, x, y)


@given(curve_classes(1), curve_classes(1))
def test_orbit_relations_are_witnessed(x, y):
    M = torus_knot_monodromy(1)
    rels = orbit_relations(M, x, y, 12)
    for k, s in rels:
        assert M.power(k).apply(x) == s * y
    # periodicity: relations repeat with the order
    assert {(k + 6, s) for k, s in rels if k + 6 <= 12} <= rels


@given(curve_classes(2))
def test_connected_sum_is_block_diagonal(c):
    M = connected_sum(trefoil_monodromy(), trefoil_monodromy())
    a, b = CurveClass(tuple(c)[:2]), CurveClass(tuple(c)[2:])
    T = trefoil_monodromy()
    assert tuple(M.apply(c)) == tuple(T.apply(a)) + tuple(T.apply(b))
