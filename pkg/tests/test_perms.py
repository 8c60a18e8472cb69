import pytest

from sameorder.core import element_order_naive
from sameorder.errors import InvalidParameterError
from sameorder.perms import (
    Permutation,
    cex3_generators,
    dicyclic_generators,
    direct_product,
    family_group,
    frobenius_generators,
    perm_from_cycles,
    perm_identity,
    perm_order,
    permutation_group,
)


def test_perm_order_examples():
    assert perm_order(perm_identity(5)) == 1
    assert perm_order(perm_from_cycles([[0, 1, 2, 3, 4, 5, 6]], 7)) == 7
    assert perm_order(perm_from_cycles([[0, 1], [2, 3, 4]], 5)) == 6


def test_perm_order_matches_naive_on_s5(built):
    for g in built("S(5)").elements():
        assert perm_order(g) == element_order_naive(g)


def test_perm_composition_and_inverse():
    a = perm_from_cycles([[0, 1, 2]], 4)
    b = perm_from_cycles([[2, 3]], 4)
    assert a.op(a.inv()) == perm_identity(4)
    # op applies self first, then other
    assert a.op(b).images == (1, 3, 0, 2)


def test_perm_from_cycles_rejects_bad_input():
    with pytest.raises(InvalidParameterError):
        perm_from_cycles([[0, 0]], 3)
    with pytest.raises(InvalidParameterError):
        perm_from_cycles([[0, 1], [1, 2]], 3)
    with pytest.raises(InvalidParameterError):
        perm_from_cycles([[0, 5]], 3)


@pytest.mark.parametrize("expr,order", [
    ("C(1)", 1),
    ("C(7)", 7),
    ("C(12)", 12),
    ("D(3)", 6),
    ("D(7)", 14),
    ("Dic(2)", 8),
    ("Dic(5)", 20),
    ("S(3)", 6),
    ("S(5)", 120),
    ("A(4)", 12),
    ("A(5)", 60),
    ("A(6)", 360),
    ("F(7,3,2)", 21),
    ("F(5,4,2)", 20),
])
def test_family_closure_orders(built, expr, order):
    assert built(expr).order() == order


def test_frobenius_group_spectrum(built):
    g = built("F(7,3,2)")
    assert g.spectrum().counts == {1: 1, 3: 14, 7: 6}
    # fixed-point-free action: no element of the full product order
    assert 21 not in g.spectrum().counts


def test_frobenius_parameter_validation():
    with pytest.raises(InvalidParameterError, match="need 1"):
        frobenius_generators(7, 3, 3)
    with pytest.raises(InvalidParameterError):
        frobenius_generators(7, 3, 1)  # order of 1 is 1, not 3
    with pytest.raises(InvalidParameterError):
        frobenius_generators(8, 2, 4)  # gcd(4, 8) != 1
    with pytest.raises(InvalidParameterError):
        frobenius_generators(1, 2, 1)


def test_quaternion_group(built):
    g = built("Dic(2)")
    assert g.order() == 8
    assert g.spectrum().counts == {1: 1, 2: 1, 4: 6}
    assert g.center_order() == 2
    assert sorted(len(c) for c in g.conjugacy_classes()) == [1, 1, 2, 2, 2]


def test_dicyclic_presentation_relations():
    gens = dicyclic_generators(3)
    a, b = gens
    e = perm_identity(12)
    assert a.op(a).op(a).op(a).op(a).op(a) == e  # a^6
    assert b.op(b) == a.op(a).op(a)  # b^2 = a^3
    assert b.inv().op(a).op(b) == a.inv()  # conjugation inverts a


def test_alternating_class_sizes(built):
    sizes = sorted(len(c) for c in built("A(5)").conjugacy_classes())
    assert sizes == [1, 12, 12, 15, 20]


def test_direct_product_orders_and_degrees(built):
    q8 = built("Dic(2)")
    f21 = built("F(7,3,2)")
    g = direct_product(q8, f21)
    assert g.order() == 168
    assert g.identity.degree() == 8 + 7
    assert g.spectrum().counts == {
        1: 1, 2: 1, 3: 14, 4: 6, 6: 14, 7: 6, 12: 84, 14: 6, 28: 36,
    }


def test_direct_product_with_trivial_factor(built):
    a = built("S(3)")
    g = direct_product(a, built("C(1)"))
    assert g.order() == a.order()
    assert g.spectrum().counts == a.spectrum().counts


def test_direct_product_order_multiplicative(built):
    pairs = [("C(6)", "D(4)"), ("S(3)", "A(4)"), ("Dic(2)", "C(7)")]
    for left, right in pairs:
        a, b = built(left), built(right)
        assert direct_product(a, b).order() == a.order() * b.order()


def test_direct_product_restricts_to_left_factor(built):
    a = built("S(3)")
    b = built("C(4)")
    g = direct_product(a, b)
    deg = a.identity.degree()
    left_images = {tuple(x.images) for x in a.elements()}
    for x in g.elements():
        assert tuple(x.images[:deg]) in left_images


def test_cex3_structure(built):
    g = built("cex3")
    assert g.order() == 168
    assert g.spectrum().counts == {1: 1, 2: 7, 3: 56, 6: 56, 7: 6, 14: 42}
    assert g.alpha() == (1, 6, 7, 42, 56)
    assert g.is_solvable()
    assert len(cex3_generators()) >= 2


def test_permutation_group_rejects_mixed_degrees():
    gens = [perm_from_cycles([[0, 1]], 2), perm_from_cycles([[0, 1]], 3)]
    with pytest.raises(InvalidParameterError):
        permutation_group(gens)


def test_repr_uses_one_indexed_cycles():
    p = perm_from_cycles([[0, 1, 2], [3, 4]], 5)
    assert repr(p) == "(1 2 3)(4 5)"
    assert repr(perm_identity(3)) == "()"
