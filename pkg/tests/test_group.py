import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import generated, power_order
from piclass.errors import CapExceeded, ParseError, UnknownName
from piclass.group import (
    Permutation,
    PermGroup,
    direct_product,
    element_order,
    enumerate_group,
    factor_embedding,
    named_group,
)
from piclass.structure import centre

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(n)).map(Permutation))


def test_permutation_validates():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_composition_applies_left_first():
    a = Permutation.from_cycles(3, [(0, 1)])
    b = Permutation.from_cycles(3, [(1, 2)])
    # 0 -a-> 1 -b-> 2
    assert (a * b)(0) == 2
    assert (b * a)(0) == 1


def test_from_cycles_and_cycles():
    x = Permutation.from_cycles(5, [(1, 4), (2, 3)])
    assert x.images == (0, 4, 3, 2, 1)
    assert x.cycles() == [(1, 4), (2, 3)]
    assert str(Permutation.identity(3)) == "()"
    with pytest.raises(ValueError):
        Permutation.from_cycles(3, [(0, 3)])


@given(perms)
def test_inverse_and_powers(x):
    e = Permutation.identity(x.degree)
    assert x * x.inverse() == e
    n = element_order(x)
    assert x**n == e
    assert x ** (-1) == x.inverse()
    assert x**3 == x * x * x


@given(perms)
def test_element_order_matches_repeated_multiplication(x):
    assert element_order(x) == power_order(x)


def test_element_order_examples():
    assert element_order(Permutation.identity(4)) == 1
    assert element_order(Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])) == 5
    assert element_order(Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])) == 6


def test_canonical_order_is_lexicographic():
    a, b = Permutation([0, 2, 1]), Permutation([1, 0, 2])
    assert a < b
    assert min([b, a]) == a


@pytest.mark.parametrize(
    "spec, order",
    [
        ("C(1)", 1), ("C(7)", 7), ("D(2)", 2), ("D(4)", 4), ("D(10)", 10), ("D(20)", 20),
        ("S(1)", 1), ("S(3)", 6), ("S(5)", 120), ("A(3)", 3), ("A(4)", 12), ("A(5)", 60),
        ("Q8", 8), ("SL(2,3)", 24), ("C(3)xD(10)", 30), ("C(5)xS(3)", 30),
        ("C(2)xC(2)xC(2)", 8), ("perm[5]((0 1 2 3 4); (1 4)(2 3))", 10),
        (" S( 3 ) x C(2) ", 12),
    ],
)
def test_named_group_orders(spec, order):
    assert named_group(spec).order == order


def test_sl23_matches_brute_force_closure():
    G = named_group("SL(2,3)")
    assert G.element_set == generated(G.generators, G.degree)
    assert G.degree == 8
    assert len(centre(G)) == 2


def test_c3xd10_centre():
    G = named_group("C(3)xD(10)")
    assert G.order == 30
    assert len(centre(G)) == 3


def test_dihedral_is_nonabelian_for_order_above_four():
    G = named_group("D(10)")
    a, b = G.generators
    assert a * b != b * a


def test_enumeration_is_breadth_first_in_generator_order():
    G = named_group("S(3)")
    elems = enumerate_group(G)
    t, c = G.generators
    assert elems[:3] == (G.identity, t, c)
    assert enumerate_group(G) is elems


def test_identity_only_group():
    G = PermGroup([], degree=3)
    assert G.elements == (Permutation.identity(3),)


def test_cap_exceeded():
    with pytest.raises(CapExceeded) as info:
        named_group("S(5)", cap=10).elements
    assert info.value.cap == 10
    with pytest.raises(CapExceeded):
        named_group("S(3)xS(3)", cap=20)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("PICLASS_CAP", "50")
    with pytest.raises(CapExceeded):
        named_group("S(5)").elements


@pytest.mark.parametrize("spec", ["S(3", "C()", "D(5)", "C(0)", "C(3)x", "S(3)y", "perm[3]((0 3))", "C(2,3)", ""])
def test_parse_errors(spec):
    with pytest.raises(ParseError):
        named_group(spec)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        named_group("C(3)xD(5)")
    assert info.value.position == 5


@pytest.mark.parametrize("spec", ["Z(3)", "SL(2,5)", "GL(2,3)"])
def test_unknown_names(spec):
    with pytest.raises(UnknownName):
        named_group(spec)


def test_direct_product_blocks():
    A, B = named_group("C(3)"), named_group("S(3)")
    G = direct_product(A, B)
    assert G.degree == 6 and G.order == 18
    EA, EB = factor_embedding(G, 0), factor_embedding(G, 1)
    assert len(EA) == 3 and len(EB) == 6
    assert all(x(i) == i for x in EA for i in range(3, 6))
    assert all(x(i) == i for x in EB for i in range(3))
    assert all(a * b == b * a for a in EA for b in EB)


def test_trivial_times_b_keeps_class_sizes():
    from piclass.structure import conjugacy_classes

    B = named_group("D(8)")
    G = direct_product(named_group("C(1)"), B)
    assert [c.size for c in conjugacy_classes(G)] == [c.size for c in conjugacy_classes(B)]


def test_factor_embedding_requires_product():
    with pytest.raises(ValueError):
        factor_embedding(named_group("S(3)"), 0)


CORPUS_SPECS = ["C(12)", "D(20)", "S(4)", "S(5)", "A(5)", "Q8", "SL(2,3)", "C(3)xD(10)", "S(3)xA(4)"]


@pytest.mark.parametrize("spec", CORPUS_SPECS)
def test_closure_is_a_group(spec):
    G = named_group(spec)
    rng = random.Random(0)
    elems = G.elements
    for _ in range(200):
        x, y = rng.choice(elems), rng.choice(elems)
        assert x * y.inverse() in G
    assert math.factorial(G.degree) % G.order == 0
    assert all(g in G for g in G.generators)
    assert all(G.order % element_order(x) == 0 for x in elems)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=3))
def test_random_groups_enumerate_to_closure(images):
    gens = [Permutation(p) for p in images]
    G = PermGroup(gens)
    assert G.element_set == generated(gens, 5)
    assert 120 % G.order == 0
