import itertools
import math

import pytest

from braidcovers import perm
from conftest import random_perm


def test_identity():
    assert perm.identity(1) == (0,)
    assert perm.identity(4) == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        perm.identity(0)


def test_from_images_round_trip():
    p = perm.from_images([2, 1, 4, 3])
    assert p == (1, 0, 3, 2)
    assert perm.to_images(p) == (2, 1, 4, 3)
    with pytest.raises(ValueError):
        perm.from_images([1, 1, 3])
    with pytest.raises(ValueError):
        perm.from_images([0, 1, 2])


def test_compose_is_left_to_right():
    # (1,2) then (2,3): 1 -> 2 -> 3, so the product is (1,3,2)
    t12 = perm.parse_cycles("(1,2)", 3)
    t23 = perm.parse_cycles("(2,3)", 3)
    assert perm.compose(t12, t23) == perm.parse_cycles("(1,3,2)", 3)
    assert perm.compose(t23, t12) == perm.parse_cycles("(1,2,3)", 3)
    with pytest.raises(ValueError):
        perm.compose(t12, perm.identity(4))


def test_conjugate_relabels_cycles():
    # conjugating (1,2) by (2,3) renames point 2 to 3
    t12 = perm.parse_cycles("(1,2)", 3)
    t23 = perm.parse_cycles("(2,3)", 3)
    assert perm.conjugate(t12, t23) == perm.parse_cycles("(1,3)", 3)
    c = perm.parse_cycles("(1,2,3)", 4)
    h = perm.parse_cycles("(3,4)", 4)
    assert perm.conjugate(c, h) == perm.parse_cycles("(1,2,4)", 4)


def test_group_laws_random(rng):
    # identity, inverses, associativity, conjugation as a right action,
    # anti-homomorphism of inversion
    for _ in range(10_000):
        n = rng.randint(1, 9)
        p = random_perm(rng, n)
        q = random_perm(rng, n)
        r = random_perm(rng, n)
        e = perm.identity(n)
        assert perm.compose(p, e) == p
        assert perm.compose(e, p) == p
        assert perm.compose(p, perm.inverse(p)) == e
        assert perm.compose(perm.inverse(p), p) == e
        assert perm.compose(perm.compose(p, q), r) == \
            perm.compose(p, perm.compose(q, r))
        assert perm.inverse(perm.compose(p, q)) == \
            perm.compose(perm.inverse(q), perm.inverse(p))
        assert perm.conjugate(p, q) == perm.compose(
            perm.inverse(q), perm.compose(p, q))
        assert perm.conjugate(perm.conjugate(p, q), r) == \
            perm.conjugate(p, perm.compose(q, r))
        assert perm.cycle_type(perm.conjugate(p, q)) == perm.cycle_type(p)


def test_power(rng):
    for _ in range(200):
        n = rng.randint(1, 8)
        p = random_perm(rng, n)
        k = rng.randint(-6, 6)
        direct = perm.identity(n)
        step = p if k >= 0 else perm.inverse(p)
        for _ in range(abs(k)):
            direct = perm.compose(direct, step)
        assert perm.power(p, k) == direct
    assert perm.power(perm.parse_cycles("(1,2,3)", 3), 3) == perm.identity(3)


def test_cycle_type_and_order():
    p = perm.parse_cycles("(1,2)(3,4,5)", 6)
    assert perm.cycle_type(p) == (3, 2, 1)
    assert perm.order_of(p) == 6
    assert perm.order_of(perm.identity(5)) == 1
    assert perm.cycle_type(perm.identity(3)) == (1, 1, 1)


def test_order_divides_group_order(rng):
    for _ in range(500):
        n = rng.randint(1, 8)
        p = random_perm(rng, n)
        k = perm.order_of(p)
        assert math.factorial(n) % k == 0
        assert perm.power(p, k) == perm.identity(n)
        # no smaller positive power is the identity
        for d in range(1, k):
            if k % d == 0:
                assert perm.power(p, d) != perm.identity(n)


def test_is_transposition():
    assert perm.is_transposition(perm.parse_cycles("(1,2)", 4))
    assert not perm.is_transposition(perm.identity(4))
    assert not perm.is_transposition(perm.parse_cycles("(1,2)(3,4)", 4))
    assert not perm.is_transposition(perm.parse_cycles("(1,2,3)", 4))


def test_transposition_constructor():
    assert perm.transposition(4, 1, 2) == perm.parse_cycles("(1,2)", 4)
    assert perm.transposition(4, 3, 4) == perm.parse_cycles("(3,4)", 4)
    with pytest.raises(ValueError):
        perm.transposition(4, 1, 1)
    with pytest.raises(ValueError):
        perm.transposition(4, 0, 2)
    with pytest.raises(ValueError):
        perm.transposition(4, 1, 5)


def test_parse_cycles():
    assert perm.parse_cycles("(1,2)(3,4,5)", 5) == (1, 0, 3, 4, 2)
    assert perm.parse_cycles("()", 3) == (0, 1, 2)
    assert perm.parse_cycles(" ( 1 , 2 ) ", 2) == (1, 0)
    assert perm.parse_cycles("(1,2)()", 3) == (1, 0, 2)
    for bad in ["", "(1,2", "1,2", "(1,2)x", "(1)", "(1,1)", "(1,2)(2,3)",
                "(0,1)", "(1,4)", "(a,b)"]:
        with pytest.raises(ValueError):
            perm.parse_cycles(bad, 3)


def test_format_cycles():
    assert perm.format_cycles(perm.identity(4)) == "()"
    assert perm.format_cycles((1, 0, 3, 4, 2)) == "(1,2)(3,4,5)"
    assert perm.format_cycles(perm.parse_cycles("(2,3)", 5)) == "(2,3)"


def test_parse_format_round_trip(rng):
    for _ in range(2000):
        n = rng.randint(1, 9)
        p = random_perm(rng, n)
        assert perm.parse_cycles(perm.format_cycles(p), n) == p


def test_all_permutations_lexicographic():
    got = list(perm.all_permutations(3))
    assert got == sorted(got)
    assert len(got) == 6
    assert len(list(perm.all_permutations(5))) == 120


def test_commutes_matches_definition(rng):
    for _ in range(2000):
        n = rng.randint(1, 8)
        p = random_perm(rng, n)
        q = random_perm(rng, n)
        assert perm.commutes(p, q) == (perm.compose(p, q) == perm.compose(q, p))


def test_disjoint_cycles_partition():
    p = perm.parse_cycles("(1,2)(4,5,6)", 7)
    cycles = perm.disjoint_cycles(p)
    assert cycles == [(0, 1), (2,), (3, 4, 5), (6,)]
    assert sorted(itertools.chain.from_iterable(cycles)) == list(range(7))
