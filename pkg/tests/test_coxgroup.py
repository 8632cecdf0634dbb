import itertools
import math
import random

import pytest

from cosetlab.coxgroup import GroupSymbol, build_group, iter_bits
from cosetlab.errors import NotIdeal, NotParabolic, SizeCap, UnsupportedType

ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "B4": 384, "D4": 192, "G2": 12, "F4": 1152}
ROOTS = {"A3": 6, "B3": 9, "G2": 6, "D4": 12, "F4": 24, "B4": 16}


@pytest.mark.parametrize("sym,order", sorted(ORDERS.items()))
def test_orders(sym, order):
    g = build_group(sym)
    assert g.order == order == GroupSymbol.parse(sym).order
    assert len(set(g.elements)) == order


@pytest.mark.parametrize("sym,n", sorted(ROOTS.items()))
def test_positive_root_count(sym, n):
    assert build_group(sym).N == n


def test_parse_forms():
    assert GroupSymbol.parse("A(3)") == GroupSymbol.parse("a3") == GroupSymbol("A", 3)
    for bad in ["E6", "H3", "I2", "D3", "B1", "G3", "xyz"]:
        with pytest.raises(UnsupportedType):
            GroupSymbol.parse(bad)


def test_cap():
    with pytest.raises(SizeCap):
        build_group("F4", cap=100)


@pytest.mark.parametrize("sym", ["A3", "B3", "G2"])
def test_words_are_lexmin_reduced(sym):
    g = build_group(sym)
    for w in g.elements:
        assert len(w.word) == w.length
        assert g.element(w.word) == w
        assert bin(g.inversion_set(w)).count("1") == w.length
    # brute force: first reduced word in lex order by BFS over words
    n = g.rank
    for w in g.elements[:20]:
        for word in itertools.product(range(n), repeat=w.length):
            if g.element(word) == w:
                assert word == w.word
                break


@pytest.mark.parametrize("sym", ["A3", "B3", "G2", "D4"])
def test_group_axioms_and_sign(sym):
    g = build_group(sym)
    rng = random.Random(1)
    for _ in range(50):
        a, b, c = (rng.choice(g.elements) for _ in range(3))
        assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
        assert g.mul(a, g.inverse(a)) == g.identity
        assert g.sign(g.mul(a, b)) == g.sign(a) * g.sign(b)
    assert g.longest.length == g.N
    assert g.elements == sorted(g.elements, key=lambda e: (e.length, e.word))


@pytest.mark.parametrize("sym", ["A3", "B3", "G2"])
def test_descents_by_length(sym):
    g = build_group(sym)
    for w in g.elements:
        des = {s for s in range(g.rank) if g.mul(w, g.generators[s]).length < w.length}
        assert g.descents(w) == des
        assert g.ascents(w) == set(range(g.rank)) - des


def test_type_a_permutation():
    g = build_group("A3")
    perms = {g.permutation(w) for w in g.elements}
    assert perms == set(itertools.permutations(range(1, 5)))
    for w in g.elements:
        sigma = g.permutation(w)
        inv = sum(1 for i, j in itertools.combinations(range(4), 2) if sigma[i] > sigma[j])
        assert inv == w.length
    s1 = g.generators[0]
    assert g.permutation(s1) == (2, 1, 3, 4)


@pytest.mark.parametrize("sym", ["A3", "B3"])
def test_min_coset_representative_brute(sym):
    g = build_group(sym)
    for I in [(0,), (1,), (0, 2), (0, 1)]:
        sub = [w for w in g.elements if set(w.word) <= set(I)]
        for w in g.elements:
            coset = [g.mul(w, u) for u in sub]
            best = min(coset, key=lambda e: (e.length, e.word))
            assert g.min_coset_representative(w, I) == best


def test_not_parabolic():
    g = build_group("A2")
    # a single non-simple reflection together with a simple one generates all of A2
    bits = (1 << 0) | (1 << 2)
    assert not g.is_parabolic(bits)
    with pytest.raises(NotParabolic):
        g.min_coset_representative(g.identity, bits)


def test_weak_order():
    g = build_group("A2")
    s1, s2 = g.generators
    assert g.weak_leq(g.identity, g.longest)
    assert g.weak_leq(s1, g.mul(s1, s2)) and not g.weak_leq(s1, g.mul(s2, s1))
    # right weak order: u <= w iff inversion sets nest
    for u in g.elements:
        for w in g.elements:
            brute = any(
                g.mul(u, v) == w and u.length + v.length == w.length for v in g.elements
            )
            assert g.weak_leq(u, w) == brute
    with pytest.raises(NotIdeal):
        g.weak_order_linear_extension([g.longest])


@pytest.mark.parametrize("sym", ["A3", "B3", "G2"])
def test_conjugacy_classes(sym):
    g = build_group(sym)
    classes = g.conjugacy_classes
    assert sum(len(c) for c in classes) == g.order
    for cl in classes:
        w = g.elements[cl[0]]
        brute = sorted({g.conjugate(u, w).index for u in g.elements})
        assert brute == cl
    expected = {"A3": 5, "B3": 10, "G2": 6}[sym]
    assert len(classes) == expected


def test_reflections_are_involutions():
    g = build_group("B3")
    for j, t in enumerate(g.reflections):
        assert g.mul(t, t) == g.identity
        assert g.sign(t) == -1
        assert t.perm[j] == j + g.N


def test_iter_bits():
    assert list(iter_bits(0b10110)) == [1, 2, 4]
