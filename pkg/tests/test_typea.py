import itertools
from math import factorial

import pytest

from cosetlab.burnside import ring
from cosetlab.coxgroup import build_group
from cosetlab.cosetposet import build_coset_poset, flag_h
from cosetlab.errors import SizeCap
from cosetlab.symfunc import SymFunc
from cosetlab.typea import (
    bessel_dims,
    count_below_descent_set,
    descent_pair_count,
    descent_set,
    flat_partition,
    frobenius,
    partition_mobius,
    permutation_ubp,
    refines,
    set_partitions,
    ubp_leq,
    ubp_poset,
    xi_series,
    xi_symfunc,
)

D = [1, 1, 4, 33, 456, 9460]
BELL = [1, 1, 2, 5, 15, 52, 203]


def lattice_mobius_to_top(n):
    """mu(pi, 1) in the partition lattice by the defining recursion."""
    parts = list(set_partitions(n))
    parts.sort(key=len)  # coarsest first
    mu = {}
    for pi in parts:
        if len(pi) == 1:
            mu[pi] = 1
        else:
            mu[pi] = -sum(mu[s] for s in parts if s != pi and refines(pi, s))
    return mu


def test_set_partition_counts():
    assert [len(list(set_partitions(n))) for n in range(7)] == BELL


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_partition_mobius_matches_lattice(n):
    mu = lattice_mobius_to_top(n)
    for pi, v in mu.items():
        assert partition_mobius(pi) == v
        # the shifted convention is off by a global sign
        assert partition_mobius(pi, "shifted") == -v


def test_partition_mobius_examples():
    singletons = tuple(frozenset([i]) for i in (1, 2, 3))
    assert partition_mobius(singletons, "shifted") == -2
    assert partition_mobius(singletons) == 2
    assert partition_mobius((frozenset([1]),), "shifted") == -1
    with pytest.raises(ValueError):
        partition_mobius(singletons, "other")


def test_flats_are_set_partitions():
    g = build_group("A3")
    lat = ring(g).lattice
    parts = {flat_partition(g, x.bits) for x in lat.flats}
    assert len(parts) == len(lat.flats) == BELL[4]
    for x in lat.flats:
        assert len(flat_partition(g, x.bits)) == g.rank + 1 - x.codim


@pytest.mark.parametrize("n,size", [(1, 1), (2, 3), (3, 16), (4, 131)])
def test_ubp_isomorphism(n, size):
    ubp, mapping = ubp_poset(n)
    assert len(ubp) == size
    if n > 1:
        assert len(build_coset_poset(build_group(f"A{n - 1}"))) == size
    assert len(mapping) == size


def test_ubp_minimal_elements_are_permutations():
    ubp, mapping = ubp_poset(3)
    mins = set(ubp.minimal_elements())
    assert mins == {permutation_ubp(s) for s in itertools.permutations(range(1, 4))}
    g = build_group("A2")
    p = build_coset_poset(g)
    for c in range(len(p)):
        if len(p.members[c]) == 1:
            w = p.cosets[c].rep
            assert mapping[c] == permutation_ubp(g.permutation(w))


def test_ubp_order_examples():
    a = permutation_ubp((2, 1, 3))
    top = frozenset([(frozenset({1, 2, 3}), frozenset({1, 2, 3}))])
    assert ubp_leq(a, top) and not ubp_leq(top, a)
    b = frozenset([(frozenset({1, 2}), frozenset({1, 2})), (frozenset({3}), frozenset({3}))])
    assert ubp_leq(a, b)
    c = frozenset([(frozenset({1, 2}), frozenset({1, 3})), (frozenset({3}), frozenset({2}))])
    assert not ubp_leq(a, c)


def test_ubp_cap():
    with pytest.raises(SizeCap):
        ubp_poset(7)


def test_frobenius_a3_schur():
    f = xi_symfunc(4)
    assert f.to("S") == SymFunc("S", {(1, 1, 1, 1): 6, (2, 1, 1): 6, (2, 2): 3, (3, 1): 1})
    assert f.omega().to("H") == SymFunc("H", {(2, 1, 1): 1, (2, 2): 2, (3, 1): 2, (4,): 1})


@pytest.mark.parametrize("sym", ["A2", "A3", "A4"])
def test_frobenius_dims_and_sign(sym):
    g = build_group(sym)
    rg = ring(g)
    for x in rg.lattice.theta:
        b = rg.phi(x)
        f = frobenius(g, b)
        assert f.dim() == rg.dim(b)
        # tensoring with the sign character is omega
        assert frobenius(g, rg.tensor_sign(b)) == f.omega()


def test_flag_h_table_s4():
    """Equivariant flag h-vector of the proper part for four letters, in Schur functions."""
    g = build_group("A3")
    table = {
        (1, 2, 3): {(1, 1, 1, 1): 6, (2, 1, 1): 6, (2, 2): 3, (3, 1): 1},
        (1, 2): {(1, 1, 1, 1): 5, (2, 1, 1): 9, (2, 2): 4, (3, 1): 3},
        (1, 3): {(1, 1, 1, 1): 6, (2, 1, 1): 18, (2, 2): 9, (3, 1): 11},
        (2, 3): {(2, 1, 1): 12, (2, 2): 9, (3, 1): 17, (4,): 6},
        (1,): {(1, 1, 1, 1): 1, (2, 1, 1): 3, (2, 2): 2, (3, 1): 3},
        (2,): {(2, 1, 1): 6, (2, 2): 6, (3, 1): 12, (4,): 5},
        (3,): {(2, 2): 3, (3, 1): 7, (4,): 6},
        (): {(4,): 1},
    }
    fh = flag_h(g)
    for R, schur in table.items():
        assert frobenius(g, fh[frozenset(R)]).to("S") == SymFunc("S", schur)
    # omega(h_13) is not H-positive
    w13 = frobenius(g, fh[frozenset({1, 3})]).omega().to("H")
    assert w13 == SymFunc("H", {(2, 1, 1): 11, (2, 2): -2, (3, 1): -2, (4,): -1})


def test_xi_series_small():
    xs = xi_series(3)
    assert xs[0] == SymFunc.monomial("H", (1,))
    assert xs[2] == SymFunc("H", {(1, 1, 1): 2, (2, 1): -3, (3,): 1})
    assert xs[2].dim() == 4


def test_xi_series_matches_lattice():
    xs = xi_series(6)
    for n in range(1, 7):
        assert xs[n - 1] == xi_symfunc(n)
        assert xs[n - 1].dim() == D[n - 1]


def test_xi_series_cap():
    with pytest.raises(SizeCap):
        xi_series(9)


def test_bessel_dims():
    Dn, Dp = bessel_dims(12)
    assert Dn[:6] == D
    assert Dp[:4] == [1, 1, 3, 19]
    with pytest.raises(SizeCap):
        bessel_dims(13)


def brute_descent_pairs(n, restricted):
    perms = list(itertools.permutations(range(1, n + 1)))
    return sum(
        1
        for s in perms
        for t in perms
        if (not restricted or t[0] == 1) and descent_set(s) <= descent_set(t)
    )


@pytest.mark.parametrize("n", range(1, 6))
def test_descent_pairs_brute(n):
    assert descent_pair_count(n, True) == brute_descent_pairs(n, True)
    assert descent_pair_count(n, False) == brute_descent_pairs(n, False)


def test_count_below_descent_set():
    perms = list(itertools.permutations(range(1, 5)))
    for D_ in [set(), {1}, {2}, {1, 3}, {1, 2, 3}]:
        assert count_below_descent_set(4, D_) == sum(1 for p in perms if descent_set(p) <= D_)


def test_descent_pairs_vs_bessel():
    Dn, Dp = bessel_dims(8)
    assert [descent_pair_count(n, True) for n in range(1, 9)] == Dn
    assert [descent_pair_count(n, False) for n in range(0, 9)] == Dp
    assert descent_pair_count(4, True) == 33
    with pytest.raises(SizeCap):
        descent_pair_count(10, True)
