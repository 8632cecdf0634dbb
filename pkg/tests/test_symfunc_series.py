import itertools
import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from cosetlab.series import Series, bessel_j0_sqrt
from cosetlab.symfunc import SymFunc, conjugate, kostka, partitions, z_lambda


def brute_kostka(lam, mu):
    """Fill the diagram cell by cell with the multiset of letters and count SSYT."""
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    letters = [k for k, m in enumerate(mu, 1) for _ in range(m)]
    seen = set()
    for perm in set(itertools.permutations(letters)):
        t = dict(zip(cells, perm))
        rows_ok = all(t[(i, j)] <= t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t)
        cols_ok = all(t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t)
        if rows_ok and cols_ok:
            seen.add(perm)
    return len(seen)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_kostka_brute(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert kostka(lam, mu) == brute_kostka(lam, mu)


def test_z_lambda_sums_to_one():
    for n in range(1, 8):
        assert sum(Fraction(1, z_lambda(l)) for l in partitions(n)) == 1


@pytest.mark.parametrize("basis", ["H", "E", "P", "S"])
def test_round_trip(basis):
    rng = random.Random(5)
    for n in range(1, 7):
        f = SymFunc(basis, {lam: rng.randint(-4, 4) for lam in partitions(n)})
        for other in "HEPS":
            assert f.to(other).to(basis) == f


def test_known_expansions():
    h21 = SymFunc.monomial("H", (2, 1))
    assert h21.to("S") == SymFunc("S", {(3,): 1, (2, 1): 1})
    # p_2 = h_2 - e_2 ... as Schur: s_2 - s_11
    assert SymFunc.monomial("P", (2,)).to("S") == SymFunc("S", {(2,): 1, (1, 1): -1})
    assert SymFunc.monomial("E", (2,)).to("H") == SymFunc("H", {(1, 1): 1, (2,): -1})


def _random_symfunc():
    return st.tuples(st.sampled_from("HEPS"), st.integers(1, 6), st.integers(0, 10**6)).map(
        lambda t: SymFunc(t[0], {lam: random.Random(t[2]).randint(-5, 5) for lam in partitions(t[1])})
    )


@settings(max_examples=100, deadline=None)
@given(_random_symfunc())
def test_omega_involution(f):
    assert f.omega().omega() == f
    assert f.omega().to("S") == f.to("S").omega()


def test_dim():
    n = 4
    assert SymFunc.monomial("H", (1,) * n).dim() == factorial(n)
    assert SymFunc.monomial("H", (n,)).dim() == 1
    assert SymFunc.monomial("S", (2, 2)).dim() == 2
    assert SymFunc.monomial("E", (2, 1, 1)).dim() == 12  # multinomial 4!/(2!1!1!)


def test_products():
    a = SymFunc.monomial("H", (2,))
    b = SymFunc.monomial("S", (1,))
    assert a * b == SymFunc("H", {(2, 1): 1})
    assert (a * 3)[(2,)] == 3
    with pytest.raises(ValueError):
        SymFunc("H", {(2,): 1, (1,): 1})


# -- series -------------------------------------------------------------
def test_series_exp_log_inverse():
    x = Series([Fraction(0), Fraction(1)] + [Fraction(0)] * 8)
    e = x.exp()
    assert [e[k] for k in range(10)] == [Fraction(1, factorial(k)) for k in range(10)]
    assert (e.log() - x).coeffs == [0] * 10
    one_minus = Series([Fraction(1), Fraction(-1)] + [Fraction(0)] * 8)
    assert one_minus.reciprocal().coeffs == [1] * 10
    # log(1 - x) = -sum x^k / k
    assert one_minus.log().coeffs[1:] == [Fraction(-1, k) for k in range(1, 10)]


def test_series_errors():
    with pytest.raises(ValueError):
        Series([Fraction(2), Fraction(1)]).log()
    with pytest.raises(ZeroDivisionError):
        Series([Fraction(0), Fraction(1)]).reciprocal()
    with pytest.raises(ValueError):
        Series([Fraction(1)]).exp()


def test_bessel_coefficients():
    J = bessel_j0_sqrt(4)
    assert J.coeffs == [1, -1, Fraction(1, 4), Fraction(-1, 36), Fraction(1, 576)]


def test_moment_cumulant():
    # M_n = sum over set partitions of prod K_|b|; log M(x) = K(x) (exponential generating functions)
    from cosetlab.typea import set_partitions, partition_mobius
    rng = random.Random(11)
    K = [0] + [rng.randint(-5, 5) for _ in range(6)]
    M = [1] + [sum(_prod(K[len(b)] for b in pi) for pi in set_partitions(n)) for n in range(1, 7)]
    egf = Series(Fraction(M[n], factorial(n)) for n in range(7)).log()
    assert [egf[n] * factorial(n) for n in range(1, 7)] == K[1:]
    # Moebius inversion over products of moments recovers the cumulants
    for n in range(1, 7):
        total = sum(partition_mobius(pi) * _prod(M[len(b)] for b in pi) for pi in set_partitions(n))
        assert total == K[n]


def _prod(it):
    out = 1
    for v in it:
        out *= v
    return out
