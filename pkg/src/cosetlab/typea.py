"""Symmetric-group specialisation.

Uniform block permutations are stored as a frozenset of pairs
``(block, image_block)`` of frozensets of ``1..n``; that set determines both
set partitions and the block bijection.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .burnside import BurnsideElement, ring
from .coxgroup import Group, build_group, iter_bits
from .cosetposet import build_coset_poset
from .errors import SizeCap
from .series import Series, bessel_j0_sqrt
from .symfunc import SymFunc, multinomial

UBP_MAX = 6
XI_SERIES_MAX = 8
BESSEL_MAX = 12
DESCENT_MAX = 9


# -- set partitions ---------------------------------------------------------
def set_partitions(n: int):
    """All set partitions of ``1..n`` as tuples of frozensets (blocks sorted by minimum)."""
    def rec(i, blocks):
        if i > n:
            yield tuple(frozenset(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def shape(pi) -> tuple:
    return tuple(sorted((len(b) for b in pi), reverse=True))


def refines(fine, coarse) -> bool:
    return all(any(b <= c for c in coarse) for b in fine)


def partition_mobius(pi, convention: str = "lattice") -> int:
    """Moebius value ``mu(pi, 1)`` in the partition lattice.

    ``convention="lattice"`` gives the true value ``(-1)^(l-1) (l-1)!``;
    ``"shifted"`` gives ``(-1)^l (l-1)!``, which differs by a global sign.
    """
    l = len(pi)
    if convention == "lattice":
        return (-1) ** (l - 1) * factorial(l - 1)
    if convention == "shifted":
        return (-1) ** l * factorial(l - 1)
    raise ValueError(convention)


# -- lattice/group dictionary ----------------------------------------------
def flat_partition(group: Group, bits: int) -> tuple:
    """Set partition of ``1..n`` attached to a flat of ``A(n-1)``."""
    m = group.dim
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for j in iter_bits(bits):
        r = group.positive_roots[j]
        a, b = r.index(1), r.index(-1)
        parent[find(a)] = find(b)
    blocks: dict = {}
    for i in range(m):
        blocks.setdefault(find(i), set()).add(i + 1)
    return tuple(sorted((frozenset(b) for b in blocks.values()), key=min))


def label_shape(group: Group, label: int) -> tuple:
    return shape(flat_partition(group, label))


# -- uniform block permutations -----------------------------------------------
def ubp_elements(n: int) -> list[frozenset]:
    out = []
    for pi1 in set_partitions(n):
        for pi2 in set_partitions(n):
            if shape(pi1) != shape(pi2):
                continue
            out.extend(_bijections(list(pi1), list(pi2)))
    return out


def _bijections(src, dst):
    if not src:
        yield frozenset()
        return
    b = src[0]
    for i, c in enumerate(dst):
        if len(c) == len(b):
            for rest in _bijections(src[1:], dst[:i] + dst[i + 1:]):
                yield rest | {(b, c)}


def ubp_leq(a: frozenset, b: frozenset) -> bool:
    """``a <= b``: both partitions of ``b`` are coarser and its bijection is the quotient of ``a``'s."""
    return all(any(x <= X and y <= Y for X, Y in b) for x, y in a)


def ubp_partitions(a: frozenset) -> tuple:
    return (
        tuple(sorted((x for x, _ in a), key=min)),
        tuple(sorted((y for _, y in a), key=min)),
    )


class UBPPoset:
    def __init__(self, n: int):
        if n > UBP_MAX:
            raise SizeCap(f"uniform block permutations limited to n <= {UBP_MAX}")
        self.n = n
        self.elements = ubp_elements(n)
        self.index = {a: i for i, a in enumerate(self.elements)}
        self._by_source: dict = {}
        for a in self.elements:
            self._by_source.setdefault(ubp_partitions(a)[0], []).append(a)

    def __len__(self):
        return len(self.elements)

    def up_set(self, a: frozenset) -> set:
        """All ``b >= a`` (including ``a``)."""
        src = ubp_partitions(a)[0]
        out = set()
        for pi, cands in self._by_source.items():
            if refines(src, pi):
                out.update(b for b in cands if ubp_leq(a, b))
        return out

    def minimal_elements(self) -> list[frozenset]:
        return [a for a in self.elements if len(a) == self.n]


def permutation_ubp(sigma) -> frozenset:
    """``(1|2|...|n, sigma_1|...|sigma_n)``."""
    return frozenset((frozenset([i + 1]), frozenset([s])) for i, s in enumerate(sigma))


def coset_to_ubp(group: Group, poset, c: int) -> frozenset:
    """``sigma S_pi -> (pi, sigma(pi), quotient of sigma)``."""
    pc = poset.cosets[c]
    sigma = group.permutation(pc.rep)
    pi = flat_partition(group, pc.flat.bits)
    return frozenset((b, frozenset(sigma[i - 1] for i in b)) for b in pi)


def ubp_poset(n: int):
    """UBP poset of size n and its verified isomorphism with the coset poset of ``A(n-1)``.

    Returns ``(ubp, mapping)`` with ``mapping[c]`` the UBP attached to coset c.
    For n = 1 the coset poset is the single point ``W`` and the mapping is ``{0: ubp}``.
    """
    ubp = UBPPoset(n)
    if n == 1:
        return ubp, {0: ubp.elements[0]}
    group = build_group(f"A{n - 1}")
    poset = build_coset_poset(group)
    mapping = {c: coset_to_ubp(group, poset, c) for c in range(len(poset))}
    if len(set(mapping.values())) != len(mapping) or set(mapping.values()) != set(ubp.elements):
        raise AssertionError("coset -> UBP map is not a bijection")
    for c in range(len(poset)):
        expected = {mapping[d] for d in poset.up[c]} | {mapping[c]}
        if ubp.up_set(mapping[c]) != expected:
            raise AssertionError(f"order mismatch above coset {c}")
    return ubp, mapping


# -- Frobenius characteristic -----------------------------------------------
def frobenius(group: Group, b: BurnsideElement) -> SymFunc:
    """H-basis image of a Burnside element of ``A(n-1)``."""
    if group.symbol.family != "A":
        raise ValueError("Frobenius characteristic needs type A")
    out: dict = {}
    for lab, c in b.coeffs.items():
        lam = label_shape(group, lab)
        out[lam] = out.get(lam, 0) + c
    return SymFunc("H", out)


def xi_symfunc(n: int) -> SymFunc:
    """``Fr(xi)`` for the symmetric group on n letters, via the lattice formula."""
    if n == 1:
        return SymFunc("H", {(1,): 1})
    g = build_group(f"A{n - 1}")
    return frobenius(g, ring(g).xi())


@lru_cache(maxsize=None)
def xi_series(N: int) -> tuple:
    """``xi_1..xi_N`` from ``-log(sum H_n (-z)^n / n!)``."""
    if N > XI_SERIES_MAX:
        raise SizeCap(f"xi series limited to N <= {XI_SERIES_MAX}")
    one = SymFunc("H", {(): 1})
    base = Series([one] + [SymFunc("H", {(k,): Fraction((-1) ** k, factorial(k))}) for k in range(1, N + 1)])
    lg = base.log()
    return tuple(lg[k] * (-factorial(k)) for k in range(1, N + 1))


# -- dimensions -----------------------------------------------------------
def bessel_dims(N: int) -> tuple[list[int], list[int]]:
    """``(D_1..D_N, D'_0..D'_N)`` from ``-log J0(2 sqrt x)`` and ``1/J0(2 sqrt x)``."""
    if N > BESSEL_MAX:
        raise SizeCap(f"Bessel dimensions limited to N <= {BESSEL_MAX}")
    J = bessel_j0_sqrt(N)
    neglog = -J.log()
    inv = J.reciprocal()
    D = [neglog[n] * factorial(n) ** 2 for n in range(1, N + 1)]
    Dp = [inv[n] * factorial(n) ** 2 for n in range(N + 1)]
    if any(x.denominator != 1 for x in D + Dp):
        raise AssertionError("non-integral Bessel coefficient")
    # log relation between the two doubly-exponential series
    gen = Series(Fraction(Dp[n], factorial(n) ** 2) for n in range(N + 1)).log()
    if any(gen[n] * factorial(n) ** 2 != D[n - 1] for n in range(1, N + 1)):
        raise AssertionError("log relation between D and D' fails")
    return [int(x) for x in D], [int(x) for x in Dp]


def descent_set(sigma) -> frozenset:
    return frozenset(i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])


def count_below_descent_set(n: int, D) -> int:
    """Number of permutations whose descent set lies inside D."""
    cuts = [0] + sorted(D) + [n]
    return multinomial(n, [b - a for a, b in zip(cuts, cuts[1:])])


def descent_pair_count(n: int, restricted: bool) -> int:
    """Pairs ``(sigma, tau)`` with ``des(sigma)`` inside ``des(tau)`` (and ``tau(1)=1`` if restricted)."""
    if n > DESCENT_MAX:
        raise SizeCap(f"descent pair count limited to n <= {DESCENT_MAX}")
    if n == 0:
        return 1
    sets = Counter(
        descent_set(tau) for tau in permutations(range(1, n + 1)) if not restricted or tau[0] == 1
    )
    return sum(m * count_below_descent_set(n, D) for D, m in sets.items())
