"""The parabolic coset poset and its brute-force homology oracles.

Cosets are indexed globally; coset ``c`` is ``rep * W_X`` with ``rep`` the
minimal-length element.  Ranks follow the bounded poset obtained by adding
the empty set at rank 0: ``rank(wW_X) = 1 + codim(X)``, so singletons have
rank 1 and ``W`` itself rank ``n + 1``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from . import linalg
from .burnside import BurnsideElement, ring
from .coxgroup import Element, Group
from .errors import SizeCap
from .flats import Flat, build_lattice

DEFAULT_POSET_CAP = 200_000
DEFAULT_CHAIN_CAP = 500_000


@dataclass(frozen=True)
class ParabolicCoset:
    rep: Element
    flat: Flat

    @property
    def rank(self) -> int:
        return 1 + self.flat.codim


EMPTY = None  # result of meet() for disjoint cosets


class CosetPoset:
    def __init__(self, group: Group, cap: int = DEFAULT_POSET_CAP):
        self.group = group
        self.lattice = L = build_lattice(group)
        total = sum(group.order // len(L.subgroup(x.bits)) for x in L)
        if total > cap:
            raise SizeCap(f"coset poset of {group.symbol} has {total} elements (cap {cap})")
        self.cosets: list[ParabolicCoset] = []
        self.members: list[tuple] = []
        self.coset_of: list[list[int]] = []
        for x in L:
            H = [group.elements[i] for i in L.subgroup(x.bits)]
            table = [-1] * group.order
            for u in group.elements:
                if table[u.index] >= 0:
                    continue
                cid = len(self.cosets)
                mem = []
                for h in H:
                    v = group.mul(u, h)
                    table[v.index] = cid
                    mem.append(v.index)
                self.cosets.append(ParabolicCoset(u, x))
                self.members.append(tuple(sorted(mem)))
            self.coset_of.append(table)
        self.top = len(self.cosets) - 1

    def __len__(self):
        return len(self.cosets)

    def rank(self, c: int) -> int:
        return self.cosets[c].rank

    def coset(self, w: Element, x: Flat) -> int:
        return self.coset_of[x.index][w.index]

    def leq(self, a: int, b: int) -> bool:
        ca, cb = self.cosets[a], self.cosets[b]
        return ca.flat.bits & ~cb.flat.bits == 0 and self.coset_of[cb.flat.index][ca.rep.index] == b

    @cached_property
    def up(self) -> list[list[int]]:
        """Strict up-set of every coset."""
        L = self.lattice
        out = []
        for c in self.cosets:
            u = c.rep.index
            out.append([self.coset_of[y][u] for y in L.above[c.flat.index]])
        return out

    def proper_part(self) -> list[int]:
        return list(range(self.top))

    def meet(self, a: int, b: int):
        """Intersection of two cosets as a coset index, or ``EMPTY``."""
        cb = self.cosets[b]
        table_b = self.coset_of[cb.flat.index]
        bits = self.cosets[a].flat.bits & cb.flat.bits
        x = self.lattice.by_bits[bits]
        for z in self.members[a]:
            if table_b[z] == b:
                return self.coset_of[x.index][z]
        return EMPTY

    def is_fixed(self, c: int, w: Element) -> bool:
        pc = self.cosets[c]
        return self.coset_of[pc.flat.index][self.group.mul(w, pc.rep).index] == c

    def _selected(self, ranks) -> list[int]:
        R = set(range(1, self.group.rank + 1)) if ranks is None else set(ranks)
        return [c for c in range(self.top) if self.cosets[c].rank in R]

    # -- oracles ----------------------------------------------------------
    def lefschetz_character(self, w: Element, ranks=None) -> int:
        """Reduced Euler characteristic of the ``w``-fixed part of the order complex.

        Restricted to cosets whose rank lies in ``ranks`` (default: the whole
        proper part).  Chains are counted with sign ``(-1)^(|c|-1)``, the empty
        chain included.
        """
        sel = [c for c in self._selected(ranks) if self.is_fixed(c, w)]
        keep = set(sel)
        g = dict.fromkeys(sel, 1)
        for c in sel:  # cosets are stored in rank order
            gc = g[c]
            for d in self.up[c]:
                if d in keep:
                    g[d] -= gc
        return -1 + sum(g.values())

    def mobius_invariant(self) -> int:
        """``mu(empty, W)`` in the poset with an adjoined bottom."""
        mu = {}
        for c in range(len(self.cosets)):
            mu[c] = -1
        for c in range(len(self.cosets)):
            for d in self.up[c]:
                mu[d] -= mu[c]
        return mu[self.top]

    def count_maximal_chains(self) -> int:
        n = self.group.rank
        cnt = [0] * len(self.cosets)
        for c in range(self.top):
            if self.cosets[c].rank == 1:
                cnt[c] = 1
            r = self.cosets[c].rank
            for d in self.up[c]:
                if d != self.top and self.cosets[d].rank == r + 1:
                    cnt[d] += cnt[c]
        return sum(cnt[c] for c in range(self.top) if self.cosets[c].rank == n)

    def flag_f_vector(self) -> dict[frozenset, int]:
        """Number of chains of the proper part with each rank set (empty chain included)."""
        per: list[Counter] = [Counter() for _ in self.cosets]
        total: Counter = Counter({frozenset(): 1})
        for c in range(self.top):
            r = self.cosets[c].rank
            per[c][frozenset([r])] += 1
            for R, v in per[c].items():
                total[R] += v
            for d in self.up[c]:
                if d == self.top:
                    continue
                rd = self.cosets[d].rank
                for R, v in per[c].items():
                    per[d][R | {rd}] += v
            per[c] = Counter()
        return dict(total)

    def flag_h_vector(self) -> dict[frozenset, int]:
        f = self.flag_f_vector()
        n = self.group.rank
        out = {}
        for k in range(n + 1):
            for R in combinations(range(1, n + 1), k):
                R = frozenset(R)
                out[R] = sum(
                    (-1) ** (len(R) - j) * f.get(frozenset(T), 0)
                    for j in range(len(R) + 1)
                    for T in combinations(sorted(R), j)
                )
        return out

    def chains(self, cap: int = DEFAULT_CHAIN_CAP) -> list[list[tuple]]:
        """All nonempty chains of the proper part, grouped by size."""
        by_size: list[list[tuple]] = [[] for _ in range(self.group.rank)]
        count = 0
        stack = [(c,) for c in range(self.top)]
        while stack:
            ch = stack.pop()
            by_size[len(ch) - 1].append(ch)
            count += 1
            if count > cap:
                raise SizeCap(f"order complex exceeds {cap} simplices")
            for d in self.up[ch[-1]]:
                if d != self.top:
                    stack.append(ch + (d,))
        for lst in by_size:
            lst.sort()
        return by_size

    def betti_numbers(self, cap: int = DEFAULT_CHAIN_CAP) -> list[int]:
        """Reduced Betti numbers (over Q) of the order complex of the proper part."""
        simplices = self.chains(cap)
        index = [{s: i for i, s in enumerate(lst)} for lst in simplices]
        ranks = [1 if simplices[0] else 0]  # augmentation C_0 -> C_{-1}
        for k in range(1, len(simplices)):
            rows = []
            for s in simplices[k]:
                row = {}
                for i in range(len(s)):
                    row[index[k - 1][s[:i] + s[i + 1:]]] = (-1) ** i
                rows.append(row)
            ranks.append(linalg.sparse_rank(rows))
        ranks.append(0)
        return [len(simplices[k]) - ranks[k] - ranks[k + 1] for k in range(len(simplices))]


_CACHE: dict = {}


def build_coset_poset(group: Group, cap: int = DEFAULT_POSET_CAP) -> CosetPoset:
    p = _CACHE.get(id(group))
    if p is None or p.group is not group:
        p = _CACHE[id(group)] = CosetPoset(group, cap)
    return p


def rank_selected_character(group: Group, ranks) -> BurnsideElement:
    """``(-1)^{|R|} sum_{X in L_R + top} mu_R(X) phi_X``."""
    rg = ring(group)
    sel = rg.lattice.rank_selected(ranks)
    flats = rg.lattice.flats
    sgn = (-1) ** len(sel.ranks)
    return rg.from_flats((flats[i], sgn * sel.mobius[i]) for i in sel.flats)


def equivariant_h(group: Group, i: int) -> BurnsideElement:
    out = BurnsideElement()
    for R in combinations(range(1, group.rank + 1), i):
        out = out + rank_selected_character(group, R)
    return out


def flag_h(group: Group) -> dict[frozenset, BurnsideElement]:
    n = group.rank
    return {
        frozenset(R): rank_selected_character(group, R)
        for k in range(n + 1)
        for R in combinations(range(1, n + 1), k)
    }


def h_vector(group: Group) -> list[int]:
    """Scalar h-vector of the order complex of the proper part."""
    rg = ring(group)
    return [rg.dim(equivariant_h(group, i)) for i in range(group.rank + 1)]


def lefschetz_character(poset: CosetPoset, w: Element, ranks=None) -> int:
    return poset.lefschetz_character(w, ranks)


def betti_numbers(poset: CosetPoset) -> list[int]:
    return poset.betti_numbers()


def count_maximal_chains(poset: CosetPoset) -> int:
    return poset.count_maximal_chains()


def meet(poset: CosetPoset, a: int, b: int):
    return poset.meet(a, b)
