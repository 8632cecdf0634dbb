"""Intersection lattice of a reflection arrangement.

A flat is identified by its reflection set, a bitset over the positive
roots of the group (bit ``j`` set iff the flat lies in ``Fix(t_j)``).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

from . import linalg
from .coxgroup import Group, iter_bits


@dataclass(frozen=True)
class Flat:
    bits: int
    codim: int
    index: int

    @property
    def reflection_set(self) -> frozenset:
        return frozenset(iter_bits(self.bits))


@dataclass(frozen=True)
class RankSelection:
    """The poset ``L_R`` with an adjoined top, and its Moebius function to the top."""

    ranks: frozenset
    flats: tuple  # flat indices, top last
    mobius: dict  # flat index -> mu_R(X, top)


class Lattice:
    def __init__(self, group: Group):
        self.group = group
        self.rank = group.rank
        full = (1 << group.N) - 1
        levels = [{0}]
        for _ in range(group.rank):
            nxt = set()
            for bits in levels[-1]:
                # each cover absorbs every hyperplane in its closure
                remaining = full & ~bits
                while remaining:
                    t = remaining & -remaining
                    cover = group.closure(bits | t)
                    nxt.add(cover)
                    remaining &= ~cover
            levels.append(nxt)
        self.flats: list[Flat] = []
        for codim, level in enumerate(levels):
            for bits in sorted(level):
                self.flats.append(Flat(bits, codim, len(self.flats)))
        self.by_bits = {f.bits: f for f in self.flats}
        self.bottom = self.flats[0]
        self.top = self.flats[-1]
        assert self.top.codim == group.rank and self.top.bits == (1 << group.N) - 1

    def __len__(self):
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def flat(self, bits: int) -> Flat:
        return self.by_bits[bits]

    def leq(self, x: Flat, y: Flat) -> bool:
        return x.bits & ~y.bits == 0

    @cached_property
    def above(self) -> list[list[int]]:
        """Indices of flats strictly above each flat."""
        out = []
        for x in self.flats:
            out.append([y.index for y in self.flats if y.codim > x.codim and x.bits & ~y.bits == 0])
        return out

    @cached_property
    def covers(self) -> list[list[int]]:
        return [[j for j in ups if self.flats[j].codim == x.codim + 1] for x, ups in zip(self.flats, self.above)]

    @cached_property
    def mobius(self) -> list[int]:
        """``mu(X, {0})`` for every flat, computed top-down."""
        mu = [0] * len(self.flats)
        for x in reversed(self.flats):
            if x is self.top:
                mu[x.index] = 1
            else:
                mu[x.index] = -sum(mu[j] for j in self.above[x.index])
        return mu

    def mobius_to_top(self, x: Flat) -> int:
        return self.mobius[x.index]

    def dim(self, x: Flat) -> int:
        return self.rank - x.codim

    # -- orbits --------------------------------------------------------
    @cached_property
    def orbit_label(self) -> list[int]:
        """Canonical orbit label (smallest reflection bitset in the W-orbit) per flat."""
        g = self.group
        actions = [g.reflection_action(s) for s in g.generators]
        label = [None] * len(self.flats)
        for x in self.flats:
            if label[x.index] is not None:
                continue
            orbit = {x.bits}
            frontier = [x.bits]
            while frontier:
                nxt = []
                for bits in frontier:
                    for act in actions:
                        b = 0
                        for j in iter_bits(bits):
                            b |= 1 << act[j]
                        if b not in orbit:
                            orbit.add(b)
                            nxt.append(b)
                frontier = nxt
            lab = min(orbit)
            for b in orbit:
                label[self.by_bits[b].index] = lab
        return label

    @cached_property
    def orbits(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for x in self.flats:
            out.setdefault(self.orbit_label[x.index], []).append(x.index)
        return out

    @cached_property
    def theta(self) -> list[Flat]:
        """Orbit representatives (the flat carrying the label), ordered by (codim, label)."""
        reps = [self.by_bits[lab] for lab in self.orbits]
        return sorted(reps, key=lambda f: (f.codim, f.bits))

    def orbit_size(self, x: Flat) -> int:
        return len(self.orbits[self.orbit_label[x.index]])

    def orbit_classification(self) -> list[tuple[Flat, int]]:
        return [(x, self.orbit_size(x)) for x in self.theta]

    # -- parabolic subgroups --------------------------------------------
    @lru_cache(maxsize=None)
    def subgroup(self, bits: int) -> tuple:
        """Element indices of the parabolic subgroup ``W_X`` (sorted)."""
        g = self.group
        gens = [g.reflections[j] for j in iter_bits(bits)]
        seen = {0}
        frontier = [g.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for t in gens:
                    u = g.mul(w, t)
                    if u.index not in seen:
                        seen.add(u.index)
                        nxt.append(u)
            frontier = nxt
        return tuple(sorted(seen))

    def subspace_basis(self, x: Flat) -> list[tuple]:
        """Exact basis of the subspace X (ambient coordinates)."""
        g = self.group
        complement = linalg.nullspace(g.simple_roots, g.dim)
        rows = [g.positive_roots[j] for j in iter_bits(x.bits)] + complement
        return linalg.nullspace(rows, g.dim)

    def standard_flat(self, subset) -> Flat:
        return self.by_bits[self.group.standard_bits(subset)]

    @cached_property
    def standard_realization(self) -> dict[int, tuple]:
        """Orbit label -> lexicographically least ``I`` with ``X_I`` in that orbit."""
        out: dict[int, tuple] = {}
        n = self.rank
        subsets = sorted(
            (tuple(c) for k in range(n + 1) for c in combinations(range(n), k))
        )
        for sub in subsets:
            lab = self.orbit_label[self.standard_flat(sub).index]
            out.setdefault(lab, sub)
        assert set(out) == set(self.orbits)
        return out

    # -- rank selection -------------------------------------------------
    def rank_selected(self, ranks) -> RankSelection:
        """``L_R = {X : 1 + codim(X) in R}`` plus the top, with ``mu_R(X, top)``."""
        R = frozenset(ranks)
        members = [x.index for x in self.flats if x is not self.top and 1 + x.codim in R]
        members.append(self.top.index)
        mu = {self.top.index: 1}
        inset = set(members)
        for i in reversed(members[:-1]):
            mu[i] = -sum(mu[j] for j in self.above[i] if j in inset)
        return RankSelection(R, tuple(members), mu)


_CACHE: dict = {}


def build_lattice(group: Group) -> Lattice:
    lat = _CACHE.get(id(group))
    if lat is None or lat.group is not group:
        lat = _CACHE[id(group)] = Lattice(group)
    return lat


def mobius_to_top(lattice: Lattice, x: Flat) -> int:
    return lattice.mobius_to_top(x)


def orbit_classification(lattice: Lattice) -> list[tuple[Flat, int]]:
    return lattice.orbit_classification()


def rank_selected(lattice: Lattice, ranks) -> RankSelection:
    return lattice.rank_selected(ranks)
