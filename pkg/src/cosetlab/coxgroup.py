"""Finite crystallographic Coxeter groups with exact root geometry.

Elements are stored by their action on the full root system: a tuple
``perm`` with ``perm[i]`` the index of ``w(root_i)``.  Roots ``0..N-1`` are
the positive roots (simple roots first), and root ``N + j`` is ``-root_j``.
"""
from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from . import linalg
from .errors import NotIdeal, NotParabolic, SizeCap, UnsupportedType

DEFAULT_CAP = 10**6
FAMILIES = ("A", "B", "D", "G", "F")


def default_cap() -> int:
    return int(os.environ.get("COSETLAB_CAP", DEFAULT_CAP))


@dataclass(frozen=True)
class GroupSymbol:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "D": n >= 4,
            "G": n == 2,
            "F": n == 4,
        }.get(f)
        if not ok:
            raise UnsupportedType(f"unsupported Coxeter type {f}{n}")

    @classmethod
    def parse(cls, text: str) -> "GroupSymbol":
        m = re.fullmatch(r"\s*([A-Za-z])\(?\s*(\d+)\s*\)?\s*", text)
        if not m:
            raise UnsupportedType(f"cannot parse group symbol {text!r}")
        fam, n = m.group(1).upper(), int(m.group(2))
        if fam not in FAMILIES:
            raise UnsupportedType(f"unsupported family {fam} (only A, B, D, G2, F4)")
        return cls(fam, n)

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def order(self) -> int:
        n = self.rank
        return {
            "A": math.factorial(n + 1),
            "B": 2**n * math.factorial(n),
            "D": 2 ** (n - 1) * math.factorial(n),
            "G": 12,
            "F": 1152,
        }[self.family]

    def simple_roots(self) -> list[tuple]:
        n, f = self.rank, self.family

        def e(dim, *pairs):
            v = [Fraction(0)] * dim
            for i, c in pairs:
                v[i] += Fraction(c)
            return tuple(v)

        if f == "A":
            return [e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
        if f == "B":
            return [e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [e(n, (n - 1, 1))]
        if f == "D":
            return [e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [e(n, (n - 2, 1), (n - 1, 1))]
        if f == "G":
            return [e(3, (0, 1), (1, -1)), e(3, (0, -2), (1, 1), (2, 1))]
        half = Fraction(1, 2)
        return [
            e(4, (1, 1), (2, -1)),
            e(4, (2, 1), (3, -1)),
            e(4, (3, 1)),
            e(4, (0, half), (1, -half), (2, -half), (3, -half)),
        ]


@dataclass(frozen=True, eq=False)
class Element:
    perm: tuple
    word: tuple = field(default=())
    length: int = 0
    index: int = -1

    def __eq__(self, other):
        return isinstance(other, Element) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return "e" if not self.word else "".join(f"s{i + 1}" for i in self.word)


class Group:
    """A finite Coxeter group with enumerated elements.

    Construct with :func:`build_group`.
    """

    def __init__(self, symbol: GroupSymbol, cap: int | None = None):
        cap = default_cap() if cap is None else cap
        if symbol.order > cap:
            raise SizeCap(f"|W({symbol})| = {symbol.order} exceeds cap {cap}")
        self.symbol = symbol
        self.rank = symbol.rank
        self.simple_roots = symbol.simple_roots()
        self.dim = len(self.simple_roots[0])
        n = self.rank
        self.gram = [[linalg.dot(a, b) for b in self.simple_roots] for a in self.simple_roots]
        self._gram_inv = linalg.inverse(self.gram)
        self._build_roots()
        # fundamental weights: <w_i, a_j^vee> = delta_ij, as combinations of simple roots
        coroot_pairing = [[2 * self.gram[k][j] / self.gram[j][j] for j in range(n)] for k in range(n)]
        self.weight_coords = linalg.inverse(coroot_pairing)
        self.fundamental_weights = [linalg.combination(c, self.simple_roots) for c in self.weight_coords]
        self._enumerate()
        self.reflections = [self.elements[self.index[self._reflection_perm(j)]] for j in range(self.N)]

    # -- roots ---------------------------------------------------------
    def _build_roots(self):
        simple = self.simple_roots
        seen = {r: None for r in simple}
        frontier = list(simple)
        while frontier:
            nxt = []
            for v in frontier:
                for a in simple:
                    r = self._reflect(v, a)
                    if r not in seen:
                        seen[r] = None
                        nxt.append(r)
            frontier = nxt
        allroots = list(seen)
        positive = []
        for r in allroots:
            c = self.root_coords(r)
            if all(x >= 0 for x in c):
                positive.append((sum(c), tuple(-x for x in c), r))
        positive.sort()
        self.N = len(positive)
        self.positive_roots = [p[2] for p in positive]
        self.roots = self.positive_roots + [linalg.scale(-1, r) for r in self.positive_roots]
        self.root_index = {r: i for i, r in enumerate(self.roots)}
        assert self.positive_roots[: self.rank] == simple
        assert len(allroots) == 2 * self.N

    @staticmethod
    def _reflect(v, a):
        c = 2 * linalg.dot(v, a) / linalg.dot(a, a)
        return tuple(x - c * y for x, y in zip(v, a))

    def root_coords(self, v) -> tuple:
        """Coordinates of ``v`` (a vector in V) in the simple-root basis."""
        pair = [linalg.dot(v, a) for a in self.simple_roots]
        return tuple(sum((g * p for g, p in zip(row, pair)), Fraction(0)) for row in self._gram_inv)

    def _reflection_perm(self, j):
        beta = self.roots[j]
        return tuple(self.root_index[self._reflect(r, beta)] for r in self.roots)

    # -- elements ------------------------------------------------------
    def _enumerate(self):
        N, n = self.N, self.rank
        gens = [self._reflection_perm(i) for i in range(n)]
        ident = tuple(range(2 * N))
        words = {ident: ()}
        level = [ident]
        length = 0
        levels = [[ident]]
        while level:
            nxt = {}
            for w in level:
                for s in range(n):
                    if w[s] < N:  # ascent: l(ws) > l(w)
                        ws = tuple(w[x] for x in gens[s])
                        nxt.setdefault(ws, None)
            length += 1
            level = list(nxt)
            for w in level:
                # canonical word: smallest left descent, then recurse
                inv = [0] * (2 * N)
                for i, x in enumerate(w):
                    inv[x] = i
                s0 = next(s for s in range(n) if inv[s] >= N)
                sw = tuple(gens[s0][x] for x in w)
                words[w] = (s0,) + words[sw]
            if level:
                levels.append(level)
        ordered = sorted(words, key=lambda p: (len(words[p]), words[p]))
        self.elements = [Element(p, words[p], len(words[p]), i) for i, p in enumerate(ordered)]
        self.index = {e.perm: i for i, e in enumerate(self.elements)}
        self.generators = [self.elements[self.index[g]] for g in gens]
        self.order = len(self.elements)

    @property
    def identity(self) -> Element:
        return self.elements[0]

    @property
    def longest(self) -> Element:
        return self.elements[-1]

    def element(self, word: Iterable[int]) -> Element:
        """Element for a word in 0-based simple generator indices."""
        w = self.identity
        for s in word:
            w = self.mul(w, self.generators[s])
        return w

    def mul(self, a: Element, b: Element) -> Element:
        pa = a.perm
        return self.elements[self.index[tuple(pa[x] for x in b.perm)]]

    def inverse(self, a: Element) -> Element:
        inv = [0] * len(a.perm)
        for i, x in enumerate(a.perm):
            inv[x] = i
        return self.elements[self.index[tuple(inv)]]

    def conjugate(self, u: Element, w: Element) -> Element:
        """``u^{-1} w u``."""
        return self.mul(self.inverse(u), self.mul(w, u))

    def act(self, w: Element, v) -> tuple:
        """Image of a vector of V under ``w`` (exact)."""
        c = self.root_coords(v)
        return linalg.combination(c, [self.roots[w.perm[i]] for i in range(self.rank)])

    def weight_image(self, w: Element, j: int) -> tuple:
        return linalg.combination(self.weight_coords[j], [self.roots[w.perm[i]] for i in range(self.rank)])

    def permutation(self, w: Element) -> tuple:
        """Type A only: one-line notation ``sigma`` (1-based) with ``w(e_i) = e_sigma(i)``."""
        if self.symbol.family != "A":
            raise ValueError("permutation() is defined for type A only")
        m = self.dim
        out = []
        for i in range(m):
            j = i + 1 if i + 1 < m else i - 1
            r = [Fraction(0)] * m
            r[i], r[j] = Fraction(1), Fraction(-1)
            image = self.roots[w.perm[self.root_index[tuple(r)]]]
            out.append(image.index(1) + 1)
        return tuple(out)

    def sign(self, w: Element) -> int:
        return -1 if w.length % 2 else 1

    def inversion_set(self, w: Element) -> int:
        N = self.N
        bits = 0
        for j in range(N):
            if w.perm[j] >= N:
                bits |= 1 << j
        return bits

    def descents(self, w: Element) -> frozenset:
        return frozenset(s for s in range(self.rank) if w.perm[s] >= self.N)

    def ascents(self, w: Element) -> frozenset:
        return frozenset(range(self.rank)) - self.descents(w)

    def descents_ascents(self, w: Element) -> tuple[frozenset, frozenset]:
        d = self.descents(w)
        return d, frozenset(range(self.rank)) - d

    # -- reflections / parabolic closure ------------------------------
    def reflection_action(self, w: Element) -> tuple:
        """Permutation of positive-root (reflection) indices by conjugation."""
        N = self.N
        return tuple(x - N if x >= N else x for x in w.perm[:N])

    def conjugate_bits(self, w: Element, bits: int) -> int:
        act = self.reflection_action(w)
        out = 0
        j = 0
        while bits:
            if bits & 1:
                out |= 1 << act[j]
            bits >>= 1
            j += 1
        return out

    def closure(self, bits: int) -> int:
        """Reflections whose root lies in the span of the roots in ``bits``."""
        ech = linalg.Echelon(self.dim)
        for j in iter_bits(bits):
            ech.insert(self.positive_roots[j])
        out = 0
        for j, r in enumerate(self.positive_roots):
            if (bits >> j) & 1 or ech.contains(r):
                out |= 1 << j
        return out

    def is_parabolic(self, bits: int) -> bool:
        return self.closure(bits) == bits

    def standard_bits(self, subset: Iterable[int]) -> int:
        return self.closure(sum(1 << s for s in set(subset)))

    def min_coset_representative(self, w: Element, H) -> Element:
        """Minimal-length element of the coset ``w W_H``.

        ``H`` is a reflection bitset (int) or an iterable of simple indices.
        """
        bits = H if isinstance(H, int) else self.standard_bits(H)
        if not self.is_parabolic(bits):
            raise NotParabolic(f"reflection set {bits:#x} is not parabolically closed")
        N = self.N
        refl = list(iter_bits(bits))
        while True:
            for j in refl:
                if w.perm[j] >= N:
                    w = self.mul(w, self.reflections[j])
                    break
            else:
                return w

    def weak_leq(self, u: Element, w: Element) -> bool:
        """Right weak order: ``w = u v`` with lengths adding."""
        iu = self.inversion_set(self.inverse(u))
        return iu & ~self.inversion_set(self.inverse(w)) == 0

    def weak_order_linear_extension(self, subset: Iterable[Element]) -> list[Element]:
        members = set(subset)
        for w in members:
            for s in self.descents(w):
                if self.mul(w, self.generators[s]) not in members:
                    raise NotIdeal(f"{w!r}{s + 1} missing: subset is not a weak-order ideal")
        return sorted(members, key=lambda e: e.index)

    @cached_property
    def conjugacy_classes(self) -> list[list[int]]:
        """Conjugacy classes as sorted lists of element indices, ordered by first member."""
        seen = [-1] * self.order
        classes = []
        gens = self.generators
        for w in self.elements:
            if seen[w.index] >= 0:
                continue
            cid = len(classes)
            seen[w.index] = cid
            members = [w.index]
            frontier = [w]
            while frontier:
                nxt = []
                for x in frontier:
                    for s in gens:
                        y = self.mul(s, self.mul(x, s))
                        if seen[y.index] < 0:
                            seen[y.index] = cid
                            members.append(y.index)
                            nxt.append(y)
                frontier = nxt
            classes.append(sorted(members))
        self._class_of = seen
        return classes

    def class_of(self, w: Element) -> int:
        self.conjugacy_classes
        return self._class_of[w.index]

    def __repr__(self):
        return f"Group({self.symbol}, order={self.order})"


def iter_bits(bits: int):
    j = 0
    while bits:
        if bits & 1:
            yield j
        bits >>= 1
        j += 1


_CACHE: dict = {}


def build_group(symbol, cap: int | None = None) -> Group:
    """Build (and cache) the group for ``symbol`` (a GroupSymbol or a string like 'B3')."""
    if isinstance(symbol, str):
        symbol = GroupSymbol.parse(symbol)
    cap = default_cap() if cap is None else cap
    if symbol.order > cap:
        raise SizeCap(f"|W({symbol})| = {symbol.order} exceeds cap {cap}")
    g = _CACHE.get(symbol)
    if g is None:
        g = _CACHE[symbol] = Group(symbol, cap)
    return g
