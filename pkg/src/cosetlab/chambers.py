"""Positive chamber complex of a generic hyperplane.

A face of the Coxeter complex is a standard parabolic coset ``w W_I``
(``w`` minimal in its coset, ``I`` a proper subset of the simple
generators); its rays are ``w(omega_j)`` for ``j`` not in ``I`` and its
linear dimension is ``n - |I|``.  The zero face ``(e, S)`` is the empty
simplex and is handled separately.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb

from . import linalg
from .burnside import BurnsideElement, ring
from .coxgroup import Element, Group
from .errors import NonGeneric, ShellingViolation
from .flats import Flat, build_lattice

MODES = ("seed", "spread", "user")


class RayTable:
    """Exact rays ``w(omega_j)`` for every element and colour."""

    def __init__(self, group: Group):
        self.group = group
        self.rays = [tuple(group.weight_image(w, j) for j in range(group.rank)) for w in group.elements]
        self.colour: dict[tuple, int] = {}
        for row in self.rays:
            for j, r in enumerate(row):
                if self.colour.setdefault(r, j) != j:
                    raise AssertionError("ray carries two colours")
        self.ids = {r: i for i, r in enumerate(sorted(self.colour))}


_RAYS: dict = {}


def ray_table(group: Group) -> RayTable:
    t = _RAYS.get(id(group))
    if t is None or t.group is not group:
        t = _RAYS[id(group)] = RayTable(group)
    return t


@dataclass(frozen=True)
class GenericVector:
    rho: tuple
    coeffs: tuple  # in the fundamental-weight basis
    certificate: tuple  # per colour: min |<rho, r>| over rays of that colour
    in_F: bool
    mode: str = "user"
    seed: int | None = None


def check_generic(group: Group, coeffs) -> tuple | None:
    """Certificate for ``rho = sum c_i omega_i``, or None if some ray is orthogonal."""
    coeffs = tuple(Fraction(c) for c in coeffs)
    rho = linalg.combination(coeffs, group.fundamental_weights)
    table = ray_table(group)
    best = [None] * group.rank
    for r, j in table.colour.items():
        v = abs(linalg.dot(rho, r))
        if v == 0:
            return None
        if best[j] is None or v < best[j]:
            best[j] = v
    return tuple(best)


def _make(group, coeffs, mode, seed=None) -> GenericVector | None:
    coeffs = tuple(Fraction(c) for c in coeffs)
    cert = check_generic(group, coeffs)
    if cert is None:
        return None
    rho = linalg.combination(coeffs, group.fundamental_weights)
    return GenericVector(rho, coeffs, cert, all(c > 0 for c in coeffs), mode, seed)


def _sigma_one_fixed(group: Group, w: Element) -> bool:
    return group.permutation(w)[0] == 1


def choose_rho(group: Group, mode: str = "seed", seed: int = 0, coeffs=None) -> GenericVector:
    """Pick a generic vector.

    ``seed``: random point of the fundamental chamber (coefficients are
    rationals with numerators and denominators in ``1..2^16``).
    ``spread``: type A only, ``c_i = M^(n-i)`` with ``M`` doubled until the
    positive chambers are exactly the permutations fixing 1.
    ``user``: the given coefficients, rejected if not generic.
    """
    if mode == "seed":
        rng = random.Random(seed)
        while True:
            cs = [Fraction(rng.randint(1, 2**16), rng.randint(1, 2**16)) for _ in range(group.rank)]
            gv = _make(group, cs, mode, seed)
            if gv is not None:
                return gv
    if mode == "spread":
        if group.symbol.family != "A":
            raise ValueError("spread mode is defined for type A only")
        n = group.rank
        M = 2
        target = {w for w in group.elements if _sigma_one_fixed(group, w)}
        while True:
            gv = _make(group, [M ** (n - i) for i in range(1, n + 1)], mode)
            if gv is not None and set(positive_chambers(group, gv)) == target:
                return gv
            M *= 2
    if mode == "user":
        if coeffs is None or len(coeffs) != group.rank:
            raise ValueError(f"user rho needs {group.rank} coefficients")
        gv = _make(group, coeffs, mode)
        if gv is None:
            raise NonGeneric(f"rho = {list(map(str, coeffs))} is orthogonal to a ray")
        return gv
    raise ValueError(f"unknown rho mode {mode!r}")


def _signs(group: Group, rho) -> list[tuple]:
    """``sign <rho, w(omega_j)>`` for every element and colour."""
    table = ray_table(group)
    memo = {}
    out = []
    for row in table.rays:
        s = []
        for r in row:
            v = memo.get(r)
            if v is None:
                d = linalg.dot(rho, r)
                v = memo[r] = (d > 0) - (d < 0)
            s.append(v)
        out.append(tuple(s))
    return out


def positive_chambers(group: Group, gv: GenericVector) -> list[Element]:
    signs = _signs(group, gv.rho)
    return [w for w in group.elements if all(x > 0 for x in signs[w.index])]


def negative_chambers(group: Group, gv: GenericVector) -> list[Element]:
    signs = _signs(group, gv.rho)
    return [w for w in group.elements if all(x < 0 for x in signs[w.index])]


@dataclass(frozen=True)
class Face:
    w: Element
    I: frozenset

    def dim(self, n: int) -> int:
        return n - len(self.I)


class PositiveComplex:
    def __init__(self, group: Group, gv: GenericVector):
        self.group = group
        self.rho = gv
        self.lattice = build_lattice(group)
        n = group.rank
        signs = _signs(group, gv.rho)
        self.faces: list[Face] = []
        for k in range(n):
            for I in combinations(range(n), k):
                Iset = frozenset(I)
                for w in group.elements:
                    if group.descents(w) & Iset:
                        continue
                    if all(signs[w.index][j] > 0 for j in range(n) if j not in Iset):
                        self.faces.append(Face(w, Iset))
        self.facets = [f.w for f in self.faces if not f.I]

    @property
    def n(self):
        return self.group.rank

    def rays(self, face: Face) -> list[tuple]:
        row = ray_table(self.group).rays[face.w.index]
        return [row[j] for j in range(self.n) if j not in face.I]

    def span(self, face: Face) -> Flat:
        """Span of a face, as ``w`` applied to the standard flat of ``I``."""
        g = self.group
        return self.lattice.by_bits[g.conjugate_bits(face.w, g.standard_bits(face.I))]

    def span_of_rays(self, rays) -> Flat:
        """Flat spanned by a set of rays, found by exact orthogonality."""
        g = self.group
        bits = 0
        for j, beta in enumerate(g.positive_roots):
            if all(linalg.dot(beta, r) == 0 for r in rays):
                bits |= 1 << j
        return self.lattice.by_bits[bits]

    def f_vector(self) -> list[int]:
        """``[f_-1, f_0, ..., f_(n-1)]`` with ``f_(i-1)`` the number of faces of linear dimension i."""
        f = [1] + [0] * self.n
        for face in self.faces:
            f[face.dim(self.n)] += 1
        return f

    def h_vector(self) -> list[int]:
        return h_from_f(self.f_vector())

    def face_counts_by_flat(self) -> dict[int, int]:
        out = {self.lattice.top.index: 1}  # the zero face
        for face in self.faces:
            i = self.span(face).index
            out[i] = out.get(i, 0) + 1
        return out

    # -- combinatorial checks -------------------------------------------
    def vertex_ids(self, w: Element) -> list[int]:
        t = ray_table(self.group)
        return [t.ids[r] for r in t.rays[w.index]]

    def is_balanced(self) -> bool:
        t = ray_table(self.group)
        for w in self.facets:
            if sorted(t.colour[r] for r in t.rays[w.index]) != list(range(self.n)):
                return False
        return True

    def panel_facet_counts(self) -> list[int]:
        facets = set(self.facets)
        g = self.group
        counts = []
        for face in self.faces:
            if len(face.I) == 1:
                (s,) = face.I
                other = g.mul(face.w, g.generators[s])
                counts.append((face.w in facets) + (other in facets))
        return counts

    def is_gallery_connected(self) -> bool:
        facets = set(self.facets)
        if not facets:
            return True
        g = self.group
        start = self.facets[0]
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for s in g.generators:
                    u = g.mul(w, s)
                    if u in facets and u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return seen == facets


def h_from_f(f: list[int]) -> list[int]:
    """Invert ``sum f_(i-1) z^i = sum h_i z^i (1+z)^(n-i)``."""
    n = len(f) - 1
    return [sum((-1) ** (k - i) * comb(n - i, k - i) * f[i] for i in range(k + 1)) for k in range(n + 1)]


def positive_complex(group: Group, gv: GenericVector) -> PositiveComplex:
    return PositiveComplex(group, gv)


def f_h_vectors(cx: PositiveComplex) -> tuple[list[int], list[int]]:
    f = cx.f_vector()
    return f, h_from_f(f)


def colored_f_character(cx: PositiveComplex) -> BurnsideElement:
    """``(-1)^n sum_f (-1)^dim(f) phi_Span(f)``, the zero face included."""
    rg = ring(cx.group)
    n = cx.n
    terms = [(cx.lattice.top, (-1) ** n)]
    terms += [(cx.span(f), (-1) ** (n + f.dim(n))) for f in cx.faces]
    return rg.from_flats(terms)


@dataclass
class Shelling:
    order: list[Element]
    new_panels: list[frozenset]  # colours s whose panel is not in an earlier facet
    checked_pairs: int = 0
    types: list[Flat] = field(default_factory=list)


def shelling_order(cx: PositiveComplex) -> Shelling:
    """Weak-order prefix shelling of the positive facets, with a verified certificate."""
    if not cx.rho.in_F:
        raise ValueError("shelling order needs rho in the fundamental chamber")
    g = cx.group
    order = g.weak_order_linear_extension(cx.facets)
    if order and order[0] != g.identity:
        raise ShellingViolation("first facet is not the fundamental chamber")
    verts = [frozenset(cx.vertex_ids(w)) for w in order]
    colour_vertex = [cx.vertex_ids(w) for w in order]
    new_panels = []
    pairs = 0
    for j, vj in enumerate(verts):
        panels = {s: vj - {colour_vertex[j][s]} for s in range(cx.n)}
        old = {s for s, p in panels.items() if any(p <= verts[i] for i in range(j))}
        new_panels.append(frozenset(range(cx.n)) - old)
        if j == 0:
            continue
        if not old:
            raise ShellingViolation(f"facet {order[j]!r} meets earlier facets in no panel")
        for i in range(j):
            pairs += 1
            inter = vj & verts[i]
            if not any(inter <= panels[s] for s in old):
                raise ShellingViolation(
                    f"facet {order[j]!r} meets {order[i]!r} outside the old panels"
                )
    return Shelling(order, new_panels, pairs)


def shelling_types(cx: PositiveComplex, shelling: Shelling) -> BurnsideElement:
    """Sum of ``phi_type(f)`` over facets; fills ``shelling.types``."""
    rg = ring(cx.group)
    t = ray_table(cx.group)
    types = []
    for w, new in zip(shelling.order, shelling.new_panels):
        # intersecting the new panels leaves the vertices of the remaining colours
        rays = [t.rays[w.index][j] for j in range(cx.n) if j not in new]
        types.append(cx.span_of_rays(rays))
    shelling.types = types
    return rg.from_flats((x, 1) for x in types)


def chamber_ascent_character(group: Group, gv: GenericVector, side: str = "positive") -> BurnsideElement:
    """Ascent sum over positive chambers, or descent sum over negative chambers."""
    if not gv.in_F:
        raise ValueError("needs rho in the fundamental chamber")
    rg = ring(group)
    if side == "positive":
        return rg.from_flats(
            (rg.lattice.standard_flat(group.ascents(w)), 1) for w in positive_chambers(group, gv)
        )
    if side == "negative":
        return rg.from_flats(
            (rg.lattice.standard_flat(group.descents(w)), 1) for w in negative_chambers(group, gv)
        )
    raise ValueError("side must be 'positive' or 'negative'")
