"""The parabolic Burnside ring: integer combinations of induced trivial characters.

A :class:`BurnsideElement` is keyed by orbit labels of the intersection
lattice (see :attr:`cosetlab.flats.Lattice.orbit_label`); the key ``L``
stands for ``phi_X = Ind_{W_X}^W 1`` with ``X`` any flat in that orbit.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Mapping

from .coxgroup import Element, Group
from .flats import Flat, Lattice, build_lattice


class BurnsideElement:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {k: int(v) for k, v in (coeffs or {}).items() if v}

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BurnsideElement(out)

    def __neg__(self):
        return BurnsideElement({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c: int):
        return BurnsideElement({k: c * v for k, v in self.coeffs.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        return isinstance(other, BurnsideElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, label: int) -> int:
        return self.coeffs.get(label, 0)

    def items(self):
        return sorted(self.coeffs.items())

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.coeffs.values())

    def __repr__(self):
        terms = " + ".join(f"{v}*phi[{k:#x}]" for k, v in self.items())
        return f"BurnsideElement({terms or '0'})"


class BurnsideRing:
    """Burnside-ring computations for one group."""

    def __init__(self, group: Group, lattice: Lattice | None = None):
        self.group = group
        self.lattice = lattice or build_lattice(group)

    # -- basis ----------------------------------------------------------
    def label(self, x: Flat) -> int:
        return self.lattice.orbit_label[x.index]

    def phi(self, x: Flat) -> BurnsideElement:
        return BurnsideElement({self.label(x): 1})

    def phi_subset(self, subset) -> BurnsideElement:
        return self.phi(self.lattice.standard_flat(subset))

    def from_flats(self, terms) -> BurnsideElement:
        """Sum of ``c * phi_X`` over ``(X, c)`` pairs."""
        out: dict[int, int] = {}
        for x, c in terms:
            lab = self.label(x)
            out[lab] = out.get(lab, 0) + c
        return BurnsideElement(out)

    @property
    def trivial(self) -> BurnsideElement:
        return self.phi(self.lattice.top)

    @property
    def regular(self) -> BurnsideElement:
        return self.phi(self.lattice.bottom)

    # -- xi -------------------------------------------------------------
    def xi(self) -> BurnsideElement:
        """Sum over all flats of ``(-1)^n mu(X) phi_X``."""
        L, sgn = self.lattice, (-1) ** self.group.rank
        return self.from_flats((x, sgn * L.mobius[x.index]) for x in L)

    def xi_by_orbits(self) -> BurnsideElement:
        """Orbit form: ``(-1)^n mu(X) [W : N(W_X)]`` on each representative."""
        L, sgn = self.lattice, (-1) ** self.group.rank
        return BurnsideElement(
            {self.label(x): sgn * L.mobius[x.index] * L.orbit_size(x) for x in L.theta}
        )

    def whitney_component(self, k: int) -> BurnsideElement:
        L = self.lattice
        if not 0 <= k <= self.group.rank:
            raise ValueError(f"k must lie in 0..{self.group.rank}")
        return self.from_flats(
            (x, (-1) ** k * L.mobius[x.index]) for x in L if L.dim(x) == k
        )

    # -- sign twist (Solomon) ------------------------------------------
    @cached_property
    def _solomon_images(self) -> dict[int, BurnsideElement]:
        out = {}
        for lab, I in self.lattice.standard_realization.items():
            acc = BurnsideElement()
            for k in range(len(I) + 1):
                for J in combinations(I, k):
                    acc = acc + (-1) ** k * self.phi_subset(J)
            out[lab] = acc
        return out

    def tensor_sign(self, b: BurnsideElement) -> BurnsideElement:
        out = BurnsideElement()
        for lab, c in b.coeffs.items():
            out = out + c * self._solomon_images[lab]
        return out

    # -- characters -----------------------------------------------------
    @cached_property
    def _class_counts(self) -> dict[int, list[int]]:
        """Orbit label -> number of elements of each conjugacy class inside W_X."""
        g, L = self.group, self.lattice
        g.conjugacy_classes
        out = {}
        for lab in L.orbits:
            counts = [0] * len(g.conjugacy_classes)
            for i in L.subgroup(lab):
                counts[g._class_of[i]] += 1
            out[lab] = counts
        return out

    def fixed_cosets(self, lab: int, w: Element) -> int:
        """Number of cosets ``uW_X`` fixed by ``w`` (X in the orbit ``lab``)."""
        g = self.group
        c = g.class_of(w)
        size_cl = len(g.conjugacy_classes[c])
        size_x = len(self.lattice.subgroup(lab))
        num = g.order * self._class_counts[lab][c]
        assert num % (size_cl * size_x) == 0
        return num // (size_cl * size_x)

    def char_value(self, b: BurnsideElement, w: Element) -> int:
        return sum(c * self.fixed_cosets(lab, w) for lab, c in b.coeffs.items())

    def class_representatives(self) -> list[Element]:
        return [self.group.elements[c[0]] for c in self.group.conjugacy_classes]

    def class_function(self, b: BurnsideElement) -> dict[int, int]:
        """Character values on conjugacy classes (keyed by representative index)."""
        return {w.index: self.char_value(b, w) for w in self.class_representatives()}

    def inner_product(self, f: Mapping[int, int], h: Mapping[int, int]) -> int:
        """``<f, h>`` for real class functions given on class representatives."""
        g = self.group
        total = 0
        for cl in g.conjugacy_classes:
            total += len(cl) * f[cl[0]] * h[cl[0]]
        assert total % g.order == 0
        return total // g.order

    def sign_function(self) -> dict[int, int]:
        return {w.index: self.group.sign(w) for w in self.class_representatives()}

    def dim(self, b: BurnsideElement) -> int:
        g = self.group
        return sum(c * g.order // len(self.lattice.subgroup(lab)) for lab, c in b.coeffs.items())

    def multiplicities(self, b: BurnsideElement) -> tuple[int, int, int]:
        """``(<b, 1>, <b, sign>, dim b)``."""
        triv = sum(b.coeffs.values())
        sign = sum(self.tensor_sign(b).coeffs.values())
        return triv, sign, self.dim(b)


_CACHE: dict = {}


def ring(group: Group) -> BurnsideRing:
    r = _CACHE.get(id(group))
    if r is None or r.group is not group:
        r = _CACHE[id(group)] = BurnsideRing(group)
    return r


def phi(group: Group, x: Flat) -> BurnsideElement:
    return ring(group).phi(x)


def xi(group: Group) -> BurnsideElement:
    return ring(group).xi()


def whitney_component(group: Group, k: int) -> BurnsideElement:
    return ring(group).whitney_component(k)


def tensor_sign(group: Group, b: BurnsideElement) -> BurnsideElement:
    return ring(group).tensor_sign(b)


def char_value(group: Group, b: BurnsideElement, w: Element) -> int:
    return ring(group).char_value(b, w)


def multiplicities(group: Group, b: BurnsideElement) -> tuple[int, int, int]:
    return ring(group).multiplicities(b)
