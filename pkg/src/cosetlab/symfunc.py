"""Homogeneous symmetric functions with exact rational coefficients.

Four bases are supported: ``H`` (complete homogeneous), ``E`` (elementary),
``P`` (power sums) and ``S`` (Schur).  Conversions go through the Schur
basis using Kostka numbers counted from semistandard tableaux; degrees are
capped at :data:`MAX_DEGREE` for conversions.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping

from . import linalg

BASES = ("H", "E", "P", "S")
MAX_DEGREE = 8

Partition = tuple


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple:
    """Partitions of n as weakly decreasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def z_lambda(lam: Partition) -> int:
    out = 1
    for k in set(lam):
        m = lam.count(k)
        out *= k**m * factorial(m)
    return out


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    # remove a horizontal strip of size `last` holding the largest letter
    for nu in _horizontal_strips(lam, last):
        total += kostka(nu, rest)
    return total


def _horizontal_strips(lam: Partition, k: int):
    """Shapes ``nu`` with ``lam / nu`` a horizontal strip of size k."""
    lam = list(lam)
    rows = len(lam)

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        nxt = lam[i + 1] if i + 1 < rows else 0
        for r in range(0, min(left, lam[i] - nxt) + 1):
            yield from rec(i + 1, left - r, acc + [lam[i] - r])

    yield from rec(0, k, [])


def _check_degree(n):
    if n > MAX_DEGREE:
        raise ValueError(f"basis conversion limited to degree {MAX_DEGREE}")


@lru_cache(maxsize=None)
def _h_in_p(n: int) -> dict:
    """``h_mu`` in the power-sum basis, for every partition mu of n."""
    single = {}
    for k in range(1, n + 1):
        single[k] = {lam: Fraction(1, z_lambda(lam)) for lam in partitions(k)}
    out = {}
    for mu in partitions(n):
        acc = {(): Fraction(1)}
        for part in mu:
            nxt: dict = {}
            for a, ca in acc.items():
                for b, cb in single[part].items():
                    key = merge(a, b)
                    nxt[key] = nxt.get(key, 0) + ca * cb
            acc = nxt
        out[mu] = acc
    return out


@lru_cache(maxsize=None)
def _to_schur(basis: str, n: int) -> dict:
    """Matrix ``{mu: {lam: coeff}}`` expressing ``basis_mu`` in Schur functions."""
    _check_degree(n)
    parts = partitions(n)
    if basis == "S":
        return {mu: {mu: Fraction(1)} for mu in parts}
    if basis == "H":
        return {mu: {lam: Fraction(kostka(lam, mu)) for lam in parts if kostka(lam, mu)} for mu in parts}
    if basis == "E":
        return {mu: {lam: Fraction(kostka(conjugate(lam), mu)) for lam in parts if kostka(conjugate(lam), mu)}
                for mu in parts}
    if basis == "P":
        hp = _h_in_p(n)
        mat = [[hp[mu].get(lam, Fraction(0)) for lam in parts] for mu in parts]
        p_in_h = linalg.inverse(mat)  # row lam: p_lam in terms of h_mu
        hs = _to_schur("H", n)
        out = {}
        for i, lam in enumerate(parts):
            acc: dict = {}
            for j, mu in enumerate(parts):
                c = p_in_h[i][j]
                if c:
                    for nu, v in hs[mu].items():
                        acc[nu] = acc.get(nu, 0) + c * v
            out[lam] = {k: v for k, v in acc.items() if v}
        return out
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _from_schur(basis: str, n: int) -> dict:
    parts = partitions(n)
    fwd = _to_schur(basis, n)
    mat = [[fwd[mu].get(lam, Fraction(0)) for lam in parts] for mu in parts]
    inv = linalg.inverse(mat)
    return {lam: {mu: inv[i][j] for j, mu in enumerate(parts) if inv[i][j]} for i, lam in enumerate(parts)}


class SymFunc:
    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: Mapping[Partition, object] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.coeffs = {tuple(k): Fraction(v) for k, v in (coeffs or {}).items() if v}
        if len({sum(k) for k in self.coeffs}) > 1:
            raise ValueError("symmetric function must be homogeneous")

    @classmethod
    def monomial(cls, basis: str, lam) -> "SymFunc":
        return cls(basis, {tuple(lam): 1})

    @property
    def degree(self) -> int | None:
        for k in self.coeffs:
            return sum(k)
        return None

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs.get(tuple(lam), Fraction(0))

    def to(self, basis: str) -> "SymFunc":
        if basis == self.basis or not self.coeffs:
            return SymFunc(basis, self.coeffs)
        n = self.degree
        fwd = _to_schur(self.basis, n)
        schur: dict = {}
        for mu, c in self.coeffs.items():
            for lam, v in fwd[mu].items():
                schur[lam] = schur.get(lam, 0) + c * v
        if basis == "S":
            return SymFunc("S", schur)
        back = _from_schur(basis, n)
        out: dict = {}
        for lam, c in schur.items():
            for mu, v in back[lam].items():
                out[mu] = out.get(mu, 0) + c * v
        return SymFunc(basis, out)

    def omega(self) -> "SymFunc":
        if self.basis == "H":
            return SymFunc("E", self.coeffs)
        if self.basis == "E":
            return SymFunc("H", self.coeffs)
        if self.basis == "S":
            return SymFunc("S", {conjugate(k): v for k, v in self.coeffs.items()})
        return SymFunc("P", {k: (-1) ** (sum(k) - len(k)) * v for k, v in self.coeffs.items()})

    def dim(self) -> Fraction:
        """``<f, H_{1^n}>``: the dimension of the corresponding character."""
        if not self.coeffs:
            return Fraction(0)
        n = self.degree
        ones = (1,) * n
        return sum((c * kostka(lam, ones) for lam, c in self.to("S").coeffs.items()), Fraction(0))

    def _coerce(self, other: "SymFunc") -> "SymFunc":
        return other if other.basis == self.basis else other.to(self.basis)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other.to(self.basis) if other.basis != self.basis else other
        o = self._coerce(other)
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SymFunc(self.basis, out)

    def __neg__(self):
        return SymFunc(self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            # products are taken in H (or E, P), where they are concatenation
            basis = self.basis if self.basis in ("H", "E", "P") else "H"
            a = self.to(basis) if self.basis != basis else self
            b = other if other.basis == basis or not other.coeffs else other.to(basis)
            out: dict = {}
            for ka, va in a.coeffs.items():
                for kb, vb in b.coeffs.items():
                    k = merge(ka, kb)
                    out[k] = out.get(k, 0) + va * vb
            return SymFunc(basis, out)
        c = Fraction(other)
        return SymFunc(self.basis, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return not self.coeffs and not other.coeffs
        return self.coeffs == self._coerce(other).coeffs

    def __repr__(self):
        if not self.coeffs:
            return f"0[{self.basis}]"
        terms = []
        for k in sorted(self.coeffs, reverse=True):
            terms.append(f"{self.coeffs[k]}*{self.basis}{list(k)}")
        return " + ".join(terms)


def multinomial(n: int, parts) -> int:
    return factorial(n) // prod(factorial(p) for p in parts)
