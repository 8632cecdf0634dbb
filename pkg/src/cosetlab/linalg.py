"""Small exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction` (ints are accepted on
input).  Everything here is dense and meant for dimension <= 9.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def combination(coeffs: Sequence, vectors: Sequence[Sequence]) -> Vector:
    dim = len(vectors[0])
    out = [Fraction(0)] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i in range(dim):
                out[i] += c * v[i]
    return tuple(out)


class Echelon:
    """Incrementally maintained row-echelon basis of a subspace."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, v: Sequence) -> list[Fraction]:
        r = [Fraction(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            c = r[p]
            if c:
                for i in range(p, self.dim):
                    r[i] -= c * row[i]
        return r

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def insert(self, v: Sequence) -> bool:
        """Add ``v`` to the span; return False if it was already in it."""
        r = self.reduce(v)
        for p in range(self.dim):
            if r[p]:
                break
        else:
            return False
        inv = 1 / r[p]
        r = [x * inv for x in r]
        for row, q in zip(self.rows, self.pivots):
            c = row[p]
            if c:
                for i in range(self.dim):
                    row[i] -= c * r[i]
        self.rows.append(r)
        self.pivots.append(p)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    e = Echelon(len(vectors[0]))
    for v in vectors:
        e.insert(v)
    return e.rank


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of ``{x : row . x = 0 for every row}``."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    red, pivots = rref(aug, n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def sparse_rank(rows: Iterable[dict]) -> int:
    """Rank over Q of a sparse matrix given as ``{column: value}`` rows.

    Eliminates with exact rationals, picking the pivot column of each row
    as its smallest key; boundary matrices of order complexes keep fill-in low.
    """
    pivot_rows: dict[int, dict] = {}
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        while r:
            p = min(r)
            prow = pivot_rows.get(p)
            if prow is None:
                pivot_rows[p] = r
                break
            f = r[p] / prow[p]
            for k, v in prow.items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivot_rows)
