"""Exact linear algebra over the rationals.

Every rank, kernel and span computation in the package goes through these
helpers.  Vectors are lists of ``fractions.Fraction``; a linear map U -> V is
stored row-major as "row i = image of the i-th basis vector of U", so
composition reads left to right.  Eliminations never pivot by magnitude,
which keeps all basis choices deterministic for identical input order.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(n: int) -> list[Fraction]:
    return [ZERO] * n


def unit(n: int, i: int) -> list[Fraction]:
    v = [ZERO] * n
    v[i] = ONE
    return v


def vec_add(a, b):
    return [x + y for x, y in zip(a, b)]


def vec_scale(c, a):
    return [c * x for x in a]


def is_zero_vec(a) -> bool:
    return all(x == 0 for x in a)


def mat_apply(rows, vec):
    """Image of ``vec`` under the map whose i-th row is the image of e_i."""
    if not rows:
        return []
    out = zeros(len(rows[0]))
    for c, row in zip(vec, rows):
        if c:
            for j, x in enumerate(row):
                if x:
                    out[j] += c * x
    return out


def mat_mul(a_rows, b_rows):
    """Rows of the composite "apply a, then b"."""
    return [mat_apply(b_rows, row) for row in a_rows]


class RowSpan:
    """Incremental row space kept in reduced echelon form.

    Insertion order decides which coordinates become pivots, so every basis
    extracted from a RowSpan is reproducible run to run.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, vec) -> list[Fraction]:
        vec = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if c:
                for j in range(self.width):
                    if row[j]:
                        vec[j] -= c * row[j]
        return vec

    def add(self, vec) -> bool:
        """Insert ``vec``; True when it enlarged the span."""
        vec = self.reduce(vec)
        piv = next((j for j, x in enumerate(vec) if x), None)
        if piv is None:
            return False
        inv = ONE / vec[piv]
        vec = [x * inv for x in vec]
        for row in self.rows:
            c = row[piv]
            if c:
                for j in range(self.width):
                    if vec[j]:
                        row[j] -= c * vec[j]
        self.rows.append(vec)
        self.pivots.append(piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, vec) -> bool:
        return is_zero_vec(self.reduce(vec))


def rank(rows, width: int | None = None) -> int:
    if width is None:
        width = len(rows[0]) if rows else 0
    span = RowSpan(width)
    for r in rows:
        span.add(r)
    return span.rank


def kernel_basis(rows, width: int) -> list[list[Fraction]]:
    """Basis of {c : sum_i c_i * rows_i = 0}, deterministic echelon order."""
    m = len(rows)
    span = RowSpan(width + m)
    kernel = []
    for i, r in enumerate(rows):
        aug = list(r) + unit(m, i)
        res = span.reduce(aug)
        if is_zero_vec(res[:width]):
            kernel.append(res[width:])
        else:
            span.add(aug)
    return kernel


def solve_in_span(rows, target) -> list[Fraction] | None:
    """Coefficients c with sum_i c_i * rows_i = target, or None."""
    width = len(target)
    m = len(rows)
    span = RowSpan(width + m)
    for i, r in enumerate(rows):
        span.add(list(r) + unit(m, i))
    res = span.reduce(list(target) + zeros(m))
    if not is_zero_vec(res[:width]):
        return None
    return [-x for x in res[width:]]
