"""Small dense exact linear algebra over Q or a prime field.

Everything the oracle needs: reduced row echelon form, nullspaces, and an
incrementally maintained row-space for span-membership queries.  Matrices
are lists of coefficient lists; entries start in {-1, 0, +1} and stay exact
(Fractions in characteristic 0, ints mod p otherwise).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class Rationals:
    char = 0

    @staticmethod
    def of(n: int) -> Fraction:
        return Fraction(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0


class PrimeField:
    def __init__(self, p: int):
        self.char = p

    def of(self, n: int) -> int:
        return n % self.char

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def div(self, a, b):
        return (a * pow(b, self.char - 2, self.char)) % self.char

    def neg(self, a):
        return (-a) % self.char

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0


def field_for(char: int):
    return Rationals() if char == 0 else PrimeField(char)


def rref(rows: list[list], field) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (nonzero rows, pivot
    columns).  Deterministic: pivots scan columns left to right."""
    rows = [row for row in rows if any(not field.is_zero(x) for x in row)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if not field.is_zero(rows[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != field.of(1):
            rows[r] = [field.div(x, pv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                factor = rows[i][c]
                rows[i] = [field.sub(x, field.mul(factor, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows: list[list], field) -> int:
    return len(rref([list(r) for r in rows], field)[0])


def nullspace(rows: list[list], ncols: int, field) -> list[list]:
    """Basis of {x : M x = 0}, one vector per free column, in column order;
    each vector has a 1 in its free column (canonical)."""
    reduced, pivots = rref([list(r) for r in rows], field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    one = field.of(1)
    zero = field.of(0)
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for row, pc in zip(reduced, pivots):
            vec[pc] = field.neg(row[fc])
        basis.append(vec)
    return basis


class SpanBasis:
    """Row space maintained in reduced form for membership tests."""

    def __init__(self, ncols: int, field):
        self.ncols = ncols
        self.field = field
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def _reduce(self, vec: Sequence) -> list:
        field = self.field
        vec = list(vec)
        for row, pc in zip(self.rows, self.pivots):
            factor = vec[pc]
            if not field.is_zero(factor):
                vec = [field.sub(x, field.mul(factor, y))
                       for x, y in zip(vec, row)]
        return vec

    def add(self, vec: Sequence) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        field = self.field
        vec = self._reduce(vec)
        for c in range(self.ncols):
            if not field.is_zero(vec[c]):
                pv = vec[c]
                if pv != field.of(1):
                    vec = [field.div(x, pv) for x in vec]
                for i, row in enumerate(self.rows):
                    factor = row[c]
                    if not field.is_zero(factor):
                        self.rows[i] = [field.sub(x, field.mul(factor, y))
                                        for x, y in zip(row, vec)]
                at = 0
                while at < len(self.pivots) and self.pivots[at] < c:
                    at += 1
                self.rows.insert(at, vec)
                self.pivots.insert(at, c)
                return True
        return False

    def contains(self, vec: Sequence) -> bool:
        return all(self.field.is_zero(x) for x in self._reduce(vec))

    @property
    def dimension(self) -> int:
        return len(self.rows)
