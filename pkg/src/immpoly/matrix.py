"""Square matrices over the rationals, plus exact determinant and permanent.

The determinant and permanent here are deliberately independent of the
immanant kernels (Bareiss elimination and Ryser's formula) so they can
serve as cross-checks.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, List, Sequence, Tuple, Union

Number = Union[int, Fraction, str]

__all__ = [
    "Number",
    "as_fraction",
    "parse_rational",
    "format_rational",
    "ExactMatrix",
    "determinant",
    "permanent",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` with optional sign; decimals are rejected."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"not an exact rational: {text!r} (use p/q)")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ValueError("zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def as_fraction(x: Number) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def format_rational(x: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class ExactMatrix:
    """Immutable ``n x n`` matrix of Fractions."""

    __slots__ = ("n", "_rows")

    def __init__(self, rows: Iterable[Iterable[Number]]):
        data = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        n = len(data)
        if any(len(row) != n for row in data):
            raise ValueError("matrix must be square")
        self.n = n
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls([[0] * n for _ in range(n)])

    @property
    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._rows)
        return f"ExactMatrix([{body}])"

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(self.n)), Fraction(0))

    def shifted(self, c: Number) -> "ExactMatrix":
        """``self + c*I``."""
        c = as_fraction(c)
        return ExactMatrix(
            [[x + c if i == j else x for j, x in enumerate(row)] for i, row in enumerate(self._rows)]
        )

    def scaled(self, c: Number) -> "ExactMatrix":
        c = as_fraction(c)
        return ExactMatrix([[c * x for x in row] for row in self._rows])

    def char_matrix(self, x: Number) -> "ExactMatrix":
        """``x*I - self``."""
        return self.scaled(-1).shifted(x)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        """Rows and columns taken in ascending index order."""
        if len(rows) != len(cols):
            raise ValueError("row and column selections differ in size")
        rs, cs = sorted(rows), sorted(cols)
        return ExactMatrix([[self._rows[i][j] for j in cs] for i in rs])

    def permuted(self, perm: Sequence[int]) -> "ExactMatrix":
        """``P M P^T`` where row ``i`` moves to ``perm[i]``."""
        inv = [0] * self.n
        for i, p in enumerate(perm):
            inv[p] = i
        return ExactMatrix([[self._rows[inv[i]][inv[j]] for j in range(self.n)] for i in range(self.n)])

    def common_denominator(self) -> int:
        return lcm(1, *(x.denominator for row in self._rows for x in row))

    def integer_rows(self) -> Tuple[int, List[List[int]]]:
        """``(L, N)`` with ``N = L * self`` integral and ``L`` the lcm of denominators."""
        L = self.common_denominator()
        return L, [[int(x * L) for x in row] for row in self._rows]


def determinant(M: ExactMatrix) -> Fraction:
    """Bareiss fraction-free elimination on the integer-scaled matrix."""
    n = M.n
    if n == 0:
        return Fraction(1)
    L, a = M.integer_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], L**n)


def permanent(M: ExactMatrix) -> Fraction:
    """Ryser's inclusion-exclusion formula, O(2^n n^2)."""
    n = M.n
    if n == 0:
        return Fraction(1)
    L, a = M.integer_rows()
    total = 0
    for size in range(1, n + 1):
        sgn = (-1) ** size
        for cols in combinations(range(n), size):
            p = 1
            for row in a:
                s = 0
                for j in cols:
                    s += row[j]
                p *= s
                if p == 0:
                    break
            total += sgn * p
    return Fraction((-1) ** n * total, L**n)
