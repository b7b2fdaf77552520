"""Exact scalars and dense linear algebra over Q or GF(p).

Rational entries are Python ints or ``fractions.Fraction``; residues mod a
prime are ``ModP`` values.  Matrices are lists of row lists.  Nothing here
ever touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

Matrix = list[list]


@dataclass(frozen=True)
class ModP:
    """A residue class modulo a prime, kept reduced to [0, p)."""

    value: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> "ModP":
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixing residues mod {self.p} and mod {other.p}")
            return other
        if isinstance(other, Fraction):
            return ModP(other.numerator, self.p) / ModP(other.denominator, self.p)
        if isinstance(other, int):
            return ModP(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.value == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return ModP(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pow__(self, k: int):
        if k < 0:
            return ModP(1, self.p) / ModP(pow(self.value, -k, self.p), self.p)
        return ModP(pow(self.value, k, self.p), self.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return f"{self.value} mod {self.p}"


Scalar = Union[int, Fraction, ModP]


@dataclass(frozen=True)
class Field:
    """Coefficient field: Q when ``p`` is None, otherwise GF(p)."""

    p: int | None = None

    def __call__(self, x) -> Scalar:
        if self.p is None:
            if isinstance(x, ModP):
                raise TypeError("cannot coerce a residue into Q")
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError(f"residue mod {x.p} in field GF({self.p})")
            return x
        x = Fraction(x)
        return ModP(x.numerator, self.p) / ModP(x.denominator, self.p)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"


QQ = Field()


def GF(p: int) -> Field:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return Field(p)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def p_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n, v = abs(n), 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def scalar_to_str(x: Scalar) -> str:
    if isinstance(x, ModP):
        return str(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_from_str(text: str) -> Scalar:
    text = text.strip()
    if "mod" in text:
        value, p = text.split("mod")
        return ModP(int(value), int(p))
    return QQ(Fraction(text))


def normalize(x: Scalar) -> Scalar:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


# --- dense matrices ---------------------------------------------------------


def zeros(n: int, m: int, zero: Scalar = 0) -> Matrix:
    return [[zero] * m for _ in range(n)]


def identity(n: int, one: Scalar = 1, zero: Scalar = 0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    if not a:
        return []
    bt = list(zip(*b)) if b else []
    if not bt:
        return [[] for _ in a]
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * col[k] for k, x in nz), start=0 * col[0]) if nz else 0 * col[0]
                    for col in bt])
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v) if x), start=0 * v[0]) if v else 0 for row in a]


def add(a, b) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a, b) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a) -> Matrix:
    return [[c * x for x in row] for row in a]


def trace(a) -> Scalar:
    return sum((a[i][i] for i in range(len(a))), start=0)


def is_symmetric(a) -> bool:
    return all(a[i][j] == a[j][i] for i in range(len(a)) for j in range(i))


def mat_equal(a, b) -> bool:
    return len(a) == len(b) and all(list(x) == list(y) for x, y in zip(a, b))


def _integerize_rows(a: Sequence[Sequence]) -> Matrix:
    rows = []
    for row in a:
        fr = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        rows.append([int(x * den) for x in fr])
    return rows


def _has_modp(a: Sequence[Sequence]) -> bool:
    return any(isinstance(x, ModP) for row in a for x in row)


def bareiss_rank(a: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, nrows):
            mi = m[i]
            f = mi[col]
            mr = m[rank]
            for j in range(col + 1, ncols):
                mi[j] = (pv * mi[j] - f * mr[j]) // prev
            mi[col] = 0
        prev = pv
        rank += 1
    return rank


def rank(a: Sequence[Sequence]) -> int:
    if not a or not a[0]:
        return 0
    if _has_modp(a):
        return len(rref(a)[1])
    return bareiss_rank(_integerize_rows(a))


def determinant(a: Sequence[Sequence]) -> Scalar:
    """Exact determinant (fraction-free over Q)."""
    n = len(a)
    if n == 0:
        return 1
    if _has_modp(a):
        p_mod = next(x.p for row in a for x in row if isinstance(x, ModP))
        m = [[ModP(x, p_mod) if isinstance(x, int) else x for x in r] for r in a]
        det = ModP(1, p_mod)
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return ModP(0, p_mod)
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det = det * m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                f = m[i][c] * inv
                if f:
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return det
    rows = [[Fraction(x) for x in r] for r in a]
    dens = [lcm(*(x.denominator for x in r)) for r in rows]
    m = [[int(x * d) for x in r] for r, d in zip(rows, dens)]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k]), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    total_den = 1
    for d in dens:
        total_den *= d
    return normalize(Fraction(sign * m[n - 1][n - 1], total_den))


def rref(a: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan, exact)."""
    m = [[x if isinstance(x, ModP) else Fraction(x) for x in row] for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pivot_row = m[r]
        nz = [j for j in range(c, ncols) if pivot_row[j]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                row = m[i]
                for j in nz:
                    row[j] = row[j] - f * pivot_row[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [[normalize(x) for x in row] for row in m[:r]], pivots


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis (as rows) of the right kernel {v : a v = 0}."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return identity(ncols)
    red, piv = rref(a)
    free = [j for j in range(ncols) if j not in set(piv)]
    one = red[0][0] ** 0 if red and isinstance(red[0][0], ModP) else 1
    basis = []
    for f in free:
        v = [0 * one] * ncols
        v[f] = one
        for row, pc in zip(red, piv):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> list | None:
    """One solution x of a x = b, or None when inconsistent."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, piv = rref(aug)
    if piv and piv[-1] == n:
        return None
    x = [0] * n
    for row, pc in zip(red, piv):
        x[pc] = row[n]
    return x


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    one = a[0][0] ** 0 if n and isinstance(a[0][0], ModP) else 1
    aug = [list(row) + [one if i == j else 0 * one for j in range(n)] for i, row in enumerate(a)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def row_space_basis(a: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Rows of rref(a): a basis P of the row space with P[:, pivots] = identity."""
    return rref(a)


def to_field(a: Sequence[Sequence], field: Field) -> Matrix:
    return [[field(x) for x in row] for row in a]


def stack(blocks: Iterable[Sequence[Sequence]]) -> Matrix:
    out: Matrix = []
    for blk in blocks:
        out.extend(list(row) for row in blk)
    return out
