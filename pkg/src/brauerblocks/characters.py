"""Weyl characters of type C_m at the level of formal combinations.

chi_0(mu) for an arbitrary integer weight mu straightens to +-chi_0 of a
dominant weight or to 0.  Brauer's formula chi_0(1) * chi_0(mu) =
sum_i chi_0(mu + eps_i) + chi_0(mu - eps_i) then gives the decomposition of
the tensor powers of the natural module E.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from .partitions import (Partition, format_partition, is_partition, label_key,
                         make_partition, partitions_of, specht_dimension)


@dataclass(frozen=True)
class WeightVector:
    """A weight in (1/2)Z^m stored by its doubled coordinates."""

    doubled: tuple[int, ...]

    @classmethod
    def from_ints(cls, coords: Iterable[int]) -> "WeightVector":
        return cls(tuple(2 * int(x) for x in coords))

    @classmethod
    def from_fractions(cls, coords: Iterable) -> "WeightVector":
        out = []
        for x in coords:
            y = 2 * Fraction(x)
            if y.denominator != 1:
                raise ValueError(f"{x} is not a half integer")
            out.append(int(y))
        return cls(tuple(out))

    @property
    def m(self) -> int:
        return len(self.doubled)

    def is_integral(self) -> bool:
        return all(x % 2 == 0 for x in self.doubled)

    def ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"weight {self} has half-integer coordinates")
        return tuple(x // 2 for x in self.doubled)

    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a + b for a, b in zip(self.doubled, other.doubled, strict=True)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a - b for a, b in zip(self.doubled, other.doubled, strict=True)))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.coords()) + ")"


def rho(m: int) -> tuple[int, ...]:
    return tuple(range(m, 0, -1))


def sort_sign(values: Sequence[int]) -> int:
    """Sign of the permutation sorting ``values`` (distinct) into descending order."""
    inversions = sum(1 for i in range(len(values)) for j in range(i + 1, len(values))
                     if values[i] < values[j])
    return -1 if inversions % 2 else 1


def straighten_shifted(x: Sequence[int]) -> tuple[int, tuple[int, ...] | None]:
    """Straighten a vector already shifted by rho: returns (sign, sorted absolute values)."""
    absval = [abs(v) for v in x]
    if 0 in absval or len(set(absval)) < len(absval):
        return 0, None
    negatives = sum(1 for v in x if v < 0)
    sign = sort_sign(absval) * (-1 if negatives % 2 else 1)
    return sign, tuple(sorted(absval, reverse=True))


def straighten(mu) -> tuple[int, Partition | None]:
    """Write chi_0(mu) as sign * chi_0(lambda) with lambda dominant, or (0, None)."""
    coords = mu.ints() if isinstance(mu, WeightVector) else tuple(int(v) for v in mu)
    m = len(coords)
    shifted = [a + b for a, b in zip(coords, rho(m))]
    sign, ordered = straighten_shifted(shifted)
    if not sign:
        return 0, None
    return sign, make_partition(a - b for a, b in zip(ordered, rho(m)))


@dataclass
class CharacterCombination:
    """Finite integer combination of chi_0(lambda) for Sp_{2m}."""

    m: int
    terms: dict[Partition, int] = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for lam, c in self.terms.items():
            lam = make_partition(lam)
            if len(lam) > self.m:
                raise ValueError(f"{lam} has more than m = {self.m} parts")
            if c:
                clean[lam] = clean.get(lam, 0) + int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def single(cls, lam: Partition, m: int, coeff: int = 1) -> "CharacterCombination":
        return cls(m, {tuple(lam): coeff})

    def add_term(self, lam: Partition, coeff: int) -> None:
        new = self.terms.get(lam, 0) + coeff
        if new:
            self.terms[lam] = new
        else:
            self.terms.pop(lam, None)

    def __add__(self, other: "CharacterCombination") -> "CharacterCombination":
        self._check(other)
        out = CharacterCombination(self.m, dict(self.terms))
        for lam, c in other.terms.items():
            out.add_term(lam, c)
        return out

    def __sub__(self, other: "CharacterCombination") -> "CharacterCombination":
        return self + other.scale(-1)

    def scale(self, c: int) -> "CharacterCombination":
        return CharacterCombination(self.m, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, CharacterCombination) and self.m == other.m and self.terms == other.terms

    def _check(self, other: "CharacterCombination") -> None:
        if self.m != other.m:
            raise ValueError(f"rank mismatch {self.m} != {other.m}")

    def coefficient(self, lam: Partition) -> int:
        return self.terms.get(tuple(lam), 0)

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda kv: label_key(kv[0]))

    def to_json(self) -> list[dict]:
        return [{"lambda": list(lam), "coeff": c} for lam, c in self.items()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*chi{format_partition(lam)}" for lam, c in self.items())


def multiply_by_E(chi: CharacterCombination) -> CharacterCombination:
    """chi_0(1) * chi via Brauer's formula, valid while every |mu| < m."""
    m = chi.m
    out = CharacterCombination(m)
    for mu, c in chi.terms.items():
        if sum(mu) >= m:
            raise ValueError(f"|{format_partition(mu)}| = {sum(mu)} must be < m = {m}")
        base = list(mu) + [0] * (m - len(mu))
        for i in range(m):
            for step in (1, -1):
                nu = list(base)
                nu[i] += step
                if is_partition(nu):
                    out.add_term(make_partition(nu), c)
    return out


def multiply_by_E_straightened(chi: CharacterCombination) -> CharacterCombination:
    """Brauer's formula with every shift straightened; no restriction on sizes."""
    m = chi.m
    out = CharacterCombination(m)
    for mu, c in chi.terms.items():
        base = list(mu) + [0] * (m - len(mu))
        for i in range(m):
            for step in (1, -1):
                nu = list(base)
                nu[i] += step
                sign, lam = straighten(nu)
                if sign:
                    out.add_term(lam, sign * c)
    return out


def tensor_power_decomposition(r: int, m: int) -> CharacterCombination:
    """chi_0(1)^r by iterating Brauer's formula from chi_0(empty)."""
    if m <= r:
        raise ValueError(f"need m > r, got m = {m}, r = {r}")
    chi = CharacterCombination.single((), m)
    for _ in range(r):
        chi = multiply_by_E(chi)
    return chi


def closed_form_coefficient(lam: Partition, r: int) -> int:
    """r!/(2^s s! t!) * dim S(lam), or 0 unless |lam| <= r with r - |lam| even."""
    t = sum(lam)
    if t > r or (r - t) % 2:
        return 0
    s = (r - t) // 2
    return factorial(r) // (2**s * factorial(s) * factorial(t)) * specht_dimension(tuple(lam))


def psi(r: int, m: int) -> CharacterCombination:
    """sum over |lam| = r of dim S(lam) * chi_0(lam)."""
    if r < 0 or r > m:
        raise ValueError(f"need 0 <= r <= m, got r = {r}, m = {m}")
    return CharacterCombination(m, {lam: specht_dimension(lam) for lam in partitions_of(r)})


def positive_coroot_pairings(x: Sequence[Fraction | int]) -> list:
    """<x, alpha^vee> over the positive roots of C_m (coroot eps_i for 2 eps_i)."""
    m = len(x)
    out = list(x)
    for i in range(m):
        for j in range(i + 1, m):
            out.append(x[i] - x[j])
            out.append(x[i] + x[j])
    return out


def weyl_dimension(lam: Partition, m: int) -> int:
    if len(lam) > m:
        raise ValueError(f"{lam} has more than m = {m} parts")
    lam = list(lam) + [0] * (m - len(lam))
    shifted = [a + b for a, b in zip(lam, rho(m))]
    num = den = 1
    for a, b in zip(positive_coroot_pairings(shifted), positive_coroot_pairings(rho(m))):
        num *= a
        den *= b
    value = Fraction(num, den)
    assert value.denominator == 1
    return int(value)


def mass(chi: CharacterCombination) -> int:
    return sum(c * weyl_dimension(lam, chi.m) for lam, c in chi.terms.items())


def from_json(obj: Sequence[Mapping], m: int) -> CharacterCombination:
    return CharacterCombination(m, {tuple(t["lambda"]): int(t["coeff"]) for t in obj})
