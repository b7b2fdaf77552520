"""Star action of signed permutations and the block classification.

With rho_hat = (-delta/2, -delta/2 - 1, ..., -delta/2 - (r-1)) the star
action is w * x = w(x + rho_hat) - rho_hat.  Everything is computed in
doubled coordinates so that rho_hat is integral for odd delta.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .partitions import (Partition, contains, enumerate_labels, format_partition, label_key,
                         make_partition, pad, transpose)

SignedPerm = tuple[int, ...]


@dataclass(frozen=True)
class StarContext:
    r: int
    delta: int

    @property
    def rho_hat_doubled(self) -> tuple[int, ...]:
        return tuple(-self.delta - 2 * i for i in range(self.r))

    def shifted(self, lam: Sequence[int]) -> tuple[int, ...]:
        """Doubled coordinates of lam + rho_hat."""
        return tuple(2 * a + b for a, b in zip(pad(lam, self.r), self.rho_hat_doubled))

    def unshift(self, x2: Sequence[int]) -> tuple[int, ...]:
        out = []
        for a, b in zip(x2, self.rho_hat_doubled):
            if (a - b) % 2:
                raise ValueError("vector is not in the shifted integer lattice")
            out.append((a - b) // 2)
        return tuple(out)


def signed_apply(w: SignedPerm, x: Sequence) -> tuple:
    """y[|w_i| - 1] = sign(w_i) * x[i]."""
    y = [None] * len(w)
    for i, wi in enumerate(w):
        y[abs(wi) - 1] = x[i] if wi > 0 else -x[i]
    return tuple(y)


def signed_compose(w1: SignedPerm, w2: SignedPerm) -> SignedPerm:
    """The signed permutation acting as w1 after w2."""
    out = []
    for wi in w2:
        target = w1[abs(wi) - 1]
        out.append(target if wi > 0 else -target)
    return tuple(out)


def is_signed_perm(w: Sequence[int]) -> bool:
    return sorted(abs(x) for x in w) == list(range(1, len(w) + 1))


def is_type_d(w: SignedPerm) -> bool:
    return sum(1 for x in w if x < 0) % 2 == 0


def signed_perms(r: int, type_d: bool = True) -> Iterator[SignedPerm]:
    for perm in permutations(range(1, r + 1)):
        for signs in product((1, -1), repeat=r):
            w = tuple(s * x for s, x in zip(signs, perm))
            if not type_d or is_type_d(w):
                yield w


def reflection_plus(r: int, i: int, j: int) -> SignedPerm:
    """s_alpha for alpha = eps_i + eps_j (0-based): x_i -> -x_j, x_j -> -x_i."""
    w = list(range(1, r + 1))
    w[i], w[j] = -(j + 1), -(i + 1)
    return tuple(w)


def star_apply(w: SignedPerm, x: Sequence[int], ctx: StarContext) -> tuple[int, ...]:
    """w * x = w(x + rho_hat) - rho_hat for an integer vector x of length r."""
    if len(w) != ctx.r or not is_signed_perm(w):
        raise ValueError(f"{w} is not a signed permutation of rank {ctx.r}")
    x2 = tuple(2 * a + b for a, b in zip(x, ctx.rho_hat_doubled, strict=True))
    return ctx.unshift(signed_apply(w, x2))


@dataclass(frozen=True, order=True)
class OrbitInvariant:
    abs_multiset: tuple[int, ...]
    has_zero: bool
    neg_parity: int

    def to_json(self) -> dict:
        return {"abs_doubled": list(self.abs_multiset), "has_zero": self.has_zero,
                "neg_parity": self.neg_parity}


def invariant_of_vector(x2: Sequence[int]) -> OrbitInvariant:
    has_zero = 0 in x2
    parity = 0 if has_zero else sum(1 for v in x2 if v < 0) % 2
    return OrbitInvariant(tuple(sorted(abs(v) for v in x2)), has_zero, parity)


def orbit_invariant(lam: Partition, ctx: StarContext) -> OrbitInvariant:
    if len(lam) > ctx.r:
        raise ValueError(f"l({format_partition(lam)}) exceeds r = {ctx.r}")
    return invariant_of_vector(ctx.shifted(lam))


def orbit_partitions(lam: Partition, ctx: StarContext) -> list[Partition]:
    """All partitions with at most r parts in the star W(D_r)-orbit of lam."""
    inv = orbit_invariant(lam, ctx)
    found = set()
    for signs in product((1, -1), repeat=ctx.r):
        y = [s * v for s, v in zip(signs, inv.abs_multiset)]
        if any(s < 0 and v == 0 for s, v in zip(signs, inv.abs_multiset)):
            continue
        if not inv.has_zero and sum(1 for v in y if v < 0) % 2 != inv.neg_parity:
            continue
        y.sort(reverse=True)
        try:
            mu = ctx.unshift(y)
        except ValueError:
            continue
        if all(v >= 0 for v in mu) and all(a >= b for a, b in zip(mu, mu[1:])):
            found.add(make_partition(mu))
    return sorted(found, key=label_key)


def minimal_elements(members: Iterable[Partition]) -> list[Partition]:
    members = list(members)
    return [a for a in members if not any(b != a and contains(a, b) for b in members)]


def minimal_representative(lam: Partition, ctx: StarContext) -> Partition:
    """The unique inclusion-minimal partition in the star W(D_r)-orbit of lam."""
    mins = minimal_elements(orbit_partitions(lam, ctx))
    if len(mins) != 1:
        raise AssertionError(f"orbit of {format_partition(lam)} has minimal elements {mins}")
    return mins[0]


def star_conjugate(lam: Partition, mu: Partition, ctx: StarContext) -> bool:
    return orbit_invariant(lam, ctx) == orbit_invariant(mu, ctx)


def has_smaller_conjugate(lam: Partition, ctx: StarContext) -> bool:
    """True iff some partition mu properly contained in lam is star W(D_r)-conjugate to lam."""
    return minimal_representative(lam, ctx) != tuple(lam)


def brute_force_orbit(lam: Sequence[int], ctx: StarContext) -> set[tuple[int, ...]]:
    """The star W(D_r)-orbit of lam + rho_hat by enumerating all 2^(r-1) r! elements."""
    x2 = ctx.shifted(lam)
    return {signed_apply(w, x2) for w in signed_perms(ctx.r)}


@dataclass(frozen=True)
class BlockClass:
    invariant: OrbitInvariant
    members: tuple[Partition, ...]
    minimal: Partition

    def to_json(self) -> dict:
        return {"minimal": list(self.minimal), "members": [list(m) for m in self.members],
                "invariant": self.invariant.to_json()}


@dataclass(frozen=True)
class BlockPartition:
    r: int
    delta: int
    side: str
    classes: tuple[BlockClass, ...]

    def as_set_partition(self) -> frozenset[frozenset[Partition]]:
        return frozenset(frozenset(c.members) for c in self.classes)

    def class_of(self, lam: Partition) -> BlockClass:
        for c in self.classes:
            if tuple(lam) in c.members:
                return c
        raise KeyError(lam)

    def to_json(self) -> dict:
        return {"r": self.r, "delta": self.delta, "side": self.side,
                "classes": [c.to_json() for c in self.classes]}


def _classify(r: int, delta: int, side: str, key) -> BlockPartition:
    ctx = StarContext(r, delta)
    groups: dict[OrbitInvariant, list[Partition]] = {}
    for lam in enumerate_labels(r):
        groups.setdefault(orbit_invariant(key(lam), ctx), []).append(lam)
    classes = []
    for inv, members in groups.items():
        mins = minimal_elements(members)
        if len(mins) != 1:
            raise AssertionError(f"class {members} has minimal elements {mins}")
        expected = key(minimal_representative(key(members[0]), ctx))
        if expected != mins[0]:
            raise AssertionError(f"class minimum {mins[0]} differs from the orbit minimum {expected}")
        classes.append(BlockClass(inv, tuple(members), mins[0]))
    classes.sort(key=lambda c: label_key(c.minimal))
    return BlockPartition(r, delta, side, tuple(classes))


def brauer_blocks(r: int, delta: int) -> BlockPartition:
    """Blocks of B_r(delta): lam ~ mu iff lam' and mu' are star W(D_r)-conjugate."""
    return _classify(r, delta, "brauer", transpose)


def symplectic_blocks(r: int, delta: int) -> BlockPartition:
    """Blocks of the symplectic Schur algebra in the generic regime: lam ~ mu iff star-conjugate."""
    return _classify(r, delta, "symplectic", lambda lam: tuple(lam))
