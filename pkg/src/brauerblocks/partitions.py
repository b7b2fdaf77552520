"""Integer partitions and the label sets of Brauer cell modules.

A partition is a plain tuple of positive integers in weakly decreasing
order; the empty tuple is the empty partition.  Padding with zeros to a
fixed length happens only at call sites that need coordinates in Z^m.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import groupby
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and drop trailing zeros."""
    parts = tuple(int(x) for x in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(x <= 0 for x in parts):
        raise ValueError(f"partition parts must be nonnegative: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def is_partition(seq: Sequence[int]) -> bool:
    """True if ``seq`` (possibly zero padded) is weakly decreasing and nonnegative."""
    return all(x >= 0 for x in seq) and all(a >= b for a, b in zip(seq, seq[1:]))


def size(lam: Partition) -> int:
    return sum(lam)


def pad(lam: Sequence[int], m: int) -> list[int]:
    if len(lam) > m:
        raise ValueError(f"{tuple(lam)} has more than {m} parts")
    return list(lam) + [0] * (m - len(lam))


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff mu_i <= lam_i for every i (missing parts read as 0)."""
    if len(mu) > len(lam) and any(mu[len(lam):]):
        return False
    return all(b <= a for a, b in zip(lam, mu))


def intersection(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    n = min(len(lam), len(mu))
    return make_partition(min(a, b) for a, b in zip(lam[:n], mu[:n]))


def hook_lengths(lam: Partition) -> list[int]:
    conj = transpose(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


@lru_cache(maxsize=None)
def specht_dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def is_p_regular(lam: Partition, p: int) -> bool:
    return all(len(list(g)) < p for _, g in groupby(lam))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    return sum(1 for _ in partitions_of(n))


def label_key(lam: Partition) -> tuple:
    """Sort key realising the label order: size descending, then lex descending."""
    return (-sum(lam), tuple(-x for x in lam) + (1,))


def enumerate_labels(r: int) -> list[Partition]:
    """The set of partitions lam with |lam| <= r and r - |lam| even, in label order."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    labels = [lam for t in range(r, -1, -2) for lam in partitions_of(t)]
    assert labels == sorted(labels, key=label_key)
    return labels


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def half_diagram_count(r: int, s: int) -> int:
    """r!/(s! t! 2^s) with t = r - 2s: the rank of Z_s over the group algebra of Sym_t."""
    t = r - 2 * s
    if s < 0 or t < 0:
        return 0
    return factorial(r) // (factorial(s) * factorial(t) * 2**s)


def matrix_block_counts(r: int) -> list[tuple[int, int]]:
    """Pairs (N_i, t_i) for i = 0..floor(r/2), with t_i = r - 2i.

    Sum of N_i^2 * t_i! equals the number of Brauer diagrams (2r-1)!!.
    """
    return [(half_diagram_count(r, i), r - 2 * i) for i in range(r // 2 + 1)]


def format_partition(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")" if lam else "()"


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text or text in {"0", "empty"}:
        return ()
    return make_partition(int(x) for x in text.split(","))
