"""Characteristic zero brute force for decomposition numbers and blocks of B_r(delta).

Every cell module is built explicitly.  Its head is the quotient by the
radical of the Gram form.  Traces of all heads and all cell modules are
evaluated on every diagram, and the decomposition numbers are the unique
solution of char(S(mu)) = sum_lam d_{mu lam} char(D(lam)).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .blocks import BlockPartition, brauer_blocks, minimal_elements
from .brauer import BrauerDiagram, all_diagrams, generators
from .cells import CellModule, build_cell, check_generator_relations, half_action, _power
from .linalg import QQ, Matrix
from .partitions import Partition, enumerate_labels, format_partition, label_key

DEFAULT_MAX_R = 5


class OracleError(AssertionError):
    """The trace solve produced something no cellular algebra can produce."""


@dataclass
class HeadModule:
    lam: Partition
    dim: int
    projection: Matrix
    pivots: list[int]
    actions: dict[str, Matrix]


def irreducible_head(cell: CellModule, check: bool = True) -> HeadModule | None:
    """cell / rad(Gram), or None when the Gram form vanishes."""
    if cell.field != QQ:
        raise ValueError("heads are computed in characteristic 0 only")
    proj, piv = la.rref(cell.gram)
    if not proj:
        return None
    actions = {}
    for name, mat in cell.actions.items():
        pa = la.matmul(proj, mat)
        actions[name] = [[row[c] for c in piv] for row in pa]
    if check:
        check_generator_relations(actions, cell.r, cell.delta, cell.field, len(piv))
    return HeadModule(cell.lam, len(piv), proj, piv, actions)


def head_trace(cell: CellModule, head: HeadModule, d: BrauerDiagram):
    """trace of d on the head, from the action on the lifted basis columns."""
    k = cell.specht.dim
    total = 0
    for a, col in enumerate(head.pivots):
        x = cell.halves[col // k]
        b = col % k
        res = half_action(d, x)
        if res is None:
            continue
        y, sigma, loops = res
        rho = cell.specht.matrix(sigma)
        row0 = cell._index[y] * k
        prow = head.projection[a]
        acc = 0
        for a2 in range(k):
            if rho[a2][b] and prow[row0 + a2]:
                acc += prow[row0 + a2] * rho[a2][b]
        if acc:
            total += _power(cell.delta, loops, cell.field) * acc
    return total


@dataclass
class DecompositionTable:
    r: int
    delta: int | Fraction
    labels: list[Partition]
    head_labels: list[Partition]
    d: dict[tuple[Partition, Partition], int]
    gram_ranks: dict[Partition, int]

    def entry(self, mu: Partition, lam: Partition) -> int:
        return self.d.get((tuple(mu), tuple(lam)), 0)

    def is_identity(self) -> bool:
        return (self.head_labels == self.labels
                and all((mu == lam) == bool(v) for (mu, lam), v in self.d.items()))

    def rows(self) -> list[list[int]]:
        return [[self.entry(mu, lam) for lam in self.head_labels] for mu in self.labels]

    def to_json(self) -> dict:
        return {"labels": [list(x) for x in self.labels],
                "heads": [list(x) for x in self.head_labels],
                "rows": self.rows()}


def decomposition_numbers(r: int, delta, max_r: int = DEFAULT_MAX_R) -> DecompositionTable:
    if r > max_r:
        raise ValueError(f"r = {r} exceeds the oracle bound {max_r}")
    labels = enumerate_labels(r)
    cells = {lam: build_cell(lam, r, delta) for lam in labels}
    heads = {}
    for lam in labels:
        h = irreducible_head(cells[lam])
        if h is not None:
            heads[lam] = h
    head_labels = [lam for lam in labels if lam in heads]
    diagrams = all_diagrams(r)
    head_traces = [[head_trace(cells[lam], heads[lam], d) for lam in head_labels] for d in diagrams]
    if la.rank(head_traces) != len(head_labels):
        raise OracleError(f"head characters are linearly dependent at r = {r}, delta = {delta}")
    table: dict[tuple[Partition, Partition], int] = {}
    for mu in labels:
        rhs = [cells[mu].trace(d) for d in diagrams]
        sol = la.solve(head_traces, rhs)
        if sol is None:
            raise OracleError(f"char S({format_partition(mu)}) is not a combination of head characters")
        for lam, v in zip(head_labels, sol):
            v = Fraction(v)
            if v.denominator != 1 or v < 0:
                raise OracleError(f"d[{format_partition(mu)}, {format_partition(lam)}] = {v}")
            if v:
                table[(mu, lam)] = int(v)
    for lam in head_labels:
        if table.get((lam, lam)) != 1:
            raise OracleError(f"d[{format_partition(lam)}, {format_partition(lam)}] != 1")
    for (mu, lam) in table:
        if mu != lam and not sum(lam) > sum(mu):
            raise OracleError(f"d[{format_partition(mu)}, {format_partition(lam)}] breaks the cell order")
    ranks = {lam: (heads[lam].dim if lam in heads else 0) for lam in labels}
    return DecompositionTable(r, delta, labels, head_labels, table, ranks)


@dataclass
class OracleBlocks:
    r: int
    delta: int
    classes: list[list[Partition]]
    table: DecompositionTable

    def as_set_partition(self) -> frozenset[frozenset[Partition]]:
        return frozenset(frozenset(c) for c in self.classes)

    def agrees_with(self, blocks: BlockPartition) -> bool:
        return self.as_set_partition() == blocks.as_set_partition()

    def to_json(self) -> dict:
        return {"r": self.r, "delta": self.delta,
                "classes": [{"minimal": list(minimal_elements(c)[0]), "members": [list(x) for x in c]}
                            for c in self.classes],
                "decomposition_table": self.table.to_json()}


def oracle_blocks(r: int, delta, max_r: int = DEFAULT_MAX_R) -> OracleBlocks:
    """Link mu and lam whenever d_{mu lam} != 0 and take connected components."""
    table = decomposition_numbers(r, delta, max_r)
    parent = {lam: lam for lam in table.labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (mu, lam) in table.d:
        a, b = find(mu), find(lam)
        if a != b:
            parent[a] = b
    groups: dict[Partition, list[Partition]] = {}
    for lam in table.labels:
        groups.setdefault(find(lam), []).append(lam)
    classes = sorted((sorted(g, key=label_key) for g in groups.values()),
                     key=lambda g: label_key(g[-1]))
    return OracleBlocks(r, delta, classes, table)


def compare_with_criterion(r: int, delta: int) -> tuple[bool, OracleBlocks, BlockPartition]:
    ob = oracle_blocks(r, delta)
    bb = brauer_blocks(r, delta)
    return ob.agrees_with(bb), ob, bb
