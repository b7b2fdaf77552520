"""Cell modules of B_r(delta), their Gram matrices, and induction from Sym_t.

The cell module for a partition lam of t = r - 2s is Z_s (x) S(lam) over the
group algebra of Sym_t, with basis (half diagram, Specht basis vector).  A
diagram d acts on x (x) v by forming d * lift(x): terms with a bottom arc
among the first t bottom nodes lie in I_{s,1} and vanish; otherwise the
product factors as delta^loops * lift(y) * sigma with sigma in Sym_t, and
the result is delta^loops * y (x) sigma v.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations

from . import linalg as la
from .brauer import (BrauerDiagram, compose, diagram_of_permutation, generators,
                     ideal_basis, involution, standard_arcs)
from .linalg import QQ, Field, Matrix, Scalar
from .partitions import Partition, half_diagram_count, make_partition, specht_dimension
from .symmetric import (MatrixRep, Perm, compose_perm, hyperoctahedral_coinvariants,
                        inverse_perm, sign_twist, specht_rep)

DEFAULT_MAX_CELL_DIM = 2000
DEFAULT_MAX_INDUCED_DIM = 50000


@dataclass(frozen=True, order=True)
class HalfDiagram:
    """s disjoint arcs on the top nodes 0..r-1; free nodes run to bottom 0..t-1 in order."""

    r: int
    arcs: tuple[tuple[int, int], ...]

    @property
    def s(self) -> int:
        return len(self.arcs)

    @property
    def t(self) -> int:
        return self.r - 2 * self.s

    def free_nodes(self) -> list[int]:
        used = {v for arc in self.arcs for v in arc}
        return [v for v in range(self.r) if v not in used]

    def lift(self) -> BrauerDiagram:
        return _lift(self)


@lru_cache(maxsize=None)
def _lift(x: HalfDiagram) -> BrauerDiagram:
    """Free top nodes go to bottom 0..t-1 in order; standard arcs on the last 2s bottom nodes."""
    r = x.r
    edges = list(x.arcs) + standard_arcs(r, x.s)
    edges += [(f, r + k) for k, f in enumerate(x.free_nodes())]
    return BrauerDiagram.from_edges(r, edges)


def _arc_sets(nodes: tuple[int, ...], s: int):
    if s == 0:
        yield ()
        return
    if len(nodes) < 2 * s:
        return
    first, rest = nodes[0], nodes[1:]
    # arcs containing the first node
    for k, other in enumerate(rest):
        for tail in _arc_sets(rest[:k] + rest[k + 1:], s - 1):
            yield tuple(sorted(((first, other),) + tail))
    # first node left free
    yield from _arc_sets(rest, s)


@lru_cache(maxsize=None)
def half_diagrams(r: int, s: int) -> tuple[HalfDiagram, ...]:
    """All half diagrams with s arcs, sorted; there are r!/(s! t! 2^s)."""
    if s < 0 or 2 * s > r:
        return ()
    out = sorted(HalfDiagram(r, arcs) for arcs in set(_arc_sets(tuple(range(r)), s)))
    assert len(out) == half_diagram_count(r, s)
    return tuple(out)


@lru_cache(maxsize=None)
def half_action(d: BrauerDiagram, x: HalfDiagram) -> tuple[HalfDiagram, Perm, int] | None:
    """Reduce d * lift(x) to (y, sigma, loops), or None when it lies in I_{s,1}."""
    z, loops = compose(d, x.lift())
    r, t = x.r, x.t
    tops: dict[int, int] = {}
    for top, bottom in z.through_strands():
        if bottom < t:
            tops[top] = bottom
    if len(tops) < t:
        return None
    y = HalfDiagram(r, tuple(sorted(z.top_arcs())))
    sigma = [0] * t
    for k, top in enumerate(sorted(tops)):
        sigma[tops[top]] = k
    return y, tuple(sigma), loops


@lru_cache(maxsize=None)
def pairing(y: HalfDiagram, x: HalfDiagram) -> tuple[Perm, int] | None:
    """iota(lift(y)) * lift(x) = delta^loops * sigma mod lower terms, or None."""
    z, loops = compose(involution(y.lift()), x.lift())
    t = x.t
    sigma = [0] * t
    count = 0
    for top, bottom in z.through_strands():
        if top < t and bottom < t:
            sigma[bottom] = top
            count += 1
    if count < t:
        return None
    return tuple(sigma), loops


def _power(delta: Scalar, k: int, field: Field) -> Scalar:
    return field(delta) ** k if k else field.one


@dataclass
class CellModule:
    lam: Partition
    r: int
    delta: Scalar
    field: Field
    twisted: bool
    halves: tuple[HalfDiagram, ...]
    specht: MatrixRep
    actions: dict[str, Matrix]
    gram: Matrix
    _index: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._index = {x: k for k, x in enumerate(self.halves)}

    @property
    def s(self) -> int:
        return (self.r - sum(self.lam)) // 2

    @property
    def dim(self) -> int:
        return len(self.halves) * self.specht.dim

    def basis(self) -> list[tuple[HalfDiagram, int]]:
        return [(x, b) for x in self.halves for b in range(self.specht.dim)]

    def matrix(self, d: BrauerDiagram) -> Matrix:
        """Action matrix of a single diagram."""
        return action_matrix(d, self.halves, self._index, self.specht, self.delta, self.field)

    def trace(self, d: BrauerDiagram) -> Scalar:
        total = self.field.zero
        for x in self.halves:
            res = half_action(d, x)
            if res is None or res[0] != x:
                continue
            y, sigma, loops = res
            total += _power(self.delta, loops, self.field) * self.specht.character(sigma)
        return total


def action_matrix(d: BrauerDiagram, halves, index, specht: MatrixRep, delta, field: Field) -> Matrix:
    k = specht.dim
    n = len(halves) * k
    mat = la.zeros(n, n, field.zero)
    for c, x in enumerate(halves):
        res = half_action(d, x)
        if res is None:
            continue
        y, sigma, loops = res
        coeff = _power(delta, loops, field)
        rho = specht.matrix(sigma)
        row0 = index[y] * k
        for b in range(k):
            for a in range(k):
                if rho[a][b]:
                    mat[row0 + a][c * k + b] = coeff * rho[a][b]
    return mat


def gram_matrix(halves, specht: MatrixRep, delta, field: Field) -> Matrix:
    k = specht.dim
    n = len(halves) * k
    form = specht.form
    gram = la.zeros(n, n, field.zero)
    for i, y in enumerate(halves):
        for j, x in enumerate(halves):
            res = pairing(y, x)
            if res is None:
                continue
            sigma, loops = res
            block = la.scale(_power(delta, loops, field), la.matmul(form, specht.matrix(sigma)))
            for a in range(k):
                for b in range(k):
                    gram[i * k + a][j * k + b] = block[a][b]
    return gram


def check_parity(lam: Partition, r: int) -> int:
    t = sum(lam)
    if t > r or (r - t) % 2:
        raise ValueError(f"|lambda| = {t} must satisfy |lambda| <= r = {r} with r - |lambda| even")
    return (r - t) // 2


def build_cell(lam: Partition, r: int, delta, field: Field = QQ, twisted: bool = False,
               max_dim: int = DEFAULT_MAX_CELL_DIM, check: bool = True) -> CellModule:
    lam = make_partition(lam)
    s = check_parity(lam, r)
    dim = half_diagram_count(r, s) * specht_dimension(lam)
    if dim > max_dim:
        raise ValueError(f"cell module dimension {dim} exceeds the configured bound {max_dim}")
    delta = field(delta)
    specht = specht_rep(lam, field)
    if twisted:
        specht = sign_twist(specht)
    halves = half_diagrams(r, s)
    index = {x: k for k, x in enumerate(halves)}
    actions = {name: action_matrix(g, halves, index, specht, delta, field)
               for name, g in generators(r).items()}
    cell = CellModule(lam, r, delta, field, twisted, halves, specht, actions,
                      gram_matrix(halves, specht, delta, field))
    if check:
        check_generator_relations(actions, r, delta, field, cell.dim)
        if not la.is_symmetric(cell.gram):
            raise AssertionError(f"Gram matrix of cell {lam} is not symmetric")
    return cell


def relation_words(r: int) -> list[tuple[list[str], list[str], int]]:
    """Defining relations of B_r(delta) as (lhs word, rhs word, power of delta on rhs)."""
    rels = []
    for i in range(1, r):
        si, ei = f"s{i}", f"e{i}"
        rels += [([si, si], [], 0), ([ei, ei], [ei], 1), ([ei, si], [ei], 0), ([si, ei], [ei], 0)]
        if i + 1 < r:
            sj, ej = f"s{i + 1}", f"e{i + 1}"
            rels += [([si, sj, si], [sj, si, sj], 0),
                     ([ei, ej, ei], [ei], 0), ([ej, ei, ej], [ej], 0),
                     ([si, ej, ei], [sj, ei], 0), ([ei, ej, si], [ei, sj], 0)]
        for j in range(i + 2, r):
            for a in "se":
                for b in "se":
                    rels.append(([f"{a}{i}", f"{b}{j}"], [f"{b}{j}", f"{a}{i}"], 0))
    return rels


def check_generator_relations(actions: dict[str, Matrix], r: int, delta, field: Field, dim: int) -> None:
    one = la.identity(dim, field.one, field.zero)

    def word(w: list[str]) -> Matrix:
        out = one
        for g in w:
            out = la.matmul(out, actions[g])
        return out

    for lhs, rhs, k in relation_words(r):
        if not la.mat_equal(word(lhs), la.scale(_power(delta, k, field), word(rhs))):
            raise AssertionError(f"relation {'*'.join(lhs)} = delta^{k} {'*'.join(rhs) or '1'} fails")


def gram_rank(lam: Partition, r: int, delta, field: Field = QQ) -> int:
    return la.rank(build_cell(lam, r, delta, field, check=False).gram)


# --- induction from Sym_t ---------------------------------------------------


def right_act(x: BrauerDiagram, sigma: Perm) -> BrauerDiagram:
    """x . sigma: permute the first t bottom nodes (sigma extended by the identity)."""
    full = tuple(sigma) + tuple(range(len(sigma), x.r))
    z, loops = compose(x, diagram_of_permutation(full))
    assert loops == 0
    return z


@dataclass
class InducedModule:
    """I_s (x) V over the group algebra of Sym_t, computed orbit by orbit."""

    r: int
    t: int
    dim: int
    orbit_reps: list[BrauerDiagram]
    orbit_dims: list[int]
    actions: dict[str, Matrix]


class _Echelon:
    """Incrementally maintained row-echelon basis."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.rows: dict[int, list] = {}

    def add(self, v: list) -> None:
        v = list(v)
        for c in range(self.n):
            if not v[c]:
                continue
            piv = self.rows.get(c)
            if piv is None:
                inv = 1 / la.Fraction(v[c]) if not isinstance(v[c], la.ModP) else 1 / v[c]
                self.rows[c] = [x * inv for x in v]
                return
            f = v[c]
            v = [a - f * b for a, b in zip(v, piv)]

    def __len__(self) -> int:
        return len(self.rows)


def induce(rep: MatrixRep, r: int, delta=0, field: Field = QQ,
           max_dim: int = DEFAULT_MAX_INDUCED_DIM) -> InducedModule:
    """Explicit quotient of I_s (x) V by the relations x.sigma (x) v - x (x) sigma.v."""
    t = rep.t
    if t > r or (r - t) % 2:
        raise ValueError(f"t = {t} must satisfy t <= r = {r} with r - t even")
    s = (r - t) // 2
    diagrams = ideal_basis(r, s, 0).diagrams
    if len(diagrams) * rep.dim > max_dim:
        raise ValueError(f"dim(I_s) * dim(V) = {len(diagrams) * rep.dim} exceeds bound {max_dim}")
    gens = [tuple(range(t))[:i - 1] + (i, i - 1) + tuple(range(i + 1, t)) for i in range(1, t)]
    rep_of: dict[BrauerDiagram, tuple[int, Perm]] = {}
    orbit_reps: list[BrauerDiagram] = []
    projections = []
    for x in diagrams:
        if x in rep_of:
            continue
        o = len(orbit_reps)
        orbit_reps.append(x)
        rep_of[x] = (o, tuple(range(t)))
        frontier, members = [x], [x]
        while frontier:
            nxt = []
            for y in frontier:
                gy = rep_of[y][1]
                for g in gens:
                    y2 = right_act(y, g)
                    if y2 not in rep_of:
                        rep_of[y2] = (o, compose_perm(gy, g))
                        nxt.append(y2)
                        members.append(y2)
            frontier = nxt
        # relations y.g (x) v = y (x) g v, rewritten on x: rho(g_{y.g}) - rho(g_y o g)
        ech = _Echelon(rep.dim)
        for y in members:
            gy = rep_of[y][1]
            for g in gens:
                a = rep_of[right_act(y, g)][1]
                b = compose_perm(gy, g)
                if a == b:
                    continue
                rel = la.sub(rep.matrix(a), rep.matrix(b))
                for col in la.transpose(rel):
                    ech.add(col)
                if len(ech) == rep.dim:
                    break
        if len(ech) == 0:
            proj, piv = rep.identity(), list(range(rep.dim))
        elif len(ech) == rep.dim:
            proj, piv = [], []
        else:
            proj, piv = la.rref(la.nullspace(list(ech.rows.values()), rep.dim))
        projections.append((proj, piv))
    offsets, total = [], 0
    for proj, _ in projections:
        offsets.append(total)
        total += len(proj)
    delta = field(delta)
    actions = {}
    for name, g in generators(r).items():
        mat = la.zeros(total, total, field.zero)
        for o, x in enumerate(orbit_reps):
            proj, piv = projections[o]
            for j, pc in enumerate(piv):
                z, loops = compose(g, x)
                o2, gz = rep_of[z]
                proj2 = projections[o2][0]
                if not proj2:
                    continue
                col = [row[pc] for row in la.matmul(proj2, rep.matrix(gz))]
                coeff = _power(delta, loops, field)
                for i, v in enumerate(col):
                    if v:
                        mat[offsets[o2] + i][offsets[o] + j] = coeff * field(v)
        actions[name] = mat
    return InducedModule(r, t, total, orbit_reps, [len(p) for p, _ in projections], actions)


def filtration_dimension_law(rep: MatrixRep, r: int) -> tuple[int, int, bool]:
    """Compare dim Ind(V) with sum_i rank(Z_{s+i}) * dim V_{H_i}."""
    t = rep.t
    lhs = induce(rep, r).dim
    s = (r - t) // 2
    rhs = sum(half_diagram_count(r, s + i) * hyperoctahedral_coinvariants(rep, i).dim
              for i in range(t // 2 + 1))
    return lhs, rhs, lhs == rhs
