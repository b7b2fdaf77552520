"""Matrix models of symmetric group modules.

Permutations are 0-based one-line tuples; ``sigma[k]`` is the image of k.
A representation stores one matrix per adjacent transposition
s_i = (i, i+1), i = 1..t-1, and evaluates arbitrary permutations through
reduced words, so ``rep.matrix(a) @ rep.matrix(b) == rep.matrix(a o b)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import permutations, product
from math import factorial, prod
from typing import Sequence

from . import linalg as la
from .linalg import QQ, Field, Matrix
from .partitions import Partition, make_partition, specht_dimension, transpose

DEFAULT_MAX_DEGREE = 8

Perm = tuple[int, ...]


def compose_perm(a: Perm, b: Perm) -> Perm:
    """(a o b)(k) = a(b(k))."""
    return tuple(a[x] for x in b)


def inverse_perm(a: Perm) -> Perm:
    inv = [0] * len(a)
    for k, x in enumerate(a):
        inv[x] = k
    return tuple(inv)


def transposition(t: int, a: int, b: int) -> Perm:
    sigma = list(range(t))
    sigma[a], sigma[b] = b, a
    return tuple(sigma)


def adjacent(t: int, i: int) -> Perm:
    """s_i = (i, i+1) in 1-based letters."""
    return transposition(t, i - 1, i)


def sign_of(sigma: Perm) -> int:
    sgn, seen = 1, [False] * len(sigma)
    for k in range(len(sigma)):
        if seen[k]:
            continue
        length, j = 0, k
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn


def reduced_word(sigma: Perm) -> list[int]:
    """Indices i (1-based) with sigma = s_{i1} o s_{i2} o ... o s_{ik}."""
    sigma = list(sigma)
    word: list[int] = []
    # peel descents from the right: sigma = (sigma o s_i) o s_i
    while True:
        i = next((k for k in range(len(sigma) - 1) if sigma[k] > sigma[k + 1]), None)
        if i is None:
            break
        sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
        word.append(i + 1)
    return word[::-1]


@dataclass
class MatrixRep:
    """Representation of Sym_t given by matrices of s_1..s_{t-1}.

    ``form`` is an optional Sym_t-invariant symmetric bilinear form.
    """

    t: int
    dim: int
    generators: list[Matrix]
    form: Matrix | None = None
    field: Field = QQ
    label: str = ""
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.generators) != max(self.t - 1, 0):
            raise ValueError("need one matrix per adjacent transposition")
        check_braid_relations(self)
        if self.form is not None:
            if not la.is_symmetric(self.form):
                raise ValueError("form is not symmetric")
            for g in self.generators:
                if not la.mat_equal(la.matmul(la.matmul(la.transpose(g), self.form), g), self.form):
                    raise ValueError("form is not invariant")

    def identity(self) -> Matrix:
        return la.identity(self.dim, self.field.one, self.field.zero)

    def matrix(self, sigma: Perm) -> Matrix:
        """Matrix of an arbitrary permutation of {0..t-1}."""
        sigma = tuple(sigma)
        if len(sigma) != self.t:
            raise ValueError(f"permutation of the wrong degree {len(sigma)} != {self.t}")
        hit = self._cache.get(sigma)
        if hit is not None:
            return hit
        word = reduced_word(sigma)
        if not word:
            m = self.identity()
        else:
            i = word[-1]
            rest = compose_perm(sigma, adjacent(self.t, i))
            m = la.matmul(self.matrix(rest), self.generators[i - 1])
        self._cache[sigma] = m
        return m

    def character(self, sigma: Perm):
        return la.trace(self.matrix(sigma))

    def to_json(self) -> dict:
        dump = lambda m: [[la.scalar_to_str(x) for x in row] for row in m]
        out = {"t": self.t, "dim": self.dim, "label": self.label,
               "generators": [dump(g) for g in self.generators]}
        if self.form is not None:
            out["form"] = dump(self.form)
        return out


def check_braid_relations(rep: MatrixRep) -> None:
    gens, one = rep.generators, rep.identity()
    for i, g in enumerate(gens):
        if not la.mat_equal(la.matmul(g, g), one):
            raise ValueError(f"s_{i + 1}^2 != 1 in {rep.label or 'representation'}")
    for i in range(len(gens) - 1):
        a, b = gens[i], gens[i + 1]
        if not la.mat_equal(la.matmul(la.matmul(a, b), a), la.matmul(la.matmul(b, a), b)):
            raise ValueError(f"braid relation fails at s_{i + 1}")
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            if not la.mat_equal(la.matmul(gens[i], gens[j]), la.matmul(gens[j], gens[i])):
                raise ValueError(f"s_{i + 1}, s_{j + 1} do not commute")


# --- tableaux and tabloids --------------------------------------------------


def standard_tableaux(lam: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """Standard tableaux of shape lam with entries 0..t-1, as tuples of rows."""
    t = sum(lam)
    out = []

    def fill(rows: list[list[int]], k: int) -> None:
        if k == t:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                fill(rows, k + 1)
                rows[i].pop()

    fill([[] for _ in lam], 0)
    return out


def tabloids(lam: Partition) -> list[tuple[int, ...]]:
    """Row-words w (w[letter] = row index) with row i of size lam[i]."""
    t = sum(lam)
    out = []

    def fill(word: list[int], counts: list[int], k: int) -> None:
        if k == t:
            out.append(tuple(word))
            return
        for i, c in enumerate(counts):
            if c < lam[i]:
                counts[i] += 1
                word.append(i)
                fill(word, counts, k + 1)
                word.pop()
                counts[i] -= 1

    fill([], [0] * len(lam), 0)
    return out


def act_on_tabloid(sigma: Perm, word: tuple[int, ...]) -> tuple[int, ...]:
    """sigma . {T}: letter k in row i moves to letter sigma(k) in row i."""
    new = [0] * len(word)
    for k, row in enumerate(word):
        new[sigma[k]] = row
    return tuple(new)


def _tableau_word(tab) -> tuple[int, ...]:
    t = sum(len(r) for r in tab)
    word = [0] * t
    for i, row in enumerate(tab):
        for x in row:
            word[x] = i
    return tuple(word)


def _polytabloid(tab, index: dict[tuple[int, ...], int]) -> list[int]:
    """Coordinates of e_T in the tabloid basis."""
    t = sum(len(r) for r in tab)
    cols = transpose(tuple(len(r) for r in tab))
    columns = [[tab[i][j] for i in range(cols[j])] for j in range(len(cols))]
    vec = [0] * len(index)
    base = _tableau_word(tab)
    for perms in product(*(list(permutations(c)) for c in columns)):
        sigma = list(range(t))
        for col, img in zip(columns, perms):
            for a, b in zip(col, img):
                sigma[a] = b
        sigma = tuple(sigma)
        vec[index[act_on_tabloid(sigma, base)]] += sign_of(sigma)
    return vec


def _check_degree(t: int, max_degree: int) -> None:
    if t > max_degree:
        raise ValueError(f"degree {t} exceeds the configured bound {max_degree}")


def specht_rep(lam: Partition, field: Field = QQ, max_degree: int = DEFAULT_MAX_DEGREE) -> MatrixRep:
    """Specht module S(lam) on the standard polytabloid basis.

    The form is the standard tabloid inner product restricted to the span of
    the polytabloids.
    """
    lam = make_partition(lam)
    t = sum(lam)
    _check_degree(t, max_degree)
    tabs = tabloids(lam)
    index = {w: k for k, w in enumerate(tabs)}
    std = standard_tableaux(lam)
    basis = [_polytabloid(T, index) for T in std]
    d = len(std)
    assert d == specht_dimension(lam)
    # The standard tabloids give an invertible (unitriangular) d x d minor.
    rows = [index[_tableau_word(T)] for T in std]
    minor_inv = la.inverse([[basis[c][r] for c in range(d)] for r in rows])
    sparse = [[(j, x) for j, x in enumerate(vec) if x] for vec in basis]
    gens = []
    for i in range(1, t):
        sig = adjacent(t, i)
        mat = la.zeros(d, d)
        for c in range(d):
            image: dict[int, int] = {}
            for j, coeff in sparse[c]:
                k = index[act_on_tabloid(sig, tabs[j])]
                image[k] = image.get(k, 0) + coeff
            coords = la.matvec(minor_inv, [image.get(r, 0) for r in rows])
            # the image must lie in the polytabloid span
            recon: dict[int, object] = {}
            for k, ck in enumerate(coords):
                if ck:
                    for j, x in sparse[k]:
                        recon[j] = recon.get(j, 0) + ck * x
            if {j: x for j, x in recon.items() if x} != {j: x for j, x in image.items() if x}:
                raise AssertionError("polytabloid span is not Sym_t-stable")
            for k in range(d):
                mat[k][c] = coords[k]
        gens.append(la.to_field(mat, field))
    dense = [dict(v) for v in sparse]
    form = [[sum(x * dense[j].get(k, 0) for k, x in sparse[i]) for j in range(d)] for i in range(d)]
    return MatrixRep(t, d, gens, la.to_field(form, field), field, f"S{lam}")


def permutation_rep(lam: Partition, field: Field = QQ,
                    max_degree: int = DEFAULT_MAX_DEGREE) -> MatrixRep:
    """Permutation module M(lam) on tabloids; the form is the standard one."""
    lam = make_partition(lam)
    t = sum(lam)
    _check_degree(t, max_degree)
    tabs = tabloids(lam)
    index = {w: k for k, w in enumerate(tabs)}
    n = len(tabs)
    assert n == factorial(t) // prod(factorial(x) for x in lam)
    gens = []
    for i in range(1, t):
        sig = adjacent(t, i)
        mat = la.zeros(n, n, field.zero)
        for c, w in enumerate(tabs):
            mat[index[act_on_tabloid(sig, w)]][c] = field.one
        gens.append(mat)
    return MatrixRep(t, n, gens, la.identity(n, field.one, field.zero), field, f"M{lam}")


def regular_rep(t: int, field: Field = QQ) -> MatrixRep:
    return permutation_rep((1,) * t, field)


def trivial_rep(t: int, field: Field = QQ) -> MatrixRep:
    return MatrixRep(t, 1, [[[field.one]] for _ in range(t - 1)], [[field.one]], field, f"triv{t}")


def sign_twist(rep: MatrixRep) -> MatrixRep:
    """Tensor with the sign representation."""
    gens = [la.scale(-1, g) for g in rep.generators]
    label = rep.label[4:] if rep.label.startswith("sgn*") else "sgn*" + rep.label
    return MatrixRep(rep.t, rep.dim, gens, rep.form, rep.field, label)


# --- hyperoctahedral coinvariants -------------------------------------------


def hyperoctahedral_generators(t: int, i: int) -> list[Perm]:
    """Generators of H_i acting on the last 2i letters of {0..t-1}.

    H_i is the stabiliser of the matching {{a1,b1},...,{ai,bi}} of those
    letters: the pair swaps (a_k b_k) and the block swaps (a_k a_k+1)(b_k b_k+1).
    """
    if 2 * i > t:
        raise ValueError(f"2i = {2 * i} exceeds t = {t}")
    base = t - 2 * i
    gens = [transposition(t, base + 2 * k, base + 2 * k + 1) for k in range(i)]
    for k in range(i - 1):
        sigma = list(range(t))
        a, b = base + 2 * k, base + 2 * k + 2
        sigma[a], sigma[b] = b, a
        sigma[a + 1], sigma[b + 1] = b + 1, a + 1
        gens.append(tuple(sigma))
    return gens


def close_group(gens: Sequence[Perm], t: int) -> set[Perm]:
    ident = tuple(range(t))
    group, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = compose_perm(g, h)
                if x not in group:
                    group.add(x)
                    nxt.append(x)
        frontier = nxt
    return group


@dataclass
class Coinvariants:
    """The largest quotient of V on which a subgroup acts trivially."""

    dim: int
    projection: Matrix          # dim x dim(V); kernel is the relation span
    residual: MatrixRep | None  # action of Sym_{t-2i} on the quotient


def quotient_action(projection: Matrix, pivots: list[int], mat: Matrix) -> Matrix:
    """Matrix N with projection @ mat = N @ projection (projection[:, pivots] = I)."""
    pm = la.matmul(projection, mat) if projection else []
    return [[row[c] for c in pivots] for row in pm]


def coinvariants(rep: MatrixRep, group_gens: Sequence[Perm]) -> tuple[Matrix, list[int]]:
    """Projection onto V / span{hv - v}: rows spanning the annihilator of the relations."""
    if rep.dim == 0:
        return [], []
    if not group_gens:
        return rep.identity(), list(range(rep.dim))
    one = rep.identity()
    # rows y with y (M_h - I) = 0 for every generator h
    ann = la.nullspace(la.stack(la.transpose(la.sub(rep.matrix(h), one)) for h in group_gens),
                       rep.dim)
    if not ann:
        return [], []
    return la.rref(ann)


def hyperoctahedral_coinvariants(rep: MatrixRep, i: int) -> Coinvariants:
    """V_{H_i} with H_i on the last 2i letters, plus the residual Sym_{t-2i} action."""
    t = rep.t
    gens = hyperoctahedral_generators(t, i)
    proj, piv = coinvariants(rep, gens)
    dim = len(proj)
    t0 = t - 2 * i
    if dim == 0:
        residual = MatrixRep(t0, 0, [[] for _ in range(max(t0 - 1, 0))], None, rep.field)
    else:
        residual = MatrixRep(t0, dim,
                             [quotient_action(proj, piv, rep.generators[k]) for k in range(t0 - 1)],
                             None, rep.field, f"{rep.label}_H{i}")
    return Coinvariants(dim, proj, residual)


def invariants_dimension(rep: MatrixRep, group_gens: Sequence[Perm]) -> int:
    """dim of {v : h v = v for all generators h}."""
    one = rep.identity()
    relations = la.stack(la.sub(rep.matrix(h), one) for h in group_gens)
    if not relations:
        return rep.dim
    return rep.dim - la.rank(relations)
