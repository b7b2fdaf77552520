"""Brauer diagrams, their composition, and the algebra B_r(delta).

Nodes are numbered 0..2r-1: top node i (1-based) is ``i - 1`` and bottom
node i is ``r + i - 1``.  This numbering realises the total order
(top,1) < ... < (top,r) < (bottom,1) < ... < (bottom,r) used for the
canonical edge list.  A diagram is stored as its partner map, which is a
fixed-point-free involution on the 2r nodes and hence a unique hashable key.

The product ``a * b`` stacks ``a`` on top of ``b``: the bottom row of ``a``
is glued to the top row of ``b``.  Permutation diagrams multiply like the
permutations they represent (``diagram_of_permutation(sigma)`` joins bottom
node k to top node sigma(k)).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .linalg import QQ, Field, Scalar, scalar_from_str, scalar_to_str
from .partitions import double_factorial

DEFAULT_MAX_RANK = 7


def node_name(r: int, v: int) -> str:
    return f"t{v + 1}" if v < r else f"b{v - r + 1}"


def parse_node(r: int, name: str) -> int:
    row, idx = name[0], int(name[1:])
    if row not in "tb" or not 1 <= idx <= r:
        raise ValueError(f"bad node name {name!r} for rank {r}")
    return idx - 1 if row == "t" else r + idx - 1


@dataclass(frozen=True, order=True)
class BrauerDiagram:
    r: int
    partner: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.partner) != 2 * self.r:
            raise ValueError("partner map must have length 2r")
        for v, w in enumerate(self.partner):
            if w == v or self.partner[w] != v:
                raise ValueError(f"not a perfect matching: {self.partner}")

    @classmethod
    def from_edges(cls, r: int, edges: Iterable[tuple[int, int]]) -> "BrauerDiagram":
        partner = [-1] * (2 * r)
        for a, b in edges:
            if partner[a] != -1 or partner[b] != -1:
                raise ValueError("node used twice")
            partner[a], partner[b] = b, a
        if -1 in partner:
            raise ValueError("some node is unmatched")
        return cls(r, tuple(partner))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.partner) if v < w]

    def top_arcs(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in self.edges if w < self.r]

    def bottom_arcs(self) -> list[tuple[int, int]]:
        return [(v - self.r, w - self.r) for v, w in self.edges if v >= self.r]

    def through_strands(self) -> list[tuple[int, int]]:
        """(top index, bottom index) pairs, 0-based."""
        return [(v, w - self.r) for v, w in self.edges if v < self.r <= w]

    def propagating_number(self) -> int:
        return len(self.through_strands())

    def is_permutation(self) -> bool:
        return self.propagating_number() == self.r

    def to_json(self) -> dict:
        return {"r": self.r,
                "edges": [[node_name(self.r, a), node_name(self.r, b)] for a, b in self.edges]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "BrauerDiagram":
        r = int(obj["r"])
        return cls.from_edges(r, [(parse_node(r, a), parse_node(r, b)) for a, b in obj["edges"]])

    def __str__(self) -> str:
        return "{" + ", ".join(f"{node_name(self.r, a)}-{node_name(self.r, b)}"
                               for a, b in self.edges) + "}"


def identity_diagram(r: int) -> BrauerDiagram:
    return BrauerDiagram(r, tuple(list(range(r, 2 * r)) + list(range(r))))


def diagram_of_permutation(sigma: Sequence[int]) -> BrauerDiagram:
    """Permutation diagram joining bottom node k to top node sigma(k) (0-based one-line)."""
    r = len(sigma)
    return BrauerDiagram.from_edges(r, [(sigma[k], r + k) for k in range(r)])


def s(r: int, i: int) -> BrauerDiagram:
    """Simple transposition s_i, 1 <= i < r."""
    if not 1 <= i < r:
        raise ValueError(f"s_{i} undefined in rank {r}")
    sigma = list(range(r))
    sigma[i - 1], sigma[i] = i, i - 1
    return diagram_of_permutation(sigma)


def e(r: int, i: int) -> BrauerDiagram:
    """Contraction e_i: top and bottom arcs on {i, i+1}, all else vertical."""
    if not 1 <= i < r:
        raise ValueError(f"e_{i} undefined in rank {r}")
    edges = [(i - 1, i), (r + i - 1, r + i)]
    edges += [(k, r + k) for k in range(r) if k not in (i - 1, i)]
    return BrauerDiagram.from_edges(r, edges)


def generators(r: int) -> dict[str, BrauerDiagram]:
    """The standard generators s_1..s_{r-1}, e_1..e_{r-1}, keyed by name."""
    gens = {f"s{i}": s(r, i) for i in range(1, r)}
    gens.update({f"e{i}": e(r, i) for i in range(1, r)})
    return gens


def compose(d: BrauerDiagram, f: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Stack ``d`` above ``f``; return the resulting diagram and the closed-loop count."""
    if d.r != f.r:
        raise ValueError(f"rank mismatch: {d.r} vs {f.r}")
    return _compose(d.r, d.partner, f.partner)


@lru_cache(maxsize=1 << 18)
def _compose(r: int, pd: tuple[int, ...], pf: tuple[int, ...]) -> tuple[BrauerDiagram, int]:
    # Walk paths from outer nodes.  A middle node k is d's bottom r+k and f's top k.
    out = [-1] * (2 * r)
    seen_mid = [False] * r

    def walk_from_d(v: int) -> int:
        # v is a node of d; return the outer endpoint (in result numbering)
        while True:
            w = pd[v]
            if w < r:
                return w
            k = w - r
            seen_mid[k] = True
            u = pf[k]
            if u >= r:
                return u
            seen_mid[u] = True
            v = r + u

    def walk_from_f(v: int) -> int:
        while True:
            w = pf[v]
            if w >= r:
                return w
            seen_mid[w] = True
            u = pd[r + w]
            if u < r:
                return u
            seen_mid[u - r] = True
            v = u - r

    for v in range(r):
        if out[v] == -1:
            w = walk_from_d(v)
            out[v], out[w] = w, v
    for v in range(r, 2 * r):
        if out[v] == -1:
            w = walk_from_f(v)
            out[v], out[w] = w, v
    loops = 0
    for k in range(r):
        if seen_mid[k]:
            continue
        loops += 1
        # trace the closed loop through middle nodes
        cur = k
        while not seen_mid[cur]:
            seen_mid[cur] = True
            u = pf[cur]          # f's top k -> partner (also a top node of f)
            seen_mid[u] = True
            cur = pd[r + u] - r  # d's bottom u -> partner (a bottom node of d)
    return BrauerDiagram(r, tuple(out)), loops


def involution(d: BrauerDiagram) -> BrauerDiagram:
    """Flip over the horizontal axis (top i <-> bottom i)."""
    r = d.r
    flip = lambda v: v + r if v < r else v - r
    return BrauerDiagram(r, tuple(flip(d.partner[flip(v)]) for v in range(2 * r)))


def _matchings(nodes: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not nodes:
        yield []
        return
    first, rest = nodes[0], nodes[1:]
    for k, other in enumerate(rest):
        for m in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + m


def all_diagrams(r: int, max_rank: int = DEFAULT_MAX_RANK) -> list[BrauerDiagram]:
    """All (2r-1)!! Brauer diagrams of rank r, in a fixed deterministic order."""
    if r > max_rank:
        raise ValueError(f"rank {r} exceeds the configured bound {max_rank}")
    return [BrauerDiagram.from_edges(r, m) for m in _matchings(tuple(range(2 * r)))]


def dimension(r: int) -> int:
    return double_factorial(2 * r - 1)


@dataclass(frozen=True)
class IdealBasis:
    """Diagrams spanning I_{s,i}: the s standard bottom arcs on the last 2s
    nodes plus at least i further bottom arcs."""

    r: int
    s: int
    i: int
    diagrams: tuple[BrauerDiagram, ...]

    @property
    def t(self) -> int:
        return self.r - 2 * self.s

    def graded_piece(self, j: int) -> list[BrauerDiagram]:
        """Diagrams of I_s(j): exactly j extra bottom arcs."""
        return [d for d in self.diagrams if extra_bottom_arcs(d, self.s) == j]


def standard_arcs(r: int, s: int) -> list[tuple[int, int]]:
    """Bottom node pairs {t+1,t+2},...,{r-1,r} as node indices."""
    t = r - 2 * s
    return [(r + t + 2 * k, r + t + 2 * k + 1) for k in range(s)]


def extra_bottom_arcs(d: BrauerDiagram, s: int) -> int:
    t = d.r - 2 * s
    return sum(1 for a, b in d.bottom_arcs() if b < t)


def has_standard_arcs(d: BrauerDiagram, s: int) -> bool:
    return all(d.partner[a] == b for a, b in standard_arcs(d.r, s))


def ideal_basis(r: int, s: int, i: int = 0) -> IdealBasis:
    if s < 0 or i < 0:
        raise ValueError("s and i must be nonnegative")
    if 2 * (s + i) > r:
        return IdealBasis(r, s, i, ())
    t = r - 2 * s
    free = tuple(range(r)) + tuple(range(r, r + t))
    fixed = standard_arcs(r, s)
    out = []
    for m in _matchings(free):
        d = BrauerDiagram.from_edges(r, m + fixed)
        if extra_bottom_arcs(d, s) >= i:
            out.append(d)
    return IdealBasis(r, s, i, tuple(out))


# --- algebra elements -------------------------------------------------------


@dataclass(frozen=True)
class AlgebraElement:
    """Sparse linear combination of rank-r diagrams in B_r(delta)."""

    r: int
    delta: Scalar
    terms: Mapping[BrauerDiagram, Scalar] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for d, c in self.terms.items():
            if d.r != self.r:
                raise ValueError("diagram rank differs from element rank")
            if c:
                clean[d] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, delta: Scalar, coeff: Scalar = 1) -> "AlgebraElement":
        return cls(d.r, delta, {d: coeff})

    @classmethod
    def one(cls, r: int, delta: Scalar) -> "AlgebraElement":
        return cls.from_diagram(identity_diagram(r), delta)

    def _check(self, other: "AlgebraElement") -> None:
        if self.r != other.r:
            raise ValueError(f"rank mismatch: {self.r} vs {other.r}")
        if self.delta != other.delta:
            raise ValueError(f"parameter mismatch: {self.delta} vs {other.delta}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, 0) + c
        return AlgebraElement(self.r, self.delta, terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.r, self.delta, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "AlgebraElement":
        return AlgebraElement(self.r, self.delta, {d: c * x for d, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.r, self.delta, self.terms) == (other.r, other.delta, other.terms)

    def __hash__(self) -> int:
        return hash((self.r, self.delta, tuple(self.terms.items())))

    def to_json(self) -> list[dict]:
        return [{"diagram": d.to_json(), "coeff": scalar_to_str(c)} for d, c in self.terms.items()]

    @classmethod
    def from_json(cls, obj: list, delta: Scalar, r: int) -> "AlgebraElement":
        terms: dict[BrauerDiagram, Scalar] = {}
        for item in obj:
            d = BrauerDiagram.from_json(item["diagram"])
            terms[d] = terms.get(d, 0) + scalar_from_str(item["coeff"])
        return cls(r, delta, terms)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    terms: dict[BrauerDiagram, Scalar] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            d, loops = compose(d1, d2)
            terms[d] = terms.get(d, 0) + c1 * c2 * a.delta**loops
    return AlgebraElement(a.r, a.delta, terms)


def element(d: BrauerDiagram, delta: Scalar, field: Field = QQ) -> AlgebraElement:
    return AlgebraElement.from_diagram(d, field(delta), field.one)
