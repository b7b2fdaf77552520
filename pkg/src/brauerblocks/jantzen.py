"""Jantzen sum formula for Weyl modules of Sp_{2m}.

``jsf_full`` evaluates the general right hand side over every positive root
of C_m and every level l; ``jsf_generic`` evaluates the reduced sum over the
roots eps_i + eps_j with i < j <= r in the regime |delta| + 2r < p/2, where
n = 2m = up - delta.  The two must agree term by term.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator

from .characters import rho, straighten, straighten_shifted
from .linalg import is_prime, p_valuation
from .partitions import Partition, contains, format_partition, label_key, make_partition, pad, transpose

DEFAULT_MAX_M = 200


class HypothesisError(ValueError):
    """An input violates a hypothesis of the sum formula."""


@dataclass(frozen=True, order=True)
class RootC:
    """Positive root of C_m; indices are 0-based, j is None for 2 eps_i."""

    kind: str
    i: int
    j: int | None = None

    def vector(self, m: int) -> list[int]:
        v = [0] * m
        if self.kind == "long":
            v[self.i] = 2
        else:
            v[self.i] = 1
            v[self.j] = 1 if self.kind == "plus" else -1
        return v

    def coroot(self, m: int) -> list[int]:
        if self.kind == "long":
            v = [0] * m
            v[self.i] = 1
            return v
        return self.vector(m)

    def pairing(self, x) -> int:
        """<x, alpha^vee>."""
        if self.kind == "long":
            return x[self.i]
        return x[self.i] + x[self.j] if self.kind == "plus" else x[self.i] - x[self.j]

    def reflect(self, x, shift: int) -> list[int]:
        """x - shift * alpha."""
        y = list(x)
        if self.kind == "long":
            y[self.i] -= 2 * shift
        else:
            y[self.i] -= shift
            y[self.j] += -shift if self.kind == "plus" else shift
        return y

    def __str__(self) -> str:
        if self.kind == "long":
            return f"2e{self.i + 1}"
        sign = "+" if self.kind == "plus" else "-"
        return f"e{self.i + 1}{sign}e{self.j + 1}"


def positive_roots(m: int) -> Iterator[RootC]:
    for i in range(m):
        yield RootC("long", i)
    for i in range(m):
        for j in range(i + 1, m):
            yield RootC("minus", i, j)
            yield RootC("plus", i, j)


@dataclass(frozen=True)
class RawTerm:
    root: RootC
    level: int
    coeff: int
    sign: int
    mu: Partition | None


@dataclass
class JsfResult:
    lam: Partition
    terms: dict[Partition, int] = dc_field(default_factory=dict)
    raw_terms: list[RawTerm] = dc_field(default_factory=list)

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda kv: label_key(kv[0]))

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list[dict]:
        return [{"mu": list(mu), "coeff": c} for mu, c in self.items()]


def _accumulate(result: JsfResult, term: RawTerm) -> None:
    result.raw_terms.append(term)
    if term.sign:
        new = result.terms.get(term.mu, 0) + term.sign * term.coeff
        if new:
            result.terms[term.mu] = new
        else:
            result.terms.pop(term.mu)


def _check_prime(p: int) -> None:
    if not is_prime(p) or p < 3:
        raise HypothesisError(f"p = {p} must be a prime >= 3")


def jsf_full(lam: Partition, m: int, p: int, max_m: int = DEFAULT_MAX_M) -> JsfResult:
    """Sum of nu_p(lp) chi_0(s_{alpha,l} . lam) over all (alpha, l) with <lam+rho, alpha^vee> > lp."""
    _check_prime(p)
    lam = make_partition(lam)
    if len(lam) > m:
        raise HypothesisError(f"l(lambda) = {len(lam)} exceeds m = {m}")
    if m > max_m:
        raise HypothesisError(f"m = {m} exceeds the configured bound {max_m}")
    x = [a + b for a, b in zip(pad(lam, m), rho(m))]
    result = JsfResult(lam)
    for alpha in positive_roots(m):
        h = alpha.pairing(x)
        level = 1
        while h - level * p > 0:
            y = alpha.reflect(x, h - level * p)
            sign, ordered = straighten_shifted(y)
            mu = None
            if sign:
                mu = make_partition(a - b for a, b in zip(ordered, rho(m)))
            _accumulate(result, RawTerm(alpha, level, 1 + p_valuation(level, p), sign, mu))
            level += 1
    return result


@dataclass(frozen=True)
class GenericSetting:
    r: int
    p: int
    u: int
    delta: int

    @property
    def n(self) -> int:
        return self.u * self.p - self.delta

    @property
    def m(self) -> int:
        return self.n // 2

    def rho_hat_doubled(self) -> list[int]:
        return [-self.delta - 2 * i for i in range(self.r)]


def check_generic_hypotheses(lam: Partition, r: int, p: int, u: int, delta: int) -> GenericSetting:
    _check_prime(p)
    lam = make_partition(lam)
    if u == 0:
        raise HypothesisError("u must be nonzero")
    if not 2 * (abs(delta) + 2 * r) < p:
        raise HypothesisError(f"|delta| + 2r < p/2 fails: |{delta}| + 2*{r} >= {p}/2")
    n = u * p - delta
    if n <= 0 or n % 2:
        raise HypothesisError(f"n = up - delta = {n} must be a positive even integer")
    if not -p < 2 * (n - u * p) < p:
        raise HypothesisError(f"n - up = {n - u * p} must lie strictly between -p/2 and p/2")
    if len(lam) > r or len(transpose(lam)) > r:
        raise HypothesisError(f"l(lambda), l(lambda') <= r = {r} fails for {format_partition(lam)}")
    setting = GenericSetting(r, p, u, delta)
    assert setting.m > r
    return setting


def jsf_generic(lam: Partition, r: int, p: int, u: int, delta: int) -> JsfResult:
    """nu_p(up) * sum of chi_0(s_alpha * lam) over alpha = eps_i + eps_j, i < j <= r, <lam + rho_hat, alpha^vee> > 0."""
    setting = check_generic_hypotheses(lam, r, p, u, delta)
    lam = make_partition(lam)
    coeff = p_valuation(abs(u * p), p)
    rho_hat2 = setting.rho_hat_doubled()
    x2 = [2 * a + b for a, b in zip(pad(lam, r), rho_hat2)]
    result = JsfResult(lam)
    for i in range(r):
        for j in range(i + 1, r):
            if x2[i] + x2[j] <= 0:
                continue
            y2 = list(x2)
            y2[i], y2[j] = -x2[j], -x2[i]
            star = [(a - b) // 2 for a, b in zip(y2, rho_hat2)]
            sign, mu = straighten(star + [0] * (setting.m - r))
            _accumulate(result, RawTerm(RootC("plus", i, j), u, coeff, sign, mu))
    return result


def chi_criterion(lam: Partition, i: int, j: int, r: int, delta: int) -> bool:
    """Predicted nonvanishing of chi_0(s_alpha * lam) for alpha = eps_i + eps_j (0-based)."""
    x2 = [2 * a - delta - 2 * k for k, a in enumerate(pad(lam, r))]
    bound2 = delta + 2 * r
    if not (x2[i] < bound2 and x2[j] < bound2):
        return False
    return all(x2[k] != -x2[i] and x2[k] != -x2[j] for k in range(r) if k not in (i, j))


@dataclass
class LemmaReport:
    ok: bool = True
    failures: list[str] = dc_field(default_factory=list)
    counts: dict[str, int] = dc_field(default_factory=dict)

    def fail(self, message: str) -> None:
        self.ok = False
        self.failures.append(message)


def check_vanishing_lemmas(lam: Partition, r: int, p: int, u: int, delta: int,
                           full: JsfResult | None = None) -> LemmaReport:
    """Audit the raw terms of the full sum against the three reduction lemmas."""
    setting = check_generic_hypotheses(lam, r, p, u, delta)
    lam = make_partition(lam)
    if full is None:
        full = jsf_full(lam, setting.m, p)
    report = LemmaReport()
    s1: dict[tuple[int, int], RawTerm] = {}
    s2: dict[tuple[int, int], RawTerm] = {}
    x = [a + b for a, b in zip(pad(lam, setting.m), rho(setting.m))]
    for term in full.raw_terms:
        a = term.root
        if a.kind == "minus":
            if term.sign:
                report.fail(f"{lam}: ({a}, l={term.level}) survives straightening")
        elif a.kind == "long":
            if term.sign:
                s2[(a.i, term.level)] = term
        elif a.j >= r:
            if term.sign:
                if (a.i, term.level) in s1:
                    report.fail(f"{lam}: phi not injective at ({a}, l={term.level})")
                s1[(a.i, term.level)] = term
        elif term.sign:
            y = a.reflect(x, a.pairing(x) - term.level * p)
            if term.level != u:
                report.fail(f"{lam}: ({a}, l={term.level}) survives with l != u = {u}")
            if min(y) <= 0 or len(set(y)) < len(y):
                report.fail(f"{lam}: ({a}, l={term.level}) reflected entries not distinct positive")
    if set(s1) != set(s2):
        report.fail(f"{lam}: phi is not a bijection S_1 -> S_2: {sorted(s1)} vs {sorted(s2)}")
    for key in set(s1) & set(s2):
        t1, t2 = s1[key], s2[key]
        if t1.mu != t2.mu or t1.sign != -t2.sign:
            report.fail(f"{lam}: paired terms at {key} do not cancel")
    report.counts = {"S1": len(s1), "S2": len(s2), "raw": len(full.raw_terms)}
    return report


def check_generic_structure(lam: Partition, r: int, p: int, u: int, delta: int,
                            generic: JsfResult | None = None) -> LemmaReport:
    """No cancellation, inclusion mu < lam with |lam| - |mu| even, and the chi criterion."""
    lam = make_partition(lam)
    if generic is None:
        generic = jsf_generic(lam, r, p, u, delta)
    report = LemmaReport()
    seen: dict[Partition, RootC] = {}
    for term in generic.raw_terms:
        a = term.root
        predicted = chi_criterion(lam, a.i, a.j, r, delta)
        if predicted != bool(term.sign):
            report.fail(f"{lam}: chi criterion predicts {predicted} for {a}, straightening gives {term.sign}")
        if not term.sign:
            continue
        mu = term.mu
        if mu in seen:
            report.fail(f"{lam}: roots {seen[mu]} and {a} give the same {mu}")
        seen[mu] = a
        diff = sum(lam) - sum(mu)
        if not (contains(lam, mu) and mu != lam and diff > 0 and diff % 2 == 0):
            report.fail(f"{lam}: term {mu} is not a proper subpartition of even codimension")
    return report


def is_reducible(lam: Partition, r: int, p: int, u: int, delta: int) -> bool:
    """True iff the generic sum formula is nonzero, i.e. Delta_0(lam) is not irreducible."""
    return not jsf_generic(lam, r, p, u, delta).is_zero()


def admissible_settings(r: int, delta: int, primes=(3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47),
                        u_values=(1, 2, 3)) -> list[GenericSetting]:
    """All (p, u) from the given ranges satisfying the generic hypotheses for (r, delta)."""
    out = []
    for p in primes:
        for u in u_values:
            try:
                out.append(check_generic_hypotheses((), r, p, u, delta))
            except HypothesisError:
                continue
    return out
