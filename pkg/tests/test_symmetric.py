from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from brauerblocks import linalg as la
from brauerblocks.linalg import GF
from brauerblocks.partitions import contains, partitions_of, specht_dimension
from brauerblocks.symmetric import (MatrixRep, act_on_tabloid, close_group, compose_perm,
                                    hyperoctahedral_coinvariants, hyperoctahedral_generators,
                                    invariants_dimension, permutation_rep, reduced_word,
                                    regular_rep, sign_of, sign_twist, specht_rep, tabloids,
                                    trivial_rep)


def inner(chi1, chi2, t):
    return Fraction(sum(chi1[g] * chi2[g] for g in chi1), factorial(t))


def characters(rep):
    return {g: rep.character(g) for g in permutations(range(rep.t))}


def fixed_tabloids(lam, g):
    return sum(1 for w in tabloids(lam) if act_on_tabloid(g, w) == w)


def dominates(lam, mu):
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def test_small_specht_examples():
    sgn = specht_rep((1, 1))
    assert sgn.dim == 1 and sgn.generators == [[[-1]]]
    triv = specht_rep((4,))
    assert triv.dim == 1 and all(g == [[1]] for g in triv.generators)
    rep = specht_rep((2, 1))
    assert rep.dim == 2
    assert rep.character((0, 1, 2)) == 2
    assert rep.character((1, 0, 2)) == 0
    assert rep.character((1, 2, 0)) == -1


def test_sym3_character_table_by_conjugacy_sums():
    # brute force: the (2,1) character is the fixed-point count minus the trivial character
    rep = specht_rep((2, 1))
    for g in permutations(range(3)):
        fixed = sum(1 for k in range(3) if g[k] == k)
        assert rep.character(g) == fixed - 1


@pytest.mark.parametrize("t", range(1, 6))
def test_specht_characters_orthonormal(t):
    chars = {lam: characters(specht_rep(lam)) for lam in partitions_of(t)}
    for lam, chi in chars.items():
        assert chi[tuple(range(t))] == specht_dimension(lam)
        for mu, psi in chars.items():
            assert inner(chi, psi, t) == (1 if lam == mu else 0)


@pytest.mark.parametrize("t", range(1, 6))
def test_youngs_rule_triangularity(t):
    for mu in partitions_of(t):
        perm = {g: fixed_tabloids(mu, g) for g in permutations(range(t))}
        rep_chars = characters(permutation_rep(mu))
        assert rep_chars == perm
        for lam in partitions_of(t):
            mult = inner(characters(specht_rep(lam)), perm, t)
            if lam == mu:
                assert mult == 1
            elif not dominates(lam, mu):
                assert mult == 0


@pytest.mark.parametrize("t", range(0, 7))
def test_specht_form_nonsingular(t):
    for lam in partitions_of(t):
        rep = specht_rep(lam)
        assert la.determinant(rep.form) != 0


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda t: st.tuples(st.permutations(range(t)), st.permutations(range(t)))))
def test_matrix_is_a_homomorphism(pair):
    a, b = (tuple(x) for x in pair)
    t = len(a)
    lam = (t - 1, 1) if t > 1 else (1,)
    rep = specht_rep(lam)
    assert la.mat_equal(la.matmul(rep.matrix(a), rep.matrix(b)), rep.matrix(compose_perm(a, b)))


@settings(max_examples=40)
@given(st.integers(1, 7).flatmap(lambda t: st.permutations(range(t))))
def test_reduced_word_length_is_inversion_count(sigma):
    sigma = tuple(sigma)
    inversions = sum(1 for i in range(len(sigma)) for j in range(i + 1, len(sigma)) if sigma[i] > sigma[j])
    assert len(reduced_word(sigma)) == inversions
    assert sign_of(sigma) == (-1) ** inversions


def test_permutation_rep_examples():
    assert permutation_rep((3,)).dim == 1
    assert permutation_rep((1, 1, 1)).dim == 6
    assert permutation_rep((2, 1)).dim == 3


def test_specht_bound():
    with pytest.raises(ValueError):
        specht_rep((5, 4))


def test_sign_twist():
    triv = trivial_rep(2)
    assert sign_twist(triv).generators == specht_rep((1, 1)).generators
    rep = specht_rep((3, 1))
    assert sign_twist(sign_twist(rep)).generators == rep.generators
    twisted = sign_twist(specht_rep((2, 1)))
    assert characters(twisted) == characters(specht_rep((2, 1)))


@pytest.mark.parametrize("t", range(1, 6))
def test_sign_twist_is_transpose(t):
    from brauerblocks.partitions import transpose
    for lam in partitions_of(t):
        assert characters(sign_twist(specht_rep(lam))) == characters(specht_rep(transpose(lam)))


def test_braid_relations_are_enforced():
    with pytest.raises(ValueError):
        _bad_rep()


def _bad_rep():
    # s1 -> diag(1,-1), s2 -> swap: fails the braid relation
    return MatrixRep(3, 2, [[[1, 0], [0, -1]], [[0, 1], [1, 0]]])


def test_coinvariant_examples():
    assert hyperoctahedral_coinvariants(trivial_rep(4), 2).dim == 1
    assert hyperoctahedral_coinvariants(trivial_rep(4), 1).dim == 1
    assert hyperoctahedral_coinvariants(specht_rep((1, 1)), 1).dim == 0
    assert hyperoctahedral_coinvariants(regular_rep(2), 1).dim == 1
    with pytest.raises(ValueError):
        hyperoctahedral_coinvariants(trivial_rep(2), 2)


@pytest.mark.parametrize("i", range(0, 4))
def test_hyperoctahedral_group_order(i):
    group = close_group(hyperoctahedral_generators(2 * i, i), 2 * i)
    assert len(group) == 2**i * factorial(i)
    # stabiliser of the standard matching
    pairs = {frozenset((2 * k, 2 * k + 1)) for k in range(i)}
    for g in group:
        assert {frozenset(g[x] for x in p) for p in pairs} == pairs


@pytest.mark.parametrize("t", range(0, 7))
def test_coinvariants_equal_invariants_in_char_zero(t):
    for lam in partitions_of(t):
        rep = specht_rep(lam)
        for i in range(t // 2 + 1):
            co = hyperoctahedral_coinvariants(rep, i)
            assert co.dim == invariants_dimension(rep, hyperoctahedral_generators(t, i))


def test_coinvariant_residual_action_is_a_representation():
    rep = permutation_rep((2, 1, 1))
    co = hyperoctahedral_coinvariants(rep, 1)
    assert co.residual.t == 2 and co.residual.dim == co.dim


def test_coinvariants_in_characteristic_two_differ():
    # over GF(2) the sign representation is trivial
    rep = specht_rep((1, 1), GF(2))
    assert hyperoctahedral_coinvariants(rep, 1).dim == 1
