import pytest
from hypothesis import given, settings, strategies as st

from brauerblocks.blocks import (StarContext, brauer_blocks, brute_force_orbit, has_smaller_conjugate,
                                 is_type_d, minimal_representative, orbit_invariant,
                                 orbit_partitions, reflection_plus, signed_apply, signed_compose,
                                 signed_perms, star_apply, star_conjugate, symplectic_blocks)
from brauerblocks.partitions import contains, enumerate_labels, make_partition, partitions_of, transpose


def labels(r):
    out = []
    for k in range(r + 1):
        out += [lam for lam in partitions_of(k) if len(lam) <= r and len(transpose(lam)) <= r]
    return out


def classes(bp):
    return {frozenset(c.members) for c in bp.classes}


def intersect(lam, mu):
    return make_partition(min(a, b) for a, b in zip(lam, mu))


def test_orbit_invariant_examples():
    ctx = StarContext(2, 0)
    empty = orbit_invariant((), ctx)
    assert empty.abs_multiset == (0, 2) and empty.has_zero
    assert orbit_invariant((1, 1), ctx) == empty
    two = orbit_invariant((2,), ctx)
    assert two.abs_multiset == (2, 4) and not two.has_zero and two.neg_parity == 1


def test_brauer_blocks_examples():
    assert classes(brauer_blocks(2, 0)) == {frozenset({(), (2,)}), frozenset({(1, 1)})}
    b = brauer_blocks(3, -2)
    assert b.class_of((1,)) == b.class_of((3,))
    b = brauer_blocks(4, 2)
    assert b.class_of((2, 2)) == b.class_of((2,))
    assert b.class_of((2, 2)) != b.class_of((1, 1))
    assert classes(brauer_blocks(0, 5)) == {frozenset({()})}


def test_symplectic_examples():
    b = symplectic_blocks(4, 2)
    assert b.class_of((2, 2)) == b.class_of((1, 1))
    assert b.class_of((2, 2)).minimal == (1, 1)
    assert all(len(c.members) == 1 for c in symplectic_blocks(2, 2).classes)


@pytest.mark.parametrize("r", range(0, 7))
def test_symplectic_is_transposed_brauer(r):
    for delta in range(-5, 6):
        brauer = {frozenset(transpose(l) for l in c) for c in classes(brauer_blocks(r, delta))}
        assert brauer == classes(symplectic_blocks(r, delta))


def test_minimal_representative_examples():
    assert minimal_representative((2, 2), StarContext(4, 2)) == (1, 1)
    assert minimal_representative((1, 1), StarContext(2, 0)) == ()
    assert minimal_representative((1, 1), StarContext(4, 2)) == (1, 1)
    small = [mu for mu in orbit_partitions((2, 2), StarContext(4, 2)) if sum(mu) <= 4]
    assert set(small) == {(1, 1), (2, 2)}


def test_star_apply_examples():
    ctx = StarContext(4, 2)
    assert star_apply((1, 2, 3, 4), (2, 2, 0, 0), ctx) == (2, 2, 0, 0)
    # s_{e1+e2} then sort: (1,0,-3,-4) -> (0,-1,-3,-4) -> (1,1,0,0)
    assert star_apply(reflection_plus(4, 0, 1), (2, 2, 0, 0), ctx) == (1, 1, 0, 0)
    with pytest.raises(ValueError):
        star_apply((1, 1, 3, 4), (0, 0, 0, 0), ctx)


def signed_perm(r):
    return st.tuples(st.permutations(range(1, r + 1)), st.lists(st.sampled_from((1, -1)), min_size=r, max_size=r)) \
        .map(lambda ps: tuple(s * x for s, x in zip(*ps)))


@settings(max_examples=100)
@given(st.integers(1, 6).flatmap(lambda r: st.tuples(
    st.just(r), signed_perm(r), signed_perm(r),
    st.lists(st.integers(-5, 5), min_size=r, max_size=r), st.integers(-6, 6))))
def test_star_action_group_law(data):
    r, w1, w2, x, delta = data
    ctx = StarContext(r, delta)
    assert star_apply(signed_compose(w1, w2), x, ctx) == star_apply(w1, star_apply(w2, x, ctx), ctx)
    assert signed_apply(signed_compose(w1, w2), x) == signed_apply(w1, signed_apply(w2, x))
    assert is_type_d(signed_compose(w1, w2)) == (is_type_d(w1) == is_type_d(w2))


def test_signed_perm_counts():
    from math import factorial
    for r in range(1, 6):
        assert len(list(signed_perms(r))) == 2 ** (r - 1) * factorial(r)
        assert len(list(signed_perms(r, type_d=False))) == 2**r * factorial(r)


@pytest.mark.parametrize("r", range(1, 6))
def test_invariant_soundness_against_brute_force(r):
    for delta in range(-6, 7):
        ctx = StarContext(r, delta)
        labs = labels(r)
        orbits = {lam: brute_force_orbit(lam, ctx) for lam in labs}
        for lam in labs:
            for mu in labs:
                brute = ctx.shifted(mu) in orbits[lam]
                assert brute == star_conjugate(lam, mu, ctx), (r, delta, lam, mu)


@pytest.mark.parametrize("r", range(1, 6))
def test_intersection_closure(r):
    for delta in range(-6, 7):
        ctx = StarContext(r, delta)
        labs = labels(r)
        for lam in labs:
            for mu in labs:
                if lam != mu and star_conjugate(lam, mu, ctx):
                    assert star_conjugate(lam, intersect(lam, mu), ctx), (r, delta, lam, mu)


@pytest.mark.parametrize("r", range(0, 8))
def test_unique_minimum_per_class(r):
    for delta in range(-8, 9):
        for side in (brauer_blocks, symplectic_blocks):
            for c in side(r, delta).classes:
                assert sum(1 for a in c.members
                           if not any(b != a and contains(a, b) for b in c.members)) == 1
                assert all(contains(a, c.minimal) for a in c.members)


@pytest.mark.parametrize("r", range(1, 6))
def test_orbit_partitions_are_the_conjugates(r):
    for delta in (-3, 0, 2, 5):
        ctx = StarContext(r, delta)
        for lam in labels(r):
            found = set(orbit_partitions(lam, ctx))
            assert all(star_conjugate(lam, mu, ctx) for mu in found)
            bounded = {mu for mu in partitions_of_len(r) if star_conjugate(lam, mu, ctx)}
            assert bounded <= found


def partitions_of_len(r, bound=12):
    out = []
    for k in range(bound + 1):
        out += [lam for lam in partitions_of(k) if len(lam) <= r]
    return out


def test_has_smaller_conjugate():
    assert has_smaller_conjugate((2, 2), StarContext(4, 2))
    assert not has_smaller_conjugate((1, 1), StarContext(4, 2))
    assert not has_smaller_conjugate((), StarContext(3, 1))


def test_classification_depends_only_on_integer_delta():
    # the same (r, delta) gives the same partition however it is reached
    for r in range(5):
        for delta in range(-4, 5):
            assert brauer_blocks(r, delta) == brauer_blocks(r, int(str(delta)))


def test_every_label_classified_once():
    for r in range(7):
        for delta in (-3, 0, 4):
            members = [lam for c in brauer_blocks(r, delta).classes for lam in c.members]
            assert sorted(members) == sorted(enumerate_labels(r))


def test_json_shape():
    obj = brauer_blocks(2, 0).to_json()
    assert obj["r"] == 2 and obj["delta"] == 0 and obj["side"] == "brauer"
    assert {tuple(c["minimal"]) for c in obj["classes"]} == {(), (1, 1)}
