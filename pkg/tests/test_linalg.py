from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from brauerblocks import linalg as la
from brauerblocks.linalg import GF, QQ, ModP


small_matrix = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 5).flatmap(
        lambda m: st.lists(st.lists(st.integers(-4, 4), min_size=m, max_size=m), min_size=n, max_size=n)))


def test_modp_arithmetic():
    a, b = ModP(3, 7), ModP(5, 7)
    assert a + b == ModP(1, 7)
    assert a * b == ModP(1, 7)
    assert (a / b) * b == a
    assert str(ModP(12, 7)) == "5 mod 7"
    assert not ModP(7, 7)


def test_field_coercion():
    assert QQ(Fraction(4, 2)) == 2 and isinstance(QQ(Fraction(4, 2)), int)
    assert GF(5)(Fraction(1, 2)) == ModP(3, 5)
    with pytest.raises(ValueError):
        GF(6)


def test_scalar_strings():
    for x in (Fraction(3, 2), 7, ModP(5, 23)):
        assert la.scalar_from_str(la.scalar_to_str(x)) == x


def test_p_valuation():
    assert la.p_valuation(46, 23) == 1
    assert la.p_valuation(23 * 23 * 2, 23) == 2
    assert la.p_valuation(5, 23) == 0


@settings(max_examples=60)
@given(small_matrix)
def test_rank_nullity(a):
    n = len(a[0])
    null = la.nullspace(a, n)
    assert la.rank(a) + len(null) == n
    for v in null:
        assert all(x == 0 for x in la.matvec(a, v))


@settings(max_examples=60)
@given(small_matrix)
def test_rank_agrees_with_rref(a):
    rows, piv = la.rref(a)
    assert la.rank(a) == len(piv) == len(rows)
    assert la.rank(la.transpose(a)) == la.rank(a)


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_determinant_and_inverse(a):
    det = la.determinant(a)
    assert (det != 0) == (la.rank(a) == len(a))
    if det:
        inv = la.inverse(a)
        assert la.mat_equal(la.matmul(a, inv), la.identity(len(a)))


def test_rank_mod_p_differs_from_rational():
    a = [[1, 1], [1, 4]]
    assert la.rank(a) == 2
    assert la.rank(la.to_field(a, GF(3))) == 1


def test_solve():
    a = [[1, 2], [3, 4], [5, 6]]
    assert la.solve(a, [5, 11, 17]) == [1, 2]
    assert la.solve(a, [1, 0, 0]) is None
