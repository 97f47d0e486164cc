from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spinsym.exact import ExactMatrix, I, ONE, QC, exact_sqrt

qcs = st.builds(
    QC,
    st.fractions(max_numerator=50, max_denominator=9),
    st.fractions(max_numerator=50, max_denominator=9),
)


@given(qcs, qcs, qcs)
@settings(max_examples=80, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a
    if b:
        assert (a / b) * b == a


@given(qcs)
@settings(max_examples=50, deadline=None)
def test_conjugation_involution(a):
    assert a.conj().conj() == a
    assert (a * a.conj()).is_real()


def test_i_squares_to_minus_one():
    assert I * I == QC(-1)
    assert ONE / I == -I


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert exact_sqrt(Fraction(2)) is None
    assert exact_sqrt(Fraction(0)) == 0
    with pytest.raises(ValueError):
        exact_sqrt(Fraction(-1))


def test_matrix_algebra_basics():
    a = ExactMatrix([[1, 2], [3, 4]])
    b = ExactMatrix([[0, 1], [1, 0]])
    assert a * b == ExactMatrix([[2, 1], [4, 3]])
    assert (a + b) - b == a
    assert a.T.T == a
    assert a.trace() == QC(5)
    assert a.kron(b).side == 4


def test_inverse_and_rank():
    a = ExactMatrix([[1, 2], [3, 4]])
    assert a * a.inverse() == ExactMatrix.identity(2)
    assert a.rank() == 2
    assert ExactMatrix([[1, 2], [2, 4]]).rank() == 1
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [2, 4]]).inverse()


def test_scalar_canonicalization_and_proportionality():
    m = ExactMatrix([[QC(0), QC(0, 2)], [QC(-2), QC(0)]])
    canon = m.canonical_scalar_form()
    assert canon.first_nonzero() == ONE
    assert m.proportional_to(canon) == QC(0, 2)
    assert m.proportional_to(ExactMatrix.identity(2)) is None


def test_entry_quads_roundtrip():
    m = ExactMatrix([[QC(Fraction(1, 2), Fraction(-3, 4)), QC(0)],
                     [QC(5), QC(0, 1)]])
    again = ExactMatrix.from_entry_quads(2, m.entry_quads())
    assert again == m
