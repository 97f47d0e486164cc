from fractions import Fraction

import pytest
from hypothesis import given, settings

from spinsym.algebra import (
    Field,
    Multivector,
    Signature,
    conjugation,
    grade_involution,
    helicity_idempotents,
    pseudo_conjugation,
    random_multivector,
    reversion,
    volume_element,
    volume_epsilon,
    volume_square_sign,
)
from spinsym.exact import QC

from conftest import context_and_triple


CL30 = Signature(3, 0, Field.REAL)
C3 = Signature(3, 0, Field.COMPLEX)


def gen(ctx, i):
    return Multivector.generator(ctx, i)


def test_generator_anticommutation_base_case():
    e1, e2 = gen(CL30, 1), gen(CL30, 2)
    assert e1 * e2 == Multivector.blade(CL30, 0b011)
    assert e2 * e1 == Multivector.blade(CL30, 0b011, -1)


def test_metric_squares():
    st = Signature(1, 3, Field.REAL)
    assert gen(st, 1) * gen(st, 1) == Multivector.scalar(st, 1)
    for i in (2, 3, 4):
        assert gen(st, i) * gen(st, i) == Multivector.scalar(st, -1)


def test_volume_element_center_and_square():
    w = volume_element(CL30)
    assert w * w == Multivector.scalar(CL30, -1)
    for i in (1, 2, 3):
        g = gen(CL30, i)
        assert w * g == g * w
    assert volume_square_sign(Signature(1, 3, Field.REAL)) == -1
    for (p, q) in ((2, 1), (3, 2), (5, 0), (6, 1)):
        if (p - q) % 8 in (1, 5):
            assert volume_square_sign(Signature(p, q, Field.REAL)) == 1


def test_context_mismatch_rejected():
    other = Signature(2, 1, Field.REAL)
    with pytest.raises(ValueError):
        _ = gen(CL30, 1) * gen(other, 1)


@given(context_and_triple())
@settings(max_examples=100, deadline=None)
def test_associativity_and_distributivity(data):
    _, (x, y, z) = data
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(context_and_triple())
@settings(max_examples=100, deadline=None)
def test_morphism_laws(data):
    _, (x, y, _) = data
    assert grade_involution(x * y) == grade_involution(x) * grade_involution(y)
    assert reversion(x * y) == reversion(y) * reversion(x)
    assert conjugation(x * y) == conjugation(y) * conjugation(x)
    assert pseudo_conjugation(x * y) == pseudo_conjugation(x) * pseudo_conjugation(y)


@given(context_and_triple())
@settings(max_examples=100, deadline=None)
def test_involutivity_and_composition(data):
    _, (x, _, _) = data
    assert grade_involution(grade_involution(x)) == x
    assert reversion(reversion(x)) == x
    assert conjugation(conjugation(x)) == x
    assert pseudo_conjugation(pseudo_conjugation(x)) == x
    assert conjugation(x) == reversion(grade_involution(x))
    assert conjugation(x) == grade_involution(reversion(x))


def test_grade_signs():
    e1 = gen(CL30, 1)
    e12 = Multivector.blade(CL30, 0b011)
    assert grade_involution(e1) == -e1
    assert grade_involution(e12) == e12
    assert reversion(e12) == -e12
    assert reversion(e1) == e1
    assert conjugation(e1) == -e1
    assert conjugation(e12) == -e12


def test_pseudo_conjugation_split():
    i = QC(0, 1)
    assert pseudo_conjugation(Multivector.scalar(C3, i)) == Multivector.scalar(C3, -i)
    x = gen(C3, 1) + Multivector.generator(C3, 2).scale(i)
    assert pseudo_conjugation(x) == gen(C3, 1) - Multivector.generator(C3, 2).scale(i)
    # identity on a real context
    xr = gen(CL30, 1)
    assert pseudo_conjugation(xr) == xr


def test_conjugate_volume_parity():
    # q even fixes the volume element, q odd negates it
    for (p, q) in ((3, 0), (1, 2), (2, 1), (2, 3), (5, 0), (4, 1)):
        ctx = Signature(p, q, Field.COMPLEX)
        w = volume_element(ctx)
        expect = w if q % 2 == 0 else -w
        assert pseudo_conjugation(w) == expect


def test_helicity_idempotents_c3():
    h = helicity_idempotents(C3)
    half = QC(Fraction(1, 2))
    i = QC(0, 1)
    w = Multivector.blade(C3, 0b111)
    one = Multivector.scalar(C3, 1)
    assert h.plus == (one + w.scale(i)).scale(half)
    assert h.minus == (one - w.scale(i)).scale(half)
    assert (h.plus * h.minus).is_zero()
    assert h.plus * h.plus == h.plus
    assert h.minus * h.minus == h.minus
    assert h.plus + h.minus == one


def test_helicity_requires_odd_complex():
    with pytest.raises(ValueError):
        helicity_idempotents(Signature(4, 0, Field.COMPLEX))
    with pytest.raises(ValueError):
        helicity_idempotents(CL30)


def test_epsilon_choice():
    assert volume_epsilon(Signature(5, 0, Field.COMPLEX)) == QC(1)
    assert volume_epsilon(C3) == QC(0, 1)


def test_center_anticenter(rng):
    for n in (2, 3, 4, 5):
        ctx = Signature(n, 0, Field.REAL)
        w = volume_element(ctx)
        for i in range(1, n + 1):
            g = gen(ctx, i)
            if n % 2:
                assert w * g == g * w
            else:
                assert w * g == -(g * w)


def test_automorphism_group_table(rng):
    ctx = Signature(2, 2, Field.COMPLEX)
    maps = {"I": lambda v: v, "P": grade_involution, "T": reversion,
            "PT": conjugation}
    table = {
        ("I", "I"): "I", ("I", "P"): "P", ("I", "T"): "T", ("I", "PT"): "PT",
        ("P", "I"): "P", ("P", "P"): "I", ("P", "T"): "PT", ("P", "PT"): "T",
        ("T", "I"): "T", ("T", "P"): "PT", ("T", "T"): "I", ("T", "PT"): "P",
        ("PT", "I"): "PT", ("PT", "P"): "T", ("PT", "T"): "P", ("PT", "PT"): "I",
    }
    for _ in range(25):
        x = random_multivector(ctx, rng, nterms=5)
        for (a, b), want in table.items():
            assert maps[a](maps[b](x)) == maps[want](x)
