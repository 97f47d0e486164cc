"""Machine verification sweeps over every identity family in the package.

Each suite returns a list of named checks.  A check marked as an expected
failure records a documented discrepancy: the two-dimensional parity anomaly
(the volume matrix of the smallest algebra cannot satisfy the rotation
commutation pattern) and the three split signatures where the simplified
count-mod-4 sign law for Pi*conj(Pi) ignores generator squares and disagrees
with the exact value.  Expected failures do not fail a run; an expected
failure that unexpectedly passes does.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra import (
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
    volume_square_sign,
)
from .classify import (
    bw_real_add,
    bw_real_class,
    idempotent_degree,
    karoubi_factorization,
    primitive_idempotent,
    radon_hurwitz,
    ring_class,
    spinor_rank_of_idempotent,
)
from .exact import ExactMatrix, QC
from .lorentz import (
    RepParams,
    commut2_residual,
    commut_residual,
    fundamental_identification,
    gn_operators,
    ladder,
    predict_family,
    symmetry_relations,
    tensor_operators,
)
from .neutrino import (
    Chirality,
    DHSpinor,
    PlaneWave,
    dh_matrix,
    dh_matrix_from_blades,
    dh_residual,
    dh_split_residuals,
    dirac_momentum_operator,
    gamma_basis,
    helicity_projectors,
    weyl_residual,
)
from .quotient import (
    SYMMETRY_NAMES,
    central_unit,
    classify_quotient,
    descends_through_quotient,
    epsilon_map,
    transfer_conditions_real,
    transfer_report,
)
from .spinbasis import (
    SpinBasis,
    build_even_spinbasis,
    chi_quotient,
    pauli_basis,
    permuted_spinbasis,
    real_split_basis,
    span_rank,
    spinbasis,
    two_slot_of_multivector,
    variant_spinbasis,
)
from .symmetries import (
    conjugation_condition_holds,
    generator_symmetry_split,
    matrix_C,
    matrix_E,
    matrix_W,
    matrix_Pi,
    pi_conj_square_sign,
    pi_sign_law_printed,
    pi_sign_law_with_squares,
    pi_solution_oracle,
    pi_w_commutation_sign,
    pi_w_parity_law,
    reflection_group_class,
)

SUITE_NAMES = ("clifford", "symmetries", "relations", "periodicity",
               "quotient", "neutrino")

# split signatures where the simplified sign law ignores generator squares
PI_SIGN_LAW_EXCEPTIONS = ((0, 2), (2, 4), (7, 1))


@dataclass
class Check:
    name: str
    passed: bool
    expected_failure: bool = False
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.passed != self.expected_failure

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "expected_failure": self.expected_failure,
            "detail": self.detail,
        }


@dataclass
class SuiteResult:
    suite: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    def add(self, name, passed, expected_failure=False, detail=""):
        self.checks.append(Check(name, bool(passed), expected_failure, detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def counts(self):
        return {
            "total": len(self.checks),
            "passed": sum(c.passed and not c.expected_failure for c in self.checks),
            "failed": sum((not c.passed) and not c.expected_failure for c in self.checks),
            "expected_failures": sum(c.expected_failure for c in self.checks),
        }

    def to_dict(self):
        return {
            "suite": self.suite,
            "ok": self.ok,
            "counts": self.counts(),
            "seconds": round(self.seconds, 3),
            "checks": [c.to_dict() for c in self.checks],
        }


# -- clifford -----------------------------------------------------------------

def suite_clifford(max_n: int = 8, seed: int = 0, trials: int = 200) -> SuiteResult:
    out = SuiteResult("clifford")
    rng = random.Random(seed)
    for n in range(1, min(max_n, 9) + 1):
        for p in (n, max(n - 2, 0)):
            q = n - p
            if q < 0:
                continue
            ctx = Signature(p, q, Field.REAL if q else Field.COMPLEX)
            ok = True
            for _ in range(trials):
                x = random_multivector(ctx, rng, nterms=3)
                y = random_multivector(ctx, rng, nterms=3)
                z = random_multivector(ctx, rng, nterms=3)
                if (x * y) * z != x * (y * z):
                    ok = False
                    break
            out.add(f"associativity ({p},{q}) x{trials}", ok)
    ctx = Signature(3, 0, Field.COMPLEX)
    for _ in range(100):
        x = random_multivector(ctx, rng)
        y = random_multivector(ctx, rng)
        if grade_involution(x * y) != grade_involution(x) * grade_involution(y):
            out.add("grade involution multiplicative", False)
            break
        if reversion(x * y) != reversion(y) * reversion(x):
            out.add("reversion antimultiplicative", False)
            break
        if pseudo_conjugation(x * y) != pseudo_conjugation(x) * pseudo_conjugation(y):
            out.add("pseudo conjugation multiplicative", False)
            break
    else:
        out.add("morphism laws x100", True)
    x = random_multivector(ctx, rng, nterms=6)
    out.add(
        "involutivity of the four maps",
        grade_involution(grade_involution(x)) == x
        and reversion(reversion(x)) == x
        and conjugation(conjugation(x)) == x
        and pseudo_conjugation(pseudo_conjugation(x)) == x,
    )
    out.add(
        "conjugation = reversion o involution x100",
        all(
            conjugation(y) == reversion(grade_involution(y))
            for y in (random_multivector(ctx, rng) for _ in range(100))
        ),
    )
    # composition table of {id, involution, reversion, conjugation}
    maps = {
        "I": lambda v: v, "P": grade_involution, "T": reversion, "PT": conjugation,
    }
    group = {
        ("P", "P"): "I", ("T", "T"): "I", ("PT", "PT"): "I",
        ("P", "T"): "PT", ("T", "P"): "PT",
        ("P", "PT"): "T", ("PT", "P"): "T",
        ("T", "PT"): "P", ("PT", "T"): "P",
    }
    samples = [random_multivector(ctx, rng, nterms=5) for _ in range(20)]
    table_ok = all(
        maps[a](maps[b](s)) == maps[g](s)
        for (a, b), g in group.items()
        for s in samples
    )
    out.add("automorphism composition table", table_ok)
    # center behaviour of the volume element
    for n in range(2, min(max_n, 7) + 1):
        ctx = Signature(n, 0, Field.REAL)
        w = volume_element(ctx)
        flips = []
        for i in range(1, n + 1):
            g = Multivector.generator(ctx, i)
            flips.append(w * g == (g * w if n % 2 else -(g * w)))
        out.add(f"volume element center/anticenter n={n}", all(flips))
    # volume square case table
    table_ok = True
    for p in range(0, 10):
        for q in range(0, 10):
            if p + q < 1 or p + q > 9:
                continue
            s = volume_square_sign(Signature(p, q, Field.REAL))
            want = 1 if (p - q) % 8 in (0, 1, 4, 5) else -1
            table_ok = table_ok and s == want
    out.add("volume square sign table", table_ok)
    # helicity idempotents of the odd complex algebras
    for n in (3, 5, 7):
        ctx = Signature(n, 0, Field.COMPLEX)
        h = helicity_idempotents(ctx)
        one = Multivector.scalar(ctx, 1)
        out.add(
            f"helicity idempotents n={n}",
            h.plus * h.plus == h.plus
            and h.minus * h.minus == h.minus
            and (h.plus * h.minus).is_zero()
            and h.plus + h.minus == one,
        )
    # spin basis relations and exact span ranks
    for n in range(2, min(max_n + 2, 11)):
        basis = spinbasis(n)
        try:
            basis.validate()
            ok = True
        except ValueError:
            ok = False
        out.add(f"spinbasis relations n={n}", ok)
        if n % 2 == 0:
            out.add(f"span rank n={n}", span_rank(basis) == 4 ** (n // 2))
        else:
            out.add(f"span rank n={n}", span_rank(basis) == 4 ** (n // 2))
    # generator pair products are sigma_3 slots (up to the exact factor i)
    s0, _, _, s3 = pauli_basis()
    for k in (2, 3):
        basis = build_even_spinbasis(k)
        ok = True
        for j in range(k):
            prod = basis.mats[j] * basis.mats[k + j]
            slots = [s3 if t == j else s0 for t in range(k)]
            expect = slots[0]
            for m in slots[1:]:
                expect = expect.kron(m)
            ok = ok and prod == expect.scale(QC(0, 1))
        out.add(f"diagonal pair products k={k}", ok)
    # quotient map on matrices
    rngq = random.Random(seed + 1)
    for k in (1, 2):
        basis = spinbasis(2 * k + 1)
        ctx = basis.context
        u_mv = central_unit(ctx)
        ok = chi_quotient(two_slot_of_multivector(basis, u_mv)).is_identity()
        kernel_ok = True
        mult_ok = True
        for _ in range(50):
            x = random_multivector(ctx, rngq)
            y = random_multivector(ctx, rngq)
            kx = x - u_mv * x
            if not chi_quotient(two_slot_of_multivector(basis, kx)).is_zero():
                kernel_ok = False
            tx = two_slot_of_multivector(basis, x)
            ty = two_slot_of_multivector(basis, y)
            lhs = chi_quotient(two_slot_of_multivector(basis, x * y))
            if lhs != chi_quotient(tx) * chi_quotient(ty) or lhs != chi_quotient(tx * ty):
                mult_ok = False
        out.add(f"quotient map unit/kernel n={2*k+1}", ok and kernel_ok)
        out.add(f"quotient map multiplicative n={2*k+1}", mult_ok)
    return out


# -- symmetries ---------------------------------------------------------------

def suite_symmetries(max_n: int = 8, seed: int = 0) -> SuiteResult:
    out = SuiteResult("symmetries")
    for n in range(2, max_n + 1, 2):
        for maker, tag in ((spinbasis, "canonical"), (variant_spinbasis, "variant")):
            if tag == "variant" and n < 4:
                continue
            basis = maker(n)
            try:
                w = matrix_W(basis)
                e = matrix_E(basis)
                c = matrix_C(basis, e, w)
            except ArithmeticError as exc:
                out.add(f"W/E/C build n={n} {tag}", False, detail=str(exc))
                continue
            checks = [
                all(w * m * w.inverse() == -m for m in basis.mats),
                all(g * e == e * g.T for g in basis.mats),
                all(c * g.T == -(g * c) for g in basis.mats),
                (c.canonical_scalar_form()
                 == (e * w.T).canonical_scalar_form()),
            ]
            if tag == "canonical":
                want = 1 if n % 4 == 0 else -1
                checks.append((w * w).is_scalar_multiple_of_identity() == QC(want))
                m = len(generator_symmetry_split(basis)[0])
                esign = 1 if (m * (m - 1) // 2) % 2 == 0 else -1
                csign = 1 if (m * (m + 1) // 2) % 2 == 0 else -1
                checks.append(e.T == e.scale(QC(esign)))
                checks.append(c.T == c.scale(QC(csign)))
            out.add(f"W/E/C conditions n={n} {tag}", all(checks))
    # reflection group classes
    for n in range(2, max_n + 1, 2):
        g = reflection_group_class(spinbasis(n))
        want = ("Z2xZ2", (1, 1, 1)) if n % 4 == 0 else ("Q4/Z2", (-1, -1, -1))
        out.add(
            f"reflection class complex n={n}",
            (g.label.value, g.triple) == want,
        )
    # real-matrix generator bases of the real-ring algebras, against the
    # quoted case tables (raw squares are sign-meaningful over the reals)
    for (p, q), basis, want in _real_form_cases():
        g = reflection_group_class(basis, convention="raw")
        out.add(
            f"reflection class real form ({p},{q})",
            (g.label.value, g.triple) == want,
            detail=f"got ({g.label.value}, {g.triple})",
        )
    # Pi over the quaternionic grid
    quat = [
        (p, q)
        for p in range(9)
        for q in range(9)
        if 2 <= p + q <= max_n and (p + q) % 2 == 0 and (p - q) % 8 in (4, 6)
    ]
    for (p, q) in quat:
        basis = real_split_basis(p, q)
        res = matrix_Pi(basis)
        out.add(f"Pi conjugation condition ({p},{q})",
                conjugation_condition_holds(basis, res.matrix))
        oracle = pi_solution_oracle(basis, seed=seed + 13)
        out.add(f"Pi matches linear oracle ({p},{q})",
                res.matrix.proportional_to(oracle) is not None)
        s = pi_conj_square_sign(res.matrix)
        out.add(f"Pi conj square is -1 on quaternionic ring ({p},{q})", s == -1)
        out.add(
            f"Pi sign law with squares ({p},{q})",
            s == pi_sign_law_with_squares(basis, res.members),
        )
        printed_ok = s == pi_sign_law_printed(len(res.members))
        out.add(
            f"Pi printed count-mod-4 law ({p},{q})",
            printed_ok,
            expected_failure=(p, q) in PI_SIGN_LAW_EXCEPTIONS,
            detail="simplified law ignores the -1 squares of the chosen factors"
            if (p, q) in PI_SIGN_LAW_EXCEPTIONS
            else "",
        )
        out.add(
            f"Pi/W parity law ({p},{q})",
            pi_w_commutation_sign(basis) == pi_w_parity_law(res.a, res.b),
        )
    # ring-R split: Pi scalar whenever every split generator matrix is real
    for (p, q) in ((1, 1), (3, 3), (2, 2)):
        basis = real_split_basis(p, q)
        res = matrix_Pi(basis)
        out.add(f"Pi scalar on real ring ({p},{q})", res.scalar)
    return out


def _real_form_cases():
    """All-real-matrix bases for small real-ring signatures, with the class
    labels and signature triples the case tables assign them."""
    s0, s1, s2, s3 = pauli_basis()
    i_s2 = s2.scale(QC(0, 1))
    cases = []
    b20 = SpinBasis(Signature(2, 0, Field.COMPLEX), (s1, s3))
    cases.append(((2, 0), b20.validate(), ("Z4", (-1, 1, -1))))
    cases.append(((1, 1), real_split_basis(1, 1).validate(), ("D4/Z2", (1, 1, -1))))
    b31 = SpinBasis(
        Signature(3, 1, Field.COMPLEX),
        (s1.kron(s0), s3.kron(s1), s3.kron(s3), i_s2.kron(s0)),
    )
    cases.append(((3, 1), b31.validate(), ("Q4/Z2", (-1, -1, -1))))
    cases.append(((2, 2), real_split_basis(2, 2).validate(), ("Z4", (1, -1, -1))))
    return cases


# -- relations ----------------------------------------------------------------

def _pattern_sweep_cases(n: int):
    """Bases (canonical and flipped regime) with generator orders realizing
    each membership pattern at slots (c,a,b) = (1,2,3)."""
    cases = []
    for maker, tag in ((spinbasis, "canonical"), (variant_spinbasis, "variant")):
        if tag == "variant" and n < 4:
            continue
        base = maker(n)
        sym, skew = generator_symmetry_split(base)
        m = len(sym)
        e_pool = sym if m % 2 else skew
        o_pool = skew if m % 2 else sym
        regime = "odd-m" if m % 2 else "even-m"
        for pattern in product((True, False), repeat=3):
            need_in = sum(pattern)
            if need_in > len(e_pool) or 3 - need_in > len(o_pool):
                continue
            ins = list(e_pool)
            outs = list(o_pool)
            chosen = [ins.pop(0) if inn else outs.pop(0) for inn in pattern]
            order = chosen + ins + outs
            cases.append((tag, regime, pattern, permuted_spinbasis(base, order), m))
    return cases


def suite_relations(max_n: int = 8, seed: int = 0) -> SuiteResult:
    out = SuiteResult("relations")
    # fundamental block and its conjugate
    ops, expected = fundamental_identification()
    out.add("fundamental block equals signed Pauli products",
            all(m == expected[k] for k, m in ops.items()))
    out.add("fundamental commutation table exact", commut_residual(ops) == QC(0))
    out.add("fundamental ladder table exact", commut2_residual(ladder(ops)) == QC(0))
    conj = gn_operators(RepParams(Fraction(-1, 2), Fraction(3, 2)))
    out.add(
        "conjugate block flips boosts only",
        all(getattr(ops, k) == getattr(conj, k) for k in ("a23", "a13", "a12"))
        and all((getattr(ops, k) + getattr(conj, k)).is_zero()
                for k in ("b1", "b2", "b3")),
    )
    for l0, l1 in ((1, 2), (0, 2), (Fraction(1, 2), Fraction(5, 2)), (1, 3)):
        o = gn_operators(RepParams(Fraction(l0), Fraction(l1)))
        r1 = commut_residual(o)
        r2 = commut2_residual(ladder(o))
        if o.exact:
            ok = r1 == QC(0) and r2 == QC(0)
        else:
            ok = r1 is not None and r1 < 1e-12 and r2 < 1e-12
        out.add(f"commutation tables ({l0},{l1}) [{'exact' if o.exact else 'float'}]", ok)
    # relation-family sweep
    for n in (x for x in (4, 6, 8) if x <= max_n):
        for tag, regime, pattern, basis, m in _pattern_sweep_cases(n):
            w = matrix_W(basis)
            e = matrix_E(basis)
            c = matrix_C(basis, e, w)
            opsn = tensor_operators(basis, 1, 2, 3)
            table = symmetry_relations(opsn, w, e, c)
            e_size = len(generator_symmetry_split(basis)[0])
            if e_size % 2 == 0:
                e_size = basis.n - e_size
            pred = predict_family(basis.n, e_size, pattern)
            label = f"family n={n} {tag} pattern={''.join('i' if x else 'o' for x in pattern)}"
            out.add(label, table.family == pred and table.w_conforms,
                    detail=f"computed {table.family}, predicted {pred}")
            if table.family in ("T1/T2", "T5/T6", "T13/T14", "T21/T22"):
                out.add(label + " ladder", table.ladder_family is not None)
    # the two-dimensional anomaly: W fails the rotation commutation pattern
    b2 = spinbasis(3)  # three generators so the boost triple exists
    even2 = SpinBasis(Signature(2, 0, Field.COMPLEX), b2.mats[:2])
    w2 = matrix_W(even2)
    ops2 = tensor_operators(b2, 1, 2, 3)
    row = tuple(
        "C" if (w2 * m - m * w2).is_zero() else
        "A" if (w2 * m + m * w2).is_zero() else "N"
        for _, m in ops2.items()
    )
    out.add(
        "two-dimensional parity anomaly",
        row == ("C", "C", "C", "A", "A", "A"),
        expected_failure=True,
        detail=f"W row is {row}: the volume matrix of the smallest algebra "
        "cannot commute with all rotation operators",
    )
    # real representation classes: E and C commute with a same-square
    # rotation trio (boosts vanish on real representations)
    real_forms = {pq: b for pq, b, _ in _real_form_cases()}
    for (p, q), (ci, ai, bi) in (((3, 1), (1, 2, 3)), ((3, 3), (1, 2, 3)),
                                 ((3, 3), (4, 5, 6))):
        basis = real_forms.get((p, q)) or real_split_basis(p, q)
        e = matrix_E(basis)
        c = matrix_C(basis, e)
        opsr = tensor_operators(basis, ci, ai, bi)
        rotations = (opsr.a23, opsr.a13, opsr.a12)
        out.add(
            f"real class rotations commute ({p},{q}) @({ci},{ai},{bi})",
            all((x * e - e * x).is_zero() for x in rotations)
            and all((x * c - c * x).is_zero() for x in rotations),
        )
    return out


# -- periodicity ---------------------------------------------------------------

def suite_periodicity(max_n: int = 8, seed: int = 0) -> SuiteResult:
    out = SuiteResult("periodicity")
    out.add("radon-hurwitz base table",
            tuple(radon_hurwitz(i) for i in range(8)) == (0, 1, 2, 2, 3, 3, 3, 3))
    out.add("radon-hurwitz cycle", all(
        radon_hurwitz(i + 8) == radon_hurwitz(i) + 4 for i in range(-16, 17)))
    out.add("ring 8-periodicity", all(
        ring_class(p + 8, q) == ring_class(p, q) == ring_class(p, q + 8)
        for p in range(13) for q in range(13) if p + q >= 1))
    kf_ok = True
    for p in range(9):
        for q in range(9):
            if p + q < 2 or (p + q) % 2 or p > 8 or q > 8:
                continue
            fac = karoubi_factorization(p, q)
            acc = 0
            for (s, t) in fac:
                acc = bw_real_add(acc, bw_real_class(s, t))
            kf_ok = kf_ok and acc == bw_real_class(p, q) and len(fac) == (p + q) // 2
    out.add("factorization class arithmetic p,q<=8", kf_ok)
    idemp_ok = True
    rank_ok = True
    for p in range(0, 7):
        for q in range(0, 7):
            n = p + q
            if n < 1 or n > 6:
                continue
            f = primitive_idempotent(p, q)
            idemp_ok = idemp_ok and f * f == f and not f.is_zero()
            if n % 2 == 0:
                t = idempotent_degree(p, q)
                rank_ok = rank_ok and (
                    spinor_rank_of_idempotent(p, q) == 2 ** (n // 2) // 2 ** t)
    out.add("primitive idempotents n<=6", idemp_ok)
    out.add("idempotent spinor rank minimality", rank_ok)
    return out


# -- quotient -------------------------------------------------------------------

def suite_quotient(max_n: int = 8, seed: int = 0) -> SuiteResult:
    out = SuiteResult("quotient")
    rng = random.Random(seed)
    for n1 in (3, 5, 7):
        for p in range(n1 + 1):
            q = n1 - p
            ctx = Signature(p, q, Field.COMPLEX)
            report = transfer_report(ctx)
            out.add(f"P never transfers ({p},{q})", not report.flags["P"].transfers)
            samples = [random_multivector(ctx, rng, nterms=4) for _ in range(6)]
            ok = True
            for name in SYMMETRY_NAMES:
                if descends_through_quotient(name, ctx, samples) != report.flags[name].transfers:
                    ok = False
            out.add(f"descent check matches flags ({p},{q})", ok)
            # epsilon map properties
            ew = central_unit(ctx)
            one = Multivector.scalar(ctx, 1)
            mult_ok = epsilon_map(ew) == Multivector.scalar(
                epsilon_map(ew).context, 1)
            for _ in range(25):
                x = random_multivector(ctx, rng)
                y = random_multivector(ctx, rng)
                if not epsilon_map(x - ew * x).is_zero():
                    mult_ok = False
                if epsilon_map(x * y) != epsilon_map(x) * epsilon_map(y):
                    mult_ok = False
                if epsilon_map(x + y) != epsilon_map(x) + epsilon_map(y):
                    mult_ok = False
            out.add(f"epsilon map homomorphism ({p},{q})", mult_ok)
    # ten classes over p+q <= 9
    complex_labels = set()
    for p in range(10):
        for q in range(10):
            if 1 <= p + q <= 9 and (p + q) % 2 == 1:
                complex_labels.add(classify_quotient(p, q, Field.COMPLEX).label)
    real_labels = set()
    for p in range(10):
        for q in range(10):
            if 1 <= p + q <= 9 and (p - q) % 8 in (1, 5):
                real_labels.add(classify_quotient(p, q, Field.REAL).label)
    out.add("six complex classes", complex_labels == {"a1", "a2", "b", "c", "d1", "d2"})
    out.add("four real classes", real_labels == {"e1", "e2", "f1", "f2"})
    cls = classify_quotient(3, 0, Field.COMPLEX)
    out.add("(3,0) is class c with {PT,C,CPT}",
            cls.label == "c" and cls.admitted == ("PT", "C", "CPT"))
    # class sets consistent with computed transfer flags: the computed
    # transferred symmetries are exactly the composition closure of the
    # stated set (composites of admitted symmetries transfer automatically)
    consistent = True
    for p in range(10):
        for q in range(10):
            if not (1 <= p + q <= 9 and (p + q) % 2 == 1):
                continue
            cls = classify_quotient(p, q, Field.COMPLEX)
            rep = transfer_report(Signature(p, q, Field.COMPLEX))
            admitted = {s.split("~")[0] for s in cls.admitted}
            flags = {name for name in SYMMETRY_NAMES if rep.flags[name].transfers}
            ok = admitted <= flags and flags == _composition_closure(admitted)
            consistent = consistent and ok
    out.add("complex class sets generate computed flags", consistent)
    # same statement on the real path (case rules, conjugation part exact)
    consistent = True
    for p in range(10):
        for q in range(10):
            if not (1 <= p + q <= 9 and (p - q) % 8 in (1, 5)):
                continue
            cls = classify_quotient(p, q, Field.REAL)
            rep = transfer_conditions_real(p, q)
            admitted = {s.split("~")[0] for s in cls.admitted}
            flags = {name for name in SYMMETRY_NAMES if rep.flags[name].transfers}
            ok = admitted <= flags and flags == _composition_closure(admitted)
            consistent = consistent and ok
    out.add("real class sets generate case-rule flags", consistent)
    return out


_SYM_BITS = {"P": 0b001, "T": 0b010, "PT": 0b011, "C": 0b100,
             "CP": 0b101, "CT": 0b110, "CPT": 0b111}
_BITS_SYM = {v: k for k, v in _SYM_BITS.items()}


def _composition_closure(names):
    bits = {_SYM_BITS[n] for n in names}
    closed = set(bits)
    changed = True
    while changed:
        changed = False
        for a in list(closed):
            for b in list(closed):
                c = a ^ b
                if c and c not in closed:
                    closed.add(c)
                    changed = True
    return {_BITS_SYM[b] for b in closed}


# -- neutrino -------------------------------------------------------------------

def _random_spinor(rng) -> DHSpinor:
    def frac():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    return DHSpinor(*(frac() for _ in range(8)))


def suite_neutrino(max_n: int = 8, seed: int = 0) -> SuiteResult:
    out = SuiteResult("neutrino")
    rng = random.Random(seed)
    try:
        gamma_basis().validate()
        out.add("gamma basis squares and anticommutation", True)
    except ValueError as exc:
        out.add("gamma basis squares and anticommutation", False, detail=str(exc))
    pp, pm = helicity_projectors()
    ident = ExactMatrix.identity(4)
    out.add(
        "projectors idempotent/orthogonal/complete",
        pp * pp == pp and pm * pm == pm and (pp * pm).is_zero()
        and pp + pm == ident,
    )
    g5 = pp + pp - ident  # = gamma5
    centrality = True
    for _ in range(50):
        s = _random_spinor(rng)
        phi = dh_matrix(s)
        if phi != dh_matrix_from_blades(s):
            out.add("matrix form equals blade expansion", False)
            break
        if not (g5 * phi - phi * g5).is_zero():
            centrality = False
    else:
        out.add("matrix form equals blade expansion x50", True)
    out.add("chirality element central in even subalgebra", centrality)
    # plane waves
    zero_mode = PlaneWave((QC(0), QC(1)), (Fraction(0), Fraction(0), Fraction(1)),
                          Fraction(1), Chirality.UNDOTTED)
    out.add("on-shell zero mode has zero residual",
            all(not v for v in weyl_residual(zero_mode)))
    off = PlaneWave((QC(0), QC(1)), (Fraction(0), Fraction(0), Fraction(1)),
                    Fraction(2), Chirality.UNDOTTED)
    out.add("off-shell residual nonzero",
            any(bool(v) for v in weyl_residual(off)) and not off.on_shell())
    flipped = PlaneWave((QC(1), QC(0)), (Fraction(0), Fraction(0), Fraction(1)),
                        Fraction(1), Chirality.DOTTED)
    out.add("dotted chirality flips the zero-mode helicity",
            all(not v for v in weyl_residual(flipped)))
    # massless decoupling on random spinors
    k = (Fraction(3), Fraction(0), Fraction(4))
    omega = Fraction(5)
    decouple_ok = True
    for _ in range(100):
        s = _random_spinor(rng)
        res = dh_residual(s, k, omega, 0)
        rp, rm = dh_split_residuals(s, k, omega)
        if res != rp + rm or res.is_zero() != (rp.is_zero() and rm.is_zero()):
            decouple_ok = False
            break
    out.add("massless residual decouples x100", decouple_ok)
    d = dirac_momentum_operator(k, omega)
    out.add("projectors exchange through the operator",
            (pp * d == d * pm) and (pm * d == d * pp))
    # a mass term breaks a massless zero mode
    sol = _massless_solution(rng)
    if sol is not None:
        out.add("massless solution exists and mass breaks it",
                dh_residual(sol, k, omega, 0).is_zero()
                and not dh_residual(sol, k, omega, 1).is_zero())
    else:
        out.add("massless solution exists and mass breaks it", False,
                detail="no nonzero solution found")
    return out


def _massless_solution(rng, k=(Fraction(3), Fraction(0), Fraction(4)),
                       omega=Fraction(5)):
    """Solve the massless momentum-space system exactly over the eight
    rational coefficients by elimination."""
    names = ("a0", "a01", "a02", "a03", "a12", "a13", "a23", "a0123")
    mats = [dh_residual(DHSpinor(**{name: Fraction(1)}), k, omega, 0)
            for name in names]
    rows = []
    side = 4
    for r in range(side):
        for c in range(side):
            row_re = [Fraction(m.rows[r][c].re) for m in mats]
            row_im = [Fraction(m.rows[r][c].im) for m in mats]
            rows.append(row_re)
            rows.append(row_im)
    # gaussian elimination for a nullspace vector
    ncols = 8
    work = [row[:] for row in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = work[rank][col]
        work[rank] = [v / inv for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    sol = [Fraction(0)] * ncols
    sol[free[0]] = Fraction(1)
    for r, col in enumerate(pivots):
        sol[col] = -sum(work[r][f] * sol[f] for f in free)
    return DHSpinor(**dict(zip(names, sol)))


_SUITES = {
    "clifford": suite_clifford,
    "symmetries": suite_symmetries,
    "relations": suite_relations,
    "periodicity": suite_periodicity,
    "quotient": suite_quotient,
    "neutrino": suite_neutrino,
}


@dataclass
class Report:
    command: str
    suites: list
    seed: int
    max_n: int
    seconds: float

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def to_dict(self):
        totals = {"total": 0, "passed": 0, "failed": 0, "expected_failures": 0}
        for s in self.suites:
            for k, v in s.counts().items():
                totals[k] += v
        return {
            "command": self.command,
            "ok": self.ok,
            "seed": self.seed,
            "max_n": self.max_n,
            "seconds": round(self.seconds, 3),
            "totals": totals,
            "suites": [s.to_dict() for s in self.suites],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _run_one(args):
    name, max_n, seed = args
    t0 = time.perf_counter()
    result = _SUITES[name](max_n=max_n, seed=seed)
    result.seconds = time.perf_counter() - t0
    return result


def run_suites(names, max_n: int = 8, seed: int = 0, parallel: int = 1) -> Report:
    if "all" in names:
        names = list(SUITE_NAMES)
    unknown = [n for n in names if n not in _SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    t0 = time.perf_counter()
    tasks = [(n, max_n, seed) for n in names]
    if parallel > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=parallel) as pool:
            suites = list(pool.map(_run_one, tasks))
    else:
        suites = [_run_one(t) for t in tasks]
    return Report(
        command=f"verify {' '.join(names)}",
        suites=suites,
        seed=seed,
        max_n=max_n,
        seconds=time.perf_counter() - t0,
    )
