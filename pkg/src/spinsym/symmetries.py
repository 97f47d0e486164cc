"""Discrete-symmetry operator matrices W, E, C and the conjugation matrix Pi.

W represents the main automorphism (parity avatar), E the reversion
antiautomorphism (time-reversal avatar), C = E W^T their composite, and Pi
the conjugation-linear map fixing a chosen real subalgebra (charge
conjugation avatar).  Everything is computed exactly and checked against its
defining conditions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .classify import ring_class, RingClass
from .exact import ExactMatrix, I, ONE, QC
from .spinbasis import SpinBasis


class StructureError(ArithmeticError):
    """A constructed operator violated its defining conditions."""


def generator_symmetry_split(basis: SpinBasis):
    """Indices (0-based) of symmetric and skew-symmetric generator matrices."""
    sym, skew = [], []
    for idx, m in enumerate(basis.mats):
        if m.T == m:
            sym.append(idx)
        elif m.T == -m:
            skew.append(idx)
        else:
            raise StructureError(f"generator {idx + 1} is neither symmetric nor skew")
    return sym, skew


def generator_reality_split(basis: SpinBasis):
    """Indices of real (conj-fixed) and imaginary (conj-negated) generators."""
    real, imag = [], []
    for idx, m in enumerate(basis.mats):
        if m.conj() == m:
            real.append(idx)
        elif m.conj() == -m:
            imag.append(idx)
        else:
            raise StructureError(f"generator {idx + 1} is neither real nor imaginary")
    return real, imag


def _product(basis: SpinBasis, indices) -> ExactMatrix:
    out = ExactMatrix.identity(basis.side)
    for idx in indices:
        out = out * basis.mats[idx]
    return out


def matrix_W(basis: SpinBasis) -> ExactMatrix:
    """Volume-element matrix; conjugation by it realizes the main automorphism."""
    if basis.n % 2:
        raise ValueError(
            "the main automorphism is not inner for odd arity; "
            "use the quotient machinery instead"
        )
    w = _product(basis, range(basis.n))
    winv = w.inverse()
    for i, m in enumerate(basis.mats, start=1):
        if w * m * winv != -m:
            raise StructureError(f"W fails to negate generator {i}")
    return w


def _product_transpose_sign(basis: SpinBasis, indices) -> int:
    """Transpose sign of a product of generators: the reversal parity times
    the transpose sign of each factor."""
    k = len(indices)
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    for idx in indices:
        if basis.mats[idx].T == -basis.mats[idx]:
            sign = -sign
    return sign


def matrix_E(basis: SpinBasis) -> ExactMatrix:
    """Reversion matrix: the product of all symmetric generators when their
    count is odd, else of all skew generators; satisfies E_i E = E E_i^T.

    The transpose sign is checked against the composition of the chosen
    factors; for an equal symmetric/skew split this reduces to the classical
    (-1)^(m(m-1)/2) law in the symmetric count m.
    """
    sym, skew = generator_symmetry_split(basis)
    members = sym if len(sym) % 2 else skew
    e = _product(basis, members)
    for i, g in enumerate(basis.mats, start=1):
        if g * e != e * g.T:
            raise StructureError(f"E condition fails on generator {i}")
    want = e if _product_transpose_sign(basis, members) > 0 else -e
    if e.T != want:
        raise StructureError("E transpose sign violated")
    return e


def matrix_C(basis: SpinBasis, e: Optional[ExactMatrix] = None,
             w: Optional[ExactMatrix] = None) -> ExactMatrix:
    """Composite matrix C = E W^T; anticommutes with transposed generators.

    C comes out proportional to the product of the generators complementary
    to E's factors, and its transpose sign is checked against that
    composition (the classical (-1)^(m(m+1)/2) law for an equal split).
    """
    sym, skew = generator_symmetry_split(basis)
    e = matrix_E(basis) if e is None else e
    w = matrix_W(basis) if w is None else w
    c = e * w.T
    complement = skew if len(sym) % 2 else sym
    for i, g in enumerate(basis.mats, start=1):
        if c * g.T != -(g * c):
            raise StructureError(f"C condition fails on generator {i}")
    want = c if _product_transpose_sign(basis, complement) > 0 else -c
    if c.T != want:
        raise StructureError("C transpose sign violated")
    return c


class GroupLabel(Enum):
    Z2xZ2 = "Z2xZ2"
    Z4 = "Z4"
    D4modZ2 = "D4/Z2"
    Q4modZ2 = "Q4/Z2"


@dataclass(frozen=True)
class GroupClass:
    label: GroupLabel
    triple: tuple
    abelian: bool
    raw_squares: tuple


def _square_sign(m: ExactMatrix) -> int:
    c = (m * m).is_scalar_multiple_of_identity()
    if c == QC(1):
        return 1
    if c == QC(-1):
        return -1
    raise StructureError("operator square is not +-identity")


def reflection_group_class(basis: SpinBasis, convention: str = "auto") -> GroupClass:
    """Reflection-group realization {1, W, E, C} of the discrete subgroup.

    Raw squares and commutators are computed exactly.  Under the ``complex``
    convention (default for uniform-metric complex bases) the class follows
    the regime of the reversion matrix: an even symmetric count gives the
    abelian four-group with normalized triple (+,+,+), an odd count the
    quaternionic quotient with (-,-,-); the computed commutation structure
    must agree or the construction is reported broken.  Under ``raw`` the
    class is read off the computed squares, which is the sign-meaningful
    reading for real-matrix generator bases.
    """
    w = matrix_W(basis)
    e = matrix_E(basis)
    c = matrix_C(basis, e, w)
    raw = (_square_sign(w), _square_sign(e), _square_sign(c))
    abelian = w.commutes_with(e) and w.commutes_with(c) and e.commutes_with(c)
    if convention == "auto":
        uniform = basis.context.q in (0, basis.context.n)
        convention = "complex" if (
            basis.context and uniform and basis.context.q == 0) else "raw"
    if convention == "complex":
        m = len(generator_symmetry_split(basis)[0])
        if m % 2 == 0:
            if not abelian:
                raise StructureError("expected an abelian reflection group")
            return GroupClass(GroupLabel.Z2xZ2, (1, 1, 1), True, raw)
        if abelian:
            raise StructureError("expected a non-abelian reflection group")
        return GroupClass(GroupLabel.Q4modZ2, (-1, -1, -1), False, raw)
    if abelian:
        label = GroupLabel.Z2xZ2 if raw == (1, 1, 1) else GroupLabel.Z4
    else:
        label = GroupLabel.Q4modZ2 if raw == (-1, -1, -1) else GroupLabel.D4modZ2
    return GroupClass(label, raw, abelian, raw)


# -- the conjugation matrix Pi ------------------------------------------------

@dataclass(frozen=True)
class PiResult:
    matrix: ExactMatrix
    scalar: bool            # True when Pi is a multiple of the identity
    branch: str             # "imaginary" | "real" | "scalar"
    a: int                  # number of imaginary generator matrices
    b: int                  # number of real generator matrices
    members: tuple          # 0-based generator indices whose product is Pi


def conjugation_condition_holds(basis: SpinBasis, pi: ExactMatrix) -> bool:
    """Check Pi conj(G_i) Pi^-1 == G_i for every generator matrix."""
    try:
        pinv = pi.inverse()
    except ValueError:
        return False
    return all(pi * g.conj() * pinv == g for g in basis.mats)


def matrix_Pi(basis: SpinBasis) -> PiResult:
    """Conjugation matrix of a real-split basis, from the product recipe.

    Over a ring-R split every generator matrix is real and Pi is scalar.
    Over a quaternionic split Pi is the product of the imaginary generator
    matrices (even count) or of the real ones (odd count).
    """
    real, imag = generator_reality_split(basis)
    a, b = len(imag), len(real)
    if a == 0:
        pi = ExactMatrix.identity(basis.side)
        if not conjugation_condition_holds(basis, pi):
            raise StructureError("identity fails the conjugation condition")
        return PiResult(pi, True, "scalar", a, b, ())
    if a % 2 == 0:
        members, branch = tuple(imag), "imaginary"
    elif b % 2 == 1:
        members, branch = tuple(real), "real"
    else:
        raise StructureError(
            "no admissible product: imaginary count odd and real count even"
        )
    pi = _product(basis, members)
    if not conjugation_condition_holds(basis, pi):
        raise StructureError("product recipe fails the conjugation condition")
    scalar = pi.is_scalar_multiple_of_identity() is not None
    return PiResult(pi, scalar, branch, a, b, members)


def pi_conj_square_sign(pi: ExactMatrix) -> int:
    """Sign s with Pi * conj(Pi) == s * identity."""
    c = (pi * pi.conj()).is_scalar_multiple_of_identity()
    if c == QC(1):
        return 1
    if c == QC(-1):
        return -1
    raise StructureError("Pi * conj(Pi) is not +-identity")


def pi_sign_law_printed(count: int) -> int:
    """The stated count-mod-4 sign: +1 for 0,1 and -1 for 2,3."""
    return 1 if count % 4 in (0, 1) else -1


def pi_sign_law_with_squares(basis: SpinBasis, members) -> int:
    """Sign of Pi*conj(Pi) derived from the product recipe including the
    squares of the chosen generator matrices."""
    c = len(members)
    sign = -1 if (c * (c - 1) // 2) % 2 else 1
    for idx in members:
        if basis.context.generator_square(idx + 1) < 0:
            sign = -sign
    return sign


def pi_solution_oracle(basis: SpinBasis, seed: int = 7) -> ExactMatrix:
    """Independent construction of Pi by group-averaging random matrices.

    Projects X onto the space {X : G X = X conj(G)} by summing
    B X conj(B)^-1 over all blade products B; the space is one-dimensional
    for definite ring types, which is verified by projecting two independent
    random matrices and checking proportionality.
    """
    side = basis.side
    rng = random.Random(seed)

    # blade matrices square to a sign times the identity, so conj(B)^-1 is
    # just that sign times conj(B)
    conj_invs = []
    blades = []
    for mask in range(1 << basis.n):
        bm = basis.blade_matrix(mask)
        bc = bm.conj()
        s = (bc * bc).is_scalar_multiple_of_identity()
        if s is None:
            raise StructureError("blade square is not scalar")
        blades.append(bm)
        conj_invs.append(bc.scale(ONE / s))

    def project(x: ExactMatrix) -> ExactMatrix:
        out = ExactMatrix.zeros(side)
        for bm, bci in zip(blades, conj_invs):
            out = out + bm * x * bci
        return out

    def random_matrix():
        return ExactMatrix(
            [[QC(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(side)]
             for _ in range(side)]
        )

    first = None
    for _ in range(8):
        y = project(random_matrix())
        if y.is_zero():
            continue
        if first is None:
            first = y
            continue
        if y.proportional_to(first) is None:
            raise StructureError("conjugation intertwiner space is not 1-dimensional")
        return first
    if first is None:
        raise StructureError("conjugation intertwiner space is trivial")
    return first


def pi_w_commutation_sign(basis: SpinBasis) -> int:
    """+1 if Pi and the volume matrix commute, -1 if they anticommute."""
    pi = matrix_Pi(basis).matrix
    w = _product(basis, range(basis.n))
    if (pi * w - w * pi).is_zero():
        return 1
    if (pi * w + w * pi).is_zero():
        return -1
    raise StructureError("Pi and W neither commute nor anticommute")


def pi_w_parity_law(a: int, b: int) -> int:
    """Commutation sign predicted from the counts: anticommute iff a*b is odd."""
    return -1 if (a * b) % 2 else 1


# -- compatibility of Pi with infinitesimal operators -----------------------

def relation_symbol(m: ExactMatrix, x: ExactMatrix) -> str:
    """'C' commute, 'A' anticommute, 'N' neither."""
    if (m * x - x * m).is_zero():
        return "C"
    if (m * x + x * m).is_zero():
        return "A"
    return "N"


def charge_conjugation_compat(pi: ExactMatrix, ops) -> dict:
    """Relation of Pi with the six operators plus the two closure flags.

    ``full`` records whether Pi commutes with all six (needed to define the
    conjugation on a representation); ``rotation`` with the three rotation
    operators only (the massless/real-representation requirement).
    """
    table = {
        name: relation_symbol(pi, mat)
        for name, mat in (
            ("A23", ops.a23), ("A13", ops.a13), ("A12", ops.a12),
            ("B1", ops.b1), ("B2", ops.b2), ("B3", ops.b3),
        )
    }
    table["full"] = all(table[k] == "C" for k in ("A23", "A13", "A12", "B1", "B2", "B3"))
    table["rotation"] = all(table[k] == "C" for k in ("A23", "A13", "A12"))
    return table
