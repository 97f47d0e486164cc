"""Infinitesimal operators of finite-dimensional Lorentz-group representations.

Two constructions: weight-basis block matrices for a pair (l0, l1), and the
half-bivector / half-generator operators inside a spin basis.  The block
construction orders basis vectors by block l = |l0|..l1-1 ascending, then
m = -l..+l ascending; entries are exact whenever every square root involved
is rational, else double precision.

Sign conventions were fixed by requiring the full commutation table to close
and the two-dimensional fundamental block to come out exactly as the standard
printed matrices; this forces the boost operator B3 to carry the opposite
overall sign from its naive block transcription (its companions B1, B2 are
kept as transcribed).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import ExactMatrix, I, ONE, QC, exact_sqrt
from .spinbasis import SpinBasis, pauli_basis


@dataclass(frozen=True)
class RepParams:
    """Representation labels (l0, l1); finite-dimensional iff l1-|l0| is a
    positive integer (both doubled values integral)."""

    l0: Fraction
    l1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l0", Fraction(self.l0))
        object.__setattr__(self, "l1", Fraction(self.l1))
        if (2 * self.l0).denominator != 1 or (2 * self.l1).denominator != 1:
            raise ValueError("l0, l1 must be integers or half-integers")
        step = self.l1 - abs(self.l0)
        if step.denominator != 1 or step <= 0:
            raise ValueError(
                f"({self.l0},{self.l1}) is not a finite-dimensional pair"
            )

    @property
    def blocks(self):
        out = []
        l = abs(self.l0)
        while l < self.l1:
            out.append(l)
            l += 1
        return out

    @property
    def dim(self) -> int:
        return int(self.l1 * self.l1 - self.l0 * self.l0)


@dataclass
class OperatorSet:
    a23: object
    a13: object
    a12: object
    b1: object
    b2: object
    b3: object
    dim: int
    exact: bool

    def items(self):
        return (
            ("A23", self.a23), ("A13", self.a13), ("A12", self.a12),
            ("B1", self.b1), ("B2", self.b2), ("B3", self.b3),
        )


@dataclass
class LadderSet:
    hp: object
    hm: object
    h3: object
    fp: object
    fm: object
    f3: object
    exact: bool

    def items(self):
        return (
            ("H+", self.hp), ("H-", self.hm), ("H3", self.h3),
            ("F+", self.fp), ("F-", self.fm), ("F3", self.f3),
        )


def _coefficients_exact(params: RepParams):
    """Exact QC values of every sqrt-bearing coefficient, or None."""
    l0, l1 = params.l0, params.l1
    values = {}

    def root(x: Fraction):
        r = exact_sqrt(x)
        return None if r is None else QC(r)

    for l in params.blocks + [params.l1]:
        if l == params.blocks[0]:
            values[("C", l)] = QC(0)  # lowest block has no downward coupling
        else:
            x = (l * l - l0 * l0) * (l * l - l1 * l1) / (4 * l * l - 1)
            # x <= 0 on the finite ladder, so (i/l)*sqrt(x) = -sqrt(-x)/l is real
            r = root(-x)
            if r is None:
                return None
            values[("C", l)] = -(r * QC(1 / l))
        if l <= params.blocks[-1]:
            values[("A", l)] = (
                QC(0) if l == 0 else I * QC(l0 * l1 / (l * (l + 1)))
            )
    for l in params.blocks:
        mm = -l
        while mm <= l:
            x = (l + mm) * (l - mm + 1)
            r = root(Fraction(x))
            if r is None:
                return None
            values[("alpha", l, mm)] = r
            mm += 1
    # cross-block weight factors must also be rational square roots
    for l in params.blocks[:-1]:
        mm = -l
        while mm <= l:
            for x in (
                (l + mm + 1) * (l + mm + 2),
                (l - mm + 1) * (l - mm + 2),
                (l + 1 - mm) * (l + 1 + mm),
            ):
                if root(Fraction(x)) is None:
                    return None
            mm += 1
    return values


def _coefficients_float(params: RepParams):
    l0, l1 = float(params.l0), float(params.l1)
    values = {}
    for l in params.blocks + [params.l1]:
        lf = float(l)
        if l == params.blocks[0]:
            values[("C", l)] = 0.0
        else:
            x = (lf * lf - l0 * l0) * (lf * lf - l1 * l1) / (4 * lf * lf - 1)
            values[("C", l)] = complex(0, 1) * complex(np.sqrt(complex(x))) / lf
        if l <= params.blocks[-1]:
            values[("A", l)] = 0.0 if lf == 0 else complex(0, 1) * l0 * l1 / (lf * (lf + 1))
    for l in params.blocks:
        mm = -l
        while mm <= l:
            values[("alpha", l, mm)] = float(np.sqrt(float((l + mm) * (l - mm + 1))))
            mm += 1
    return values


def gn_operators(params: RepParams) -> OperatorSet:
    """Six block-form infinitesimal operators of the (l0, l1) representation."""
    exact_vals = _coefficients_exact(params)
    if exact_vals is not None:
        try:
            return _build_gn(params, exact_vals, exact=True)
        except ArithmeticError:
            pass
    return _build_gn(params, _coefficients_float(params), exact=False)


def _build_gn(params: RepParams, vals, exact: bool) -> OperatorSet:
    basis = [(l, -l + k) for l in params.blocks for k in range(int(2 * l) + 1)]
    idx = {bm: j for j, bm in enumerate(basis)}
    dim = len(basis)

    if exact:
        mats = {name: ExactMatrix.zeros(dim) for name in
                ("a23", "a13", "a12", "b1", "b2", "b3")}

        def add(name, r, c, v):
            mats[name].rows[r][c] = mats[name].rows[r][c] + v

        half = QC(Fraction(1, 2))
        i_ = I
        one = ONE
    else:
        mats = {name: np.zeros((dim, dim), dtype=complex) for name in
                ("a23", "a13", "a12", "b1", "b2", "b3")}

        def add(name, r, c, v):
            mats[name][r, c] += v

        half = 0.5
        i_ = 1j
        one = 1.0

    def alpha(l, m):
        return vals[("alpha", l, m)]

    def rt(x: Fraction):
        # square roots of the cross-block weight factors; exact by construction
        if exact:
            r = exact_sqrt(Fraction(x))
            if r is None:
                raise ArithmeticError("expected rational square root")
            return QC(r)
        return float(np.sqrt(float(x)))

    for (l, m) in basis:
        j = idx[(l, m)]
        A_l = vals[("A", l)]
        C_l = vals[("C", l)]
        C_up = vals.get(("C", l + 1), None)
        up = idx.get((l, m + 1))
        dn = idx.get((l, m - 1))
        if up is not None:
            add("a23", up, j, -i_ * half * alpha(l, m + 1))
            add("a13", up, j, -half * alpha(l, m + 1))
            add("b1", up, j, i_ * half * A_l * alpha(l, m + 1))
            add("b2", up, j, half * A_l * alpha(l, m + 1))
        if dn is not None:
            add("a23", dn, j, -i_ * half * alpha(l, m))
            add("a13", dn, j, half * alpha(l, m))
            add("b1", dn, j, i_ * half * A_l * alpha(l, m))
            add("b2", dn, j, -half * A_l * alpha(l, m))
        add("a12", j, j, -i_ * (one * m if exact else float(m)))
        add("b3", j, j, -i_ * A_l * (one * m if exact else float(m)))
        lo_up = idx.get((l - 1, m + 1))
        if lo_up is not None:
            add("b1", lo_up, j, -i_ * half * C_l * rt((l - m) * (l - m - 1)))
            add("b2", lo_up, j, -half * C_l * rt((l - m) * (l - m - 1)))
        lo_dn = idx.get((l - 1, m - 1))
        if lo_dn is not None:
            add("b1", lo_dn, j, i_ * half * C_l * rt((l + m) * (l + m - 1)))
            add("b2", lo_dn, j, -half * C_l * rt((l + m) * (l + m - 1)))
        lo = idx.get((l - 1, m))
        if lo is not None:
            add("b3", lo, j, i_ * C_l * rt((l - m) * (l + m)))
        hi_up = idx.get((l + 1, m + 1))
        if hi_up is not None:
            add("b1", hi_up, j, -i_ * half * C_up * rt((l + m + 1) * (l + m + 2)))
            add("b2", hi_up, j, -half * C_up * rt((l + m + 1) * (l + m + 2)))
        hi_dn = idx.get((l + 1, m - 1))
        if hi_dn is not None:
            add("b1", hi_dn, j, i_ * half * C_up * rt((l - m + 1) * (l - m + 2)))
            add("b2", hi_dn, j, -half * C_up * rt((l - m + 1) * (l - m + 2)))
        hi = idx.get((l + 1, m))
        if hi is not None:
            add("b3", hi, j, -i_ * C_up * rt((l + 1 - m) * (l + 1 + m)))
    return OperatorSet(
        a23=mats["a23"], a13=mats["a13"], a12=mats["a12"],
        b1=mats["b1"], b2=mats["b2"], b3=mats["b3"],
        dim=dim, exact=exact,
    )


# -- commutation tables -------------------------------------------------------

_COMMUT_RELATIONS = (
    ("A23", "A13", "A12", 1), ("A13", "A12", "A23", 1), ("A12", "A23", "A13", 1),
    ("B1", "B2", "A12", -1), ("B2", "B3", "A23", 1), ("B3", "B1", "A13", 1),
    ("A23", "B1", None, 0), ("A13", "B2", None, 0), ("A12", "B3", None, 0),
    ("A23", "B2", "B3", -1), ("A23", "B3", "B2", 1),
    ("A13", "B3", "B1", -1), ("A13", "B1", "B3", 1),
    ("A12", "B1", "B2", 1), ("A12", "B2", "B1", -1),
)

_COMMUT2_RELATIONS = (
    ("H+", "H3", "H+", -1), ("H-", "H3", "H-", 1), ("H+", "H-", "H3", 2),
    ("H+", "F+", None, 0), ("H-", "F-", None, 0), ("H3", "F3", None, 0),
    ("F+", "F3", "H+", -1), ("F-", "F3", "H-", 1), ("F+", "F-", "H3", -2),
    ("H+", "F3", "F+", 1), ("H-", "F3", "F-", -1),
    ("H-", "F+", "F3", 2), ("H+", "F-", "F3", -2),
    ("F+", "H3", "F+", -1), ("F-", "H3", "F-", 1),
)


def _residual(ops_map, relations, exact):
    worst = QC(0) if exact else 0.0
    for x, y, z, coeff in relations:
        a, b = ops_map[x], ops_map[y]
        rhs = None if z is None else ops_map[z]
        if exact:
            r = a * b - b * a
            if rhs is not None:
                r = r - rhs.scale(QC(coeff))
            if not r.is_zero():
                return None
        else:
            r = a @ b - b @ a
            if rhs is not None:
                r = r - coeff * rhs
            worst = max(worst, float(np.max(np.abs(r))))
    return worst if not exact else QC(0)


def commut_residual(ops: OperatorSet):
    """Max residual over the commutation table; exact zero or a float bound.

    Returns None if an exact relation fails (it never should)."""
    return _residual(dict(ops.items()), _COMMUT_RELATIONS, ops.exact)


def commut2_residual(ladder_set: LadderSet):
    return _residual(dict(ladder_set.items()), _COMMUT2_RELATIONS, ladder_set.exact)


def ladder(ops: OperatorSet) -> LadderSet:
    """Raising/lowering combinations; the third rotation ladder element is
    i times the diagonal rotation operator (the closure relations force it)."""
    if ops.exact:
        return LadderSet(
            hp=ops.a23.scale(I) - ops.a13,
            hm=ops.a23.scale(I) + ops.a13,
            h3=ops.a12.scale(I),
            fp=ops.b1.scale(I) - ops.b2,
            fm=ops.b1.scale(I) + ops.b2,
            f3=ops.b3.scale(I),
            exact=True,
        )
    return LadderSet(
        hp=1j * ops.a23 - ops.a13,
        hm=1j * ops.a23 + ops.a13,
        h3=1j * ops.a12,
        fp=1j * ops.b1 - ops.b2,
        fm=1j * ops.b1 + ops.b2,
        f3=1j * ops.b3,
        exact=False,
    )


def fundamental_identification():
    """The fundamental-block operators as signed Pauli products.

    Returns (operator set, dict of expected matrices).  The mixed rotation
    operator pairs the first and third Pauli matrices; the remaining
    identifications follow the standard display.
    """
    s0, s1, s2, s3 = pauli_basis()
    half = QC(Fraction(1, 2))
    expected = {
        "A23": (s2 * s3).scale(-half),
        "A13": (s1 * s3).scale(-half),
        "A12": (s1 * s2).scale(half),
        "B1": s1.scale(-half),
        "B2": s2.scale(half),
        "B3": s3.scale(-half),
    }
    ops = gn_operators(RepParams(Fraction(1, 2), Fraction(3, 2)))
    return ops, expected


def tensor_operators(basis: SpinBasis, c: int, a: int, b: int,
                     conjugated: bool = False) -> OperatorSet:
    """Operators built from three distinct generators with indices c < a < b."""
    if not (1 <= c < a < b <= len(basis.mats)):
        raise ValueError("indices must satisfy 1 <= c < a < b <= arity")
    ec, ea, eb = (basis.mats[i - 1] for i in (c, a, b))
    half = QC(Fraction(1, 2))
    sgn = -half if not conjugated else half
    return OperatorSet(
        a23=(ea * eb).scale(-half),
        a13=(ec * eb).scale(-half),
        a12=(ec * ea).scale(half),
        b1=ec.scale(sgn),
        b2=ea.scale(-sgn),
        b3=eb.scale(sgn),
        dim=basis.side,
        exact=True,
    )


def rep_dimension(j, jp) -> int:
    """Dimension (2j+1)(2j'+1) of the symmetric spintensor space."""
    j, jp = Fraction(j), Fraction(jp)
    if (2 * j).denominator != 1 or (2 * jp).denominator != 1 or j < 0 or jp < 0:
        raise ValueError("spins must be nonnegative half-integers")
    return int((2 * j + 1) * (2 * jp + 1))


# -- relation tables against the symmetry matrices ---------------------------

_OP_NAMES = ("A23", "A13", "A12", "B1", "B2", "B3")
_LADDER_NAMES = ("H+", "H-", "H3", "F+", "F-", "F3")

# (E-row, C-row) over (A23, A13, A12, B1, B2, B3); 'C' commute, 'A' anticommute
FAMILY_TABLE = {
    "T1/T2": (("C", "C", "C", "A", "A", "A"), ("C", "C", "C", "C", "C", "C")),
    "T5/T6": (("C", "C", "C", "C", "C", "C"), ("C", "C", "C", "A", "A", "A")),
    "T9/T10": (("C", "A", "A", "C", "A", "A"), ("C", "A", "A", "A", "C", "C")),
    "T11/T12": (("C", "A", "A", "A", "C", "C"), ("C", "A", "A", "C", "A", "A")),
    "T13/T14": (("A", "A", "C", "C", "C", "A"), ("A", "A", "C", "A", "A", "C")),
    "T17/T18": (("A", "C", "A", "C", "A", "C"), ("A", "C", "A", "A", "C", "A")),
    "T19/T20": (("A", "C", "A", "A", "C", "A"), ("A", "C", "A", "C", "A", "C")),
    "T21/T22": (("A", "A", "C", "A", "A", "C"), ("A", "A", "C", "C", "C", "A")),
}

# ladder rows over (H+, H-, H3, F+, F-, F3) for the families that admit them
LADDER_FAMILY_TABLE = {
    "T1/T2": ("T3/T4", ("C", "C", "C", "A", "A", "A"), ("C", "C", "C", "C", "C", "C")),
    "T5/T6": ("T7/T8", ("C", "C", "C", "C", "C", "C"), ("C", "C", "C", "A", "A", "A")),
    "T13/T14": ("T15/T16", ("A", "A", "C", "C", "C", "A"), ("A", "A", "C", "A", "A", "C")),
    "T21/T22": ("T23/T24", ("A", "A", "C", "A", "A", "C"), ("A", "A", "C", "C", "C", "A")),
}

W_ROW = ("C", "C", "C", "A", "A", "A")


@dataclass
class RelationTable:
    """Computed commute/anticommute/neither table for (W, E, C) vs operators."""

    rows: dict              # matrix name -> tuple of 6 symbols over _OP_NAMES
    ladder_rows: dict       # matrix name -> tuple of 6 symbols over _LADDER_NAMES
    family: str | None
    ladder_family: str | None
    w_conforms: bool

    def to_dict(self):
        return {
            "operators": list(_OP_NAMES),
            "ladder_operators": list(_LADDER_NAMES),
            "rows": {k: list(v) for k, v in self.rows.items()},
            "ladder_rows": {k: list(v) for k, v in self.ladder_rows.items()},
            "family": self.family,
            "ladder_family": self.ladder_family,
            "w_conforms": self.w_conforms,
        }


def _relation_symbol(m: ExactMatrix, x: ExactMatrix) -> str:
    if (m * x - x * m).is_zero():
        return "C"
    if (m * x + x * m).is_zero():
        return "A"
    return "N"


def symmetry_relations(ops: OperatorSet, w: ExactMatrix, e: ExactMatrix,
                       c: ExactMatrix) -> RelationTable:
    """Compute all relation rows and classify them against the family table."""
    if not ops.exact:
        raise ValueError("relation tables need exact operator sets")
    lad = ladder(ops)
    mats = {"W": w, "E": e, "C": c}
    rows = {
        name: tuple(_relation_symbol(m, op) for _, op in ops.items())
        for name, m in mats.items()
    }
    ladder_rows = {
        name: tuple(_relation_symbol(m, op) for _, op in lad.items())
        for name, m in mats.items()
    }
    family = None
    for fam, (erow, crow) in FAMILY_TABLE.items():
        if rows["E"] == erow and rows["C"] == crow:
            family = fam
            break
    ladder_family = None
    if family in LADDER_FAMILY_TABLE:
        name, erow, crow = LADDER_FAMILY_TABLE[family]
        if ladder_rows["E"] == erow and ladder_rows["C"] == crow:
            ladder_family = name
    return RelationTable(
        rows=rows,
        ladder_rows=ladder_rows,
        family=family,
        ladder_family=ladder_family,
        w_conforms=rows["W"] == W_ROW and ladder_rows["W"] == W_ROW,
    )


def predict_family(n: int, e_size: int, membership: tuple) -> str:
    """Predicted family from the parity bookkeeping of the case analysis.

    ``n`` is the arity, ``e_size`` the number of generator factors in E, and
    ``membership`` the triple of booleans telling whether (E_c, E_a, E_b)
    divide E.  A bivector operator commutes with a generator product iff an
    even number of its two factors divide the product; a single-generator
    operator commutes iff the product size minus its membership count is
    even.  The C matrix is the complementary product of size n - e_size.
    """
    in_c, in_a, in_b = membership

    def row(size, mc, ma, mb):
        def bivector(x_in, y_in):
            return "C" if (int(x_in) + int(y_in)) % 2 == 0 else "A"

        def vector(x_in):
            return "C" if (size - int(x_in)) % 2 == 0 else "A"

        return (
            bivector(ma, mb), bivector(mc, mb), bivector(mc, ma),
            vector(mc), vector(ma), vector(mb),
        )

    erow = row(e_size, in_c, in_a, in_b)
    crow = row(n - e_size, not in_c, not in_a, not in_b)
    for fam, (fe, fc) in FAMILY_TABLE.items():
        if erow == fe and crow == fc:
            return fam
    raise KeyError(f"no family for rows {erow} / {crow}")
