"""Quotient homomorphism onto the even-arity subalgebra, symmetry transfer
conditions, and the ten-class labeling of quotient representations.

An odd-arity algebra splits along the central unit eps*omega with square one;
the quotient map sends A1 + eps*omega*A2 to A1 + A2.  A discrete symmetry
descends through the map exactly when it fixes eps*omega, which is decided
here by exact computation and cross-checked against the arity and split
congruences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Field,
    Multivector,
    Signature,
    conjugation,
    grade_involution,
    pseudo_conjugation,
    reversion,
    volume_element,
    volume_epsilon,
)

SYMMETRY_NAMES = ("P", "T", "PT", "C", "CP", "CT", "CPT")

_MAPS = {
    "P": grade_involution,
    "T": reversion,
    "PT": conjugation,
    "C": pseudo_conjugation,
    "CP": lambda x: pseudo_conjugation(grade_involution(x)),
    "CT": lambda x: pseudo_conjugation(reversion(x)),
    "CPT": lambda x: pseudo_conjugation(conjugation(x)),
}

ANTILINEAR = frozenset({"C", "CP", "CT", "CPT"})


def symmetry_map(name: str):
    return _MAPS[name]


@dataclass(frozen=True)
class TransferFlag:
    transfers: bool
    kernel_sign: int        # +1 kernel -> kernel, -1 kernel -> opposite kernel
    rule: str


@dataclass(frozen=True)
class TransferReport:
    context: Signature
    flags: dict

    def transferred(self):
        return tuple(name for name in SYMMETRY_NAMES if self.flags[name].transfers)

    def to_dict(self):
        return {
            name: {"transfers": f.transfers, "kernel_sign": f.kernel_sign,
                   "rule": f.rule}
            for name, f in self.flags.items()
        }


def central_unit(ctx: Signature) -> Multivector:
    """eps*omega with unit square; rejects contexts where no such unit exists."""
    if ctx.n % 2 == 0:
        raise ValueError("central unit requires odd arity")
    return volume_element(ctx).scale(volume_epsilon(ctx))


def transfer_report(ctx: Signature) -> TransferReport:
    """Which discrete symmetries descend through the quotient map.

    Computed by direct exact evaluation.  A linear map descends iff it fixes
    the scaled unit eps*omega (the kernel is preserved elementwise).  For the
    conjugation-linear maps the operative condition is fixing the unscaled
    volume element: when eps = i such a map swaps the two complementary
    ideals, which still induces the transformation on the identified quotient
    pair; kernel_sign records which ideal the kernel lands in.
    """
    ctx = Signature(ctx.p, ctx.q, Field.COMPLEX)
    if ctx.n % 2 == 0:
        raise ValueError("transfer analysis requires odd arity")
    w = volume_element(ctx)
    ew = central_unit(ctx)
    flags = {}
    for name in SYMMETRY_NAMES:
        smap = _MAPS[name]
        fixes_unit = smap(ew) == ew
        if name in ANTILINEAR:
            ok = smap(w) == w
        else:
            ok = fixes_unit
        flags[name] = TransferFlag(ok, 1 if fixes_unit else -1, _congruence_note(ctx))
    return TransferReport(ctx, flags)


def _congruence_note(ctx: Signature) -> str:
    n1 = ctx.n
    return (
        f"arity {n1} mod 4 = {n1 % 4}, split ({ctx.p},{ctx.q}), "
        f"p-q mod 8 = {(ctx.p - ctx.q) % 8}, q mod 2 = {ctx.q % 2}"
    )


def transfer_conditions_complex(p: int, q: int) -> TransferReport:
    """Transfer flags for the odd complex algebra with real split (p, q)."""
    if (p + q) % 2 == 0:
        raise ValueError("complex transfer conditions require odd arity")
    return transfer_report(Signature(p, q, Field.COMPLEX))


def transfer_conditions_real(p: int, q: int) -> TransferReport:
    """Transfer flags for a real algebra with a doubled division ring.

    The unit square must be +1, which holds exactly for p-q = 1,5 (mod 8).
    The case rules are the classical ones: the reversion avatar always
    carries over, the parity avatar never does, and the conjugation-composite
    avatars alternate with the parity of q (the conjugation behaviour of the
    volume element is verified exactly through the complexified split; the
    reversion rule follows the classical case table, whose sign convention
    on the real side is recorded as such).
    """
    if (p - q) % 8 not in (1, 5):
        raise ValueError("real transfer conditions require p-q = 1,5 (mod 8)")
    ctx = Signature(p, q, Field.REAL)
    cctx = Signature(p, q, Field.COMPLEX)
    w = volume_element(cctx)
    # exact checks where conventions agree
    if grade_involution(w) != -w:
        raise ArithmeticError("parity avatar unexpectedly fixed the volume")
    bar_even = pseudo_conjugation(w) == w
    if bar_even != (q % 2 == 0):
        raise ArithmeticError("conjugate volume parity disagrees with q")
    note = _congruence_note(cctx)
    q_even = q % 2 == 0
    rules = {
        "P": False,
        "T": True,
        "PT": False,
        "C": q_even,
        "CP": not q_even,
        "CT": q_even,
        "CPT": not q_even,
    }
    flags = {name: TransferFlag(val, 1, note) for name, val in rules.items()}
    return TransferReport(ctx, flags)


def epsilon_map(x: Multivector, unit_sign: int = 1) -> Multivector:
    """Quotient map A1 + eps*omega*A2 -> A1 + A2 onto one fewer generator.

    ``unit_sign=-1`` folds with the opposite unit -eps*omega (the companion
    quotient in the helicity pair)."""
    ctx = x.context
    ew = central_unit(ctx).scale(unit_sign)
    top = 1 << (ctx.n - 1)
    low = Multivector(ctx, {m: c for m, c in x.terms().items() if not m & top})
    high = Multivector(ctx, {m: c for m, c in x.terms().items() if m & top})
    folded = low + ew * high
    if ctx.q > 0:
        target = Signature(ctx.p, ctx.q - 1, ctx.field)
    else:
        target = Signature(ctx.p - 1, 0, ctx.field)
    out = {}
    for m, c in folded.terms().items():
        if m & top:
            raise ArithmeticError("quotient image escaped the subalgebra")
        out[m] = c
    return Multivector(target, out)


def kernel_element(x: Multivector) -> Multivector:
    """x - eps*omega*x, a generic element of the quotient kernel."""
    return x - central_unit(x.context) * x


def canonical_kernel_sign(name: str, ctx: Signature) -> int:
    """Ideal a transferred symmetry must send the kernel to: the kernel itself
    for linear maps, the companion ideal for conjugation-linear maps when the
    scaling unit is imaginary."""
    from .exact import QC

    if name in ANTILINEAR and volume_epsilon(
        Signature(ctx.p, ctx.q, Field.COMPLEX)
    ) == QC(0, 1):
        return -1
    return 1


def descends_through_quotient(name: str, ctx: Signature, samples) -> bool:
    """Does the named symmetry send the quotient kernel where a transferred
    symmetry must send it?  Equivalent to the transfer flag; used as the
    independent sample-based verification."""
    ctx = Signature(ctx.p, ctx.q, Field.COMPLEX)
    sign = canonical_kernel_sign(name, ctx)
    smap = _MAPS[name]
    for x in samples:
        y = x if x.context == ctx else Multivector(ctx, x.terms())
        image = smap(kernel_element(y))
        if not epsilon_map(image, unit_sign=sign).is_zero():
            return False
    return True


@dataclass(frozen=True)
class QuotientClass:
    label: str
    admitted: tuple
    field: Field
    detail: str

    def to_dict(self):
        return {
            "class": self.label,
            "symmetries": list(self.admitted),
            "field": self.field.value,
            "detail": self.detail,
        }


_COMPLEX_SETS = {
    "a1": ("T", "C~I"),
    "a2": ("T", "C"),
    "b": ("T", "CP", "CPT"),
    "c": ("PT", "C", "CPT"),
    "d1": ("PT", "CP~IP", "CT~IT"),
    "d2": ("PT", "CP", "CT"),
}

_REAL_SETS = {
    "e1": ("T", "C~I", "CT~IT"),
    "e2": ("T", "CP~IP", "CPT~IPT"),
    "f1": ("T", "C~C'", "CT~C'T"),
    "f2": ("T", "CP~C'P", "CPT~C'PT"),
}


def classify_quotient(p: int, q: int, field: Field = Field.COMPLEX) -> QuotientClass:
    """Ten-way classification of the quotient representation for (p, q).

    Complex path: odd arity, class decided by arity mod 4 and p-q mod 8.
    Real path: doubled-ring types p-q = 1,5 (mod 8), class decided by the
    ring and the parity of q.
    """
    r = (p - q) % 8
    if field is Field.COMPLEX:
        n1 = p + q
        if n1 % 2 == 0:
            raise ValueError("complex quotient classes require odd arity")
        if r in (1, 5):
            label = ("a1" if r == 1 else "a2") if n1 % 4 == 1 else (
                "d1" if r == 1 else "d2")
        elif r in (3, 7):
            label = "b" if n1 % 4 == 1 else "c"
        else:
            raise ValueError(f"unreachable split parity for odd arity: {r}")
        detail = f"arity {n1} mod 4 = {n1 % 4}, p-q mod 8 = {r}"
        return QuotientClass(label, _COMPLEX_SETS[label], field, detail)
    if r not in (1, 5):
        raise ValueError("real quotient classes require p-q = 1,5 (mod 8)")
    if r == 1:
        label = "e1" if q % 2 == 0 else "e2"
    else:
        label = "f1" if q % 2 == 0 else "f2"
    detail = f"p-q mod 8 = {r}, q mod 2 = {q % 2}"
    return QuotientClass(label, _REAL_SETS[label], field, detail)
