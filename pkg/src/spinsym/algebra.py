"""Exact multivector arithmetic for real Clifford algebras and their
complexifications.

Basis blades are bitmasks over generator indices 1..n (bit i-1 set means the
generator e_i is a factor; mask 0 is the scalar unit).  A complex context
Cn carries a declared real split (p, q): the blades of the context are the
basis of the real subalgebra generated by {e_1..e_p, i e_{p+1}..i e_{p+q}},
so generator squares follow the (p, q) metric and the pseudoautomorphism
(charge-conjugation avatar) is coefficient-wise complex conjugation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact import I, ONE, QC


class Field(Enum):
    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class Signature:
    """Algebra context: p generators squaring to +1, q squaring to -1."""

    p: int
    q: int
    field: Field = Field.REAL

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise ValueError(f"invalid signature ({self.p},{self.q})")

    @property
    def n(self) -> int:
        return self.p + self.q

    def generator_square(self, i: int) -> int:
        """Square of e_i, 1-indexed."""
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} out of range 1..{self.n}")
        return 1 if i <= self.p else -1


def blade_grade(mask: int) -> int:
    return bin(mask).count("1")


def blade_indices(mask: int):
    """Ascending 1-based generator indices of a blade mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def blade_product(a: int, b: int, sig: Signature):
    """Product of basis blades: result mask and integer sign.

    Sign = transpositions needed to interleave b into a, times the metric
    signs of the squared common generators.
    """
    sign = 1
    # count inversions: for each set bit j of b, the set bits of a above j
    rest = a
    bb = b
    j = 0
    while bb:
        if bb & 1:
            sign *= -1 if bin(rest >> (j + 1)).count("1") % 2 else 1
        bb >>= 1
        j += 1
    common = a & b
    i = 1
    while common:
        if common & 1 and sig.generator_square(i) < 0:
            sign = -sign
        common >>= 1
        i += 1
    return a ^ b, sign


class Multivector:
    """Sparse exact multivector in a fixed algebra context."""

    __slots__ = ("context", "_terms")

    def __init__(self, context: Signature, terms=None):
        self.context = context
        self._terms = {}
        if terms:
            for mask, coeff in terms.items():
                c = QC.coerce(coeff)
                if c:
                    self._terms[mask] = c

    # -- constructors ------------------------------------------------------
    @classmethod
    def scalar(cls, context: Signature, c) -> "Multivector":
        return cls(context, {0: c})

    @classmethod
    def blade(cls, context: Signature, mask: int, coeff=1) -> "Multivector":
        if mask >> context.n:
            raise ValueError("blade mask exceeds context arity")
        return cls(context, {mask: coeff})

    @classmethod
    def generator(cls, context: Signature, i: int) -> "Multivector":
        if not 1 <= i <= context.n:
            raise ValueError("generator index out of range")
        return cls(context, {1 << (i - 1): 1})

    # -- inspection --------------------------------------------------------
    def terms(self):
        return dict(self._terms)

    def coeff(self, mask: int) -> QC:
        return self._terms.get(mask, QC(0))

    def is_zero(self) -> bool:
        return not self._terms

    def grades(self):
        return sorted({blade_grade(m) for m in self._terms})

    def grade_part(self, k: int) -> "Multivector":
        return Multivector(
            self.context, {m: c for m, c in self._terms.items() if blade_grade(m) == k}
        )

    # -- arithmetic --------------------------------------------------------
    def _require_same_context(self, other: "Multivector"):
        if self.context != other.context:
            raise ValueError("context mismatch between multivectors")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.context, other)
        self._require_same_context(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, QC(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Multivector(self.context, out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.context, other)
        return self + (-other)

    def __rsub__(self, other):
        return Multivector.scalar(self.context, other) - self

    def __neg__(self):
        return Multivector(self.context, {m: -c for m, c in self._terms.items()})

    def scale(self, c) -> "Multivector":
        c = QC.coerce(c)
        return Multivector(self.context, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Multivector):
            return self.scale(other)
        self._require_same_context(other)
        out = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mask, sign = blade_product(ma, mb, self.context)
                c = ca * cb
                if sign < 0:
                    c = -c
                s = out.get(mask)
                s = c if s is None else s + c
                if s:
                    out[mask] = s
                else:
                    out.pop(mask, None)
        return Multivector(self.context, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            if self._terms and set(self._terms) != {0}:
                return False
            return self.coeff(0) == QC.coerce(other)
        return self.context == other.context and self._terms == other._terms

    def __hash__(self):
        return hash((self.context, tuple(sorted(self._terms.items(), key=lambda t: t[0]))))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms):
            name = "1" if m == 0 else "e" + "".join(str(i) for i in blade_indices(m))
            parts.append(f"{self._terms[m]!r}*{name}")
        return " + ".join(parts)


# -- the four fundamental (pseudo)automorphisms ----------------------------

def grade_involution(x: Multivector) -> Multivector:
    """Main automorphism: grade-k part scaled by (-1)^k."""
    return Multivector(
        x.context,
        {m: (c if blade_grade(m) % 2 == 0 else -c) for m, c in x._terms.items()},
    )


def reversion(x: Multivector) -> Multivector:
    """Antiautomorphism reversing products: grade-k sign (-1)^(k(k-1)/2)."""
    out = {}
    for m, c in x._terms.items():
        k = blade_grade(m)
        out[m] = -c if (k * (k - 1) // 2) % 2 else c
    return Multivector(x.context, out)


def conjugation(x: Multivector) -> Multivector:
    """Composite reversion(grade_involution(x)): grade-k sign (-1)^(k(k+1)/2)."""
    out = {}
    for m, c in x._terms.items():
        k = blade_grade(m)
        out[m] = -c if (k * (k + 1) // 2) % 2 else c
    return Multivector(x.context, out)


def pseudo_conjugation(x: Multivector) -> Multivector:
    """Conjugation-linear map fixing the declared real subalgebra.

    The blades of a complex context are the real-subalgebra basis, so this is
    coefficient-wise complex conjugation.  On a real context every coefficient
    is already fixed conceptually; the map is the identity there (documented
    behaviour, not an error), acting on any stray imaginary coefficient too.
    """
    if x.context.field is Field.REAL:
        return x
    return Multivector(x.context, {m: c.conj() for m, c in x._terms.items()})


# -- volume element, helicity idempotents ----------------------------------

def volume_element(ctx: Signature) -> Multivector:
    """Volume element of the context.

    For a complex context the element is the product of the n unscaled
    orthonormal generators of C^n: expressed over the split-blade basis it
    carries the coefficient (-i)^q, which makes its square independent of the
    declared split and its pseudo-conjugate equal to (-1)^q times itself.
    """
    top = (1 << ctx.n) - 1
    if ctx.field is Field.REAL:
        return Multivector.blade(ctx, top)
    coeff = ONE
    for _ in range(ctx.q):
        coeff = coeff * QC(0, -1)
    return Multivector.blade(ctx, top, coeff)


def volume_square_sign(ctx: Signature) -> int:
    w = volume_element(ctx)
    sq = w * w
    c = sq.coeff(0)
    if sq != Multivector.scalar(ctx, c) or c not in (QC(1), QC(-1)):
        raise ArithmeticError("volume element square is not +-1")
    return 1 if c == QC(1) else -1


def volume_epsilon(ctx: Signature) -> QC:
    """Scalar eps in {1, i} with (eps*omega)^2 = 1; rejects omega^2 = -1 real."""
    s = volume_square_sign(ctx)
    if s == 1:
        return ONE
    if ctx.field is Field.REAL:
        raise ValueError("no real epsilon: volume element squares to -1")
    return I


@dataclass(frozen=True)
class HelicityPair:
    plus: Multivector
    minus: Multivector


def helicity_idempotents(ctx: Signature) -> HelicityPair:
    """Central idempotents (1 +- eps*omega)/2 of an odd complex algebra."""
    if ctx.field is not Field.COMPLEX:
        raise ValueError("helicity idempotents need a complex context")
    if ctx.n % 2 == 0:
        raise ValueError("helicity idempotents need odd dimension")
    eps = volume_epsilon(ctx)
    ew = volume_element(ctx).scale(eps)
    half = QC(Fraction(1, 2))
    one = Multivector.scalar(ctx, 1)
    return HelicityPair(
        plus=(one + ew).scale(half),
        minus=(one - ew).scale(half),
    )


def random_multivector(ctx: Signature, rng: random.Random, nterms: int = 4,
                       bound: int = 9, complex_coeffs: bool = None) -> Multivector:
    """Sparse random multivector with small integer coefficients."""
    if complex_coeffs is None:
        complex_coeffs = ctx.field is Field.COMPLEX
    terms = {}
    for _ in range(nterms):
        mask = rng.randrange(1 << ctx.n)
        re = rng.randint(-bound, bound)
        im = rng.randint(-bound, bound) if complex_coeffs else 0
        terms[mask] = terms.get(mask, QC(0)) + QC(re, im)
    return Multivector(ctx, terms)
