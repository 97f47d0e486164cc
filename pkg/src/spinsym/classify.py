"""Division-ring classes, Radon-Hurwitz numbers, primitive idempotents,
two-dimensional factorizations and the mod-2 / mod-8 class arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .algebra import Field, Multivector, Signature, blade_product
from .exact import QC
from .spinbasis import real_split_basis, represent


class RingClass(Enum):
    R = "R"
    RR = "R+R"
    C = "C"
    H = "H"
    HH = "H+H"

    @property
    def real_dim(self) -> int:
        return {"R": 1, "R+R": 2, "C": 2, "H": 4, "H+H": 8}[self.value]

    @property
    def simple_dim(self) -> int:
        """Real dimension of the division ring of one simple component,
        which is what a primitive idempotent compresses the algebra to."""
        return {"R": 1, "R+R": 1, "C": 2, "H": 4, "H+H": 4}[self.value]


_RING_BY_PQ_MOD8 = {
    0: RingClass.R,
    1: RingClass.RR,
    2: RingClass.R,
    3: RingClass.C,
    4: RingClass.H,
    5: RingClass.HH,
    6: RingClass.H,
    7: RingClass.C,
}


def ring_class(p: int, q: int) -> RingClass:
    """Division ring of a primitive idempotent, determined by p-q mod 8."""
    return _RING_BY_PQ_MOD8[(p - q) % 8]


_RH_BASE = (0, 1, 2, 2, 3, 3, 3, 3)


def radon_hurwitz(i: int) -> int:
    """Radon-Hurwitz number r_i, extended over all integers by r_{i+8}=r_i+4."""
    base = _RH_BASE[i % 8]
    cycles = (i - (i % 8)) // 8
    return base + 4 * cycles


def idempotent_degree(p: int, q: int) -> int:
    """Count t of commuting +1-square blades generating a primitive idempotent."""
    return q - radon_hurwitz(q - p)


def _square_sign(mask: int, sig: Signature) -> int:
    _, s = blade_product(mask, mask, sig)
    return s


def _blades_commute(a: int, b: int, sig: Signature) -> bool:
    _, s1 = blade_product(a, b, sig)
    _, s2 = blade_product(b, a, sig)
    return s1 == s2


def _independent(masks) -> bool:
    """No nonempty subset of blade masks XORs to the scalar."""
    for r in range(1, len(masks) + 1):
        for sub in combinations(masks, r):
            acc = 0
            for m in sub:
                acc ^= m
            if acc == 0:
                return False
    return True


def _idempotent_from_blades(ctx: Signature, masks) -> Multivector:
    half = QC(Fraction(1, 2))
    f = Multivector.scalar(ctx, 1)
    for m in masks:
        f = f * (Multivector.scalar(ctx, 1) + Multivector.blade(ctx, m)).scale(half)
    return f


def commuting_blade_sets(p: int, q: int, size: int):
    """Lexicographically ordered search for valid commuting +1-square blade sets."""
    ctx = Signature(p, q, Field.REAL)
    n = ctx.n
    candidates = [m for m in range(1, 1 << n) if _square_sign(m, ctx) > 0]

    def extend(chosen, start):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for idx in range(start, len(candidates)):
            m = candidates[idx]
            if all(_blades_commute(m, c, ctx) for c in chosen) and _independent(
                chosen + [m]
            ):
                yield from extend(chosen + [m], idx + 1)

    yield from extend([], 0)


def primitive_idempotent(p: int, q: int) -> Multivector:
    """First (lexicographic) valid product idempotent f = prod (1+e_a)/2.

    A candidate blade set must give a nonzero idempotent whose two-sided
    compression f*A*f has the real dimension of the division ring; the degree
    comes from the Radon-Hurwitz formula and is cross-checked by the search.
    """
    ctx = Signature(p, q, Field.REAL)
    t = idempotent_degree(p, q)
    if t == 0:
        return Multivector.scalar(ctx, 1)
    if t < 0:
        raise ValueError(f"negative idempotent degree for ({p},{q})")
    for masks in commuting_blade_sets(p, q, t):
        f = _idempotent_from_blades(ctx, masks)
        if f.is_zero():
            continue
        if f * f != f:
            continue
        if _compression_dimension(ctx, f) == ring_class(p, q).simple_dim:
            return f
    raise ArithmeticError(f"no primitive idempotent of degree {t} found for ({p},{q})")


def _compression_dimension(ctx: Signature, f: Multivector) -> int:
    """Real dimension of f*A*f, the division ring of the idempotent."""
    span = []
    for mask in range(1 << ctx.n):
        x = f * Multivector.blade(ctx, mask) * f
        _augment_span(span, _real_coords(ctx, x))
    return len(span)


def _real_coords(ctx: Signature, x: Multivector):
    coords = []
    for mask in range(1 << ctx.n):
        c = x.coeff(mask)
        coords.append(Fraction(c.re))
        coords.append(Fraction(c.im))
    return coords


def _augment_span(span, vec) -> bool:
    """Gaussian-eliminate vec against span; append if independent."""
    v = list(vec)
    for pivot_idx, row in span:
        if v[pivot_idx]:
            factor = v[pivot_idx] / row[pivot_idx]
            v = [a - factor * b for a, b in zip(v, row)]
    for idx, a in enumerate(v):
        if a:
            span.append((idx, v))
            return True
    return False


def idempotent_degree_bruteforce(p: int, q: int) -> int:
    """Oracle: largest size of a valid commuting +1-square blade set whose
    product idempotent compresses to the division ring."""
    ctx = Signature(p, q, Field.REAL)
    ring_dim = ring_class(p, q).simple_dim
    t = 0
    while True:
        found = False
        for masks in commuting_blade_sets(p, q, t + 1):
            f = _idempotent_from_blades(ctx, masks)
            if not f.is_zero() and f * f == f and _compression_dimension(ctx, f) == ring_dim:
                found = True
                break
        if not found:
            return t
        t += 1


def spinor_rank_of_idempotent(p: int, q: int) -> int:
    """Rank of the represented idempotent in the split spinor representation."""
    f = primitive_idempotent(p, q)
    basis = real_split_basis(p, q)
    fx = Multivector(Signature(p, q, Field.COMPLEX), f.terms())
    return represent(basis, fx).rank()


# -- two-dimensional factorization -----------------------------------------

def karoubi_factorization(p: int, q: int):
    """Sequence of (s_i, t_i) in {(1,1),(2,0),(0,2)} with summed class (q-p) mod 8.

    Mixed directions peel off neutral (1,1) factors; a pure-sign remainder of
    dimension d emits one palindromic eight-block per full period plus
    (d mod 8)/2 repeats of the matching definite factor, which keeps the
    mod-8 class arithmetic consistent.
    """
    if (p + q) % 2:
        raise ValueError("factorization requires even p+q")
    factors = [(1, 1)] * min(p, q)
    d = abs(p - q)
    if p >= q:
        block, unit = [(2, 0), (0, 2), (0, 2), (2, 0)], (2, 0)
    else:
        block, unit = [(0, 2), (2, 0), (2, 0), (0, 2)], (0, 2)
    factors.extend(block * (d // 8))
    factors.extend([unit] * ((d % 8) // 2))
    return factors


def factorization_l0(p: int, q: int) -> Fraction:
    """Report l0 = (p+q)/4 for the rotation-subgroup bookkeeping."""
    return Fraction(p + q, 4)


# -- graded similarity class arithmetic -------------------------------------

def bw_complex_class(n: int) -> int:
    return n % 2


def bw_complex_add(c1: int, c2: int) -> int:
    return (c1 + c2) % 2


def bw_real_class(p: int, q: int) -> int:
    return (q - p) % 8


def bw_real_add(c1: int, c2: int) -> int:
    return (c1 + c2) % 8


class RepClass(Enum):
    R0 = "R0"
    R2 = "R2"
    H4 = "H4"
    H6 = "H6"
    C3 = "C3"
    C7 = "C7"
    DOUBLED = "doubled"


def rep_class(p: int, q: int) -> RepClass:
    """Real/quaternionic representation class for even p-q; odd is quotient territory."""
    r = (p - q) % 8
    table = {0: RepClass.R0, 2: RepClass.R2, 4: RepClass.H4, 6: RepClass.H6}
    if r not in table:
        raise ValueError(
            f"p-q = {p - q} mod 8 is odd-type; use the quotient classification"
        )
    return table[r]


_REP_FULL = {
    0: RepClass.R0,
    2: RepClass.R2,
    4: RepClass.H4,
    6: RepClass.H6,
    3: RepClass.C3,
    7: RepClass.C7,
    1: RepClass.DOUBLED,
    5: RepClass.DOUBLED,
}


@dataclass(frozen=True)
class ClassificationRecord:
    p: int
    q: int
    ring: RingClass
    pq_mod8: int
    degree: int
    rep: RepClass

    def to_dict(self):
        return {
            "p": self.p,
            "q": self.q,
            "ring": self.ring.value,
            "p_minus_q_mod8": self.pq_mod8,
            "idempotent_degree": self.degree,
            "rep_class": self.rep.value,
        }


def classification_record(p: int, q: int) -> ClassificationRecord:
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError(f"invalid signature ({p},{q}): need p,q >= 0 and p+q >= 1")
    r = (p - q) % 8
    return ClassificationRecord(
        p=p,
        q=q,
        ring=ring_class(p, q),
        pq_mod8=r,
        degree=idempotent_degree(p, q),
        rep=_REP_FULL[r],
    )
