"""Spinor representations by iterated Kronecker products of Pauli matrices.

The canonical even family on 2k generators places sigma_1 (then sigma_2) in
slot j behind a prefix of sigma_3 factors; the odd extension appends the all
sigma_3 product.  A real-split basis multiplies the trailing q generator
matrices by i so the matrix squares match the (p, q) metric.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Field, Multivector, Signature
from .exact import ExactMatrix, I, ONE, QC


def pauli_basis():
    """The four Pauli matrices sigma_0..sigma_3, exactly."""
    s0 = ExactMatrix([[1, 0], [0, 1]])
    s1 = ExactMatrix([[0, 1], [1, 0]])
    s2 = ExactMatrix([[QC(0), QC(0, -1)], [QC(0, 1), QC(0)]])
    s3 = ExactMatrix([[1, 0], [0, -1]])
    return s0, s1, s2, s3


def _kron_chain(mats):
    out = mats[0]
    for m in mats[1:]:
        out = out.kron(m)
    return out


@dataclass
class SpinBasis:
    """Concrete matrix realization of the generators of an algebra context."""

    context: Signature
    mats: tuple
    _blade_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.context.n

    @property
    def side(self) -> int:
        return self.mats[0].side

    def blade_matrix(self, mask: int) -> ExactMatrix:
        """Matrix of the basis blade with the given generator bitmask."""
        cached = self._blade_cache.get(mask)
        if cached is not None:
            return cached
        if mask == 0:
            m = ExactMatrix.identity(self.side)
        else:
            low = mask & -mask
            m = self.mats[low.bit_length() - 1] * self.blade_matrix(mask ^ low)
        self._blade_cache[mask] = m
        return m

    def validate(self):
        """Check generator squares against the metric and pairwise anticommutation."""
        ident = ExactMatrix.identity(self.side)
        for i, m in enumerate(self.mats, start=1):
            sq = m * m
            want = ident if self.context.generator_square(i) > 0 else -ident
            if sq != want:
                raise ValueError(f"generator {i} square violates the metric")
        for i in range(len(self.mats)):
            for j in range(i + 1, len(self.mats)):
                if not self.mats[i].anticommutes_with(self.mats[j]):
                    raise ValueError(f"generators {i + 1},{j + 1} fail to anticommute")
        return self


def build_even_spinbasis(k: int) -> SpinBasis:
    """The 2k canonical Kronecker generators on 2^k dimensions."""
    if k < 1:
        raise ValueError("k must be >= 1")
    s0, s1, s2, s3 = pauli_basis()
    mats = []
    for j in range(1, k + 1):
        mats.append(_kron_chain([s3] * (j - 1) + [s1] + [s0] * (k - j)))
    for j in range(1, k + 1):
        mats.append(_kron_chain([s3] * (j - 1) + [s2] + [s0] * (k - j)))
    return SpinBasis(Signature(2 * k, 0, Field.COMPLEX), tuple(mats))


def extend_odd(k: int) -> ExactMatrix:
    """Extra generator for 2k+1 dimensions: the k-fold sigma_3 product."""
    if k < 1:
        raise ValueError("k must be >= 1")
    s3 = pauli_basis()[3]
    return _kron_chain([s3] * k)


def spinbasis(n: int) -> SpinBasis:
    """Canonical basis for n generators (odd n appends the sigma_3 product)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    k = n // 2
    even = build_even_spinbasis(k)
    if n % 2 == 0:
        return even
    mats = even.mats + (extend_odd(k),)
    return SpinBasis(Signature(n, 0, Field.COMPLEX), mats)


def variant_spinbasis(n: int) -> SpinBasis:
    """Even-n basis whose symmetric-generator count has the opposite parity.

    Replaces the last (skew) canonical generator with the symmetric sigma_3
    product, moving the symmetric count from n/2 to n/2 + 1.
    """
    if n < 4 or n % 2:
        raise ValueError("variant basis needs even n >= 4")
    k = n // 2
    even = build_even_spinbasis(k)
    mats = even.mats[:-1] + (extend_odd(k),)
    return SpinBasis(Signature(n, 0, Field.COMPLEX), mats)


def permuted_spinbasis(basis: SpinBasis, order) -> SpinBasis:
    """Same generator matrices in a new order (still a valid basis).

    Only uniform-metric contexts permute freely; a split context would need
    its signature permuted alongside."""
    if basis.context.q not in (0, basis.context.n):
        raise ValueError("permutation requires a uniform metric")
    if sorted(order) != list(range(basis.n)):
        raise ValueError("order must be a permutation of 0..n-1")
    return SpinBasis(basis.context, tuple(basis.mats[i] for i in order))


def real_split_basis(p: int, q: int) -> SpinBasis:
    """Generator matrices of the real subalgebra picked out by the (p, q) split."""
    base = spinbasis(p + q)
    mats = list(base.mats[:p]) + [m.scale(I) for m in base.mats[p:]]
    return SpinBasis(Signature(p, q, Field.COMPLEX), tuple(mats))


def represent(basis: SpinBasis, x: Multivector) -> ExactMatrix:
    """Linear extension of the generator map; an algebra homomorphism."""
    if x.context.n != basis.context.n:
        raise ValueError("multivector arity does not match basis arity")
    out = ExactMatrix.zeros(basis.side)
    for mask, c in x.terms().items():
        out = out + basis.blade_matrix(mask).scale(c)
    return out


# -- exact span rank of the 2^n blade products ------------------------------
#
# Every blade product of Kronecker generators has exactly one nonzero entry
# per row.  Two products with different column patterns are orthogonal under
# the trace pairing, so the Gram matrix is block diagonal over patterns and
# the rank computation reduces to small exact eliminations.

def _sparse_gen(mat: ExactMatrix):
    cols, vals = [], []
    for row in mat.rows:
        nz = [(j, v) for j, v in enumerate(row) if v]
        if len(nz) != 1:
            return None
        cols.append(nz[0][0])
        vals.append(nz[0][1])
    return tuple(cols), tuple(vals)


def _sparse_mul(a, b):
    acols, avals = a
    bcols, bvals = b
    cols = tuple(bcols[c] for c in acols)
    vals = tuple(av * bvals[c] for av, c in zip(avals, acols))
    return cols, vals


def span_rank(basis: SpinBasis) -> int:
    """Rank over the complex rationals of all 2^n blade product matrices."""
    gens = [_sparse_gen(m) for m in basis.mats]
    if any(g is None for g in gens):
        # fall back to a dense Gram computation
        vectors = [basis.blade_matrix(mask) for mask in range(1 << basis.n)]
        gram = ExactMatrix(
            [[(a * b.dagger()).trace() for b in vectors] for a in vectors]
        )
        return gram.rank()
    side = basis.side
    prods = {0: (tuple(range(side)), tuple([ONE] * side))}
    for mask in range(1, 1 << basis.n):
        low = mask & -mask
        prods[mask] = _sparse_mul(gens[low.bit_length() - 1], prods[mask ^ low])
    groups = {}
    for mask, (cols, vals) in prods.items():
        groups.setdefault(cols, []).append(vals)
    rank = 0
    for members in groups.values():
        gram = ExactMatrix(
            [[sum((x * y.conj() for x, y in zip(va, vb)), QC(0)) for vb in members]
             for va in members]
        )
        rank += gram.rank()
    return rank


# -- quotient map on matrices ------------------------------------------------

def odd_unit(basis: SpinBasis) -> ExactMatrix:
    """Matrix of eps*omega, the involutive central unit of an odd algebra."""
    if basis.n % 2 == 0:
        raise ValueError("odd basis required")
    from .algebra import volume_element, volume_epsilon

    w = volume_element(basis.context).scale(volume_epsilon(basis.context))
    u = represent(basis, w)
    if (u * u) != ExactMatrix.identity(basis.side):
        raise ArithmeticError("unit normalization failed to square to identity")
    return u


@dataclass(frozen=True)
class TwoSlot:
    """Element P1 + U*P2 of an odd-dimensional representation, kept in slots."""

    even: ExactMatrix
    ucoef: ExactMatrix

    def __add__(self, other: "TwoSlot") -> "TwoSlot":
        return TwoSlot(self.even + other.even, self.ucoef + other.ucoef)

    def __mul__(self, other: "TwoSlot") -> "TwoSlot":
        # U is central with U^2 = I, so slots multiply like a group algebra
        return TwoSlot(
            self.even * other.even + self.ucoef * other.ucoef,
            self.even * other.ucoef + self.ucoef * other.even,
        )


def chi_quotient(x: TwoSlot) -> ExactMatrix:
    """Quotient map P1 + U*P2 -> P1 + P2 (the unit U maps to the identity)."""
    return x.even + x.ucoef


def two_slot_of_multivector(basis: SpinBasis, x: Multivector) -> TwoSlot:
    """Split a multivector of an odd algebra into (even part, U coefficient)."""
    if basis.n % 2 == 0:
        raise ValueError("odd basis required")
    top = 1 << (basis.n - 1)
    u = odd_unit(basis)
    even = ExactMatrix.zeros(basis.side)
    ucoef = ExactMatrix.zeros(basis.side)
    for mask, c in x.terms().items():
        m = basis.blade_matrix(mask).scale(c)
        if mask & top:
            ucoef = ucoef + u * m
        else:
            even = even + m
    return TwoSlot(even, ucoef)
