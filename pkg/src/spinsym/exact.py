"""Exact complex-rational scalars and dense exact matrices.

Every identity checked in this package is an exact statement, so the scalar
type is a pair of ``fractions.Fraction`` values and equality is literal.
Matrix multiplication skips zero entries; the generator matrices built from
Kronecker products have a single nonzero per row, which keeps products cheap
without a dedicated sparse type.
"""

from __future__ import annotations

from fractions import Fraction


class QC:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @staticmethod
    def coerce(x) -> "QC":
        if isinstance(x, QC):
            return x
        if isinstance(x, (int, Fraction)):
            return QC(x)
        if isinstance(x, complex):
            if x.real != int(x.real) or x.imag != int(x.imag):
                raise TypeError("refusing inexact float -> QC coercion")
            return QC(int(x.real), int(x.imag))
        raise TypeError(f"cannot coerce {type(x)!r} to QC")

    def __add__(self, other):
        other = QC.coerce(other)
        return QC(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = QC.coerce(other)
        return QC(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return QC.coerce(other) - self

    def __mul__(self, other):
        other = QC.coerce(other)
        return QC(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QC.coerce(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return QC(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        return QC.coerce(other) / self

    def __neg__(self):
        return QC(-self.re, -self.im)

    def conj(self) -> "QC":
        return QC(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = QC.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


ZERO = QC(0)
ONE = QC(1)
I = QC(0, 1)


def exact_sqrt(x: Fraction):
    """Square root of a nonnegative rational, or None if it is irrational."""
    if x < 0:
        raise ValueError("exact_sqrt of negative rational")
    p, q = x.numerator, x.denominator
    rp = _isqrt_exact(p)
    rq = _isqrt_exact(q)
    if rp is None or rq is None:
        return None
    return Fraction(rp, rq)


def _isqrt_exact(n: int):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


class ExactMatrix:
    """Dense square or rectangular matrix over QC with exact operations."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = [[QC.coerce(v) for v in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix rows")

    @property
    def side(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("matrix is not square")
        return self.nrows

    @classmethod
    def zeros(cls, n, m=None):
        m = n if m is None else m
        return cls([[ZERO] * m for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __add__(self, other):
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return ExactMatrix([[-a for a in row] for row in self.rows])

    def scale(self, c) -> "ExactMatrix":
        c = QC.coerce(c)
        return ExactMatrix([[a * c for a in row] for row in self.rows])

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        out = [[ZERO] * other.ncols for _ in range(self.nrows)]
        orows = other.rows
        for i, row in enumerate(self.rows):
            acc = out[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in enumerate(orows[k]):
                    if b:
                        acc[j] = acc[j] + a * b
        return ExactMatrix(out)

    def __rmul__(self, other):
        return self.scale(other)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def conj(self) -> "ExactMatrix":
        return ExactMatrix([[a.conj() for a in row] for row in self.rows])

    def dagger(self) -> "ExactMatrix":
        return self.T.conj()

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.nrows == other.nrows and self.ncols == other.ncols and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.rows))

    def is_zero(self) -> bool:
        return all(not a for row in self.rows for a in row)

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.side)

    def is_scalar_multiple_of_identity(self):
        """Return the scalar c with self == c*I, or None."""
        n = self.side
        c = self.rows[0][0]
        for i in range(n):
            for j in range(n):
                want = c if i == j else ZERO
                if self.rows[i][j] != want:
                    return None
        return c

    def trace(self) -> QC:
        t = ZERO
        for i in range(self.side):
            t = t + self.rows[i][i]
        return t

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([a * b for a in ra for b in rb])
        return ExactMatrix(out)

    def inverse(self) -> "ExactMatrix":
        n = self.side
        aug = [list(row) + list(ident_row) for row, ident_row in
               zip(self.rows, ExactMatrix.identity(n).rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ValueError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = ONE / aug[col][col]
            aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return ExactMatrix([row[n:] for row in aug])

    def rank(self) -> int:
        work = [list(row) for row in self.rows]
        rank = 0
        for col in range(self.ncols):
            piv = next((r for r in range(rank, self.nrows) if work[r][col]), None)
            if piv is None:
                continue
            work[rank], work[piv] = work[piv], work[rank]
            inv = ONE / work[rank][col]
            work[rank] = [v * inv for v in work[rank]]
            for r in range(self.nrows):
                if r != rank and work[r][col]:
                    f = work[r][col]
                    work[r] = [v - f * w for v, w in zip(work[r], work[rank])]
            rank += 1
            if rank == self.nrows:
                break
        return rank

    def first_nonzero(self):
        for row in self.rows:
            for a in row:
                if a:
                    return a
        return None

    def canonical_scalar_form(self) -> "ExactMatrix":
        """Divide out the first nonzero entry (row-major) for deterministic output."""
        c = self.first_nonzero()
        if c is None:
            return self
        return self.scale(ONE / c)

    def proportional_to(self, other: "ExactMatrix"):
        """Return c with self == c*other, or None."""
        c = None
        for ra, rb in zip(self.rows, other.rows):
            for a, b in zip(ra, rb):
                if not a and not b:
                    continue
                if bool(a) != bool(b):
                    return None
                q = a / b
                if c is None:
                    c = q
                elif q != c:
                    return None
        return c if c is not None else ONE

    def commutes_with(self, other: "ExactMatrix") -> bool:
        return (self * other - other * self).is_zero()

    def anticommutes_with(self, other: "ExactMatrix") -> bool:
        return (self * other + other * self).is_zero()

    def entry_quads(self):
        """Row-major [re_num, re_den, im_num, im_den] quadruples (JSON form)."""
        return [
            [a.re.numerator, a.re.denominator, a.im.numerator, a.im.denominator]
            for row in self.rows
            for a in row
        ]

    @classmethod
    def from_entry_quads(cls, side, quads):
        it = iter(quads)
        rows = []
        for _ in range(side):
            row = []
            for _ in range(side):
                rn, rd, im_n, im_d = next(it)
                row.append(QC(Fraction(rn, rd), Fraction(im_n, im_d)))
            rows.append(row)
        return cls(rows)

    def __repr__(self):
        body = "; ".join(" ".join(repr(a) for a in row) for row in self.rows)
        return f"ExactMatrix[{body}]"
