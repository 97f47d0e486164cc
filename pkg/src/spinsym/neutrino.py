"""Even-subalgebra spinors of the spacetime algebra, helicity splitting, and
plane-wave residuals of the two-component and matrix massless equations.

Conventions fixed here and verified symbolically in the test suite:
the chirality element is g5 = -i*g0*G1*G2*G3 (entries [[0,-I],[-I,0]]), the
plane-wave phase is exp(+i(k.x - w t)), and the momentum-space Dirac operator
is D = -i w g0 + i(k1 G1 + k2 G2 + k3 G3).  With these choices the plus
projection carries the (d0 - sigma.grad) two-component family and the minus
projection the (d0 + sigma.grad) family.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .algebra import Field, Signature
from .exact import ExactMatrix, I, ONE, QC
from .spinbasis import SpinBasis, pauli_basis


def gamma_basis() -> SpinBasis:
    """Spacetime generators: g0 = diag(I,-I), G_i = offdiag(sigma_i, -sigma_i)."""
    s0, s1, s2, s3 = pauli_basis()
    z = ExactMatrix.zeros(2)

    def blk(a, b, c, d):
        rows = []
        for i in range(2):
            rows.append(list(a.rows[i]) + list(b.rows[i]))
        for i in range(2):
            rows.append(list(c.rows[i]) + list(d.rows[i]))
        return ExactMatrix(rows)

    g0 = blk(s0, z, z, -s0)
    gs = tuple(blk(z, s, -s, z) for s in (s1, s2, s3))
    return SpinBasis(Signature(1, 3, Field.COMPLEX), (g0,) + gs).validate()


def gamma5() -> ExactMatrix:
    """Chirality element: -i times the volume product, squaring to +1."""
    g0, g1, g2, g3 = gamma_basis().mats
    return (g0 * g1 * g2 * g3).scale(QC(0, -1))


def helicity_projectors():
    """Idempotent, orthogonal, complete pair (1 +- g5)/2."""
    g5 = gamma5()
    ident = ExactMatrix.identity(4)
    half = QC(Fraction(1, 2))
    return (ident + g5).scale(half), (ident - g5).scale(half)


@dataclass(frozen=True)
class DHSpinor:
    """Even-subalgebra coefficients; the two-index names follow the cyclic
    bivector convention (a13 multiplies G3*G1)."""

    a0: Fraction = Fraction(0)
    a01: Fraction = Fraction(0)
    a02: Fraction = Fraction(0)
    a03: Fraction = Fraction(0)
    a12: Fraction = Fraction(0)
    a13: Fraction = Fraction(0)
    a23: Fraction = Fraction(0)
    a0123: Fraction = Fraction(0)

    def phis(self):
        """The four complex combinations of the matrix form."""
        return (
            QC(self.a0, -self.a12),
            QC(self.a13, -self.a23),
            QC(self.a03, -self.a0123),
            QC(self.a01, self.a02),
        )


def dh_matrix(s: DHSpinor) -> ExactMatrix:
    """4x4 matrix form of the even-subalgebra element."""
    f1, f2, f3, f4 = s.phis()
    cc = lambda z: z.conj()
    return ExactMatrix([
        [f1, -cc(f2), f3, cc(f4)],
        [f2, cc(f1), f4, -cc(f3)],
        [f3, cc(f4), f1, -cc(f2)],
        [f4, -cc(f3), f2, cc(f1)],
    ])


def dh_matrix_from_blades(s: DHSpinor) -> ExactMatrix:
    """Same element assembled blade by blade in the gamma basis (oracle)."""
    g0, g1, g2, g3 = gamma_basis().mats
    terms = (
        (s.a0, ExactMatrix.identity(4)),
        (s.a01, g0 * g1), (s.a02, g0 * g2), (s.a03, g0 * g3),
        (s.a12, g1 * g2), (s.a13, g3 * g1), (s.a23, g2 * g3),
        (s.a0123, g0 * g1 * g2 * g3),
    )
    out = ExactMatrix.zeros(4)
    for coeff, mat in terms:
        out = out + mat.scale(QC(coeff))
    return out


def helicity_split(s: DHSpinor):
    """phi+- = (1 +- g5)/2 * phi * G2 G1."""
    _, g1, g2, _ = gamma_basis().mats
    pp, pm = helicity_projectors()
    phi = dh_matrix(s)
    tail = g2 * g1
    return pp * phi * tail, pm * phi * tail


def psi_blocks(s: DHSpinor):
    """The eight independent 2-vector components of the split."""
    f1, f2, f3, f4 = s.phis()
    half_i = QC(0, Fraction(1, 2))
    cc = lambda z: z.conj()

    def vec(a, b):
        return (half_i * a, half_i * b)

    plus = (
        vec(f1 - f3, f2 - f4),
        vec(cc(f2) + cc(f4), -cc(f1) - cc(f3)),
        vec(f3 - f1, f4 - f2),
        vec(-cc(f4) - cc(f2), cc(f3) + cc(f1)),
    )
    minus = (
        vec(f1 + f3, f2 + f4),
        vec(cc(f2) - cc(f4), -cc(f1) + cc(f3)),
        vec(f3 + f1, f4 + f2),
        vec(-cc(f4) + cc(f2), cc(f3) - cc(f1)),
    )
    return plus, minus


class Chirality(Enum):
    UNDOTTED = "undotted"   # (d0 - sigma.grad) family
    DOTTED = "dotted"       # (d0 + sigma.grad) family


@dataclass(frozen=True)
class PlaneWave:
    amplitude: tuple        # two QC components
    wavevector: tuple       # three Fractions
    frequency: Fraction
    chirality: Chirality = Chirality.UNDOTTED

    def __post_init__(self):
        if len(self.amplitude) != 2 or len(self.wavevector) != 3:
            raise ValueError("plane wave needs a 2-amplitude and 3-wavevector")
        if self.frequency < 0:
            raise ValueError("frequency must be nonnegative")

    def on_shell(self) -> bool:
        k2 = sum(Fraction(k) * Fraction(k) for k in self.wavevector)
        return Fraction(self.frequency) ** 2 == k2


def _sigma_dot_k(k):
    _, s1, s2, s3 = pauli_basis()
    out = ExactMatrix.zeros(2)
    for comp, s in zip(k, (s1, s2, s3)):
        out = out + s.scale(QC(Fraction(comp)))
    return out


def weyl_residual(w: PlaneWave, phase: int = 1):
    """Constant residual 2-vector of (d0 -+ sigma.grad) on the plane wave.

    ``phase`` selects exp(phase * i(k.x - w t)); derivatives become algebraic
    factors d0 -> -i*phase*w, grad_j -> +i*phase*k_j, so the residual is
    -i*phase*(w +- sigma.k) applied to the amplitude (upper sign undotted).
    """
    if phase not in (1, -1):
        raise ValueError("phase must be +1 or -1")
    sk = _sigma_dot_k(w.wavevector)
    wid = ExactMatrix.identity(2).scale(QC(Fraction(w.frequency)))
    op = wid + sk if w.chirality is Chirality.UNDOTTED else wid - sk
    u = w.amplitude
    factor = QC(0, -phase)
    return tuple(
        factor * sum((op.rows[i][j] * u[j] for j in range(2)), QC(0))
        for i in range(2)
    )


def dirac_momentum_operator(k, omega, phase: int = 1) -> ExactMatrix:
    """gamma^mu d_mu on the plane-wave phase, as an exact 4x4 factor."""
    g0, g1, g2, g3 = gamma_basis().mats
    out = g0.scale(QC(0, -phase) * QC(Fraction(omega)))
    for comp, g in zip(k, (g1, g2, g3)):
        out = out + g.scale(QC(0, phase) * QC(Fraction(comp)))
    return out


def dh_residual(s: DHSpinor, k, omega, mass=0, phase: int = 1) -> ExactMatrix:
    """Plane-wave residual of the matrix spinor equation
    d(phi)G2G1 - m*phi*g0 = 0, evaluated exactly."""
    g0, g1, g2, g3 = gamma_basis().mats
    phi = dh_matrix(s)
    d = dirac_momentum_operator(k, omega, phase)
    res = d * phi * (g2 * g1)
    if mass:
        res = res - (phi * g0).scale(QC(Fraction(mass)))
    return res


def dh_split_residuals(s: DHSpinor, k, omega, phase: int = 1):
    """Residuals of the two decoupled massless projections."""
    d = dirac_momentum_operator(k, omega, phase)
    phip, phim = helicity_split(s)
    return d * phip, d * phim
