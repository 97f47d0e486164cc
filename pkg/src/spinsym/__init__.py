"""Exact-arithmetic Clifford algebras, spinor representations, and
discrete-symmetry operators for finite-dimensional Lorentz-group
representations."""

from .algebra import (
    Field,
    HelicityPair,
    Multivector,
    Signature,
    conjugation,
    grade_involution,
    helicity_idempotents,
    pseudo_conjugation,
    reversion,
    volume_element,
)
from .exact import ExactMatrix, QC
from .spinbasis import (
    SpinBasis,
    build_even_spinbasis,
    extend_odd,
    pauli_basis,
    real_split_basis,
    represent,
    span_rank,
    spinbasis,
)

__all__ = [
    "Field", "HelicityPair", "Multivector", "Signature",
    "conjugation", "grade_involution", "helicity_idempotents",
    "pseudo_conjugation", "reversion", "volume_element",
    "ExactMatrix", "QC",
    "SpinBasis", "build_even_spinbasis", "extend_odd", "pauli_basis",
    "real_split_basis", "represent", "span_rank", "spinbasis",
]

__version__ = "0.1.0"
