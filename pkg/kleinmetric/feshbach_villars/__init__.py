"""Feshbach-Villars (Schrödinger) form of the Klein-Gordon equation"""

from .state import TwoComponentState
from .hamiltonian import build_hamiltonian, apply_hamiltonian
from .eigenpairs import (
    FVEigenpair,
    fv_eigenpairs,
    adjoint_eigenvectors,
    eigenstate,
    biorthogonality_check,
    completeness_residual,
    expand_in_eigenbasis,
)

__all__ = [
    "TwoComponentState",
    "build_hamiltonian",
    "apply_hamiltonian",
    "FVEigenpair",
    "fv_eigenpairs",
    "adjoint_eigenvectors",
    "eigenstate",
    "biorthogonality_check",
    "completeness_residual",
    "expand_in_eigenbasis",
]
