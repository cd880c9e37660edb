"""Canonical forms, marginal invariants, LU equivalence and marginal
reconstruction of W-class multi-qubit states."""

from ._core import (
    WCanonical,
    WTypeError,
    apply_local,
    build_w_state,
    canonicalize_excitation,
    canonicalize_slocc,
    f_eval,
    g_eval,
    invariant_profile,
    invariant_profile_from_state,
    lu_equivalent,
    qr_2x2,
    random_canonical,
    random_unitary_2,
    reconstruct,
    reduced_density,
    spectrum_from_det,
    uniqueness_scan,
    verify_lemma2,
    verify_theorem1,
)

__all__ = [
    "WCanonical",
    "WTypeError",
    "apply_local",
    "build_w_state",
    "canonicalize_excitation",
    "canonicalize_slocc",
    "f_eval",
    "g_eval",
    "invariant_profile",
    "invariant_profile_from_state",
    "lu_equivalent",
    "qr_2x2",
    "random_canonical",
    "random_unitary_2",
    "reconstruct",
    "reduced_density",
    "spectrum_from_det",
    "uniqueness_scan",
    "verify_lemma2",
    "verify_theorem1",
]

__version__ = "0.1.0"
