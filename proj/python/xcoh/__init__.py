"""Coherence quantifiers, random ensembles, and claim verification for
two-qubit X states."""

from xcoh._core import (
    ClaimResult,
    EnsembleRecord,
    MeasureSet,
    ValidationError,
    VerificationReport,
    XState,
    c_l1,
    c_rel,
    c_skew,
    canonicalize,
    cli,
    concurrence,
    d2_first_order,
    d2_max,
    eigenvalues,
    emit_svg_scatter,
    family,
    k_coherence_summand,
    make_xstate,
    measure_all,
    mix,
    mnms_ceiling_l1,
    purity,
    read_csv,
    reduced_diagonal,
    run_ensemble,
    sample_random,
    verify,
    write_csv,
)

__all__ = [
    "ClaimResult",
    "EnsembleRecord",
    "MeasureSet",
    "ValidationError",
    "VerificationReport",
    "XState",
    "c_l1",
    "c_rel",
    "c_skew",
    "canonicalize",
    "cli",
    "concurrence",
    "d2_first_order",
    "d2_max",
    "eigenvalues",
    "emit_svg_scatter",
    "family",
    "k_coherence_summand",
    "make_xstate",
    "measure_all",
    "mix",
    "mnms_ceiling_l1",
    "purity",
    "read_csv",
    "reduced_diagonal",
    "run_ensemble",
    "sample_random",
    "verify",
    "write_csv",
]

__version__ = "0.1.0"
