"""Executable models of rings with effects: carriers, law suites and reports."""

from .axiom_engine import leq, order_unit_index, verify_ering_axioms, verify_lemma_suite
from .boolean_structure import (
    BooleanHom,
    BooleanView,
    atom_decomposition,
    boolean_view,
    bring_conditions,
    check_interpolation,
    extend_boolean_hom,
    lattice_sup,
    split_positive_negative,
    stone_represent,
)
from .carriers import (
    INTEGERS,
    RATIONALS,
    MeasurableSpace,
    decompose_positive,
    make_function_carrier,
    make_matrix_carrier,
    product_carrier,
)
from .effect_logic import Coexistence, Effect, coexistence_witness, is_sharp, oplus, orthosupplement
from .exact_numeric import Matrix, SymMatrix, is_psd
from .projection_logic import (
    Projection,
    compress,
    mackey_compatible,
    proj_join,
    proj_meet,
    proj_orthodiff,
    retraction_projection,
    verify_compression_base,
    verify_omp,
)
from .report import SampleStrategy, VerificationReport, replay

__all__ = [name for name in dir() if not name.startswith("_")]
