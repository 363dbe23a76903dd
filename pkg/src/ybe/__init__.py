"""Finite involutive non-degenerate set-theoretic Yang-Baxter solutions.

Construction and validation, retraction and multipermutation levels,
twisted-union detection, structure-group arithmetic, and exhaustive
enumeration of square-free solutions on small ground sets.
"""

from . import corpus
from .enumerate import enumerate_square_free, sweep
from .errors import (
    BraidFails,
    CapExceeded,
    CriterionFails,
    DegreeMismatch,
    IncompatiblePartition,
    IndexOutOfRange,
    NotAPartition,
    NotInvariant,
    NotInvolutive,
    NotNondegenerate,
    NotSquareFreeInput,
    PreconditionUnmet,
    YbeError,
)
from .perm import (
    Partition,
    Perm,
    PermGroup,
    are_conjugate,
    closure,
    compose,
    cycle_decomposition,
    inverse,
    is_abelian,
    is_cyclic,
    orbits,
    perm_from_cycle_str,
)
from .retract import (
    check_abelian_collapse,
    check_epimorphism,
    check_orbit_preservation,
    multipermutation_level,
    quotient,
    ret,
    ret_rho,
    retract_classes,
    rho_classes,
    strong_level,
)
from .solution import (
    Solution,
    ValidationReport,
    Verdict,
    canonical_form,
    check_lemma_permutat,
    from_r_table,
    from_sigma,
    gamma_group,
    is_isomorphic,
    is_trivial,
    iyb_group,
    r_apply,
    restrict,
    solution_from_doc,
    solution_to_doc,
    validate,
)
from .structure import StructureElem, Word, check_defining_relations, eval_word, gen, inv, mul
from .twisted import (
    check_cyclic_condition,
    check_cyclic_generators,
    check_full_cyclic_condition,
    check_gtu_pair,
    check_key2,
    check_theorem_cyclic1,
    find_gtu_decomposition,
    gtu_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
