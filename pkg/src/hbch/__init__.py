"""BCH and homothetic-BCH codes over GF(q^2).

Constructs monomial evaluation codes and their subfield-subcodes over
towers GF(q^2) < GF(q^(2s)), certifies Hermitian self-orthogonality both
by direct Gram computation and by sharp representative bounds, and derives
quantum stabilizer code parameters [[n, k, >= d]]_q.
"""

from .cosets import (
    CosetSystem,
    DefiningSet,
    build_cosets,
    defining_set,
    defining_set_from_reps,
    next_representative,
    reduce_mod,
)
from .evalcodes import (
    LinearCode,
    PointSet,
    build_points,
    evaluation_code,
    hermitian_dual,
    min_distance_exhaustive,
    puncture,
    subfield_subcode,
    trace_subcode,
)
from .gf import (
    FieldCtx,
    FieldTower,
    build_field,
    build_tower,
    frobenius,
    root_of_unity,
    trace_to_small,
)
from .hermitian import (
    BoundResult,
    CaseDescriptor,
    aly_bound,
    classify_case,
    is_hermitian_self_orthogonal,
    monomial_pair_orthogonal,
    sharp_bound,
    sharp_bound_bruteforce,
    sharp_bound_closed_form,
)
from .quantum import (
    PipelineResult,
    QuantumParams,
    ScanConfig,
    ScanGrid,
    bch_pipeline,
    homothetic_pipeline,
    lengthen,
    scan,
    stabilizer_from_classical,
)

__version__ = "0.1.0"

__all__ = [
    "CosetSystem", "DefiningSet", "build_cosets", "defining_set",
    "defining_set_from_reps", "next_representative", "reduce_mod",
    "LinearCode", "PointSet", "build_points", "evaluation_code",
    "hermitian_dual", "min_distance_exhaustive", "puncture",
    "subfield_subcode", "trace_subcode",
    "FieldCtx", "FieldTower", "build_field", "build_tower", "frobenius",
    "root_of_unity", "trace_to_small",
    "BoundResult", "CaseDescriptor", "aly_bound", "classify_case",
    "is_hermitian_self_orthogonal", "monomial_pair_orthogonal",
    "sharp_bound", "sharp_bound_bruteforce", "sharp_bound_closed_form",
    "PipelineResult", "QuantumParams", "ScanConfig", "ScanGrid",
    "bch_pipeline", "homothetic_pipeline", "lengthen", "scan",
    "stabilizer_from_classical",
    "__version__",
]
