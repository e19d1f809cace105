"""cl13: the complex Clifford algebra Cl(1,3) and a verification harness
for the symplectic-gauge Dirac-Yang-Mills model systems."""

from .algebra import (
    BETA,
    BLADE_LABELS,
    E,
    E0,
    E1,
    E2,
    E3,
    ETA,
    GENERATORS,
    J,
    METRIC_DIAG,
    CliffordElement,
    ExpConvergenceError,
    anticommutator,
    blade_mul,
    commutator,
    complex_conj,
    exp_element,
    grade_project,
    herm_conj,
    linear_combine,
    mul,
    norm,
    pseudo_conj,
    random_element,
)
from .exactnum import RationalComplex
from .fields import (
    EXACT,
    CliffordField,
    ConstantField,
    DerivativeMode,
    ExpField,
    FieldFamily,
    ModelFieldSet,
    ProductField,
    ResidualRecord,
    ScaledField,
    ShapeField,
    SumField,
    TwoYangMillsFieldSet,
    bianchi_current_check,
    build_pure_gauge,
    check_h_identities,
    check_reduction_identities,
    convergence_slope,
    eval_family,
    fd_derivative,
    fd_mode,
    model_residuals,
    random_family,
    random_two_yang_mills_set,
    reduce_to_two_yang_mills,
    sample_points,
    two_yang_mills_residuals,
)
from .rep import (
    NotHermitianError,
    SingularElementError,
    gamma_rep,
    hermitian_eigenvalues,
    inverse,
    rep_inverse,
    rep_rank,
)
from .shapes import PolyShape, TrigShape, constant_shape, shape_from_json
from .subspaces import (
    HermitianIdempotent,
    SubspaceBasis,
    SymplecticMatrixSpace,
    build_matrix_symplectic_space,
    fixed_idempotent,
    in_ideal,
    in_sp_algebra,
    in_sp_group,
    is_hermitian_idempotent,
    matrix_sp_dimension,
    sample,
    subspace_basis,
)
from .symmetries import (
    BilinearForm,
    TransformationSpec,
    apply_transformation,
    bilinear_form,
    check_current_conservation,
    covariance_check,
)
from .verify import Report, ScenarioConfig, emit_report, run_scenario

__version__ = "0.1.0"
