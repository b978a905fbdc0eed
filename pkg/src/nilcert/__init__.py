"""Executable certificates of non-nilpotence for complex matrices.

Split a square complex matrix into its Hermitian real and imaginary
parts, classify their definiteness and spectrum symmetry, measure
nilpotency and normality, and turn the vanishing theorems relating these
notions into checkable verdicts, including a discretized integration
operator whose spectrum collapses without it ever being nilpotent.
"""

from .matcore import (
    ComplexMatrix,
    CartesianDecomposition,
    OrderMismatchError,
    adjoint,
    add,
    subtract,
    scale,
    multiply,
    trace,
    frobenius_norm,
    matrix_power,
    cartesian_decompose,
    identity,
    zero,
    is_zero,
    default_zero_tol,
)
from .spectral import (
    SpectrumReport,
    DefinitenessClass,
    SymmetryReport,
    NonHermitianError,
    JacobiConvergenceError,
    hermitian_eigenvalues,
    classify_definiteness,
    spectrum_symmetry,
    eigenvalue_clusters,
    zero_eigenvalue_multiplicity,
    spectral_norm,
)
from .nilpotency import (
    NilpotencyReport,
    NormalityReport,
    GelfandSequence,
    nilpotency_index,
    is_normal,
    gelfand_sequence,
    norm_power_defect,
)
from .generators import (
    GeneratorConfig,
    GaussianStream,
    DegenerateDrawError,
    RNG_ALGORITHM,
    derive_seed,
    random_unitary,
    random_nilpotent,
    random_hermitian,
    random_psd,
    random_accretive,
)
from .theorems import (
    Certificate,
    CertificateKind,
    VerdictStatus,
    OracleVerdict,
    AnalysisReport,
    analyze,
    non_nilpotence_certificate,
    opposite_signs_check,
    small_dim_symmetry_oracle,
    dim4_multiplicity_oracle,
    two_by_two_disjoint_oracle,
)
from .volterra import VolterraReport, volterra_matrix, volterra_report
from .gallery import GalleryEntry, GalleryVerdict
from . import gallery
from .matfile import MatrixFormatError, parse_matrix, format_matrix

__version__ = "0.1.0"
