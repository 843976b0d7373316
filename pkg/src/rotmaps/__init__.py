"""Rotation maps of regular graphs.

Build consistent rotation maps for standard families, compose them over
Cartesian (box) products cloud by cloud, read maps off adjacency matrices,
solve for consistent labelings of arbitrary regular graphs, and export the
dart shift permutation that a coined walk's move step uses.
"""

from .adjacency import (
    AdjacencyMatrix,
    ProductPropertyReport,
    Spectrum,
    adjacency_from_rotation,
    cartesian_adjacency,
    check_row_scan_inconsistency,
    product_property_check,
    rotation_from_adjacency,
    spectrum,
    spectrum_deviation,
    sum_spectra,
)
from .core import (
    Dart,
    RotationMatrix,
    RotationTable,
    ValidationReport,
    Violation,
    incoming_labels,
    is_consistent,
    to_full_form,
    validate,
)
from .exceptions import (
    ConvergenceError,
    InconsistentInputWarning,
    InvalidRotationMapError,
    MalformedInputError,
    ParameterError,
    RegularityError,
    RotmapsError,
    SearchBudgetExceededError,
    UnsupportedDegreeError,
)
from .families import (
    FamilySpec,
    complete,
    complete_bipartite,
    cycle,
    generalized_petersen,
    hypercube,
    k2,
)
from .product import (
    BlockLayout,
    CloudPartition,
    assemble,
    cartesian_rotation,
    cloud_partition,
    product_blocks,
)
from .shift import ShiftPermutation, build_shift, verify_unitary
from .solver import ArcLabeling, agree, solve_backtracking, solve_matching

__version__ = "0.1.0"

__all__ = [
    "AdjacencyMatrix",
    "ArcLabeling",
    "BlockLayout",
    "CloudPartition",
    "ConvergenceError",
    "Dart",
    "FamilySpec",
    "InconsistentInputWarning",
    "InvalidRotationMapError",
    "MalformedInputError",
    "ParameterError",
    "ProductPropertyReport",
    "RegularityError",
    "RotationMatrix",
    "RotationTable",
    "RotmapsError",
    "SearchBudgetExceededError",
    "ShiftPermutation",
    "Spectrum",
    "UnsupportedDegreeError",
    "ValidationReport",
    "Violation",
    "adjacency_from_rotation",
    "agree",
    "assemble",
    "build_shift",
    "cartesian_adjacency",
    "cartesian_rotation",
    "check_row_scan_inconsistency",
    "cloud_partition",
    "complete",
    "complete_bipartite",
    "cycle",
    "generalized_petersen",
    "hypercube",
    "incoming_labels",
    "is_consistent",
    "k2",
    "product_blocks",
    "product_property_check",
    "rotation_from_adjacency",
    "solve_backtracking",
    "solve_matching",
    "spectrum",
    "spectrum_deviation",
    "sum_spectra",
    "to_full_form",
    "validate",
    "verify_unitary",
]
