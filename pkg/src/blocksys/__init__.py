"""Exact block-system analysis for finite-dimensional coalgebras and
feasibility search over hypothetical block layouts.

Everything is computed over exact scalars: plain rationals or a rational
extension field given by the minimal polynomial of a generator.
"""

from .coalgebra import (CoalgebraData, DualAlgebra, HopfData, ValidationReport,
                        Violation, dual_algebra, validate_coalgebra, validate_hopf)
from .corpus import (corpus, cyclic, dual_group_algebra, group_algebra,
                     named_group, s3, sweedler, taft)
from .errors import (AmbientMismatch, BlocksysError, FileFormatError,
                     InternalDisagreement, InvalidInput, LiftingFailed,
                     NonSplitComponent, UnsupportedParams, ZeroArgument)
from .fileformat import dump_document, dump_path, load_document, load_path
from .filtration import (BlockSystem, CoalgebraAnalysis, FiltrationReport,
                         MatrixComponent, ProjectionData, SemisimpleQuotient,
                         SimpleSubcoalgebra, WedderburnDecomposition, analyze,
                         block_system, coradical_filtration, coradical_projection,
                         jacobson_radical, p_spaces, simple_subcoalgebras,
                         wedderburn_decompose)
from .linalg import (Matrix, Subspace, annihilator, coordinates_in_basis, image,
                     intersect, kernel, kron, minimal_polynomial, preimage,
                     quotient_complement, rref, solve, subspace_sum)
from .rules import (RuleReport, run_all_rules, verify_chain_and_symmetry,
                    verify_group_and_antipode_stability,
                    verify_group_order_divisibility,
                    verify_necessary_blocks_and_top_line)
from .scalars import ExtensionField, RationalField, cyclotomic_field, root_of_unity
from .solver import (Bounds, Profile, Verdict, basic_block_dim, check_profile,
                     dimension_lower_bound, feasible, minimal_form_dim,
                     no_skew_primitive_guard, sweep)

__version__ = "1.0.0"

__all__ = [
    "AmbientMismatch", "BlockSystem", "BlocksysError", "Bounds",
    "CoalgebraAnalysis", "CoalgebraData", "DualAlgebra", "ExtensionField",
    "FileFormatError", "FiltrationReport", "HopfData", "InternalDisagreement",
    "InvalidInput", "LiftingFailed", "Matrix", "MatrixComponent",
    "NonSplitComponent", "Profile", "ProjectionData", "RationalField",
    "RuleReport", "SemisimpleQuotient", "SimpleSubcoalgebra", "Subspace",
    "UnsupportedParams", "ValidationReport", "Verdict", "Violation",
    "WedderburnDecomposition", "ZeroArgument", "analyze", "annihilator",
    "basic_block_dim", "block_system", "check_profile", "coordinates_in_basis",
    "coradical_filtration", "coradical_projection", "corpus", "cyclic",
    "cyclotomic_field", "dimension_lower_bound", "dual_algebra",
    "dual_group_algebra", "dump_document", "dump_path", "feasible",
    "group_algebra", "image", "intersect", "jacobson_radical", "kernel", "kron",
    "load_document", "load_path", "minimal_form_dim", "minimal_polynomial",
    "named_group", "no_skew_primitive_guard", "p_spaces", "preimage",
    "quotient_complement", "root_of_unity", "rref", "run_all_rules", "s3",
    "simple_subcoalgebras", "solve", "subspace_sum", "sweedler", "sweep",
    "taft", "validate_coalgebra", "validate_hopf",
    "verify_chain_and_symmetry", "verify_group_and_antipode_stability",
    "verify_group_order_divisibility", "verify_necessary_blocks_and_top_line",
    "wedderburn_decompose",
]
