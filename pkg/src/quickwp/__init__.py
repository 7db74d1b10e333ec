"""Word problem algorithms for finitely generated subgroups of GL_d(Z)."""
from .errors import (BudgetExceeded, ConventionViolation, DimensionMismatch, FormatError,
                     InvariantViolation, ModulusMismatch, NotUnimodular, ParseError,
                     PreconditionViolation, WPError)
from .exact import (ExactMatrix, bit_length, determinant, is_identity, mat_inverse_unimodular,
                    mat_mul, max_bit_length, max_norm, mod_reduce)
from .modular import ModMatrix, canonical_key, mod_is_identity, mod_mul
from .words import (RNG_ALGORITHM, GeneratorSystem, Word, letter_matrix, load_generator_system,
                    make_rng, parse_word, read_generator_file, sample_uniform_word)
from .solvers import (QModulus, QuickWPResult, compute_q, evaluate_dc, evaluate_dc_mod,
                      evaluate_naive, is_triangular_system, quick_wp, quick_wp_report)

__version__ = "0.1.0"
