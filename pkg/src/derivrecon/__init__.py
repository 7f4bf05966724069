"""Exact computation of higher-order derivative spaces of homogeneous forms,
genericity certification, and reconstruction of a form from its partials."""

from .derivspace import (Catalecticant, apolar_pair, catalecticant, derivative,
                         e_dim, e_space)
from .errors import DerivError, InvariantViolation
from .exactla import (ExactMatrix, Subspace, nullspace, rank, row_space, rref,
                      subspace_contains, subspace_equal)
from .genericity import (ExperimentConfig, Fingerprint, GenericityProfile,
                         certify_generic, fingerprint, profile, run_experiment,
                         sample)
from .multiindex import dim_S, enumerate_indices
from .polyring import HomPoly, add_scaled, euler_lhs, parse, to_text
from .reconstruct import (RelationMatrix, ReconstructionResult, check_symmetry,
                          descend, extract_relations, solve_from_span,
                          verify_theorem)

__version__ = "0.1.0"
