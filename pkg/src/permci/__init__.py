"""Coherent information of permutation-invariant codes via Schur-Weyl blocks.

The block decomposition of i.i.d. channel outputs on convex mixtures of
product states makes the coherent information computable in time polynomial
in the copy count: partitions index the blocks, unitary-group irrep matrices
give the block contents, and symmetric-group dimensions give multiplicities.
"""

from .ansatz import (AnsatzSpec, DecodeError, decode_bloch, decode_measurement,
                     decode_mtm, pair_ensemble, pair_kets,
                     pair_params_for_states, unitary_from_params)
from .channels import (CHANNEL_BUILDERS, KrausChannel, bb84, build_channel,
                       damping_dephasing, dephasing, dephrasure, depolarizing,
                       from_kraus, gadc, pauli, two_pauli)
from .closedform import (dampdeph_repcode_ci, hashing_bound, hashing_threshold,
                         pauli_antidegradable, pauli_repcode_ci,
                         ray_distribution, shannon)
from .codefile import (CodeFile, REFERENCE_CODES, nn_benchmark_state,
                       reference_code, reference_names)
from .coherent import (CIBreakdown, ci_brute, ci_mixed, ci_pure, ci_purified,
                       entropy, evaluate_ci, select_formula)
from .ensembles import CodeEnsemble
from .irreps import (IrrepMatrix, LieGenerators, gl2_irrep, gl2_matrix,
                     gl_irrep, gl_matrix, lie_generators, rep_builder)
from .optimize import (AngleProfile, NoBracketError, OptResult, SimplexPoint,
                       irrep_contributions, optimize_ci, scan_ray,
                       simplex_rays, simplex_scan, threshold)
from .partitions import (GTPattern, Partition, dim_gl_irrep, dim_sym_irrep,
                         gt_patterns, partitions_of)
from .pso import PsoResult, SwarmConfig, pso
from .schur import schur_poly
from .states import (bloch_to_dm, bloch_to_ket, dm, dm_to_bloch,
                     is_density_matrix, ket, random_density_matrix, random_ket)
from .verify import (max_gl_dimension, oracle_triangle, representation_checks,
                     schur_weyl_dimension_defect)

__version__ = "0.1.0"

__all__ = [
    "AngleProfile", "AnsatzSpec", "CHANNEL_BUILDERS", "CIBreakdown",
    "CodeEnsemble", "CodeFile", "DecodeError", "GTPattern", "IrrepMatrix",
    "KrausChannel", "LieGenerators", "NoBracketError", "OptResult",
    "Partition", "PsoResult", "REFERENCE_CODES", "SimplexPoint",
    "SwarmConfig", "bb84", "bloch_to_dm", "bloch_to_ket", "build_channel",
    "ci_brute", "ci_mixed", "ci_pure", "ci_purified", "dampdeph_repcode_ci",
    "damping_dephasing", "decode_bloch", "decode_measurement", "decode_mtm",
    "dephasing", "dephrasure", "depolarizing", "dim_gl_irrep",
    "dim_sym_irrep", "dm", "dm_to_bloch", "entropy", "evaluate_ci",
    "from_kraus", "gadc", "gl2_irrep", "gl2_matrix", "gl_irrep", "gl_matrix",
    "gt_patterns", "hashing_bound", "hashing_threshold",
    "irrep_contributions", "is_density_matrix", "ket", "lie_generators",
    "max_gl_dimension", "nn_benchmark_state", "optimize_ci",
    "oracle_triangle", "pair_ensemble", "pair_kets", "pair_params_for_states",
    "partitions_of", "pauli", "pauli_antidegradable", "pauli_repcode_ci",
    "pso", "random_density_matrix", "random_ket", "ray_distribution",
    "reference_code", "reference_names", "rep_builder",
    "representation_checks", "scan_ray", "schur_poly",
    "schur_weyl_dimension_defect", "select_formula", "shannon",
    "simplex_rays", "simplex_scan", "threshold", "two_pauli",
    "unitary_from_params",
]
