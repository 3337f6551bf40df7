"""n-point distance toolkit.

Distances on tuples of n points (inner Chebyshev/Euclidean balls, spanning
and Steiner tree lengths, counting distances, enclosing-ball functionals),
the simplex inequality that generalizes the triangle inequality to them,
and a deterministic laboratory for checking the inequality and estimating
best constants.
"""

from .classic import (
    EnclosingBall,
    cardinality_distance,
    enclosing_ball,
    enclosing_ball_diameter_distance,
    enclosing_ball_volume_distance,
    line_count_distance,
    max_gap_distance,
)
from .constructions import CONSTRUCTION_NAMES, construct
from .errors import SimplexViolationError, UnsupportedScaleError, UsageError
from .geometry import (
    CHEBYSHEV,
    EUCLIDEAN,
    TAU_GEOM,
    Ball,
    PointSet,
    as_point,
    bisect_root,
    chebyshev_T,
    classify_triangle,
    collinear,
    distance,
    pairwise_distances,
)
from .inner_balls import (
    TAU_IN,
    InnerBallResult,
    euclidean_pair_feasible,
    inner_chebyshev_ball_distance,
    inner_euclidean_ball_distance,
    inner_euclidean_ball_distance_3,
)
from .kinds import RHO, kind_names, proven_bounds
from .lab import (
    BestConstantReport,
    CheckReport,
    Configuration,
    LambdaBound,
    RatioWitness,
    check_simplex_inequality,
    estimate_best_constant,
    lambda_bound_table,
    simplex_ratio,
    simplex_sum,
    solve_lambda_n,
)
from .trees import (
    SteinerResult,
    Tree,
    fermat_point,
    mst_distance,
    mst_distance_bruteforce,
    steiner3_distance,
    steiner_distance,
)

__version__ = "1.0.0"

__all__ = [
    "Ball",
    "BestConstantReport",
    "CHEBYSHEV",
    "CONSTRUCTION_NAMES",
    "CheckReport",
    "Configuration",
    "EUCLIDEAN",
    "EnclosingBall",
    "InnerBallResult",
    "LambdaBound",
    "PointSet",
    "RHO",
    "RatioWitness",
    "SimplexViolationError",
    "SteinerResult",
    "TAU_GEOM",
    "TAU_IN",
    "Tree",
    "UnsupportedScaleError",
    "UsageError",
    "as_point",
    "bisect_root",
    "cardinality_distance",
    "chebyshev_T",
    "check_simplex_inequality",
    "classify_triangle",
    "collinear",
    "construct",
    "distance",
    "enclosing_ball",
    "enclosing_ball_diameter_distance",
    "enclosing_ball_volume_distance",
    "estimate_best_constant",
    "euclidean_pair_feasible",
    "fermat_point",
    "inner_chebyshev_ball_distance",
    "inner_euclidean_ball_distance",
    "inner_euclidean_ball_distance_3",
    "kind_names",
    "lambda_bound_table",
    "line_count_distance",
    "max_gap_distance",
    "mst_distance",
    "mst_distance_bruteforce",
    "pairwise_distances",
    "proven_bounds",
    "simplex_ratio",
    "simplex_sum",
    "solve_lambda_n",
    "steiner3_distance",
    "steiner_distance",
]
