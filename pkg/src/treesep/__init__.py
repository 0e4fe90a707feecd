"""Certified near-balanced edge separators for weighted max-degree-3 trees.

Cut k-1 edges of a vertex-weighted tree whose degrees never exceed 3 so
the k resulting components are provably balanced: the max-min builder
guarantees a floor on the lightest component, the min-max builder a cap
on the heaviest, and an exhaustive oracle provides exact optima to check
every construction against.
"""

from .errors import (BudgetExceededError, DegenerateIntervalError,
                     DegenerateScheduleError, InternalContradictionError,
                     InvalidTreeError, ParamError, ParseError, PeelStepError,
                     TreeSepError)
from .generators import (GenSpec, gen_named, gen_random_quasi_binary,
                         gen_tightness_family, parse_weight_law)
from .oracle import (OracleResult, evaluate_separator, exact_alpha_k,
                     exact_beta_k)
from .separators import (BoundCertificate, PeelStep, PreconditionCheck,
                         PreconditionReport, Separator, bisect,
                         bisect_precondition, default_gamma, eta_schedule,
                         max_min_precondition, max_min_separator,
                         min_max_precondition, min_max_separator,
                         suitable_interval)
from .split import (ParamReport, SplitParams, SplitResult, check_split_params,
                    eta_bounds, find_split_edge)
from .sweep import RunReport, SweepConfig, jsonable, run_sweep
from .tree import (ABS_TOL, Component, DegreeProfile, EdgeSideTable,
                   ValidationReport, WeightedTree, component_of,
                   degree_profile, edge_side_table, side_vertices, validate)
from .treeio import (parse_tree, parse_tree_json, parse_tree_text, read_tree,
                     serialize_tree, write_tree)

__version__ = "0.1.0"

__all__ = [
    "ABS_TOL", "BoundCertificate", "BudgetExceededError", "Component",
    "DegenerateIntervalError", "DegenerateScheduleError", "DegreeProfile",
    "EdgeSideTable", "GenSpec", "InternalContradictionError",
    "InvalidTreeError", "OracleResult", "ParamError", "ParamReport",
    "ParseError", "PeelStep", "PeelStepError", "PreconditionCheck",
    "PreconditionReport", "RunReport", "Separator", "SplitParams",
    "SplitResult", "SweepConfig", "TreeSepError", "ValidationReport",
    "WeightedTree", "bisect", "bisect_precondition", "check_split_params",
    "component_of", "default_gamma", "degree_profile", "edge_side_table",
    "eta_bounds", "eta_schedule", "evaluate_separator", "exact_alpha_k",
    "exact_beta_k", "find_split_edge", "gen_named",
    "gen_random_quasi_binary", "gen_tightness_family", "jsonable",
    "max_min_precondition", "max_min_separator", "min_max_precondition",
    "min_max_separator", "parse_tree", "parse_tree_json", "parse_tree_text",
    "parse_weight_law", "read_tree", "run_sweep", "serialize_tree",
    "side_vertices", "suitable_interval", "validate", "write_tree",
]
