"""Sparse multigraphs, pebble games and decompositions into maps and trees."""

from ._jit import USING_NUMBA
from .augment import (AnyAdditionReport, AugmentationResult, augment_some,
                      augment_some_then_any, predict_any, verify_any_exhaustive,
                      verify_any_sampled)
from .errors import (BudgetExceededError, CountMismatchError, InvalidParametersError,
                     InvalidVertexError, NotSparseError, NotTightError, OracleViolationError,
                     PreconditionError, SparsityError)
from .mapdecomp import (IncidenceBipartite, MapDecomposition, build_incidence_bipartite,
                        decompose_via_matching, decompose_via_orientation,
                        maximum_bipartite_matching, verify_decomposition)
from .matroid import (TreesAndMapsPartition, bicycle_independent, decompose_trees_and_maps,
                      graphic_independent, matroid_union_partition, truncation_independent,
                      union_bicycle_independent, verify_trees_and_maps)
from .multigraph import Edge, MultiGraph, ambient_complement, spanned_edges, vertex_span
from .pebble import Classification, PebbleGameOutcome, PebbleState, run

__version__ = "0.1.0"
