"""Minimum-weight point separation through the Z2 homology cover."""
from .arrangement import (build_arrangement, build_auxiliary_graph, dual_path,
                          face_connectivity_oracle, plane_graph, reference_cut,
                          solve_arrangement, solve_arrangement_instance)
from .cover import (CoverGraph, build_cover_graph, expand_auxiliary,
                    strip_individual_separators)
from .errors import StsepError
from .fastpaths import (biclique_cover_axis_aligned, biclique_cover_generic,
                        biclique_to_graph, si_build, si_query,
                        slice_at_reference, solve_unweighted_fast,
                        solve_weighted_biclique)
from .geometry import (Circle, Disk, Instance, Obstacle, P, Point, Polyline,
                       Segment, crossing_parity, obstacles_intersect,
                       pair_parity_set, validate_instance)
from .reductions import (DirectedGraph, generate_reduction, min_weight_k_walk,
                         verify_reduction)
from .result import SeparatorResult
from .solvers import (brute_force_solve, solve_unweighted_bfs,
                      solve_unweighted_seidel, solve_weighted)

__version__ = "0.1.0"
