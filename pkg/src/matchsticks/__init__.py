"""matchsticks: construct, validate, and analyze matchstick graphs.

A matchstick graph is a plane graph whose edges are noncrossing unit-length
straight segments. The package provides generators for the extremal
constructions, exact counting identities over the face structure, rhombus
chain decomposition, the triangle/fat-rhombus reduction pipeline, the
monotone-path search for irregular edges, and a small extremal search
oracle, all behind a single CLI.
"""

from .errors import (AmbiguousAngles, AmbiguousHull, BudgetExceeded,
                     ConstructionError, DegenerateSegment, Disconnected,
                     GraphFormatError, InfeasibleRadius, MatchstickError,
                     MissingRadius, NonpositiveRadius, NotARhombus,
                     NotMonotone, NotReduced, UnknownEdge, Unreachable)
from .geometry import (DEFAULT_TOL, Point, SegmentRelation, TolerancePolicy,
                       direction_angle, rhombus_small_angle, segment_relation,
                       unit_distance)
from .graph import (DiskSpec, MatchstickGraph, ValidationReport,
                    connected_components, degree_profile, dumps_graph,
                    largest_component, load_graph, loads_graph, remove_edges,
                    save_graph, validate)
from .faces import (FaceClass, FaceDecomposition, FaceKind, classify_faces,
                    enumerate_faces, fat_threshold, rotation_system)
from .generators import (DiskLatticeParams, gen_disk_lattice, gen_grid,
                         gen_rhombus_strip, gen_triangle_free,
                         gen_triangle_free_parts, gen_zonotope)
from .analysis import (AnalysisReport, RhombusChain, analyze, boundary_excess,
                       chain_inequalities, chain_overlap_check,
                       conjectured_max_edges, construction_lower_bound,
                       counting_identities, disk_edge_bounds,
                       irregular_edge_count, max_edges_upper_bound,
                       rhombus_chains)
from .reduction import (ReductionTrace, reduce_graph, reduced_ok,
                        strip_fat_rhombi, strip_triangles)
from .pathfinder import (ExtendPathTrace, MonotonePath, NeighborhoodGraph,
                         build_neighborhood, convexity_number, edge_distance,
                         extend_path, find_hat, irregular_distances,
                         is_monotone, monotone_path, nearest_irregular)
from .search import (CandidateFamily, SearchResult, conjecture_probe,
                     enumerate_zonotope_tilings, max_edges_over_family)
from .render import RenderStyle, render_svg

__version__ = "0.1.0"
