"""Square coloring of subcubic plane graphs without 4- and 5-cycles.

Graph primitives, list coloring and choosability decisions, the reducible
configuration catalog, rotation-system embeddings, and the discharging audit.
"""

from .choosability import (
    BadAssignmentWitness, ChoosabilityResult, SearchStats, greedy_order_certificate,
    is_f_choosable, naive_f_choosable,
)
from .configurations import (
    Configuration, ReducibilityCertificate, StrategyReport, catalog, check_strategy,
    derive_residual_bounds, get_configuration, run_strategy, verify_reducible,
)
from .corpus import RunReport, run_corpus, sample_lists
from .discharging import AuditReport, ChargeLedger, apply_rules, audit, initial_charges, spacing_max_marks
from .embedding import PlaneEmbedding, build_embedding, face_stats, find_planar_embedding, trace_faces
from .enumeration import canonical_form, enumerate_subcubic
from .errors import *  # noqa: F401,F403
from .fileformat import GraphFile, parse_graph_file, read_graph_file, serialize_graph_file
from .graph import (
    Graph, articulation_points, bfs_distances, build_graph, complete_graph, cycle_graph,
    distance, enumerate_cycles, girth, girth_and_cycles, is_connected, path_graph, set_distance,
    square, triangles,
)
from .listcolor import check_proper, chromatic_number, greedy_extend, solve_list_coloring

__version__ = "0.1.0"
