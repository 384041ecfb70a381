"""Total coloring constructions, verification and exact oracles for
circulant, Cayley, mock threshold and odd graphs."""

from .graphs import (Graph, MockThresholdScript, MockThresholdStep,
                     build_cayley_from_table, build_circulant, build_kneser,
                     build_mock_threshold, build_odd_graph,
                     build_power_of_cycle, build_unitary_cayley,
                     cyclic_group_table, euler_phi, kneser_vertex_labels,
                     order_two_element, recognize_mock_threshold,
                     smallest_prime_factor)
from .latin import (LatinSquare, anti_circulant_square, is_anti_circulant,
                    is_commutative, is_idempotent, is_latin)
from .coloring import (ColorMatrix, TotalColoring, VerificationReport,
                       bipartite_edge_color, complete_total,
                       coloring_to_matrix, edge_color_plus_one,
                       hamiltonian_split, matrix_to_coloring, missing_colors,
                       one_factorize, verify)
from .constructions import (BudgetError, ConstructionError,
                            ConstructionResult, cayley_extend,
                            mock_threshold_total, odd_graph_total,
                            poc_any_odd, poc_augment, poc_base, poc_block,
                            poc_grow, poc_shrink, unitary_total)
from .oracle import (OracleOutcome, chromatic_index_exact, conjecture_sweep,
                     find_total_coloring, sweep_to_csv, sweep_to_json,
                     total_chromatic_exact)

__version__ = "0.1.0"
