"""Maximum numbers of K_t in graphs with a fixed number of edges and bounded
maximum degree: values, extremal constructions, recognition, and an
exhaustive small-scale oracle."""

from .binom import (binom_exact, binom_real, degree_sum_bound, easy_convex_check,
                    g_value, max_convex_sum_oracle, property_grids,
                    slope_inequality_check)
from .cliques import (CliqueProfile, VertexDiagnostics, clique_number, clique_profile,
                      count_kt, count_kt_naive, induced_k12_count, vertex_diagnostics)
from .colex import (ColexDecomposition, build_colex, colex_decompose, colex_kt,
                    colex_pair_unrank, kk_bound_real)
from .extremal import (EdgeDecomposition, ExtremalFamilySpec, ExtremalityVerdict,
                       FamilyCase, build_extremal, decompose, extremal_value,
                       family_spec, is_extremal, is_total_extremal, total_extremal_graphs,
                       total_extremal_value, vertex_extremal_value, vertex_total_value)
from .graph import (CanonicalForm, Graph, GraphError, canonical_form, complete_graph,
                    components, degree_sequence, disjoint_union, from_edge_list,
                    max_degree, parse_graph6, to_graph6)
from .search import (EnumerationSpec, VerificationReport, brute_max, enumerate_graphs,
                     verify_kk, verify_main, verify_total)

__version__ = "0.1.0"
