"""laglab: hypergraph Lagrangians, colex families, and degree-square maxima."""

from .asymptotics import (ExpansionInput, check_nikiforov, claim_weighting,
                          eval_lag_expansion, expansion_input_for,
                          lower_bound_Fa, lower_bound_Hb, missing_edge_bound,
                          mu, nikiforov_bound, nikiforov_x, weight_one_bound)
from .degsq import (AK_COUNTEREXAMPLE, P2Report, p2, p2_max_bounded,
                    p2_max_unbounded, p2_pair_identity, p2_star_value,
                    star_graph, verify_ak_counterexample)
from .enumeration import enumerate_all_up_to_iso, enumerate_left_compressed
from .hypergraph import (RGraph, are_isomorphic, are_twins, canonical_form,
                         clique, colex_rank, colex_segment, colex_unrank,
                         complement, compress_edge, compress_family,
                         from_edges, from_text, is_left_compressed,
                         left_compress_fixpoint, lex_segment, link,
                         nonedge_degree, to_text)
from .search import (SearchReport, ff_verify, p2_link_check,
                     structure_check_nonedges)
from .solver import (LagrangianCertificate, SolverConfig, Weighting, ascend,
                     kkt_residuals, link_weight, maximize_lagrangian,
                     motzkin_straus_exact, twin_merge_weighting,
                     uniform_weighting, weight_of)

__version__ = "0.1.0"
