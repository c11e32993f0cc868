"""Randic incidence matrices of simple graphs, their energies, bound checks and
extremal tree searches."""
from ._kernels import BACKEND as KERNEL_BACKEND
from .bounds import (
    BoundReport,
    PreconditionError,
    check_bipartite_bound,
    check_clique_bound,
    check_edge_deletion,
    check_lower_bound,
    check_monotonicity,
    check_regular_line_identity,
    check_upper_bound,
)
from .energy import (
    EnergyResult,
    Variant,
    general_randic_incidence_energy,
    i_re,
    incidence_energy,
    randic_incidence_energy,
    randic_incidence_singular_values,
    randic_index,
)
from .extremal import explore_min_tree, rank_trees, scan_corpus
from .formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graph import (
    Graph,
    GraphError,
    delete_edges,
    from_edge_list,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_star,
    line_graph,
    non_isolated_partition,
    structural_queries,
)
from .spectra import (
    EigenSolverError,
    Spectrum,
    edge_gram,
    general_randic_incidence,
    incidence,
    normalized_signless_laplacian,
    randic_incidence,
    randic_matrix,
    signless_laplacian,
    sym_eigenvalues,
)
from .trees import enumerate_trees

__version__ = "0.1.0"
