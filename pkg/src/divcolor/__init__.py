"""Exact and Monte-Carlo laboratory for divide-and-color models.

A divide-and-color model starts from a random equivalence relation (RER) — a
probability law on partitions of a site set — and colors each class 1 with
probability p, independently across classes.  This package computes with such
models exactly (rational arithmetic) at small n and by seeded simulation at
desk scale.
"""

from .partitions import (
    IntegerPartition,
    PartitionIndex,
    SetPartition,
    SizeLimitError,
    apply_permutation,
    bell_number,
    enumerate_integer_partitions,
    enumerate_set_partitions,
    induced_partition,
    integer_shape,
)
from .measures import (
    ColorMeasure,
    ExchRERMeasure,
    NotColorProcessError,
    OnesLaw,
    RERMeasure,
    SignedVector,
    all_p_equal,
    apply_phi,
    cp_membership,
    dominates,
    extend_S,
    extend_T,
    fingerprint_class_count_pgf,
    fingerprint_class_prob,
    fingerprint_size_mean,
    fkg_lattice_check,
    is_unique,
    kernel,
    phi_exch,
    phi_matrix,
    positive_association_check,
    product_measure,
    represent_n2,
    represent_n3_half,
)
from .witnesses import witness_catalog
from .paintbox import (
    AtomicXi,
    PaintBox,
    PaintboxMixture,
    SimpleMixture,
    marginal_color_measure,
    mainp12_decompose,
    paintbox_rer_on_n,
    split_identity_check,
    uniqueness_audit,
    unprop_witness,
    xi_distribution,
)
from .thresholds import (
    dyadic_paintbox,
    gaussian_threshold_sampler,
    gaussian_xi_cdf,
    gaussian_xi_sampler,
    stable_threshold_sampler,
)
from .domination import (
    DominationReport,
    TailLaw,
    bounded_cluster_bound,
    cluster_count_inequality_check,
    cluster_size_inequality_check,
    d_markov,
    d_markov_limit,
    d_mixture,
    d_paintbox,
    d_paintbox_limit,
    finite_window_threshold,
    nodomination_block_rer,
)
from .chains import (
    EdgeWindowLaw,
    IsingEdgeSpec,
    MarkovSpec,
    RunConditionalReport,
    color_to_markov,
    differinf_window_measures,
    field_shift_check,
    iid_edge_window_rer,
    ising_edge_window_law,
    markov_to_color,
    markov_window_law,
    run_conditional_sequence,
)
from .graphs import (
    CouplingReport,
    EstimatorReport,
    FiniteGraph,
    PartitionSample,
    cluster_density_estimator,
    coalescing_rw_rer,
    color_sample,
    coupling_check_fk_ising,
    coupling_check_fuzzy_potts,
    ergodicity_diagnostic,
    fk_exact_rer,
    fk_glauber_sampler,
    fuzzy_potts_exact_law,
    ising_exact_law,
    pair_correlation_estimator,
    range_estimator,
    rwrs_rer,
)
from .rng import stream
from .verify import run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
