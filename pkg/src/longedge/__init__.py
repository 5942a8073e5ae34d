"""Exact node counts and universal node polynomials for toric surfaces.

The library computes Severi degrees of polarized toric surfaces attached to
h-transverse lattice polygons, along with the universal linear coefficients
and quasimodular power series identities that govern them.  All arithmetic
is exact (integers and fractions); no floats appear anywhere.
"""

from .graphs import (
    Edge,
    LongEdgeGraph,
    Template,
    conjugate,
    enumerate_graphs,
    enumerate_templates,
)
from .orderings import (
    Allowability,
    BetaSeq,
    LinearForm,
    allowability,
    beta_from_divergence,
    fit_linear_phi,
    is_semiallowable,
    p_beta,
    p_beta_strict,
    phi_beta,
    phi_beta_strict,
)
from .coeffs import (
    CoeffTable,
    a_series,
    b_coeffs,
    beta_stats,
    cor,
    cor_doubleprime,
    diffq,
    q_beta_delta,
    q_delta_linearized,
    template_coefficients,
    template_data,
)
from .series import (
    RatSeries,
    b1_b2,
    check_g_identity,
    d2g2,
    dg2,
    disc,
    g2,
    gyz_check,
    gyz_sides,
    log_exp_coeffs,
    partition_series,
    partition_series_in_power,
)
from .polygon import (
    HTPolygon,
    InternalVertex,
    PolygonStats,
    Reordering,
    ToricInvariants,
    VLocalPiece,
    beta_of,
    from_directions,
    from_vertices,
    internal_vertices,
    polygon_from_dict,
    polygon_stats,
    polygon_to_dict,
    recombine_vlocal,
    reorderings,
    reversal_cogenus,
    toric_invariants,
    vlocal_decompose,
)
from .severi import (
    METHODS,
    NodeCountReport,
    UniversalPolynomial,
    n_bruteforce,
    n_from_q,
    q_from_n,
    q_geometric,
    q_polygon,
    report,
    t_delta,
    that_delta,
)

__version__ = "0.1.0"
