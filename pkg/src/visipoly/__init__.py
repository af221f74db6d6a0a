"""Exact visibility polynomials for small graphs and the wheel/helm/friendship/shell/bow families."""

from .graph import (
    MAX_VERTICES,
    FamilySpec,
    Graph,
    GraphError,
    all_pairs_distances,
    build_corona,
    build_family,
    build_join,
    delete_edge,
)
from .polynomial import (
    Polynomial,
    binomial_expand,
    poly_add,
    poly_eval_int,
    poly_mul,
)
from .visibility import (
    EnumerationCapError,
    is_mutual_visibility_set,
    is_pair_visible,
    mu,
    visibility_polynomial_bruteforce,
)
from .separators import (
    CqFamily,
    is_cq_visible,
    is_disjoint_visible,
    is_set_separator,
    is_shortest_separator,
    maximal_absolute_cq_visible,
    path_cut,
)
from .closed_forms import (
    ClosedFormResult,
    UnsupportedClosedForm,
    bow_polynomial,
    closed_form_dispatch,
    friendship_polynomial,
    friendship_predicate,
    helm_polynomial,
    lemma1_predicate,
    shell_polynomial,
    shell_predicate,
    wheel_polynomial,
)

__version__ = "0.1.0"
