"""duadic: MDS self-dual codes from duadic cyclic and negacyclic codes.

The package builds five families of Euclidean and Hermitian self-dual
codes over finite fields and independently re-verifies every claimed
property: self-duality through two separate routes (defining-set
complement and matrix kernel), exact minimum distances by enumeration
where feasible, and the arithmetic hypotheses behind each construction.

Layers
------
``fields``          GF(p^m) arithmetic on canonical moduli
``cosets``          cyclotomic cosets, multipliers, splittings, dual sets
``poly``            polynomials, x^n -/+ 1 factorisation, generator polys
``codes``           linear codes, Gram/kernel duality oracles, distances
``constructions``   the five family builders and their verification reports
``tables``          the bundled published-result tables
``verify``          table-driven verification and parameter search
``cli``             the ``duadic`` command-line tool
"""

from .codes import (
    DEFAULT_BUDGET,
    DistanceResult,
    LinearCode,
    code_from_defining_set,
    dual_code,
    extend_double,
    extend_single,
    gram_matrix,
    is_mds,
    is_self_dual,
    min_distance,
)
from .constructions import (
    FAMILIES,
    GammaSolution,
    OrderFacts,
    VerificationReport,
    build_cyclic_euclidean,
    build_cyclic_hermitian,
    build_nega_allodd,
    build_nega_centered,
    build_nega_extended,
    mds_generator_code,
    order_facts,
    predict_gamma_existence,
    solve_gamma,
)
from .cosets import (
    DefiningSet,
    build_cosets,
    euclidean_dual_set,
    hermitian_dual_set,
)
from .errors import DuadicError
from .fields import FieldElement, FieldSpec, field_from_order, make_field
from .poly import Poly, factor_xn_minus_a, generator_poly
from .tables import TABLE_IDS, TableEntry, load_tables, parse_prime_power
from .verify import search_family, summarize, verify_entry, verify_table

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # fields
    "FieldSpec",
    "FieldElement",
    "make_field",
    "field_from_order",
    # cosets
    "build_cosets",
    "DefiningSet",
    "euclidean_dual_set",
    "hermitian_dual_set",
    # polynomials
    "Poly",
    "factor_xn_minus_a",
    "generator_poly",
    # codes
    "LinearCode",
    "DistanceResult",
    "DEFAULT_BUDGET",
    "code_from_defining_set",
    "dual_code",
    "extend_single",
    "extend_double",
    "gram_matrix",
    "is_self_dual",
    "is_mds",
    "min_distance",
    # constructions
    "FAMILIES",
    "GammaSolution",
    "OrderFacts",
    "VerificationReport",
    "solve_gamma",
    "predict_gamma_existence",
    "order_facts",
    "mds_generator_code",
    "build_cyclic_euclidean",
    "build_cyclic_hermitian",
    "build_nega_centered",
    "build_nega_allodd",
    "build_nega_extended",
    # tables and verification
    "TABLE_IDS",
    "TableEntry",
    "load_tables",
    "parse_prime_power",
    "verify_entry",
    "verify_table",
    "summarize",
    "search_family",
    # errors
    "DuadicError",
]
