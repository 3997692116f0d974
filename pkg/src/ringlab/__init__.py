"""Certified ring-theoretic computations over concrete rings.

Euclidean-domain kernels (gcd certificates, coprime factorization,
stable-range witnesses, canonical diagonal reduction of matrices) plus
decision procedures for range, cleanness, and ideal properties of small
finite rings, with a verification harness tying them together.
"""

from .clean import (
    AdequateDecomposition,
    CleanDecomposition,
    Theorem5Witness,
    adequate_decomposition,
    clean_decompose,
    has_neat_range_1,
    is_clean,
    is_D_adequate_element,
    is_exchange,
    is_neat_element,
    theorem5_idempotent,
)
from .errors import (
    ConfigError,
    DomainError,
    NoDecomposition,
    NotClean,
    NotCoprime,
    ParseError,
    PreconditionError,
    RingLabError,
    RingMismatch,
    UnsupportedRing,
    ZeroElement,
)
from .euclid import (
    BezoutCertificate,
    Lemma1Factorization,
    extended_gcd,
    lemma1_factor,
)
from .harness import (
    CatalogEntry,
    TheoremVerdict,
    default_catalog,
    load_catalog,
    run_all,
    run_suite,
)
from .matrices import (
    ContentIdeal,
    Mat,
    ReductionCertificate,
    check_total_divisor,
    content_ideal,
    hermite_reduce_column,
    hermite_reduce_pair,
    smith_normal_form,
    theorem12_reduce,
    unimodular_completion,
)
from .ranges import (
    RangeWitness,
    asr1_witness,
    is_asr1_element,
    is_asr1_ring,
    is_asr1_two_sided,
    is_bezout,
    is_diadem,
    is_dyadic_range_1,
    is_L_ring,
    is_stable_range_1,
    is_stable_range_2,
    sr2_witness,
    theorem8_agreement,
)
from .report import PropertyReport
from .rings import (
    CoboundaryResult,
    Elem,
    EuclideanDomain,
    FiniteRing,
    IdealClosure,
    IntegerRing,
    MatrixRing,
    PolyQuotientRing,
    PolynomialRing,
    ProductRing,
    ResidueRing,
    Ring,
    UpperTriangularRing,
    Z,
    coboundary,
    has_D_property,
    ideal_closure,
    idempotents,
    jacobson_radical,
    parse_ring_spec,
    quotient_ring,
    units,
)

__version__ = "0.1.0"
