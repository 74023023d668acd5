"""Exact order-theoretic computation in totally ordered semigroups.

Enumerates the set of all finite products over a well-ordered generator set
in ascending order, lists the finitely many string representatives of any
product, and applies the same machinery to multiply and invert generalized
power series with well-ordered exponent support.
"""

from ordsemi.archimedean import ArchClassHandle, class_cmp, class_of, max_factor, same_class
from ordsemi.oracle import SizeCapExceeded, brute_force_fiber, brute_force_products
from ordsemi.products import (
    Budget,
    Enumeration,
    Fiber,
    ProductStream,
    UnboundedLengthError,
    UnsupportedPresentationError,
    eval_string,
    fiber,
    k_largest_sums,
    k_smallest_products,
    length_bound,
    products_up_to,
)
from ordsemi.semigroups import (
    AdditiveNaturals,
    AdditiveRationals,
    AxiomReport,
    BrokenMaxNaturals,
    InstanceError,
    IntegersGroup,
    LexVectors,
    LexVectorsGroup,
    OrderedGroupInstance,
    RationalsGroup,
    SemigroupInstance,
    ShortlexWords,
    check_axioms,
    instance_from_descriptor,
)
from ordsemi.series import (
    HahnSeries,
    SeriesError,
    convolution_pairs,
    format_series,
    geometric_inverse,
    parse_series,
)
from ordsemi.verify import (
    CheckResult,
    VerificationReport,
    certified_region,
    check_strict_ascent,
    verify_lemma_suite,
)
from ordsemi.wosets import (
    AscStream,
    FiniteSorted,
    IndexSubsequence,
    PullBudgetExceeded,
    StreamOrderError,
    WoSet,
    extract_increasing_subsequence,
    make_finite,
    merge,
    woset_from_descriptor,
)

__version__ = "0.1.0"

__all__ = [
    "AdditiveNaturals",
    "AdditiveRationals",
    "ArchClassHandle",
    "AscStream",
    "AxiomReport",
    "BrokenMaxNaturals",
    "Budget",
    "CheckResult",
    "Enumeration",
    "Fiber",
    "FiniteSorted",
    "HahnSeries",
    "IndexSubsequence",
    "InstanceError",
    "IntegersGroup",
    "LexVectors",
    "LexVectorsGroup",
    "OrderedGroupInstance",
    "ProductStream",
    "PullBudgetExceeded",
    "RationalsGroup",
    "SemigroupInstance",
    "SeriesError",
    "ShortlexWords",
    "SizeCapExceeded",
    "StreamOrderError",
    "UnboundedLengthError",
    "UnsupportedPresentationError",
    "VerificationReport",
    "WoSet",
    "brute_force_fiber",
    "brute_force_products",
    "certified_region",
    "check_axioms",
    "check_strict_ascent",
    "class_cmp",
    "class_of",
    "convolution_pairs",
    "eval_string",
    "fiber",
    "format_series",
    "geometric_inverse",
    "instance_from_descriptor",
    "k_largest_sums",
    "k_smallest_products",
    "length_bound",
    "make_finite",
    "max_factor",
    "merge",
    "parse_series",
    "products_up_to",
    "same_class",
    "verify_lemma_suite",
    "woset_from_descriptor",
    "__version__",
]
