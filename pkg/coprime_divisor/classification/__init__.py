from .coprime import classify_spectrum, coprime_is_divisor
from .predicates import (
    alternating_predicate,
    dicyclic_predicate,
    dihedral_predicate,
    direct_product_predicate,
    four_prime_linear_forest,
    four_prime_predicate,
    obstruction_scan,
    primes_of,
    radicals_of,
    single_composite_predicate,
    symmetric_predicate,
    three_prime_predicate,
    two_prime_predicate,
)
from .sporadic import SPORADIC_TABLE, SporadicRecord, lookup_sporadic, sporadic_verdict
from .verify import (
    FAMILIES,
    Family,
    TheoremCase,
    TheoremReport,
    VerifyOptions,
    oracle_corpus,
    render_summary,
    run_family,
    verify_theorems,
    write_reports,
)

__all__ = [
    'FAMILIES',
    'SPORADIC_TABLE',
    'Family',
    'SporadicRecord',
    'TheoremCase',
    'TheoremReport',
    'VerifyOptions',
    'alternating_predicate',
    'classify_spectrum',
    'coprime_is_divisor',
    'dicyclic_predicate',
    'dihedral_predicate',
    'direct_product_predicate',
    'four_prime_linear_forest',
    'four_prime_predicate',
    'lookup_sporadic',
    'obstruction_scan',
    'oracle_corpus',
    'primes_of',
    'radicals_of',
    'render_summary',
    'run_family',
    'single_composite_predicate',
    'sporadic_verdict',
    'symmetric_predicate',
    'three_prime_predicate',
    'two_prime_predicate',
    'verify_theorems',
    'write_reports',
]
