import itertools
from collections.abc import Iterable

import networkx as nx

from coprime_divisor.errors import PreconditionError
from coprime_divisor.groups import prime_factors, radical
from coprime_divisor.recognition import ForbiddenConfiguration

FOUR_PRIMES = 4


def radicals_of(orders: Iterable[int]) -> frozenset[int]:
    """Radicals of the orders greater than 1."""
    return frozenset(radical(m) for m in orders if m > 1)


def primes_of(orders: Iterable[int]) -> frozenset[int]:
    return frozenset(p for m in orders for p in prime_factors(m))


def _composites(radicals: Iterable[int]) -> list[int]:
    return sorted(r for r in radicals if len(prime_factors(r)) > 1)


def two_prime_predicate(pi: Iterable[int]) -> bool:
    """Groups whose order has at most two prime divisors always have a divisor coprime graph.

    Raises:
        PreconditionError: If more than two primes are given.
    """
    primes = frozenset(pi)
    if len(primes) > 2:
        raise PreconditionError('two_prime_predicate', f'expected at most two primes, got {sorted(primes)}')
    return True


def three_prime_predicate(pi_e: Iterable[int]) -> bool:
    """For ``pi = {p, q, r}``: divisor graph unless ``pq``, ``pr`` and ``qr`` all occur as radicals.

    An order with three distinct prime factors rules the divisor property out on its own.

    Raises:
        PreconditionError: Unless the orders involve exactly three primes.
    """
    radicals = radicals_of(pi_e)
    primes = primes_of(radicals)
    if len(primes) != 3:
        raise PreconditionError('three_prime_predicate', f'expected exactly three primes, got {sorted(primes)}')
    if any(len(prime_factors(r)) >= 3 for r in radicals):
        return False
    p, q, r = sorted(primes)
    return not {p * q, p * r, q * r} <= radicals


def four_prime_predicate(radicals: Iterable[int]) -> bool:
    """For four primes: divisor graph iff the composites fit ``{pq, pr, rs}`` under some naming of the primes.

    Every one of the 24 assignments of the primes to ``p, q, r, s`` is tried.

    Raises:
        PreconditionError: Unless the radicals involve exactly four primes.
    """
    kept = frozenset(radicals)
    primes = sorted(primes_of(kept))
    if len(primes) != FOUR_PRIMES:
        raise PreconditionError('four_prime_predicate', f'expected exactly four primes, got {primes}')
    composites = set(_composites(kept))
    if any(len(prime_factors(c)) >= 3 for c in composites):
        return False
    for p, q, r, s in itertools.permutations(primes):
        if composites <= {p * q, p * r, r * s}:
            return True
    return False


def four_prime_linear_forest(radicals: Iterable[int]) -> bool:
    """The four-prime condition restated on the graph whose edges are the composite radicals.

    The composites must all be products of two primes, and that graph on the four
    primes must have no triangle, no 4-cycle and no vertex of degree 3. On four
    vertices the only cycles are triangles and 4-cycles, so this says the graph is
    a forest of paths.
    """
    kept = frozenset(radicals)
    pair_graph = nx.Graph()
    pair_graph.add_nodes_from(primes_of(kept))
    for composite in _composites(kept):
        factors = prime_factors(composite)
        if len(factors) != 2:
            return False
        pair_graph.add_edge(*factors)
    degrees = dict(pair_graph.degree)  # pyright: ignore[reportUnknownArgumentType]
    return nx.is_forest(pair_graph) and all(d <= 2 for d in degrees.values())


def obstruction_scan(pi_e: Iterable[int]) -> ForbiddenConfiguration | None:
    """Look for an element-order pattern that forbids a divisor coprime graph.

    Checked in order: an order whose radical has three or more primes; three primes
    with ``pq, pr, qr`` all present; four primes carrying the 4-cycle
    ``pq, pr, rs, qs`` or the star ``pq, pr, ps``.

    Returns:
        The first pattern found, or None.
    """
    radicals = radicals_of(pi_e)
    for r in sorted(radicals):
        if len(factors := prime_factors(r)) >= 3:
            return ForbiddenConfiguration(pattern='pqr-radical', primes=factors, radicals=(r,))

    primes = sorted(primes_of(radicals))
    for p, q, r in itertools.combinations(primes, 3):
        if {p * q, p * r, q * r} <= radicals:
            return ForbiddenConfiguration(pattern='triangle', primes=(p, q, r), radicals=(p * q, p * r, q * r))

    for combination in itertools.combinations(primes, FOUR_PRIMES):
        for p, q, r, s in itertools.permutations(combination):
            cycle = (p * q, p * r, r * s, q * s)
            if set(cycle) <= radicals:
                return ForbiddenConfiguration(pattern='four-cycle', primes=(p, q, r, s), radicals=cycle)
            star = (p * q, p * r, p * s)
            if set(star) <= radicals:
                return ForbiddenConfiguration(pattern='star', primes=(p, q, r, s), radicals=star)
    return None


def single_composite_predicate(radicals: Iterable[int]) -> bool:
    """Radicals made of ``n >= 3`` primes plus one product of two of them always give a divisor graph.

    Raises:
        PreconditionError: If the radicals do not have that shape.
    """
    kept = frozenset(radicals)
    primes = {r for r in kept if len(prime_factors(r)) == 1}
    composites = _composites(kept)
    if (
        len(primes) < 3
        or len(composites) != 1
        or len(prime_factors(composites[0])) != 2
        or not set(prime_factors(composites[0])) <= primes
    ):
        raise PreconditionError(
            'single_composite_predicate',
            f'expected at least three primes and one product of two of them, got {sorted(kept)}',
        )
    return True


def dihedral_predicate(n: int) -> bool:
    """``D_2n`` has a divisor coprime graph iff ``n`` has at most two prime divisors.

    Raises:
        PreconditionError: If ``n < 3``.
    """
    if n < 3:
        raise PreconditionError('dihedral_predicate', f'n must be at least 3, got {n}')
    return len(prime_factors(n)) <= 2


def dicyclic_predicate(t: int) -> bool:
    """``Q_4t`` has a divisor coprime graph iff ``2t`` has at most two prime divisors.

    Raises:
        PreconditionError: If ``t < 2``.
    """
    if t < 2:
        raise PreconditionError('dicyclic_predicate', f't must be at least 2, got {t}')
    return len(prime_factors(2 * t)) <= 2


def symmetric_predicate(n: int) -> bool:
    """``S_n`` has a divisor coprime graph iff ``n <= 7``."""
    return n <= 7


def alternating_predicate(n: int) -> bool:
    """``A_n`` has a divisor coprime graph iff ``n <= 8``."""
    return n <= 8


def _prime_power_case(pi_e_h: frozenset[int], pi_e_k: frozenset[int]) -> bool:
    primes_h = primes_of(pi_e_h)
    primes_k = primes_of(pi_e_k)
    if len(primes_h) != 1 or len(primes_h | primes_k) > 3:
        return False
    others = primes_k - primes_h
    if len(others) < 2:
        return True
    q, r = sorted(others)
    return all(k % (q * r) for k in radicals_of(pi_e_k))


def direct_product_predicate(pi_e_h: Iterable[int], pi_e_k: Iterable[int]) -> bool:
    """Whether ``H x K`` has a divisor coprime graph, from the element orders of the factors.

    True iff both factors involve the same two primes, or one factor is a
    ``p``-group, the other involves no primes beyond ``p, q, r`` and has no element
    whose order is divisible by ``qr``.

    Raises:
        PreconditionError: If either factor is trivial.
    """
    h = frozenset(pi_e_h) - {1}
    k = frozenset(pi_e_k) - {1}
    if not h or not k:
        raise PreconditionError('direct_product_predicate', 'both factors must be non-trivial')
    primes_h = primes_of(h)
    if primes_h == primes_of(k) and len(primes_h) == 2:
        return True
    return _prime_power_case(h, k) or _prime_power_case(k, h)
