import random
from fractions import Fraction
from itertools import combinations, permutations, product

from house_subsidy import Instance

INTRO = ((200, 100), (200, 100))
EXAMPLE_1 = ((200, 200), (200, 100))
TRUTHFUL = ((25, 75), (0, 100))
MISREPORT = ((20, 80), (0, 100))


def random_instance(rng, n, m, rational=False, max_util=10):
    if rational:
        draw = lambda: Fraction(rng.randint(0, max_util * 4), rng.randint(1, 4))
    else:
        draw = lambda: Fraction(rng.randint(0, max_util))
    return Instance(tuple(tuple(draw() for _ in range(m)) for _ in range(n)))


def envy_free_by_definition(u, allocation, subsidy):
    n = len(allocation)
    return all(
        u[i][allocation[i]] + subsidy[i] >= u[i][allocation[k]] + subsidy[k]
        for i in range(n)
        for k in range(n)
    )


def best_permuted_welfare(u, allocation):
    """Largest welfare over all reassignments of the allocated houses."""
    n = len(allocation)
    return max(sum(u[i][allocation[p[i]]] for i in range(n)) for p in permutations(range(n)))


def grid_min_total(u, hi):
    """Smallest total over integer subsidy vectors in [0, hi]^n, all allocations.

    Only meaningful for integer utilities, where optimal subsidies are
    integers; used to freeze expected values independently of the solvers.
    """
    n, m = len(u), len(u[0])
    best = None
    for a in permutations(range(m), n):
        for s in product(range(hi + 1), repeat=n):
            if envy_free_by_definition(u, a, s):
                if best is None or sum(s) < best:
                    best = sum(s)
    return best


def all_covers(vertex_count, edges, max_size):
    """Every vertex cover of size <= max_size (exhaustive, tiny graphs only)."""
    out = []
    for size in range(max_size + 1):
        for c in combinations(range(vertex_count), size):
            if all(x in c or y in c for x, y in edges):
                out.append(frozenset(c))
    return out
