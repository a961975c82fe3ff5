"""Brute-force oracles shared across the tests.

Deliberately written against plain Python sets and the edge list rather
than the package's bitmask internals, so they stay an independent check
path for the solver results.
"""

from itertools import combinations

import hypothesis.strategies as st

from superdom import Graph


def plain_neighbors(g: Graph):
    nbr = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        nbr[u].add(v)
        nbr[v].add(u)
    return nbr


def plain_is_dominating(g: Graph, s) -> bool:
    s = set(s)
    nbr = plain_neighbors(g)
    return all(u in s or nbr[u] & s for u in range(g.n))


def plain_is_super_dominating(g: Graph, s) -> bool:
    s = set(s)
    nbr = plain_neighbors(g)
    outside = set(range(g.n)) - s
    for u in outside:
        if not any(nbr[v] & outside == {u} for v in nbr[u] & s):
            return False
    return True


def plain_min_super_dom(g: Graph) -> int:
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            if plain_is_super_dominating(g, combo):
                return k
    return g.n


def plain_min_dom(g: Graph) -> int:
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            if plain_is_dominating(g, combo):
                return k
    raise AssertionError("V dominates itself")


def plain_lexmin_max_complement(g: Graph):
    """The solver's tie-break target: among valid complements of maximum
    size, the lexicographically smallest, scanned the slow way."""
    for k in range(g.n // 2, -1, -1):
        for combo in combinations(range(g.n), k):
            if plain_is_super_dominating(g, set(range(g.n)) - set(combo)):
                return list(combo)
    return []


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    else:
        edges = []
    return Graph(n, edges)
