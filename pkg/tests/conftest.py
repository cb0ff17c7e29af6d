"""Shared brute-force oracles and corpus fixtures.

Every oracle here re-derives its value from first principles with plain
Python sets and exhaustive enumeration; none of them call the solver
code paths they are used to check.
"""

from itertools import combinations, permutations, product

import pytest

from widthlab import Graph
from widthlab.corpus import chordal_corpus, named_families, random_corpus, tree_corpus


def _components(adj, vertices):
    left = set(vertices)
    out = []
    while left:
        start = min(left)
        comp = set()
        stack = [start]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend((adj[x] & left) - comp)
        out.append(comp)
        left -= comp
    return out


def _balanced(adj, universe, x, strict):
    survivors = set(universe) - set(x)
    biggest = max((len(c) for c in _components(adj, survivors)), default=0)
    if strict:
        return 2 * biggest <= len(survivors)
    return 2 * biggest <= len(survivors) + (len(survivors) % 2)


def _adj_sets(g: Graph):
    return [set(g.adj[v]) for v in range(g.n)]


def oracle_min_balanced_separator(g: Graph, strict=False) -> int:
    adj = _adj_sets(g)
    universe = range(g.n)
    for size in range(g.n + 1):
        for x in combinations(universe, size):
            if _balanced(adj, universe, x, strict):
                return size
    raise AssertionError("unreachable: removing everything always balances")


def oracle_separator_number(g: Graph, strict=False) -> int:
    adj = _adj_sets(g)
    worst = 0
    for size in range(g.n, -1, -1):
        for q in combinations(range(g.n), size):
            for x_size in range(len(q) + 1):
                if any(
                    _balanced(adj, q, x, strict) for x in combinations(q, x_size)
                ):
                    worst = max(worst, x_size)
                    break
    return worst


def oracle_treewidth(g: Graph) -> int:
    best = max(g.n - 1, 0)
    for order in permutations(range(g.n)):
        adj = _adj_sets(g)
        width = 0
        for v in order:
            nb = set(adj[v])
            width = max(width, len(nb))
            if width >= best:
                break
            for u in nb:
                adj[u] |= nb - {u}
                adj[u].discard(v)
            for u in range(g.n):
                adj[u].discard(v)
        best = min(best, width)
    return best


def oracle_pathwidth(g: Graph) -> int:
    adj = _adj_sets(g)
    best = g.n
    for order in permutations(range(g.n)):
        prefix = set()
        worst = 0
        for v in order:
            prefix.add(v)
            worst = max(worst, sum(1 for u in prefix if adj[u] - prefix))
            if worst >= best:
                break
        best = min(best, worst)
    return best


def oracle_bandwidth(g: Graph) -> int:
    edges = list(g.edges())
    if not edges:
        return 0
    best = g.n - 1
    for order in permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(order)}
        stretch = max(abs(pos[u] - pos[v]) for u, v in edges)
        best = min(best, stretch)
    return best


def oracle_valid_levels(g: Graph, levels) -> bool:
    adj = _adj_sets(g)
    for l in set(levels):
        sub = {v for v in range(g.n) if levels[v] <= l}
        for comp in _components(adj, sub):
            if sum(1 for v in comp if levels[v] == l) > 1:
                return False
    return True


def oracle_cycle_rank(g: Graph) -> int:
    if g.n == 0:
        return 0
    for h in range(1, g.n + 1):
        for levels in product(range(1, h + 1), repeat=g.n):
            if oracle_valid_levels(g, levels):
                return h
    raise AssertionError("distinct levels are always valid; unreachable")


def oracle_is_chordal(g: Graph) -> bool:
    adj = _adj_sets(g)
    for size in range(4, g.n + 1):
        for cycle_set in combinations(range(g.n), size):
            s = set(cycle_set)
            if any(len(adj[v] & s) != 2 for v in s):
                continue
            if len(_components(adj, s)) == 1:
                return False
    return True


def oracle_subgraph_of_path_power(g: Graph, k: int) -> bool:
    """Is g isomorphic to a subgraph of the k-th path power of its order?"""
    if g.n <= 1:
        return True
    return any(
        all(abs(pos[u] - pos[v]) <= k for u, v in g.edges())
        for pos in (
            {v: i for i, v in enumerate(order)} for order in permutations(range(g.n))
        )
    )


# ---------------------------------------------------------------------------
# Corpora (session-scoped; seeds are fixed so tests are reproducible)


@pytest.fixture(scope="session")
def random_graphs_200():
    return random_corpus(200, 10, 1)


@pytest.fixture(scope="session")
def trees_100():
    return tree_corpus(100, 12, 2)


@pytest.fixture(scope="session")
def chordal_100():
    return chordal_corpus(100, 12, 3, 1)


@pytest.fixture(scope="session")
def named_small():
    return named_families()


@pytest.fixture(scope="session")
def small_random_graphs():
    """Mixed tiny graphs (n <= 6) for exhaustive-oracle comparisons."""
    return random_corpus(100, 6, 5)
