"""Simple undirected graphs with dense-bitset vertex sets.

Vertices are the integers 0..n-1.  Vertex sets travel through the exact
solvers as Python int bitmasks (bit v set <=> vertex v present), which is
the dense-bitset representation the subset dynamic programs need; public
functions accept and return plain iterables/tuples of vertex ids.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DomainError, MalformedInput, SizeLimitExceeded
from .rng import SplitMix64

# Generators refuse anything bigger than this; exact solvers have far
# smaller per-operation caps (see solvers / separators).
GENERATOR_CAP = 1 << 16


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> tuple[int, ...]:
    """Vertex ids of a bitmask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "adj_bits", "_full_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise DomainError(f"vertex count must be nonnegative, got {n}")
        bits = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.n = n
        self.adj_bits = tuple(bits)
        self.adj = tuple(frozenset(bits_of(b)) for b in bits)
        self._full_mask = (1 << n) - 1

    @property
    def full_mask(self) -> int:
        return self._full_mask

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (self.adj_bits[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj_bits[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographic order."""
        for u in range(self.n):
            higher = self.adj_bits[u] >> (u + 1)
            while higher:
                low = higher & -higher
                yield (u, u + low.bit_length())
                higher ^= low

    def num_edges(self) -> int:
        return sum(b.bit_count() for b in self.adj_bits) // 2

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise DomainError(f"vertex {v} outside 0..{self.n - 1}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj_bits == other.adj_bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj_bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


# ---------------------------------------------------------------------------
# Components and induced subgraphs


def reach_mask(g: Graph, start: int, allowed: int) -> int:
    """Vertices reachable from `start` inside the `allowed` bitmask.

    `start` must itself be in `allowed`.
    """
    comp = 1 << start
    frontier = comp
    adj = g.adj_bits
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def component_masks(g: Graph, universe: int | None = None) -> list[int]:
    """Connected components of g restricted to `universe`, as bitmasks.

    Ordered by smallest member id.
    """
    rem = g.full_mask if universe is None else universe
    comps = []
    while rem:
        v = (rem & -rem).bit_length() - 1
        comp = reach_mask(g, v, rem)
        comps.append(comp)
        rem &= ~comp
    return comps


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, by smallest member."""
    return [bits_of(c) for c in component_masks(g)]


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on `vertices` plus the new-id -> old-id map.

    New vertex i corresponds to old vertex mapping[i]; ids are compacted
    in ascending order of the original ids.
    """
    keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [
        (new_id[u], new_id[v])
        for u in keep
        for v in g.adj[u]
        if u < v and v in new_id
    ]
    return Graph(len(keep), edges), tuple(keep)


# ---------------------------------------------------------------------------
# Chordality


def lex_bfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS visit order; ties broken by smallest id."""
    n = g.n
    label = [()] * n
    visited = [False] * n
    order = []
    for i in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best == -1 or label[v] > label[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in g.adj[best]:
            if not visited[w]:
                # Larger labels sort later; prepend of (n - i) keeps
                # lexicographic comparison on plain tuples correct.
                label[w] = label[w] + (n - i,)
    return order


def _find_hole(g: Graph) -> tuple[int, ...]:
    """Some induced cycle of length >= 4 in a non-chordal graph.

    Scans triples (v, u, w) with u, w nonadjacent neighbors of v; a
    shortest u-w path avoiding the rest of N[v] closes an induced cycle
    through v.  Shortest paths are induced, so the cycle is a hole.
    """
    for v in range(g.n):
        nb = sorted(g.adj[v])
        for i, u in enumerate(nb):
            for w in nb[i + 1 :]:
                if g.has_edge(u, w):
                    continue
                allowed = g.full_mask & ~(1 << v) & ~(g.adj_bits[v] & ~(1 << u) & ~(1 << w))
                if not ((reach_mask(g, u, allowed) >> w) & 1):
                    continue
                path = _shortest_path(g, u, w, allowed)
                return (v,) + tuple(path)
    raise AssertionError("no hole found in a graph that failed the PEO test")


def _shortest_path(g: Graph, src: int, dst: int, allowed: int) -> list[int]:
    parent = {src: -1}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if (allowed >> w) & 1 and w not in parent:
                    parent[w] = u
                    if w == dst:
                        path = [w]
                        while parent[path[-1]] != -1:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    nxt.append(w)
        frontier = nxt
    raise AssertionError("no path despite reachability check")


def is_chordal(g: Graph) -> tuple[bool, tuple[int, ...]]:
    """Chordality test with a certificate.

    Returns (True, perfect elimination ordering) or (False, hole), the
    hole being an induced cycle of length >= 4 in traversal order.  The
    test runs Lex-BFS and checks the reversed visit order for the
    perfect-elimination property.
    """
    if g.n == 0:
        return True, ()
    order = lex_bfs_order(g)[::-1]
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        p = min(later, key=lambda u: pos[u])
        for w in later:
            if w != p and not g.has_edge(p, w):
                return False, _find_hole(g)
    return True, tuple(order)


def maximal_cliques_chordal(g: Graph, peo: tuple[int, ...] | None = None) -> list[int]:
    """Maximal cliques of a chordal graph as bitmasks.

    Every maximal clique of a chordal graph is {v} + later-neighbors(v)
    for some v in a perfect elimination ordering; non-maximal candidates
    are filtered out.  Result is sorted by bitmask value.
    """
    if peo is None:
        ok, peo = is_chordal(g)
        if not ok:
            raise DomainError("graph is not chordal")
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    candidates = set()
    for v in peo:
        later = mask_of(u for u in g.adj[v] if pos[u] > pos[v])
        candidates.add(later | (1 << v))
    cliques = [
        c
        for c in candidates
        if not any(c != d and c & d == c for d in candidates)
    ]
    return sorted(cliques)


# ---------------------------------------------------------------------------
# Generators


def _check_size(n: int) -> None:
    if n > GENERATOR_CAP:
        raise SizeLimitExceeded(f"generator refuses n = {n} > {GENERATOR_CAP}")


def path(n: int) -> Graph:
    """Path graph 0-1-...-(n-1)."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    _check_size(n)
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def path_power(n: int, k: int) -> Graph:
    """k-th power of the path: edge {u,v} iff 1 <= |u-v| <= k."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if k < 1:
        raise DomainError(f"power k must be >= 1, got {k}")
    _check_size(n)
    return Graph(
        n, ((u, v) for u in range(n) for v in range(u + 1, min(u + k, n - 1) + 1))
    )


def hypercube(d: int) -> Graph:
    """d-dimensional hypercube; vertex ids are the coordinate bit patterns."""
    if d < 0:
        raise DomainError("dimension must be nonnegative")
    if 2**d > GENERATOR_CAP:
        raise SizeLimitExceeded(f"hypercube(d={d}) has 2^{d} > {GENERATOR_CAP} vertices")
    n = 1 << d
    return Graph(n, ((u, u | (1 << b)) for u in range(n) for b in range(d) if not (u >> b) & 1))


def star(n: int) -> Graph:
    """Star with center 0 and n leaves 1..n."""
    if n < 0:
        raise DomainError("leaf count must be nonnegative")
    _check_size(n + 1)
    return Graph(n + 1, ((0, i) for i in range(1, n + 1)))


def complete(n: int) -> Graph:
    if n < 0:
        raise DomainError("n must be nonnegative")
    _check_size(n)
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_binary_tree(d: int) -> Graph:
    """Complete binary tree of depth d, on 2^d - 1 vertices (heap layout)."""
    if d < 1:
        raise DomainError(f"depth must be >= 1, got {d}")
    n = 2**d - 1
    _check_size(n)
    return Graph(n, ((v, (v - 1) // 2) for v in range(1, n)))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with edges drawn pair by pair from SplitMix64(seed)."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"edge probability must be in [0, 1], got {p}")
    _check_size(n)
    rng = SplitMix64(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.uniform() < p
    ]
    return Graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    _check_size(n)
    if n <= 1:
        return Graph(n)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = SplitMix64(seed)
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    # Standard decode: repeatedly join the smallest remaining leaf to the
    # next sequence entry.
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def random_chordal(n: int, width: int, seed: int) -> Graph:
    """Random (<= width)-tree: chordal, largest clique min(n, width+1).

    Builds a k-tree with k = width: start from a (width+1)-clique, then
    attach each new vertex to a uniformly chosen existing width-clique.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if width < 1:
        raise DomainError(f"width must be >= 1, got {width}")
    _check_size(n)
    k = width
    if n <= k + 1:
        return complete(n)
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(k + 1) for v in range(u + 1, k + 1)]
    base = tuple(range(k + 1))
    cliques = [tuple(c for c in base if c != skip) for skip in base]
    for v in range(k + 1, n):
        host = cliques[rng.below(len(cliques))]
        edges.extend((u, v) for u in host)
        for u in host:
            cliques.append(tuple(sorted((set(host) - {u}) | {v})))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Edge-list text I/O
#
# Format: optional '#' comment lines, then a header "n m", then exactly m
# lines "u v" with 0 <= u < v < n, ASCII decimal, single space, each line
# '\n'-terminated.  Duplicate edges are rejected.


def parse_edge_list(text: str) -> Graph:
    if text and not text.endswith("\n"):
        raise MalformedInput("missing final newline", line=text.count("\n") + 1)
    header = None
    header_line = 0
    edges = []
    seen = set()
    n = m = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            continue
        fields = line.split(" ")
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise MalformedInput(f"expected two integers, got {line!r}", line=lineno)
        a, b = int(fields[0]), int(fields[1])
        if header is None:
            header = (a, b)
            header_line = lineno
            n, m = a, b
            if n > GENERATOR_CAP:
                raise SizeLimitExceeded(f"vertex count {n} exceeds cap {GENERATOR_CAP}")
            continue
        if len(edges) == m:
            raise MalformedInput(f"more than {m} edge lines", line=lineno)
        if not a < b:
            raise MalformedInput(f"edge must satisfy u < v, got {a} {b}", line=lineno)
        if b >= n:
            raise MalformedInput(f"vertex id {b} out of range 0..{n - 1}", line=lineno)
        if (a, b) in seen:
            raise MalformedInput(f"duplicate edge {a} {b}", line=lineno)
        seen.add((a, b))
        edges.append((a, b))
    if header is None:
        raise MalformedInput("missing 'n m' header line", line=1)
    if len(edges) != m:
        raise MalformedInput(
            f"header promises {m} edges, found {len(edges)}", line=header_line
        )
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text: header plus sorted 'u v' lines."""
    lines = [f"{g.n} {g.num_edges()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
