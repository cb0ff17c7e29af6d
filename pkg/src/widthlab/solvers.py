"""Exact solvers for cycle rank, treewidth, pathwidth, and bandwidth.

All solvers are exponential-time subset algorithms meant for desk-scale
graphs; each refuses inputs above its cap.  Every witness returned here
is re-validated against the reported value before it leaves the solver,
and tie-breaking is deterministic (smallest vertex id / lexicographically
smallest sequence), so results are stable across runs.

Conventions for degenerate inputs: the empty graph has cycle rank 0 and
treewidth = pathwidth = bandwidth = 0; a single vertex has cycle rank 1
(edgeless rule) and the other three parameters 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .closed_forms import R_rec, bound_log_chain, bound_thm6
from .errors import DomainError, InvalidSeparator, InvariantViolation, SizeLimitExceeded
from .graph import Graph, bits_of, component_masks, reach_mask
from .separators import (
    SEPARATOR_NUMBER_CAP,
    _BalanceCache,
    _pad_once_mask,
    min_balanced_separator_mask,
    separator_number_with_witness,
)

RANK_CAP = 16
RANK_CAP_DEEP = 20
TW_CAP = 18
PW_CAP = 18
BW_CAP = 12
BW_CAP_DEEP = 16


@dataclass(frozen=True)
class Ranking:
    """Vertex levels witnessing a cycle-rank upper bound."""

    level: dict[int, int]

    @property
    def height(self) -> int:
        return max(self.level.values(), default=0)

    def to_json_dict(self) -> dict:
        return {
            "levels": {str(v): l for v, l in sorted(self.level.items())},
            "height": self.height,
        }


def is_valid_ranking(g: Graph, ranking: Ranking) -> tuple[bool, tuple[int, int] | None]:
    """Level-wise component test for ranking validity.

    A ranking is valid iff for every level l, each connected component of
    the subgraph induced by the vertices of level <= l contains at most
    one vertex of level exactly l.  Returns (True, None) or (False,
    first violating pair), scanning levels ascending and components by
    smallest member.
    """
    levels = ranking.level
    for v in range(g.n):
        l = levels.get(v)
        if l is None:
            raise DomainError(f"vertex {v} has no level assigned")
        if not isinstance(l, int) or l < 1:
            raise DomainError(f"vertex {v} has invalid level {l!r}")
    cum = 0
    for l in sorted(set(levels.values())):
        at_mask = 0
        for v, lv in levels.items():
            if lv == l:
                at_mask |= 1 << v
        cum |= at_mask
        for comp in component_masks(g, cum):
            here = bits_of(comp & at_mask)
            if len(here) >= 2:
                return False, (here[0], here[1])
    return True, None


# ---------------------------------------------------------------------------
# Cycle rank


def cycle_rank(g: Graph, cap: int = RANK_CAP) -> tuple[int, Ranking]:
    """Exact cycle rank with an optimal ranking witness.

    Memoized recursion over vertex subsets: split into connected
    components (max rule) before the memo lookup, otherwise try every
    single-vertex deletion (min rule).
    """
    if g.n > cap:
        raise SizeLimitExceeded(f"cycle_rank: n = {g.n} > cap {cap}")
    if g.n == 0:
        return 0, Ranking({})
    memo: dict[int, int] = {}

    def rank_any(mask: int) -> int:
        return max(rank_conn(c) for c in component_masks(g, mask))

    def rank_conn(mask: int) -> int:
        if mask & (mask - 1) == 0:
            return 1
        cached = memo.get(mask)
        if cached is not None:
            return cached
        best = mask.bit_count()  # deleting everything one by one
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            val = rank_any(mask ^ low)
            if val < best:
                best = val
                if best == 1:
                    break
        memo[mask] = best + 1
        return best + 1

    value = rank_any(g.full_mask)

    levels: dict[int, int] = {}

    def build(mask: int, budget: int) -> None:
        for comp in component_masks(g, mask):
            build_conn(comp, budget)

    def build_conn(mask: int, budget: int) -> None:
        if mask & (mask - 1) == 0:
            levels[mask.bit_length() - 1] = budget
            return
        target = rank_conn(mask) - 1
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if rank_any(mask ^ low) == target:
                levels[low.bit_length() - 1] = budget
                build(mask ^ low, budget - 1)
                return
        raise AssertionError("no vertex achieves the memoized optimum")

    build(g.full_mask, value)
    ranking = Ranking(levels)
    ok, pair = is_valid_ranking(g, ranking)
    if not ok or ranking.height != value:
        raise InvariantViolation(f"reconstructed ranking invalid (pair {pair})")
    return value, ranking


def separator_ranking(g: Graph, k: int, cap: int = RANK_CAP_DEEP) -> Ranking:
    """Ranking built from balanced separators of size exactly k.

    Recursively: graphs with at most k vertices get distinct top levels;
    otherwise a minimum balanced separator is padded to size exactly k,
    its vertices take the k highest remaining levels, and the components
    below recurse independently.  The result is valid and has height at
    most R_k(n).  Raises InvalidSeparator if some recursive instance has
    no balanced separator of size <= k (that is, k < s(G)).
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if g.n > cap:
        raise SizeLimitExceeded(f"separator_ranking: n = {g.n} > cap {cap}")
    if g.n == 0:
        return Ranking({})
    budget = R_rec(k, g.n)
    cache = _BalanceCache(g, strict=False)
    levels: dict[int, int] = {}

    def assign_block(mask: int, top: int) -> None:
        for i, v in enumerate(bits_of(mask)):
            if top - i < 1:
                raise InvariantViolation("level budget exhausted")
            levels[v] = top - i

    def descend(mask: int, top: int) -> None:
        nq = mask.bit_count()
        if nq <= k:
            assign_block(mask, top)
            return
        size, x_mask = min_balanced_separator_mask(g, mask, strict=False, cache=cache)
        if size > k:
            raise InvalidSeparator(
                f"induced subgraph {bits_of(mask)} needs a separator of size {size} > k = {k}"
            )
        while x_mask.bit_count() < k:
            x_mask = _pad_once_mask(g, mask, x_mask)
            if not cache.balanced(mask & ~x_mask):
                raise InvariantViolation("padded separator lost balance")
        assign_block(x_mask, top)
        for comp in component_masks(g, mask & ~x_mask):
            descend(comp, top - k)

    descend(g.full_mask, budget)
    ranking = Ranking(levels)
    ok, pair = is_valid_ranking(g, ranking)
    if not ok:
        raise InvariantViolation(f"separator ranking invalid (pair {pair})")
    if ranking.height > budget:
        raise InvariantViolation(
            f"separator ranking height {ranking.height} exceeds R_{k}({g.n}) = {budget}"
        )
    return ranking


# ---------------------------------------------------------------------------
# Treewidth (elimination-ordering subset DP)


def _fill_degree(g: Graph, done: int, v: int, outside: int) -> int:
    """Neighbors of v in `outside`, directly or through eliminated `done`."""
    if g.adj_bits[v] & done == 0:
        return (g.adj_bits[v] & outside).bit_count()
    comp = reach_mask(g, v, done | (1 << v))
    nb = 0
    rest = comp
    while rest:
        low = rest & -rest
        nb |= g.adj_bits[low.bit_length() - 1]
        rest ^= low
    return (nb & outside).bit_count()


def treewidth(g: Graph, cap: int = TW_CAP) -> tuple[int, tuple[int, ...]]:
    """Exact treewidth with an elimination-ordering witness.

    TW(S) is the best width achievable while eliminating exactly the set
    S first; the chosen vertex is the last of S to go, and its cost is
    its fill-degree into the remaining graph.
    """
    n = g.n
    if n > cap:
        raise SizeLimitExceeded(f"treewidth: n = {n} > cap {cap}")
    if n == 0:
        return 0, ()
    full = g.full_mask
    tw = [0] * (full + 1)
    for s_mask in range(1, full + 1):
        outside = full & ~s_mask
        best = n
        rest = s_mask
        while rest:
            low = rest & -rest
            rest ^= low
            done = s_mask ^ low
            val = tw[done]
            if val >= best:
                continue
            d = _fill_degree(g, done, low.bit_length() - 1, outside)
            val = max(val, d)
            if val < best:
                best = val
        tw[s_mask] = best
    value = tw[full]

    order: list[int] = []
    s_mask = full
    while s_mask:
        rest = s_mask
        while rest:
            low = rest & -rest
            rest ^= low
            done = s_mask ^ low
            d = _fill_degree(g, done, low.bit_length() - 1, full & ~s_mask)
            if max(tw[done], d) == tw[s_mask]:
                order.append(low.bit_length() - 1)
                s_mask = done
                break
        else:
            raise AssertionError("treewidth reconstruction failed")
    order.reverse()
    if eliminate_and_measure(g, tuple(order)) != value:
        raise InvariantViolation("treewidth witness does not replay to the DP value")
    return value, tuple(order)


def eliminate_and_measure(g: Graph, order: tuple[int, ...]) -> int:
    """Width of an elimination ordering by direct simulation."""
    if sorted(order) != list(range(g.n)):
        raise DomainError("order must be a permutation of the vertices")
    adj = list(g.adj_bits)
    alive = g.full_mask
    width = 0
    for v in order:
        nb = adj[v] & alive & ~(1 << v)
        width = max(width, nb.bit_count())
        rest = nb
        while rest:
            low = rest & -rest
            rest ^= low
            adj[low.bit_length() - 1] |= nb & ~low
        alive ^= 1 << v
    return width


# ---------------------------------------------------------------------------
# Pathwidth (vertex-separation subset DP)


def _boundary(g: Graph, s_mask: int) -> int:
    count = 0
    rest = s_mask
    outside = ~s_mask
    while rest:
        low = rest & -rest
        rest ^= low
        if g.adj_bits[low.bit_length() - 1] & outside:
            count += 1
    return count


def pathwidth(g: Graph, cap: int = PW_CAP) -> tuple[int, tuple[int, ...]]:
    """Exact pathwidth via the vertex-separation characterization.

    PW(S) is the best worst-boundary over orderings that use S as the
    set of first |S| layout positions; pathwidth equals PW(V).  Witness
    is the full vertex order, re-validated by its separation profile.
    """
    n = g.n
    if n > cap:
        raise SizeLimitExceeded(f"pathwidth: n = {n} > cap {cap}")
    if n == 0:
        return 0, ()
    full = g.full_mask
    pw = [0] * (full + 1)
    for s_mask in range(1, full + 1):
        best = n
        rest = s_mask
        while rest:
            low = rest & -rest
            rest ^= low
            val = pw[s_mask ^ low]
            if val < best:
                best = val
        b = _boundary(g, s_mask)
        pw[s_mask] = max(b, best)
    value = pw[full]

    order: list[int] = []
    s_mask = full
    while s_mask:
        b = _boundary(g, s_mask)
        rest = s_mask
        while rest:
            low = rest & -rest
            rest ^= low
            if max(b, pw[s_mask ^ low]) == pw[s_mask]:
                order.append(low.bit_length() - 1)
                s_mask ^= low
                break
        else:
            raise AssertionError("pathwidth reconstruction failed")
    order.reverse()
    if separation_profile(g, tuple(order)) != value:
        raise InvariantViolation("pathwidth witness does not replay to the DP value")
    return value, tuple(order)


def separation_profile(g: Graph, order: tuple[int, ...]) -> int:
    """Maximum boundary size over the prefixes of a layout."""
    if sorted(order) != list(range(g.n)):
        raise DomainError("order must be a permutation of the vertices")
    prefix = 0
    worst = 0
    for v in order:
        prefix |= 1 << v
        worst = max(worst, _boundary(g, prefix))
    return worst


# ---------------------------------------------------------------------------
# Bandwidth (iterative-deepening layout search)


def _bandwidth_lower_bound(g: Graph) -> int:
    if g.num_edges() == 0:
        return 0
    lb = max(-(g.degree(v) // -2) for v in range(g.n))
    for comp in component_masks(g):
        vs = bits_of(comp)
        if len(vs) < 2:
            continue
        diam = _diameter(g, vs, comp)
        lb = max(lb, -((len(vs) - 1) // -diam))
    return lb


def _diameter(g: Graph, vs: tuple[int, ...], comp: int) -> int:
    diam = 1
    for src in vs:
        dist = 0
        seen = 1 << src
        frontier = seen
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                rest ^= low
                nxt |= g.adj_bits[low.bit_length() - 1]
            nxt &= comp & ~seen
            if nxt:
                dist += 1
                seen |= nxt
            frontier = nxt
        diam = max(diam, dist)
    return diam


def _layout_stretch(g: Graph, order: tuple[int, ...]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    return max((abs(pos[u] - pos[v]) for u, v in g.edges()), default=0)


def _bandwidth_feasible(g: Graph, b: int) -> tuple[int, ...] | None:
    """Lexicographically smallest layout with stretch <= b, or None.

    Depth-first placement into positions 0..n-1 with two exact prunes: a
    new vertex must sit within b of all its placed neighbors, and the
    vertex at position i - b must have no unplaced neighbors once
    position i is filled.
    """
    n = g.n
    adj = g.adj_bits
    pos = [-1] * n
    seq: list[int] = []
    unplaced = g.full_mask

    def dfs(i: int) -> bool:
        nonlocal unplaced
        if i == n:
            return True
        for v in range(n):
            if pos[v] != -1:
                continue
            placed_nb = adj[v] & ~unplaced
            ok = True
            rest = placed_nb
            while rest:
                low = rest & -rest
                rest ^= low
                if i - pos[low.bit_length() - 1] > b:
                    ok = False
                    break
            if not ok:
                continue
            pos[v] = i
            seq.append(v)
            unplaced ^= 1 << v
            critical = i - b
            blocked = 0 <= critical and (adj[seq[critical]] & unplaced) != 0
            if not blocked and dfs(i + 1):
                return True
            unplaced ^= 1 << v
            seq.pop()
            pos[v] = -1
        return False

    if dfs(0):
        return tuple(seq)
    return None


def bandwidth(g: Graph, cap: int = BW_CAP) -> tuple[int, tuple[int, ...]]:
    """Exact bandwidth with the lexicographically smallest optimal layout.

    Iterative deepening on the stretch bound, from an exact lower bound
    up to the better of two seed layouts (identity and BFS order).
    """
    n = g.n
    if n > cap:
        raise SizeLimitExceeded(f"bandwidth: n = {n} > cap {cap}")
    if n == 0:
        return 0, ()
    identity = tuple(range(n))
    bfs_order = []
    for comp in component_masks(g):
        src = (comp & -comp).bit_length() - 1
        seen = 1 << src
        frontier = [src]
        bfs_order.append(src)
        while frontier:
            nxt = []
            for u in frontier:
                for w in sorted(g.adj[u]):
                    if not (seen >> w) & 1:
                        seen |= 1 << w
                        bfs_order.append(w)
                        nxt.append(w)
            frontier = nxt
    ub = min(_layout_stretch(g, identity), _layout_stretch(g, tuple(bfs_order)))
    for b in range(_bandwidth_lower_bound(g), ub + 1):
        layout = _bandwidth_feasible(g, b)
        if layout is not None:
            if _layout_stretch(g, layout) != b and g.num_edges() > 0:
                raise InvariantViolation("bandwidth witness stretch mismatch")
            return b, layout
    raise AssertionError("seed layout bound was not feasible; unreachable")


# ---------------------------------------------------------------------------
# Chain verification


@dataclass(frozen=True)
class WidthReport:
    """All width parameters of one graph plus the two chain verdicts."""

    n: int
    s: int
    s_strict: int
    tw: int
    pw: int
    bw: int
    r: int
    thm9_ok: bool
    thm2_ok: bool
    thm9_bound_holds: bool
    thm9_bound_display: float
    thm2_bound_holds: bool
    thm2_bound_display: float
    witnesses: dict = field(default_factory=dict)
    flags: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "s_strict": self.s_strict,
            "tw": self.tw,
            "pw": self.pw,
            "bw": self.bw,
            "r": self.r,
            "thm9_ok": self.thm9_ok,
            "thm2_ok": self.thm2_ok,
            "bounds": {
                "thm9": {"holds": self.thm9_bound_holds, "display": self.thm9_bound_display},
                "thm2": {"holds": self.thm2_bound_holds, "display": self.thm2_bound_display},
            },
            "witnesses": self.witnesses,
            "flags": list(self.flags),
        }


def verify_chain(
    g: Graph,
    sep_cap: int = SEPARATOR_NUMBER_CAP,
    tw_cap: int = TW_CAP,
    bw_cap: int = BW_CAP,
    rank_cap: int = RANK_CAP,
) -> WidthReport:
    """Compute every parameter and check both inequality chains exactly.

    The non-strict separator number feeds the newer chain, the strict
    one feeds the older chain, exactly as the two statements are phrased.
    A violated inequality is reported, never raised.  For edgeless
    graphs (s = 0) the logarithmic bound is evaluated at k = 1 -- the
    smallest k the recurrence is defined for; the bound is monotone in
    k, so this is still a valid upper bound -- and the report is flagged.
    """
    if g.n < 2:
        raise DomainError(f"verify_chain requires n >= 2, got n = {g.n}")
    s, s_wit = separator_number_with_witness(g, strict=False, cap=sep_cap)
    s_strict, s_strict_wit = separator_number_with_witness(g, strict=True, cap=sep_cap)
    tw, tw_order = treewidth(g, cap=tw_cap)
    pw, pw_order = pathwidth(g, cap=tw_cap)
    bw, bw_layout = bandwidth(g, cap=bw_cap)
    r, ranking = cycle_rank(g, cap=rank_cap)

    flags = []
    if len(component_masks(g)) > 1:
        flags.append("disconnected-input")
    k9 = s
    if s == 0:
        k9 = 1
        flags.append("thm9-bound-evaluated-at-k=1")
    b9 = bound_thm6(k9, g.n)
    thm9_bound_holds = b9.leq(r)
    thm9_ok = (s <= tw <= pw <= r) and thm9_bound_holds
    b2 = bound_log_chain(s_strict, g.n)
    thm2_bound_holds = b2.leq(r)
    thm2_ok = (s_strict - 1 <= tw) and thm2_bound_holds

    witnesses = {
        "s": s_wit,
        "s_strict": s_strict_wit,
        "tw": {"elimination_order": list(tw_order)},
        "pw": {"layout": list(pw_order)},
        "bw": {"layout": list(bw_layout)},
        "r": ranking.to_json_dict(),
    }
    return WidthReport(
        n=g.n,
        s=s,
        s_strict=s_strict,
        tw=tw,
        pw=pw,
        bw=bw,
        r=r,
        thm9_ok=thm9_ok,
        thm2_ok=thm2_ok,
        thm9_bound_holds=thm9_bound_holds,
        thm9_bound_display=b9.display(),
        thm2_bound_holds=thm2_bound_holds,
        thm2_bound_display=b2.display(),
        witnesses=witnesses,
        flags=tuple(flags),
    )
