"""Exact maximum (total) domatic partitions of graphs and hypergraphs.

The engine works on bitmasks. Optimality is certified either by reaching an
upper bound (minimum degree or item_count // gamma) or by exhausting the
search for one more class.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

import networkx as nx

from hypdomatic.domination import DomaticPartition, Kind
from hypdomatic.errors import BudgetExceeded, Infeasible, InvalidParams, TooLarge
from hypdomatic.hypergraph import AdjacencyStructure, Hypergraph, line_graph, two_section

BoundKind = Literal["TrivialBound", "MinDegreeBound", "GammaBound"]

BRUTE_FORCE_CAP = 12
GAMMA_NODE_CAP = 500_000


@dataclass(frozen=True)
class SolveBudget:
    time_limit: float | None = None
    node_limit: int | None = None

    def __post_init__(self):
        if self.time_limit is not None and self.time_limit <= 0:
            raise InvalidParams("time_limit must be positive")
        if self.node_limit is not None and self.node_limit <= 0:
            raise InvalidParams("node_limit must be positive")


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: DomaticPartition
    upper_bound_used: BoundKind
    upper_bound: int
    nodes_explored: int
    elapsed: float
    optimal: bool = True
    gamma: int | None = None


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _Clock:
    def __init__(self, budget: SolveBudget | None):
        self.budget = budget or SolveBudget()
        self.start = time.perf_counter()
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        b = self.budget
        if b.node_limit is not None and self.nodes > b.node_limit:
            raise _OutOfBudget
        if b.time_limit is not None and self.nodes % 256 == 0:
            if time.perf_counter() - self.start > b.time_limit:
                raise _OutOfBudget

    def elapsed(self) -> float:
        return time.perf_counter() - self.start


class _OutOfBudget(Exception):
    pass


def _gamma(nbhd: list[int], count: int, node_cap: int) -> int | None:
    """Exact domination number over the given neighbourhood masks; None past the node cap."""
    full = (1 << count) - 1
    reach = max(_popcount(m) for m in nbhd)
    nodes = 0

    def search(covered: int, budget: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise _OutOfBudget
        open_ = full & ~covered
        if not open_:
            return True
        if budget == 0 or _popcount(open_) > budget * reach:
            return False
        best_cands, best = 0, None
        for v in _bits(open_):
            c = _popcount(nbhd[v])
            if best is None or c < best:
                best, best_cands = c, nbhd[v]
        # most-covering dominators first
        order = sorted(_bits(best_cands), key=lambda u: (-_popcount(nbhd[u] & open_), u))
        return any(search(covered | nbhd[u], budget - 1) for u in order)

    try:
        for size in range(1, count + 1):
            if search(0, size):
                return size
    except _OutOfBudget:
        return None
    return count


class _Feasibility:
    """Backtracking search for k disjoint (total) dominating classes.

    Branching is requirement driven: pick the item v whose remaining
    dominators are scarcest relative to the number of classes still missing
    it, pick one such class c, and branch on which unassigned neighbour of v
    joins c. Non-empty classes always form a prefix, and an item that failed
    as the first member of an empty class may afterwards only join classes
    that were non-empty at that point.
    """

    def __init__(self, nbhd: list[int], count: int, k: int, clock: _Clock, gamma: int = 1):
        self.nbhd = nbhd
        self.gamma = gamma
        self.count = count
        self.k = k
        self.clock = clock
        self.full = (1 << count) - 1
        self.reach = max(_popcount(m) for m in nbhd)
        self.assign = [-1] * count
        self.cov = [0] * k
        self.members = [0] * k
        self.cnt = [0] * count
        self.limit = [k] * count
        self.unassigned = self.full
        self.used = 0

    def place(self, u: int, c: int) -> int:
        newly = self.nbhd[u] & ~self.cov[c]
        self.cov[c] |= newly
        self.members[c] |= 1 << u
        self.assign[u] = c
        self.unassigned &= ~(1 << u)
        for v in _bits(newly):
            self.cnt[v] += 1
        if c == self.used:
            self.used += 1
        return newly

    def unplace(self, u: int, c: int, newly: int, opened: bool) -> None:
        self.cov[c] &= ~newly
        self.members[c] &= ~(1 << u)
        self.assign[u] = -1
        self.unassigned |= 1 << u
        for v in _bits(newly):
            self.cnt[v] -= 1
        if opened:
            self.used -= 1

    def run(self) -> list[int] | None:
        if self._search():
            return list(self.assign)
        return None

    def _search(self) -> bool:
        self.clock.tick()
        k, full, reach, gamma = self.k, self.full, self.reach, self.gamma
        unassigned = self.unassigned
        pool = _popcount(unassigned)

        # every incomplete class still needs items; at zero slack a class
        # needing one item must take a single item that completes it
        need_total = 0
        forced = None
        for c in range(self.used):
            miss = full & ~self.cov[c]
            if not miss:
                continue
            need = max(gamma - _popcount(self.members[c]), -(-_popcount(miss) // reach), 1)
            if need == 1:
                comps = [u for u in _bits(unassigned) if self.limit[u] > c and not miss & ~self.nbhd[u]]
                if not comps:
                    need = 2
                elif forced is None or len(comps) < len(forced[1]):
                    forced = (c, comps)
            need_total += need
            if need_total > pool:
                return False
        empty = k - self.used
        if empty:
            need_total += empty * max(gamma, -(-self.count // reach), 1)
            if need_total > pool:
                return False

        pick = None
        pick_key = None
        for v in range(self.count):
            deficit = k - self.cnt[v]
            if deficit == 0:
                continue
            avail = _popcount(self.nbhd[v] & unassigned)
            slack = avail - deficit
            if slack < 0:
                return False
            key = (slack, avail)
            if pick_key is None or key < pick_key:
                pick, pick_key = v, key
        if pick is None:
            self._dump()
            return True

        if need_total == pool and forced is not None:
            c, cands = forced
        else:
            v = pick
            c = next((i for i in range(self.used) if not (self.cov[i] >> v) & 1), self.used)
            cover_gap = full & ~self.cov[c]
            cands = [u for u in _bits(self.nbhd[v] & unassigned) if self.limit[u] > c]
            cands.sort(key=lambda u: (-_popcount(self.nbhd[u] & cover_gap), u))
        return self._branch(c, cands)

    def _branch(self, c: int, cands: list[int]) -> bool:
        opening = c == self.used
        restricted = []
        found = False
        for u in cands:
            newly = self.place(u, c)
            if self._search():
                found = True
                break
            self.unplace(u, c, newly, opening)
            if opening and c == 0:
                # all classes empty: u fits nowhere by symmetry
                break
            if opening:
                restricted.append((u, self.limit[u]))
                self.limit[u] = min(self.limit[u], c)
        for u, old in restricted:
            self.limit[u] = old
        return found

    def _dump(self) -> None:
        # leftovers go round-robin over the classes each item may join
        turn = 0
        for u in _bits(self.unassigned):
            allowed = min(self.limit[u], self.used)
            c = turn % allowed
            turn += 1
            self.place(u, c)


def _pair_partition(nbhd: list[int], count: int) -> list[int] | None:
    """Exact test for count/2 dominating pairs: a perfect matching in the
    graph whose edges are the dominating pairs."""
    full = (1 << count) - 1
    g = nx.Graph()
    g.add_nodes_from(range(count))
    g.add_edges_from((u, w) for u, w in combinations(range(count), 2) if nbhd[u] | nbhd[w] == full)
    matching = nx.max_weight_matching(g, maxcardinality=True)
    if 2 * len(matching) != count:
        return None
    assign = [-1] * count
    for c, pair in enumerate(sorted(tuple(sorted(p)) for p in matching)):
        for u in pair:
            assign[u] = c
    return assign


EXACT_COVER_ROW_CAP = 200_000


def _minimum_dominating_sets(nbhd: list[int], count: int, size: int, cap: int) -> list[tuple[int, ...]] | None:
    """Every dominating set with exactly ``size`` items, ascending; None past ``cap`` sets."""
    full = (1 << count) - 1
    reach = max(_popcount(m) for m in nbhd)
    found: list[tuple[int, ...]] = []

    def extend(start: int, chosen: list[int], covered: int) -> None:
        left = size - len(chosen)
        missing = full & ~covered
        if left == 1:
            for u in range(start, count):
                if not missing & ~nbhd[u]:
                    found.append(tuple(chosen) + (u,))
                    if len(found) > cap:
                        raise _OutOfBudget
            return
        if _popcount(missing) > left * reach:
            return
        for u in range(start, count - left + 1):
            chosen.append(u)
            extend(u + 1, chosen, covered | nbhd[u])
            chosen.pop()

    try:
        extend(0, [], 0)
    except _OutOfBudget:
        return None
    return found


def _exact_cover_partition(nbhd: list[int], count: int, k: int, gamma: int, clock: _Clock) -> list[int] | None:
    """Exact test for k classes when count == k * gamma: every class is then a
    minimum dominating set, so the task is an exact cover of the items by
    such sets (Algorithm X, branching on the item with fewest sets).
    Returns None when infeasible; raises _NotApplicable if too many sets."""
    rows = _minimum_dominating_sets(nbhd, count, gamma, EXACT_COVER_ROW_CAP)
    if rows is None:
        raise _NotApplicable
    cols: dict[int, set[int]] = {i: set() for i in range(count)}
    for r, row in enumerate(rows):
        for i in row:
            cols[i].add(r)
    solution: list[int] = []

    def select(r: int) -> list[set[int]]:
        removed = []
        for i in rows[r]:
            for other in cols[i]:
                for j in rows[other]:
                    if j != i:
                        cols[j].discard(other)
            removed.append(cols.pop(i))
        return removed

    def deselect(r: int, removed: list[set[int]]) -> None:
        for i in reversed(rows[r]):
            cols[i] = removed.pop()
            for other in cols[i]:
                for j in rows[other]:
                    if j != i:
                        cols[j].add(other)

    def search() -> bool:
        clock.tick()
        if not cols:
            return True
        col = min(cols, key=lambda i: (len(cols[i]), i))
        for r in sorted(cols[col]):
            solution.append(r)
            removed = select(r)
            if search():
                return True
            deselect(r, removed)
            solution.pop()
        return False

    if not search():
        return None
    assign = [-1] * count
    for c, r in enumerate(solution):
        for i in rows[r]:
            assign[i] = c
    return assign


class _NotApplicable(Exception):
    pass


def _greedy(nbhd: list[int], count: int) -> list[list[int]]:
    """Disjoint dominating classes built greedily; leftovers join the last class."""
    full = (1 << count) - 1
    pool = full
    classes: list[list[int]] = []
    while pool:
        cov, members = 0, []
        rest = pool
        while cov != full and rest:
            u = max(_bits(rest), key=lambda x: (_popcount(nbhd[x] & ~cov), -x))
            if not nbhd[u] & ~cov:
                break
            members.append(u)
            cov |= nbhd[u]
            rest &= ~(1 << u)
        if cov != full:
            break
        classes.append(members)
        pool = rest
    if not classes:
        return [list(range(count))]
    classes[-1].extend(_bits(pool))
    return classes


def _feasible(nbhd: list[int], count: int, k: int, gamma: int | None, clock: _Clock) -> list[int] | None:
    """Assignment of items to k (total) dominating classes, or None."""
    if gamma is not None and count == gamma * k:
        if gamma == 2:
            return _pair_partition(nbhd, count)
        if gamma >= 3:
            try:
                return _exact_cover_partition(nbhd, count, k, gamma, clock)
            except _NotApplicable:
                pass
    return _Feasibility(nbhd, count, k, clock, gamma or 1).run()


def _partition_from_assign(assign: list[int], k: int, kind: Kind, total: bool) -> DomaticPartition:
    classes: list[list[int]] = [[] for _ in range(k)]
    for item, c in enumerate(assign):
        classes[c].append(item)
    return DomaticPartition.of(kind, total, classes).canonical()


def max_domatic(
    adj: AdjacencyStructure,
    total: bool = False,
    budget: SolveBudget | None = None,
    kind: Kind = "vertex",
) -> SolveResult:
    """Maximum number of classes in a partition into (total) dominating sets."""
    count = adj.item_count
    if count < 1:
        raise InvalidParams("need at least one item")
    if total and adj.has_isolated():
        raise Infeasible("an isolated item cannot be totally dominated")
    clock = _Clock(budget)
    nbhd = [m if total else m | (1 << i) for i, m in enumerate(adj.masks)]

    trivial = count // 2 if total else count
    min_deg = adj.min_degree() if total else adj.min_degree() + 1
    gamma = _gamma(nbhd, count, GAMMA_NODE_CAP)
    bounds: list[tuple[int, BoundKind]] = [(trivial, "TrivialBound"), (min_deg, "MinDegreeBound")]
    if gamma is not None:
        bounds.append((count // gamma, "GammaBound"))
    upper, bound_kind = min(bounds, key=lambda b: b[0])

    greedy = _greedy(nbhd, count)
    lower = len(greedy)
    best = DomaticPartition.of(kind, total, greedy).canonical()

    k = upper
    try:
        while k > lower:
            assign = _feasible(nbhd, count, k, gamma, clock)
            if assign is not None:
                best = _partition_from_assign(assign, k, kind, total)
                break
            k -= 1
        else:
            k = lower
    except _OutOfBudget:
        partial = SolveResult(lower, best, bound_kind, upper, clock.nodes, clock.elapsed(), False, gamma)
        raise BudgetExceeded(
            f"budget exhausted while testing {k} classes (best found {lower}, upper bound {upper})",
            best=partial,
        ) from None
    return SolveResult(k, best, bound_kind, upper, clock.nodes, clock.elapsed(), True, gamma)


def find_partition(
    adj: AdjacencyStructure,
    k: int,
    total: bool = False,
    seeds: list[list[int]] | None = None,
    budget: SolveBudget | None = None,
    kind: Kind = "vertex",
) -> DomaticPartition | None:
    """A partition into exactly k (total) dominating classes, or None if none exists.

    ``seeds`` pre-fills classes 0, 1, ... with the given items.
    Raises BudgetExceeded when the budget runs out first.
    """
    if k < 1 or k > adj.item_count:
        return None
    if total and adj.has_isolated():
        raise Infeasible("an isolated item cannot be totally dominated")
    clock = _Clock(budget)
    nbhd = [m if total else m | (1 << i) for i, m in enumerate(adj.masks)]
    search = _Feasibility(nbhd, adj.item_count, k, clock, _gamma(nbhd, adj.item_count, GAMMA_NODE_CAP) or 1)
    for c, seed in enumerate(seeds or []):
        for u in seed:
            if search.assign[u] != -1:
                raise InvalidParams(f"seed item {u} appears twice")
            search.place(u, c)
    try:
        assign = search.run()
    except _OutOfBudget:
        raise BudgetExceeded(f"budget exhausted while searching for {k} classes") from None
    if assign is None:
        return None
    return _partition_from_assign(assign, k, kind, total)


def domatic_number(h: Hypergraph, budget: SolveBudget | None = None) -> SolveResult:
    return max_domatic(two_section(h), False, budget, "vertex")


def total_domatic_number(h: Hypergraph, budget: SolveBudget | None = None) -> SolveResult:
    return max_domatic(two_section(h), True, budget, "vertex")


def edge_domatic_number(h: Hypergraph, budget: SolveBudget | None = None) -> SolveResult:
    if h.m == 0:
        raise InvalidParams("hypergraph has no edges")
    return max_domatic(line_graph(h), False, budget, "edge")


def total_edge_domatic_number(h: Hypergraph, budget: SolveBudget | None = None) -> SolveResult:
    if h.m == 0:
        raise InvalidParams("hypergraph has no edges")
    return max_domatic(line_graph(h), True, budget, "edge")


def _set_partitions(items: list[int]):
    """All set partitions of ``items`` via restricted growth strings."""
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n
    maxes = [0] * n

    def rec(i: int):
        if i == n:
            blocks: dict[int, list[int]] = {}
            for item, b in zip(items, rgs):
                blocks.setdefault(b, []).append(item)
            yield list(blocks.values())
            return
        top = maxes[i - 1] + 1 if i else 0
        for b in range(top + 1):
            rgs[i] = b
            maxes[i] = max(maxes[i - 1], b) if i else b
            yield from rec(i + 1)

    yield from rec(0)


def brute_force_domatic(adj: AdjacencyStructure, total: bool = False) -> int:
    """Exhaustive oracle over every set partition; independent of the engine."""
    count = adj.item_count
    if count > BRUTE_FORCE_CAP:
        raise TooLarge(f"brute force is capped at {BRUTE_FORCE_CAP} items, got {count}")
    if count < 1:
        raise InvalidParams("need at least one item")
    if total and any(not adj.neighbors[i] for i in range(count)):
        raise Infeasible("an isolated item cannot be totally dominated")

    def dominates(block: list[int]) -> bool:
        members = set(block)
        for x in range(count):
            if not total and x in members:
                continue
            if not members & adj.neighbors[x]:
                return False
        return True

    best = 0
    for blocks in _set_partitions(list(range(count))):
        if len(blocks) > best and all(dominates(b) for b in blocks):
            best = len(blocks)
    return best
