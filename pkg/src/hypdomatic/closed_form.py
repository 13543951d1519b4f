"""Closed-form domatic values for complete and complete bipartite families,
and constructors that realise them as explicit partitions.

Citation strings name the result and the condition that triggered it; they
are part of the CLI output.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Literal

from hypdomatic.baranyai import baranyai
from hypdomatic.domination import DomaticPartition
from hypdomatic.errors import BudgetExceeded, InvalidParams, NotApplicable, Overflow, SearchFailed
from hypdomatic.hypergraph import (
    AdjacencyStructure,
    Complete,
    CompleteBipartite,
    FamilyDescriptor,
    Hypergraph,
    degrees,
    line_graph,
    two_section,
)
from hypdomatic.solver import SolveBudget, find_partition

UINT64_MAX = 2**64 - 1

BoundKindName = Literal["Exact", "LowerBound", "NotApplicable"]


class Quantity(str, Enum):
    D = "d"
    DT = "dt"
    ED = "ed"
    EDT = "edt"

    @property
    def total(self) -> bool:
        return self in (Quantity.DT, Quantity.EDT)

    @property
    def on_edges(self) -> bool:
        return self in (Quantity.ED, Quantity.EDT)


@dataclass(frozen=True)
class FormulaResult:
    quantity: Quantity
    value: int | None
    kind: BoundKindName
    citation: str
    rule: str = ""

    def __str__(self) -> str:
        if self.kind == "NotApplicable":
            return f"NotApplicable ({self.citation})"
        return f"{self.kind} {self.value} ({self.citation})"


def binomial(n: int, r: int) -> int:
    """Exact C(n, r), zero when r > n; values beyond 64 bits raise Overflow."""
    if n < 0 or r < 0:
        raise InvalidParams("binomial arguments must be non-negative")
    value = comb(n, r)
    if value > UINT64_MAX:
        raise Overflow(f"C({n},{r}) does not fit in 64 bits")
    return value


def bipartite_edge_count(a: int, b: int, r: int) -> int:
    return binomial(a + b, r) - binomial(a, r) - binomial(b, r)


def _exact(q: Quantity, value: int, citation: str, rule: str) -> FormulaResult:
    return FormulaResult(q, value, "Exact", citation, rule)


def _lower(q: Quantity, value: int, citation: str, rule: str) -> FormulaResult:
    return FormulaResult(q, value, "LowerBound", citation, rule)


def _complete_rules(f: Complete, q: Quantity) -> list[FormulaResult]:
    n, r = f.n, f.r
    m = binomial(n, r)
    big = r > n // 2
    out = []
    if q is Quantity.D and r >= 2:
        out.append(_exact(q, n, "Thm 1", "thm1"))
    elif q is Quantity.DT and r >= 2:
        out.append(_exact(q, n // 2, "Thm 1", "thm1"))
    elif q is Quantity.ED:
        if big:
            out.append(_exact(q, m, "Thm 4, r > floor(n/2)", "lemma3"))
        elif n % r == 0:
            out.append(_exact(q, m * r // n, "Thm 4, r | n", "thm4"))
    elif q is Quantity.EDT and big and m >= 2:
        out.append(_exact(q, m // 2, "Thm 9, r > floor(n/2)", "lemma8"))
    return out


def _bipartite_rules(f: CompleteBipartite, q: Quantity) -> list[FormulaResult]:
    a, b, r = f.a, f.b, f.r
    n = a + b
    m = bipartite_edge_count(a, b, r)
    big = r > n // 2
    even_3 = r == 3 and a == b and a % 2 == 0
    out = []
    if q in (Quantity.D, Quantity.DT):
        if r >= 3 and n >= 3:
            out.append(_exact(q, n if q is Quantity.D else n // 2, "Thm 2", "thm2"))
        return out
    if q is Quantity.ED:
        if big:
            out.append(_exact(q, m, "Lemma 3, r > floor(n/2)", "lemma3"))
        if a == b == r:
            out.append(_exact(q, m // 2, "Thm 5 case 1, |X|=|Y|=r", "thm5-1"))
            out.append(_exact(q, m // 2, "Lemma 7, ed = degree", "thm5-1"))
        if even_3:
            out.append(_exact(q, m // (a // 2), f"Lemma 6, k={a}", "lemma6"))
        if a == b and a % r == 0 and a // r >= 2:
            k = a // r
            out.append(_lower(q, m // (2 * k), f"Thm 5 case 2, k={k}", "thm5-2"))
        if a != b and a % r == 0 and b % r == 0:
            k_min = min(a, b) // r
            out.append(_lower(q, m // (2 * k_min), f"Thm 5 case 3, k1={a // r}, k2={b // r}", "thm5-3"))
        return out
    if big and m >= 2:
        out.append(_exact(q, m // 2, "Lemma 8, r > floor(n/2)", "lemma8"))
    if a == b == r:
        out.append(_exact(q, m // 2, "Thm 10, |X|=|Y|=r", "thm10"))
        out.append(_exact(q, m // 2, "Lemma 12, edt = degree", "thm10"))
    if even_3 and a >= 4:
        out.append(_exact(q, m // (a // 2), f"Lemma 11, k={a}", "lemma6"))
    return out


def applicable_formulas(f: FamilyDescriptor, quantity: Quantity | str) -> list[FormulaResult]:
    """Every result that covers (f, quantity); Exact ones precede lower bounds."""
    q = Quantity(quantity)
    rules = _complete_rules(f, q) if isinstance(f, Complete) else _bipartite_rules(f, q)
    return sorted(rules, key=lambda res: res.kind != "Exact")


def formula(f: FamilyDescriptor, quantity: Quantity | str) -> FormulaResult:
    """Most specific closed-form result, or NotApplicable."""
    q = Quantity(quantity)
    rules = applicable_formulas(f, q)
    if rules:
        return rules[0]
    return FormulaResult(q, None, "NotApplicable", f"no closed form for {f.label()}, {q.value}", "")


def reduction(f: FamilyDescriptor | Hypergraph, quantity: Quantity | str) -> AdjacencyStructure:
    h = f if isinstance(f, Hypergraph) else f.hypergraph()
    return line_graph(h) if Quantity(quantity).on_edges else two_section(h)


def degree_identity_check(f: CompleteBipartite) -> tuple[int, int]:
    """(|E|, delta) for the balanced family |X| = |Y| = r, checking |E| = 2 delta."""
    if not isinstance(f, CompleteBipartite) or not f.a == f.b == f.r:
        raise InvalidParams("degree identity needs a complete bipartite family with |X| = |Y| = r")
    h = f.hypergraph()
    degs = set(degrees(h))
    if len(degs) != 1:
        raise AssertionError(f"family is not regular: degrees {sorted(degs)}")
    delta = degs.pop()
    if h.m != 2 * delta:
        raise AssertionError(f"|E| = {h.m} but 2 * delta = {2 * delta}")
    return h.m, delta


def _pairs(items: list[int]) -> list[list[int]]:
    """Consecutive pairs; an odd leftover joins the last pair."""
    classes = [items[i : i + 2] for i in range(0, len(items) - 1, 2)]
    if len(items) % 2 and classes:
        classes[-1].append(items[-1])
    return classes


def _complement_pairs(h: Hypergraph) -> list[list[int]]:
    index = {e: i for i, e in enumerate(h.edges)}
    everything = frozenset(range(h.n))
    used = set()
    classes = []
    for i, e in enumerate(h.edges):
        if i in used:
            continue
        j = index[tuple(sorted(everything - set(e)))]
        used.update((i, j))
        classes.append([i, j])
    return classes


def _intersecting_pairs(h: Hypergraph) -> list[list[int]]:
    """Perfect matching of edges into intersecting pairs.

    Each edge (colex order) takes the smallest unused edge it meets;
    backtracks when an edge is left without partner.
    """
    sets = [frozenset(e) for e in h.edges]
    m = len(sets)
    partner = [-1] * m

    def extend(i: int) -> bool:
        while i < m and partner[i] != -1:
            i += 1
        if i == m:
            return True
        for j in range(i + 1, m):
            if partner[j] == -1 and sets[i] & sets[j]:
                partner[i], partner[j] = j, i
                if extend(i + 1):
                    return True
                partner[i] = partner[j] = -1
        return False

    if m % 2 or not extend(0):
        raise SearchFailed("edges admit no pairing into intersecting pairs")
    return [[i, partner[i]] for i in range(m) if i < partner[i]]


def _star_classes(f: CompleteBipartite, h: Hypergraph) -> list[list[int]]:
    """3-uniform, |X| = |Y| = k even: for each perfect matching M of one side
    and each vertex y of the other, the k/2 edges {p + y : p in M} form a
    star that covers the whole first side."""
    k = f.a
    index = {e: i for i, e in enumerate(h.edges)}
    matchings = baranyai(k, 2).factors
    classes = []
    for offset, other in ((0, k), (k, 0)):
        for matching in matchings:
            for y in range(k):
                star = [tuple(sorted((p[0] + offset, p[1] + offset, y + other))) for p in matching]
                classes.append([index[e] for e in star])
    return classes


def _proof_pattern(f: CompleteBipartite) -> list[tuple[int, ...]]:
    """The first class of the block construction: per r-block of the smaller
    side, {x_first, y_1..y_{r-1}} and {x_rest, y_r}."""
    a, b, r = f.a, f.b, f.r
    small, large, small_off, large_off = (a, b, 0, a) if a <= b else (b, a, a, 0)
    balanced = a == b
    edges = []
    for block in range(small // r):
        xs = [small_off + block * r + i for i in range(r)]
        y0 = large_off + (block * r if balanced else 0)
        ys = [y0 + i for i in range(r)]
        edges.append(tuple(sorted([xs[0]] + ys[: r - 1])))
        edges.append(tuple(sorted(xs[1:] + [ys[r - 1]])))
    return edges


def _lower_bound_classes(f: CompleteBipartite, res: FormulaResult, budget: SolveBudget | None) -> DomaticPartition:
    h = f.hypergraph()
    adj = line_graph(h)
    index = {e: i for i, e in enumerate(h.edges)}
    seed = sorted(index[e] for e in _proof_pattern(f))
    try:
        part = find_partition(adj, res.value, res.quantity.total, [seed], budget, "edge")
    except BudgetExceeded as exc:
        raise SearchFailed(str(exc)) from None
    if part is None:
        raise SearchFailed(f"no {res.value}-class completion of the seeded pattern for {f.label()}")
    return part


def construct_partition(
    f: FamilyDescriptor,
    quantity: Quantity | str,
    rule: str | None = None,
    budget: SolveBudget | None = None,
) -> DomaticPartition:
    """Witness partition with exactly formula(f, quantity).value classes.

    ``rule`` picks a specific applicable result (e.g. "thm5-2" for a lower
    bound that a sharper exact rule would otherwise shadow).
    """
    q = Quantity(quantity)
    rules = applicable_formulas(f, q)
    if rule is not None:
        rules = [res for res in rules if res.rule == rule]
    if not rules:
        raise NotApplicable(f"no closed form for {f.label()}, {q.value}" + (f" under rule {rule}" if rule else ""))
    res = rules[0]
    kind = "edge" if q.on_edges else "vertex"
    h = f.hypergraph()

    if res.rule in ("thm1", "thm2"):
        items = list(range(h.n))
        classes = [[v] for v in items] if q is Quantity.D else _pairs(items)
    elif res.rule == "lemma3":
        classes = [[i] for i in range(h.m)]
    elif res.rule == "lemma8":
        classes = _pairs(list(range(h.m)))
    elif res.rule == "thm4":
        index = {e: i for i, e in enumerate(h.edges)}
        classes = [[index[e] for e in factor] for factor in baranyai(f.n, f.r).factors]
    elif res.rule == "thm5-1":
        classes = _complement_pairs(h)
    elif res.rule == "thm10":
        classes = _intersecting_pairs(h)
    elif res.rule == "lemma6":
        classes = _star_classes(f, h)
    elif res.rule in ("thm5-2", "thm5-3"):
        return _lower_bound_classes(f, res, budget)
    else:
        raise NotApplicable(f"no constructor for rule {res.rule}")

    if len(classes) != res.value:
        raise SearchFailed(f"constructor for {res.rule} produced {len(classes)} classes, expected {res.value}")
    return DomaticPartition.of(kind, q.total, classes)
