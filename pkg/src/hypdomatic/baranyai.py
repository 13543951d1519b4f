"""Constructive Baranyai factorization of the complete r-uniform hypergraph.

Vertices are added one at a time. Each of the C(n-1, r-1) factor slots holds
n/r partial edges (possibly empty) that partition the vertices seen so far.
When vertex t arrives, every slot extends exactly one of its partial edges
by t. Choosing which one is an integral flow problem: slot -> partial edge
S (capacity = multiplicity of S in the slot), S -> sink (capacity =
C(n-t-1, r-|S|-1), the number of copies of S that still need vertex t).
A fractional flow saturating every slot always exists, so an integral one
does too.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

import networkx as nx

from hypdomatic.errors import InvalidParams, SearchFailed


@dataclass(frozen=True)
class Factorization:
    n: int
    r: int
    factors: tuple[tuple[tuple[int, ...], ...], ...]

    def edge_count(self) -> int:
        return sum(len(f) for f in self.factors)

    def check(self) -> list[str]:
        """Return a list of broken invariants (empty when valid)."""
        problems = []
        n, r = self.n, self.r
        if r < 1 or n % r:
            return [f"r={r} does not divide n={n}"]
        if len(self.factors) != comb(n - 1, r - 1):
            problems.append(f"expected {comb(n - 1, r - 1)} factors, got {len(self.factors)}")
        seen = set()
        for idx, factor in enumerate(self.factors):
            if len(factor) != n // r:
                problems.append(f"factor {idx} has {len(factor)} edges, expected {n // r}")
            verts = [v for e in factor for v in e]
            if sorted(verts) != list(range(n)):
                problems.append(f"factor {idx} is not a perfect matching of [0, {n})")
            for e in factor:
                if len(e) != r or len(set(e)) != r:
                    problems.append(f"factor {idx} has a malformed edge {e}")
                if e in seen:
                    problems.append(f"edge {e} appears in more than one factor")
                seen.add(e)
        if len(seen) != comb(n, r):
            problems.append(f"factors cover {len(seen)} distinct edges, expected {comb(n, r)}")
        return problems


def baranyai(n: int, r: int) -> Factorization:
    """Partition all r-subsets of [0, n) into perfect matchings (r must divide n)."""
    if r < 1 or n < r or n % r:
        raise InvalidParams(f"need 1 <= r <= n with r | n, got n={n}, r={r}")
    q = n // r
    slots = comb(n - 1, r - 1)
    rows: list[Counter] = [Counter({(): q}) for _ in range(slots)]

    for t in range(n):
        remaining = n - t - 1
        g = nx.DiGraph()
        demand: dict[tuple[int, ...], int] = {}
        for i, row in enumerate(rows):
            g.add_edge("src", ("row", i), capacity=1)
            for part, mult in sorted(row.items()):
                if len(part) >= r:
                    continue
                need = comb(remaining, r - len(part) - 1)
                if need == 0:
                    continue
                demand[part] = need
                g.add_edge(("row", i), ("set", part), capacity=mult)
        for part, need in sorted(demand.items()):
            g.add_edge(("set", part), "sink", capacity=need)
        value, flow = nx.maximum_flow(g, "src", "sink")
        if value != slots:
            raise SearchFailed(f"flow step at vertex {t} saturated {value} of {slots} slots")
        for i, row in enumerate(rows):
            chosen = next(
                node[1] for node, f in sorted(flow[("row", i)].items()) if f > 0
            )
            row[chosen] -= 1
            if not row[chosen]:
                del row[chosen]
            row[chosen + (t,)] += 1

    factors = tuple(tuple(sorted(row.elements())) for row in rows)
    return Factorization(n, r, factors)
