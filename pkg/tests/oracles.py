"""Slow, obviously-correct reference computations used only by the tests.

Nothing here touches bitmasks or the search engine.
"""

from itertools import combinations, product


def bipartite_edges_by_enumeration(a, b, r):
    """r-subsets of range(a+b) meeting both [0, a) and [a, a+b), via the full power set."""
    out = []
    for bits in product((0, 1), repeat=a + b):
        chosen = [v for v, bit in enumerate(bits) if bit]
        if len(chosen) != r:
            continue
        if any(v < a for v in chosen) and any(v >= a for v in chosen):
            out.append(tuple(chosen))
    return out


def edges_intersect(e, f):
    return any(v in f for v in e)


def edge_dominates(edges, chosen, total=False):
    """Edge domination checked directly on the hypergraph, no line graph."""
    chosen = set(chosen)
    for i, e in enumerate(edges):
        if not total and i in chosen:
            continue
        if not any(j != i and edges_intersect(e, edges[j]) for j in chosen):
            return False
    return True


def vertex_dominates(n, edges, chosen, total=False):
    chosen = set(chosen)
    for x in range(n):
        if not total and x in chosen:
            continue
        if not any(y != x and any(x in e and y in e for e in edges) for y in chosen):
            return False
    return True


def gamma_by_enumeration(adj, total=False):
    count = adj.item_count
    for size in range(1, count + 1):
        for subset in combinations(range(count), size):
            members = set(subset)
            if all((not total and x in members) or members & adj.neighbors[x] for x in range(count)):
                return size
    return None


def partition_is_valid(adj, classes, total):
    """Plain-set validity: a partition of all items into non-empty (total) dominating classes."""
    flat = [i for c in classes for i in c]
    if sorted(flat) != list(range(adj.item_count)) or any(len(c) == 0 for c in classes):
        return False
    for c in classes:
        members = set(c)
        for x in range(adj.item_count):
            if not total and x in members:
                continue
            if not members & adj.neighbors[x]:
                return False
    return True


def random_hypergraph(rng, max_n=8, max_m=8):
    """Random simple hypergraph with mixed edge sizes."""
    n = rng.randint(1, max_n)
    m = rng.randint(1, min(max_m, 2**n - 1))
    edges = set()
    while len(edges) < m:
        size = rng.randint(1, n)
        edges.add(tuple(sorted(rng.sample(range(n), size))))
    edges = list(edges)
    rng.shuffle(edges)
    return n, edges
