"""Domination predicates, partition validation and exact domination number."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from hypdomatic.errors import Infeasible, IndexOutOfRange
from hypdomatic.hypergraph import AdjacencyStructure

Kind = Literal["vertex", "edge"]


@dataclass(frozen=True)
class DomaticPartition:
    """Ordered classes of item indices.

    ``kind`` says whether items are vertices or edges of the hypergraph;
    ``total`` whether each class is meant to be totally dominating.
    """

    kind: Kind
    total: bool
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, kind: Kind, total: bool, classes: Iterable[Iterable[int]]) -> "DomaticPartition":
        return cls(kind, total, tuple(tuple(sorted(c)) for c in classes))

    def __len__(self) -> int:
        return len(self.classes)

    def canonical(self) -> "DomaticPartition":
        """Same partition with classes ordered by their smallest item."""
        ordered = sorted(self.classes, key=lambda c: (c[0] if c else -1, c))
        return DomaticPartition(self.kind, self.total, tuple(ordered))


@dataclass(frozen=True)
class Failure:
    class_index: int
    reason: Literal["NotDominating", "NotTotalDominating"]
    witness: int


@dataclass
class ValidationReport:
    valid: bool
    failures: list[Failure] = field(default_factory=list)
    coverage_ok: bool = True
    missing: list[int] = field(default_factory=list)
    repeated: list[int] = field(default_factory=list)
    empty_classes: list[int] = field(default_factory=list)


def _mask_of(adj: AdjacencyStructure, items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        if not 0 <= i < adj.item_count:
            raise IndexOutOfRange(f"item {i} outside [0, {adj.item_count})", i)
        mask |= 1 << i
    return mask


def _dominated_mask(adj: AdjacencyStructure, members: int, total: bool) -> int:
    covered = 0 if total else members
    rest = members
    while rest:
        low = rest & -rest
        covered |= adj.masks[low.bit_length() - 1]
        rest ^= low
    return covered


def _first_missing(covered: int, count: int) -> int | None:
    missing = ~covered & ((1 << count) - 1)
    if not missing:
        return None
    return (missing & -missing).bit_length() - 1


def undominated_witness(adj: AdjacencyStructure, items: Iterable[int], total: bool = False) -> int | None:
    """Smallest item not (totally) dominated by ``items``, or None."""
    members = _mask_of(adj, items)
    return _first_missing(_dominated_mask(adj, members, total), adj.item_count)


def is_dominating(adj: AdjacencyStructure, items: Iterable[int]) -> bool:
    return undominated_witness(adj, items, total=False) is None


def is_total_dominating(adj: AdjacencyStructure, items: Iterable[int]) -> bool:
    return undominated_witness(adj, items, total=True) is None


def validate_partition(adj: AdjacencyStructure, partition: DomaticPartition) -> ValidationReport:
    """Check disjointness, full coverage and (total) domination of every class."""
    report = ValidationReport(valid=True)
    seen = 0
    repeated = 0
    for idx, cls in enumerate(partition.classes):
        mask = _mask_of(adj, cls)
        if not cls:
            report.empty_classes.append(idx)
        if len(set(cls)) != len(cls):
            for i in cls:
                if cls.count(i) > 1:
                    repeated |= 1 << i
        repeated |= seen & mask
        seen |= mask
    full = (1 << adj.item_count) - 1
    report.missing = [i for i in range(adj.item_count) if not (seen >> i) & 1]
    report.repeated = [i for i in range(adj.item_count) if (repeated >> i) & 1]
    report.coverage_ok = not (report.missing or report.repeated or report.empty_classes) and seen == full

    reason = "NotTotalDominating" if partition.total else "NotDominating"
    for idx, cls in enumerate(partition.classes):
        witness = undominated_witness(adj, cls, partition.total)
        if witness is not None:
            report.failures.append(Failure(idx, reason, witness))
    report.valid = report.coverage_ok and not report.failures
    return report


def domination_number(adj: AdjacencyStructure, total: bool = False) -> int:
    """Minimum size of a (total) dominating set.

    Iterative deepening: at each level branch on the undominated item with
    the fewest possible dominators.
    """
    count = adj.item_count
    if count == 0:
        return 0
    if total and adj.has_isolated():
        raise Infeasible("an isolated item has no total dominator")
    nbhd = [m if total else m | (1 << i) for i, m in enumerate(adj.masks)]
    full = (1 << count) - 1
    reach = max(bin(m).count("1") for m in nbhd)

    def search(covered: int, chosen: int, budget: int) -> bool:
        open_ = full & ~covered
        if not open_:
            return True
        if budget == 0 or bin(open_).count("1") > budget * reach:
            return False
        best = None
        best_cands = 0
        rest = open_
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            cands = nbhd[v] & ~chosen
            c = bin(cands).count("1")
            if best is None or c < best:
                best, best_cands = c, cands
                if c <= 1:
                    break
            rest ^= low
        while best_cands:
            low = best_cands & -best_cands
            u = low.bit_length() - 1
            if search(covered | nbhd[u], chosen | low, budget - 1):
                return True
            best_cands ^= low
        return False

    for size in range(1, count + 1):
        if search(0, 0, size):
            return size
    raise AssertionError("unreachable: the full item set always dominates")
