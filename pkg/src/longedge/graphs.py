"""Weighted multigraphs on the vertex line 0,1,2,... used for node counting.

An edge joins two distinct vertices lo < hi and carries a positive integer
weight.  Edges of length 1 and weight 1 ("short" edges) are excluded; they
only ever appear implicitly, as the filler edges added when counting
orderings against a width sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True, order=True)
class Edge:
    lo: int
    hi: int
    weight: int = 1

    def __post_init__(self):
        if not 0 <= self.lo < self.hi:
            raise ValueError(f"edge needs 0 <= lo < hi, got ({self.lo}, {self.hi})")
        if self.weight < 1:
            raise ValueError(f"edge weight must be positive, got {self.weight}")
        if self.hi - self.lo == 1 and self.weight == 1:
            raise ValueError("length-1 weight-1 edges are not allowed")

    @property
    def span(self) -> int:
        return self.hi - self.lo

    @property
    def cogenus(self) -> int:
        # span * weight - 1; always >= 1 because short edges are excluded
        return self.span * self.weight - 1


def _coerce_edge(e) -> Edge:
    if isinstance(e, Edge):
        return e
    return Edge(*e)


@dataclass(frozen=True, eq=False)
class LongEdgeGraph:
    """An immutable multiset of edges, kept sorted by (lo, hi, weight)."""

    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        canon = tuple(sorted(_coerce_edge(e) for e in self.edges))
        object.__setattr__(self, "edges", canon)

    # equality ignores the subclass so enumerated templates compare equal
    # to plain graphs with the same edge multiset
    def __eq__(self, other):
        if isinstance(other, LongEdgeGraph):
            return self.edges == other.edges
        return NotImplemented

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        inner = ", ".join(f"({e.lo},{e.hi},{e.weight})" for e in self.edges)
        return f"{type(self).__name__}([{inner}])"

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_empty(self) -> bool:
        return not self.edges

    @cached_property
    def multiplicity(self) -> int:
        m = 1
        for e in self.edges:
            m *= e.weight * e.weight
        return m

    @cached_property
    def cogenus(self) -> int:
        return sum(e.cogenus for e in self.edges)

    @property
    def minv(self) -> int:
        if self.is_empty:
            raise ValueError("minv is undefined on the empty graph")
        return min(e.lo for e in self.edges)

    @property
    def maxv(self) -> int:
        if self.is_empty:
            raise ValueError("maxv is undefined on the empty graph")
        return max(e.hi for e in self.edges)

    @property
    def length(self) -> int:
        return self.maxv - self.minv

    def lambda_(self, j: int) -> int:
        """Total weight of edges straddling the gap between vertices j-1 and j."""
        return sum(e.weight for e in self.edges if e.lo < j <= e.hi)

    def olambda(self, j: int) -> int:
        """lambda_(j) minus the number of edges running exactly from j-1 to j."""
        return self.lambda_(j) - sum(
            1 for e in self.edges if e.lo == j - 1 and e.hi == j
        )

    @property
    def epsilon0(self) -> int:
        """1 iff every edge touching the leftmost occupied vertex has weight 1."""
        v = self.minv
        return int(all(e.weight == 1 for e in self.edges if e.lo == v))

    @property
    def epsilon1(self) -> int:
        """1 iff every edge touching the rightmost occupied vertex has weight 1."""
        v = self.maxv
        return int(all(e.weight == 1 for e in self.edges if e.hi == v))

    def shift(self, k: int) -> "LongEdgeGraph":
        if self.is_empty or k == 0:
            return LongEdgeGraph(self.edges)
        if self.minv + k < 0:
            raise ValueError(f"shift by {k} would push vertices below 0")
        return LongEdgeGraph(
            tuple(Edge(e.lo + k, e.hi + k, e.weight) for e in self.edges)
        )

    def is_template(self) -> bool:
        """True iff minv = 0 and every interior vertex sits strictly inside some edge."""
        if self.is_empty or self.minv != 0:
            return False
        return all(
            any(e.lo < i < e.hi for e in self.edges) for i in range(1, self.length)
        )

    def is_shifted_template(self) -> bool:
        if self.is_empty:
            return False
        return self.shift(-self.minv).is_template()


class Template(LongEdgeGraph):
    """A graph anchored at vertex 0 whose edges cover every interior vertex."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_template():
            raise ValueError(f"not a template: {tuple(self.edges)}")


def conjugate(g: LongEdgeGraph) -> LongEdgeGraph:
    """Reflect the graph end to end (vertex n maps to minv + maxv - n)."""
    s = g.minv + g.maxv
    edges = tuple(Edge(s - e.hi, s - e.lo, e.weight) for e in g.edges)
    return type(g)(edges)


def _edge_pool(delta: int, max_vertex: int) -> list[Edge]:
    pool = []
    for lo in range(max_vertex):
        for hi in range(lo + 1, max_vertex + 1):
            span = hi - lo
            for w in range(1, delta + 2):
                if span == 1 and w == 1:
                    continue
                if span * w - 1 > delta:
                    break
                pool.append(Edge(lo, hi, w))
    return sorted(pool)


def enumerate_graphs(delta: int, max_vertex: int) -> list[LongEdgeGraph]:
    """All graphs of the given cogenus with every vertex in [0, max_vertex].

    Edge multisets are built in nondecreasing canonical order, so each graph
    appears exactly once.  Every edge contributes cogenus >= 1, which bounds
    the recursion depth by delta.
    """
    if delta < 1:
        return []
    pool = _edge_pool(delta, max_vertex)
    out: list[LongEdgeGraph] = []

    def grow(start: int, chosen: list[Edge], remaining: int):
        if remaining == 0:
            out.append(LongEdgeGraph(tuple(chosen)))
            return
        for i in range(start, len(pool)):
            e = pool[i]
            if e.cogenus > remaining:
                continue
            chosen.append(e)
            grow(i, chosen, remaining - e.cogenus)
            chosen.pop()

    grow(0, [], delta)
    return sorted(out, key=lambda g: g.edges)


def enumerate_templates(delta: int) -> list[Template]:
    """All templates of the given cogenus, in canonical order.

    A template of cogenus d has length at most d+1: each edge of span s
    contributes cogenus >= s-1, and covering the interior forces the spans
    to add up to at least the length.
    """
    if delta < 1:
        return []
    return [
        Template(g.edges)
        for g in enumerate_graphs(delta, delta + 1)
        if g.is_template()
    ]
