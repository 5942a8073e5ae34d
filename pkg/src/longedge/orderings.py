"""Ordering counts of a graph against a width sequence, and their log forms.

Given widths beta = (beta_0, ..., beta_M), a graph G is padded with
beta_{j-1} - lambda_j(G) unweighted filler edges in each gap j, and P_beta(G)
counts the total orderings of vertices and edges (each edge placed strictly
between its endpoints) up to permuting indistinguishable edges.  phi_beta is
the signed sum of P_beta products over ordered decompositions of the edge
multiset; on the semiallowable region it is linear in beta, and
fit_linear_phi recovers that linear form exactly.
"""

from __future__ import annotations

import enum
import itertools
import operator
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .graphs import Edge, LongEdgeGraph


class BetaSeq(tuple):
    """Width sequence (beta_0, ..., beta_M) of nonnegative integers."""

    def __new__(cls, entries):
        vals = tuple(operator.index(e) for e in entries)
        if not vals:
            raise ValueError("width sequence cannot be empty")
        if any(v < 0 for v in vals):
            raise ValueError(f"widths must be nonnegative, got {vals}")
        return super().__new__(cls, vals)

    @property
    def height(self) -> int:
        return len(self) - 1


def beta_from_divergence(d: Sequence[int]) -> BetaSeq:
    """Prefix sums (d_0, d_0+d_1, ...); rejects sequences that go negative."""
    out = list(itertools.accumulate(d))
    if not out:
        raise ValueError("not a valid width sequence: empty input")
    if min(out) < 0:
        raise ValueError(f"not a valid width sequence: prefix sums {out} go negative")
    return BetaSeq(out)


class Allowability(enum.Enum):
    NOT_ALLOWABLE = 0
    ALLOWABLE = 1
    STRICTLY_ALLOWABLE = 2


def allowability(g: LongEdgeGraph, beta: Sequence[int]) -> Allowability:
    beta = tuple(beta)
    m = len(beta) - 1
    if g.is_empty:
        return Allowability.STRICTLY_ALLOWABLE
    if g.maxv > m + 1:
        return Allowability.NOT_ALLOWABLE
    if any(beta[j - 1] < g.lambda_(j) for j in range(g.minv + 1, g.maxv + 1)):
        return Allowability.NOT_ALLOWABLE
    # strictness looks at the ends of the ambient vertex range, not of g
    strict = all(e.weight == 1 for e in g.edges if e.lo == 0 or e.hi == m + 1)
    return Allowability.STRICTLY_ALLOWABLE if strict else Allowability.ALLOWABLE


def is_semiallowable(g: LongEdgeGraph, beta: Sequence[int]) -> bool:
    beta = tuple(beta)
    m = len(beta) - 1
    if g.is_empty:
        return True
    if g.maxv > m + 1:
        return False
    return all(
        beta[j - 1] >= g.olambda(j) for j in range(g.minv + 1, g.maxv + 1)
    )


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    # weak compositions of n into k ordered parts
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first, *rest)


@lru_cache(maxsize=None)
def _p_count(edges: tuple[Edge, ...], beta: tuple[int, ...]) -> int:
    g = LongEdgeGraph(edges)
    gaps = list(range(g.minv + 1, g.maxv + 1))
    filler = {j: beta[j - 1] - g.lambda_(j) for j in gaps}
    classes = sorted(Counter(edges).items())
    # per class, all ways to spread its copies over the gaps it straddles
    spreads = []
    for e, mult in classes:
        span = list(range(e.lo + 1, e.hi + 1))
        spreads.append([(span, c) for c in _compositions(mult, len(span))])
    total = 0
    for combo in itertools.product(*spreads):
        in_gap: dict[int, list[int]] = {j: [] for j in gaps}
        for span, counts in combo:
            for j, c in zip(span, counts):
                if c:
                    in_gap[j].append(c)
        term = 1
        for j in gaps:
            placed = sum(in_gap[j])
            # interleave the placed edges with the identical filler edges,
            # then order the placed ones among themselves
            term *= comb(filler[j] + placed, placed) * factorial(placed)
            for c in in_gap[j]:
                term //= factorial(c)
        total += term
    return total


def p_beta(g: LongEdgeGraph, beta: Sequence[int]) -> int:
    """Number of distinct extended orderings of g against the widths beta."""
    beta = tuple(beta)
    if g.is_empty:
        return 1
    if allowability(g, beta) is Allowability.NOT_ALLOWABLE:
        return 0
    return _p_count(g.edges, beta)


def p_beta_strict(g: LongEdgeGraph, beta: Sequence[int]) -> int:
    beta = tuple(beta)
    if allowability(g, beta) is not Allowability.STRICTLY_ALLOWABLE:
        return 0
    return p_beta(g, beta)


@lru_cache(maxsize=None)
def _edge_partitions(
    edges: tuple[Edge, ...],
) -> tuple[tuple[tuple[Edge, ...], ...], ...]:
    """Unordered decompositions of the edge multiset into nonempty parts.

    Parts are canonical sorted tuples; identical edges are interchangeable, so
    decompositions are deduplicated as multisets of parts.
    """
    if not edges:
        return ((),)
    first, rest = edges[0], edges[1:]
    seen = set()
    for r in range(len(rest) + 1):
        for picks in set(itertools.combinations(rest, r)):
            part = tuple(sorted((first, *picks)))
            remaining = list(rest)
            for x in picks:
                remaining.remove(x)
            for sub in _edge_partitions(tuple(remaining)):
                seen.add(tuple(sorted((part, *sub))))
    return tuple(seen)


def _phi(g: LongEdgeGraph, beta: tuple[int, ...], count) -> Fraction:
    if g.is_empty:
        return Fraction(0)
    total = Fraction(0)
    for partition in _edge_partitions(g.edges):
        pieces = [count(LongEdgeGraph(part), beta) for part in partition]
        if 0 in pieces:
            continue
        i = len(partition)
        # each unordered decomposition stands for i!/prod(mult!) ordered tuples
        tuples = factorial(i) // prod(
            factorial(m) for m in Counter(partition).values()
        )
        total += Fraction((-1) ** (i + 1) * tuples * prod(pieces), i)
    return total


def phi_beta(g: LongEdgeGraph, beta: Sequence[int]) -> Fraction:
    """Signed decomposition sum of p_beta; the log-side weight of g."""
    return _phi(g, tuple(beta), p_beta)


def phi_beta_strict(g: LongEdgeGraph, beta: Sequence[int]) -> Fraction:
    return _phi(g, tuple(beta), p_beta_strict)


@dataclass(frozen=True)
class LinearForm:
    """Affine form c_0 + sum_j c_j * beta_{minv+j-1} with exact coefficients.

    eta[0] is the constant term; eta[j] for 1 <= j <= ell multiplies the
    width at position minv+j-1.
    """

    eta: tuple[Fraction, ...]
    minv: int = 0

    @property
    def ell(self) -> int:
        return len(self.eta) - 1

    def _zeta(self, i: int) -> Fraction:
        return sum(
            (comb(j - 1, i) * self.eta[j] for j in range(1, len(self.eta))),
            Fraction(0),
        )

    @property
    def zeta0(self) -> Fraction:
        return self._zeta(0)

    @property
    def zeta1(self) -> Fraction:
        return self._zeta(1)

    @property
    def zeta2(self) -> Fraction:
        return self._zeta(2)

    def evaluate(self, beta: Sequence[int]) -> Fraction:
        return self.eta[0] + sum(
            (
                self.eta[j] * beta[self.minv + j - 1]
                for j in range(1, len(self.eta))
            ),
            Fraction(0),
        )


def fit_linear_phi(g: LongEdgeGraph) -> LinearForm:
    """Recover the linear form that phi_beta takes on the semiallowable region.

    phi_beta only reads the widths at positions minv..maxv-1, and any widths
    >= cogenus+2 are semiallowable with room for unit bumps, so the form is
    pinned down by one base point and one bump per position.
    """
    if g.is_empty:
        raise ValueError("fit_linear_phi is undefined on the empty graph")
    d = g.cogenus
    lo, hi = g.minv, g.maxv
    base_val = d + 2
    base = [base_val] * hi  # height M = maxv-1, the smallest valid ambient range
    f0 = phi_beta(g, base)
    coeffs = []
    for pos in range(lo, hi):
        bumped = list(base)
        bumped[pos] += 1
        coeffs.append(phi_beta(g, bumped) - f0)
    eta0 = f0 - base_val * sum(coeffs)
    form = LinearForm((Fraction(eta0), *map(Fraction, coeffs)), minv=lo)
    for probe in (
        [d + 5] * hi,
        [d + 2 + (i % 3) for i in range(hi)],
    ):
        if phi_beta(g, probe) != form.evaluate(probe):
            raise ArithmeticError(
                f"fitted form disagrees with direct evaluation at {probe}; "
                "linearity is guaranteed there, so this is a bug"
            )
    return form
