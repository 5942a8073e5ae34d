"""h-transverse lattice polygons and the invariants of their toric surfaces.

A polygon is stored as its top width together with the per-height left and
right boundary directions, read top to bottom.  The right directions are
nonincreasing and the left ones nondecreasing; that is the default ordering,
and convexity of the polygon is equivalent to it.  Everything else -- width
sequences, vertex determinants, boundary reorderings and their local
decompositions, and the intersection numbers of the associated surface -- is
derived from this data.
"""

from __future__ import annotations

import operator
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, inf
from typing import Iterator, NamedTuple, Sequence

from .orderings import BetaSeq, beta_from_divergence


def _int_seq(values: Sequence[int], what: str) -> tuple[int, ...]:
    try:
        return tuple(operator.index(v) for v in values)
    except TypeError as exc:
        raise TypeError(f"{what} must be integers") from exc


@dataclass(frozen=True)
class HTPolygon:
    """Convex lattice polygon whose non-horizontal edges have unit height step.

    dt is the top width; left[i] and right[i] are the horizontal moves of the
    two boundary chains between heights i and i+1 below the top.
    """

    dt: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dt", operator.index(self.dt))
        object.__setattr__(self, "left", _int_seq(self.left, "left directions"))
        object.__setattr__(self, "right", _int_seq(self.right, "right directions"))
        if self.dt < 0:
            raise ValueError("top width must be nonnegative")
        if len(self.left) != len(self.right):
            raise ValueError("left and right direction sequences differ in length")
        if not self.left:
            raise ValueError("a polygon needs height at least 1")
        if any(a > b for a, b in zip(self.left, self.left[1:])):
            raise ValueError("left directions must be nondecreasing top to bottom")
        if any(a < b for a, b in zip(self.right, self.right[1:])):
            raise ValueError("right directions must be nonincreasing top to bottom")
        beta = self.beta()  # raises on a negative width
        if not any(beta):
            raise ValueError("zero-area polygon")

    @property
    def height(self) -> int:
        return len(self.left)

    @property
    def db(self) -> int:
        return self.dt + sum(r - l for l, r in zip(self.left, self.right))

    def beta(self) -> BetaSeq:
        divergence = (self.dt,) + tuple(
            r - l for l, r in zip(self.left, self.right)
        )
        return beta_from_divergence(divergence)

    def vertices(self) -> tuple[tuple[int, int], ...]:
        """Corner lattice points, counterclockwise from the top left."""
        m = self.height
        xl = [0]
        xr = [self.dt]
        for l, r in zip(self.left, self.right):
            xl.append(xl[-1] + l)
            xr.append(xr[-1] + r)
        corners: list[tuple[int, int]] = []
        # down the left chain, then across the bottom, then up the right chain
        for i in range(m + 1):
            y = m - i
            if 0 < i < m and self.left[i - 1] == self.left[i]:
                continue
            corners.append((xl[i], y))
        if self.db > 0:
            corners.append((xr[m], 0))
        for i in range(m, -1, -1):
            y = m - i
            if 0 < i < m and self.right[i - 1] == self.right[i]:
                continue
            if (xr[i], y) != corners[-1] and (xr[i], y) != corners[0]:
                corners.append((xr[i], y))
        return tuple(corners)


def from_directions(
    dt: int,
    left_runs: Sequence[Sequence[int]],
    right_runs: Sequence[Sequence[int]],
) -> HTPolygon:
    """Build a polygon from run-length encoded boundary directions.

    Each run is a (direction, length) pair; runs are sorted into the default
    ordering, so the multisets alone determine the polygon.
    """
    def expand(runs, what):
        out: list[int] = []
        for run in runs:
            direction, length = run
            direction = operator.index(direction)
            length = operator.index(length)
            if length < 1:
                raise ValueError(f"{what} run lengths must be positive")
            out.extend([direction] * length)
        return out

    left = sorted(expand(left_runs, "left"))
    right = sorted(expand(right_runs, "right"), reverse=True)
    return HTPolygon(dt, tuple(left), tuple(right))


def _edge_chain(vertices, i):
    a = vertices[i]
    b = vertices[(i + 1) % len(vertices)]
    return a, b, (b[0] - a[0], b[1] - a[1])


def from_vertices(vertices: Sequence[Sequence[int]]) -> HTPolygon:
    """Build a polygon from its lattice corners (either orientation).

    Collinear intermediate points are merged; the input must be a convex
    lattice polygon whose non-horizontal edges rise one unit per step, i.e.
    all edge normals have integral or infinite slope.
    """
    pts = [(operator.index(x), operator.index(y)) for x, y in vertices]
    if len(pts) >= 2 and pts[0] == pts[-1]:
        pts.pop()
    # drop repeated points
    pts = [p for i, p in enumerate(pts) if p != pts[i - 1]]
    if len(pts) < 3:
        raise ValueError("a polygon needs at least three distinct vertices")
    signed2 = sum(
        pts[i][0] * pts[(i + 1) % len(pts)][1]
        - pts[(i + 1) % len(pts)][0] * pts[i][1]
        for i in range(len(pts))
    )
    if signed2 == 0:
        raise ValueError("degenerate polygon: zero area")
    if signed2 < 0:
        pts.reverse()
    # merge collinear runs, then check strict convexity
    corners = []
    n = len(pts)
    for i in range(n):
        prev = pts[i - 1]
        cur = pts[i]
        nxt = pts[(i + 1) % n]
        cross = (cur[0] - prev[0]) * (nxt[1] - cur[1]) - (cur[1] - prev[1]) * (
            nxt[0] - cur[0]
        )
        if cross < 0:
            raise ValueError(f"not convex at vertex {cur}")
        if cross > 0:
            corners.append(cur)
    pts = corners
    for i in range(len(pts)):
        a, b, (dx, dy) = _edge_chain(pts, i)
        if dy != 0 and abs(dy) != gcd(abs(dx), abs(dy)):
            g = gcd(abs(dx), abs(dy))
            raise ValueError(
                f"not h-transverse: edge {a} -> {b} has primitive direction "
                f"({dx // g}, {dy // g})"
            )
    ys = [y for _, y in pts]
    ytop, ybot = max(ys), min(ys)
    m = ytop - ybot

    def width_bounds(y):
        xs = []
        for i in range(len(pts)):
            (ax, ay), (bx, by), (dx, dy) = _edge_chain(pts, i)
            if ay == by == y:
                xs.extend((ax, bx))
            elif min(ay, by) <= y <= max(ay, by) and dy != 0:
                x = Fraction(ax) + Fraction(dx, dy) * (y - ay)
                assert x.denominator == 1
                xs.append(int(x))
        return min(xs), max(xs)

    bounds = [width_bounds(ytop - i) for i in range(m + 1)]
    dt = bounds[0][1] - bounds[0][0]
    left = tuple(bounds[i][0] - bounds[i - 1][0] for i in range(1, m + 1))
    right = tuple(bounds[i][1] - bounds[i - 1][1] for i in range(1, m + 1))
    return HTPolygon(dt, left, right)


def beta_of(p: HTPolygon) -> BetaSeq:
    return p.beta()


class InternalVertex(NamedTuple):
    side: str  # "left" or "right"
    level: int  # vertical distance below the top
    det: int


def _runs(values: Sequence[int]) -> list[tuple[int, int]]:
    """(value, run length) pairs in order."""
    out: list[tuple[int, int]] = []
    for v in values:
        if out and out[-1][0] == v:
            out[-1] = (v, out[-1][1] + 1)
        else:
            out.append((v, 1))
    return out


def internal_vertices(p: HTPolygon) -> tuple[InternalVertex, ...]:
    """Direction-change vertices on both chains, top to bottom per side."""
    found = []
    for side, values in (("left", p.left), ("right", p.right)):
        level = 0
        runs = _runs(values)
        for (a, la), (b, _) in zip(runs, runs[1:]):
            level += la
            det = b - a if side == "left" else a - b
            found.append(InternalVertex(side, level, det))
    return tuple(found)


@dataclass(frozen=True)
class PolygonStats:
    area: int  # normalized: twice the Euclidean area
    ll: int  # lattice length of the boundary
    height: int
    idet: int  # total determinant of the internal vertices
    det: int  # total determinant of all vertices
    tdet: int
    bdet: int
    v: dict  # determinant -> count over all vertices
    vprime: dict  # determinant -> count over internal vertices
    min_edge: int  # shortest lattice length among all edges
    ell: object  # min over internal and extremal edges; inf if no internal vertices


def polygon_stats(p: HTPolygon) -> PolygonStats:
    beta = p.beta()
    m = p.height
    area = beta[0] + beta[m] + 2 * sum(beta[1:m])
    ll = p.dt + p.db + 2 * m

    internal = internal_vertices(p)
    tdet = (p.right[0] - p.left[0]) if p.dt == 0 else 0
    bdet = (p.left[-1] - p.right[-1]) if p.db == 0 else 0
    corner_dets = []
    for end_det, width in ((tdet, p.dt), (bdet, p.db)):
        if width > 0:
            corner_dets.extend((1, 1))
        else:
            corner_dets.append(end_det)

    vprime = Counter(v.det for v in internal)
    v_all = vprime + Counter(corner_dets)

    edges = []  # (lattice length, touches: number of internal endpoints)
    if p.dt > 0:
        edges.append((p.dt, 0))
    if p.db > 0:
        edges.append((p.db, 0))
    for values in (p.left, p.right):
        runs = _runs(values)
        k = len(runs)
        for j, (_, length) in enumerate(runs):
            touches = (j > 0) + (j < k - 1)
            edges.append((length, touches))

    return PolygonStats(
        area=area,
        ll=ll,
        height=m,
        idet=sum(v.det for v in internal),
        det=sum(v_all.elements()),
        tdet=tdet,
        bdet=bdet,
        v=dict(sorted(v_all.items())),
        vprime=dict(sorted(vprime.items())),
        min_edge=min(length for length, _ in edges),
        ell=min((length for length, t in edges if t > 0), default=inf),
    )


@dataclass(frozen=True)
class ToricInvariants:
    Lsq: int
    LK: int
    Ksq: Fraction
    c2: int
    c2tilde: int
    S_i: dict  # index i -> number of singular points of index i + 1
    S: int
    gorenstein: bool


def _normal_rays(p: HTPolygon) -> list[tuple[int, int]]:
    """Primitive outward edge normals in counterclockwise order."""
    rays = [(-1, -value) for value, _ in _runs(p.left)]
    if p.db > 0:
        rays.append((0, -1))
    rays.extend((1, value) for value, _ in reversed(_runs(p.right)))
    if p.dt > 0:
        rays.append((0, 1))
    return rays


def toric_invariants(p: HTPolygon) -> ToricInvariants:
    stats = polygon_stats(p)
    rays = _normal_rays(p)
    n = len(rays)

    def det2(u, v):
        return u[0] * v[1] - u[1] * v[0]

    ksq = Fraction(0)
    for i in range(n):
        d_before = det2(rays[i - 1], rays[i])
        d_after = det2(rays[i], rays[(i + 1) % n])
        d_skip = det2(rays[i - 1], rays[(i + 1) % n])
        ksq += (
            Fraction(1, d_before)
            + Fraction(1, d_after)
            - Fraction(d_skip, d_before * d_after)
        )

    s_i = {d - 1: count for d, count in stats.v.items() if d > 1}
    return ToricInvariants(
        Lsq=stats.area,
        LK=-stats.ll,
        Ksq=ksq,
        c2=sum(stats.v.values()),
        c2tilde=stats.det,
        S_i=s_i,
        S=sum((i + 1) * count for i, count in s_i.items()),
        gorenstein=stats.tdet in (0, 1, 2) and stats.bdet in (0, 1, 2),
    )


class Reordering(NamedTuple):
    left: tuple[int, ...]
    right: tuple[int, ...]
    cogenus: int
    beta: BetaSeq


def _bounded_reversal_perms(
    default_desc: tuple[int, ...], budget: int
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Permutations of a nonincreasing sequence with reversal weight <= budget.

    The weight of a permutation is the sum of value differences over the
    pairs appearing in increasing order; it is accumulated as each element is
    placed, by charging the gap to every larger element still unplaced.
    """
    remaining = Counter(default_desc)
    n = len(default_desc)
    prefix: list[int] = []

    def rec(cost: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if len(prefix) == n:
            yield tuple(prefix), cost
            return
        for v in sorted(remaining, reverse=True):
            if remaining[v] == 0:
                continue
            inc = sum(
                (w - v) * c for w, c in remaining.items() if w > v and c
            )
            if cost + inc > budget:
                continue
            remaining[v] -= 1
            prefix.append(v)
            yield from rec(cost + inc)
            prefix.pop()
            remaining[v] += 1

    yield from rec(0)


def reorderings(p: HTPolygon, delta: int) -> Iterator[Reordering]:
    """All direction reorderings of cogenus at most delta with valid widths."""
    if delta < 0:
        raise ValueError("delta must be >= 0")
    neg_left_default = tuple(-v for v in p.left)
    rights = list(_bounded_reversal_perms(p.right, delta))
    for neg_l, cost_l in _bounded_reversal_perms(neg_left_default, delta):
        left = tuple(-v for v in neg_l)
        for right, cost_r in rights:
            cost = cost_l + cost_r
            if cost > delta:
                continue
            divergence = (p.dt,) + tuple(
                r - l for l, r in zip(left, right)
            )
            try:
                beta = beta_from_divergence(divergence)
            except ValueError:
                continue
            yield Reordering(left, right, cost, beta)


def reversal_cogenus(p: HTPolygon, left: Sequence[int], right: Sequence[int]) -> int:
    """Total reversal weight of a reordering of the boundary directions."""
    left = tuple(left)
    right = tuple(right)
    if sorted(left) != sorted(p.left) or sorted(right) != sorted(p.right):
        raise ValueError("not a reordering of this polygon's directions")
    cost = 0
    for i, r in enumerate(right):
        cost += sum(s - r for s in right[i + 1 :] if s > r)
    for i, l in enumerate(left):
        cost += sum(l - s for s in left[i + 1 :] if s < l)
    return cost


class VLocalPiece(NamedTuple):
    vertex: InternalVertex
    word: tuple[int, ...]  # the directions in the vertex's window, in order
    cogenus: int


def _side_windows(values: Sequence[int], side: str):
    """Per-internal-vertex (vertex, adjacent value pair) for one chain."""
    runs = _runs(values)
    out = []
    level = 0
    for (a, la), (b, _) in zip(runs, runs[1:]):
        level += la
        det = b - a if side == "left" else a - b
        out.append((InternalVertex(side, level, det), (a, b)))
    return out


def _word_cogenus(word: Sequence[int], above: int, below: int, det: int) -> int:
    """det times the number of pairs with the lower run's value first."""
    inversions = 0
    early_belows = 0
    for c in word:
        if c == below:
            early_belows += 1
        elif c == above:
            inversions += early_belows
    return det * inversions


def vlocal_decompose(
    p: HTPolygon, reordering: Sequence[Sequence[int]] | Reordering
) -> tuple[VLocalPiece, ...]:
    """Split a reordering into its per-internal-vertex local pieces.

    Each piece records the two-direction word read off the window between the
    vertices above and below; the pieces' cogenera add up to the reordering's.
    Guaranteed to be a bijection only when every internal edge is at least as
    long as the reordering's cogenus.
    """
    left, right = reordering[0], reordering[1]
    delta = reversal_cogenus(p, left, right)
    internal_edges = []
    for values in (p.left, p.right):
        runs = _runs(values)
        internal_edges.extend(length for _, length in runs[1:-1])
    if any(length < delta for length in internal_edges):
        raise ValueError(
            "decomposition not guaranteed: an internal edge is shorter than "
            f"the reordering cogenus {delta}"
        )
    pieces = []
    for side, default, actual in (
        ("left", p.left, left),
        ("right", p.right, right),
    ):
        for vertex, (a, b) in _side_windows(default, side):
            word = tuple(c for c in actual if c in (a, b))
            cogenus = _word_cogenus(word, a, b, vertex.det)
            pieces.append(VLocalPiece(vertex, word, cogenus))
    total = sum(piece.cogenus for piece in pieces)
    if total != delta:
        raise ArithmeticError(
            "decomposition dropped reversal weight: a direction strayed past "
            "a whole edge, which the edge-length precondition should prevent"
        )
    if recombine_vlocal(p, pieces) != (tuple(left), tuple(right)):
        raise ArithmeticError("recombining the pieces does not restore the input")
    return tuple(pieces)


def recombine_vlocal(
    p: HTPolygon, pieces: Sequence[VLocalPiece]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Merge per-vertex words back into a single reordering.

    Within one chain, letters of runs two or more apart keep their default
    order, which pins down the unique interleaving consistent with all words.
    """
    by_vertex = {piece.vertex: piece.word for piece in pieces}
    out = {}
    for side, default in (("left", p.left), ("right", p.right)):
        runs = _runs(default)
        k = len(runs)
        words = []
        for vertex, (a, b) in _side_windows(default, side):
            word = by_vertex.get(vertex)
            if word is None:
                raise ValueError(f"missing piece for {vertex}")
            if sorted(word) != sorted(
                [a] * dict(runs)[a] + [b] * dict(runs)[b]
            ):
                raise ValueError(f"word for {vertex} has the wrong letters")
            words.append(word)
        remaining = [length for _, length in runs]
        pointers = [0] * len(words)
        merged = []
        while len(merged) < len(default):
            emitted = False
            for j in range(k):
                if remaining[j] == 0:
                    continue
                if any(remaining[i] for i in range(j - 1)):
                    continue
                value = runs[j][0]
                if j >= 1 and words[j - 1][pointers[j - 1]] != value:
                    continue
                if j <= k - 2 and words[j][pointers[j]] != value:
                    continue
                if j >= 1:
                    pointers[j - 1] += 1
                if j <= k - 2:
                    pointers[j] += 1
                remaining[j] -= 1
                merged.append(value)
                emitted = True
                break
            if not emitted:
                raise ValueError("inconsistent pieces: no merge order exists")
        out[side] = tuple(merged)
    return out["left"], out["right"]


def polygon_to_dict(p: HTPolygon) -> dict:
    return {
        "dt": p.dt,
        "left": [[value, length] for value, length in _runs(p.left)],
        "right": [[value, length] for value, length in _runs(p.right)],
    }


def polygon_from_dict(data: dict) -> HTPolygon:
    if "vertices" in data:
        return from_vertices(data["vertices"])
    try:
        return from_directions(data["dt"], data["left"], data["right"])
    except KeyError as exc:
        raise ValueError(
            "polygon JSON needs either a 'vertices' list or 'dt'/'left'/'right'"
        ) from exc
