"""Node counts of polarized toric surfaces, computed three independent ways.

For a polygon p and a node count delta, the routes are: a direct sum over
boundary reorderings and weighted graphs; the closed combinatorial form in
the polygon's width statistics; and the universal linear polynomial in the
intersection numbers of the surface.  The last two compute the logarithmic
count Q, related to the plain count N by an exponential transform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Mapping, Sequence

from .coeffs import b_coeffs, cor, diffq, template_coefficients
from .graphs import enumerate_graphs
from .orderings import p_beta_strict
from .polygon import (
    HTPolygon,
    polygon_stats,
    polygon_to_dict,
    reorderings,
    toric_invariants,
)
from .series import RatSeries, log_exp_coeffs


class Poly:
    """Sparse multivariate polynomial over the rationals.

    Terms are keyed by sorted ((name, power), ...) tuples; the empty key
    holds the constant term.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping):
        self.terms = {k: Fraction(c) for k, c in terms.items() if c}

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls({(): c})

    @classmethod
    def variable(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    def __add__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return Poly(terms)

    def __mul__(self, other: "Poly") -> "Poly":
        terms: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                powers = dict(ka)
                for name, exp in kb:
                    powers[name] = powers.get(name, 0) + exp
                key = tuple(sorted(powers.items()))
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
        return Poly(terms)

    def scale(self, c) -> "Poly":
        return Poly({k: v * Fraction(c) for k, v in self.terms.items()})

    def evaluate(self, values: Mapping[str, Rational]) -> Fraction:
        total = Fraction(0)
        for key, c in self.terms.items():
            term = c
            for name, exp in key:
                term *= Fraction(values.get(name, 0)) ** exp
            total += term
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Poly({self.terms!r})"


def _variables(delta: int) -> tuple[str, ...]:
    return ("x", "y", "z", "w", "s") + tuple(f"s{i}" for i in range(1, delta))


@dataclass(frozen=True)
class UniversalPolynomial:
    """Linear form giving Q at one node count, with its exp-transform mate."""

    delta: int
    linear: tuple  # ((variable, coefficient), ...) in canonical order
    t_poly: Poly  # the degree-delta polynomial giving N at this node count

    def coefficient(self, name: str) -> Fraction:
        return dict(self.linear).get(name, Fraction(0))

    def evaluate(
        self, x, y, z, w, s_all: Sequence[Rational] = ()
    ) -> Fraction:
        values = self._assignment(x, y, z, w, s_all)
        return sum(
            (c * Fraction(values.get(name, 0)) for name, c in self.linear),
            Fraction(0),
        )

    def evaluate_t(self, x, y, z, w, s_all: Sequence[Rational] = ()) -> Fraction:
        return self.t_poly.evaluate(self._assignment(x, y, z, w, s_all))

    @staticmethod
    def _assignment(x, y, z, w, s_all) -> dict:
        values = {"x": x, "y": y, "z": z, "w": w}
        for i, v in enumerate(s_all):
            values["s" if i == 0 else f"s{i}"] = v
        return values

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "coefficients": {name: str(c) for name, c in self.linear},
        }


@lru_cache(maxsize=None)
def _hat_coeffs(delta: int) -> tuple:
    """Canonical ((variable, coefficient), ...) of the linear form."""
    tab = template_coefficients(delta)
    b1 = tab.b[0]
    spine = Fraction(tab.Ctilde, 12)
    coeffs = [
        ("x", tab.A),
        ("y", -tab.L),
        ("z", spine),
        ("w", spine + tab.D + b1),
        ("s", -b1),
    ]
    coeffs.extend((f"s{i - 1}", tab.b[i - 1]) for i in range(2, delta + 1))
    return tuple((name, Fraction(c)) for name, c in coeffs)


@lru_cache(maxsize=None)
def that_delta(delta: int) -> UniversalPolynomial:
    """The universal linear form for the logarithmic count, plus its mate."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    return UniversalPolynomial(
        delta=delta,
        linear=_hat_coeffs(delta),
        t_poly=_t_polys(delta)[delta],
    )


@lru_cache(maxsize=None)
def _t_polys(delta_max: int) -> tuple[Poly, ...]:
    """Exp transform of the linear forms, as honest polynomials."""
    hats = [Poly({})]
    for d in range(1, delta_max + 1):
        poly = Poly({})
        for name, c in _hat_coeffs(d):
            poly = poly + Poly.variable(name).scale(c)
        hats.append(poly)
    out = [Poly.constant(1)]
    for n in range(1, delta_max + 1):
        acc = Poly({})
        for k in range(1, n + 1):
            acc = acc + hats[k].scale(k) * out[n - k]
        out.append(acc.scale(Fraction(1, n)))
    return tuple(out)


def t_delta(delta: int) -> Poly:
    """Polynomial whose value at the intersection numbers is the plain count."""
    if delta < 0:
        raise ValueError("delta must be >= 0")
    return _t_polys(delta)[delta]


def n_bruteforce(p: HTPolygon, delta: int) -> int:
    """Direct count: reorderings paired with weighted graphs of the rest."""
    if delta < 0:
        raise ValueError("delta must be >= 0")
    stats = polygon_stats(p)
    if stats.min_edge < delta - 1:
        raise ValueError(
            f"direct count needs every edge of length >= {delta - 1}; "
            f"the shortest edge has length {stats.min_edge}"
        )
    total = 0
    for ro in reorderings(p, delta):
        rest = delta - ro.cogenus
        if rest == 0:
            total += 1
            continue
        for g in enumerate_graphs(rest, len(ro.beta)):
            mu = g.multiplicity
            count = p_beta_strict(g, ro.beta)
            if count:
                total += mu * count
    return total


def q_polygon(p: HTPolygon, delta: int) -> Fraction:
    """Closed form in the polygon's width statistics."""
    stats = polygon_stats(p)
    _require_edges(stats.min_edge, delta)
    tab = template_coefficients(delta)
    total = (
        tab.A * stats.area
        + tab.L * stats.ll
        + tab.H * stats.height
        + tab.D * stats.idet
        + tab.C
    )
    total += diffq(stats.tdet, delta) + diffq(stats.bdet, delta)
    for i, count in stats.vprime.items():
        total += b_coeffs(delta, i) * count
    return total


def q_geometric(p: HTPolygon, delta: int) -> Fraction:
    """Universal linear form at the surface's intersection numbers."""
    stats = polygon_stats(p)
    _require_edges(stats.min_edge, delta)
    inv = toric_invariants(p)
    s_all = [Fraction(inv.S)] + [
        Fraction(inv.S_i.get(i, 0)) for i in range(1, delta)
    ]
    value = that_delta(delta).evaluate(
        inv.Lsq, inv.LK, inv.Ksq, inv.c2tilde, s_all
    )
    return value + cor(stats.tdet, delta) + cor(stats.bdet, delta)


def _require_edges(min_edge: int, delta: int) -> None:
    if delta < 1:
        raise ValueError("delta must be >= 1")
    if min_edge < delta:
        raise ValueError(
            f"closed forms need every edge of length >= {delta}; "
            f"the shortest edge has length {min_edge}"
        )


def n_from_q(q_values: Sequence[Rational]) -> list[Fraction]:
    """Plain counts from logarithmic ones; input and output start at delta=1."""
    return log_exp_coeffs([Fraction(v) for v in q_values])


def q_from_n(n_values: Sequence[Rational]) -> list[Fraction]:
    """Logarithmic counts from plain ones; input and output start at delta=1."""
    series = RatSeries([Fraction(1), *map(Fraction, n_values)])
    return list(series.log().coeffs[1:])


METHODS = ("bruteforce", "closed", "geometric")


@dataclass(frozen=True)
class NodeCountReport:
    """Per-method counts for one polygon, with exact agreement checks.

    n[method] lists N^0..N^d and q[method] lists Q^1..Q^d as far as the
    method's precondition reaches; skipped[method] maps the first skipped
    delta to the reason.
    """

    polygon: dict
    delta_max: int
    methods: tuple
    n: dict
    q: dict
    skipped: dict
    agree: bool
    disagreements: tuple

    def to_dict(self) -> dict:
        return {
            "polygon": self.polygon,
            "delta_max": self.delta_max,
            "methods": list(self.methods),
            "n": {m: [str(v) for v in vals] for m, vals in self.n.items()},
            "q": {m: [str(v) for v in vals] for m, vals in self.q.items()},
            "skipped": {m: dict(info) for m, info in self.skipped.items()},
            "agree": self.agree,
            "disagreements": [dict(d) for d in self.disagreements],
        }


def report(
    p: HTPolygon, delta_max: int, methods: Sequence[str] = METHODS
) -> NodeCountReport:
    if delta_max < 0:
        raise ValueError("delta_max must be >= 0")
    methods = tuple(methods)
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}; choose from {METHODS}")
    stats = polygon_stats(p)
    n_vals: dict = {}
    q_vals: dict = {}
    skipped: dict = {}
    for m in methods:
        ns: list = []
        qs: list = []
        for delta in range(1, delta_max + 1):
            if m == "bruteforce":
                if stats.min_edge < delta - 1:
                    skipped.setdefault(m, {})[str(delta)] = (
                        "precondition unmet: needs every edge of length "
                        f">= {delta - 1}, shortest is {stats.min_edge}"
                    )
                    break
                ns.append(Fraction(n_bruteforce(p, delta)))
            else:
                if stats.min_edge < delta:
                    skipped.setdefault(m, {})[str(delta)] = (
                        "precondition unmet: needs every edge of length "
                        f">= {delta}, shortest is {stats.min_edge}"
                    )
                    break
                fn = q_polygon if m == "closed" else q_geometric
                qs.append(fn(p, delta))
        if m == "bruteforce":
            qs = q_from_n(ns)
        else:
            ns = n_from_q(qs)
        n_vals[m] = [Fraction(1), *ns]
        q_vals[m] = qs

    disagreements = []
    for delta in range(1, delta_max + 1):
        for kind, table, offset in (("n", n_vals, 0), ("q", q_vals, 1)):
            present = {
                m: vals[delta - offset]
                for m, vals in table.items()
                if len(vals) > delta - offset
            }
            if len(set(present.values())) > 1:
                disagreements.append(
                    {
                        "delta": delta,
                        "kind": kind,
                        "values": {m: str(v) for m, v in present.items()},
                    }
                )
    return NodeCountReport(
        polygon=polygon_to_dict(p),
        delta_max=delta_max,
        methods=methods,
        n=n_vals,
        q=q_vals,
        skipped=skipped,
        agree=not disagreements,
        disagreements=tuple(disagreements),
    )
