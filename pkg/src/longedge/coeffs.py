"""Universal coefficients extracted from template sums.

Everything in this module is an exact rational derived from the templates of
a fixed cogenus: the log-side width-sequence sums, their linearization, the
five linear-form coefficients, the end-of-range correction DiffQ, and the
singular corrections COR and COR''.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .graphs import Template, enumerate_templates
from .orderings import LinearForm, fit_linear_phi, phi_beta
from .series import RatSeries, sigma


@dataclass(frozen=True)
class CoeffTable:
    delta: int
    A: Fraction
    L: Fraction
    H: Fraction
    D: Fraction
    C: Fraction
    Ctilde: Fraction
    b: tuple[Fraction, ...]  # b[i-1] is the weight of v'_i, 1 <= i <= delta

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "A": str(self.A),
            "L": str(self.L),
            "H": str(self.H),
            "D": str(self.D),
            "C": str(self.C),
            "Ctilde": str(self.Ctilde),
            "b": [str(v) for v in self.b],
        }


class BetaStats(NamedTuple):
    area: int
    ll: int
    height: int
    idet: int


def beta_stats(beta: Sequence[int]) -> BetaStats:
    """Area, lattice length, height, and internal-determinant sum of widths."""
    beta = tuple(beta)
    m = len(beta) - 1
    if m == 0:
        raise ValueError("stats need height >= 1; a single width has no idet")
    area = beta[0] + beta[m] + 2 * sum(beta[1:m])
    ll = beta[0] + beta[m] + 2 * m
    idet = (beta[1] - beta[0]) - (beta[m] - beta[m - 1])
    return BetaStats(area, ll, m, idet)


@lru_cache(maxsize=None)
def template_data(delta: int) -> tuple[tuple[Template, LinearForm], ...]:
    """Templates of one cogenus with their fitted linear forms, cached."""
    return tuple((t, fit_linear_phi(t)) for t in enumerate_templates(delta))


def _shift_range(t: Template, m: int) -> range:
    return range(1 - t.epsilon0, m - t.length + t.epsilon1 + 1)


def q_beta_delta(beta: Sequence[int], delta: int) -> Fraction:
    """Log-transformed ordering sum over shifted templates, evaluated exactly."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    beta = tuple(beta)
    m = len(beta) - 1
    total = Fraction(0)
    for t, _ in template_data(delta):
        acc = Fraction(0)
        for k in _shift_range(t, m):
            acc += phi_beta(t.shift(k), beta)
        total += t.multiplicity * acc
    return total


def q_delta_linearized(beta: Sequence[int], delta: int) -> Fraction:
    """Same template sum with every term replaced by its fitted linear form."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    beta = tuple(beta)
    m = len(beta) - 1
    total = Fraction(0)
    for t, form in template_data(delta):
        ell = t.length
        acc = Fraction(0)
        for k in _shift_range(t, m):
            acc += form.evaluate(beta[k : k + ell])
        total += t.multiplicity * acc
    return total


@lru_cache(maxsize=None)
def _template_sums(delta: int) -> tuple[Fraction, ...]:
    """(A, L, H, D, C) for one cogenus, before the b column exists."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    a = l = h = d = c = l_alt = Fraction(0)
    for t, form in template_data(delta):
        mu = t.multiplicity
        ends = t.length - t.epsilon0 - t.epsilon1
        eta0 = form.eta[0]
        a += Fraction(mu) * form.zeta0 / 2
        l -= Fraction(mu) * form.zeta0 * ends / 2
        h += mu * (eta0 + form.zeta0 * ends)
        d -= mu * (form.zeta2 + form.zeta1 * (1 - t.epsilon0))
        c -= mu * eta0 * ends
        l_alt += Fraction(mu) * eta0 / 2
    if l != l_alt:
        raise ArithmeticError(
            f"the two formulas for L disagree at delta={delta}: {l} vs {l_alt}"
        )
    return a, l, h, d, c


@lru_cache(maxsize=None)
def template_coefficients(delta: int) -> CoeffTable:
    """The five universal sums over templates of one cogenus, plus the b column."""
    a, l, h, d, c = _template_sums(delta)
    b = tuple(b_coeffs(delta, i) for i in range(1, delta + 1))
    return CoeffTable(
        delta=delta, A=a, L=l, H=h, D=d, C=c, Ctilde=c - 4 * d - 4 * b[0], b=b
    )


def a_series(order: int) -> RatSeries:
    """exp(-2 sum A(d) t^d), the exponential of the leading coefficients."""
    if order < 1:
        raise ValueError("order must be >= 1")
    body = RatSeries(
        [Fraction(0)] + [-2 * _template_sums(d)[0] for d in range(1, order + 1)]
    )
    return body.exp()


@lru_cache(maxsize=None)
def b_coeffs(delta: int, i: int) -> Fraction:
    """Weight of the count of internal vertices of determinant i at cogenus delta."""
    if not 1 <= i:
        raise ValueError("i must be >= 1")
    if i > delta:
        return Fraction(0)
    g = a_series(delta).shift(1)  # t * A(t)
    g_i = RatSeries.one(delta)
    for _ in range(i):
        g_i = g_i * g
    total = Fraction(0)
    power = RatSeries.one(delta)
    for n in range(1, delta // i + 1):
        power = power * g_i  # g^(i*n)
        total += Fraction(sigma(n), n) * power[delta]
    return total


def diffq(p: int, delta: int) -> Fraction:
    """Deviation of the true sum from its linearization at widths p*(0,1,...,delta)."""
    if p < 0:
        raise ValueError("p must be >= 0")
    if p == 0:
        return Fraction(0)
    beta = tuple(p * j for j in range(delta + 1))
    return q_beta_delta(beta, delta) - q_delta_linearized(beta, delta)


def cor(p: int, delta: int) -> Fraction:
    """Correction attached to a top or bottom vertex of determinant p."""
    if p < 0:
        raise ValueError("p must be >= 0")
    if p == 0:
        return Fraction(0)
    tab = template_coefficients(delta)
    b1 = tab.b[0]
    bp = tab.b[p - 1] if p <= delta else Fraction(0)
    return (
        (2 - p) * tab.D
        + diffq(p, delta)
        + 2 * b1
        - bp
        - Fraction(tab.Ctilde, 6) * Fraction((p - 1) * (p - 2), p)
    )


def cor_doubleprime(p: int) -> Fraction:
    """Euler-characteristic defect of a cyclic quotient point of index p."""
    if p < 0:
        raise ValueError("p must be >= 0")
    if p == 0:
        return Fraction(0)
    return Fraction(2 * (p - 1) * (p - 2), p)
