"""Truncated Dirichlet series of log-weighted gcd sums vs closed forms.

With F(s) = sum f(k)/k^s, G(s) = sum g(k)/k^s and
G_L(s) = sum g(k) L(k)/k^s (L(k) = log k!), the per-k identity for
u(k) = sum_{j<=k} s_k(j) log j factorizes term by term into

    U(s) = sum u(k)/k^s = -F'(s) G(s-1) + F(s) G_L(s),

absolutely convergent for Re s > max(sigma_f, sigma_g + 1).  Expanding
L(k) by the Stirling form turns G_L into
-G'(s-1) - G(s-1) - G'(s)/2 + log sqrt(2 pi) G(s) + Theta G(s+1) with
Theta in (0, 1/12), which gives bracketed closed forms once F and G are
zeta quotients.  Everything here is evaluated with both sides truncated
at the same K; convergence-trend assertions replace absolute equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._accum import dot
from .errors import DomainError, require
from .identities import identity_sum_table
from .stirling import log_factorial_table
from .tables import (MU, ONE, FunctionTable, abscissa, dirichlet_convolve,
                     sieve)
from .zeta import LOG_SQRT_2PI, constants

THETA_LO = 0.0
THETA_HI = 1.0 / 12.0

# coefficient of the (1 + log K)^2 / K^(s-2) truncation allowance; the
# catalog u(k) grow like k log^2 k times an O(1) factor, so the tail of
# sum u(k)/k^s beyond K is below this for the pairs used here
_TAIL_COEFF = 10.0


@dataclass(frozen=True)
class SeriesComparison:
    s: float
    truncation: int
    lhs: float
    rhs: float

    @property
    def gap(self) -> float:
        return abs(self.lhs - self.rhs)


@dataclass(frozen=True)
class ThetaBracket:
    s: float
    truncation: int
    lhs: float
    lo: float
    hi: float
    allowance: float

    @property
    def contains(self) -> bool:
        return self.lo <= self.lhs <= self.hi


def _powers(k_max: int, s: float) -> np.ndarray:
    return np.arange(1, k_max + 1, dtype=np.float64) ** (-s)


def dirichlet_partial_sum(f: FunctionTable, s: float, k_max: int,
                          log_weight: bool = False) -> float:
    """sum_{k<=K} f(k) (log k)^w / k^s with w = 0 or 1.

    Note F'(s) = -(the log-weighted sum).
    """
    require(k_max >= 1, "K must be >= 1")
    require(k_max <= f.n_max, f"K={k_max} beyond table range {f.n_max}")
    vals = f.values[1:k_max + 1] * _powers(k_max, s)
    if log_weight:
        vals = vals * np.log(np.arange(1, k_max + 1, dtype=np.float64))
    return float(np.sum(vals))


def log_factorial_partial_sum(g: FunctionTable, s: float, k_max: int) -> float:
    """sum_{k<=K} g(k) L(k) / k^s with exact L(k) = log k!."""
    require(k_max >= 1, "K must be >= 1")
    require(k_max <= g.n_max, f"K={k_max} beyond table range {g.n_max}")
    lf = log_factorial_table(k_max).log_factorial
    return dot(g.values[1:k_max + 1] * lf[1:k_max + 1], _powers(k_max, s))


def _u_partial_sum(f: FunctionTable, g: FunctionTable, s: float,
                   k_max: int) -> float:
    lf = log_factorial_table(k_max).log_factorial
    u = identity_sum_table(f.values, g.values, lf, k_max)
    return dot(u[1:], _powers(k_max, s))


def series_identity_compare(f: FunctionTable, g: FunctionTable, s: float,
                            k_max: int) -> SeriesComparison:
    """Truncated U(s) against -F'(s) G(s-1) + F(s) G_L(s) at the same K."""
    alpha = max(abscissa(f.spec), abscissa(g.spec) + 1.0)
    if s <= alpha:
        raise DomainError(f"s={s} inside divergence region (need s > {alpha})")
    require(k_max >= 1, "K must be >= 1")
    require(k_max <= min(f.n_max, g.n_max), "K beyond table range")
    lhs = _u_partial_sum(f, g, s, k_max)
    rhs = (dirichlet_partial_sum(f, s, k_max, log_weight=True)
           * dirichlet_partial_sum(g, s - 1.0, k_max)
           + dirichlet_partial_sum(f, s, k_max)
           * log_factorial_partial_sum(g, s, k_max))
    return SeriesComparison(s, k_max, lhs, rhs)


def _tail_allowance(s: float, k_max: int) -> float:
    return _TAIL_COEFF * (1.0 + math.log(k_max)) ** 2 * k_max ** (2.0 - s)


def series_theta_bracket(f: FunctionTable, s: float, k_max: int) -> ThetaBracket:
    """Truncated U_{f*mu,1}(s) against its zeta closed form bracket.

    rhs(theta) = (F z' - F' z) z(s-1)/z^2 - (z(s-1) + z'(s-1)) F/z
                 - F z'/(2 z) + log sqrt(2 pi) F + theta F z(s+1)/z

    evaluated with F, F' truncated at K and exact zeta values; the
    interval is [rhs(0), rhs(1/12)] widened by the truncation allowance.
    """
    require(s > max(abscissa(f.spec), 2.0), f"s={s} too small for the bracket")
    require(k_max >= 1, "K must be >= 1")
    require(k_max <= f.n_max, "K beyond table range")
    C = constants()
    mu = sieve(MU, f.n_max)
    fmu = dirichlet_convolve(f, mu)
    one = sieve(ONE, f.n_max)
    lhs = _u_partial_sum(fmu, one, s, k_max)

    big_f = dirichlet_partial_sum(f, s, k_max)
    big_f_prime = -dirichlet_partial_sum(f, s, k_max, log_weight=True)
    z = C.zeta(s)
    zp = C.zeta_prime(s)
    zm1 = C.zeta(s - 1.0)
    zpm1 = C.zeta_prime(s - 1.0)
    zp1 = C.zeta(s + 1.0)

    def rhs(theta: float) -> float:
        return ((big_f * zp - big_f_prime * z) * zm1 / z ** 2
                - (zm1 + zpm1) * big_f / z
                - big_f * zp / (2.0 * z)
                + LOG_SQRT_2PI * big_f
                + theta * big_f * zp1 / z)

    allowance = _tail_allowance(s, k_max)
    return ThetaBracket(s, k_max, lhs, rhs(THETA_LO) - allowance,
                        rhs(THETA_HI) + allowance, allowance)


@dataclass(frozen=True)
class MuSeriesReport:
    """Numerical comparison of two closed-form candidates for U_{id,mu}(s).

    Both equal z(s-1) z'(s)/(2 z(s)^2) + log sqrt(2 pi) z(s-1)/z(s)
    + Theta z(s-1)/z(s+1) plus a trailing part; the candidates differ in
    that trailing part:

      constant_tail:  -1
      ratio_tail:     -z'(s-1)/z(s-1) + (z(s)/z(s-1)) (z'(s-1)/z(s-1) - 1)

    The report carries the truncated series value and each candidate's
    bracket so callers can see which one the data supports.
    """

    s: float
    truncation: int
    lhs: float
    constant_tail_lo: float
    constant_tail_hi: float
    ratio_tail_lo: float
    ratio_tail_hi: float
    allowance: float

    @property
    def matches_constant_tail(self) -> bool:
        return self.constant_tail_lo <= self.lhs <= self.constant_tail_hi

    @property
    def matches_ratio_tail(self) -> bool:
        return self.ratio_tail_lo <= self.lhs <= self.ratio_tail_hi


def mu_series_report(s: float, k_max: int, id_table: FunctionTable,
                     mu_table: FunctionTable) -> MuSeriesReport:
    """Compare truncated U_{id,mu}(s) against both closed-form candidates."""
    require(s > 2.0, "the id,mu series needs s > 2")
    C = constants()
    lhs = _u_partial_sum(id_table, mu_table, s, k_max)
    z = C.zeta(s)
    zp = C.zeta_prime(s)
    zm1 = C.zeta(s - 1.0)
    zpm1 = C.zeta_prime(s - 1.0)
    zp1 = C.zeta(s + 1.0)
    head = lambda theta: (zm1 * zp / (2.0 * z ** 2) + LOG_SQRT_2PI * zm1 / z
                          + theta * zm1 / zp1)
    constant_tail = -1.0
    ratio_tail = -zpm1 / zm1 + (z / zm1) * (zpm1 / zm1 - 1.0)
    allowance = _tail_allowance(s, k_max)
    return MuSeriesReport(
        s, k_max, lhs,
        head(THETA_LO) + constant_tail - allowance,
        head(THETA_HI) + constant_tail + allowance,
        head(THETA_LO) + ratio_tail - allowance,
        head(THETA_HI) + ratio_tail + allowance,
        allowance,
    )
