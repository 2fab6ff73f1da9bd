"""Gcd-sum identities and their summatory log-weighted averages.

Core objects, for tables f, g and integers k, j:

- ``anderson_apostol(f, g, k, j)``: s_k(j) = sum_{d | gcd(k,j)} f(d) g(k/d);
  the Ramanujan sum c_k(j) is the special case f = id, g = mu.
- ``apostol_log_sum*``: u(k) = sum_{j<=k} s_k(j) log j, computed either by
  the brute-force double sum (oracle) or through the exact identity

      u(k) = (f.log * g.id)(k) + (f * g.L)(k),      L(m) = log m!,

  which is the production path for summatory work.
- ``apostol_log_average(f, g, x)``: sum_{k<=x} u(k)/k, and its exact
  six-term expansion over pairs d*l <= x obtained by replacing L(l) with
  the Stirling form l log l - l + (1/2) log l + log sqrt(2 pi) + rho(l)
  (``apostol_log_average_terms``).
- ``gcd_log_average(f, x)``: sum_{k<=x} (1/k) sum_{j<=k} f(gcd(k,j)) log j,
  evaluated as the (f*mu, 1) case of the above since
  sum_{d | gcd} (f*mu)(d) = f(gcd).
- ``cesaro_*``: the unweighted identity sum_{j<=k} f(gcd(j,k)) = (f*phi)(k)
  and its summatory average.

All sums over x cut at floor(x); an integer x includes k = x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._accum import dot, fsum, prefix_with_zero
from .errors import DomainError, require
from .stirling import log_factorial_table
from .tables import (LOG, MU, ONE, PHI, VON_MANGOLDT, FunctionSpec,
                     FunctionTable, _convolve_values, convolve, divisors_of,
                     sieve_values)
from .zeta import LOG_SQRT_2PI


@dataclass(frozen=True)
class GcdSumResult:
    """Direct vs identity-based value of sum_j s_k(j) log j."""

    k: int
    direct: float
    via_identity: float
    abs_gap: float


@dataclass(frozen=True)
class AverageDecomposition:
    """The six exact components of sum_{k<=x} u(k)/k over pairs d*l <= x.

    log_d_term       sum (f(d) log d / d) g(l)
    log_l_term       sum (f(d)/d) g(l) log l
    unit_term        -sum (f(d)/d) g(l)
    half_log_term    (1/2) sum (f(d)/d) g(l) log l / l
    const_term       log sqrt(2 pi) * sum (f(d)/d) g(l)/l
    remainder_term   sum (f(d)/d) g(l) rho(l)/l   (exact Stirling remainder)

    remainder_bound is (1/12) sum |f(d)|/d |g(l)|/l^2, which dominates
    |remainder_term| because 0 < rho(l) < 1/(12 l).
    """

    x: float
    log_d_term: float
    log_l_term: float
    unit_term: float
    half_log_term: float
    const_term: float
    remainder_term: float
    remainder_bound: float

    @property
    def terms(self) -> tuple[float, ...]:
        return (self.log_d_term, self.log_l_term, self.unit_term,
                self.half_log_term, self.const_term, self.remainder_term)

    @property
    def total(self) -> float:
        return fsum(self.terms)


def _check_tables(f: FunctionTable, g: FunctionTable, k: int) -> None:
    require(k >= 1, "k must be >= 1")
    if k > f.n_max or k > g.n_max:
        raise DomainError(f"k={k} outside table range "
                          f"({f.n_max}, {g.n_max})")


def anderson_apostol(f: FunctionTable, g: FunctionTable, k: int, j: int) -> float:
    """s_k(j) = sum_{d | gcd(k,j)} f(d) g(k/d)."""
    _check_tables(f, g, k)
    require(j >= 1, "j must be >= 1")
    m = math.gcd(k, j)
    return fsum(f.values[d] * g.values[k // d] for d in divisors_of(m))


def ramanujan_sum(k: int, j: int) -> int:
    """c_k(j) = sum_{d | gcd(j,k)} d mu(k/d), exact integer arithmetic."""
    require(k >= 1 and j >= 1, "k and j must be >= 1")
    from .tables import mobius_of
    m = math.gcd(k, j)
    return sum(d * mobius_of(k // d) for d in divisors_of(m))


def _s_by_gcd(fv: np.ndarray, gv: np.ndarray, k: int) -> tuple[list[int], np.ndarray]:
    """s_k evaluated at every possible gcd value (the divisors of k)."""
    divs = divisors_of(k)
    table = np.zeros(k + 1)
    for m in divs:
        table[m] = fsum(fv[d] * gv[k // d] for d in divs if m % d == 0)
    return divs, table


def apostol_log_sum_direct(f: FunctionTable, g: FunctionTable, k: int) -> float:
    """Brute-force sum_{j<=k} s_k(j) log j; the oracle path."""
    _check_tables(f, g, k)
    _, table = _s_by_gcd(f.values, g.values, k)
    j = np.arange(1, k + 1)
    logs = sieve_values(LOG, k)
    return dot(logs[1:k + 1], table[np.gcd(j, k)])


def apostol_log_sum(f: FunctionTable, g: FunctionTable, k: int) -> float:
    """sum_{j<=k} s_k(j) log j through the exact log-factorial identity."""
    _check_tables(f, g, k)
    lf = log_factorial_table(k).log_factorial
    fv, gv = f.values, g.values
    parts = []
    for d in divisors_of(k):
        l = k // d
        parts.append(fv[d] * (math.log(d) * gv[l] * l + gv[l] * lf[l]))
    return fsum(parts)


def log_sum_audit(f: FunctionTable, g: FunctionTable, k: int) -> GcdSumResult:
    direct = apostol_log_sum_direct(f, g, k)
    ident = apostol_log_sum(f, g, k)
    return GcdSumResult(k, direct, ident, abs(direct - ident))


def toth_identity(k: int) -> tuple[float, float]:
    """Both sides of the log-weighted Ramanujan-sum average identity.

    lhs = (1/k) sum_{j<=k} c_k(j) log j
    rhs = Lambda(k) + sum_{d|k} (mu(d)/d) log d!
    """
    require(k >= 1, "k must be >= 1")
    mu = sieve_values(MU, k)
    logs = sieve_values(LOG, k)
    lam = sieve_values(VON_MANGOLDT, k)
    lf = log_factorial_table(k).log_factorial

    divs = divisors_of(k)
    c_by = np.zeros(k + 1)
    for m in divs:
        c_by[m] = fsum(d * mu[k // d] for d in divs if m % d == 0)
    j = np.arange(1, k + 1)
    lhs = dot(logs[1:k + 1], c_by[np.gcd(j, k)]) / k
    rhs = float(lam[k]) + fsum(mu[d] / d * lf[d] for d in divs)
    return lhs, rhs


def cesaro_identity(f: FunctionTable, k: int) -> tuple[float, float]:
    """sum_{j<=k} f(gcd(j,k)) against (f*phi)(k)."""
    require(k >= 1, "k must be >= 1")
    require(k <= f.n_max, f"k={k} outside table range {f.n_max}")
    phi = sieve_values(PHI, k)
    j = np.arange(1, k + 1)
    lhs = float(np.take(f.values, np.gcd(j, k)).sum())
    rhs = fsum(f.values[d] * phi[k // d] for d in divisors_of(k))
    return lhs, rhs


# ---------------------------------------------------------------------------
# summatory averages


def _cut(x: float, n_max: int) -> int:
    require(x >= 1.0, "x must be >= 1")
    n = int(math.floor(x))
    require(n <= n_max, f"x={x} beyond table range {n_max}")
    return n


def identity_sum_table(fv: np.ndarray, gv: np.ndarray,
                       log_fact: np.ndarray, n: int) -> np.ndarray:
    """u(k) for all k <= n via the identity, by the divisor double loop."""
    larr = np.arange(n + 1, dtype=np.float64)
    g_id = gv[:n + 1] * larr
    g_lf = gv[:n + 1] * log_fact[:n + 1]
    u = np.zeros(n + 1)
    for d in (np.nonzero(fv[1:n + 1])[0] + 1):
        m = n // d
        u[d::d] += (fv[d] * math.log(d)) * g_id[1:m + 1] + fv[d] * g_lf[1:m + 1]
    return u


@lru_cache(maxsize=32)
def _average_profile_cached(f_spec: FunctionSpec, g_spec: FunctionSpec,
                            capacity: int) -> np.ndarray:
    fv = sieve_values(f_spec, capacity)
    gv = sieve_values(g_spec, capacity)
    lf = log_factorial_table(capacity).log_factorial
    u = identity_sum_table(fv, gv, lf, capacity)
    u[1:] /= np.arange(1, capacity + 1, dtype=np.float64)
    profile = prefix_with_zero(u)
    profile.setflags(write=False)
    return profile


def _pow2_ceil(n: int) -> int:
    return 1 << max(0, (n - 1).bit_length())


def apostol_log_average_profile(f_spec: FunctionSpec, g_spec: FunctionSpec,
                                n: int) -> np.ndarray:
    """Array A with A[m] = sum_{k<=m} u(k)/k for m = 0..n (cached by spec)."""
    require(n >= 1, "n must be >= 1")
    cap = max(_pow2_ceil(n), 1024)
    return _average_profile_cached(f_spec, g_spec, cap)[:n + 1]


def apostol_log_average(f: FunctionTable, g: FunctionTable, x: float) -> float:
    """sum_{k<=x} u(k)/k with u through the identity path."""
    n = _cut(x, min(f.n_max, g.n_max))
    lf = log_factorial_table(n).log_factorial
    u = identity_sum_table(f.values, g.values, lf, n)
    k = np.arange(1, n + 1, dtype=np.float64)
    return dot(u[1:], 1.0 / k)


def apostol_log_average_terms(f: FunctionTable, g: FunctionTable,
                              x: float) -> AverageDecomposition:
    """Exact six-term expansion of ``apostol_log_average`` over d*l <= x."""
    n = _cut(x, min(f.n_max, g.n_max))
    table = log_factorial_table(n)
    larr = np.arange(n + 1, dtype=np.float64)
    logs = sieve_values(LOG, n)
    gv = g.values[:n + 1]

    inv_l = np.zeros(n + 1)
    inv_l[1:] = 1.0 / larr[1:]
    cg = prefix_with_zero(gv)
    cg_log = prefix_with_zero(gv * logs)
    cg_log_over = prefix_with_zero(gv * logs * inv_l)
    cg_over = prefix_with_zero(gv * inv_l)
    cg_rho = prefix_with_zero(gv * table.rho[:n + 1] * inv_l)
    cg_abs = prefix_with_zero(np.abs(gv) * inv_l * inv_l)

    d = np.arange(1, n + 1, dtype=np.int64)
    m = n // d
    fd = f.values[1:n + 1]
    w_log = fd * logs[1:n + 1] / d
    w = fd / d

    return AverageDecomposition(
        x=float(x),
        log_d_term=dot(w_log, cg[m]),
        log_l_term=dot(w, cg_log[m]),
        unit_term=-dot(w, cg[m]),
        half_log_term=0.5 * dot(w, cg_log_over[m]),
        const_term=LOG_SQRT_2PI * dot(w, cg_over[m]),
        remainder_term=dot(w, cg_rho[m]),
        remainder_bound=dot(np.abs(w), cg_abs[m]) / 12.0,
    )


def stirling_remainder_term(f_spec: FunctionSpec, g_spec: FunctionSpec,
                            x: float) -> float:
    """The exact remainder component sum_{dl<=x} (f(d)/d) g(l) rho(l)/l."""
    require(x >= 1.0, "x must be >= 1")
    n = int(math.floor(x))
    fv = sieve_values(f_spec, n)
    gv = sieve_values(g_spec, n)
    rho = log_factorial_table(n).rho
    larr = np.arange(n + 1, dtype=np.float64)
    inv_l = np.zeros(n + 1)
    inv_l[1:] = 1.0 / larr[1:]
    cg_rho = prefix_with_zero(gv[:n + 1] * rho[:n + 1] * inv_l)
    d = np.arange(1, n + 1, dtype=np.int64)
    return dot(fv[1:n + 1] / d, cg_rho[n // d])


def _with_mu(f: FunctionTable, n: int) -> FunctionTable:
    """Table of f*mu on 1..n built from the given table's values."""
    fmu = _convolve_values(f.values, sieve_values(MU, n), n)
    fmu.setflags(write=False)
    return FunctionTable(convolve(f.spec, MU), n, fmu)


def gcd_log_average(f: FunctionTable, x: float) -> float:
    """sum_{k<=x} (1/k) sum_{j<=k} f(gcd(k,j)) log j.

    Evaluated exactly as the (f*mu, 1) case of ``apostol_log_average``,
    since sum_{d | gcd} (f*mu)(d) = f(gcd); same identity path underneath.
    """
    n = _cut(x, f.n_max)
    one = FunctionTable(ONE, n, sieve_values(ONE, n))
    return apostol_log_average(_with_mu(f, n), one, x)


def gcd_log_average_profile(f_spec: FunctionSpec, n: int) -> np.ndarray:
    return apostol_log_average_profile(convolve(f_spec, MU), ONE, n)


def gcd_log_average_terms(f: FunctionTable, x: float) -> AverageDecomposition:
    """Exact expansion of ``gcd_log_average``; grouping the first three
    terms gives sum (f*phi)(n)/n log(n/e), the fourth is
    (1/2) sum (f*Lambda)(n)/n and the fifth log sqrt(2 pi) sum f(n)/n."""
    n = _cut(x, f.n_max)
    one = FunctionTable(ONE, n, sieve_values(ONE, n))
    return apostol_log_average_terms(_with_mu(f, n), one, x)


def cesaro_average(f: FunctionTable, x: float) -> tuple[float, float]:
    """Both routes of sum_{k<=x}(1/k) sum_j f(gcd(j,k)) (no log weight).

    lhs is the double loop, rhs is sum_{n<=x} (f*phi)(n)/n.
    """
    n = _cut(x, f.n_max)
    lhs_terms = np.empty(n)
    for k in range(1, n + 1):
        j = np.arange(1, k + 1)
        lhs_terms[k - 1] = np.take(f.values, np.gcd(j, k)).sum() / k
    lhs = float(np.sum(lhs_terms))
    conv = _convolve_values(f.values, sieve_values(PHI, n), n)
    rhs = dot(conv[1:n + 1], 1.0 / np.arange(1, n + 1, dtype=np.float64))
    return lhs, rhs


def cesaro_average_profile(f_spec: FunctionSpec, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Cumulative lhs and rhs of ``cesaro_average`` at every integer x <= n."""
    require(n >= 1, "n must be >= 1")
    fv = sieve_values(f_spec, n)
    inner = np.empty(n + 1)
    inner[0] = 0.0
    for k in range(1, n + 1):
        j = np.arange(1, k + 1)
        inner[k] = np.take(fv, np.gcd(j, k)).sum() / k
    lhs = prefix_with_zero(inner)
    conv = sieve_values(convolve(f_spec, PHI), n).copy()
    conv[1:] /= np.arange(1, n + 1, dtype=np.float64)
    rhs = prefix_with_zero(conv)
    return lhs, rhs
