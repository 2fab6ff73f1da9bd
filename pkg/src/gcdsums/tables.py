"""Sieved value tables of classical arithmetical functions.

A :class:`FunctionSpec` is a small symbolic description of an arithmetical
function (mu, phi, tau, sigma_a, Lambda, n^a, log n, Dirichlet
convolutions and pointwise log/power weightings of those).  ``sieve``
turns a spec into a :class:`FunctionTable`: an immutable float64 array of
exact values on 1..n_max.

Integer-valued functions (mu, phi, tau, sigma) are sieved in int64 and
converted once, so their float values are exact as long as they fit in 53
bits.  Convolutions use the divisor double loop, O(n_max log n_max).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import DomainError, require

MAX_NESTING = 4

# exponents |a|*log(n_max) beyond this overflow float64
_MAX_EXP_PRODUCT = 700.0


class Kind(Enum):
    ONE = "one"
    ID = "id"
    ID_POW = "idpow"
    MOEBIUS = "mu"
    TOTIENT = "phi"
    JORDAN = "jordan"
    VON_MANGOLDT = "lambda"
    LOG = "log"
    TAU = "tau"
    SIGMA = "sigma"
    SIGMA_POW = "sigmapow"
    DIVISOR_LOG = "divlog"
    CONVOLVE = "conv"
    POINTWISE_LOG = "ptlog"
    POINTWISE_POW = "ptpow"


_NEEDS_EXPONENT = {Kind.ID_POW, Kind.JORDAN, Kind.SIGMA_POW, Kind.POINTWISE_POW}
_UNARY = {Kind.POINTWISE_LOG, Kind.POINTWISE_POW}


@dataclass(frozen=True)
class FunctionSpec:
    """Symbolic descriptor of an arithmetical function."""

    kind: Kind
    exponent: float | None = None
    operands: tuple["FunctionSpec", ...] = field(default=())

    def __post_init__(self):
        if self.kind in _NEEDS_EXPONENT:
            if self.exponent is None or not math.isfinite(self.exponent):
                raise DomainError(f"{self.kind.value} requires a finite exponent")
        elif self.exponent is not None:
            raise DomainError(f"{self.kind.value} takes no exponent")
        n_ops = len(self.operands)
        if self.kind is Kind.CONVOLVE:
            require(n_ops == 2, "convolution takes two operands")
        elif self.kind in _UNARY:
            require(n_ops == 1, f"{self.kind.value} takes one operand")
        else:
            require(n_ops == 0, f"{self.kind.value} takes no operands")
        require(self.depth() <= MAX_NESTING, f"nesting deeper than {MAX_NESTING}")

    def depth(self) -> int:
        if not self.operands:
            return 1
        return 1 + max(op.depth() for op in self.operands)

    def label(self) -> str:
        """Grammar string understood by :func:`parse_spec`."""
        if self.kind is Kind.CONVOLVE:
            return f"conv:{self.operands[0].label()},{self.operands[1].label()}"
        if self.kind is Kind.POINTWISE_LOG:
            return f"ptlog:{self.operands[0].label()}"
        if self.kind is Kind.POINTWISE_POW:
            return f"ptpow:{self.exponent:g},{self.operands[0].label()}"
        if self.kind in _NEEDS_EXPONENT:
            return f"{self.kind.value}:{self.exponent:g}"
        return self.kind.value

    def __str__(self) -> str:
        return self.label()


# primitive specs
ONE = FunctionSpec(Kind.ONE)
ID = FunctionSpec(Kind.ID)
MU = FunctionSpec(Kind.MOEBIUS)
PHI = FunctionSpec(Kind.TOTIENT)
VON_MANGOLDT = FunctionSpec(Kind.VON_MANGOLDT)
LOG = FunctionSpec(Kind.LOG)
TAU = FunctionSpec(Kind.TAU)
SIGMA = FunctionSpec(Kind.SIGMA)
DIVISOR_LOG = FunctionSpec(Kind.DIVISOR_LOG)


def id_pow(a: float) -> FunctionSpec:
    """n ↦ n^a."""
    return FunctionSpec(Kind.ID_POW, exponent=float(a))


def jordan(a: float) -> FunctionSpec:
    """phi_a = mu * id_a (phi_1 is Euler's totient)."""
    return FunctionSpec(Kind.JORDAN, exponent=float(a))


def sigma_pow(a: float) -> FunctionSpec:
    """sigma_a = 1 * id_a."""
    return FunctionSpec(Kind.SIGMA_POW, exponent=float(a))


def convolve(f: FunctionSpec, g: FunctionSpec) -> FunctionSpec:
    return FunctionSpec(Kind.CONVOLVE, operands=(f, g))


def pointwise_log_spec(f: FunctionSpec) -> FunctionSpec:
    return FunctionSpec(Kind.POINTWISE_LOG, operands=(f,))


def pointwise_pow_spec(f: FunctionSpec, a: float) -> FunctionSpec:
    return FunctionSpec(Kind.POINTWISE_POW, exponent=float(a), operands=(f,))


_SIMPLE_NAMES = {
    "one": ONE,
    "1": ONE,
    "id": ID,
    "mu": MU,
    "phi": PHI,
    "lambda": VON_MANGOLDT,
    "log": LOG,
    "tau": TAU,
    "sigma": SIGMA,
    "divlog": DIVISOR_LOG,
}


def parse_spec(text: str) -> FunctionSpec:
    """Parse the ``name[:param]`` mini-grammar.

    Examples: ``mu``, ``idpow:-0.5``, ``jordan:0.5``, ``conv:tau,one``,
    ``ptlog:mu``, ``ptpow:-1,id``.  Convolution operands must themselves be
    primitive (one nesting level), which covers every pair used by the
    identity and scan commands.
    """
    text = text.strip()
    if text in _SIMPLE_NAMES:
        return _SIMPLE_NAMES[text]
    head, sep, rest = text.partition(":")
    if not sep:
        raise DomainError(f"unknown function spec {text!r}")
    try:
        if head == "idpow":
            return id_pow(float(rest))
        if head == "jordan":
            return jordan(float(rest))
        if head == "sigmapow":
            return sigma_pow(float(rest))
        if head == "conv":
            left, _, right = rest.partition(",")
            if not _:
                raise DomainError(f"conv needs two operands in {text!r}")
            return convolve(parse_spec(left), parse_spec(right))
        if head == "ptlog":
            return pointwise_log_spec(parse_spec(rest))
        if head == "ptpow":
            a_text, _, inner = rest.partition(",")
            if not _:
                raise DomainError(f"ptpow needs an exponent and an operand in {text!r}")
            return pointwise_pow_spec(parse_spec(inner), float(a_text))
    except ValueError as exc:
        raise DomainError(f"bad parameter in spec {text!r}: {exc}") from None
    raise DomainError(f"unknown function spec {text!r}")


def abscissa(spec: FunctionSpec) -> float:
    """Abscissa of absolute convergence of sum |f(k)| / k^s (conservative)."""
    k = spec.kind
    if k in (Kind.ONE, Kind.MOEBIUS, Kind.VON_MANGOLDT, Kind.LOG, Kind.TAU,
             Kind.DIVISOR_LOG):
        return 1.0
    if k in (Kind.ID, Kind.TOTIENT, Kind.SIGMA):
        return 2.0
    if k is Kind.ID_POW:
        return 1.0 + spec.exponent
    if k in (Kind.JORDAN, Kind.SIGMA_POW):
        return max(1.0, 1.0 + spec.exponent)
    if k is Kind.CONVOLVE:
        return max(abscissa(spec.operands[0]), abscissa(spec.operands[1]))
    if k is Kind.POINTWISE_LOG:
        return abscissa(spec.operands[0])
    if k is Kind.POINTWISE_POW:
        return abscissa(spec.operands[0]) + spec.exponent
    raise DomainError(f"no abscissa rule for {spec}")


@dataclass(frozen=True)
class FunctionTable:
    """Exact values of an arithmetical function on 1..n_max.

    ``values`` has length n_max + 1; slot 0 is unused and holds 0 so that
    ``values[n]`` is the value at n.  The array is read-only: tables are
    immutable after construction and safe to share across threads.
    """

    spec: FunctionSpec
    n_max: int
    values: np.ndarray

    def __len__(self) -> int:
        return self.n_max

    def __getitem__(self, n: int) -> float:
        require(1 <= n <= self.n_max, f"index {n} outside 1..{self.n_max}")
        return float(self.values[n])


def _primes_upto(n: int) -> np.ndarray:
    if n < 2:
        return np.empty(0, dtype=np.int64)
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.nonzero(is_prime)[0].astype(np.int64)


def _mobius_values(n: int) -> np.ndarray:
    mu = np.ones(n + 1, dtype=np.int64)
    mu[0] = 0
    for p in _primes_upto(n):
        mu[p::p] *= -1
        if p * p <= n:
            mu[p * p::p * p] = 0
    return mu


def _totient_values(n: int) -> np.ndarray:
    phi = np.arange(n + 1, dtype=np.int64)
    for p in _primes_upto(n):
        phi[p::p] //= p
        phi[p::p] *= p - 1
    return phi


def _von_mangoldt_values(n: int) -> np.ndarray:
    lam = np.zeros(n + 1, dtype=np.float64)
    for p in _primes_upto(n):
        log_p = math.log(p)
        q = p
        while q <= n:
            lam[q] = log_p
            q *= p
    return lam


def _divisor_weight_sieve(n: int, weight, dtype) -> np.ndarray:
    """out[m] = sum_{d|m} weight(d), accumulated over pairs d <= m/d.

    ``weight`` maps a divisor (scalar or int64 array) to its contribution;
    the loop runs d up to sqrt(n) and credits both members of each divisor
    pair, counting the square root of a perfect square once.
    """
    out = np.zeros(n + 1, dtype=dtype)
    for d in range(1, math.isqrt(n) + 1):
        larr = np.arange(d, n // d + 1, dtype=np.int64)
        out[d * d::d] += weight(np.int64(d)) + weight(larr)
        out[d * d] -= weight(np.int64(d))
    return out


def _tau_values(n: int) -> np.ndarray:
    return _divisor_weight_sieve(n, lambda v: np.ones_like(v), np.int64)


def _sigma_values(n: int) -> np.ndarray:
    return _divisor_weight_sieve(n, lambda v: v, np.int64)


def _sigma_pow_values(n: int, a: float) -> np.ndarray:
    return _divisor_weight_sieve(
        n, lambda v: np.asarray(v, dtype=np.float64) ** a, np.float64)


def _divisor_log_values(n: int) -> np.ndarray:
    return _divisor_weight_sieve(
        n, lambda v: np.log(np.asarray(v, dtype=np.float64)), np.float64)


def _convolve_values(fv: np.ndarray, gv: np.ndarray, n: int) -> np.ndarray:
    """(f*g)(k) = sum_{d|k} f(d) g(k/d) for k <= n by the divisor loop."""
    # iterate over the sparser factor
    if np.count_nonzero(gv[1:n + 1]) < np.count_nonzero(fv[1:n + 1]):
        fv, gv = gv, fv
    out = np.zeros(n + 1, dtype=np.float64)
    for d in (np.nonzero(fv[1:n + 1])[0] + 1):
        out[d::d] += fv[d] * gv[1:n // d + 1]
    return out


def _check_exponent(a: float, n: int) -> None:
    if n > 1 and abs(a) * math.log(n) > _MAX_EXP_PRODUCT:
        raise DomainError(f"exponent {a} overflows float64 at n_max={n}")


def _sieve_values(spec: FunctionSpec, n: int) -> np.ndarray:
    kind = spec.kind
    if kind is Kind.ONE:
        vals = np.ones(n + 1, dtype=np.float64)
        vals[0] = 0.0
        return vals
    if kind is Kind.ID:
        return np.arange(n + 1, dtype=np.float64)
    if kind is Kind.ID_POW:
        _check_exponent(spec.exponent, n)
        vals = np.zeros(n + 1, dtype=np.float64)
        vals[1:] = np.arange(1, n + 1, dtype=np.float64) ** spec.exponent
        return vals
    if kind is Kind.LOG:
        vals = np.zeros(n + 1, dtype=np.float64)
        vals[1:] = np.log(np.arange(1, n + 1, dtype=np.float64))
        return vals
    if kind is Kind.MOEBIUS:
        return _mobius_values(n).astype(np.float64)
    if kind is Kind.TOTIENT:
        return _totient_values(n).astype(np.float64)
    if kind is Kind.VON_MANGOLDT:
        return _von_mangoldt_values(n)
    if kind is Kind.TAU:
        return _tau_values(n).astype(np.float64)
    if kind is Kind.SIGMA:
        return _sigma_values(n).astype(np.float64)
    if kind is Kind.SIGMA_POW:
        _check_exponent(spec.exponent, n)
        return _sigma_pow_values(n, spec.exponent)
    if kind is Kind.DIVISOR_LOG:
        return _divisor_log_values(n)
    if kind is Kind.JORDAN:
        _check_exponent(spec.exponent, n)
        mu = _mobius_values(n).astype(np.float64)
        ida = _sieve_values(id_pow(spec.exponent), n)
        return _convolve_values(mu, ida, n)
    if kind is Kind.CONVOLVE:
        fv = _sieve_values(spec.operands[0], n)
        gv = _sieve_values(spec.operands[1], n)
        return _convolve_values(fv, gv, n)
    if kind is Kind.POINTWISE_LOG:
        fv = _sieve_values(spec.operands[0], n).copy()
        fv[1:] *= np.log(np.arange(1, n + 1, dtype=np.float64))
        return fv
    if kind is Kind.POINTWISE_POW:
        _check_exponent(spec.exponent, n)
        fv = _sieve_values(spec.operands[0], n).copy()
        fv[1:] *= np.arange(1, n + 1, dtype=np.float64) ** spec.exponent
        return fv
    raise DomainError(f"cannot sieve {spec}")


def _pow2_ceil(n: int) -> int:
    return 1 << max(0, (n - 1).bit_length())


@lru_cache(maxsize=64)
def _sieve_cached(spec: FunctionSpec, capacity: int) -> np.ndarray:
    vals = _sieve_values(spec, capacity)
    vals.setflags(write=False)
    return vals


def sieve_values(spec: FunctionSpec, n_max: int) -> np.ndarray:
    """Read-only value array for spec on 0..n_max (slot 0 is 0).

    Results are cached with power-of-two capacity growth; all sieves fill
    index n only from data at indices <= n, so a slice of a larger cached
    array is bit-identical to a direct build.
    """
    require(n_max >= 1, "n_max must be >= 1")
    cap = max(_pow2_ceil(n_max), 1024)
    return _sieve_cached(spec, cap)[:n_max + 1]


def sieve(spec: FunctionSpec, n_max: int) -> FunctionTable:
    """Build the exact value table of ``spec`` on 1..n_max."""
    require(n_max >= 1, "n_max must be >= 1")
    return FunctionTable(spec, n_max, sieve_values(spec, n_max))


def dirichlet_convolve(f: FunctionTable, g: FunctionTable) -> FunctionTable:
    """Table of (f*g)(n) = sum_{d|n} f(d) g(n/d)."""
    require(f.n_max == g.n_max,
            f"table sizes differ: {f.n_max} != {g.n_max}")
    vals = _convolve_values(f.values, g.values, f.n_max)
    vals.setflags(write=False)
    return FunctionTable(convolve(f.spec, g.spec), f.n_max, vals)


def pointwise_log(f: FunctionTable) -> FunctionTable:
    """Table of f(n) * log n."""
    vals = f.values.copy()
    vals[1:] *= np.log(np.arange(1, f.n_max + 1, dtype=np.float64))
    vals.setflags(write=False)
    return FunctionTable(pointwise_log_spec(f.spec), f.n_max, vals)


def pointwise_power(f: FunctionTable, a: float) -> FunctionTable:
    """Table of f(n) * n^a."""
    _check_exponent(a, f.n_max)
    vals = f.values.copy()
    vals[1:] *= np.arange(1, f.n_max + 1, dtype=np.float64) ** a
    vals.setflags(write=False)
    return FunctionTable(pointwise_pow_spec(f.spec, a), f.n_max, vals)


def divisors_of(n: int) -> list[int]:
    """Sorted divisors of n by trial division up to sqrt(n)."""
    require(n >= 1, "n must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius_of(n: int) -> int:
    """mu(n) by trial-division factorization (exact integer)."""
    require(n >= 1, "n must be >= 1")
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if m > 1:
        result = -result
    return result
