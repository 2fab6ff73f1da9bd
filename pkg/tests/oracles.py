"""Independent test oracles.

Everything here is deliberately written without touching the production
sieves or series accelerations: naive divisor enumeration, trial-division
factorization, Euler-Maclaurin zeta, and harmonic-sum extrapolation for
Euler's constant.
"""

import math
from fractions import Fraction

# Bernoulli numbers B_2, B_4, ..., B_16
_BERNOULLI = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42),
              Fraction(-1, 30), Fraction(5, 66), Fraction(-691, 2730),
              Fraction(7, 6), Fraction(-3617, 510)]


def naive_divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_factorize(n: int) -> dict[int, int]:
    out = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def naive_mobius(n: int) -> int:
    exps = naive_factorize(n).values()
    if any(e >= 2 for e in exps):
        return 0
    return -1 if len(exps) % 2 else 1


def naive_phi(n: int) -> int:
    return sum(1 for j in range(1, n + 1) if math.gcd(j, n) == 1)


def naive_von_mangoldt(n: int) -> float:
    fact = naive_factorize(n)
    if len(fact) == 1:
        (p, _), = fact.items()
        return math.log(p)
    return 0.0


def naive_value(kind: str, n: int, a: float | None = None) -> float:
    if kind == "one":
        return 1.0
    if kind == "id":
        return float(n)
    if kind == "idpow":
        return float(n) ** a
    if kind == "log":
        return math.log(n)
    if kind == "mu":
        return float(naive_mobius(n))
    if kind == "phi":
        return float(naive_phi(n))
    if kind == "jordan":
        return math.fsum(naive_mobius(d) * (n // d) ** a
                         for d in naive_divisors(n))
    if kind == "lambda":
        return naive_von_mangoldt(n)
    if kind == "tau":
        return float(len(naive_divisors(n)))
    if kind == "sigma":
        return float(sum(naive_divisors(n)))
    if kind == "sigmapow":
        return math.fsum(float(d) ** a for d in naive_divisors(n))
    if kind == "divlog":
        return math.fsum(math.log(d) for d in naive_divisors(n))
    raise ValueError(kind)


def zeta_euler_maclaurin(s: float, n_cut: int = 60, terms: int = 8) -> float:
    """Euler-Maclaurin evaluation of zeta(s), valid well below s = 1."""
    head = math.fsum(k ** (-s) for k in range(1, n_cut + 1))
    tail = n_cut ** (1.0 - s) / (s - 1.0) - 0.5 * n_cut ** (-s)
    correction = 0.0
    for j in range(1, terms + 1):
        b = float(_BERNOULLI[j - 1])
        prod = 1.0
        for i in range(2 * j - 1):
            prod *= s + i
        correction += b / math.factorial(2 * j) * prod * \
            n_cut ** (-s - 2 * j + 1)
    return head + tail + correction


def euler_gamma_oracle(n_cut: int = 10 ** 5) -> float:
    """gamma from the harmonic sum with Euler-Maclaurin extrapolation."""
    harmonic = math.fsum(1.0 / k for k in range(1, n_cut + 1))
    return (harmonic - math.log(n_cut) - 0.5 / n_cut
            + 1.0 / (12.0 * n_cut ** 2) - 1.0 / (120.0 * n_cut ** 4))
