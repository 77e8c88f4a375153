"""Integer helpers: factorization, divisors, Moebius and Euler functions, prime sieves."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...), p ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == ((n, 1),)


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, or raise ValueError."""
    fac = factorize(q) if q > 1 else ()
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fac[0]


def multiplicative_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    order = totient(n)
    for p, _ in factorize(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def primes(start: int = 2, segment: int = 1 << 16) -> Iterator[int]:
    """Endless ascending stream of primes >= start (segmented Eratosthenes)."""
    lo = max(start, 2)
    while True:
        hi = lo + segment
        base = _small_primes(isqrt(hi) + 1)
        seg = bytearray([1]) * (hi - lo)
        for p in base:
            first = max(p * p, (lo + p - 1) // p * p)
            if first < hi:
                seg[first - lo :: p] = bytearray(len(range(first, hi, p)))
        for i, flag in enumerate(seg):
            if flag:
                yield lo + i
        lo = hi
