import pytest
import sympy
from hypothesis import given, strategies as st

from wedgelab.arith import divisors, is_prime, mobius, multiplicative_order, prime_power, primes, totient


@given(st.integers(1, 5000))
def test_against_sympy(n):
    assert mobius(n) == int(sympy.mobius(n))
    assert totient(n) == int(sympy.totient(n))
    assert divisors(n) == sympy.divisors(n)
    assert is_prime(n) == sympy.isprime(n)


def test_segmented_sieve():
    gen = primes(segment=64)
    first = [next(gen) for _ in range(2000)]
    assert first == list(sympy.primerange(2, sympy.prime(2000) + 1))
    later = primes(start=10**6)
    assert next(later) == sympy.nextprime(10**6 - 1)


def test_prime_power():
    assert prime_power(49) == (7, 2)
    assert prime_power(2) == (2, 1)
    with pytest.raises(ValueError):
        prime_power(12)


def test_multiplicative_order():
    assert multiplicative_order(3, 7) == 6
    assert multiplicative_order(2, 7) == 3
