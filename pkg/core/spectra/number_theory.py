'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Small number-theoretic helpers shared by the spectrum code.
'''
from math import gcd
from typing import Dict, List

from sympy import divisors as _sympy_divisors
from sympy import sieve

PRIME_LIMIT = 10 ** 5
PRIMES = tuple(int(p) for p in sieve.primerange(2, PRIME_LIMIT))


def prime_factors(n: int) -> Dict[int, int]:
    """
    Trial division of ``n`` over the precomputed prime list. The leftover cofactor is prime for every
    ``n < PRIME_LIMIT ** 2``, which covers all element counts of groups the enumeration cap admits.
    """
    if n < 1:
        raise ValueError("cannot factor non-positive integer {}".format(n))
    if n >= PRIME_LIMIT ** 2:
        raise ValueError("{} is too large for trial division up to {}".format(n, PRIME_LIMIT))
    factors = dict()
    for p in PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def mobius(n: int) -> int:
    factors = prime_factors(n)
    if any(k > 1 for k in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> List[int]:
    return [int(d) for d in _sympy_divisors(n)]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
