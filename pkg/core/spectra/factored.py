'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Positive rationals kept as prime-exponent maps, so products of many spectra never grow into
    huge integers.
'''
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .number_theory import prime_factors


class FactoredValue(object):
    """
    Positive rational ``prod(p ** k)`` stored as sorted ``(p, k)`` pairs with non-zero ``k``.
    Values are immutable and hashable.

    :Arguments:
        - factors (Mapping[int, int], optional): Prime to signed exponent. Zero exponents are dropped.

    :Interfaces: from_int, from_pairs, exponent, to_fraction, to_pairs
    """

    __slots__ = ('_factors', )

    def __init__(self, factors: Optional[Mapping[int, int]] = None) -> None:
        factors = factors or dict()
        self._factors = tuple(sorted((int(p), int(k)) for p, k in factors.items() if k != 0))

    @classmethod
    def from_int(cls, n: int) -> 'FactoredValue':
        return cls(prime_factors(n))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> 'FactoredValue':
        factors = dict()
        for p, k in pairs:
            if p in factors:
                raise ValueError("prime {} listed twice".format(p))
            factors[p] = k
        return cls(factors)

    @property
    def factors(self) -> Dict[int, int]:
        return dict(self._factors)

    def exponent(self, p: int) -> int:
        for q, k in self._factors:
            if q == p:
                return k
        return 0

    def is_one(self) -> bool:
        return len(self._factors) == 0

    def to_fraction(self) -> Fraction:
        num, den = 1, 1
        for p, k in self._factors:
            if k > 0:
                num *= p ** k
            else:
                den *= p ** (-k)
        return Fraction(num, den)

    def to_pairs(self) -> List[List[int]]:
        return [[p, k] for p, k in self._factors]

    def _combine(self, other: 'FactoredValue', sign: int) -> 'FactoredValue':
        factors = self.factors
        for p, k in other._factors:
            factors[p] = factors.get(p, 0) + sign * k
        return FactoredValue(factors)

    def __mul__(self, other: 'FactoredValue') -> 'FactoredValue':
        return self._combine(other, 1)

    def __truediv__(self, other: 'FactoredValue') -> 'FactoredValue':
        return self._combine(other, -1)

    def __pow__(self, k: int) -> 'FactoredValue':
        return FactoredValue({p: e * k for p, e in self._factors})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredValue):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self) -> int:
        return hash(self._factors)

    def __iter__(self):
        return iter(self._factors)

    def __str__(self) -> str:
        if not self._factors:
            return '1'
        return '·'.join('{}^{}'.format(p, k) for p, k in self._factors)

    def __repr__(self) -> str:
        return 'FactoredValue({})'.format(str(self))


ONE = FactoredValue()


def factorize(n: int) -> FactoredValue:
    return FactoredValue.from_int(n)


def product(values: Iterable[Tuple[FactoredValue, int]]) -> FactoredValue:
    """
    ``prod(v ** k)`` over ``(v, k)`` pairs, accumulated on exponents.
    """
    factors = dict()
    for value, k in values:
        for p, e in value:
            factors[p] = factors.get(p, 0) + e * k
    return FactoredValue(factors)
