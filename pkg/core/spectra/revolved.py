'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Revolved exponent spectra (multiplicative Moebius inversion of the exponent spectrum) and their
    prime valuation vectors, which are additive under direct products.
'''
from typing import Dict, Iterable, List, Mapping, Tuple

from .factored import FactoredValue, factorize, product
from .number_theory import divisors, mobius
from .spectrum import ExponentSpectrum

ValuationKey = Tuple[int, int]


class RevolvedSpectrum(object):
    """
    Map ``n -> r(n) = prod_{d | n} e(n / d) ** mu(d)`` on the divisors of the exponent ``E``. It is trivial at every
    ``n`` not dividing ``E``, so nothing else is stored.

    :Arguments:
        - exponent (int): Group exponent ``E``.
        - values (Mapping[int, FactoredValue]): ``r(n)`` for every divisor ``n`` of ``E``.
    """

    def __init__(self, exponent: int, values: Mapping[int, FactoredValue]) -> None:
        self._exponent = exponent
        self._values = dict(sorted(values.items()))

    @property
    def exponent(self) -> int:
        return self._exponent

    @property
    def values(self) -> Dict[int, FactoredValue]:
        return dict(self._values)

    def at(self, n: int) -> FactoredValue:
        return self._values.get(n, FactoredValue())

    def reconstruct(self) -> Dict[int, FactoredValue]:
        """
        ``prod_{d | n} r(d)`` for every divisor ``n``, which gives back the exponent spectrum.
        """
        return {n: product((self.at(d), 1) for d in divisors(n)) for n in self._values}


class ValuationVector(object):
    """
    Sparse map ``(n, p) -> k`` where ``p ** k`` is the exact power of the prime ``p`` in ``r(n)``.
    Keys are kept in lexicographic ``(n, p)`` order; zero entries are never stored.

    :Interfaces: to_triples, from_triples, keys, scaled
    """

    def __init__(self, entries: Mapping[ValuationKey, int] = None) -> None:
        entries = entries or dict()
        self._entries = {(int(n), int(p)): int(k) for (n, p), k in sorted(entries.items()) if k != 0}

    @property
    def entries(self) -> Dict[ValuationKey, int]:
        return dict(self._entries)

    def keys(self) -> List[ValuationKey]:
        return list(self._entries)

    def get(self, key: ValuationKey) -> int:
        return self._entries.get(key, 0)

    def is_empty(self) -> bool:
        return len(self._entries) == 0

    def scaled(self, k: int) -> 'ValuationVector':
        return ValuationVector({key: v * k for key, v in self._entries.items()})

    def __add__(self, other: 'ValuationVector') -> 'ValuationVector':
        entries = dict(self._entries)
        for key, v in other._entries.items():
            entries[key] = entries.get(key, 0) + v
        return ValuationVector(entries)

    def __sub__(self, other: 'ValuationVector') -> 'ValuationVector':
        return self + other.scaled(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ValuationVector):
            return NotImplemented
        return self._entries == other._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return 'ValuationVector({})'.format(self._entries)

    def to_triples(self) -> List[List[int]]:
        return [[n, p, k] for (n, p), k in self._entries.items()]

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> 'ValuationVector':
        entries = dict()
        for n, p, k in triples:
            if (n, p) in entries:
                raise ValueError("valuation key ({}, {}) listed twice".format(n, p))
            entries[(n, p)] = k
        return cls(entries)


def revolved_at(spectrum: ExponentSpectrum, n: int) -> FactoredValue:
    """
    Evaluate the inversion product at any positive ``n``, divisor of the exponent or not.
    """
    return product((factorize(spectrum.at(n // d)), mobius(d)) for d in divisors(n) if mobius(d) != 0)


def revolved_spectrum(spectrum: ExponentSpectrum) -> RevolvedSpectrum:
    factored = {n: factorize(v) for n, v in spectrum.values.items()}
    values = dict()
    for n in spectrum.divisors():
        values[n] = product((factored[n // d], mobius(d)) for d in divisors(n) if mobius(d) != 0)
    return RevolvedSpectrum(spectrum.exponent, values)


def valuation_vector(revolved: RevolvedSpectrum) -> ValuationVector:
    entries = dict()
    for n, value in revolved.values.items():
        for p, k in value:
            entries[(n, p)] = k
    return ValuationVector(entries)
