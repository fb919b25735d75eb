'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Order spectra and exponent spectra of finite groups, the divisor-sum and Moebius maps between
    them, and exponent-type products over direct powers.
'''
from collections import Counter
from functools import reduce
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from core.groups import FiniteGroup, element_order
from .factored import FactoredValue, factorize, product
from .number_theory import divisors, lcm, mobius


class InconsistentSpectrumError(ValueError):
    pass


class OrderSpectrum(object):
    """
    Map ``n -> o(n)``, the number of elements of order exactly ``n``. Only non-zero counts are stored.

    :Arguments:
        - counts (Mapping[int, int]): Element order to number of elements.
    """

    def __init__(self, counts: Mapping[int, int]) -> None:
        self._counts = {int(n): int(c) for n, c in sorted(counts.items()) if c != 0}

    @property
    def counts(self) -> Dict[int, int]:
        return dict(self._counts)

    @property
    def group_order(self) -> int:
        return sum(self._counts.values())

    @property
    def exponent(self) -> int:
        return reduce(lcm, self._counts.keys(), 1)

    def __getitem__(self, n: int) -> int:
        return self._counts.get(n, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderSpectrum):
            return NotImplemented
        return self._counts == other._counts

    def __repr__(self) -> str:
        return 'OrderSpectrum({})'.format(self._counts)


class ExponentSpectrum(object):
    """
    Map ``n -> e(n)``, the number of solutions of ``g ** n = 1``. Values are stored on the divisors of the group
    exponent ``E`` only; any other argument is reduced through ``gcd(n, E)``.

    :Arguments:
        - exponent (int): Group exponent ``E``.
        - values (Mapping[int, int]): ``e(n)`` for every divisor ``n`` of ``E``.

    ``e(1)`` must be 1 and ``e`` must not decrease along divisibility, otherwise ``InconsistentSpectrumError``.

    :Interfaces: at, divisors, group_order
    """

    def __init__(self, exponent: int, values: Mapping[int, int]) -> None:
        self._exponent = int(exponent)
        self._values = {int(n): int(v) for n, v in sorted(values.items())}
        expected = divisors(self._exponent)
        if sorted(self._values) != expected:
            raise InconsistentSpectrumError(
                "exponent spectrum keys {} are not the divisors of {}".format(sorted(self._values), self._exponent)
            )
        if self._values[1] != 1:
            raise InconsistentSpectrumError("e(1) = {}, expected 1".format(self._values[1]))
        for n in expected:
            for m in expected:
                if m > n and m % n == 0 and self._values[n] > self._values[m]:
                    raise InconsistentSpectrumError(
                        "e({}) = {} exceeds e({}) = {}".format(n, self._values[n], m, self._values[m])
                    )

    @property
    def exponent(self) -> int:
        return self._exponent

    @property
    def values(self) -> Dict[int, int]:
        return dict(self._values)

    @property
    def group_order(self) -> int:
        return self._values[self._exponent]

    def divisors(self) -> List[int]:
        return list(self._values)

    def at(self, n: int) -> int:
        return self._values[gcd(n, self._exponent)]

    def __getitem__(self, n: int) -> int:
        return self.at(n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExponentSpectrum):
            return NotImplemented
        return self._exponent == other._exponent and self._values == other._values

    def __repr__(self) -> str:
        return 'ExponentSpectrum(E={}, {})'.format(self._exponent, self._values)


def order_spectrum(group: FiniteGroup) -> OrderSpectrum:
    return OrderSpectrum(Counter(element_order(g) for g in group.elements))


def exponent_spectrum(spectrum) -> ExponentSpectrum:
    """
    ``e(n) = sum_{d | n} o(d)`` on the divisors of the group exponent. Accepts an ``OrderSpectrum`` or an
    enumerated ``FiniteGroup``.
    """
    if isinstance(spectrum, FiniteGroup):
        spectrum = order_spectrum(spectrum)
    exponent = spectrum.exponent
    counts = spectrum.counts
    values = {n: sum(counts.get(d, 0) for d in divisors(n)) for n in divisors(exponent)}
    return ExponentSpectrum(exponent, values)


def order_from_exponent(spectrum: ExponentSpectrum) -> OrderSpectrum:
    """
    Moebius inversion ``o(n) = sum_{d | n} e(n / d) * mu(d)``. A negative count means the input cannot be the
    exponent spectrum of any group.
    """
    counts = dict()
    for n in spectrum.divisors():
        count = sum(spectrum.at(n // d) * mobius(d) for d in divisors(n))
        if count < 0:
            raise InconsistentSpectrumError("inversion gives o({}) = {} < 0".format(n, count))
        counts[n] = count
    return OrderSpectrum(counts)


def group_exponent(group: FiniteGroup) -> int:
    return order_spectrum(group).exponent


def same_order_type(g: FiniteGroup, h: FiniteGroup) -> bool:
    return exponent_spectrum(g) == exponent_spectrum(h)


def spectrum_power_product(
        entries: Sequence[Tuple[ExponentSpectrum, int]],
        grid: Optional[Iterable[int]] = None,
) -> Dict[int, FactoredValue]:
    """
    Exponent type of the direct product ``prod G_i ** k_i``, evaluated on every divisor of the joint exponent as
    ``prod_i e_i(gcd(n, E_i)) ** k_i`` in factored form.

    :Arguments:
        - entries (Sequence[Tuple[ExponentSpectrum, int]]): Spectra with their multiplicities.
        - grid (Iterable[int], optional): Arguments to evaluate at instead of the divisors of the joint exponent.

    :Returns:
        Dict[int, FactoredValue]: Argument to product value.
    """
    if len(entries) == 0:
        raise ValueError("spectrum product needs at least one entry")
    if grid is None:
        grid = divisors(reduce(lcm, (s.exponent for s, _ in entries), 1))
    cache = dict()

    def _factored(v: int) -> FactoredValue:
        if v not in cache:
            cache[v] = factorize(v)
        return cache[v]

    return {n: product((_factored(s.at(n)), k) for s, k in entries) for n in grid}


def joint_exponent(spectra: Iterable[ExponentSpectrum]) -> int:
    return reduce(lcm, (s.exponent for s in spectra), 1)
