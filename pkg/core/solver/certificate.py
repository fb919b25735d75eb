'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Multiplicity certificates: conversion from exact solutions, verification by direct recomputation of
    exponent-type products, and JSON forms of certificates and reports.
'''
from fractions import Fraction
from functools import reduce
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from core.data import Catalog, format_id, side_rows
from core.groups import is_solvable
from core.spectra import FactoredValue, ValuationVector, divisors, exponent_spectrum, joint_exponent, lcm, \
    revolved_spectrum, spectrum_power_product, valuation_vector
from .exact_solver import SolutionSpace
from .linear_system import GroupId, LinearSystem


class CertificateError(ValueError):
    pass


class MultiplicityCertificate(NamedTuple):
    """
    Claim that ``prod_{side_a} G ** k`` and ``prod_{side_b} H ** k`` share their exponent type (hence their order
    type) while side a is solvable and side b is not.
    """
    side_a: Tuple[Tuple[GroupId, int], ...]
    side_b: Tuple[Tuple[GroupId, int], ...]
    flags: Tuple[str, ...] = ()

    def ids(self) -> List[GroupId]:
        return [group_id for group_id, _ in self.side_a + self.side_b]

    def to_dict(self, verified: Optional[bool] = None, joint: Optional[int] = None) -> Dict:
        data = dict(
            side_a=[dict(id=list(group_id), mult=k) for group_id, k in self.side_a],
            side_b=[dict(id=list(group_id), mult=k) for group_id, k in self.side_b],
        )
        if verified is not None:
            data['verified'] = verified
        if joint is not None:
            data['joint_exponent'] = joint
        if self.flags:
            data['flags'] = list(self.flags)
        return data

    @classmethod
    def from_dict(cls, data: Dict) -> 'MultiplicityCertificate':
        try:
            side_a = tuple((tuple(e['id']), int(e['mult'])) for e in data['side_a'])
            side_b = tuple((tuple(e['id']), int(e['mult'])) for e in data['side_b'])
        except (KeyError, TypeError) as e:
            raise CertificateError("malformed certificate: {}".format(e))
        return cls(side_a, side_b, tuple(data.get('flags', ())))


def published_certificate() -> MultiplicityCertificate:
    """
    The certificate given by the published group lists and their multiplicities.
    """
    side_a = tuple((row.id, row.multiplicity) for row in side_rows('G'))
    side_b = tuple((row.id, row.multiplicity) for row in side_rows('H'))
    return MultiplicityCertificate(side_a, side_b)


def to_certificate(
        space: SolutionSpace,
        system: LinearSystem,
        target_id: Optional[GroupId] = None,
        target_multiplicity: Optional[int] = None,
) -> MultiplicityCertificate:
    """
    Clear denominators of the particular solution by their least common multiple ``L``. Positive coefficients form
    side a; negated negative coefficients together with the target at multiplicity ``t * L`` form side b.
    """
    target_id = tuple(target_id or system.target_id)
    t = target_multiplicity or system.target_multiplicity
    x = space.particular
    if all(v == 0 for v in x) and any(v != 0 for v in system.rhs):
        raise CertificateError("zero solution for a non-zero target")
    scale = reduce(lcm, (v.denominator for v in x), 1)
    side_a = []
    side_b = []
    for group_id, v in zip(system.matrix.col_index, x):
        k = int(v * scale)
        if k > 0:
            side_a.append((group_id, k))
        elif k < 0:
            side_b.append((group_id, -k))
    side_b.append((target_id, t * scale))
    flags = ()
    if not side_a:
        flags = ('empty solvable side', )
    return MultiplicityCertificate(tuple(side_a), tuple(side_b), flags)


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str = ''
    values: Tuple[Tuple[int, FactoredValue, FactoredValue], ...] = ()

    def to_dict(self) -> Dict:
        data = dict(name=self.name, passed=self.passed, detail=self.detail)
        if self.values:
            data['values'] = [dict(n=n, side_a=a.to_pairs(), side_b=b.to_pairs()) for n, a, b in self.values]
        return data


class VerificationReport(NamedTuple):
    checks: Tuple[CheckResult, ...]
    joint_exponent: int
    products_a: Dict[int, FactoredValue]
    products_b: Dict[int, FactoredValue]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def to_list(self) -> List[Dict]:
        return [c.to_dict() for c in self.checks]


def verify_certificate(cert: MultiplicityCertificate, catalog: Catalog) -> VerificationReport:
    """
    Recompute both exponent-type products straight from the enumerated groups and compare them at every divisor of
    the joint exponent, then check the solvability claims. Valuation vectors are not used.

    :Arguments:
        - cert (MultiplicityCertificate): Certificate to check.
        - catalog (Catalog): Catalog resolving every id of the certificate.

    :Returns:
        VerificationReport: Named checks in order, with the factored products of each side.
    """
    for group_id in cert.ids():
        catalog.get(group_id)
    checks = []

    bad = [format_id(i) for i, k in cert.side_a + cert.side_b if k < 1]
    overlap = sorted({i for i, _ in cert.side_a} & {i for i, _ in cert.side_b})
    detail = ''
    if bad:
        detail = 'non-positive multiplicity for {}'.format(', '.join(bad))
    elif overlap:
        detail = 'ids on both sides: {}'.format(', '.join(format_id(i) for i in overlap))
    checks.append(CheckResult('multiplicities', not bad and not overlap and bool(cert.side_a), detail))

    spectra = {i: exponent_spectrum(catalog.group(i)) for i in cert.ids()}
    entries_a = [(spectra[i], k) for i, k in cert.side_a]
    entries_b = [(spectra[i], k) for i, k in cert.side_b]
    joint = joint_exponent(spectra.values())
    grid = divisors(joint)
    products_a = spectrum_power_product(entries_a, grid) if entries_a else {n: FactoredValue() for n in grid}
    products_b = spectrum_power_product(entries_b, grid) if entries_b else {n: FactoredValue() for n in grid}
    mismatched = [n for n in grid if products_a[n] != products_b[n]]
    values = tuple((n, products_a[n], products_b[n]) for n in grid)
    detail = 'mismatch at n = {}'.format(', '.join(str(n) for n in mismatched)) if mismatched else ''
    checks.append(CheckResult('exponent_type_equality', not mismatched, detail, values))

    unsolvable_a = [format_id(i) for i, _ in cert.side_a if not is_solvable(catalog.group(i))]
    checks.append(
        CheckResult(
            'side_a_solvable', not unsolvable_a,
            'non-solvable: {}'.format(', '.join(unsolvable_a)) if unsolvable_a else ''
        )
    )
    unsolvable_b = [format_id(i) for i, _ in cert.side_b if not is_solvable(catalog.group(i))]
    checks.append(
        CheckResult('side_b_non_solvable', bool(unsolvable_b), '' if unsolvable_b else 'every side b group is solvable')
    )
    return VerificationReport(tuple(checks), joint, products_a, products_b)


def valuation_balance(cert: MultiplicityCertificate, catalog: Catalog) -> ValuationVector:
    """
    ``sum_{side_a} k v - sum_{side_b} k v``; empty exactly when both sides share their exponent type.
    """
    balance = ValuationVector()
    for sign, side in ((1, cert.side_a), (-1, cert.side_b)):
        for group_id, k in side:
            v = valuation_vector(revolved_spectrum(exponent_spectrum(catalog.group(group_id))))
            balance = balance + v.scaled(sign * k)
    return balance
