'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Evaluator re-deriving the published solvable / non-solvable order-type coincidence from the catalog.
'''
import sys
import time
from typing import Dict, List, NamedTuple, Optional, Tuple

import pandas as pd
from loguru import logger
from tqdm import tqdm

from core.data import Catalog, GRID, PUBLISHED_PRODUCT, PublishedRow, format_id, side_rows
from core.data.table_utils import products_frame, spectrum_frame
from core.solver import CheckResult, VerificationReport, published_certificate, verify_certificate
from core.spectra import ONE, ExponentSpectrum, FactoredValue, exponent_spectrum, spectrum_power_product
from .base_evaluator import BaseEvaluator


class TheoremReport(NamedTuple):
    checks: Tuple[CheckResult, ...]
    verification: Optional[VerificationReport]
    frames: Dict[str, pd.DataFrame]

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


class TheoremEvaluator(BaseEvaluator):
    """
    Evaluator checking the published group lists against the catalog. It first compares every published
    exponent-spectrum row with the spectrum recomputed from the catalog generators, then verifies the published
    multiplicity certificate by brute-force products, and finally compares those products with the published
    factored values.

    :Arguments:
        - cfg (Dict): Config dict.
        - catalog (Catalog): Catalog holding every published group.

    :Interfaces: reset, eval, close, tables
    """

    config = dict(
        check_rows=True,
        check_products=True,
        emit_tables=True,
        verbose=False,
    )

    def __init__(self, cfg: Dict, catalog: Catalog) -> None:
        super().__init__(cfg, catalog)
        self._spectra = dict()

    def reset(self) -> None:
        self._spectra = dict()

    def close(self) -> None:
        self._spectra = dict()

    def _spectrum(self, group_id) -> ExponentSpectrum:
        if group_id not in self._spectra:
            self._spectra[group_id] = exponent_spectrum(self._catalog.group(group_id))
        return self._spectra[group_id]

    def _check_row(self, row: PublishedRow) -> CheckResult:
        name = '{} row {}'.format(row.side, row.position)
        d = self._catalog.get(row.id)
        spectrum = self._spectrum(d.id)
        if spectrum.exponent != row.exponent:
            return CheckResult(
                name, False, '{} {}: exponent {} != published {}'.format(
                    format_id(row.id), row.name, spectrum.exponent, row.exponent
                )
            )
        mismatched = [n for n in GRID if spectrum.at(n) != row.value_at(n)]
        if mismatched:
            return CheckResult(
                name, False, '{} {}: mismatch at n = {}'.format(
                    format_id(row.id), row.name, ', '.join(str(n) for n in mismatched)
                )
            )
        return CheckResult(name, True)

    def _side_product(self, side: str) -> Dict[int, FactoredValue]:
        entries = [(self._spectrum(row.id), row.multiplicity) for row in side_rows(side)]
        return spectrum_power_product(entries, GRID)

    def tables(self, pairs: bool = False) -> Dict[str, pd.DataFrame]:
        """
        Exponent-spectrum rows of both published lists and the factored exponent type of both products, computed
        from the catalog without any comparison.

        :Arguments:
            - pairs (bool, optional): Products as ``[[p, k], ...]`` lists instead of ``p^k`` strings.

        :Returns:
            Dict[str, pd.DataFrame]: Table title to frame, in output order.
        """
        frames = dict()
        for side in ('G', 'H'):
            descriptors = [self._catalog.get(row.id) for row in side_rows(side)]
            spectra = {d.id: self._spectrum(d.id) for d in descriptors}
            frames['{} exponent spectra'.format(side)] = spectrum_frame(descriptors, spectra, GRID)
        frames['exponent type products'] = products_frame(self._side_product('G'), self._side_product('H'), pairs)
        return frames

    def eval(self) -> TheoremReport:
        """
        Run all checks in order. Lookup errors for missing published groups are raised, not reported.

        :Returns:
            TheoremReport: Named checks, the certificate verification report and the emitted tables.
        """
        start = time.time()
        checks = []
        if self._cfg.check_rows:
            rows = side_rows('G') + side_rows('H')
            for row in tqdm(rows, desc='rows', file=sys.stderr, disable=not self._cfg.verbose):
                checks.append(self._check_row(row))

        verification = verify_certificate(published_certificate(), self._catalog)
        checks.extend(verification.checks)

        if self._cfg.check_products:
            mismatched = [n for n in GRID if verification.products_a.get(n) != PUBLISHED_PRODUCT[n]]
            detail = 'mismatch at n = {}'.format(', '.join(str(n) for n in mismatched)) if mismatched else ''
            values = tuple((n, verification.products_a.get(n, ONE), PUBLISHED_PRODUCT[n]) for n in GRID)
            checks.append(CheckResult('published_products', not mismatched, detail, values))

        frames = self.tables() if self._cfg.emit_tables else dict()
        report = TheoremReport(tuple(checks), verification, frames)
        failure = report.first_failure
        if failure is None:
            logger.info('[THEOREM] all {} checks passed in {:.2f}s'.format(len(checks), time.time() - start))
        else:
            logger.error('[THEOREM] check {} failed: {}'.format(failure.name, failure.detail))
        return report
