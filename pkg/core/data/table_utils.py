'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: pandas frames and console tables for catalog listings, exponent-spectrum rows and factored products.
'''
from typing import Dict, List, Mapping, Optional, Sequence

import pandas as pd
from terminaltables import DoubleTable

from core.spectra import ExponentSpectrum, FactoredValue, OrderSpectrum, RevolvedSpectrum, ValuationVector, \
    divisors
from .catalog import Catalog, GroupDescriptor, format_id
from .tables import GRID, side_rows

SPECTRUM_COLUMNS = ('i', 'name', 'Id', 'multiplicity', 'E')
CATALOG_COLUMNS = ('Id', 'name', 'side', 'position', 'degree', 'solvable', 'multiplicity')


def spectrum_frame(
        descriptors: Sequence[GroupDescriptor],
        spectra: Mapping,
        grid: Sequence[int] = GRID,
) -> pd.DataFrame:
    """
    One row per group in the layout ``i, name, Id, multiplicity, E`` followed by ``e(n)`` for each ``n`` of the grid.

    :Arguments:
        - descriptors (Sequence[GroupDescriptor]): Groups in row order.
        - spectra (Mapping): Group id to its ``ExponentSpectrum``.
        - grid (Sequence[int], optional): Column arguments. Defaults to the divisors of 168.
    """
    records = []
    for d in descriptors:
        spectrum = spectra[d.id]
        record = [d.position, d.name, format_id(d.id), d.multiplicity, spectrum.exponent]
        record += [spectrum.at(n) for n in grid]
        records.append(record)
    return pd.DataFrame(records, columns=list(SPECTRUM_COLUMNS) + [str(n) for n in grid])


def published_frame(side: str) -> pd.DataFrame:
    records = []
    for row in side_rows(side):
        records.append([row.position, row.name, format_id(row.id), row.multiplicity, row.exponent] + list(row.values))
    return pd.DataFrame(records, columns=list(SPECTRUM_COLUMNS) + [str(n) for n in GRID])


def products_frame(
        products_a: Mapping[int, FactoredValue],
        products_b: Optional[Mapping[int, FactoredValue]] = None,
        pairs: bool = False,
) -> pd.DataFrame:
    """
    Factored products per argument ``n``, one column per side. Cells are ``p^k`` strings, or ``[[p, k], ...]``
    lists when ``pairs`` is set.
    """
    cell = FactoredValue.to_pairs if pairs else str
    columns = ['n', 'G']
    records = []
    for n in sorted(products_a):
        record = [n, cell(products_a[n])]
        if products_b is not None:
            record.append(cell(products_b[n]))
        records.append(record)
    if products_b is not None:
        columns.append('H')
    return pd.DataFrame(records, columns=columns)


def group_frame(
        order: OrderSpectrum,
        exponent: ExponentSpectrum,
        revolved: RevolvedSpectrum,
        grid: Optional[Sequence[int]] = None,
) -> pd.DataFrame:
    """
    ``o(n)``, ``e(n)`` and ``r(n)`` of a single group. Arguments off the divisors of the exponent are evaluated
    through ``gcd`` reduction for ``e`` and are trivial for ``r``.
    """
    grid = grid if grid is not None else exponent.divisors()
    records = [[n, order[n], exponent.at(n), str(revolved.at(n))] for n in grid]
    return pd.DataFrame(records, columns=['n', 'o', 'e', 'r'])


def valuation_frame(vector: ValuationVector) -> pd.DataFrame:
    return pd.DataFrame(vector.to_triples(), columns=['n', 'p', 'k'])


def catalog_frame(catalog: Catalog) -> pd.DataFrame:
    records = [[format_id(d.id), d.name, d.side, d.position, d.degree, d.solvable, d.multiplicity] for d in catalog]
    return pd.DataFrame(records, columns=list(CATALOG_COLUMNS))


def catalog_table(catalog: Catalog, title: str = 'Catalog') -> str:
    frame = catalog_frame(catalog)
    table_data = [tuple(frame.columns)] + [tuple(str(v) for v in row) for row in frame.itertuples(index=False)]
    table = DoubleTable(table_data, title)
    return table.table + '\n'


def grid_for(grid: Optional[int], exponent: int, published: bool = False) -> List[int]:
    """
    Divisors of ``grid`` when given, the published columns for groups of the published lists, otherwise the
    divisors of the group exponent.
    """
    if grid:
        return divisors(grid)
    if published:
        return list(GRID)
    return divisors(exponent)
