'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Valuation vectors of catalog groups and the solvable corpus used as matrix columns.
'''
from typing import List, Optional, Sequence, Tuple

from core.data import Catalog, GroupDescriptor
from core.groups import DEFAULT_MAX_NORMAL_CLOSURES, is_direct_product
from core.spectra import ValuationVector, exponent_spectrum, revolved_spectrum, valuation_vector
from .linear_system import GroupId

CORPUS_SIDES = ('G', 'H')


def group_valuation(catalog: Catalog, group_id: Sequence[int]) -> ValuationVector:
    return valuation_vector(revolved_spectrum(exponent_spectrum(catalog.group(group_id))))


def search_corpus(
        catalog: Catalog,
        target_id: Optional[Sequence[int]] = None,
        extra: Optional[Catalog] = None,
        exclude_direct_products: bool = False,
        max_normal_closures: int = DEFAULT_MAX_NORMAL_CLOSURES,
) -> List[Tuple[GroupId, ValuationVector]]:
    """
    Columns for the search: solvable published-side entries of ``catalog`` followed by solvable entries of ``extra``,
    without the target and without groups whose valuation vector is empty.

    :Arguments:
        - catalog (Catalog): Main catalog.
        - target_id (Sequence[int], optional): Id left out of the corpus.
        - extra (Catalog, optional): Additional corpus whose solvable entries are all used.
        - exclude_direct_products (bool, optional): Drop corpus groups that decompose as direct products.
        - max_normal_closures (int, optional): Normal-subgroup guard for the direct-product test.
    """
    target_id = tuple(target_id) if target_id is not None else None
    candidates: List[Tuple[Catalog, GroupDescriptor]] = [(catalog, d) for d in catalog.solvable_entries()
                                                         if d.side in CORPUS_SIDES]
    if extra is not None:
        candidates += [(extra, d) for d in extra.solvable_entries()]
    corpus = []
    for source, d in candidates:
        if d.id == target_id:
            continue
        if exclude_direct_products and is_direct_product(source.group(d.id), max_normal_closures):
            continue
        vector = group_valuation(source, d.id)
        if vector.is_empty():
            continue
        corpus.append((d.id, vector))
    return corpus
