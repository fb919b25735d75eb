'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Published reference data for the solvable / non-solvable order-type coincidence: the two group lists
    with multiplicities, their exponent-spectrum rows on the divisors of 168, and the factored exponent type of both
    products.
'''
from typing import Dict, List, NamedTuple, Tuple

from core.spectra import FactoredValue

GRID = (1, 2, 3, 4, 6, 7, 8, 12, 14, 21, 24, 28, 42, 56, 84, 168)
SIDES = ('G', 'H')


class PublishedRow(NamedTuple):
    side: str
    position: int
    name: str
    id: Tuple[int, int]
    multiplicity: int
    exponent: int
    values: Tuple[int, ...]

    def value_at(self, n: int) -> int:
        return self.values[GRID.index(n)]


PUBLISHED_ROWS: Dict[Tuple[int, int], PublishedRow] = dict()


def _add(side, position, name, group_id, multiplicity, exponent, *values):
    assert group_id not in PUBLISHED_ROWS, '%s is already registered!' % (group_id, )
    assert side in SIDES, 'Unknown side: %s.' % side
    assert len(values) == len(GRID), 'Row %s must have %d values.' % (name, len(GRID))
    PUBLISHED_ROWS[group_id] = PublishedRow(side, position, name, group_id, multiplicity, exponent, tuple(values))


# ============= Solvable side ============ ##
_add('G', 1, 'C_4', (4, 1), 9, 4, 1, 2, 1, 4, 2, 1, 4, 4, 2, 1, 4, 4, 2, 4, 4, 4)
_add('G', 2, 'D_3', (6, 1), 6, 6, 1, 4, 3, 4, 6, 1, 4, 6, 4, 3, 6, 4, 6, 4, 6, 6)
_add('G', 3, 'C_7', (7, 1), 1, 7, 1, 1, 1, 1, 1, 7, 1, 1, 7, 7, 1, 7, 7, 7, 7, 7)
_add('G', 4, 'D_4', (8, 3), 9, 4, 1, 6, 1, 8, 6, 1, 8, 8, 6, 1, 8, 8, 6, 8, 8, 8)
_add('G', 5, 'D_7', (14, 1), 18, 14, 1, 8, 1, 8, 8, 7, 8, 8, 14, 7, 8, 14, 14, 14, 14, 14)
_add('G', 6, 'SL(2,3)', (24, 3), 21, 12, 1, 2, 9, 8, 18, 1, 8, 24, 2, 9, 24, 8, 18, 8, 24, 24)
_add('G', 7, 'C_24:C_2', (48, 6), 3, 24, 1, 14, 3, 28, 18, 1, 32, 36, 14, 3, 48, 28, 18, 32, 36, 48)
_add('G', 8, 'C_7:D_4', (56, 7), 3, 28, 1, 18, 1, 32, 18, 7, 32, 32, 42, 7, 32, 56, 42, 56, 56, 56)
_add('G', 9, 'C_7:C_12', (84, 1), 6, 84, 1, 2, 15, 16, 30, 7, 16, 72, 14, 21, 72, 28, 42, 28, 84, 84)
_add('G', 10, 'Dic_21', (84, 5), 6, 84, 1, 2, 3, 44, 6, 7, 44, 48, 14, 21, 48, 56, 42, 56, 84, 84)
_add('G', 11, 'C_7:A_4', (84, 11), 21, 42, 1, 4, 57, 4, 60, 7, 4, 60, 28, 63, 60, 28, 84, 28, 84, 84)
_add('G', 12, 'C_7:D_7', (98, 4), 2, 14, 1, 50, 1, 50, 50, 49, 50, 50, 98, 49, 50, 98, 98, 98, 98, 98)
_add('G', 13, 'C_4:F_7', (168, 9), 21, 84, 1, 30, 15, 32, 114, 7, 32, 144, 42, 21, 144, 56, 126, 56, 168, 168)
_add('G', 14, 'C_21:D_4', (168, 15), 9, 84, 1, 22, 3, 64, 54, 7, 64, 96, 70, 21, 96, 112, 126, 112, 168, 168)
_add('G', 15, 'C_7:D_12', (168, 17), 6, 84, 1, 50, 3, 64, 54, 7, 64, 96, 98, 21, 96, 112, 126, 112, 168, 168)
_add('G', 16, 'F_8:C_3', (168, 43), 3, 42, 1, 8, 57, 8, 120, 49, 8, 120, 56, 105, 120, 56, 168, 56, 168, 168)
_add('G', 17, 'D_8:D_7', (224, 106), 3, 56, 1, 52, 1, 96, 52, 7, 128, 96, 112, 7, 128, 168, 112, 224, 168, 224)
_add('G', 18, 'C_7:D_24', (336, 31), 3, 168, 1, 98, 3, 100, 102, 7, 128, 108, 182, 21, 192, 196, 210, 224, 252, 336)

# ============= Non-solvable side ============ ##
_add('H', 1, 'C_2', (2, 1), 21, 2, 1, 2, 1, 2, 2, 1, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2)
_add('H', 2, 'C_3', (3, 1), 3, 3, 1, 1, 3, 1, 3, 1, 1, 3, 1, 3, 3, 1, 3, 1, 3, 3)
_add('H', 3, 'Dic_3', (12, 1), 6, 12, 1, 2, 3, 8, 6, 1, 8, 12, 2, 3, 12, 8, 6, 8, 12, 12)
_add('H', 4, 'A_4', (12, 3), 21, 6, 1, 4, 9, 4, 12, 1, 4, 12, 4, 9, 12, 4, 12, 4, 12, 12)
_add('H', 5, 'SD_16', (16, 8), 3, 8, 1, 6, 1, 12, 6, 1, 16, 12, 6, 1, 16, 12, 6, 16, 12, 16)
_add('H', 6, 'C_7:C_3', (21, 1), 4, 21, 1, 1, 15, 1, 15, 7, 1, 15, 7, 21, 15, 7, 21, 7, 21, 21)
_add('H', 7, 'D_12', (24, 6), 6, 12, 1, 14, 3, 16, 18, 1, 16, 24, 14, 3, 24, 16, 18, 16, 24, 24)
_add('H', 8, 'C_3:D_4', (24, 8), 6, 12, 1, 10, 3, 16, 18, 1, 16, 24, 10, 3, 24, 16, 18, 16, 24, 24)
_add('H', 9, 'Dic_7', (28, 1), 15, 28, 1, 2, 1, 16, 2, 7, 16, 16, 14, 7, 16, 28, 14, 28, 28, 28)
_add('H', 10, 'F_7', (42, 1), 18, 42, 1, 8, 15, 8, 36, 7, 8, 36, 14, 21, 36, 14, 42, 14, 42, 42)
_add('H', 11, 'D_21', (42, 5), 6, 42, 1, 22, 3, 22, 24, 7, 22, 24, 28, 21, 24, 28, 42, 28, 42, 42)
_add('H', 12, 'D_24', (48, 7), 3, 24, 1, 26, 3, 28, 30, 1, 32, 36, 26, 3, 48, 28, 30, 32, 36, 48)
_add('H', 13, 'D_28', (56, 5), 27, 28, 1, 30, 1, 32, 30, 7, 32, 32, 42, 7, 32, 56, 42, 56, 56, 56)
_add('H', 14, 'Dic_7:C_6', (168, 11), 3, 84, 1, 18, 15, 32, 102, 7, 32, 144, 42, 21, 144, 56, 126, 56, 168, 168)
_add('H', 15, 'C_14.A_4', (168, 23), 21, 84, 1, 2, 57, 8, 114, 7, 8, 120, 14, 63, 120, 56, 126, 56, 168, 168)
_add('H', 16, 'GL(3,2)', (168, 42), 3, 84, 1, 22, 57, 64, 78, 49, 64, 120, 70, 105, 120, 112, 126, 112, 168, 168)
_add('H', 17, 'C_7:F_7', (294, 10), 2, 42, 1, 50, 15, 50, 162, 49, 50, 162, 98, 147, 162, 98, 294, 98, 294, 294)
_add('H', 18, 'D_12.D_7', (336, 36), 3, 168, 1, 14, 3, 100, 18, 7, 128, 108, 98, 21, 192, 196, 126, 224, 252, 336)

NON_SOLVABLE_IDS = ((168, 42), )

# Exponent type shared by both products, keyed by the divisors of 168.
PUBLISHED_PRODUCT: Dict[int, FactoredValue] = {
    1: FactoredValue(),
    2: FactoredValue({2: 221, 3: 36, 5: 37, 7: 9, 11: 9, 13: 3}),
    3: FactoredValue({3: 126, 5: 27, 19: 24}),
    4: FactoredValue({2: 500, 3: 3, 5: 10, 7: 3, 11: 6}),
    6: FactoredValue({2: 215, 3: 174, 5: 34, 13: 3, 17: 3, 19: 21}),
    7: FactoredValue({7: 107}),
    8: FactoredValue({2: 530, 5: 4, 11: 6}),
    12: FactoredValue({2: 464, 3: 144, 5: 28}),
    14: FactoredValue({2: 191, 3: 33, 5: 9, 7: 113, 13: 3}),
    21: FactoredValue({3: 147, 5: 3, 7: 104}),
    24: FactoredValue({2: 488, 3: 132, 5: 28}),
    28: FactoredValue({2: 374, 3: 3, 7: 110}),
    42: FactoredValue({2: 185, 3: 177, 5: 3, 7: 104}),
    56: FactoredValue({2: 398, 7: 104}),
    84: FactoredValue({2: 347, 3: 114, 7: 104}),
    168: FactoredValue({2: 365, 3: 105, 7: 104}),
}


def side_rows(side: str) -> List[PublishedRow]:
    return sorted((row for row in PUBLISHED_ROWS.values() if row.side == side), key=lambda row: row.position)
