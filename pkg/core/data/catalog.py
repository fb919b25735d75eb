'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Catalog of concrete permutation realisations keyed by (order, index) identifiers. Entries are
    validated on load by enumerating each group and checking its order, its solvability and, for published
    groups, its multiplicity.
'''
import json
import os
import re
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from loguru import logger

from core.groups import DEFAULT_ENUM_CAP, EnumerationCapError, FiniteGroup, Permutation, PermutationError, \
    enumerate_group, is_solvable
from .tables import PUBLISHED_ROWS

DEFAULT_CATALOG_PATH = os.path.join(os.path.dirname(__file__), 'catalog_data', 'default_catalog.json')
CATALOG_SIDES = ('G', 'H', 'aux')
REQUIRED_FIELDS = ('id', 'name', 'degree', 'generators', 'solvable', 'side', 'multiplicity')

GroupId = Tuple[int, int]


class CatalogFormatError(ValueError):
    pass


class CatalogValidationError(ValueError):
    pass


class CatalogLookupError(KeyError):

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ''


class GroupDescriptor(NamedTuple):
    """
    One catalog entry. ``position`` is the 1-based rank of the entry among entries of the same side, in file order.
    """
    id: GroupId
    name: str
    degree: int
    generators: Tuple[Permutation, ...]
    solvable: bool
    side: str
    multiplicity: int
    position: int = 0

    @property
    def order(self) -> int:
        return self.id[0]

    @property
    def label(self) -> str:
        return format_id(self.id)

    def to_dict(self) -> Dict:
        return dict(
            id=list(self.id),
            name=self.name,
            degree=self.degree,
            generators=[list(g) for g in self.generators],
            solvable=self.solvable,
            side=self.side,
            multiplicity=self.multiplicity,
        )


def format_id(group_id: GroupId) -> str:
    return '({}, {})'.format(*group_id)


_ID_PATTERN = re.compile(r'^\(?\s*(\d+)\s*,\s*(\d+)\s*\)?$')


def parse_id(selector: str) -> Optional[GroupId]:
    match = _ID_PATTERN.match(selector.strip())
    if match is None:
        return None
    return int(match.group(1)), int(match.group(2))


def build_group(descriptor: GroupDescriptor, cap: int = DEFAULT_ENUM_CAP) -> FiniteGroup:
    return enumerate_group(descriptor.generators, cap=cap)


class Catalog(object):
    """
    Ordered, read-only collection of ``GroupDescriptor`` with lookup by id and by name. Enumerated groups are
    cached per id so repeated spectrum computations do not re-enumerate.

    :Arguments:
        - entries (Iterable[GroupDescriptor]): Entries with unique ids.
        - enum_cap (int, optional): Enumeration cap used by ``group``. Defaults to 10000.

    :Interfaces: get, resolve, group, side, solvable_entries
    """

    def __init__(self, entries: Iterable[GroupDescriptor], enum_cap: int = DEFAULT_ENUM_CAP) -> None:
        self._entries = tuple(entries)
        self._enum_cap = enum_cap
        self._by_id = dict()
        self._by_name = dict()
        for d in self._entries:
            if d.id in self._by_id:
                raise CatalogValidationError("entry {}: duplicate id".format(d.label))
            self._by_id[d.id] = d
            self._by_name.setdefault(d.name.lower(), d)
        self._groups = dict()

    @property
    def entries(self) -> Tuple[GroupDescriptor, ...]:
        return self._entries

    @property
    def enum_cap(self) -> int:
        return self._enum_cap

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __contains__(self, group_id) -> bool:
        return tuple(group_id) in self._by_id

    def get(self, group_id: Sequence[int]) -> GroupDescriptor:
        group_id = tuple(group_id)
        if group_id not in self._by_id:
            raise CatalogLookupError("no catalog entry with id {}".format(format_id(group_id)))
        return self._by_id[group_id]

    def resolve(self, selector: Union[str, Sequence[int]]) -> GroupDescriptor:
        """
        Find an entry from ``"(o,i)"``, ``"o,i"``, an id pair or a case-insensitive name.
        """
        if not isinstance(selector, str):
            return self.get(selector)
        group_id = parse_id(selector)
        if group_id is not None:
            return self.get(group_id)
        key = selector.strip().lower()
        if key not in self._by_name:
            raise CatalogLookupError("no catalog entry matches '{}'".format(selector))
        return self._by_name[key]

    def group(self, group_id: Sequence[int]) -> FiniteGroup:
        group_id = tuple(group_id)
        if group_id not in self._groups:
            self._groups[group_id] = build_group(self.get(group_id), cap=self._enum_cap)
        return self._groups[group_id]

    def side(self, side: str) -> List[GroupDescriptor]:
        return [d for d in self._entries if d.side == side]

    def solvable_entries(self) -> List[GroupDescriptor]:
        return [d for d in self._entries if d.solvable]


def _parse_generators(raw, degree: int, label: str) -> Tuple[Permutation, ...]:
    if not isinstance(raw, list) or len(raw) == 0:
        raise CatalogFormatError("entry {}: 'generators' must be a non-empty list".format(label))
    gens = []
    for g in raw:
        try:
            if isinstance(g, str):
                gens.append(Permutation.from_cycles(g, degree))
            elif isinstance(g, list) and all(isinstance(x, int) for x in g):
                if len(g) != degree:
                    raise PermutationError("image list of length {} for degree {}".format(len(g), degree))
                gens.append(Permutation(g))
            else:
                raise PermutationError("generator {!r} is neither an image list nor a cycle string".format(g))
        except PermutationError as e:
            raise CatalogFormatError("entry {}: {}".format(label, e))
    return tuple(gens)


def parse_entry(raw: Dict, position: int = 0) -> GroupDescriptor:
    if not isinstance(raw, dict):
        raise CatalogFormatError("catalog entries must be objects, got {!r}".format(raw))
    for key in REQUIRED_FIELDS:
        if key not in raw:
            raise CatalogFormatError("entry {!r} misses field '{}'".format(raw.get('id', raw.get('name')), key))
    group_id = raw['id']
    if not (isinstance(group_id, list) and len(group_id) == 2 and all(isinstance(x, int) and x > 0
                                                                       for x in group_id)):
        raise CatalogFormatError("entry id {!r} must be a pair of positive integers".format(group_id))
    group_id = tuple(group_id)
    label = format_id(group_id)
    degree = raw['degree']
    if not isinstance(degree, int) or degree < 1:
        raise CatalogFormatError("entry {}: degree must be a positive integer".format(label))
    if raw['side'] not in CATALOG_SIDES:
        raise CatalogFormatError("entry {}: side must be one of {}".format(label, CATALOG_SIDES))
    if not isinstance(raw['solvable'], bool) or not isinstance(raw['multiplicity'], int):
        raise CatalogFormatError("entry {}: 'solvable' must be a boolean and 'multiplicity' an integer".format(label))
    return GroupDescriptor(
        id=group_id,
        name=str(raw['name']),
        degree=degree,
        generators=_parse_generators(raw['generators'], degree, label),
        solvable=raw['solvable'],
        side=raw['side'],
        multiplicity=raw['multiplicity'],
        position=position,
    )


def validate_entry(descriptor: GroupDescriptor, cap: int = DEFAULT_ENUM_CAP) -> FiniteGroup:
    """
    Enumerate ``descriptor`` and check it against its declared order, solvability and multiplicity.

    :Returns:
        FiniteGroup: The enumerated group, for reuse by the caller.
    """
    label = descriptor.label
    try:
        group = build_group(descriptor, cap=cap)
    except EnumerationCapError as e:
        raise CatalogValidationError("entry {}: order check failed, {}".format(label, e))
    if group.order != descriptor.order:
        raise CatalogValidationError(
            "entry {}: order check failed, generators give order {}".format(label, group.order)
        )
    solvable = is_solvable(group)
    if solvable != descriptor.solvable:
        raise CatalogValidationError(
            "entry {}: solvability check failed, declared {} but computed {}".format(
                label, descriptor.solvable, solvable
            )
        )
    if descriptor.side == 'aux':
        if descriptor.multiplicity != 0:
            raise CatalogValidationError("entry {}: auxiliary entries carry multiplicity 0".format(label))
    else:
        if descriptor.multiplicity < 1:
            raise CatalogValidationError("entry {}: multiplicity must be positive".format(label))
        row = PUBLISHED_ROWS.get(descriptor.id)
        if row is not None and row.side == descriptor.side and row.multiplicity != descriptor.multiplicity:
            raise CatalogValidationError(
                "entry {}: multiplicity check failed, expected {} got {}".format(
                    label, row.multiplicity, descriptor.multiplicity
                )
            )
    return group


def catalog_from_dicts(raw_entries, enum_cap: int = DEFAULT_ENUM_CAP, validate: bool = True) -> Catalog:
    if not isinstance(raw_entries, list):
        raise CatalogFormatError("catalog must be a JSON list of entries")
    counters = dict()
    entries = []
    for raw in raw_entries:
        side = raw.get('side') if isinstance(raw, dict) else None
        counters[side] = counters.get(side, 0) + 1
        entries.append(parse_entry(raw, counters[side]))
    catalog = Catalog(entries, enum_cap=enum_cap)
    if validate:
        for d in catalog:
            catalog._groups[d.id] = validate_entry(d, cap=enum_cap)
    return catalog


def load_catalog(path: Optional[str] = None, enum_cap: int = DEFAULT_ENUM_CAP, validate: bool = True) -> Catalog:
    """
    Load and validate a catalog file.

    :Arguments:
        - path (str, optional): JSON catalog path. Defaults to the bundled catalog.
        - enum_cap (int, optional): Enumeration cap for validation and later group builds. Defaults to 10000.
        - validate (bool, optional): Run order, solvability and multiplicity checks. Defaults to True.
    """
    path = path or DEFAULT_CATALOG_PATH
    try:
        with open(path, 'r', encoding='utf-8') as f:
            raw_entries = json.load(f)
    except OSError as e:
        raise CatalogFormatError("cannot read catalog {}: {}".format(path, e))
    except json.JSONDecodeError as e:
        raise CatalogFormatError("cannot parse catalog {}: {}".format(path, e))
    catalog = catalog_from_dicts(raw_entries, enum_cap=enum_cap, validate=validate)
    logger.info('[CATALOG] loaded {} entries from {}'.format(len(catalog), path))
    return catalog


def dump_catalog(catalog: Catalog, path: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump([d.to_dict() for d in catalog], f, indent=2, sort_keys=True)
        f.write('\n')


def merge_catalogs(base: Catalog, extra: Catalog) -> Catalog:
    """
    Append the entries of ``extra`` to ``base``; a repeated id is a validation error.
    """
    for d in extra:
        if d.id in base:
            raise CatalogValidationError("entry {}: duplicate id in extra corpus".format(d.label))
    merged = Catalog(list(base) + list(extra), enum_cap=base.enum_cap)
    merged._groups.update(base._groups)
    merged._groups.update(extra._groups)
    logger.info('[CATALOG] merged {} extra entries'.format(len(extra)))
    return merged
