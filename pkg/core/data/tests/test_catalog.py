import json

import pytest

from core.data import load_catalog, dump_catalog, merge_catalogs, catalog_from_dicts, build_group, \
    CatalogFormatError, CatalogValidationError, CatalogLookupError, DEFAULT_CATALOG_PATH, PUBLISHED_ROWS, \
    NON_SOLVABLE_IDS, side_rows
from core.groups import is_solvable, is_direct_product


def _entry(group_id, generators, degree, solvable=True, side='aux', multiplicity=0, name='X'):
    return dict(
        id=list(group_id),
        name=name,
        degree=degree,
        generators=generators,
        solvable=solvable,
        side=side,
        multiplicity=multiplicity,
    )


def _write(tmp_path, entries, name='catalog.json'):
    path = tmp_path / name
    path.write_text(json.dumps(entries), encoding='utf-8')
    return str(path)


@pytest.mark.unittest
class TestBundledCatalog:

    def test_contents(self, catalog):
        assert len(catalog.side('G')) == 18
        assert len(catalog.side('H')) == 18
        assert {d.name for d in catalog.side('aux')} == {'C_1', 'He_3', 'C_3^3', 'A_5'}
        for group_id, row in PUBLISHED_ROWS.items():
            d = catalog.get(group_id)
            assert d.side == row.side
            assert d.multiplicity == row.multiplicity
            assert d.position == row.position

    def test_bundled_file_uses_image_arrays(self, catalog):
        with open(DEFAULT_CATALOG_PATH, 'r', encoding='utf-8') as f:
            raw = json.load(f)
        for entry in raw:
            for g in entry['generators']:
                assert isinstance(g, list) and len(g) == entry['degree'], entry['name']
                assert sorted(g) == list(range(entry['degree']))
        assert raw[0]['generators'] == [[1, 2, 3, 0]]
        assert [tuple(g) for g in catalog.get((60, 5)).generators] == [(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)]

    def test_build_group(self, catalog):
        assert build_group(catalog.get((4, 1))).order == 4
        assert build_group(catalog.get((2, 1))).order == 2
        assert build_group(catalog.get((294, 10))).order == 294
        assert catalog.group((168, 42)).order == 168
        assert catalog.group((14, 1)).order == 14

    @pytest.mark.slow
    def test_solvability_split(self, catalog):
        for d in catalog:
            expected = d.id not in NON_SOLVABLE_IDS and d.id != (60, 5)
            assert is_solvable(catalog.group(d.id)) == expected, d.label

    @pytest.mark.slow
    def test_element_orders_divide_group_order(self, catalog):
        for d in catalog:
            group = catalog.group(d.id)
            assert all(group.order % g.order() == 0 for g in group.elements), d.label

    @pytest.mark.slow
    def test_published_groups_are_not_direct_products(self, catalog):
        for side in ('G', 'H'):
            for row in side_rows(side):
                assert not is_direct_product(catalog.group(row.id), max_closures=64), row.name

    def test_resolve(self, catalog):
        assert catalog.resolve('(168,42)').name == 'GL(3,2)'
        assert catalog.resolve('168, 42').name == 'GL(3,2)'
        assert catalog.resolve('gl(3,2)').id == (168, 42)
        assert catalog.resolve('A_5').id == (60, 5)
        assert catalog.resolve([4, 1]).name == 'C_4'
        with pytest.raises(CatalogLookupError):
            catalog.resolve('(5,1)')
        with pytest.raises(CatalogLookupError):
            catalog.resolve('M_11')


@pytest.mark.unittest
class TestCatalogValidation:

    def test_order_mismatch(self, tmp_path):
        path = _write(tmp_path, [_entry((14, 1), ['(0,1,2)(3,4,5,6,7)'], 8, side='G', multiplicity=18)])
        with pytest.raises(CatalogValidationError, match=r'\(14, 1\).*order'):
            load_catalog(path)

    def test_solvability_mismatch(self, tmp_path):
        path = _write(
            tmp_path, [_entry((168, 42), ['(0,1,2,3,4,5,6)', '(0,7)(1,6)(2,3)(4,5)'], 8, side='H', multiplicity=3)]
        )
        with pytest.raises(CatalogValidationError, match='solvab'):
            load_catalog(path)

    def test_multiplicity_mismatch(self, tmp_path):
        path = _write(tmp_path, [_entry((4, 1), ['(0,1,2,3)'], 4, side='G', multiplicity=8)])
        with pytest.raises(CatalogValidationError, match='multiplicity'):
            load_catalog(path)

    def test_duplicate_id(self, tmp_path):
        path = _write(tmp_path, [_entry((2, 1), ['(0,1)'], 2), _entry((2, 1), [[1, 0]], 2)])
        with pytest.raises(CatalogValidationError, match='duplicate'):
            load_catalog(path)

    @pytest.mark.parametrize(
        'entries', [
            [_entry((2, 1), ['(0,2)'], 2)],
            [_entry((2, 1), [[1, 0, 2]], 2)],
            [_entry((2, 1), [], 2)],
            [_entry((2, 1), ['(0,1)'], 2, side='left')],
            [{'id': [2, 1], 'name': 'C_2'}],
            {'id': [2, 1]},
        ]
    )
    def test_format_errors(self, tmp_path, entries):
        with pytest.raises(CatalogFormatError):
            load_catalog(_write(tmp_path, entries))

    def test_unparsable_file(self, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('[{', encoding='utf-8')
        with pytest.raises(CatalogFormatError):
            load_catalog(str(path))
        with pytest.raises(CatalogFormatError):
            load_catalog(str(tmp_path / 'missing.json'))

    def test_enumeration_cap_reported(self, tmp_path):
        path = _write(tmp_path, [_entry((60, 5), ['(0,1,2,3,4)', '(0,1,2)'], 5, solvable=False)])
        with pytest.raises(CatalogValidationError, match='cap'):
            load_catalog(path, enum_cap=30)


@pytest.mark.unittest
class TestCatalogSerialization:

    def test_dump_round_trip(self, catalog, tmp_path):
        path = str(tmp_path / 'dumped.json')
        dump_catalog(catalog, path)
        reloaded = load_catalog(path)
        assert reloaded.entries == catalog.entries
        with open(path, 'r', encoding='utf-8') as f:
            raw = json.load(f)
        assert all(isinstance(g, list) for entry in raw for g in entry['generators'])

    def test_merge(self, catalog):
        extra = catalog_from_dicts([_entry((6, 2), ['(0,1,2,3,4,5)'], 6, name='C_6')])
        merged = merge_catalogs(catalog, extra)
        assert len(merged) == len(catalog) + 1
        assert merged.resolve('c_6').id == (6, 2)
        with pytest.raises(CatalogValidationError):
            merge_catalogs(merged, extra)
