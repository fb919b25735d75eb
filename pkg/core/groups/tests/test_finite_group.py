import random

import pytest

from core.groups import Permutation, identity, conjugate, enumerate_group, is_solvable, normal_subgroups, \
    is_direct_product, derived_series, derived_subgroup, conjugacy_classes, direct_product, is_abelian, \
    normal_closure, EnumerationCapError, NormalSubgroupGuardError, PermutationError


def _group(cycles, degree, **kwargs):
    return enumerate_group([Permutation.from_cycles(c, degree) for c in cycles], **kwargs)


@pytest.fixture(scope='module')
def small_groups():
    return dict(
        c4=_group(['(0,1,2,3)'], 4),
        c6=_group(['(0,1)(2,3,4)'], 5),
        klein=_group(['(0,1)', '(2,3)'], 4),
        s3=_group(['(0,1,2)', '(0,1)'], 3),
        a4=_group(['(0,1,2)', '(0,1)(2,3)'], 4),
        s4=_group(['(0,1,2,3)', '(0,1)'], 4),
        a5=_group(['(0,1,2,3,4)', '(0,1,2)'], 5),
    )


@pytest.mark.unittest
class TestEnumeration:

    def test_orders(self, small_groups):
        expected = dict(c4=4, c6=6, klein=4, s3=6, a4=12, s4=24, a5=60)
        for name, order in expected.items():
            assert small_groups[name].order == order, name

    def test_closure_contains_generators_and_identity(self, small_groups):
        for g in small_groups.values():
            assert g.identity in g
            for s in g.generators:
                assert s in g
                assert g.order % s.order() == 0

    def test_generator_order_independent(self):
        a = _group(['(0,1,2,3)', '(0,1)'], 4)
        b = _group(['(0,1)', '(0,1,2,3)'], 4)
        assert a.elements == b.elements

    def test_cap(self):
        with pytest.raises(EnumerationCapError, match='23'):
            _group(['(0,1,2,3)', '(0,1)'], 4, cap=23)
        assert _group(['(0,1,2,3)', '(0,1)'], 4, cap=24).order == 24

    def test_degree_mismatch(self):
        with pytest.raises(PermutationError):
            enumerate_group([identity(3), identity(4)])
        with pytest.raises(PermutationError):
            enumerate_group([])

    def test_image_sequences_accepted(self):
        assert enumerate_group([[1, 2, 0]]).order == 3


@pytest.mark.unittest
class TestStructure:

    def test_solvable(self, small_groups):
        for name in ['c4', 'c6', 'klein', 's3', 'a4', 's4']:
            assert is_solvable(small_groups[name]), name
        assert not is_solvable(small_groups['a5'])

    def test_derived_series(self, small_groups):
        assert [g.order for g in derived_series(small_groups['s4'])] == [24, 12, 4, 1]
        assert [g.order for g in derived_series(small_groups['a5'])] == [60]
        assert derived_subgroup(small_groups['c4']).order == 1

    def test_abelian(self, small_groups):
        assert is_abelian(small_groups['klein'])
        assert not is_abelian(small_groups['s3'])

    def test_conjugacy_classes(self, small_groups):
        sizes = sorted(len(c) for c in conjugacy_classes(small_groups['s4']))
        assert sizes == [1, 3, 6, 6, 8]
        assert len(conjugacy_classes(small_groups['a5'])) == 5

    def test_normal_closure(self, small_groups):
        s4 = small_groups['s4']
        assert normal_closure(s4, [Permutation.from_cycles('(0,1)(2,3)', 4)]).order == 4
        assert normal_closure(s4, [Permutation.from_cycles('(0,1,2)', 4)]).order == 12
        assert normal_closure(s4, [identity(4)]).order == 1

    @pytest.mark.parametrize('name,orders', [
        ('c4', [1, 2, 4]),
        ('s3', [1, 3, 6]),
        ('a4', [1, 4, 12]),
        ('s4', [1, 4, 12, 24]),
        ('a5', [1, 60]),
    ])
    def test_normal_subgroups(self, small_groups, name, orders):
        g = small_groups[name]
        normals = normal_subgroups(g)
        assert [n.order for n in normals] == orders
        for n in normals:
            for s in g.generators:
                assert all(conjugate(x, s) in n for x in n.elements)

    def test_normal_subgroup_guard(self, small_groups):
        with pytest.raises(NormalSubgroupGuardError):
            normal_subgroups(small_groups['a4'], max_closures=1)

    def test_direct_product_detection(self, small_groups):
        assert is_direct_product(small_groups['klein'])
        assert is_direct_product(small_groups['c6'])
        assert not is_direct_product(small_groups['s3'])
        assert not is_direct_product(small_groups['c4'])
        assert not is_direct_product(small_groups['a5'])

    def test_direct_product(self, small_groups):
        g = direct_product([small_groups['s3'], small_groups['c4']])
        assert g.degree == 7
        assert g.order == 24
        assert is_direct_product(g)
        assert not is_solvable(direct_product([small_groups['s3'], small_groups['a5']], cap=400))

    @pytest.mark.slow
    def test_product_solvability_on_catalog_pairs(self, catalog):
        rng = random.Random(2021)
        entries = list(catalog)
        pairs = []
        while len(pairs) < 20:
            a, b = rng.choice(entries), rng.choice(entries)
            if a.id[0] * b.id[0] <= 2000:
                pairs.append((a, b))
        for a, b in pairs:
            ga, gb = catalog.group(a.id), catalog.group(b.id)
            product = direct_product([ga, gb])
            assert product.order == a.id[0] * b.id[0]
            assert is_solvable(product) == (is_solvable(ga) and is_solvable(gb)), (a.name, b.name)
