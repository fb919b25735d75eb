import json

import pytest

from core.cli import main
from core.data import DEFAULT_CATALOG_PATH


def _write_catalog(tmp_path, entries, name='catalog.json'):
    path = tmp_path / name
    path.write_text(json.dumps(entries), encoding='utf-8')
    return str(path)


def _raw_entries():
    with open(DEFAULT_CATALOG_PATH, 'r', encoding='utf-8') as f:
        return json.load(f)


@pytest.mark.unittest
class TestCatalogCommand:

    def test_list_csv(self, capsys):
        assert main(['catalog', 'list']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == 'Id,name,side,position,degree,solvable,multiplicity'
        assert len(lines) == 41
        assert lines[1] == '"(4, 1)",C_4,G,1,4,True,9'

    def test_list_table(self, capsys):
        assert main(['catalog', 'list', '--format', 'table']) == 0
        out = capsys.readouterr().out
        assert 'GL(3,2)' in out
        assert 'Catalog' in out

    def test_dump_round_trip(self, tmp_path, capsys):
        out = tmp_path / 'dump.json'
        assert main(['catalog', 'dump', '--out', str(out)]) == 0
        assert main(['catalog', 'list', '--catalog', str(out)]) == 0
        assert capsys.readouterr().out.count('\n') == 41


@pytest.mark.unittest
class TestSpectrumCommand:

    def test_gl32_row_on_grid(self, capsys):
        assert main(['spectrum', '(168,42)', '--grid', '168']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == '# exponent spectrum'
        assert lines[1] == 'i,name,Id,multiplicity,E,1,2,3,4,6,7,8,12,14,21,24,28,42,56,84,168'
        assert lines[2] == '16,"GL(3,2)","(168, 42)",3,84,1,22,57,64,78,49,64,120,70,105,120,112,126,112,168,168'

    def test_published_group_defaults_to_published_columns(self, capsys):
        assert main(['spectrum', '(168,42)']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[1] == 'i,name,Id,multiplicity,E,1,2,3,4,6,7,8,12,14,21,24,28,42,56,84,168'
        assert lines[2] == '16,"GL(3,2)","(168, 42)",3,84,1,22,57,64,78,49,64,120,70,105,120,112,126,112,168,168'

    def test_published_small_group_json(self, capsys):
        assert main(['spectrum', 'C_2', '--format', 'json']) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data['grid']) == 16
        assert [v['e'] for v in data['values']][:3] == [1, 2, 1]
        assert data['values'][1]['r'] == [[2, 1]]
        assert data['valuation'] == [[2, 2, 1]]

    def test_default_grid_is_exponent_divisors(self, capsys):
        assert main(['spectrum', 'He_3', '--format', 'json']) == 0
        data = json.loads(capsys.readouterr().out)
        assert data['grid'] == [1, 3]
        assert [v['e'] for v in data['values']] == [1, 27]
        assert data['values'][1]['r'] == [[3, 3]]
        assert data['valuation'] == [[3, 3, 3]]

    def test_trivial_group(self, capsys):
        assert main(['spectrum', '(1,1)', '--format', 'json']) == 0
        data = json.loads(capsys.readouterr().out)
        assert data['grid'] == [1]
        assert data['values'] == [dict(n=1, o=1, e=1, r=[])]

    def test_unknown_selector(self, capsys):
        assert main(['spectrum', 'M_11']) == 4

    def test_table_format_rejected(self, capsys):
        assert main(['spectrum', 'C_4', '--format', 'table']) == 4


@pytest.mark.unittest
class TestVerifyTheorem:

    def test_bundled_catalog_passes(self, capsys):
        assert main(['verify-theorem']) == 0
        out = capsys.readouterr().out
        assert '# G exponent spectra' in out
        assert '168,2^365·3^105·7^104,2^365·3^105·7^104' in out
        assert 'published_products,True' in out

    def test_output_is_deterministic(self, tmp_path):
        first = tmp_path / 'first.csv'
        second = tmp_path / 'second.csv'
        assert main(['verify-theorem', '--out', str(first)]) == 0
        assert main(['verify-theorem', '--out', str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    @pytest.mark.slow
    def test_corrupted_generator(self, tmp_path, capsys):
        raw = _raw_entries()
        for entry in raw:
            if entry['id'] == [24, 3]:
                entry['generators'] = ['(0,1,2,3)', '(0,1)']
        path = _write_catalog(tmp_path, raw)
        assert main(['verify-theorem', '--catalog', path]) == 2
        assert 'G row 6' in capsys.readouterr().err

    def test_missing_entry(self, tmp_path, capsys):
        raw = [entry for entry in _raw_entries() if entry['id'] != [21, 1]]
        path = _write_catalog(tmp_path, raw)
        assert main(['verify-theorem', '--catalog', path]) == 4
        assert '(21, 1)' in capsys.readouterr().err

    def test_json_report(self, capsys):
        assert main(['verify-theorem', '--format', 'json']) == 0
        data = json.loads(capsys.readouterr().out)
        assert data['passed'] is True
        assert data['checks'][-1]['name'] == 'published_products'
        assert data['tables']['H exponent spectra'][15]['name'] == 'GL(3,2)'
        products = {row['n']: row for row in data['tables']['exponent type products']}
        assert products[168]['G'] == products[168]['H'] == [[2, 365], [3, 105], [7, 104]]
        assert products[1]['G'] == []
        check = data['checks'][-1]
        assert {v['n']: v['side_a'] for v in check['values']}[168] == [[2, 365], [3, 105], [7, 104]]


@pytest.mark.unittest
class TestEmitTables:

    def test_products_section(self, capsys):
        assert main(['emit-tables']) == 0
        out = capsys.readouterr().out
        assert '# exponent type products' in out
        assert '42,2^185·3^177·5^3·7^104,2^185·3^177·5^3·7^104' in out
        assert 'published_products' not in out

    def test_products_json_pairs(self, capsys):
        assert main(['emit-tables', '--format', 'json']) == 0
        data = json.loads(capsys.readouterr().out)
        products = {row['n']: row for row in data['tables']['exponent type products']}
        assert products[42]['G'] == [[2, 185], [3, 177], [5, 3], [7, 104]]


@pytest.mark.unittest
class TestSearchCommand:

    def test_gl32(self, tmp_path):
        out = tmp_path / 'cert.json'
        assert main(['search', 'GL(3,2)', '--out', str(out)]) == 0
        data = json.loads(out.read_text(encoding='utf-8'))
        assert data['status'] == 'verified'
        assert data['certificate']['verified'] is True
        assert [168, 42] in [e['id'] for e in data['certificate']['side_b']]
        equality = {c['name']: c for c in data['checks']}['exponent_type_equality']
        values = {v['n']: v for v in equality['values']}
        assert values[168]['side_a'] == values[168]['side_b'] == [[2, 365], [3, 105], [7, 104]]

    def test_a5_infeasible(self, capsys):
        assert main(['search', 'A_5']) == 3
        data = json.loads(capsys.readouterr().out)
        assert data['status'] == 'infeasible'

    def test_solvable_target(self, capsys):
        assert main(['search', '(27,5)']) == 5

    def test_screen(self, capsys):
        assert main(['screen', '(168,42)']) == 0
        data = json.loads(capsys.readouterr().out)
        assert data['cols'] == 35
        assert data['within_tol'] is True


@pytest.mark.unittest
class TestRunConfig:

    def test_unknown_flag(self, capsys):
        assert main(['catalog', 'list', '--colour']) == 4

    def test_missing_command(self, capsys):
        assert main([]) == 4

    def test_yaml_config(self, tmp_path, capsys):
        cfg = tmp_path / 'run.yaml'
        cfg.write_text('format: json\nsolver:\n  max_multiplicity: 2\n', encoding='utf-8')
        assert main(['catalog', 'list', '--config', str(cfg)]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data[0]['name'] == 'C_4'

    def test_yaml_unknown_key(self, tmp_path, capsys):
        cfg = tmp_path / 'run.yaml'
        cfg.write_text('colour: red\n', encoding='utf-8')
        assert main(['catalog', 'list', '--config', str(cfg)]) == 4

    def test_yaml_exclude_direct_products(self, tmp_path, capsys):
        extra = _write_catalog(
            tmp_path, [
                dict(
                    id=[6, 2],
                    name='C_6',
                    degree=5,
                    generators=['(0,1,2)(3,4)'],
                    solvable=True,
                    side='aux',
                    multiplicity=0
                )
            ],
            name='extra.json'
        )
        assert main(['screen', '(168,42)', '--extra-corpus', extra]) == 0
        assert json.loads(capsys.readouterr().out)['cols'] == 36
        cfg = tmp_path / 'run.yaml'
        cfg.write_text('solver:\n  exclude_direct_products: true\n', encoding='utf-8')
        assert main(['search', 'GL(3,2)', '--extra-corpus', extra, '--config', str(cfg)]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data['corpus_size'] == 35
        assert data['status'] == 'verified'
