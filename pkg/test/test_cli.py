'''测试命令行: stdout内容与exit code'''
import json
import pytest
from psi4opt.cli import build_config, main
from psi4opt.snippets import ConfigError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize("argv, expected", [
    (['compute', '--g', '0', '1', '1', '1', '0', '0', '0'], '6\n'),
    (['compute', '--g', '2', '4'], '1/1152\n'),
    (['compute', '--g', '1', '1'], '1/24\n'),
    (['compute', '--g', '0', '1', '0', '0'], '0\n'),
])
def test_compute(capsys, argv, expected):
    assert run(capsys, *argv) == (0, expected)


def test_compute_unstable(capsys):
    code, out = run(capsys, 'compute', '--g', '0', '0', '0')
    assert code == 2 and out == ''


def test_table(capsys):
    code, out = run(capsys, 'table', '--g', '0', '--n', '4')
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4 and all(line.endswith(' 1') for line in lines)
    assert run(capsys, 'table', '--g', '1', '--n', '1') == (0, '(1) 1/24\n')


def test_global_flags_before_and_after(capsys):
    expected = (0, 'e,value\n(1),1/24\n')
    assert run(capsys, '--format', 'csv', 'table', '--g', '1', '--n', '1') == expected
    assert run(capsys, 'table', '--g', '1', '--n', '1', '--format', 'csv') == expected
    code, out = run(capsys, 'table', '--g', '1', '--n', '1', '--format', 'json')
    assert json.loads(out) == [{'e': '(1)', 'value': '1/24'}]


def test_extrema(capsys):
    code, out = run(capsys, 'extrema', '--g', '0', '--n', '6')
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    assert lines[0].startswith('max 6 at (') and sorted(lines[0][10:-1].split(',')) == ['0'] * 3 + ['1'] * 3
    assert lines[1] == 'min 1 at (3,0,0,0,0,0)'

    code, out = run(capsys, 'extrema', '--g', '1', '--n', '2')
    assert out.splitlines()[-1] == 'plateau: all values 1/24'

    assert run(capsys, 'extrema', '--g', '2', '--n', '1') == (0, 'max 1/1152 at (4)\nmin 1/1152 at (4)\n')


def test_table_budget(capsys):
    assert run(capsys, 'table', '--g', '1', '--n', '2') == (0, '(2,0) 1/24\n(1,1) 1/24\n(0,2) 1/24\n')
    assert run(capsys, 'table', '--g', '2', '--n', '3', '--budget', '3') == (1, '')


def test_verify(capsys):
    code, out = run(capsys, 'verify', '--gmax', '1', '--nmax', '3', '--format', 'csv')
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == 'g,n,d,space_size,max,argmax_key,min,argmin_key,S,LC,P,status'
    assert [line.split(',')[:2] for line in lines[1:]] == [['0', '3'], ['1', '1'], ['1', '2'], ['1', '3']]
    assert all(line.endswith(',PASS') for line in lines[1:])


def test_verify_refused(capsys):
    code, out = run(capsys, 'verify', '--gmax', '1', '--nmax', '3', '--format', 'csv', '--budget', '5')
    assert code == 1
    assert out.splitlines()[-1] == '1,3,3,10,,,,,,,,REFUSED'


def test_verify_empty(capsys):
    code, out = run(capsys, 'verify', '--gmax', '0', '--nmax', '2', '--format', 'csv')
    assert code == 0 and out.count('\n') == 1

    code, out = run(capsys, 'verify', '--gmax', '0', '--nmax', '2')
    assert code == 0
    assert out.splitlines()[-1] == '# no stable (g, n) with g <= 0, n <= 2; nothing to verify, PASS'


def test_verify_is_deterministic(capsys):
    first = run(capsys, 'verify', '--gmax', '2', '--nmax', '2')
    second = run(capsys, 'verify', '--gmax', '2', '--nmax', '2')
    assert first == second and first[0] == 0


def test_identities(capsys):
    code, out = run(capsys, 'identities', '--g', '1', '--n', '3')
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == '# g=1 n=3 mode=exhaustive vectors=10 seed=42'
    assert lines[1].startswith('string PASS ')
    assert 'one_point N/A 0' in lines

    code, out = run(capsys, 'identities', '--g', '3', '--n', '5', '--samples', '20', '--seed', '3')
    assert code == 0 and out.splitlines()[0] == '# g=3 n=5 mode=sampled vectors=20 seed=3'


def test_balanced(capsys):
    assert run(capsys, 'balanced', '--gmax', '1', '--nmax', '2') == (0, '1 1 (1) 1/24\n1 2 (1,1) 1/24\n')


def test_cache_file(capsys, tmp_path):
    path = tmp_path / 'cache.txt'
    assert run(capsys, 'compute', '--g', '2', '4', '--cache', str(path)) == (0, '1/1152\n')
    text = path.read_text(encoding='utf-8')
    assert '2|4|1/1152' in text.splitlines()
    assert text.endswith('\n')

    exported = tmp_path / 'export.txt'
    code, out = run(capsys, 'cache', 'export', str(exported), '--cache', str(path))
    assert code == 0 and out.startswith('exported ')
    assert exported.read_text(encoding='utf-8') == text

    code, out = run(capsys, 'cache', 'import', str(exported))
    assert code == 0 and out == f'imported {text.count(chr(10))}\n'


def test_cache_conflict(capsys, tmp_path):
    path = tmp_path / 'cache.txt'
    run(capsys, 'compute', '--g', '2', '4', '--cache', str(path))
    before = path.read_text(encoding='utf-8')
    tampered = tmp_path / 'tampered.txt'
    tampered.write_text('2|4|1/1000\n', encoding='utf-8')
    code, out = run(capsys, 'cache', 'import', str(tampered), '--cache', str(path))
    assert code == 1 and out == ''
    assert path.read_text(encoding='utf-8') == before


@pytest.mark.parametrize("content", ['2|4|abc\n', '2|4|1/1152', '2|4|2/2304\n', '2|4,x|1\n', '2|²|1/1152\n',
                                     '0|1,0,0|5\n'])
def test_cache_malformed(capsys, tmp_path, content):
    bad = tmp_path / 'bad.txt'
    bad.write_text(content, encoding='utf-8')
    assert run(capsys, 'cache', 'import', str(bad)) == (2, '')


def test_cache_missing_file(capsys, tmp_path):
    assert run(capsys, 'cache', 'import', str(tmp_path / 'missing.txt'))[0] == 2


def test_config_file(capsys, tmp_path):
    config = tmp_path / 'config.json'
    config.write_text(json.dumps({'budget': 5, 'format': 'csv'}), encoding='utf-8')
    assert run(capsys, 'verify', '--gmax', '1', '--nmax', '3', '--config', str(config))[0] == 1
    # 命令行参数覆盖配置文件
    assert run(capsys, 'verify', '--gmax', '1', '--nmax', '3', '--config', str(config), '--budget', '100')[0] == 0

    config.write_text(json.dumps({'batch_size': 8}), encoding='utf-8')
    assert run(capsys, 'verify', '--gmax', '1', '--nmax', '3', '--config', str(config))[0] == 2


@pytest.mark.parametrize("argv", [
    ['compute', '1', '1'],
    ['table', '--g', 'x', '--n', '1'],
    ['verify', '--gmax', '1'],
    ['table', '--g', '1', '--n', '1', '--format', 'xml'],
    ['nosuchcommand'],
])
def test_bad_arguments(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_build_config(tmp_path):
    config = build_config(budget=10, seed=1)
    assert config.budget == 10 and config.seed == 1 and config.format == 'table'
    for bad in ({'budget': 0}, {'seed': 'a'}, {'workers': True}, {'format': 'xml'}, {'engine': 'fast'},
                {'progress': 1}, {'cache': 3}):
        with pytest.raises(ConfigError):
            build_config(**bad)
    with pytest.raises(ConfigError):
        build_config(str(tmp_path / 'missing.json'))


if __name__ == '__main__':
    main(['verify', '--gmax', '2', '--nmax', '4'])
