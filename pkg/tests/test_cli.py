import json

import pandas as pd
import pytest

from layered_defense import catalog
from layered_defense.cli import main
from layered_defense.core_model import Model, SecuritySystem
from layered_defense.documents import load_security_system

pytestmark = pytest.mark.usefixtures("reset_logging")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_maxp_budget(capsys, write_document, crossing_pair):
    path = write_document(crossing_pair[0])
    code, out = run(capsys, 'maxp', path, '--budget', '4')
    assert code == 0
    assert out.splitlines() == ['5', 'attack: u1 u3']


def test_maxp_rational_budget(capsys, write_document, crossing_pair):
    path = write_document(crossing_pair[0])
    code, out = run(capsys, 'maxp', path, '--budget', '3.5')
    assert out.splitlines()[0] == '2'


def test_maxp_profile_and_csv(capsys, write_document, tmp_path, crossing_pair):
    path = write_document(crossing_pair[0])
    csv_path = tmp_path / 'profile.csv'
    code, out = run(capsys, 'maxp', path, '--profile', '--csv', str(csv_path))
    assert code == 0
    assert 'threshold' in out
    frame = pd.read_csv(csv_path, dtype=str, keep_default_na=False)
    assert frame['value'].tolist() == ['0', '1', '2', '5', '6']


def test_maxp_rejects_bad_budgets(capsys, write_document, crossing_pair):
    path = write_document(crossing_pair[0])
    with pytest.raises(SystemExit):
        main(['maxp', path, '--budget', 'abc'])
    assert main(['maxp', path, '--budget=-1']) == 2


def test_classify(capsys, write_document):
    code, out = run(capsys, 'classify', write_document(catalog.t2()))
    lines = out.splitlines()
    assert lines[0] == 'other'
    assert lines[1].startswith('contains T(2): yes')
    assert lines[2] == 'contains T(3): no'

    code, out = run(capsys, 'classify', write_document(catalog.caterpillar(2, 3)))
    assert out.splitlines()[:2] == ['rooted-3-caterpillar k=2', '  u1 = u1']


def test_build_ss(capsys, write_document, tmp_path):
    model = Model(catalog.spider(3, 5), (1, 1, 1, 1, 1), (1, 2, 3, 4, 5))
    path = write_document(model)
    code, out = run(capsys, 'build-ss', path, '--mode', 'optimal')
    assert code == 0
    assert json.loads(out)['prizes'] == {'u1': 1, 'u2': 2, 'u3': 3, 'u4': 5, 'u5': 4}

    output = tmp_path / 'good.json'
    assert main(['build-ss', path, '-o', str(output)]) == 0
    assert load_security_system(str(output)).model() == model


def test_build_ss_without_constructor(capsys, write_document):
    path = write_document(Model(catalog.t2(), (1, 1, 1, 1, 1), (0, 1, 2, 2, 3)))
    assert main(['build-ss', path, '--mode', 'optimal']) == 4
    assert main(['build-ss', path, '--mode', 'good']) == 0


def test_check_optimal(capsys, write_document):
    path = write_document(Model(catalog.crossing_tree(), (1, 2, 3), (1, 2, 3)))
    code, out = run(capsys, 'check-optimal', path)
    assert code == 0
    header, _, body = out.partition('\n')
    assert header.startswith('no-optimal; budgets ')
    assert set(json.loads(body)) == {'first', 'second'}

    path = write_document(Model(catalog.rooted_star(3), (1, 2, 3), (1, 2, 3)))
    code, out = run(capsys, 'check-optimal', path, '--no-prune')
    header, _, body = out.partition('\n')
    assert header == 'optimal-exists'
    assert json.loads(body)['prizes'] == {'u1': 1, 'u2': 2, 'u3': 3}


def test_check_optimal_guard(capsys, write_document):
    path = write_document(Model(catalog.rooted_star(7), (1,) * 7, (1, 1, 1, 1, 1, 1, 2)))
    assert main(['check-optimal', path]) == 3
    assert main(['--max-n', '7', 'check-optimal', path]) == 0


def test_to_p_writes_correspondence(capsys, write_document, tmp_path, crossing_pair):
    path = write_document(crossing_pair[0])
    output = tmp_path / 'p.json'
    assert main(['to-p', path, '-o', str(output)]) == 0
    ss = load_security_system(str(output))
    assert ss.is_unit_cost and ss.tree.n == 6
    mapping = json.loads((tmp_path / 'p.map.json').read_text(encoding='utf-8'))
    assert mapping['vertices']['u2'] == ['u2~1', 'u2']


def test_to_p_scales_first(capsys, write_document, tmp_path):
    ss = SecuritySystem(catalog.rooted_path(2), ('1/2', 0), (1, 2))
    path = write_document(ss)
    assert main(['to-p', path]) == 5
    output = tmp_path / 'p.json'
    assert main(['to-p', path, '--scale', '-o', str(output)]) == 0
    mapping = json.loads((tmp_path / 'p.map.json').read_text(encoding='utf-8'))
    assert mapping['budget_scale'] == 2
    assert mapping['free_prize'] == '0'
    assert load_security_system(str(output)).tree.n == 1


def test_to_c(capsys, write_document, crossing_pair):
    code, out = run(capsys, 'to-c', write_document(crossing_pair[0]))
    assert code == 0
    assert set(json.loads(out)['prizes'].values()) == {1}


def test_dual(capsys, write_document):
    ss = SecuritySystem(catalog.t3(), (1, 1, 1, 1), (0, 0, 2, 2))
    path = write_document(ss)
    assert main(['dual', path]) == 5
    capsys.readouterr()
    code, out = run(capsys, 'dual', path, '--scale')
    assert json.loads(out)['costs'] == {'u1': 1, 'u2': 1, 'u3': 0, 'u4': 0}
    assert main(['dual', write_document(SecuritySystem(catalog.t3(), (1, 2, 1, 1), (0, 1, 1, 1)))]) == 5


@pytest.mark.parametrize("first, second, expected", [
    ((0, 0, 1, 1), (1, 0, 0, 1), 'incomparable; first better at 1, second better at 3'),
    ((0, 0, 1, 1), (0, 0, 1, 1), 'equal'),
])
def test_compare(capsys, write_document, first, second, expected):
    tree = catalog.t3()
    a = write_document(SecuritySystem(tree, (1, 1, 1, 1), first), 'a.json')
    b = write_document(SecuritySystem(tree, (1, 1, 1, 1), second), 'b.json')
    code, out = run(capsys, 'compare', a, b)
    assert code == 0
    assert out.strip() == expected


def test_compare_improvement(capsys, write_document):
    tree = catalog.rooted_path(2)
    a = write_document(SecuritySystem(tree, (1, 1), (1, 2)), 'a.json')
    b = write_document(SecuritySystem(tree, (1, 1), (2, 1)), 'b.json')
    assert run(capsys, 'compare', a, b)[1].strip() == 'first improved; strictly better at 1'
    assert run(capsys, 'compare', b, a)[1].strip() == 'second improved; strictly better at 1'
    c = write_document(SecuritySystem(tree, (1, 1), (2, 2)), 'c.json')
    assert main(['compare', a, c]) == 2


def test_thresholds(capsys, write_document):
    path = write_document(SecuritySystem(catalog.t3(), (1, 1, 0, 0), (1, 1, 1, 1)))
    code, out = run(capsys, 'thresholds', path)
    assert out.splitlines() == ['B_0 = 0', 'B_1 = 1', 'B_2 = 1', 'B_3 = 1', 'B_4 = 2']


def test_invalid_document_exit_code(capsys, tmp_path):
    assert main(['classify', str(tmp_path / 'missing.json')]) == 2
    path = tmp_path / 'cycle.json'
    path.write_text(json.dumps({'root': 'r', 'edges': [['r', 'a'], ['b', 'c'], ['c', 'b']]}), encoding='utf-8')
    assert main(['classify', str(path)]) == 2


def test_survey_command(capsys, tmp_path):
    csv_path = tmp_path / 'survey.csv'
    code, out = run(capsys, 'survey', '--min-size', '2', '--max-size', '3', '--csv', str(csv_path))
    assert code == 0
    assert '6 trees, 0 inconsistent classifications' in out
    assert len(pd.read_csv(csv_path)) == 6


def test_log_file(capsys, write_document, tmp_path, crossing_pair):
    log_path = tmp_path / 'run.log'
    path = write_document(crossing_pair[0])
    assert main(['--log-file', str(log_path), 'to-p', path, '-o', str(tmp_path / 'out.json')]) == 0
    assert 'Subdivided' in log_path.read_text(encoding='utf-8')
