import pytest

from layered_defense import catalog
from layered_defense.config import SolverLimits
from layered_defense.survey import summarize, survey, survey_tree


def test_survey_tree_flags():
    row = survey_tree(catalog.t3().extended([("r", "u5")]))
    assert row['n'] == 5
    assert row['root_degree'] == 3
    assert row['tag'] == 'other'
    assert row['contains_T3'] and not row['contains_T2']
    assert row['witness_verdict'] == 'no-optimal'

    row = survey_tree(catalog.spider(2, 4))
    assert row['tag'] == 'rooted-4-spider'
    assert row['k'] == 2
    assert row['forbidden_free']
    assert row['witness_verdict'] == ''


def test_survey_tree_guard():
    row = survey_tree(catalog.t2(), limits=SolverLimits(max_oracle_n=4))
    assert row['witness_verdict'] == 'inconclusive-guard'


def test_survey_table():
    df = survey(1, 4)
    assert len(df) == 1 + 2 + 4 + 9
    assert list(df.columns[:4]) == ['n', 'edges', 'root_degree', 'tag']
    branching = df[df['root_degree'] >= 2]
    assert branching['consistent'].tolist() == [True] * len(branching)
    assert df.loc[df['root_degree'] < 2, 'consistent'].isna().all()
    counts = summarize(df)
    assert counts.loc[4].sum() == 9


@pytest.mark.slow
@pytest.mark.parametrize("flavor", ['P', 'C'])
def test_survey_witnesses_on_larger_trees(flavor):
    df = survey(5, 6, flavor)
    assert len(df) == 20 + 48
    assert df['consistent'].isin([False]).sum() == 0
    patterned = df[~df['forbidden_free']]
    assert len(patterned) > 0
    assert (patterned['witness_verdict'] == 'no-optimal').all()
    assert (patterned['tag'] == 'other').all()
    assert (df.loc[df['forbidden_free'], 'witness_verdict'] == '').all()


def test_survey_tree_reports_missing_witness(monkeypatch):
    monkeypatch.setattr('layered_defense.survey.find_witness_model', lambda *args, **kwargs: None)
    row = survey_tree(catalog.t3())
    assert row['witness_verdict'] == 'no-witness-found'
