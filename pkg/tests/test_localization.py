import pytest

from src.analysis import communicability_localization
from src.graphs import families


def test_p3_ratio(p3):
    report = communicability_localization(p3, 1.0)
    assert report.ratio == pytest.approx(2.1782 / 1.5891, abs=1e-3)
    assert report.pendant_nodes == [0, 2]


def test_complete_graph_has_no_localization():
    report = communicability_localization(families.complete(5), 1.0)
    assert report.ratio == pytest.approx(1.0)
    assert report.group_ratio is None


@pytest.mark.parametrize("attachments", [[0, 1, 2], [0, 0, 0], [0, 0, 1]])
def test_clique_outweighs_pendants_tenfold(attachments):
    g = families.clique_with_pendants(5, attachments)
    report = communicability_localization(g, 1.0)
    assert report.pendant_nodes == [5, 6, 7]
    assert report.ratio > 4
    assert report.group_ratio >= 10


def test_by_degree_groups(star3):
    groups = communicability_localization(star3, 1.0).by_degree()
    assert list(groups) == [1, 3]
    assert [node for node, _ in groups[1]] == [1, 2, 3]
    values = [value for _, value in groups[1]]
    assert values == pytest.approx([values[0]] * 3)


def test_infinite_temperature_is_flat(star3):
    report = communicability_localization(star3, 0.0)
    assert report.ratio == pytest.approx(1.0)
