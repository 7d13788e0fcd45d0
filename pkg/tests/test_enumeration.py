import pytest

from pegball import reference
from pegball.distance import Model, ResourceLimitError
from pegball.enumeration import CountMethod, count_ball, sequence


def test_frozen_sequences():
    for model, k, want in reference.BALL_COUNTS:
        assert sequence(Model(model), k, len(want)) == list(want)


def test_doctest_anchors():
    assert count_ball(Model.RD, 1, 3) == 4
    assert count_ball(Model.PRD, 2, 4, CountMethod.GRID) == 10
    assert count_ball(Model.PRD, 0, 5, CountMethod.AVOID) == 1
    assert sequence(Model.RD, 1, 4) == [1, 2, 4, 7]


@pytest.mark.parametrize("model", [Model.RD, Model.PRD])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_methods_agree(model, k):
    for n in range(1, 8):
        bfs = count_ball(model, k, n, CountMethod.BFS)
        grid = count_ball(model, k, n, CountMethod.GRID)
        avoid = count_ball(model, k, n, CountMethod.AVOID)
        assert bfs == grid == avoid, (model, k, n)


def test_prd_k2_quadratic_law():
    for n in range(4, 11):
        want = reference.prd_k2_count(n)
        assert want == (n - 1) ** 2 + 1
        assert count_ball(Model.PRD, 2, n, CountMethod.GRID) == want
        assert count_ball(Model.PRD, 2, n, CountMethod.AVOID) == want


def test_sequence_matches_count_ball():
    got = sequence(Model.RD, 2, 6, CountMethod.GRID)
    assert got == [count_ball(Model.RD, 2, n, CountMethod.GRID)
                   for n in range(1, 7)]


def test_bad_arguments():
    with pytest.raises(ValueError):
        count_ball(Model.RD, -1, 3)
    with pytest.raises(ValueError):
        count_ball(Model.RD, 1, -1)
    assert count_ball(Model.RD, 1, 0) == 1  # the empty permutation
    assert sequence(Model.RD, 1, 0) == []


def test_resource_limits():
    # BFS inherits the table limit; the closed-class methods stop at 12
    with pytest.raises(ResourceLimitError):
        count_ball(Model.RD, 1, 10)
    with pytest.raises(ResourceLimitError):
        count_ball(Model.RD, 1, 13, CountMethod.GRID)
    with pytest.raises(ResourceLimitError):
        count_ball(Model.RD, 1, 13, CountMethod.AVOID)
    assert count_ball(Model.RD, 1, 12, CountMethod.GRID) \
        == count_ball(Model.RD, 1, 12, CountMethod.AVOID)
