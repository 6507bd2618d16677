from itertools import product

import pytest

from alontarsi.coefficient import coefficient_oracle, truncated_graph_polynomial
from alontarsi.config import GuardError
from alontarsi.graph import Graph, complete_graph, cycle_graph, path_graph
from alontarsi.iso import enumerate_graphs
from alontarsi.orient import is_f_at


def test_single_edge():
    g = path_graph(2)
    assert truncated_graph_polynomial(g, [2, 2]) == {(1, 0): 1, (0, 1): -1}
    assert not coefficient_oracle(g, [1, 1])


def test_triangle_expansion():
    # the x0 x1 x2 terms cancel, so exponents capped at 1 leave nothing
    assert truncated_graph_polynomial(cycle_graph(3), [2, 2, 2]) == {}
    assert truncated_graph_polynomial(cycle_graph(3), [3, 3, 3]) == {
        (2, 1, 0): 1, (2, 0, 1): -1, (1, 2, 0): -1, (1, 0, 2): 1, (0, 2, 1): 1, (0, 1, 2): -1,
    }


def test_complete_graph_k_colouring():
    assert coefficient_oracle(complete_graph(5), [5] * 5)
    assert not coefficient_oracle(complete_graph(5), [4] * 5)


def test_guard():
    with pytest.raises(GuardError):
        truncated_graph_polynomial(Graph(11), [1] * 11)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_agrees_with_orientation_search(n):
    for g in enumerate_graphs(n):
        for f in product(*[range(1, d + 2) for d in g.degrees]):
            assert coefficient_oracle(g, f) == (is_f_at(g, f) is not None), (g, f)
