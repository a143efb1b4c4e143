import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gpindex import _kernels
from gpindex.graph import from_edge_list

from graphs_util import connected_graphs, floyd_warshall, random_connected

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba path disabled")


@st.composite
def any_graphs(draw):
    """Possibly disconnected: a disjoint union of two random connected graphs."""
    a = draw(connected_graphs(max_vertices=8))
    b = draw(connected_graphs(max_vertices=8))
    n = a.vertex_count
    pairs = list(a.edges) + [(u + n, v + n) for u, v in b.edges]
    return from_edge_list(pairs, n + b.vertex_count)


def _fw_array(g):
    d = floyd_warshall(g)
    return np.array([[-1 if x == float("inf") else x for x in row] for row in d], dtype=np.int64)


@pytest.mark.parametrize("kernels", ["numpy", "numba"])
@given(g=any_graphs())
@settings(max_examples=40, deadline=None)
def test_apsp_matches_floyd_warshall(kernels, g):
    if kernels == "numba" and not _kernels.HAVE_NUMBA:
        pytest.skip("numba path disabled")
    table = _kernels.NUMBA_KERNELS if kernels == "numba" else _kernels.NUMPY_KERNELS
    indptr, indices = g.csr
    got = table["apsp"](indptr, indices, g.vertex_count)
    assert np.array_equal(got, _fw_array(g))
    for s in range(g.vertex_count):
        assert np.array_equal(table["bfs_row"](indptr, indices, g.vertex_count, s), got[s])


@needs_numba
@given(g=any_graphs(), data=st.data())
@settings(max_examples=40, deadline=None)
def test_components_paths_agree(g, data):
    keep = np.array(data.draw(st.lists(st.booleans(), min_size=g.edge_count, max_size=g.edge_count)),
                    dtype=np.bool_)
    eu, ev = g.edge_arrays
    a = _kernels.NUMPY_KERNELS["components"](g.vertex_count, eu, ev, keep)
    b = _kernels.NUMBA_KERNELS["components"](g.vertex_count, eu, ev, keep)
    assert np.array_equal(a, b)
    # ids numbered by smallest member
    firsts = [int(np.flatnonzero(a == c)[0]) for c in range(int(a.max()) + 1)]
    assert firsts == sorted(firsts)


@needs_numba
@given(g=connected_graphs(min_vertices=2, max_vertices=14))
@settings(max_examples=40, deadline=None)
def test_theta_paths_agree(g):
    eu, ev = g.edge_arrays
    d = g.distances
    assert np.array_equal(
        _kernels.NUMPY_KERNELS["theta_classes"](d, eu, ev),
        _kernels.NUMBA_KERNELS["theta_classes"](d, eu, ev),
    )


def test_backend_flag_is_reported():
    assert _kernels.BACKEND in ("numba", "numpy")
    assert (_kernels.BACKEND == "numba") == _kernels.HAVE_NUMBA


def test_numpy_path_on_larger_graph():
    g = random_connected(60, 30, random.Random(7))
    indptr, indices = g.csr
    assert np.array_equal(_kernels.NUMPY_KERNELS["apsp"](indptr, indices, 60), _fw_array(g))


def test_env_flag_selects_numpy_path():
    import os
    import subprocess
    import sys

    env = dict(os.environ, GPINDEX_PURE_NUMPY="1")
    code = "from gpindex import _kernels, tubulene as t; " \
           "r = t.full_report(t.TubuleneSpec(3, 7)); print(_kernels.BACKEND, r.report.gp_direct, r.report.gp_cut)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "7280", "7280"]
