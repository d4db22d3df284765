"""graph module: parsing, construction, sampling, centrality, stats."""

import io
import math

import numpy as np
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lvm import (EdgeListParseError, build_graph, eigenvector_centrality, graph_stats,
                 parse_edge_list, sample_induced)
from conftest import complete_graph, random_graph

# ---------------------------------------------------------------------------
# parse_edge_list


def test_parse_basic():
    assert list(parse_edge_list(io.StringIO("# comment\n0 1\n1 2\n"))) == [(0, 1), (1, 2)]


def test_parse_empty():
    assert list(parse_edge_list(io.StringIO(""))) == []


def test_parse_blank_lines_and_crlf():
    text = "0 1\r\n\r\n# c\r\n2\t3\r\n"
    assert list(parse_edge_list(io.StringIO(text))) == [(0, 1), (2, 3)]


def test_parse_error_line_number():
    with pytest.raises(EdgeListParseError, match="line 2") as exc:
        list(parse_edge_list(io.StringIO("0 1\n0 x\n")))
    assert exc.value.lineno == 2


def test_parse_error_token_count():
    with pytest.raises(EdgeListParseError, match="line 3"):
        list(parse_edge_list(io.StringIO("0 1\n1 2\n1 2 3\n")))


# ---------------------------------------------------------------------------
# build_graph


def test_build_dedupes_and_drops_self_loops():
    g = build_graph([(1, 2), (2, 1), (2, 2)])
    assert g.n == 2
    assert g.edge_count == 1
    assert list(g.neighbors(0)) == [1]
    assert list(g.neighbors(1)) == [0]


def test_build_empty():
    g = build_graph([])
    assert g.n == 0 and g.edge_count == 0


def test_build_dense_remap_ascending():
    g = build_graph([(30, 10), (10, 20)])
    # raw ids 10, 20, 30 -> dense 0, 1, 2
    assert g.n == 3
    assert sorted(map(tuple, zip(*g.undirected_pairs()))) == [(0, 1), (0, 2)]


def test_build_symmetry_and_sortedness():
    rng = np.random.default_rng(1)
    g = random_graph(40, 0.15, rng)
    for v in range(g.n):
        row = g.neighbors(v)
        assert np.all(np.diff(row) > 0)  # sorted, no duplicates
        assert v not in row
        for u in row:
            assert g.has_edge(int(u), v)
    assert g.indptr[-1] == 2 * g.edge_count


# ---------------------------------------------------------------------------
# sample_induced


def test_sample_full_is_identity(star3):
    s = sample_induced(star3, star3.n, np.random.default_rng(0))
    assert s.n == star3.n
    assert np.array_equal(s.indptr, star3.indptr)
    assert np.array_equal(s.indices, star3.indices)


def test_sample_triangle_pair(triangle):
    s = sample_induced(triangle, 2, np.random.default_rng(3))
    assert s.n == 2 and s.edge_count == 1


def test_sample_complete_graph_stays_complete():
    k10 = complete_graph(10)
    for seed in range(5):
        s = sample_induced(k10, 4, np.random.default_rng(seed))
        assert s.n == 4 and s.edge_count == 6


def test_sample_edges_subset_and_deterministic():
    rng = np.random.default_rng(7)
    g = random_graph(60, 0.1, rng)
    s1 = sample_induced(g, 25, np.random.default_rng(42))
    s2 = sample_induced(g, 25, np.random.default_rng(42))
    assert np.array_equal(s1.indices, s2.indices)
    assert np.array_equal(s1.indptr, s2.indptr)
    # edges of the sample map back to edges of g
    chosen = np.sort(np.random.default_rng(42).choice(g.n, size=25, replace=False))
    a, b = s1.undirected_pairs()
    for u, v in zip(chosen[a], chosen[b]):
        assert g.has_edge(int(u), int(v))


def test_sample_bounds(triangle):
    with pytest.raises(ValueError):
        sample_induced(triangle, 4, np.random.default_rng(0))
    with pytest.raises(ValueError):
        sample_induced(triangle, 0, np.random.default_rng(0))


# ---------------------------------------------------------------------------
# eigenvector_centrality
# Analytic dominant eigenvectors: K4 uniform (0.5 each); S3 has center
# 1/sqrt(2), leaves 1/sqrt(6) (lambda = sqrt(3)); P3 has middle 1/sqrt(2),
# ends 0.5 (lambda = sqrt(2)).


def test_centrality_k4(k4):
    cv = eigenvector_centrality(k4)
    assert np.allclose(cv.scores, 0.5, atol=1e-7)
    assert not cv.degenerate


def test_centrality_star(star3):
    cv = eigenvector_centrality(star3)
    assert abs(cv.scores[0] - 1 / math.sqrt(2)) < 1e-6
    assert np.allclose(cv.scores[1:], 1 / math.sqrt(6), atol=1e-6)


def test_centrality_path3(path3):
    cv = eigenvector_centrality(path3)
    assert abs(cv.scores[1] - 1 / math.sqrt(2)) < 1e-6
    assert abs(cv.scores[0] - 0.5) < 1e-6
    assert abs(cv.scores[2] - 0.5) < 1e-6


def test_centrality_norm_nonneg_residual():
    rng = np.random.default_rng(11)
    for _ in range(5):
        g = random_graph(50, 0.08, rng)
        cv = eigenvector_centrality(g)
        assert abs(np.linalg.norm(cv.scores) - 1.0) < 1e-9
        assert np.all(cv.scores >= 0)
        assert cv.residual <= 1e-8


def test_centrality_zero_edge_graph_degenerate():
    g = build_graph([(0, 0), (1, 1), (2, 2)])  # self-loops dropped -> no edges
    cv = eigenvector_centrality(g)
    assert cv.degenerate
    assert np.allclose(cv.scores, 1 / math.sqrt(3))


def test_centrality_permutation_invariance():
    rng = np.random.default_rng(5)
    g = random_graph(30, 0.2, rng)
    perm = rng.permutation(g.n)
    a, b = g.undirected_pairs()
    g_perm = build_graph(list(zip(perm[a], perm[b])))
    base = eigenvector_centrality(g).scores
    permuted = eigenvector_centrality(g_perm).scores
    assert np.allclose(base, permuted[perm], atol=1e-6)


def test_centrality_matches_networkx():
    rng = np.random.default_rng(23)
    for _ in range(3):
        g = random_graph(40, 0.15, rng)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(zip(*g.undirected_pairs()))
        ours = eigenvector_centrality(g).scores
        ref = nx.eigenvector_centrality(nxg, max_iter=2000, tol=1e-10)
        ref = np.array([ref[v] for v in range(g.n)])
        assert np.allclose(ours, ref / np.linalg.norm(ref), atol=1e-5)


# ---------------------------------------------------------------------------
# graph_stats


def test_stats_triangle(triangle):
    s = graph_stats(triangle)
    assert s.n == 3 and s.edge_count == 3
    assert s.avg_degree == pytest.approx(2.0)
    assert s.avg_clustering == pytest.approx(1.0)


def test_stats_star_no_triangles(star3):
    s = graph_stats(star3)
    assert s.avg_clustering == 0.0
    assert s.avg_degree == pytest.approx(6 / 4)


@given(n=st.integers(min_value=3, max_value=20))
@settings(max_examples=18, deadline=None)
def test_stats_complete_graphs(n):
    s = graph_stats(complete_graph(n))
    assert s.avg_degree == pytest.approx(n - 1)
    assert s.avg_clustering == pytest.approx(1.0)


def test_stats_matches_networkx_average_clustering():
    rng = np.random.default_rng(31)
    for _ in range(3):
        g = random_graph(60, 0.1, rng)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(zip(*g.undirected_pairs()))
        assert graph_stats(g).avg_clustering == pytest.approx(
            nx.average_clustering(nxg, count_zeros=True), abs=1e-12)


def test_stats_low_degree_nodes_count_zero():
    g = build_graph([(0, 1), (1, 2), (0, 2), (3, 0)])
    # triangle 0-1-2 plus pendant 3: clustering(0) = 1/3 (one closed pair of
    # three), clustering(1) = clustering(2) = 1, clustering(3) = 0 (degree 1)
    s = graph_stats(g)
    assert s.avg_clustering == pytest.approx((1 / 3 + 1 + 1 + 0) / 4)
