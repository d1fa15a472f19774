import random

import numpy as np
import pytest

import oracles
from girthlab import (
    DomainError,
    SimplicialComplex,
    admissible_arcs,
    count_non_returning_walks,
    flag_completion,
    stable_weights,
    tree_lemma_check,
)
from girthlab import generators as G
from girthlab.walks import (
    EdgeWeightSystem,
    directed_skeleton,
    enumerate_non_returning_walks,
    has_total_support,
    is_non_returning,
    walk_counts_table,
)


def _irregular_triangle_free():
    edges = [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 3), (2, 7), (7, 8), (8, 4)]
    return SimplicialComplex(edges)


def _weighted_instance():
    # sparse links relative to degree, so every vertex admits stationary weights
    rng = random.Random(4)
    n = 40
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < 0.25]
    return flag_completion(SimplicialComplex(edges))


def test_is_non_returning():
    c = G.simplex(3)
    assert not is_non_returning(c, [1, 2, 3])
    assert not is_non_returning(G.cycle_complex(5), [1, 2, 1])
    assert is_non_returning(G.simplex_boundary(2), [1, 2, 3])


def test_counts_match_enumeration():
    rng = random.Random(8)
    for _ in range(30):
        facets = oracles.random_facets(rng, 7, 6, 3)
        c = SimplicialComplex(facets)
        faces = oracles.closure(facets)
        for u in c.vertices:
            for length in range(1, 5):
                ref = oracles.non_returning_walks(faces, u, length)
                assert sorted(enumerate_non_returning_walks(c, u, length)) == sorted(ref)
                for v in c.vertices:
                    assert count_non_returning_walks(c, u, v, length) == sum(
                        1 for w in ref if w[-1] == v
                    )


def test_walk_counts_table_sums():
    c = G.petersen_graph()
    table = walk_counts_table(c, 3)
    # each vertex has 3 * 2 * 2 non-returning 3-walks
    for u in c.vertices:
        assert sum(k for (a, _), k in table.items() if a == u) == 12


def test_directed_skeleton():
    g = directed_skeleton(G.cycle_complex(4))
    assert len(g.arcs) == 8
    assert g.has_arc(1, 2) and g.has_arc(2, 1) and not g.has_arc(1, 3)


@pytest.mark.parametrize(
    "c,r,odd",
    [(G.cycle_complex(7), 3, None), (G.petersen_graph(), 2, None), (G.heawood_graph(), 2, True)],
)
def test_walk_count_named(c, r, odd):
    rep = tree_lemma_check(c, r)
    assert rep.bound == 1 and rep.max_count <= 1 and rep.passed
    assert rep.odd_clause_pass is odd
    assert set(rep.to_json()) == {"r", "bound", "max_count", "pass", "odd_clause_pass"}


def test_walk_count_odd_clause_on_long_cycle():
    rep = tree_lemma_check(G.cycle_complex(9), 3)
    assert rep.odd_clause_pass is True and rep.passed


def test_walk_count_needs_girth():
    with pytest.raises(DomainError):
        tree_lemma_check(G.cycle_complex(5), 3)


def test_walk_count_on_two_dimensional():
    # icosahedron: flag, pentagonal vertex links, gr_1 = 5 and d = 3
    ico = SimplicialComplex(
        [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2), (2, 3, 7), (3, 4, 8),
         (4, 5, 9), (5, 6, 10), (6, 2, 11), (2, 7, 11), (3, 7, 8), (4, 8, 9), (5, 9, 10),
         (6, 10, 11), (12, 7, 8), (12, 8, 9), (12, 9, 10), (12, 10, 11), (12, 11, 7)]
    )
    rep = tree_lemma_check(ico, 2)
    assert rep.bound == 2 and rep.passed


def test_admissible_arcs_all_kept_when_triangle_free():
    c = G.petersen_graph()
    e = admissible_arcs(c, 0.5)
    assert len(e.arcs) == 30


def test_admissible_arcs_closure():
    # in a full simplex every edge has a large link, so every arc goes
    e = admissible_arcs(G.simplex(4), 0.5)
    assert e.arcs == frozenset()


def test_admissible_arcs_errors():
    with pytest.raises(DomainError):
        admissible_arcs(G.cycle_complex(5), 1.5)
    with pytest.raises(DomainError):
        admissible_arcs(SimplicialComplex([], [1, 2]), 0.5)


def test_total_support_matches_brute_force():
    rng = np.random.default_rng(2)
    for _ in range(200):
        k = int(rng.integers(1, 6))
        a = (rng.random((k, k)) < 0.5).tolist()
        assert has_total_support(a) == oracles.has_total_support(a)


def _check_stationary(c, s, tol):
    faces = oracles.faces_of(c)
    P, arcs = oracles.transition_matrix(faces, s.arcs, s.z)
    x = np.full(len(arcs), 1 / len(arcs))
    assert np.allclose(P.sum(axis=1), 1)
    assert np.abs(x @ P - x).max() <= tol


@pytest.mark.parametrize("c", [G.cycle_complex(6), G.petersen_graph(), _irregular_triangle_free()])
def test_stable_weights_triangle_free(c):
    s = stable_weights(admissible_arcs(c, 0.5))
    assert all(z == pytest.approx(1) for z in s.z.values())
    _check_stationary(c, s, 1e-12)


def test_stable_weights_nontrivial():
    c = _weighted_instance()
    ews = admissible_arcs(c, 0.4)
    s = stable_weights(ews, tol=1e-12)
    assert min(s.z.values()) > 0
    assert max(s.z.values()) - min(s.z.values()) > 0.1
    _check_stationary(c, s, 1e-10)
    for v in {a for a, _ in s.arcs}:
        outs = s.out_set(v)
        assert abs(sum(s.z[(v, w)] for w in outs) - len(outs)) <= 1e-9
        ins = [u for (u, b) in sorted(s.arcs) if b == v]
        a = [[1.0 if w in s.t_set(u, v) else 0.0 for w in outs] for u in ins]
        # Sinkhorn scaling exists exactly when stationary weights do
        col = oracles.sinkhorn(a)
        assert np.isfinite(col).all()


def test_stable_weights_infeasible():
    c = SimplicialComplex([(1,), (8,), (2, 4), (5, 6), (2, 3, 6)])
    with pytest.raises(DomainError):
        stable_weights(admissible_arcs(c, 0.9))


def test_stationarity_needs_weights():
    e = admissible_arcs(G.cycle_complex(5), 0.5)
    with pytest.raises(DomainError):
        e.stationarity()
    assert isinstance(e, EdgeWeightSystem)
