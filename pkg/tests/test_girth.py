import json
import random

import pytest

import oracles
from girthlab import (
    INF,
    BudgetExceeded,
    DomainError,
    GirthWitness,
    SimplicialComplex,
    flag_completion,
    girth,
    girth_all,
    girth_exceeds,
    girth_flag_fast,
    graph_girth,
    minimal_homology_support,
    verify_witness,
)
from girthlab import generators as G
from girthlab.girth import check_cycle_hypothesis


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_girth(n):
    w = girth(G.cycle_complex(n), 1)
    assert w.value == n
    assert w.witness_set == tuple(range(1, n + 1))
    assert verify_witness(G.cycle_complex(n), w)


def test_named_values(corpus):
    assert girth(G.path_graph(6), 1).value == INF
    assert girth(G.complete_graph(4), 1).value == 3
    assert [w.value for w in girth_all(corpus["octahedron"])] == [2, 4, 6]
    assert [w.value for w in girth_all(corpus["C5"])] == [2, 5]
    assert all(w.value == INF for w in girth_all(G.simplex(4)))
    assert girth(corpus["petersen"], 1).value == 5
    assert girth(corpus["heawood"], 1).value == 6


def test_minimal_support_examples():
    w = minimal_homology_support(G.simplex_boundary(2), 1)
    assert (w.value, w.witness_set) == (3, (1, 2, 3))
    w = minimal_homology_support(G.cross_polytope_boundary(3), 2)
    assert (w.value, w.witness_set) == (6, tuple(range(1, 7)))
    two_c4 = SimplicialComplex(G.cycle_complex(4).faces(1) + [(5, 6), (6, 7), (7, 8), (8, 5)])
    assert minimal_homology_support(two_c4, 1).value == 4


def test_flag_fast():
    assert girth_flag_fast(G.cycle_complex(4), 1).value == 4
    k33 = flag_completion(G.complete_multipartite_graph([3, 3]))
    assert girth_flag_fast(k33, 1).value == 4
    oct_ = G.cross_polytope_boundary(3)
    assert girth_flag_fast(oct_, 2) == girth(oct_, 2)
    with pytest.raises(DomainError):
        girth_flag_fast(G.simplex_boundary(2), 1)


def test_witness_face_nonempty_when_needed():
    # the hollow triangle lives only in the link of the cone point
    c = G.cone_over_complete_graph(5)
    w = girth(c, 0)
    assert w.value == 2 and w.witness_face != ()
    assert verify_witness(c, w)


@pytest.mark.parametrize("p", (2, 3))
def test_girth_matches_brute_force(p):
    rng = random.Random(200 + p)
    for _ in range(40):
        facets = oracles.random_facets(rng, 6, rng.randint(2, 6))
        c = SimplicialComplex(facets)
        faces = oracles.closure(facets)
        for q in range(c.dim + 1):
            w = girth(c, q, p)
            assert w.value == oracles.girth(faces, q, p)
            assert verify_witness(c, w)


def test_graph_girth_agrees():
    rng = random.Random(5)
    for _ in range(60):
        edges = {tuple(sorted(rng.sample(range(1, 9), 2))) for _ in range(rng.randint(1, 12))}
        g = SimplicialComplex(sorted(edges))
        assert graph_girth(g) == oracles.graph_girth(edges)
        for p in (2, 3):
            assert girth(g, 1, p).value == graph_girth(g)


def test_monotone_under_induced_and_link():
    rng = random.Random(9)
    for _ in range(40):
        c = SimplicialComplex(oracles.random_facets(rng, 6, 4))
        ws = [girth(c, q).value for q in range(c.dim + 1)]
        sub = rng.sample(c.vertices, rng.randint(1, c.n))
        for q, g in enumerate(ws):
            assert g <= girth(c.induced(sub), q).value
            for f in c.faces():
                assert g <= girth(c.link(f), q).value


def test_flag_iff_girth_at_least_four():
    rng = random.Random(3)
    for _ in range(200):
        c = SimplicialComplex(oracles.random_facets(rng, 5, rng.randint(1, 5)))
        if c.dim >= 1:
            assert c.is_flag() == (girth(c, 1).value >= 4)


def test_cycle_hypothesis():
    c5 = G.cycle_complex(5)
    assert check_cycle_hypothesis(c5, [1, 2, 3, 4, 5])
    assert not check_cycle_hypothesis(G.simplex(3), [1, 2, 3])
    oct_ = G.cross_polytope_boundary(3)
    walk = [1, 3, 2, 4]
    assert check_cycle_hypothesis(oct_, walk)
    assert not check_cycle_hypothesis(oct_, [1, 3, 5])
    assert girth(oct_, 1).value <= len(walk)
    with pytest.raises(DomainError):
        check_cycle_hypothesis(c5, [1, 3, 5])


def test_cycle_hypothesis_implies_bound():
    rng = random.Random(17)
    checked = 0
    for _ in range(40):
        c = SimplicialComplex(oracles.random_facets(rng, 6, 5, 3))
        adj = {v: c.neighbors(v) for v in c.vertices}
        for start in c.vertices:
            walk = [start]
            for _ in range(rng.randint(2, 6)):
                if not adj[walk[-1]]:
                    break
                walk.append(rng.choice(adj[walk[-1]]))
            r = len(walk)
            closed = all(
                walk[i] != walk[(i + 1) % r] and c.is_face({walk[i], walk[(i + 1) % r]})
                for i in range(r)
            )
            if r >= 3 and closed and check_cycle_hypothesis(c, walk):
                assert girth(c, 1).value <= r
                checked += 1
    assert checked > 0


def test_budget_exceeded_reports_lower_bound():
    with pytest.raises(BudgetExceeded) as exc:
        girth(G.cycle_complex(8), 1, budget=3)
    assert exc.value.lower_bound >= 3
    assert exc.value.excluded_size == exc.value.lower_bound - 1


def test_girth_exceeds():
    assert girth_exceeds(G.cycle_complex(7), 1, 6)
    assert not girth_exceeds(G.cycle_complex(7), 1, 7)


def test_witness_json_round_trip():
    w = girth(G.cross_polytope_boundary(3), 1)
    d = json.loads(json.dumps(w.to_json()))
    assert d["girth"] == 4
    assert GirthWitness.from_json(d) == w
    inf = girth(G.simplex(3), 1).to_json()
    assert inf["girth"] == "inf"


def test_negative_degree_rejected():
    with pytest.raises(DomainError):
        girth(G.cycle_complex(4), -1)
