"""Exact solver, greedy heuristic, bounds handling, and shared state."""

from __future__ import annotations

import itertools
import random
import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cliquetools import (
    Graph,
    SearchBounds,
    SharedBest,
    core_decomposition,
    max_clique_exact,
    max_clique_heuristic,
    verify_clique,
)

from conftest import gnp_graph, gnp_pairs


def complete(n):
    return list(itertools.combinations(range(n), 2))


@pytest.fixture(scope="module")
def solved_suite():
    """Seeded random graphs with oracle clique numbers, shared across tests."""
    rng = random.Random(90125)
    suite = []
    for i in range(40):
        n = rng.randint(6, 26)
        p = [0.1, 0.3, 0.5, 0.7, 0.9][i % 5]
        pairs = gnp_pairs(rng, n, p)
        omega, _ = oracles.max_clique_enum(n, pairs)
        suite.append((Graph.from_pairs(pairs, n=n), pairs, omega))
    return suite


class TestExactSolver:
    def test_known_graphs(self):
        assert max_clique_exact(Graph.from_pairs(complete(7), n=7)).size == 7
        bipartite = [(u, 3 + v) for u in range(3) for v in range(3)]
        assert max_clique_exact(Graph.from_pairs(bipartite, n=6)).size == 2
        cycle = Graph.from_pairs([(i, (i + 1) % 5) for i in range(5)], n=5)
        assert max_clique_exact(cycle).size == 2
        two_k4 = complete(4) + [(u + 4, v + 4) for u, v in complete(4)] + [(3, 4)]
        assert max_clique_exact(Graph.from_pairs(two_k4, n=8)).size == 4

    def test_edgeless_and_tiny(self):
        assert max_clique_exact(Graph.from_pairs([], n=4)).size == 1
        assert max_clique_exact(Graph.from_pairs([], n=0)).size == 0
        single = max_clique_exact(Graph.from_pairs([(0, 1)], n=2))
        assert single.size == 2
        assert sorted(single.vertices) == [0, 1]

    def test_matches_oracle(self, solved_suite):
        for g, pairs, omega in solved_suite:
            res = max_clique_exact(g)
            assert res.size == omega
            assert res.exact
            assert len(res.vertices) == omega
            assert verify_clique(g, res.vertices)

    def test_backends_agree(self, backend, solved_suite):
        g, _, omega = solved_suite[7]
        res = max_clique_exact(g)
        assert res.size == omega and verify_clique(g, res.vertices)

    def test_result_fields(self, solved_suite):
        g, _, omega = solved_suite[0]
        res = max_clique_exact(g)
        assert res.steps >= 0
        assert res.wall_time >= 0.0
        assert not res.hit_ub and not res.timed_out

    def test_size_respects_degeneracy(self, solved_suite):
        for g, _, _ in solved_suite:
            res = max_clique_exact(g)
            assert res.size - 1 <= core_decomposition(g).degeneracy


class TestUpperBound:
    def test_truncates_exactly_at_ub(self, solved_suite):
        for g, _, omega in solved_suite[:12]:
            for ub in range(1, omega + 3):
                res = max_clique_exact(g, SearchBounds(ub=ub))
                assert res.size == min(ub, omega), (ub, omega)
                assert res.exact
                if ub < omega:
                    assert res.hit_ub
                if res.vertices:
                    assert verify_clique(g, res.vertices)
                    assert len(res.vertices) == res.size

    def test_hit_flag_set_on_early_stop(self):
        g = Graph.from_pairs(complete(9), n=9)
        res = max_clique_exact(g, SearchBounds(ub=4))
        assert res.size == 4 and res.hit_ub and res.exact


class TestLowerBound:
    def test_lb_semantics(self, solved_suite):
        for g, _, omega in solved_suite[:12]:
            heuristic = max_clique_heuristic(g).size
            for lb in {0, heuristic, max(omega - 1, 0), omega, omega + 3}:
                res = max_clique_exact(g, SearchBounds(lb=lb))
                if lb < omega:
                    assert res.size == omega
                    assert verify_clique(g, res.vertices)
                else:
                    # "no clique larger than lb" comes back with an empty witness
                    assert res.size == lb
                    assert res.vertices == ()
                assert res.exact

    def test_bounds_validation(self):
        with pytest.raises(ValueError):
            SearchBounds(lb=-1)
        with pytest.raises(ValueError):
            SearchBounds(ub=0)
        with pytest.raises(ValueError):
            SearchBounds(lb=5, ub=3)
        with pytest.raises(ValueError):
            SearchBounds(time_limit=0.0)


class TestTimeLimit:
    def test_truncation_reports_partial(self):
        rng = random.Random(5150)
        g = gnp_graph(rng, 300, 0.5)
        res = max_clique_exact(g, SearchBounds(time_limit=0.25))
        assert res.timed_out
        assert not res.exact
        assert res.size >= 2
        assert verify_clique(g, res.vertices)

    def test_generous_limit_still_exact(self, solved_suite):
        g, _, omega = solved_suite[3]
        res = max_clique_exact(g, SearchBounds(time_limit=60.0))
        assert res.exact and res.size == omega


class TestHeuristic:
    def test_contract(self, solved_suite):
        for g, _, omega in solved_suite:
            h = max_clique_heuristic(g)
            assert not h.exact
            assert verify_clique(g, h.vertices)
            assert len(h.vertices) == h.size
            assert h.size <= omega
            if g.m > 0:
                assert h.size >= 2

    def test_edgeless(self):
        h = max_clique_heuristic(Graph.from_pairs([], n=3))
        assert h.size == 1

    def test_thread_counts_agree(self, solved_suite):
        g, _, _ = solved_suite[5]
        single = max_clique_heuristic(g, threads=1)
        for threads in (2, 4):
            multi = max_clique_heuristic(g, threads=threads)
            assert multi.size == single.size
            assert multi.vertices == single.vertices

    def test_finds_planted_clique(self):
        rng = random.Random(777)
        noise = gnp_pairs(rng, 60, 0.05)
        planted = [(u + 60, v + 60) for u, v in complete(8)]
        g = Graph.from_pairs(noise + planted, n=68)
        assert max_clique_heuristic(g).size == 8


class TestThreadDeterminism:
    def test_size_identical_across_thread_counts(self, solved_suite):
        for g, _, omega in solved_suite[::4]:
            for threads in (1, 2, 4, 8):
                res = max_clique_exact(g, threads=threads)
                assert res.size == omega
                assert verify_clique(g, res.vertices)


class TestSharedBest:
    def test_offer_keeps_maximum(self):
        import numpy as np

        shared = SharedBest(initial_size=3)
        assert not shared.offer(2, np.array([0, 1], dtype=np.int32))
        assert not shared.offer(3, np.array([0, 1, 2], dtype=np.int32))
        assert shared.offer(5, np.arange(5, dtype=np.int32))
        assert shared.best_size == 5

    def test_trace_monotone_under_contention(self):
        import numpy as np

        shared = SharedBest()
        offers = list(range(1, 200))
        random.Random(0).shuffle(offers)

        def publish(chunk):
            for size in chunk:
                shared.offer(size, np.arange(size, dtype=np.int32))

        threads = [
            threading.Thread(target=publish, args=(offers[i::4],)) for i in range(4)
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert shared.trace == sorted(shared.trace)
        assert shared.best_size == 199

    def test_stop_reason_first_wins(self):
        shared = SharedBest()
        shared.request_stop("ub")
        shared.request_stop("time")
        assert shared.stop_reason == "ub"
        assert shared.stop_buf[0] == 1


class TestVerifyClique:
    def test_accepts_valid(self):
        g = Graph.from_pairs(complete(4), n=4)
        assert verify_clique(g, [0, 1, 2, 3])
        assert verify_clique(g, [])

    def test_rejects_bad_inputs(self):
        g = Graph.from_pairs([(0, 1), (1, 2)], n=3)
        assert not verify_clique(g, [0, 2])        # missing edge
        assert not verify_clique(g, [0, 0])        # duplicate
        assert not verify_clique(g, [0, 5])        # out of range


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_solver_matches_oracle_on_random_graphs(data):
    n = data.draw(st.integers(2, 16))
    p = data.draw(st.floats(0.1, 0.95))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    pairs = gnp_pairs(rng, n, p)
    g = Graph.from_pairs(pairs, n=n)
    omega, _ = oracles.max_clique_enum(n, pairs)
    res = max_clique_exact(g)
    assert res.size == omega
    assert verify_clique(g, res.vertices)
