"""Timestamped parsing, reachability, and temporal strong components."""

from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cliquetools import (
    ParseError,
    SearchBounds,
    max_tscc,
    parse_temporal_edge_list,
    reach,
    strong_reachability,
    verify_clique,
)

from conftest import contacts_text, random_temporal


def reach_from(contacts, directed=True):
    return reach(parse_temporal_edge_list(contacts_text(contacts), directed=directed))


class TestParseTemporal:
    def test_basic(self):
        tg = parse_temporal_edge_list("a b 3\nb c 1.5\n")
        assert tg.labels == ["a", "b", "c"]
        assert tg.n == 3
        assert tg.n_edges == 2
        # stored in ascending time order
        assert tg.edge(0).time == 1.5
        assert tg.edge(1).time == 3.0

    def test_stable_order_for_equal_times(self):
        tg = parse_temporal_edge_list("a b 5\nc d 5\ne f 5\n")
        assert [(tg.labels[tg.edge(i).src], tg.labels[tg.edge(i).dst]) for i in range(3)] == [
            ("a", "b"),
            ("c", "d"),
            ("e", "f"),
        ]

    def test_self_loops_dropped_but_labels_kept(self):
        tg = parse_temporal_edge_list("a a 1\na b 2\n")
        assert tg.n == 2
        assert tg.n_edges == 1

    def test_missing_timestamp(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_temporal_edge_list("a b\n")

    def test_bad_timestamp_values(self):
        for bad in ("a b x\n", "a b -3\n", "a b inf\n", "a b nan\n"):
            with pytest.raises(ParseError):
                parse_temporal_edge_list(bad)

    def test_comments_skipped(self):
        tg = parse_temporal_edge_list("# contacts\n% more\na b 1\n")
        assert tg.n_edges == 1


class TestReach:
    def test_chain_follows_increasing_times(self):
        r = reach_from([(0, 1, 1.0), (1, 2, 2.0)])
        assert sorted(r.reach_set(0)) == [1, 2]
        assert sorted(r.reach_set(1)) == [2]
        assert sorted(r.reach_set(2)) == []

    def test_chain_blocked_by_decreasing_times(self):
        r = reach_from([(0, 1, 2.0), (1, 2, 1.0)])
        assert sorted(r.reach_set(0)) == [1]

    def test_equal_timestamps_never_chain(self):
        r = reach_from([(0, 1, 5.0), (1, 2, 5.0)])
        assert sorted(r.reach_set(0)) == [1]
        # a strictly later copy of the second contact re-enables the chain
        r = reach_from([(0, 1, 5.0), (1, 2, 5.0), (1, 2, 6.0)])
        assert sorted(r.reach_set(0)) == [1, 2]

    def test_undirected_contacts_work_both_ways(self):
        r = reach_from([(1, 0, 1.0), (1, 2, 2.0)], directed=False)
        zero = r.labels.index("0")
        assert sorted(r.labels[v] for v in r.reach_set(zero)) == ["1", "2"]
        r = reach_from([(1, 0, 1.0), (1, 2, 2.0)], directed=True)
        assert list(r.reach_set(r.labels.index("0"))) == []

    def test_undirected_same_time_still_strict(self):
        r = reach_from([(0, 1, 3.0), (1, 2, 3.0)], directed=False)
        assert sorted(r.reach_set(0)) == [1]
        assert sorted(r.reach_set(2)) == [1]

    def test_self_not_reported(self):
        r = reach_from([(0, 1, 1.0), (1, 0, 2.0)])
        assert 0 not in r.reach_set(0)
        assert r.contains(0, 1) and r.contains(1, 0)

    def test_contains_and_sizes(self):
        r = reach_from([(0, 1, 1.0), (1, 2, 2.0)])
        assert r.contains(0, 2)
        assert not r.contains(2, 0)
        assert list(r.sizes()) == [2, 1, 0]

    @pytest.mark.parametrize("directed", [True, False])
    def test_matches_arrival_oracle(self, directed):
        rng = random.Random(60 + directed)
        for _ in range(25):
            n = rng.randint(2, 22)
            contacts = random_temporal(rng, n, rng.randint(1, 110), t_max=12)
            r = reach_from(contacts, directed=directed)
            expected = oracles.temporal_reach_all(n, contacts, directed)
            seen_labels = {lab: i for i, lab in enumerate(r.labels)}
            for s in range(n):
                if str(s) not in seen_labels:
                    assert not expected[s]
                    continue
                got = {int(r.labels[v]) for v in r.reach_set(seen_labels[str(s)])}
                assert got == expected[s], (s, contacts)

    def test_backends_agree(self, backend):
        rng = random.Random(99)
        contacts = random_temporal(rng, 18, 90, t_max=9)
        r = reach_from(contacts)
        expected = oracles.temporal_reach_all(18, contacts, True)
        labels = {lab: i for i, lab in enumerate(r.labels)}
        for s, want in expected.items():
            if str(s) in labels:
                got = {int(r.labels[v]) for v in r.reach_set(labels[str(s)])}
                assert got == want


class TestStrongReachability:
    def test_mutual_pairs_only(self):
        rg = strong_reachability(reach_from([(0, 1, 1.0), (1, 0, 2.0), (1, 2, 3.0)]))
        assert rg.m == 1
        assert rg.has_edge(0, 1)

    def test_matches_oracle_pairs(self):
        rng = random.Random(61)
        for _ in range(20):
            n = rng.randint(2, 20)
            contacts = random_temporal(rng, n, rng.randint(1, 90), t_max=10)
            tg = parse_temporal_edge_list(contacts_text(contacts), directed=True)
            rg = strong_reachability(reach(tg))
            expected = oracles.strong_pairs(oracles.temporal_reach_all(n, contacts, True))
            got = {
                tuple(sorted((int(rg.labels[u]), int(rg.labels[v]))))
                for u, v in rg.edge_pairs()
            }
            assert got == expected


class TestMaxTscc:
    def test_round_robin_is_fully_strong(self):
        contacts = [(0, 1, 1.0), (1, 2, 2.0), (2, 0, 3.0), (0, 1, 4.0), (1, 2, 5.0), (2, 0, 6.0)]
        res = max_tscc(parse_temporal_edge_list(contacts_text(contacts), directed=True))
        assert res.size == 3
        assert res.exact

    def test_two_way_chain(self):
        contacts = [(0, 1, 1.0), (1, 0, 2.0), (1, 2, 3.0), (2, 1, 4.0)]
        res = max_tscc(parse_temporal_edge_list(contacts_text(contacts), directed=True))
        assert res.size == 2

    def test_antichain_gives_singleton(self):
        contacts = [(0, 1, 5.0), (1, 2, 4.0), (2, 3, 3.0)]
        res = max_tscc(parse_temporal_edge_list(contacts_text(contacts), directed=True))
        assert res.size == 1

    def test_matches_enumeration(self):
        rng = random.Random(62)
        for _ in range(15):
            n = rng.randint(2, 16)
            contacts = random_temporal(rng, n, rng.randint(2, 70), t_max=8)
            tg = parse_temporal_edge_list(contacts_text(contacts), directed=True)
            res = max_tscc(tg)
            expected = oracles.largest_tscc_size(tg.n, _relabeled(tg), True)
            assert res.size == expected

    def test_members_are_pairwise_mutually_reachable(self):
        rng = random.Random(63)
        contacts = random_temporal(rng, 14, 70, t_max=9)
        tg = parse_temporal_edge_list(contacts_text(contacts), directed=True)
        res = max_tscc(tg)
        reach_sets = oracles.temporal_reach_all(
            tg.n, _relabeled(tg), True
        )
        for u in res.vertices:
            for v in res.vertices:
                if u != v:
                    assert v in reach_sets[u]

    def test_reach_stats_describe_the_reachability_graph(self):
        contacts = [(0, 1, 1.0), (1, 0, 2.0), (1, 2, 3.0), (2, 1, 4.0)]
        tg = parse_temporal_edge_list(contacts_text(contacts), directed=True)
        res = max_tscc(tg)
        rg = strong_reachability(reach(tg))
        assert res.reach_stats.n == rg.n
        assert res.reach_stats.m == rg.m
        assert verify_clique(rg, res.clique.vertices)

    def test_time_limit_degrades_gracefully(self):
        rng = random.Random(64)
        contacts = random_temporal(rng, 120, 4000, t_max=60)
        tg = parse_temporal_edge_list(contacts_text(contacts), directed=False)
        res = max_tscc(tg, bounds=SearchBounds(time_limit=0.2))
        assert res.size >= 1
        if not res.exact:
            assert res.clique.timed_out


def _relabeled(tg):
    """Contacts in the temporal graph's internal ids, stored order."""
    return [
        (int(tg.src[i]), int(tg.dst[i]), float(tg.time[i]))
        for i in range(tg.n_edges)
    ]


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_reach_property_random(data):
    n = data.draw(st.integers(2, 12))
    k = data.draw(st.integers(1, 40))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    directed = data.draw(st.booleans())
    contacts = random_temporal(rng, n, k, t_max=6)
    r = reach_from(contacts, directed=directed)
    expected = oracles.temporal_reach_all(n, contacts, directed)
    labels = {lab: i for i, lab in enumerate(r.labels)}
    for s in range(n):
        if str(s) not in labels:
            assert not expected[s]
            continue
        got = {int(r.labels[v]) for v in r.reach_set(labels[str(s)])}
        assert got == expected[s]
