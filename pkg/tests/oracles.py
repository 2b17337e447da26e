"""Slow reference implementations the test suite trusts.

Everything here is deliberately naive and self-contained: plain dicts, sets,
and lists, no numpy, no imports from the package under test. Where the
library uses bitsets and a branch-and-bound search, these oracles enumerate;
where the library sweeps reachability in reverse time order, the oracle runs
an earliest-arrival relaxation forward. Agreement between two algorithms
this different is the point.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence


def adjacency(n: int, pairs: Iterable[tuple[int, int]]) -> dict[int, set[int]]:
    """Symmetric adjacency sets over vertices 0..n-1, loops dropped."""
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in pairs:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def max_clique_enum(n: int, pairs: Iterable[tuple[int, int]]) -> tuple[int, frozenset[int]]:
    """Exhaustive maximum clique via Bron-Kerbosch with pivoting.

    Returns the clique number and one maximum clique. Safe up to a few dozen
    vertices at any density.
    """
    adj = adjacency(n, pairs)
    best: list[frozenset[int]] = [frozenset()]

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            if len(r) > len(best[0]):
                best[0] = frozenset(r)
            return
        if len(r) + len(p) <= len(best[0]):
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    if n > 0:
        expand(set(), set(range(n)), set())
    return len(best[0]), best[0]


def all_maximum_cliques(n: int, pairs: Iterable[tuple[int, int]]) -> list[frozenset[int]]:
    """Every maximum clique, for tests that check witness membership."""
    adj = adjacency(n, pairs)
    size, _ = max_clique_enum(n, pairs)
    found = set()
    for combo in itertools.combinations(range(n), size):
        if all(v in adj[u] for u, v in itertools.combinations(combo, 2)):
            found.add(frozenset(combo))
    return sorted(found, key=sorted)


def is_clique(pairs: Iterable[tuple[int, int]], n: int, members: Iterable[int]) -> bool:
    adj = adjacency(n, pairs)
    members = list(members)
    return all(v in adj[u] for u, v in itertools.combinations(members, 2))


def triangles_per_vertex(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    """t(v) = number of triangles through v, by direct neighbor-pair checks."""
    adj = adjacency(n, pairs)
    counts = [0] * n
    for v in range(n):
        for u, w in itertools.combinations(sorted(adj[v]), 2):
            if w in adj[u]:
                counts[v] += 1
    return counts


def clustering_coefficients(n: int, pairs: Iterable[tuple[int, int]]) -> list[float]:
    adj = adjacency(n, pairs)
    tri = triangles_per_vertex(n, pairs)
    coeffs = []
    for v in range(n):
        d = len(adj[v])
        coeffs.append(tri[v] / (d * (d - 1) / 2) if d >= 2 else 0.0)
    return coeffs


def global_clustering(n: int, pairs: Iterable[tuple[int, int]]) -> float:
    adj = adjacency(n, pairs)
    tri = triangles_per_vertex(n, pairs)
    wedges = sum(len(adj[v]) * (len(adj[v]) - 1) // 2 for v in range(n))
    return sum(tri) / wedges if wedges else 0.0


def core_numbers_peel(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    """Core numbers by literally peeling a minimum-degree vertex at a time."""
    adj = adjacency(n, pairs)
    degree = {v: len(adj[v]) for v in range(n)}
    core = [0] * n
    alive = set(range(n))
    k = 0
    while alive:
        v = min(alive, key=lambda u: (degree[u], u))
        k = max(k, degree[v])
        core[v] = k
        alive.remove(v)
        for u in adj[v]:
            if u in alive:
                degree[u] -= 1
    return core


def degeneracy(n: int, pairs: Iterable[tuple[int, int]]) -> int:
    return max(core_numbers_peel(n, pairs), default=0)


def temporal_reach_arrival(
    n: int,
    contacts: Sequence[tuple[int, int, float]],
    directed: bool,
    source: int,
) -> set[int]:
    """Vertices reachable from ``source`` along strictly increasing times.

    Forward earliest-arrival relaxation: scan contacts in chronological
    order and extend a path only when the previous hop arrived strictly
    earlier. Contacts sharing a timestamp can therefore never chain, which
    the scan gets right for free because an arrival set during a timestamp
    batch equals the batch time and fails the strict comparison.
    """
    arrivals = {source: -math.inf}
    step = sorted(contacts, key=lambda c: c[2])
    if not directed:
        step = sorted(
            [(u, v, t) for u, v, t in step] + [(v, u, t) for u, v, t in step],
            key=lambda c: c[2],
        )
    for u, v, t in step:
        if u in arrivals and arrivals[u] < t:
            if v not in arrivals or arrivals[v] > t:
                arrivals[v] = t
    arrivals.pop(source, None)
    return set(arrivals)


def temporal_reach_all(
    n: int, contacts: Sequence[tuple[int, int, float]], directed: bool
) -> dict[int, set[int]]:
    return {s: temporal_reach_arrival(n, contacts, directed, s) for s in range(n)}


def strong_pairs(reach_sets: dict[int, set[int]]) -> set[tuple[int, int]]:
    """Unordered pairs {u, v} with temporal paths both ways, as (u, v), u < v."""
    out = set()
    for u, targets in reach_sets.items():
        for v in targets:
            if u < v and u in reach_sets.get(v, set()):
                out.add((u, v))
    return out


def largest_tscc_size(n: int, contacts: Sequence[tuple[int, int, float]], directed: bool) -> int:
    """Size of the largest pairwise mutually-reachable vertex set."""
    reach_sets = temporal_reach_all(n, contacts, directed)
    pairs = strong_pairs(reach_sets)
    if not pairs:
        return 1 if n else 0
    size, _ = max_clique_enum(n, pairs)
    return size
