"""Static graph loading and construction.

Input files are plain edge lists: one edge per line, tokens separated by
whitespace or commas, comment lines starting with ``#`` or ``%``. Anything
after the first two tokens (weights, extra columns) is ignored, which makes
MatrixMarket pattern files load unchanged (their size line turns into a
self-loop and is dropped during construction).

Vertex labels are arbitrary strings, interned to dense integer ids in
first-seen order. ``Graph`` keeps the interning table so results can be
reported in the original labels.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterator

import numpy as np

__all__ = [
    "ParseError",
    "EdgeList",
    "Graph",
    "parse_edge_list",
    "build_graph",
    "largest_component",
    "degree",
]


class ParseError(ValueError):
    """Malformed edge-list input. Carries the 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class EdgeList:
    """Raw parsed edges, in input order, duplicates and self-loops included.

    ``src``/``dst`` are dense vertex ids; ``labels[i]`` is the original label
    of vertex ``i``. ``directed`` records how the file was declared, not
    anything inferred from its contents.
    """

    labels: list[str]
    src: np.ndarray
    dst: np.ndarray
    directed: bool = False

    def __len__(self) -> int:
        return len(self.src)

    def __iter__(self) -> Iterator[tuple[str, str]]:
        for u, v in zip(self.src, self.dst):
            yield self.labels[u], self.labels[v]


@dataclass
class Graph:
    """Undirected simple graph in CSR form.

    Neighbor lists are ascending and free of duplicates and self-loops.
    ``labels`` maps dense ids back to the original input labels.
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: list[str]
    _label_map: dict[str, int] | None = field(default=None, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.indptr) - 1

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    @property
    def label_map(self) -> dict[str, int]:
        if self._label_map is None:
            self._label_map = {lab: i for i, lab in enumerate(self.labels)}
        return self._label_map

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range [0, {self.n})")
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range [0, {self.n})")
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        j = np.searchsorted(nb, v)
        return j < len(nb) and nb[j] == v

    def edge_pairs(self) -> np.ndarray:
        """(m, 2) array of undirected edges with u < v, ascending."""
        us = np.repeat(np.arange(self.n, dtype=np.int32), np.diff(self.indptr))
        keep = us < self.indices
        return np.column_stack([us[keep], self.indices[keep]])

    @classmethod
    def from_pairs(
        cls,
        pairs,
        n: int | None = None,
        labels: list[str] | None = None,
    ) -> "Graph":
        """Build from an iterable of (u, v) id pairs; loops/dups are dropped."""
        arr = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        if n is None:
            n = int(arr.max()) + 1 if arr.size else 0
        if labels is None:
            labels = [str(i) for i in range(n)]
        return _csr_from_pairs(n, arr[:, 0], arr[:, 1], labels)


def parse_edge_list(source: str | bytes | Path | IO, *, directed: bool = False) -> EdgeList:
    """Parse an edge list into an :class:`EdgeList`.

    Args:
        source: file path (``Path``), open file object, or the raw text /
            bytes of the list itself.
        directed: whether each line is a one-way edge. Undirected is the
            default and matches most published contact and interaction files.

    Raises:
        ParseError: on any data line with fewer than two tokens, with the
            offending 1-based line number in the message.
    """
    labels: list[str] = []
    ids: dict[str, int] = {}
    src: list[int] = []
    dst: list[int] = []

    def intern(tok: str) -> int:
        i = ids.get(tok)
        if i is None:
            i = len(labels)
            ids[tok] = i
            labels.append(tok)
        return i

    for line_no, line in enumerate(_iter_lines(source), start=1):
        stripped = line.strip()
        if not stripped or stripped[0] in "#%":
            continue
        toks = stripped.replace(",", " ").split()
        if len(toks) < 2:
            raise ParseError(f"expected at least 2 tokens, got {len(toks)}", line_no)
        src.append(intern(toks[0]))
        dst.append(intern(toks[1]))

    return EdgeList(
        labels=labels,
        src=np.asarray(src, dtype=np.int32),
        dst=np.asarray(dst, dtype=np.int32),
        directed=directed,
    )


def build_graph(edges: EdgeList, *, reciprocal_only: bool = False) -> Graph:
    """Construct the undirected simple graph underlying an edge list.

    Self-loops and duplicate edges are dropped. When the list is directed and
    ``reciprocal_only`` is set, an undirected edge {u, v} is kept only when
    both (u, v) and (v, u) appear; otherwise every edge is symmetrized.
    Vertices whose every edge is dropped stay in the graph as isolated
    vertices, so the vertex set is exactly the labels seen in the input.
    """
    n = len(edges.labels)
    u = edges.src.astype(np.int64)
    v = edges.dst.astype(np.int64)
    keep = u != v
    u, v = u[keep], v[keep]

    if edges.directed and reciprocal_only:
        fwd = np.unique(u * n + v)
        rev = np.unique(v * n + u)
        mutual = np.intersect1d(fwd, rev, assume_unique=True)
        mu, mv = mutual // n, mutual % n
        ordered = mu < mv
        return _csr_from_pairs(n, mu[ordered], mv[ordered], list(edges.labels))

    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    code = np.unique(lo * n + hi)
    return _csr_from_pairs(n, code // n, code % n, list(edges.labels))


def largest_component(g: Graph) -> Graph:
    """Restrict to the largest connected component, densely relabeled.

    Ties between equal-sized components go to the one whose smallest original
    label is least (labels compare numerically when they parse as integers,
    lexicographically otherwise). Original labels are retained, and the
    relative id order of surviving vertices is preserved. Applying this twice
    is a no-op.
    """
    if g.n == 0:
        return g
    comp = _components(g)
    ncomp = int(comp.max()) + 1
    sizes = np.bincount(comp, minlength=ncomp)
    best = max(
        range(ncomp),
        key=lambda c: (
            sizes[c],
            _negated_key(min(_label_key(g.labels[int(w)]) for w in np.flatnonzero(comp == c))),
        ),
    )
    verts = np.flatnonzero(comp == best)
    remap = np.full(g.n, -1, dtype=np.int32)
    remap[verts] = np.arange(len(verts), dtype=np.int32)
    new_labels = [g.labels[int(w)] for w in verts]
    pairs = g.edge_pairs()
    inside = remap[pairs[:, 0]] >= 0
    pairs = pairs[inside]
    return _csr_from_pairs(len(verts), remap[pairs[:, 0]], remap[pairs[:, 1]], new_labels)


def degree(g: Graph, v: int) -> int:
    """Degree of ``v`` in ``g``; IndexError when ``v`` is out of range."""
    return g.degree(v)


def _iter_lines(source: str | bytes | Path | IO) -> Iterator[str]:
    if isinstance(source, Path):
        with source.open("r", encoding="utf-8", errors="replace") as fh:
            yield from fh
    elif isinstance(source, bytes):
        yield from io.StringIO(source.decode("utf-8", errors="replace"))
    elif isinstance(source, str):
        yield from io.StringIO(source)
    else:
        for raw in source:
            yield raw.decode("utf-8", errors="replace") if isinstance(raw, bytes) else raw


def _csr_from_pairs(n: int, u: np.ndarray, v: np.ndarray, labels: list[str]) -> Graph:
    """CSR from unique undirected pairs (loops assumed already dropped)."""
    heads = np.concatenate([u, v]).astype(np.int64)
    tails = np.concatenate([v, u]).astype(np.int64)
    order = np.lexsort((tails, heads))
    heads, tails = heads[order], tails[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, heads + 1, 1)
    np.cumsum(indptr, out=indptr)
    return Graph(indptr=indptr, indices=tails.astype(np.int32), labels=labels)


def _components(g: Graph) -> np.ndarray:
    comp = np.full(g.n, -1, dtype=np.int64)
    nxt = 0
    for seed in range(g.n):
        if comp[seed] >= 0:
            continue
        comp[seed] = nxt
        frontier = np.array([seed], dtype=np.int64)
        while len(frontier):
            chunks = [
                g.indices[g.indptr[w] : g.indptr[w + 1]] for w in frontier
            ]
            nbrs = np.unique(np.concatenate(chunks)) if chunks else np.array([], dtype=np.int32)
            fresh = nbrs[comp[nbrs] < 0]
            comp[fresh] = nxt
            frontier = fresh.astype(np.int64)
        nxt += 1
    return comp


def _label_key(label: str):
    try:
        return (0, int(label), "")
    except ValueError:
        return (1, 0, label)


class _negated_key:
    """Inverts comparison so min-label preference fits inside a max()."""

    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other: "_negated_key") -> bool:
        return other.key < self.key

    def __eq__(self, other) -> bool:
        return isinstance(other, _negated_key) and other.key == self.key
