"""Shared fixtures: seeded generators, backend switching, dataset discovery."""

from __future__ import annotations

import os
import random
from pathlib import Path

import pytest

from cliquetools import Graph, warm_up
from cliquetools._kernels import ENV_VAR as BACKEND_ENV

DATA_ENV = "CLIQUETOOLS_DATA"


def data_dir() -> Path:
    return Path(os.environ.get(DATA_ENV, Path(__file__).resolve().parent.parent / "data"))


def dataset_path(name: str, kind: str = "edges") -> Path | None:
    """Locate a downloaded dataset, or None when it is not present."""
    suffixes = (f".{kind}", ".txt")
    for suffix in suffixes:
        candidate = data_dir() / f"{name}{suffix}"
        if candidate.is_file():
            return candidate
    return None


def require_dataset(name: str, kind: str = "edges") -> Path:
    path = dataset_path(name, kind)
    if path is None:
        pytest.skip(f"dataset {name!r} not found under {data_dir()}; run scripts/fetch_datasets.py")
    return path


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    """Compile the jitted kernels once so timings in tests stay honest."""
    warm_up()


@pytest.fixture(params=["numba", "numpy"])
def backend(request, monkeypatch):
    """Run a test under each kernel backend in turn."""
    if request.param == "numba":
        pytest.importorskip("numba")
    monkeypatch.setenv(BACKEND_ENV, request.param)
    return request.param


def gnp_pairs(rng: random.Random, n: int, p: float) -> list[tuple[int, int]]:
    """Edge pairs of a G(n, p) draw from the given generator."""
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def gnp_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_pairs(gnp_pairs(rng, n, p), n=n)


def random_temporal(
    rng: random.Random, n: int, n_contacts: int, t_max: int = 50
) -> list[tuple[int, int, float]]:
    """Random timestamped contacts with deliberately heavy timestamp reuse."""
    contacts = []
    while len(contacts) < n_contacts:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            contacts.append((u, v, float(rng.randrange(t_max))))
    return contacts


def contacts_text(contacts: list[tuple[int, int, float]]) -> str:
    return "".join(f"{u} {v} {t}\n" for u, v, t in contacts)
