#!/usr/bin/env python3
"""Download the public graphs used by the dataset-backed acceptance checks.

Fetches each archive from networkrepository.com, extracts the edge data, and
normalizes it into the layout the test suite and CLI expect:

    data/<name>.edges   one "u v" pair per line (static graphs)
    data/<name>.tel     one "u v t" contact per line (temporal graphs)

Matrix-market members have their comment and dimension lines stripped;
temporal members keep their first two columns as endpoints and their last
column as the timestamp. Existing files are left alone unless --force is
given, so the script is safe to re-run.

After writing each file the script parses it back and compares vertex and
edge counts against the published figures. A mismatch is printed, not fatal:
upstream archives occasionally change packaging, and the acceptance tests
make the final call.

Requires network access. The test suite skips dataset checks when these
files are absent, so running this script is optional everywhere else.
"""

from __future__ import annotations

import argparse
import io
import sys
import urllib.error
import urllib.request
import zipfile
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cliquetools import build_graph, parse_edge_list, parse_temporal_edge_list

BASE = "https://nrvis.com/download/data"


@dataclass(frozen=True)
class Dataset:
    name: str
    category: str
    kind: str  # "edges" or "tel"
    n: int
    m: int

    @property
    def url(self) -> str:
        return f"{BASE}/{self.category}/{self.name}.zip"


DATASETS = [
    Dataset("bio-yeast", "bio", "edges", n=1458, m=1948),
    Dataset("bio-celegans", "bio", "edges", n=453, m=2025),
    Dataset("web-polblogs", "web", "edges", n=643, m=2280),
    Dataset("rt-retweet", "rt", "edges", n=96, m=117),
    Dataset("tech-routers-rf", "tech", "edges", n=2113, m=6632),
    Dataset("ia-infect-hyper", "dynamic", "tel", n=113, m=20818),
    Dataset("ia-infect-dublin", "dynamic", "tel", n=10972, m=415912),
]

_MEMBER_PRIORITY = (".mtx", ".edges", ".txt")


def pick_member(names: list[str]) -> str | None:
    for suffix in _MEMBER_PRIORITY:
        for name in names:
            if name.lower().endswith(suffix) and not name.endswith("/"):
                return name
    return None


def normalize_static(text: str, from_mtx: bool) -> str:
    out = []
    dims_pending = from_mtx
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("%", "#")):
            continue
        if dims_pending:
            dims_pending = False  # matrix-market size line, not an edge
            continue
        fields = line.replace(",", " ").split()
        if len(fields) < 2:
            raise ValueError(f"expected at least two columns, got {line!r}")
        out.append(f"{fields[0]} {fields[1]}")
    return "\n".join(out) + "\n"


def normalize_temporal(text: str) -> str:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("%", "#")):
            continue
        fields = line.replace(",", " ").split()
        if len(fields) < 3:
            raise ValueError(f"expected at least three columns, got {line!r}")
        float(fields[-1])  # timestamp must be numeric
        out.append(f"{fields[0]} {fields[1]} {fields[-1]}")
    return "\n".join(out) + "\n"


def verify(ds: Dataset, path: Path) -> str:
    if ds.kind == "tel":
        tg = parse_temporal_edge_list(path)
        got_n, got_m = tg.n, tg.n_edges
    else:
        g = build_graph(parse_edge_list(path))
        got_n, got_m = g.n, g.m
    status = "ok" if (got_n, got_m) == (ds.n, ds.m) else "MISMATCH"
    return f"{status}: n={got_n} m={got_m} (expected n={ds.n} m={ds.m})"


def fetch(ds: Dataset, data_dir: Path, force: bool) -> bool:
    target = data_dir / f"{ds.name}.{ds.kind}"
    if target.exists() and not force:
        print(f"{ds.name}: already present, {verify(ds, target)}")
        return True
    try:
        with urllib.request.urlopen(ds.url, timeout=60) as resp:
            payload = resp.read()
    except (urllib.error.URLError, OSError) as exc:
        print(f"{ds.name}: download failed ({exc})")
        return False
    try:
        with zipfile.ZipFile(io.BytesIO(payload)) as zf:
            member = pick_member(zf.namelist())
            if member is None:
                print(f"{ds.name}: no edge member in {ds.url}")
                return False
            text = zf.read(member).decode("utf-8", errors="replace")
    except zipfile.BadZipFile as exc:
        print(f"{ds.name}: bad archive ({exc})")
        return False
    if ds.kind == "tel":
        normalized = normalize_temporal(text)
    else:
        normalized = normalize_static(text, from_mtx=member.lower().endswith(".mtx"))
    data_dir.mkdir(parents=True, exist_ok=True)
    target.write_text(normalized)
    print(f"{ds.name}: wrote {target}, {verify(ds, target)}")
    return True


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--data-dir",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "data",
        help="where to place the normalized files (default: repo data/)",
    )
    parser.add_argument("--force", action="store_true", help="re-download existing files")
    parser.add_argument(
        "--only",
        action="append",
        metavar="NAME",
        help="restrict to one dataset; may repeat",
    )
    args = parser.parse_args(argv)

    chosen = DATASETS
    if args.only:
        known = {ds.name for ds in DATASETS}
        unknown = set(args.only) - known
        if unknown:
            parser.error(f"unknown dataset(s): {', '.join(sorted(unknown))}")
        chosen = [ds for ds in DATASETS if ds.name in args.only]

    ok = all([fetch(ds, args.data_dir, args.force) for ds in chosen])
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
