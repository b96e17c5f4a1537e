"""Cross-checks against vendored OEIS b-files.

Three sequences are vendored under data/: the d=2 origin-return counts
(A135404), the single-pair counts (A000531), and the threefold convolution
of binom(2k+1, k+1) that the free even-position sum reproduces (A045720).
Each b-file is "index value" lines; fixtures.json records the index offset.

Lookups never touch the network unless fetch=True, in which case the
b-file is downloaded from oeis.org and cached under the directory named by
GESSELWALKS_OEIS_CACHE (default ~/.cache/gesselwalks/oeis).  A fixture
directory override (GESSELWALKS_OEIS_FIXTURES) exists so relocated vendor
trees keep working.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .exceptions import FixtureError

CACHE_ENV = "GESSELWALKS_OEIS_CACHE"
FIXTURE_DIR_ENV = "GESSELWALKS_OEIS_FIXTURES"

SEQUENCE_IDS = ("A135404", "A000531", "A045720")


@dataclass(frozen=True)
class BFile:
    seq_id: str
    offset: int
    terms: dict[int, int]

    def value(self, index: int) -> int:
        return self.terms[index]


def _fixture_meta() -> dict:
    base = os.environ.get(FIXTURE_DIR_ENV)
    if base:
        path = Path(base) / "fixtures.json"
        if not path.exists():
            raise FixtureError(f"fixtures.json not found under {base}")
        return json.loads(path.read_text())
    ref = resources.files("gesselwalks.data").joinpath("fixtures.json")
    return json.loads(ref.read_text())


def _read_bfile_text(text: str, seq_id: str, offset: int) -> BFile:
    terms = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FixtureError(f"bad b-file line for {seq_id}: {line!r}")
        terms[int(parts[0])] = int(parts[1])
    if not terms:
        raise FixtureError(f"empty b-file for {seq_id}")
    return BFile(seq_id, offset, terms)


def load_fixture(seq_id: str) -> BFile:
    """Load the vendored b-file for one of the supported sequence ids."""
    if seq_id not in SEQUENCE_IDS:
        raise FixtureError(f"unsupported sequence id {seq_id}")
    meta = _fixture_meta()
    entry = meta.get(seq_id)
    if entry is None:
        raise FixtureError(f"no fixture metadata for {seq_id}")
    base = os.environ.get(FIXTURE_DIR_ENV)
    if base:
        path = Path(base) / entry["file"]
        if not path.exists():
            raise FixtureError(f"fixture file {path} missing")
        text = path.read_text()
    else:
        ref = resources.files("gesselwalks.data").joinpath(entry["file"])
        try:
            text = ref.read_text()
        except FileNotFoundError:
            raise FixtureError(f"fixture file {entry['file']} missing") from None
    return _read_bfile_text(text, seq_id, int(entry["offset"]))


def fetch_bfile(seq_id: str, *, cache_dir: str | None = None) -> BFile:
    """Download (or reuse from cache) the live b-file for seq_id."""
    from urllib.request import urlopen

    if seq_id not in SEQUENCE_IDS:
        raise FixtureError(f"unsupported sequence id {seq_id}")
    meta = _fixture_meta()
    offset = int(meta[seq_id]["offset"])
    cache = Path(
        cache_dir
        or os.environ.get(CACHE_ENV)
        or Path.home() / ".cache" / "gesselwalks" / "oeis"
    )
    cache.mkdir(parents=True, exist_ok=True)
    path = cache / f"b{seq_id[1:]}.txt"
    if not path.exists():
        url = f"https://oeis.org/{seq_id}/b{seq_id[1:]}.txt"
        with urlopen(url, timeout=30) as resp:  # may raise URLError
            data = resp.read().decode()
        path.write_text(data)
    return _read_bfile_text(path.read_text(), seq_id, offset)


def computed_terms(seq_id: str, n_max: int) -> dict[int, int]:
    """Library-side values aligned to the sequence's index convention."""
    from .formulas import (
        even_marker_sum_free_closed,
        gessel_closed_form,
        one_pair_closed,
    )

    if seq_id == "A135404":
        return {n: gessel_closed_form(n) for n in range(0, n_max + 1)}
    if seq_id == "A000531":
        return {n: one_pair_closed(n) for n in range(1, n_max + 1)}
    if seq_id == "A045720":
        return {k: even_marker_sum_free_closed(k + 3) for k in range(0, n_max + 1)}
    raise FixtureError(f"unsupported sequence id {seq_id}")


def compare(seq_id: str, n_max: int, *, fetch: bool = False) -> list[dict]:
    """Per-index comparison rows between library values and the b-file."""
    bfile = fetch_bfile(seq_id) if fetch else load_fixture(seq_id)
    ours = computed_terms(seq_id, n_max)
    rows = []
    for idx in sorted(ours):
        if idx not in bfile.terms:
            continue
        ref = bfile.terms[idx]
        rows.append(
            {
                "sequence": seq_id,
                "index": idx,
                "computed": str(ours[idx]),
                "reference": str(ref),
                "match": ours[idx] == ref,
            }
        )
    if not rows:
        raise FixtureError(
            f"no overlapping indices between computed range and {seq_id} fixture"
        )
    return rows
