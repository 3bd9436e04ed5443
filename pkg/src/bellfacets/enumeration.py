"""Enumeration of admissible sign functions and their symmetry census.

For two observers the whole 2^16 table space is scanned directly.  For more
observers the generator works blockwise: table entries are assigned four at a
time (observer 0's variable pair, for one fixed assignment of the rest), a
block is only extended with one of the six locally valid patterns, and every
other observer's block condition is enforced the moment its four entries are
known.  For the last observer the condition determines each remaining block
outright, so the search propagates the forced value and keeps it only when it
is itself locally valid.

The census (:func:`classify`) groups the stream into symmetry orbits via
explicit orbit scans and annotates each canonical class.
"""

from __future__ import annotations

import struct
import time
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .fourier import SignFunction, is_factorable, table_size
from .polytope import chsh_pattern, inequality_from_sign_function
from .symmetry import orbit_tables


class UnsupportedSize(ValueError):
    """Requested an enumeration outside the supported desk-scale range."""


# The six 4-entry patterns a single observer's block may take: value tables of
# +/-1, +/-u, +/-w on one variable pair (entry index bit 0 = first variable).
_VALID_BLOCKS = tuple(
    nib for nib in range(16)
    if ((nib >> 0 & 1) + (nib >> 3 & 1)) == ((nib >> 1 & 1) + (nib >> 2 & 1))
)


def _second_party_ok(table: int) -> bool:
    """Block conditions for observer 1 of a two-observer table."""
    for ab in range(4):
        b0 = table >> ab & 1
        b1 = table >> (ab + 4) & 1
        b2 = table >> (ab + 8) & 1
        b3 = table >> (ab + 12) & 1
        if b0 + b3 != b1 + b2:
            return False
    return True


def _backtrack_two() -> Iterator[int]:
    """Two-observer backtracking, ascending packed-table order."""
    for n3 in _VALID_BLOCKS:
        for n2 in _VALID_BLOCKS:
            for n1 in _VALID_BLOCKS:
                for n0 in _VALID_BLOCKS:
                    table = n0 | n1 << 4 | n2 << 8 | n3 << 12
                    if _second_party_ok(table):
                        yield table


def _exhaustive_two() -> Iterator[int]:
    """Vectorized scan of all 2^16 tables via the local block test."""
    bits = np.unpackbits(
        np.arange(1 << 16, dtype="<u2").view(np.uint8).reshape(-1, 2),
        axis=1,
        bitorder="little",
    ).astype(np.int8)
    ok = np.ones(1 << 16, dtype=bool)
    for p, q in ((1, 2), (4, 8)):
        base = [k for k in range(16) if not k & (p | q)]
        for r in base:
            ok &= bits[:, r] + bits[:, r | p | q] == bits[:, r | p] + bits[:, r | q]
    return iter(int(t) for t in np.flatnonzero(ok))


@lru_cache(maxsize=None)
def _admissible_tables(parties: int) -> tuple[int, ...]:
    """Fully materialized admissible stream for N <= 3 (memoized)."""
    return tuple(_table_stream(parties))


def _table_stream(parties: int) -> Iterator[int]:
    if parties == 2:
        yield from _backtrack_two()
        return
    # Sections over the last observer's four pair assignments.  Each section
    # must itself be admissible for the first N-1 observers; the last
    # observer's block condition forces section 3 pointwise from the first
    # three and is valid only where sections 1 and 2 agreeing forces section
    # 0 to agree as well.
    prev = _admissible_tables(parties - 1)
    prev_set = frozenset(prev)
    m = table_size(parties - 1)
    mask = (1 << m) - 1
    for s0 in prev:
        for s1 in prev:
            d01 = s0 ^ s1
            for s2 in prev:
                agree = ~(s1 ^ s2) & mask
                if agree & d01:
                    continue
                s3 = s0 ^ (s1 ^ s2)
                if s3 in prev_set:
                    yield s0 | s1 << m | s2 << (2 * m) | s3 << (3 * m)


def enumerate_admissible(
    parties: int,
    mode: str = "backtracking",
    checkpoint: str | Path | None = None,
    checkpoint_every: int = 1_000_000,
) -> Iterator[SignFunction]:
    """Stream every admissible sign function exactly once, deterministically.

    ``mode`` is ``"backtracking"`` (any supported N) or ``"exhaustive"``
    (N = 2 only).  When ``checkpoint`` is given, accepted tables already in
    the file are replayed first and generation resumes past them, appending
    a fresh snapshot every ``checkpoint_every`` accepted functions.
    """
    if not 2 <= parties <= 4:
        raise UnsupportedSize(f"enumeration supports 2 to 4 observers, got {parties}")
    if mode == "exhaustive":
        if parties != 2:
            raise UnsupportedSize("exhaustive mode scans 2^(2N) tables; only N=2 is viable")
        stream: Iterator[int] = _exhaustive_two()
    elif mode == "backtracking":
        stream = _table_stream(parties)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    if checkpoint is None:
        for table in stream:
            yield SignFunction(parties, table)
        return
    yield from _stream_with_checkpoint(parties, stream, Path(checkpoint), checkpoint_every)


def _stream_with_checkpoint(
    parties: int, stream: Iterator[int], path: Path, every: int
) -> Iterator[SignFunction]:
    accepted: list[int] = []
    if path.exists():
        stored_parties, accepted = read_checkpoint(path)
        if stored_parties != parties:
            raise ValueError(f"checkpoint {path} is for N={stored_parties}, not N={parties}")
    for table in accepted:
        yield SignFunction(parties, table)
    for _ in range(len(accepted)):  # deterministic order makes skip-ahead safe
        next(stream)
    unflushed = 0
    try:
        for table in stream:
            accepted.append(table)
            unflushed += 1
            if unflushed >= every:
                write_checkpoint(path, parties, accepted)
                unflushed = 0
            yield SignFunction(parties, table)
    finally:
        if unflushed:
            write_checkpoint(path, parties, accepted)


_CHECKPOINT_MAGIC = b"BELLENUM"
_CHECKPOINT_VERSION = 1
_HEADER = struct.Struct("<8sHHI")


def write_checkpoint(path: str | Path, parties: int, tables: Iterable[int]) -> None:
    tables = list(tables)
    width = table_size(parties) // 8
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(_CHECKPOINT_MAGIC, _CHECKPOINT_VERSION, parties, len(tables)))
        for t in tables:
            fh.write(int(t).to_bytes(width, "little"))


def read_checkpoint(path: str | Path) -> tuple[int, list[int]]:
    raw = Path(path).read_bytes()
    magic, version, parties, count = _HEADER.unpack_from(raw)
    if magic != _CHECKPOINT_MAGIC:
        raise ValueError(f"{path} is not an enumeration checkpoint")
    if version != _CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {version}")
    width = table_size(parties) // 8
    body = raw[_HEADER.size:]
    if len(body) != count * width:
        raise ValueError(f"checkpoint {path} is truncated")
    tables = [
        int.from_bytes(body[i * width:(i + 1) * width], "little") for i in range(count)
    ]
    return parties, tables


@dataclass(frozen=True)
class CanonicalClass:
    """One symmetry orbit: least-table representative, size, triviality."""

    representative: SignFunction
    orbit_size: int
    factorable: bool


@dataclass(frozen=True)
class EnumerationReport:
    parties: int
    total_admissible: int
    canonical_classes: tuple[CanonicalClass, ...]
    factorable_count: int
    wall_time: float


def classify(parties: int) -> EnumerationReport:
    """Group the admissible stream into canonical classes and annotate them.

    For two observers every non-factorable class is verified to carry the
    CHSH coefficient pattern; a violation would falsify the construction and
    raises RuntimeError.
    """
    if parties not in (2, 3):
        raise UnsupportedSize(f"census is desk-scale for 2 or 3 observers, got {parties}")
    start = time.perf_counter()
    tables = _admissible_tables(parties)
    admissible = set(tables)
    seen: set[int] = set()
    classes: list[CanonicalClass] = []
    for t in tables:
        if t in seen:
            continue
        orb = orbit_tables(SignFunction(parties, t))
        if not orb <= admissible:
            raise RuntimeError("symmetry orbit left the admissible family")
        seen |= orb
        rep = SignFunction(parties, min(orb))
        classes.append(CanonicalClass(rep, len(orb), is_factorable(rep)))
    classes.sort(key=lambda c: c.representative.table)
    factorable_count = sum(c.orbit_size for c in classes if c.factorable)
    if parties == 2:
        for cls in classes:
            if not cls.factorable and not chsh_pattern(inequality_from_sign_function(cls.representative)):
                raise RuntimeError(
                    f"non-factorable class {cls.representative.to_text()} lacks the CHSH pattern"
                )
    return EnumerationReport(
        parties=parties,
        total_admissible=len(tables),
        canonical_classes=tuple(classes),
        factorable_count=factorable_count,
        wall_time=time.perf_counter() - start,
    )
