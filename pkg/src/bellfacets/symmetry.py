"""Relabeling symmetries acting on sign functions.

The natural equivalences of the N-observer, three-setting problem are:
permuting observers, exchanging an observer's two non-reference settings
(swapping its variable pair), flipping outcomes (negating either variable of
a pair), and negating the whole function (exchanging a bound's face with its
antiface).  Together these form a group of order N! * 8^N * 2 whose action
on packed tables is a bit permutation plus an optional complement.

Orbits are small enough (at most a few thousand elements for N <= 3) that
canonical forms are computed by explicit orbit scan: the canonical
representative is the orbit member with the least packed-table integer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fourier import SignFunction, table_size


@dataclass(frozen=True)
class SymmetryElement:
    """One relabeling: party routing, per-party swaps/negations, global sign.

    ``party_permutation[i]`` is the observer receiving observer i's
    (negated, possibly swapped) variable pair.  Negations apply before the
    swap within each pair.
    """

    party_permutation: tuple[int, ...]
    swaps: tuple[bool, ...]
    negations: tuple[tuple[bool, bool], ...]
    flip_sign: bool

    @classmethod
    def identity(cls, parties: int) -> "SymmetryElement":
        return cls(
            tuple(range(parties)),
            (False,) * parties,
            ((False, False),) * parties,
            False,
        )

    @property
    def parties(self) -> int:
        return len(self.party_permutation)

    def assignment_map(self) -> np.ndarray:
        """Index map P with P[v] = transformed assignment of v."""
        n = table_size(self.parties)
        idx = np.arange(n)
        out = np.zeros(n, dtype=np.int64)
        for i in range(self.parties):
            u = (idx >> (2 * i)) & 1
            w = (idx >> (2 * i + 1)) & 1
            if self.negations[i][0]:
                u = u ^ 1
            if self.negations[i][1]:
                w = w ^ 1
            if self.swaps[i]:
                u, w = w, u
            j = self.party_permutation[i]
            out |= (u << (2 * j)) | (w << (2 * j + 1))
        return out

    def apply(self, s: SignFunction) -> SignFunction:
        """Transformed sign function t with t(P(v)) = +/- s(v)."""
        n = table_size(s.parties)
        perm = self.assignment_map()
        bits = np.unpackbits(
            np.frombuffer(s.table.to_bytes(n // 8, "little"), dtype=np.uint8),
            bitorder="little",
        )[:n]
        moved = np.zeros(n, dtype=np.uint8)
        moved[perm] = bits
        if self.flip_sign:
            moved ^= 1
        packed = np.packbits(moved, bitorder="little").tobytes()
        return SignFunction(s.parties, int.from_bytes(packed, "little"))

    def compose(self, other: "SymmetryElement") -> "SymmetryElement":
        """Element applying ``other`` first, then ``self``."""
        if self.parties != other.parties:
            raise ValueError("cannot compose elements for different party counts")
        perm = tuple(self.party_permutation[other.party_permutation[i]] for i in range(self.parties))
        swaps = []
        negs = []
        for i in range(self.parties):
            j = other.party_permutation[i]
            ng = self.negations[j]
            if other.swaps[i]:
                ng = (ng[1], ng[0])
            nh = other.negations[i]
            negs.append((ng[0] ^ nh[0], ng[1] ^ nh[1]))
            swaps.append(self.swaps[j] ^ other.swaps[i])
        return SymmetryElement(perm, tuple(swaps), tuple(negs), self.flip_sign ^ other.flip_sign)


def symmetry_group(parties: int) -> list[SymmetryElement]:
    """All N! * 8^N * 2 relabelings, in a fixed deterministic order."""
    elements = []
    for perm in itertools.permutations(range(parties)):
        for swaps in itertools.product((False, True), repeat=parties):
            for negs in itertools.product(
                ((False, False), (True, False), (False, True), (True, True)),
                repeat=parties,
            ):
                for flip in (False, True):
                    elements.append(SymmetryElement(perm, swaps, negs, flip))
    return elements


@lru_cache(maxsize=None)
def _index_maps(parties: int) -> np.ndarray:
    """Stacked assignment maps of all sign-free group elements, shape (K, 2^(2N)).

    Materialized for N <= 3 only (128 and 3072 rows); the N = 4 group has
    98304 elements, so orbits there stream element by element instead.
    """
    maps = [
        e.assignment_map()
        for e in symmetry_group(parties)
        if not e.flip_sign
    ]
    out = np.stack(maps)
    out.setflags(write=False)
    return out


def _pack_rows(rows: np.ndarray, parties: int) -> list[int]:
    """Pack (K, 2^(2N)) bit rows into table integers, little-endian bit order."""
    packed = np.packbits(rows, axis=1, bitorder="little")
    n = table_size(parties)
    if n == 16:
        return [int(x) for x in packed.view("<u2").ravel()]
    if n == 64:
        return [int(x) for x in packed.view("<u8").ravel()]
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def orbit_tables(s: SignFunction) -> set[int]:
    """Packed tables of the full symmetry orbit of s (both signs)."""
    n = table_size(s.parties)
    bits = np.unpackbits(
        np.frombuffer(s.table.to_bytes(n // 8, "little"), dtype=np.uint8),
        bitorder="little",
    )[:n]
    # Gathering through every index map hits the whole orbit because the
    # group is closed under inversion.
    if s.parties <= 3:
        rows = bits[_index_maps(s.parties)]
        plain = _pack_rows(rows, parties=s.parties)
    else:
        plain = []
        for e in symmetry_group(s.parties):
            if e.flip_sign:
                continue
            row = bits[e.assignment_map()]
            packed = np.packbits(row, bitorder="little").tobytes()
            plain.append(int.from_bytes(packed, "little"))
    full = (1 << n) - 1
    return set(plain) | {t ^ full for t in plain}


def canonicalize(s: SignFunction) -> SignFunction:
    """Least packed table over the orbit of s; constant on orbits, idempotent."""
    return SignFunction(s.parties, min(orbit_tables(s)))
