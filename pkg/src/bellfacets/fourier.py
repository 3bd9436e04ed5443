"""Sign functions of paired dichotomic variables and their exact Fourier spectra.

Every observer i in {0, ..., N-1} owns a pair of +/-1 product variables: the
products of its reference-setting outcome with its setting-1 and setting-2
outcomes.  An assignment of all 2N variables is packed into an integer: bit 2i
holds observer i's first variable, bit 2i+1 its second, with bit value 0
meaning +1 and 1 meaning -1.  A sign function assigns +/-1 to each of the
2^(2N) assignments and is stored as a packed bit table (bit k set means value
-1 at assignment k).

Spectra are kept unnormalized: the coefficient on a variable subset T is
sum_v s(v) * prod_{j in T} v_j, an even integer of magnitude at most 2^(2N).
This keeps all arithmetic exact; dividing by 2^(2N) recovers the conventional
normalized expansion.

A sign function is *admissible* when its spectrum puts zero weight on every
monomial containing both variables of some observer.  Admissible functions
are the generators of the tight correlation inequalities built in
:mod:`bellfacets.polytope`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

MIN_PARTIES = 2
MAX_PARTIES = 4


class NotSignValued(ValueError):
    """A hand-authored spectrum does not reconstruct to a +/-1-valued table."""


def table_size(parties: int) -> int:
    """Number of variable assignments, 2^(2N)."""
    return 1 << (2 * parties)


def _check_parties(parties: int) -> None:
    if not MIN_PARTIES <= parties <= MAX_PARTIES:
        raise ValueError(f"parties must be in [{MIN_PARTIES}, {MAX_PARTIES}], got {parties}")


@dataclass(frozen=True)
class VariableAssignment:
    """One +/-1 value for each of the 2N product variables, bit-packed."""

    parties: int
    bits: int

    def __post_init__(self):
        _check_parties(self.parties)
        if not 0 <= self.bits < table_size(self.parties):
            raise ValueError(f"bits 0x{self.bits:x} out of range for {self.parties} parties")

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "VariableAssignment":
        vals = tuple(values)
        if len(vals) % 2 or not all(v in (-1, 1) for v in vals):
            raise ValueError("need an even number of +/-1 values")
        bits = sum(1 << j for j, v in enumerate(vals) if v == -1)
        return cls(len(vals) // 2, bits)

    def values(self) -> tuple[int, ...]:
        return tuple(1 - 2 * ((self.bits >> j) & 1) for j in range(2 * self.parties))

    def value(self, variable: int) -> int:
        """Value of variable index j (2i = observer i's first, 2i+1 its second)."""
        return 1 - 2 * ((self.bits >> variable) & 1)


@dataclass(frozen=True)
class Monomial:
    """A subset of the 2N variables, the index of one Fourier character."""

    parties: int
    subset: int

    def __post_init__(self):
        _check_parties(self.parties)
        if not 0 <= self.subset < table_size(self.parties):
            raise ValueError(f"subset 0x{self.subset:x} out of range for {self.parties} parties")

    @property
    def is_local_product(self) -> bool:
        """True when some observer contributes both of its variables."""
        for i in range(self.parties):
            if self.subset >> (2 * i) & 1 and self.subset >> (2 * i + 1) & 1:
                return True
        return False

    def variables(self) -> tuple[int, ...]:
        return tuple(j for j in range(2 * self.parties) if self.subset >> j & 1)

    def settings(self) -> tuple[int, ...]:
        """Settings tuple this monomial addresses (absent -> 0, first -> 1, second -> 2).

        Raises ValueError for local products, which have no settings reading.
        """
        out = []
        for i in range(self.parties):
            first = self.subset >> (2 * i) & 1
            second = self.subset >> (2 * i + 1) & 1
            if first and second:
                raise ValueError(f"monomial 0x{self.subset:x} is a local product")
            out.append(1 if first else 2 if second else 0)
        return tuple(out)

    @classmethod
    def from_settings(cls, settings: Iterable[int]) -> "Monomial":
        subset = 0
        settings = tuple(settings)
        for i, n in enumerate(settings):
            if n == 1:
                subset |= 1 << (2 * i)
            elif n == 2:
                subset |= 1 << (2 * i + 1)
            elif n != 0:
                raise ValueError(f"setting must be 0, 1 or 2, got {n}")
        return cls(len(settings), subset)

    def character(self, assignment: VariableAssignment) -> int:
        return 1 - 2 * (bin(self.subset & assignment.bits).count("1") & 1)


@dataclass(frozen=True)
class SignFunction:
    """A +/-1-valued function on all assignments, as a packed bit table."""

    parties: int
    table: int

    def __post_init__(self):
        _check_parties(self.parties)
        if not 0 <= self.table < (1 << table_size(self.parties)):
            raise ValueError(f"table has bits beyond 2^(2N) entries for N={self.parties}")

    @classmethod
    def from_values(cls, parties: int, values: Iterable[int]) -> "SignFunction":
        vals = list(values)
        if len(vals) != table_size(parties):
            raise ValueError(f"need {table_size(parties)} values, got {len(vals)}")
        table = 0
        for k, v in enumerate(vals):
            if v == -1:
                table |= 1 << k
            elif v != 1:
                raise NotSignValued(f"table entry {k} is {v}, not +/-1")
        return cls(parties, table)

    @classmethod
    def from_function(cls, parties: int, fn: Callable[..., int]) -> "SignFunction":
        """Build the table by evaluating fn on every assignment's variable values."""
        vals = [fn(*VariableAssignment(parties, k).values()) for k in range(table_size(parties))]
        return cls.from_values(parties, vals)

    def value(self, assignment: VariableAssignment | int) -> int:
        bits = assignment.bits if isinstance(assignment, VariableAssignment) else assignment
        return 1 - 2 * ((self.table >> bits) & 1)

    def values(self) -> np.ndarray:
        """The table as an int8 array of +/-1, index = packed assignment."""
        n = table_size(self.parties)
        raw = np.frombuffer(self.table.to_bytes(n // 8, "little"), dtype=np.uint8)
        return (1 - 2 * np.unpackbits(raw, bitorder="little").astype(np.int8))[:n]

    def to_text(self) -> str:
        """Serialize as ``N=<n>;table=<hex>`` with little-endian bit order."""
        n = table_size(self.parties)
        return f"N={self.parties};table={self.table.to_bytes(n // 8, 'little').hex()}"

    @classmethod
    def from_text(cls, text: str) -> "SignFunction":
        try:
            n_part, t_part = text.strip().split(";")
            parties = int(n_part.removeprefix("N="))
            hexstr = t_part.removeprefix("table=")
        except (ValueError, AttributeError) as exc:
            raise ValueError(f"malformed sign-function text {text!r}") from exc
        if not n_part.startswith("N=") or not t_part.startswith("table="):
            raise ValueError(f"malformed sign-function text {text!r}")
        _check_parties(parties)
        expected = table_size(parties) // 4
        if len(hexstr) != expected:
            raise ValueError(f"table hex must have {expected} digits for N={parties}")
        table = int.from_bytes(bytes.fromhex(hexstr), "little")
        return cls(parties, table)


@dataclass(frozen=True)
class FourierSpectrum:
    """Integer character coefficients, indexed by packed variable subset."""

    parties: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_parties(self.parties)
        if len(self.coeffs) != table_size(self.parties):
            raise ValueError(f"need {table_size(self.parties)} coefficients")

    def __getitem__(self, monomial: Monomial | int) -> int:
        subset = monomial.subset if isinstance(monomial, Monomial) else monomial
        return self.coeffs[subset]

    def nonzero(self) -> dict[Monomial, int]:
        return {
            Monomial(self.parties, subset): c
            for subset, c in enumerate(self.coeffs)
            if c != 0
        }


def _fwht(values: np.ndarray) -> np.ndarray:
    """In-place integer Walsh-Hadamard butterfly over the last axis."""
    out = np.ascontiguousarray(values, dtype=np.int64).copy()
    n = out.shape[-1]
    h = 1
    while h < n:
        for start in range(0, n, 2 * h):
            a = out[..., start:start + h].copy()
            b = out[..., start + h:start + 2 * h].copy()
            out[..., start:start + h] = a + b
            out[..., start + h:start + 2 * h] = a - b
        h *= 2
    return out


def fourier_transform(s: SignFunction) -> FourierSpectrum:
    """Exact integer spectrum of a sign function.

    Coefficient at subset T is sum_v s(v) * chi_T(v) with
    chi_T(v) = (-1)^popcount(T & v); computed by a fast Walsh-Hadamard
    transform in O(2^(2N) * 2N) integer operations.
    """
    return FourierSpectrum(s.parties, tuple(int(c) for c in _fwht(s.values())))


def inverse_transform(spectrum: FourierSpectrum) -> SignFunction:
    """The unique sign function with the given spectrum.

    Raises NotSignValued when the reconstruction is not +/-1 at some
    assignment (invalid hand-authored spectrum).
    """
    n = table_size(spectrum.parties)
    recon = _fwht(np.array(spectrum.coeffs, dtype=np.int64))
    if not np.all(np.abs(recon) == n):
        bad = int(np.flatnonzero(np.abs(recon) != n)[0])
        raise NotSignValued(
            f"reconstruction at assignment {bad} is {recon[bad]}/{n}, not +/-1"
        )
    table = 0
    for k in np.flatnonzero(recon < 0):
        table |= 1 << int(k)
    return SignFunction(spectrum.parties, table)


def _local_block_ok(values: np.ndarray, parties: int, party: int) -> np.ndarray:
    """Vectorized block condition for one observer.

    For every fixed assignment of the other variables, the four values over
    the observer's pair must satisfy s(+,+) + s(-,-) = s(+,-) + s(-,+), i.e.
    the pair-product component of each local block vanishes.  Works on a
    single table (shape (2^(2N),)) or a batch (..., 2^(2N)); returns a
    boolean (batch-shaped) verdict.
    """
    n = table_size(parties)
    p, q = 1 << (2 * party), 1 << (2 * party + 1)
    idx = np.arange(n)
    base = idx[(idx & (p | q)) == 0]
    lhs = values[..., base] + values[..., base | p | q]
    rhs = values[..., base | p] + values[..., base | q]
    return np.all(lhs == rhs, axis=-1)


def is_admissible(s: SignFunction) -> bool:
    """True when no observer's pair product survives in the spectrum.

    Decided by the local block test (no transform): for each observer and
    each assignment of the remaining variables, the signed sum
    s(+,+,r) + s(-,-,r) - s(+,-,r) - s(-,+,r) must vanish.
    """
    vals = s.values()
    return all(bool(_local_block_ok(vals, s.parties, i)) for i in range(s.parties))


def is_factorable(s: SignFunction) -> bool:
    """True when s is +/- a single character, yielding a trivial inequality.

    Equivalent to the induced coefficient tensor having exactly one nonzero
    entry, necessarily of magnitude 2^(2N).
    """
    spec = _fwht(s.values())
    hits = np.flatnonzero(spec)
    return len(hits) == 1 and abs(int(spec[hits[0]])) == table_size(s.parties)
