"""The local-realistic correlation polytope and its facet certificates.

A deterministic strategy fixes one +/-1 outcome per observer and setting; its
full-correlation tensor is the outer product of the per-observer outcome
triples.  Changing variables to the products with the reference setting shows
every such tensor equals a *vertex* x * (1, u_0, w_0) x ... x (1, u_{N-1},
w_{N-1}), so the polytope of locally modelable correlation tensors is the
convex hull of the 2^(2N+1) vertices.

An admissible sign function s induces the inequality |<g, E>| <= 2^(2N),
where g places each spectrum coefficient at the settings tuple its monomial
addresses.  Every vertex evaluates to exactly +/-2^(2N) against such a g
(the reconstruction identity), which is what makes the bound classical and
the saturating half of the vertices span the whole space.

Tightness is certified with exact integer arithmetic: the saturating
vertices' rank over the rationals is computed by fraction-free Gaussian
elimination, never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .fourier import (
    Monomial,
    SignFunction,
    VariableAssignment,
    fourier_transform,
    is_admissible,
    table_size,
)


class NotAdmissible(ValueError):
    """Sign function has a forbidden local-product Fourier component."""


class BoundNotAttained(ValueError):
    """No vertex reaches the stated bound; not a face of the polytope."""


@dataclass(frozen=True)
class DeterministicStrategy:
    """One +/-1 outcome per (observer, setting)."""

    parties: int
    outcomes: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if len(self.outcomes) != self.parties:
            raise ValueError("need one outcome triple per observer")
        if any(m not in (-1, 1) for triple in self.outcomes for m in triple):
            raise ValueError("outcomes must be +/-1")


def enumerate_strategies(parties: int) -> Iterator[DeterministicStrategy]:
    """All 2^(3N) deterministic strategies, in packed-bit order."""
    for bits in range(1 << (3 * parties)):
        outcomes = tuple(
            tuple(1 - 2 * (bits >> (3 * i + n) & 1) for n in range(3))
            for i in range(parties)
        )
        yield DeterministicStrategy(parties, outcomes)


@dataclass(frozen=True, eq=False)
class Vertex:
    """Extreme point of the correlation polytope: a signed product tensor."""

    assignment: VariableAssignment
    sign: int
    tensor: np.ndarray


def vertex_tensor(assignment: VariableAssignment, sign: int) -> Vertex:
    """x * (1, u_i, w_i) outer product across observers; entries +/-1."""
    if sign not in (-1, 1):
        raise ValueError("sign must be +/-1")
    factors = [
        np.array([1, assignment.value(2 * i), assignment.value(2 * i + 1)], dtype=np.int64)
        for i in range(assignment.parties)
    ]
    tensor = sign * reduce(np.multiply.outer, factors)
    tensor.setflags(write=False)
    return Vertex(assignment, sign, tensor)


@lru_cache(maxsize=None)
def all_vertices(parties: int) -> tuple[Vertex, ...]:
    """The 2^(2N+1) vertices, assignment-major then sign (+1 before -1)."""
    out = []
    for bits in range(table_size(parties)):
        for sign in (1, -1):
            out.append(vertex_tensor(VariableAssignment(parties, bits), sign))
    return tuple(out)


@lru_cache(maxsize=None)
def vertex_matrix(parties: int) -> np.ndarray:
    """Row-stacked flattened vertex tensors, aligned with all_vertices."""
    mat = np.stack([v.tensor.ravel() for v in all_vertices(parties)])
    mat.setflags(write=False)
    return mat


@dataclass(frozen=True, eq=False)
class CorrelationTensor:
    """Correlation function values over all 3^N settings tuples."""

    parties: int
    entries: np.ndarray

    def __post_init__(self):
        expected = (3,) * self.parties
        if self.entries.shape != expected:
            raise ValueError(f"entries must have shape {expected}")
        if np.any(np.abs(self.entries) > 1 + 1e-9):
            raise ValueError("correlation values must lie in [-1, 1]")


def strategy_to_correlations(strategy: DeterministicStrategy) -> CorrelationTensor:
    """Outer product of per-observer outcome triples."""
    factors = [np.array(t, dtype=np.int64) for t in strategy.outcomes]
    entries = reduce(np.multiply.outer, factors).astype(np.float64)
    entries.setflags(write=False)
    return CorrelationTensor(strategy.parties, entries)


def strategy_to_vertex(strategy: DeterministicStrategy) -> Vertex:
    """The vertex a strategy lands on: x = prod of reference outcomes,
    u_i, w_i = reference outcome times setting-1/setting-2 outcome."""
    sign = 1
    bits = 0
    for i, (m0, m1, m2) in enumerate(strategy.outcomes):
        sign *= m0
        if m0 * m1 == -1:
            bits |= 1 << (2 * i)
        if m0 * m2 == -1:
            bits |= 1 << (2 * i + 1)
    return vertex_tensor(VariableAssignment(strategy.parties, bits), sign)


@dataclass(frozen=True, eq=False)
class BellInequality:
    """Integer coefficient tensor over settings tuples with classical bound.

    ``coeffs[n_0, ..., n_{N-1}]`` is the unnormalized spectrum coefficient of
    the monomial addressing that settings tuple; ``bound`` is 2^(2N) for
    inequalities generated from admissible sign functions.
    """

    parties: int
    coeffs: np.ndarray
    bound: int
    provenance: SignFunction | None = None

    def __post_init__(self):
        if self.coeffs.shape != (3,) * self.parties:
            raise ValueError(f"coeffs must have shape {(3,) * self.parties}")

    def evaluate(self, correlations: CorrelationTensor) -> float:
        return float((self.coeffs * correlations.entries).sum())


def inequality_from_sign_function(s: SignFunction) -> BellInequality:
    """Place the spectrum of an admissible sign function on settings tuples."""
    if not is_admissible(s):
        raise NotAdmissible(f"{s.to_text()} has a local-product Fourier component")
    spectrum = fourier_transform(s)
    coeffs = np.zeros((3,) * s.parties, dtype=np.int64)
    for subset, value in enumerate(spectrum.coeffs):
        mono = Monomial(s.parties, subset)
        if mono.is_local_product:
            continue
        coeffs[mono.settings()] = value
    coeffs.setflags(write=False)
    return BellInequality(s.parties, coeffs, table_size(s.parties), provenance=s)


class LhvBounds(NamedTuple):
    maximum: int
    minimum: int


def lhv_max(ineq: BellInequality) -> LhvBounds:
    """Extreme values of <coeffs, V> over all vertices (brute force)."""
    values = vertex_matrix(ineq.parties) @ ineq.coeffs.ravel()
    return LhvBounds(int(values.max()), int(values.min()))


@lru_cache(maxsize=None)
def _strategy_matrix(parties: int) -> np.ndarray:
    mat = np.stack(
        [
            strategy_to_correlations(d).entries.ravel().astype(np.int64)
            for d in enumerate_strategies(parties)
        ]
    )
    mat.setflags(write=False)
    return mat


def lhv_max_by_strategies(ineq: BellInequality) -> LhvBounds:
    """Same extrema via the 2^(3N) deterministic strategies; an independent
    route used to cross-check the vertex scan."""
    values = _strategy_matrix(ineq.parties) @ ineq.coeffs.ravel()
    return LhvBounds(int(values.max()), int(values.min()))


def canonical_coefficient(
    correlations: CorrelationTensor, s: SignFunction, assignment: VariableAssignment
) -> float:
    """Expansion weight of E on the basis vertex at this assignment:
    (1/2^(2N)) <V_{v, s(v)}, E>.  Summed over all assignments this equals
    <coeffs, E> / 2^(2N)."""
    vertex = vertex_tensor(assignment, s.value(assignment))
    return float((vertex.tensor * correlations.entries).sum()) / table_size(s.parties)


def fraction_free_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer matrix rank by fraction-free (Bareiss) elimination."""
    mat = [[int(x) for x in row] for row in rows]
    if not mat:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    prev_pivot = 1
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if mat[r][col]), None)
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pivot = mat[rank][col]
        for r in range(rank + 1, n_rows):
            factor = mat[r][col]
            row = mat[r]
            top = mat[rank]
            for c in range(col, n_cols):
                value = pivot * row[c] - factor * top[c]
                q, rem = divmod(value, prev_pivot)
                assert rem == 0, "fraction-free update must divide exactly"
                row[c] = q
        prev_pivot = pivot
        rank += 1
        if rank == min(n_rows, n_cols):
            break
    return rank


@dataclass(frozen=True)
class TightnessCertificate:
    tight: bool
    saturating_count: int
    rank: int


def certify_tightness(ineq: BellInequality) -> TightnessCertificate:
    """Collect the vertices saturating the bound and take their exact rank.

    The inequality is a facet (TIGHT) exactly when the saturating set spans
    all 3^N dimensions; the set lies in the affine hyperplane <g, E> = bound,
    so full linear rank is one more than the face's affine dimension.
    """
    matrix = vertex_matrix(ineq.parties)
    values = matrix @ ineq.coeffs.ravel()
    saturating = matrix[values == ineq.bound]
    if len(saturating) == 0:
        raise BoundNotAttained(f"no vertex reaches the bound {ineq.bound}")
    rank = fraction_free_rank(saturating.tolist())
    return TightnessCertificate(
        tight=rank == 3 ** ineq.parties,
        saturating_count=int(len(saturating)),
        rank=rank,
    )


def chsh_pattern(ineq: BellInequality) -> bool:
    """True when the tensor is a CHSH block: four entries of equal magnitude
    2^(2N-1) on a 2x2 settings rectangle (all other observers pinned to one
    setting), with an odd number of negative signs."""
    support = np.argwhere(ineq.coeffs)
    if len(support) != 4:
        return False
    magnitudes = {abs(int(ineq.coeffs[tuple(pos)])) for pos in support}
    if magnitudes != {table_size(ineq.parties) // 2}:
        return False
    used = [sorted(set(support[:, i].tolist())) for i in range(ineq.parties)]
    sizes = sorted(len(u) for u in used)
    if sizes != [1] * (ineq.parties - 2) + [2, 2]:
        return False
    if len(support) != np.prod([len(u) for u in used]):
        return False
    negatives = sum(1 for pos in support if ineq.coeffs[tuple(pos)] < 0)
    return negatives % 2 == 1
