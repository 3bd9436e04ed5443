"""Maximal quantum values of the generated inequalities over qubit observables.

Each observer measures a +/-1 qubit observable per setting, parameterized by
a unit Bloch vector; for fixed directions the inequality becomes a Hermitian
operator on N qubits whose top eigenvalue is the best quantum value for that
choice.  The maximum over directions and states is lower-bounded by
alternating (see-saw) optimization: the state step takes the top eigenvector,
and each direction step replaces one (observer, setting) Bloch vector by the
normalized vector of Pauli expectation values, which maximizes the objective
linearly.  Both steps are monotone, which the implementation asserts on
every half-step.

See-saw yields lower bounds only; reports label the result as the best value
found over the requested restarts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .polytope import BellInequality

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
_PAULI = np.stack([PAULI_X, PAULI_Y, PAULI_Z])

_DEGENERATE_NORM = 1e-12
_MONOTONE_SLACK = 1e-8


class NotNormalized(ValueError):
    """State vector norm is not 1 within 1e-12."""


@dataclass(frozen=True, eq=False)
class ObservableDirection:
    """Unit Bloch vectors, one per (observer, setting); shape (N, 3, 3)."""

    directions: np.ndarray

    def __post_init__(self):
        if self.directions.ndim != 3 or self.directions.shape[1:] != (3, 3):
            raise ValueError("directions must have shape (parties, 3 settings, 3 components)")
        norms = np.linalg.norm(self.directions, axis=2)
        if np.any(np.abs(norms - 1.0) > 1e-12):
            raise ValueError("every direction must be a unit vector within 1e-12")

    @property
    def parties(self) -> int:
        return self.directions.shape[0]

    @classmethod
    def random(cls, parties: int, rng: np.random.Generator) -> "ObservableDirection":
        vecs = rng.normal(size=(parties, 3, 3))
        vecs /= np.linalg.norm(vecs, axis=2, keepdims=True)
        return cls(vecs)

    def observable(self, party: int, setting: int) -> np.ndarray:
        """The 2x2 observable n . sigma for one observer and setting."""
        return np.tensordot(self.directions[party, setting], _PAULI, axes=(0, 0))


def _nonzero_terms(ineq: BellInequality) -> list[tuple[tuple[int, ...], int]]:
    return [
        (tuple(int(i) for i in pos), int(ineq.coeffs[tuple(pos)]))
        for pos in np.argwhere(ineq.coeffs)
    ]


def bell_operator(ineq: BellInequality, dirs: ObservableDirection) -> np.ndarray:
    """sum_n g_n  (x)_i (dirs[i][n_i] . sigma), Hermitian on 2^N dimensions."""
    if dirs.parties != ineq.parties:
        raise ValueError("direction set and inequality disagree on observer count")
    dim = 2 ** ineq.parties
    out = np.zeros((dim, dim), dtype=np.complex128)
    for settings, coeff in _nonzero_terms(ineq):
        mats = [dirs.observable(i, settings[i]) for i in range(ineq.parties)]
        out += coeff * reduce(np.kron, mats)
    return out


def evaluate_state(ineq: BellInequality, dirs: ObservableDirection, state: np.ndarray) -> float:
    """<state| bell_operator |state> on a normalized 2^N state vector."""
    state = np.asarray(state, dtype=np.complex128).ravel()
    if state.shape != (2 ** ineq.parties,):
        raise ValueError(f"state must have 2^{ineq.parties} amplitudes")
    if abs(np.linalg.norm(state) - 1.0) > 1e-12:
        raise NotNormalized("state vector must have unit norm within 1e-12")
    return float(np.real(np.conj(state) @ bell_operator(ineq, dirs) @ state))


def algebraic_maximum(ineq: BellInequality) -> int:
    """sum |g_n|, the value no quantum or other theory can exceed."""
    return int(np.abs(ineq.coeffs).sum())


@dataclass(frozen=True, eq=False)
class QuantumValueReport:
    """Best quantum value found by see-saw, on the integer coefficient scale."""

    inequality_id: str
    quantum_max: float
    violation_ratio: float
    directions: ObservableDirection
    state: np.ndarray
    restarts_used: int
    converged: bool
    objective_trace: tuple[float, ...]

    @property
    def quantum_violating(self) -> bool:
        return self.violation_ratio > 1 + 1e-9


def _direction_score(
    psi_tensor: np.ndarray,
    terms: list[tuple[tuple[int, ...], int]],
    dirs: np.ndarray,
    party: int,
    setting: int,
    parties: int,
) -> np.ndarray:
    """Vector of Pauli expectations for one slot: score[k] is the objective's
    linear coefficient on component k of this direction."""
    reduced = np.zeros((2, 2), dtype=np.complex128)
    for settings, coeff in terms:
        if settings[party] != setting:
            continue
        phi = psi_tensor
        for j in range(parties):
            if j == party:
                continue
            obs = np.tensordot(dirs[j, settings[j]], _PAULI, axes=(0, 0))
            phi = np.moveaxis(np.tensordot(obs, phi, axes=(1, j)), 0, j)
        phi = np.moveaxis(phi, party, -1).reshape(-1, 2)
        psi = np.moveaxis(psi_tensor, party, -1).reshape(-1, 2)
        reduced += coeff * phi.T @ np.conj(psi)
    return np.real(np.einsum("kqp,pq->k", _PAULI, reduced))


def seesaw_maximize(
    ineq: BellInequality,
    restarts: int = 32,
    seed: int = 0,
    improvement_threshold: float = 1e-10,
    max_iterations: int = 10_000,
) -> QuantumValueReport:
    """Alternating maximization over state and observable directions.

    Deterministic for a given seed and restart count: restart r draws its
    initial directions from the r-th spawn of the seed sequence, and ties
    between restarts keep the earliest.  Stops early once the algebraic
    maximum is reached, since no later restart could improve on it.
    """
    if restarts < 1:
        raise ValueError("need at least one restart")
    parties = ineq.parties
    terms = _nonzero_terms(ineq)
    used = [sorted({s[i] for s, _ in terms}) for i in range(parties)]
    scale = float(ineq.bound)
    cap = float(algebraic_maximum(ineq))

    best_value = -np.inf
    best_dirs: np.ndarray | None = None
    best_state: np.ndarray | None = None
    best_converged = False
    best_trace: tuple[float, ...] = ()
    restarts_used = 0

    for child in np.random.SeedSequence(seed).spawn(restarts):
        restarts_used += 1
        rng = np.random.default_rng(child)
        dirs = rng.normal(size=(parties, 3, 3))
        dirs /= np.linalg.norm(dirs, axis=2, keepdims=True)
        trace: list[float] = []
        prev = -np.inf
        converged = False
        state = np.zeros(2 ** parties, dtype=np.complex128)
        for _ in range(max_iterations):
            operator = bell_operator(ineq, ObservableDirection(dirs.copy()))
            eigvals, eigvecs = np.linalg.eigh(operator)
            value = float(eigvals[-1])
            assert value >= prev - _MONOTONE_SLACK, "state step decreased the objective"
            trace.append(value)
            state = eigvecs[:, -1]
            psi_tensor = state.reshape((2,) * parties)

            for party in range(parties):
                for setting in used[party]:
                    score = _direction_score(psi_tensor, terms, dirs, party, setting, parties)
                    norm = np.linalg.norm(score)
                    if norm < _DEGENERATE_NORM:
                        continue  # null coefficient slice: keep previous direction
                    gain = norm - float(dirs[party, setting] @ score)
                    assert gain >= -_MONOTONE_SLACK, "direction step decreased the objective"
                    value += gain
                    dirs[party, setting] = score / norm
            trace.append(value)

            if value - prev < improvement_threshold * scale:
                converged = True
                prev = value
                break
            prev = value

        if prev > best_value:
            best_value = prev
            best_dirs = dirs.copy()
            best_state = state.copy()
            best_converged = converged
            best_trace = tuple(trace)
        if best_value >= cap - 1e-12 * max(1.0, cap):
            break

    assert best_dirs is not None and best_state is not None
    return QuantumValueReport(
        inequality_id=ineq.provenance.to_text() if ineq.provenance is not None else "",
        quantum_max=best_value,
        violation_ratio=min(best_value / scale, cap / scale),
        directions=ObservableDirection(best_dirs),
        state=best_state,
        restarts_used=restarts_used,
        converged=best_converged,
        objective_trace=best_trace,
    )
