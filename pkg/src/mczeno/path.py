"""Interpolated path Hamiltonians with an optional X-driver envelope.

H(s) = (1 - s) H_i + s H_p + alpha s (1 - s) H_X, where H_X is the sum
of single-qubit X operators.  The quadratic envelope vanishes at both
endpoints, so s = 0 and s = 1 reproduce the initial and final
Hamiltonians term for term.
"""

from __future__ import annotations

from dataclasses import dataclass

from mczeno.pauli import PauliHamiltonian, PauliTerm, combine


@dataclass(frozen=True)
class PathHamiltonian:
    """The (H_i, H_p, alpha, T) bundle describing one evolution path."""

    h_initial: PauliHamiltonian
    h_final: PauliHamiltonian
    alpha: float = 0.0
    total_time: float = 10.0

    def __post_init__(self) -> None:
        if self.h_initial.n_qubits != self.h_final.n_qubits:
            raise ValueError("initial and final Hamiltonians differ in qubit count")
        if self.alpha < 0:
            raise ValueError(f"alpha must be non-negative, got {self.alpha}")
        if self.total_time <= 0:
            raise ValueError(f"total_time must be positive, got {self.total_time}")

    @property
    def n_qubits(self) -> int:
        return self.h_final.n_qubits


def x_driver(n_qubits: int) -> PauliHamiltonian:
    """H_X = sum over qubits of a unit-weight single-qubit X."""
    return PauliHamiltonian(
        n_qubits,
        [PauliTerm(n_qubits, 1 << q, 0, 1.0) for q in range(n_qubits)],
    )


def h_at(p: PathHamiltonian, s: float) -> PauliHamiltonian:
    """Instantaneous Hamiltonian at path parameter s in [0, 1]."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"s must lie in [0, 1], got {s}")
    parts = [(1.0 - s, p.h_initial), (s, p.h_final)]
    envelope = p.alpha * s * (1.0 - s)
    if envelope != 0.0:
        parts.append((envelope, x_driver(p.n_qubits)))
    return combine(parts)


def discretize(p: PathHamiltonian, n_steps: int) -> list[PauliHamiltonian]:
    """The N+1 Hamiltonians H_k = H(k/N) for k = 0..N."""
    if n_steps < 1:
        raise ValueError(f"n_steps must be at least 1, got {n_steps}")
    return [h_at(p, k / n_steps) for k in range(n_steps + 1)]
