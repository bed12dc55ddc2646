"""Quantum Zeno projection: dragging eigenstates by repeated measurement.

Each trial starts in an eigenstate of the initial Hamiltonian and is
projected onto the instantaneous eigenbasis of every discretization step
in turn.  Outcomes follow the Born rule; a degenerate level is treated
as one outcome, with the state collapsed onto the whole eigenspace (so
intra-subspace coherence survives and no arbitrary eigenvector basis
leaks into the results).  The reported index of a degenerate level is
its lowest rank.

Randomness is counter-based: the draw for (run_seed, trial, step) comes
from its own Philox stream, so any subset of trials can be reproduced,
or executed concurrently, without coordinating generator state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from mczeno.path import PathHamiltonian, discretize
from mczeno.qae import DEGENERACY_TOL, basis_state, evolve
from mczeno.spectral import EigenSolution, diagonal_basis_order, eig
from mczeno.pauli import is_all_z


@dataclass(frozen=True)
class ZenoTrial:
    """One projection run: per-step eigenindices and the final outcome."""

    final_index: int
    final_energy: float
    trajectory: tuple[int, ...]
    seed: int
    initial_index: int
    trial_number: int = 0


@dataclass(frozen=True)
class ZenoDistribution:
    """Final-index counts over repeated trials from one initial state."""

    counts: dict[int, int]
    trials: int
    initial_index: int

    def __post_init__(self) -> None:
        if sum(self.counts.values()) != self.trials:
            raise ValueError("counts do not sum to the trial total")


@dataclass(frozen=True)
class LowestEnergies:
    """Distinct final energies with observation counts, lowest first.

    complete is False when fewer distinct states than requested were
    observed.
    """

    energies: tuple[tuple[float, int], ...]
    complete: bool


def step_rng(run_seed: int, trial: int, step: int) -> np.random.Generator:
    """The dedicated random stream for one projection event."""
    sequence = np.random.SeedSequence(entropy=(int(run_seed), int(trial), int(step)))
    return np.random.Generator(np.random.Philox(sequence))


def _group_starts(eigenvalues: np.ndarray) -> np.ndarray:
    """Start offsets of the degenerate eigenvalue groups (sorted input)."""
    breaks = np.flatnonzero(np.diff(eigenvalues) > DEGENERACY_TOL) + 1
    return np.concatenate(([0], breaks))


def project(
    psi: np.ndarray, es: EigenSolution, rng: np.random.Generator
) -> tuple[int, np.ndarray]:
    """Born-rule projection onto the eigenbasis, degeneracy-aware.

    Returns the sampled level's lowest rank and the normalized collapse
    of psi onto that level's full eigenspace.
    """
    vectors = es.eigenvectors
    if psi.shape[0] != vectors.shape[0]:
        raise ValueError(
            f"state dimension {psi.shape[0]} does not match basis {vectors.shape[0]}"
        )
    amplitudes = np.conj(psi.conj() @ vectors)
    weights = np.abs(amplitudes) ** 2
    starts = _group_starts(es.eigenvalues)
    probs = np.add.reduceat(weights, starts)
    total = probs.sum()
    if abs(total - 1.0) > 1e-6:
        raise ValueError(f"state is not normalized (total weight {total})")
    draw = rng.random() * total
    chosen = int(np.searchsorted(np.cumsum(probs), draw, side="right"))
    chosen = min(chosen, len(starts) - 1)
    a = int(starts[chosen])
    b = int(starts[chosen + 1]) if chosen + 1 < len(starts) else len(weights)
    collapsed = vectors[:, a:b] @ amplitudes[a:b]
    collapsed = collapsed / np.linalg.norm(collapsed)
    return a, collapsed


def initial_eigenstate(p: PathHamiltonian, initial_index: int) -> np.ndarray:
    """Eigenstate of H(0) at the given rank.

    For a diagonal (all-Z) initial Hamiltonian, ranks order basis states
    by (energy, basis index), so degenerate ground states enumerate in
    lexicographic order and the choice is reproducible.
    """
    h0 = p.h_initial
    dim = 1 << p.n_qubits
    if not 0 <= initial_index < dim:
        raise ValueError(f"initial_index {initial_index} outside 0..{dim - 1}")
    if is_all_z(h0):
        order = diagonal_basis_order(h0)
        return basis_state(p.n_qubits, int(order[initial_index]))
    return eig(h0).eigenvectors[:, initial_index].astype(complex)


def zeno_run(
    p: PathHamiltonian,
    n_steps: int,
    initial_index: int,
    rng_seed: int,
    trial_number: int = 0,
    initial_state: np.ndarray | None = None,
    eigensolutions: list[EigenSolution] | None = None,
) -> ZenoTrial:
    """One projection trial over the N-step discretization.

    A user-supplied initial_state (instead of an exact eigenstate rank)
    is itself projected onto the H(0) eigenbasis first, consuming the
    step-0 random draw; exact initial eigenstates skip that step because
    the projection would be the identity on them.
    """
    if n_steps < 1:
        raise ValueError(f"n_steps must be at least 1, got {n_steps}")
    if eigensolutions is None:
        eigensolutions = [eig(h) for h in discretize(p, n_steps)]
    if len(eigensolutions) != n_steps + 1:
        raise ValueError("eigensolution list does not match n_steps")

    trajectory = []
    if initial_state is not None:
        index0, psi = project(
            initial_state, eigensolutions[0], step_rng(rng_seed, trial_number, 0)
        )
        trajectory.append(index0)
    else:
        psi = initial_eigenstate(p, initial_index)

    for k in range(1, n_steps + 1):
        index, psi = project(
            psi, eigensolutions[k], step_rng(rng_seed, trial_number, k)
        )
        trajectory.append(index)

    final_index = trajectory[-1]
    final_energy = float(eigensolutions[-1].eigenvalues[final_index])
    return ZenoTrial(
        final_index=final_index,
        final_energy=final_energy,
        trajectory=tuple(trajectory),
        seed=rng_seed,
        initial_index=initial_index,
        trial_number=trial_number,
    )


def zeno_statistics(
    p: PathHamiltonian,
    n_steps: int,
    initial_indices: list[int],
    trials_per_initial: int,
    rng_seed: int,
) -> list[ZenoDistribution]:
    """Final-index statistics, one distribution per initial eigenstate.

    Trial t of the i-th initial index uses trial number
    i * trials_per_initial + t, so results are seed-deterministic and
    independent of execution order.
    """
    if trials_per_initial < 1:
        raise ValueError("trials_per_initial must be at least 1")
    eigensolutions = [eig(h) for h in discretize(p, n_steps)]
    out = []
    for slot, initial_index in enumerate(initial_indices):
        counts: dict[int, int] = {}
        for t in range(trials_per_initial):
            trial = zeno_run(
                p, n_steps, initial_index, rng_seed,
                trial_number=slot * trials_per_initial + t,
                eigensolutions=eigensolutions,
            )
            counts[trial.final_index] = counts.get(trial.final_index, 0) + 1
        out.append(ZenoDistribution(counts, trials_per_initial, initial_index))
    return out


def lowest_k_energies(
    p: PathHamiltonian,
    n_steps: int,
    k: int,
    repetitions: int,
    rng_seed: int,
) -> LowestEnergies:
    """Lowest distinct final energies from round-robin projection runs.

    Starts trials from the k lowest eigenstates of H(0) in rotation
    (repetitions total) and gathers the distinct final energies seen.
    """
    dim = 1 << p.n_qubits
    if not 1 <= k <= dim:
        raise ValueError(f"k must be in 1..{dim}, got {k}")
    if repetitions < k:
        raise ValueError("repetitions must be at least k")
    eigensolutions = [eig(h) for h in discretize(p, n_steps)]
    observed: dict[int, int] = {}
    for r in range(repetitions):
        trial = zeno_run(
            p, n_steps, r % k, rng_seed,
            trial_number=r,
            eigensolutions=eigensolutions,
        )
        observed[trial.final_index] = observed.get(trial.final_index, 0) + 1
    final_values = eigensolutions[-1].eigenvalues
    ranked = sorted(observed)
    energies = tuple(
        (float(final_values[i]), observed[i]) for i in ranked[:k]
    )
    return LowestEnergies(energies=energies, complete=len(energies) == k)


def qae_then_project(
    p: PathHamiltonian,
    delta_t: float,
    initial_index: int,
    trials: int,
    rng_seed: int,
) -> ZenoDistribution:
    """Adiabatic evolution followed by a single final projection.

    The comparison partner for full projection runs: evolve once, then
    sample the final eigenbasis per trial.
    """
    psi0 = initial_eigenstate(p, initial_index)
    result = evolve(p, delta_t, psi0)
    final = eig(p.h_final)
    counts: dict[int, int] = {}
    for t in range(trials):
        index, _ = project(result.final_state, final, step_rng(rng_seed, t, 0))
        counts[index] = counts.get(index, 0) + 1
    return ZenoDistribution(counts, trials, initial_index)


def distribution_csv(distributions: list[ZenoDistribution]) -> str:
    """CSV rows (initial_index, final_index, count), header included."""
    lines = ["initial_index,final_index,count"]
    for dist in distributions:
        for final_index in sorted(dist.counts):
            lines.append(f"{dist.initial_index},{final_index},{dist.counts[final_index]}")
    return "\n".join(lines) + "\n"
