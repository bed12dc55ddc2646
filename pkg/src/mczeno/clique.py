"""Maximum-commuting extraction via weighted cliques of the commutation graph.

Vertices are Hamiltonian terms weighted by |coefficient|, edges join
commuting pairs, and a maximum-weight clique is a maximum-commuting term
set.  The greedy search repeatedly takes the heaviest remaining vertex
that is compatible with everything selected so far; an exact
branch-and-bound search serves as the reference on small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from mczeno.pauli import (
    DIMENSION_CAP,
    PauliHamiltonian,
    commutes,
    diagonal_entries,
    is_all_z,
)

BRUTE_FORCE_CAP = 24
"""Largest vertex count accepted by the exact clique search."""


@dataclass(frozen=True)
class CommutationGraph:
    """Weighted commutation graph of a Pauli Hamiltonian.

    vertex_weights[i] is |coefficient| of term term_index[i]; adjacency is
    symmetric with a False diagonal (no self-loops).
    """

    vertex_weights: np.ndarray
    adjacency: np.ndarray
    term_index: tuple[int, ...]
    labels: tuple[str, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.term_index)


@dataclass(frozen=True)
class CliqueResult:
    """A maximal clique: sorted vertex tuple and its total weight."""

    vertices: tuple[int, ...]
    weight: float


def build_graph(h: PauliHamiltonian) -> CommutationGraph:
    """Graph with one vertex per term and edges between commuting pairs."""
    terms = h.terms
    m = len(terms)
    adjacency = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(i + 1, m):
            if commutes(terms[i], terms[j]):
                adjacency[i, j] = adjacency[j, i] = True
    weights = np.array([abs(t.coefficient) for t in terms], dtype=float)
    return CommutationGraph(
        vertex_weights=weights,
        adjacency=adjacency,
        term_index=tuple(range(m)),
        labels=tuple(t.label for t in terms),
    )


def greedy_max_clique(g: CommutationGraph) -> CliqueResult:
    """Greedy maximal clique by repeated maximum-weight selection.

    At every round the heaviest vertex still compatible with the current
    selection joins it (ties broken toward the lowest vertex index), and
    incompatible vertices are discarded.  The loop runs until nothing
    compatible remains, so the result is always maximal.  Compatibility
    checks total at most V**2.
    """
    weights = g.vertex_weights
    candidates = list(range(len(g)))
    chosen: list[int] = []
    while candidates:
        best = candidates[0]
        for v in candidates[1:]:
            if weights[v] > weights[best]:
                best = v
        chosen.append(best)
        candidates = [v for v in candidates if v != best and g.adjacency[v, best]]
    chosen.sort()
    return CliqueResult(tuple(chosen), float(weights[list(chosen)].sum()) if chosen else 0.0)


def brute_force_max_clique(g: CommutationGraph, cap: int = BRUTE_FORCE_CAP) -> CliqueResult:
    """Exact maximum-weight clique by branch and bound.

    Vertices are expanded in descending weight order; a branch is pruned
    when even taking every remaining candidate cannot beat the incumbent.
    Deterministic: on equal weight the lexicographically smallest sorted
    vertex tuple wins.
    """
    m = len(g)
    if m > cap:
        raise ValueError(f"{m} vertices exceeds the exact-search cap of {cap}")
    if m == 0:
        return CliqueResult((), 0.0)

    order = sorted(range(m), key=lambda v: (-g.vertex_weights[v], v))
    weights = g.vertex_weights
    adjacency = g.adjacency

    best_vertices: tuple[int, ...] = ()
    best_weight = -1.0

    def expand(current: list[int], current_weight: float, candidates: list[int]) -> None:
        nonlocal best_vertices, best_weight
        if not candidates:
            key = tuple(sorted(current))
            if current_weight > best_weight + 1e-15 or (
                abs(current_weight - best_weight) <= 1e-15 and key < best_vertices
            ):
                best_weight = current_weight
                best_vertices = key
            return
        remaining = current_weight + weights[candidates].sum()
        if remaining < best_weight - 1e-15:
            return
        v = candidates[0]
        rest = candidates[1:]
        expand(current + [v], current_weight + weights[v],
               [u for u in rest if adjacency[u, v]])
        expand(current, current_weight, rest)

    expand([], 0.0, order)
    return CliqueResult(best_vertices, float(best_weight))


def _is_clique(g: CommutationGraph, vertices: tuple[int, ...]) -> bool:
    for i, u in enumerate(vertices):
        for v in vertices[i + 1:]:
            if not g.adjacency[u, v]:
                return False
    return True


def mc_hamiltonian(h: PauliHamiltonian, c: CliqueResult) -> PauliHamiltonian:
    """Sub-Hamiltonian of the clique's terms with original coefficients."""
    if any(v < 0 or v >= len(h.terms) for v in c.vertices):
        raise ValueError("clique vertex outside the Hamiltonian's term range")
    g = build_graph(h)
    if not _is_clique(g, c.vertices):
        raise ValueError("vertex set is not a clique of this Hamiltonian")
    expected = float(sum(abs(h.terms[v].coefficient) for v in c.vertices))
    if abs(expected - c.weight) > 1e-9:
        raise ValueError("clique weight does not match the Hamiltonian's terms")
    return PauliHamiltonian(h.n_qubits, [h.terms[v] for v in c.vertices])


def clique_to_dict(h: PauliHamiltonian, c: CliqueResult) -> dict:
    """Structured record of a clique for reports and rendering."""
    return {
        "weight": c.weight,
        "members": [
            {"label": h.terms[v].label, "coefficient": h.terms[v].coefficient}
            for v in c.vertices
        ],
    }


def diagonal_ground_state(
    h: PauliHamiltonian, cap: int = DIMENSION_CAP
) -> tuple[str, float, int]:
    """Minimizing basis state of an all-Z Hamiltonian by full enumeration.

    Returns (bitstring, energy, degeneracy).  The bitstring is printed
    qubit n-1 first down to qubit 0, matching label order; among
    degenerate minimizers the lowest basis index is reported.  Degeneracy
    counts basis states within 1e-12 of the minimum.
    """
    if not is_all_z(h):
        raise ValueError("Hamiltonian is not diagonal (X or Y factors present)")
    diag = diagonal_entries(h, cap)
    best = int(np.argmin(diag))
    energy = float(diag[best])
    degeneracy = int(np.count_nonzero(diag <= energy + 1e-12))
    bits = format(best, f"0{h.n_qubits}b")
    return bits, energy, degeneracy
