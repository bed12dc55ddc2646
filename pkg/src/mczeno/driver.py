"""Pipeline orchestration: configuration, execution, persistence, scans.

A RunConfig names a Hamiltonian source and a method; run() drives the
stages (load, optional fermion-to-qubit mapping, commuting-subset
extraction, then the method itself) and returns a JSON-native result
record.  scan() repeats the pipeline over a geometry coordinate and
collects energy and error columns.  Any stage failure is re-raised as a
StageError naming the stage and the offending input.
"""

from __future__ import annotations

import json
import os
from contextlib import contextmanager
from dataclasses import dataclass, field, fields

from mczeno.clique import build_graph, greedy_max_clique, mc_hamiltonian
from mczeno.fermion import jordan_wigner, load_fcidump, parity_map
from mczeno.pauli import PauliHamiltonian, load_hamiltonian, save_hamiltonian
from mczeno.path import PathHamiltonian
from mczeno.qae import evolve
from mczeno.qzp import initial_eigenstate, zeno_statistics, distribution_csv
from mczeno.spectral import eig, path_spectrum, spectrum_csv

METHODS = ("qae", "qzp", "spectrum", "clique", "scan")
MAPPINGS = ("auto", "none", "jw", "parity")


class StageError(RuntimeError):
    """A pipeline failure carrying the stage name and the input at fault."""

    def __init__(self, stage: str, source: str, cause: Exception):
        super().__init__(f"stage '{stage}' failed for {source}: {cause}")
        self.stage = stage
        self.source = source
        self.cause = cause


@contextmanager
def _stage(name: str, source: str):
    try:
        yield
    except StageError:
        raise
    except Exception as exc:
        raise StageError(name, source, exc) from exc


@dataclass(frozen=True)
class RunConfig:
    """One pipeline invocation: source, method, and method parameters.

    Defaults make every parameter set complete; n_steps 20, 1000 trials,
    and the quadratic-driver weight alpha 0 follow the library-wide
    conventions.  The seed is always present so results are reproducible
    by construction.
    """

    source: str
    method: str
    mapping: str = "auto"
    alpha: float = 0.0
    total_time: float = 10.0
    delta_t: float = 0.5
    n_steps: int = 20
    trials: int = 1000
    k: int = 8
    n_points: int = 101
    initial_indices: tuple[int, ...] = (0,)
    seed: int = 0
    output: str | None = None

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if self.mapping not in MAPPINGS:
            raise ValueError(
                f"mapping must be one of {MAPPINGS}, got {self.mapping!r}"
            )
        object.__setattr__(self, "initial_indices", tuple(self.initial_indices))
        if not self.initial_indices or any(
            not isinstance(i, int) or i < 0 for i in self.initial_indices
        ):
            raise ValueError("initial_indices must be non-negative integers")
        if self.total_time <= 0:
            raise ValueError(f"total_time must be positive, got {self.total_time}")
        if self.delta_t <= 0:
            raise ValueError(f"delta_t must be positive, got {self.delta_t}")
        if self.n_steps < 1:
            raise ValueError(f"n_steps must be at least 1, got {self.n_steps}")
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.n_points < 2:
            raise ValueError(f"n_points must be at least 2, got {self.n_points}")
        if self.alpha < 0:
            raise ValueError(f"alpha must be non-negative, got {self.alpha}")


def config_from_dict(data: dict, **overrides) -> RunConfig:
    """Build a RunConfig from parsed config-file data plus overrides."""
    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(unknown)}")
    merged = dict(data)
    merged.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**merged)


def load_qubit_hamiltonian(
    source: str, mapping: str = "auto"
) -> tuple[PauliHamiltonian, str]:
    """Load a qubit Hamiltonian, mapping fermionic sources as needed.

    mapping "auto" treats a .fcidump suffix as a fermionic source (then
    mapped with the Jordan-Wigner transform) and anything else as a
    Pauli text or JSON file; "jw"/"parity" force an FCIDUMP parse with
    that mapping; "none" forces a Pauli file parse.  Returns the
    Hamiltonian and the mapping actually applied.
    """
    if mapping == "auto":
        is_fermionic = os.path.splitext(source)[1].lower() == ".fcidump"
        mapping = "jw" if is_fermionic else "none"
    if mapping == "none":
        return load_hamiltonian(source), "none"
    integrals = load_fcidump(source)
    if mapping == "jw":
        return jordan_wigner(integrals), "jw"
    return parity_map(integrals), "parity"


def _ground_group_size(values) -> int:
    edge = values[0] + 1e-9
    size = 1
    while size < len(values) and values[size] <= edge:
        size += 1
    return size


def _execute(config: RunConfig, h: PauliHamiltonian, mapping: str):
    """Method dispatch: returns (record, csv text or None)."""
    graph = build_graph(h)
    clique = greedy_max_clique(graph)
    mc = mc_hamiltonian(h, clique)
    record = {
        "method": config.method,
        "source": config.source,
        "mapping": mapping,
        "n_qubits": h.n_qubits,
        "seed": config.seed,
    }

    if config.method == "clique":
        record.update(
            {
                "n_terms": len(h.terms),
                "size": len(clique.vertices),
                "weight": float(clique.weight),
                "members": [term.label for term in mc.terms],
            }
        )
        return record, None

    p = PathHamiltonian(
        mc, h, alpha=config.alpha, total_time=config.total_time
    )
    record["alpha"] = config.alpha

    if config.method == "spectrum":
        spectrum = path_spectrum(p, config.n_points, config.k)
        record.update(
            {
                "k": config.k,
                "n_points": config.n_points,
                "initial_ground_hartree": float(spectrum.levels[0, 0]),
                "final_ground_hartree": float(spectrum.levels[-1, 0]),
                "min_gap_hartree": float(
                    (spectrum.levels[:, 1] - spectrum.levels[:, 0]).min()
                )
                if config.k >= 2
                else None,
            }
        )
        return record, spectrum_csv(spectrum)

    exact = eig(p.h_final).eigenvalues

    if config.method == "qae":
        result = evolve(p, config.delta_t, initial_eigenstate(p, config.initial_indices[0]))
        record.update(
            {
                "total_time": config.total_time,
                "delta_t": config.delta_t,
                "step_count": result.step_count,
                "final_energy_hartree": result.final_energy,
                "ground_fidelity": result.ground_fidelity,
                "exact_ground_hartree": float(exact[0]),
                "error_hartree": result.final_energy - float(exact[0]),
            }
        )
        return record, None

    distributions = zeno_statistics(
        p, config.n_steps, list(config.initial_indices), config.trials, config.seed
    )
    best_index = min(min(d.counts) for d in distributions)
    record.update(
        {
            "n_steps": config.n_steps,
            "trials": config.trials,
            "initial_indices": list(config.initial_indices),
            "exact_ground_hartree": float(exact[0]),
            "best_energy_hartree": float(exact[best_index]),
            "distributions": [
                {
                    "initial_index": d.initial_index,
                    "trials": d.trials,
                    "ground_frequency": d.counts.get(0, 0) / d.trials,
                    "counts": [[i, d.counts[i]] for i in sorted(d.counts)],
                }
                for d in distributions
            ],
        }
    )
    return record, distribution_csv(distributions)


def run(config: RunConfig) -> dict:
    """Execute one configured pipeline and return its result record.

    The record is JSON-native; when config.output is set it is written
    there, as CSV if the path ends in .csv (spectrum and qzp only) and
    as a JSON record otherwise.
    """
    if config.method == "scan":
        raise ValueError("scan configs are executed by scan(), not run()")
    with _stage("load", config.source):
        h, mapping = load_qubit_hamiltonian(config.source, config.mapping)
    with _stage(config.method, config.source):
        record, csv_text = _execute(config, h, mapping)
    if config.output:
        with _stage("write", config.output):
            if config.output.lower().endswith(".csv"):
                if csv_text is None:
                    raise ValueError(
                        f"method {config.method!r} has no CSV form; use .json"
                    )
                with open(config.output, "w") as handle:
                    handle.write(csv_text)
            else:
                save_result(record, config.output)
    return record


def save_result(record: dict, path: str) -> None:
    """Persist a result record as JSON."""
    with open(path, "w") as handle:
        json.dump(record, handle, indent=2, sort_keys=True)
        handle.write("\n")


def load_result(path: str) -> dict:
    """Re-load a persisted result record."""
    with open(path) as handle:
        return json.load(handle)


@dataclass(frozen=True)
class ScanRow:
    """One geometry point: method energies and deviations from exact."""

    coordinate: float
    status: str
    energies: dict[str, float] = field(default_factory=dict)
    errors: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class ScanResult:
    """Energy-versus-coordinate table for a fixed method selection."""

    methods: tuple[str, ...]
    rows: tuple[ScanRow, ...]


def scan(
    points: list[tuple[float, RunConfig]],
    methods: tuple[str, ...] = ("exact", "qzp"),
) -> ScanResult:
    """Run the pipeline per geometry point and tabulate energies.

    Coordinates must be strictly increasing.  The exact column is the
    reference; qae reports the evolved final energy and qzp the lowest
    eigenvalue reached over its trials.  A point whose file is missing
    (or whose pipeline fails) is flagged in its row and the scan
    continues.
    """
    allowed = {"exact", "qae", "qzp"}
    if not methods or any(m not in allowed for m in methods):
        raise ValueError(f"methods must be a non-empty subset of {sorted(allowed)}")
    if "exact" not in methods:
        raise ValueError("methods must include 'exact' to define error columns")
    coordinates = [c for c, _ in points]
    if any(b <= a for a, b in zip(coordinates, coordinates[1:])):
        raise ValueError("scan coordinates must be strictly increasing")

    rows = []
    for coordinate, config in points:
        if not os.path.exists(config.source):
            rows.append(ScanRow(coordinate, "missing"))
            continue
        try:
            row = _scan_point(coordinate, config, methods)
        except StageError as error:
            rows.append(ScanRow(coordinate, f"failed: {error.stage}"))
            continue
        rows.append(row)
    return ScanResult(tuple(methods), tuple(rows))


def _scan_point(
    coordinate: float, config: RunConfig, methods: tuple[str, ...]
) -> ScanRow:
    with _stage("load", config.source):
        h, mapping = load_qubit_hamiltonian(config.source, config.mapping)
    with _stage("clique", config.source):
        mc = mc_hamiltonian(h, greedy_max_clique(build_graph(h)))
        p = PathHamiltonian(mc, h, alpha=config.alpha, total_time=config.total_time)

    with _stage("exact", config.source):
        exact = eig(h).eigenvalues
    energies = {"exact": float(exact[0])}
    errors = {}
    if "qae" in methods:
        with _stage("qae", config.source):
            result = evolve(
                p, config.delta_t, initial_eigenstate(p, config.initial_indices[0])
            )
        energies["qae"] = result.final_energy
    if "qzp" in methods:
        with _stage("qzp", config.source):
            distributions = zeno_statistics(
                p,
                config.n_steps,
                list(config.initial_indices),
                config.trials,
                config.seed,
            )
        best_index = min(min(d.counts) for d in distributions)
        energies["qzp"] = float(exact[best_index])
    for name, value in energies.items():
        if name != "exact":
            errors[name] = value - energies["exact"]
    return ScanRow(coordinate, "ok", energies, errors)


def scan_csv(result: ScanResult) -> str:
    """CSV rendering: coordinate, per-method Hartree columns, status."""
    header = ["coordinate"]
    header += [f"{m}_hartree" for m in result.methods]
    header += [f"{m}_error_hartree" for m in result.methods if m != "exact"]
    header.append("status")
    lines = [",".join(header)]
    for row in result.rows:
        cells = [repr(float(row.coordinate))]
        for m in result.methods:
            cells.append(repr(row.energies[m]) if m in row.energies else "")
        for m in result.methods:
            if m != "exact":
                cells.append(repr(row.errors[m]) if m in row.errors else "")
        cells.append(row.status)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def convert_hamiltonian(source: str, mapping: str, output: str) -> PauliHamiltonian:
    """Map a fermionic integral file to a qubit Hamiltonian file."""
    with _stage("load", source):
        h, _ = load_qubit_hamiltonian(source, mapping)
    with _stage("write", output):
        save_hamiltonian(h, output)
    return h
