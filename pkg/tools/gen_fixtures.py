"""Regenerate the bundled hydrogen-chain fixtures under src/mczeno/data/.

This sidecar exists so the repository stays self-contained: the package
itself never computes molecular integrals, it only ingests FCIDUMP
files.  For hydrogen chains in the STO-3G basis every required integral
has a closed form over s-type Gaussians (overlap, kinetic, nuclear
attraction, two-electron repulsion with the Boys F0 function), so the
fixtures can be rebuilt here without a quantum-chemistry package.

Orbitals: for H2 the symmetry-adapted bonding/antibonding pair (which
reproduces the textbook integral values at d = 0.7414 A); for longer
chains Lowdin-orthogonalized atomic orbitals.  Full CI in a given basis
is invariant under either choice.

Run from the repository root:

    python tools/gen_fixtures.py

The script rewrites the FCIDUMP fixtures and the derived Pauli-text
Hamiltonians, then prints a short validation table (the H2 values are
checked against the published STO-3G integrals).
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

import numpy as np
from scipy.special import erf

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mczeno.fermion import FermionIntegrals, jordan_wigner, parity_map
from mczeno.pauli import save_hamiltonian

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "mczeno" / "data"
BOHR_PER_ANGSTROM = 1.0 / 0.529177210903

# STO-3G hydrogen 1s: exponents and contraction coefficients over
# normalized primitives.
ALPHA = np.array([3.42525091, 0.62391373, 0.16885540])
COEF = np.array([0.15432897, 0.53532814, 0.44463454])


def boys_f0(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    out = np.ones_like(t)
    big = t > 1e-12
    out[big] = 0.5 * np.sqrt(np.pi / t[big]) * erf(np.sqrt(t[big]))
    return out


def _norm(alpha: float) -> float:
    return (2.0 * alpha / np.pi) ** 0.75


def _pair(a, b, ra, rb):
    p = a + b
    mu = a * b / p
    ab2 = float(np.dot(ra - rb, ra - rb))
    k = np.exp(-mu * ab2)
    center = (a * ra + b * rb) / p
    return p, mu, ab2, k, center


def _overlap(a, b, ra, rb):
    p, _, _, k, _ = _pair(a, b, ra, rb)
    return (np.pi / p) ** 1.5 * k


def _kinetic(a, b, ra, rb):
    p, mu, ab2, k, _ = _pair(a, b, ra, rb)
    return mu * (3.0 - 2.0 * mu * ab2) * (np.pi / p) ** 1.5 * k


def _nuclear(a, b, ra, rb, rc):
    p, _, _, k, center = _pair(a, b, ra, rb)
    pc2 = float(np.dot(center - rc, center - rc))
    return -2.0 * np.pi / p * k * boys_f0(np.array([p * pc2]))[0]


def _eri(a, b, c, d, ra, rb, rc, rd):
    p, _, _, kab, cp = _pair(a, b, ra, rb)
    q, _, _, kcd, cq = _pair(c, d, rc, rd)
    pq2 = float(np.dot(cp - cq, cp - cq))
    pref = 2.0 * np.pi ** 2.5 / (p * q * np.sqrt(p + q))
    return pref * kab * kcd * boys_f0(np.array([p * q / (p + q) * pq2]))[0]


def ao_integrals(centers: np.ndarray):
    """Contracted AO integrals for one STO-3G s function per center."""
    m = len(centers)
    weights = [(a, c * _norm(a)) for a, c in zip(ALPHA, COEF)]

    s = np.zeros((m, m))
    t = np.zeros((m, m))
    v = np.zeros((m, m))
    for i in range(m):
        for j in range(m):
            for (a, wa), (b, wb) in itertools.product(weights, weights):
                w = wa * wb
                s[i, j] += w * _overlap(a, b, centers[i], centers[j])
                t[i, j] += w * _kinetic(a, b, centers[i], centers[j])
                for rc in centers:
                    v[i, j] += w * _nuclear(a, b, centers[i], centers[j], rc)
    g = np.zeros((m, m, m, m))
    for i in range(m):
        for j in range(m):
            for k in range(m):
                for l in range(m):
                    total = 0.0
                    for (a, wa), (b, wb), (c, wc), (d, wd) in itertools.product(
                        weights, weights, weights, weights
                    ):
                        total += (
                            wa * wb * wc * wd
                            * _eri(a, b, c, d,
                                   centers[i], centers[j], centers[k], centers[l])
                        )
                    g[i, j, k, l] = total
    return s, t + v, g


def nuclear_repulsion(centers: np.ndarray) -> float:
    total = 0.0
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            total += 1.0 / np.linalg.norm(centers[i] - centers[j])
    return total


def orthogonal_mos(s: np.ndarray, symmetry_pair: bool) -> np.ndarray:
    if symmetry_pair:
        s12 = s[0, 1]
        cg = 1.0 / np.sqrt(2.0 * (1.0 + s12))
        cu = 1.0 / np.sqrt(2.0 * (1.0 - s12))
        return np.array([[cg, cu], [cg, -cu]])
    values, vectors = np.linalg.eigh(s)
    return vectors @ np.diag(values ** -0.5) @ vectors.T


def chain_integrals(spacings_angstrom: list[float]):
    """Integrals for collinear H atoms with the given gaps, in MO basis."""
    z = np.concatenate([[0.0], np.cumsum(spacings_angstrom)]) * BOHR_PER_ANGSTROM
    centers = np.stack([np.zeros_like(z), np.zeros_like(z), z], axis=1)
    s, hcore, g = ao_integrals(centers)
    c = orthogonal_mos(s, symmetry_pair=len(centers) == 2)
    h_mo = c.T @ hcore @ c
    g_mo = np.einsum("ip,jq,kr,ls,ijkl->pqrs", c, c, c, c, g, optimize=True)
    return h_mo, g_mo, nuclear_repulsion(centers)


def write_fcidump(path: Path, h: np.ndarray, g: np.ndarray, core: float,
                  nelec: int, ms2: int) -> None:
    m = h.shape[0]
    lines = [
        f"&FCI NORB={m:3d},NELEC={nelec:3d},MS2={ms2:2d},",
        " ORBSYM=" + ",".join(["1"] * m) + ",",
        " ISYM=1,",
        "&END",
    ]

    def record(value: float, i: int, j: int, k: int, l: int) -> str:
        return f" {value: .16e} {i:3d} {j:3d} {k:3d} {l:3d}"

    seen = set()
    for i in range(m):
        for j in range(i + 1):
            for k in range(m):
                for l in range(k + 1):
                    if (i, j) < (k, l) or (i, j, k, l) in seen:
                        continue
                    variants = {
                        (i, j, k, l), (j, i, k, l), (i, j, l, k), (j, i, l, k),
                        (k, l, i, j), (l, k, i, j), (k, l, j, i), (l, k, j, i),
                    }
                    seen.update(variants)
                    value = g[i, j, k, l]
                    if abs(value) > 1e-12:
                        lines.append(record(value, i + 1, j + 1, k + 1, l + 1))
    for i in range(m):
        for j in range(i + 1):
            if abs(h[i, j]) > 1e-12:
                lines.append(record(h[i, j], i + 1, j + 1, 0, 0))
    lines.append(record(core, 0, 0, 0, 0))
    path.write_text("\n".join(lines) + "\n")


H2_BONDS = [0.7414, 1.20, 2.80]
H5_SPACING = 1.00

PUBLISHED_H2 = {
    "h11": -1.252477,
    "h22": -0.475934,
    "(11|11)": 0.674493,
    "(11|22)": 0.663472,
    "(12|12)": 0.181287,
    "(22|22)": 0.697397,
    "e_nuc": 0.713754,
}


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    for bond in H2_BONDS:
        h, g, e_nuc = chain_integrals([bond])
        tag = f"{bond:.4f}".rstrip("0").rstrip(".")
        fcidump = DATA_DIR / f"h2_sto3g_{tag}.fcidump"
        write_fcidump(fcidump, h, g, e_nuc, nelec=2, ms2=0)
        integrals = FermionIntegrals.from_spatial(h, g, e_nuc)
        save_hamiltonian(
            jordan_wigner(integrals),
            DATA_DIR / f"h2_{tag}_jw.txt",
            header=f"H2 chain, d = {bond} A, STO-3G, Jordan-Wigner, blocked spins",
        )
        if bond == 0.7414:
            save_hamiltonian(
                parity_map(integrals),
                DATA_DIR / f"h2_{tag}_parity.txt",
                header=f"H2 chain, d = {bond} A, STO-3G, parity mapping, blocked spins",
            )
        print(f"h2 d={bond}: e_nuc={e_nuc:.6f}, h11={h[0, 0]:.6f}, h22={h[1, 1]:.6f}")
        if bond == 0.7414:
            got = {
                "h11": h[0, 0], "h22": h[1, 1],
                "(11|11)": g[0, 0, 0, 0], "(11|22)": g[0, 0, 1, 1],
                "(12|12)": g[0, 1, 0, 1], "(22|22)": g[1, 1, 1, 1],
                "e_nuc": e_nuc,
            }
            for key, published in PUBLISHED_H2.items():
                delta = abs(got[key] - published)
                status = "ok" if delta < 5e-5 else "MISMATCH"
                print(f"  {key}: {got[key]: .6f} vs published {published: .6f} [{status}]")

    h, g, e_nuc = chain_integrals([H5_SPACING] * 4)
    write_fcidump(DATA_DIR / "h5_chain_sto3g_1.00.fcidump", h, g, e_nuc,
                  nelec=5, ms2=1)
    print(f"h5 chain: e_nuc={e_nuc:.6f}, orbitals={h.shape[0]}")


if __name__ == "__main__":
    main()
