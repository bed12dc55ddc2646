"""Weighted Pauli products in symplectic mask form, with matrix realizations.

A Pauli product on n qubits is encoded by two n-bit integers: bit q of
``x_mask`` is set when qubit q carries X or Y, bit q of ``z_mask`` when it
carries Z or Y.  Qubit 0 is the rightmost character of a label string, so
the label "ZI" places Z on qubit 1.  Coefficients are real; the i**n_Y
phase of Y = iXZ lives in the matrix builder, which keeps every Hermitian
sum of products a sum with real weights.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse

DIMENSION_CAP = 14
"""Largest qubit count for which dense 2**n work is permitted by default."""

_CHAR_TO_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_TO_CHAR = {bits: char for char, bits in _CHAR_TO_BITS.items()}


@dataclass(frozen=True, slots=True)
class PauliTerm:
    """One weighted n-qubit Pauli product.

    Parameters
    ----------
    n_qubits : int
        Number of qubits; masks use only the low ``n_qubits`` bits.
    x_mask, z_mask : int
        Symplectic bit masks.  The identity term has both masks zero.
    coefficient : float
        Real weight, in Hartree when the term is chemical.
    """

    n_qubits: int
    x_mask: int
    z_mask: int
    coefficient: float

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits must be positive, got {self.n_qubits}")
        full = (1 << self.n_qubits) - 1
        if self.x_mask & ~full or self.z_mask & ~full:
            raise ValueError(
                f"mask uses bits beyond the low {self.n_qubits}"
            )
        if self.x_mask < 0 or self.z_mask < 0:
            raise ValueError("masks must be non-negative")
        if not math.isfinite(self.coefficient):
            raise ValueError(f"coefficient must be finite, got {self.coefficient}")

    @property
    def label(self) -> str:
        """Label string, qubit n-1 leftmost down to qubit 0 rightmost."""
        chars = []
        for q in range(self.n_qubits - 1, -1, -1):
            bits = ((self.x_mask >> q) & 1, (self.z_mask >> q) & 1)
            chars.append(_BITS_TO_CHAR[bits])
        return "".join(chars)

    @property
    def key(self) -> tuple[int, int]:
        """The (z_mask, x_mask) canonical sort key."""
        return (self.z_mask, self.x_mask)

    def scaled(self, factor: float) -> "PauliTerm":
        return PauliTerm(self.n_qubits, self.x_mask, self.z_mask,
                         self.coefficient * factor)


class PauliHamiltonian:
    """Weighted sum of Pauli products on a fixed qubit register.

    Terms are canonicalized on construction: duplicates (same mask pair)
    are merged by coefficient addition, exact-zero coefficients dropped,
    and the survivors sorted by (z_mask, x_mask).  Instances are treated
    as immutable.
    """

    __slots__ = ("n_qubits", "terms")

    def __init__(self, n_qubits: int, terms: Iterable[PauliTerm]):
        if n_qubits < 1:
            raise ValueError(f"n_qubits must be positive, got {n_qubits}")
        merged: dict[tuple[int, int], float] = {}
        for term in terms:
            if term.n_qubits != n_qubits:
                raise ValueError(
                    f"term on {term.n_qubits} qubits in a {n_qubits}-qubit sum"
                )
            key = (term.x_mask, term.z_mask)
            merged[key] = merged.get(key, 0.0) + term.coefficient
        canonical = [
            PauliTerm(n_qubits, x, z, c)
            for (x, z), c in merged.items()
            if c != 0.0
        ]
        canonical.sort(key=lambda t: t.key)
        object.__setattr__(self, "n_qubits", n_qubits)
        object.__setattr__(self, "terms", tuple(canonical))

    def __setattr__(self, name, value):
        raise AttributeError("PauliHamiltonian is immutable")

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliHamiltonian):
            return NotImplemented
        return self.n_qubits == other.n_qubits and self.terms == other.terms

    def __hash__(self):
        return hash((self.n_qubits, self.terms))

    def __repr__(self) -> str:
        body = " + ".join(f"{t.coefficient:g}*{t.label}" for t in self.terms)
        return f"PauliHamiltonian({self.n_qubits}, {body or '0'})"

    def coefficient_of(self, label: str) -> float:
        """Coefficient of the term with the given label, 0.0 if absent."""
        x, z = _label_to_masks(label)
        for t in self.terms:
            if t.x_mask == x and t.z_mask == z:
                return t.coefficient
        return 0.0


def commutes(a: PauliTerm, b: PauliTerm) -> bool:
    """True when the two Pauli products commute as operators.

    Two products commute exactly when the symplectic form vanishes,
    i.e. parity(a.x & b.z) == parity(a.z & b.x).
    """
    if a.n_qubits != b.n_qubits:
        raise ValueError(
            f"dimension mismatch: {a.n_qubits} vs {b.n_qubits} qubits"
        )
    left = (a.x_mask & b.z_mask).bit_count() & 1
    right = (a.z_mask & b.x_mask).bit_count() & 1
    return left == right


def _check_cap(n_qubits: int, cap: int) -> None:
    if n_qubits > cap:
        raise ValueError(
            f"{n_qubits} qubits exceeds the dimension cap of {cap}"
        )


def term_matrix(t: PauliTerm, cap: int = DIMENSION_CAP) -> scipy.sparse.csr_matrix:
    """Sparse matrix of a weighted Pauli product, one nonzero per row.

    Row j holds the amplitude produced by acting on basis state ``|j>``:
    P|j> = coeff * i**n_Y * (-1)**popcount(z & j) |j ^ x>, with the Y
    phase i**n_Y folded in so real coefficients give a Hermitian matrix.
    """
    _check_cap(t.n_qubits, cap)
    dim = 1 << t.n_qubits
    cols = np.arange(dim, dtype=np.int64)
    rows = cols ^ t.x_mask
    signs = 1.0 - 2.0 * (np.bitwise_count(cols & t.z_mask) & 1)
    n_y = (t.x_mask & t.z_mask).bit_count()
    phase = 1j ** n_y
    data = (t.coefficient * phase) * signs
    if n_y % 2 == 0:
        data = data.real
    return scipy.sparse.csr_matrix((data, (rows, cols)), shape=(dim, dim))


def ham_matrix(h: PauliHamiltonian, cap: int = DIMENSION_CAP) -> scipy.sparse.csr_matrix:
    """Sparse Hermitian matrix of a Pauli sum."""
    _check_cap(h.n_qubits, cap)
    dim = 1 << h.n_qubits
    if not h.terms:
        return scipy.sparse.csr_matrix((dim, dim))
    total = term_matrix(h.terms[0], cap)
    for t in h.terms[1:]:
        total = total + term_matrix(t, cap)
    return total.tocsr()


def is_all_z(h: PauliHamiltonian) -> bool:
    """True when every term is a product of Z and identity factors only."""
    return all(t.x_mask == 0 for t in h.terms)


def diagonal_entries(h: PauliHamiltonian, cap: int = DIMENSION_CAP) -> np.ndarray:
    """Diagonal of an all-Z Hamiltonian over all 2**n basis states."""
    if not is_all_z(h):
        raise ValueError("Hamiltonian has X or Y factors, diagonal undefined")
    _check_cap(h.n_qubits, cap)
    idx = np.arange(1 << h.n_qubits, dtype=np.int64)
    diag = np.zeros(idx.shape, dtype=float)
    for t in h.terms:
        diag += t.coefficient * (1.0 - 2.0 * (np.bitwise_count(idx & t.z_mask) & 1))
    return diag


def _label_to_masks(label: str) -> tuple[int, int]:
    x = z = 0
    for q, char in enumerate(reversed(label)):
        try:
            xb, zb = _CHAR_TO_BITS[char]
        except KeyError:
            raise ValueError(f"illegal Pauli character {char!r} in {label!r}") from None
        x |= xb << q
        z |= zb << q
    return x, z


def parse_pauli(text: str) -> PauliTerm:
    """Parse one ``<coefficient> <label>`` line into a PauliTerm.

    The minus sign may be ASCII or U+2212.  Raises ValueError on an
    unparseable coefficient or a label character outside {I, X, Y, Z}.
    """
    fields = text.replace("−", "-").split()
    if len(fields) != 2:
        raise ValueError(f"expected '<coefficient> <label>', got {text!r}")
    raw_coeff, label = fields
    try:
        coeff = float(raw_coeff)
    except ValueError:
        raise ValueError(f"coefficient not parseable: {raw_coeff!r}") from None
    if not math.isfinite(coeff):
        raise ValueError(f"coefficient must be finite, got {raw_coeff!r}")
    if not label:
        raise ValueError("empty Pauli label")
    x, z = _label_to_masks(label)
    return PauliTerm(len(label), x, z, coeff)


def serialize_pauli(t: PauliTerm) -> str:
    """Inverse of parse_pauli on canonical form."""
    return f"{t.coefficient!r} {t.label}"


def parse_hamiltonian(text: str) -> PauliHamiltonian:
    """Parse the text format: one term per line, ``#`` comments allowed."""
    terms = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        terms.append(parse_pauli(body))
    if not terms:
        raise ValueError("no Pauli terms found")
    widths = {t.n_qubits for t in terms}
    if len(widths) != 1:
        raise ValueError(f"inconsistent label widths: {sorted(widths)}")
    return PauliHamiltonian(widths.pop(), terms)


def format_hamiltonian(h: PauliHamiltonian, header: str | None = None) -> str:
    """Render the text format; float repr keeps the round trip exact."""
    lines = []
    if header:
        lines.extend(f"# {row}" for row in header.splitlines())
    lines.extend(serialize_pauli(t) for t in h.terms)
    return "\n".join(lines) + "\n"


def hamiltonian_to_dict(h: PauliHamiltonian) -> dict:
    return {
        "n_qubits": h.n_qubits,
        "terms": [{"coeff": t.coefficient, "label": t.label} for t in h.terms],
    }


def hamiltonian_from_dict(doc: dict) -> PauliHamiltonian:
    try:
        n = int(doc["n_qubits"])
        raw = doc["terms"]
    except KeyError as missing:
        raise ValueError(f"missing field {missing} in Hamiltonian document") from None
    terms = []
    for entry in raw:
        x, z = _label_to_masks(entry["label"])
        terms.append(PauliTerm(n, x, z, float(entry["coeff"])))
    return PauliHamiltonian(n, terms)


def load_hamiltonian(path) -> PauliHamiltonian:
    """Load a Hamiltonian from a ``.json`` document or the text format."""
    with open(path) as handle:
        raw = handle.read()
    if str(path).endswith(".json"):
        return hamiltonian_from_dict(json.loads(raw))
    return parse_hamiltonian(raw)


def save_hamiltonian(h: PauliHamiltonian, path, header: str | None = None) -> None:
    with open(path, "w") as handle:
        if str(path).endswith(".json"):
            json.dump(hamiltonian_to_dict(h), handle, indent=1)
            handle.write("\n")
        else:
            handle.write(format_hamiltonian(h, header))


def combine(parts: Sequence[tuple[float, PauliHamiltonian]]) -> PauliHamiltonian:
    """Weighted sum of Hamiltonians, canonicalized.

    Zero-weight parts contribute exactly-zero coefficients, which the
    canonical form drops, so endpoint sums stay term-for-term exact.
    """
    if not parts:
        raise ValueError("nothing to combine")
    n = parts[0][1].n_qubits
    terms: list[PauliTerm] = []
    for weight, h in parts:
        if h.n_qubits != n:
            raise ValueError("qubit counts differ across combined Hamiltonians")
        terms.extend(t.scaled(weight) for t in h.terms)
    return PauliHamiltonian(n, terms)
