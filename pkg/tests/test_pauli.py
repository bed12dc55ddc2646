"""Pauli term algebra, matrix realizations, and the text/JSON formats."""

import itertools
import json

import numpy as np
import pytest

from mczeno.pauli import (
    PauliHamiltonian,
    PauliTerm,
    combine,
    commutes,
    diagonal_entries,
    format_hamiltonian,
    ham_matrix,
    hamiltonian_from_dict,
    hamiltonian_to_dict,
    is_all_z,
    load_hamiltonian,
    parse_hamiltonian,
    parse_pauli,
    save_hamiltonian,
    serialize_pauli,
    term_matrix,
)
from oracles import kron_hamiltonian, kron_term


def term(label, coeff=1.0):
    return parse_pauli(f"{coeff} {label}")


class TestCommutes:
    def test_identity_commutes_with_everything(self):
        for label in ["IX", "XY", "ZZ", "YI"]:
            assert commutes(term("II"), term(label))

    def test_ix_iz_anticommute(self):
        assert not commutes(term("IX"), term("IZ"))

    def test_xy_yx_commute(self):
        """Verified by explicit 4x4 commutator."""
        assert commutes(term("XY"), term("YX"))

    def test_symmetry_and_matrix_agreement_exhaustive(self):
        """Mask predicate matches the matrix commutator on all 2-qubit pairs."""
        labels = ["".join(p) for p in itertools.product("IXYZ", repeat=2)]
        for la, lb in itertools.combinations_with_replacement(labels, 2):
            a, b = term(la), term(lb)
            assert commutes(a, b) == commutes(b, a)
            ma, mb = kron_term(la), kron_term(lb)
            matrix_commutes = np.linalg.norm(ma @ mb - mb @ ma) < 1e-10
            assert commutes(a, b) == matrix_commutes, (la, lb)

    def test_three_qubit_spot_checks(self):
        for la, lb in [("XYZ", "ZZX"), ("XII", "IYZ"), ("YYY", "XZX")]:
            ma, mb = kron_term(la), kron_term(lb)
            matrix_commutes = np.linalg.norm(ma @ mb - mb @ ma) < 1e-10
            assert commutes(term(la), term(lb)) == matrix_commutes

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            commutes(term("X"), term("XX"))


class TestTermMatrix:
    def test_single_z(self):
        m = term_matrix(term("Z")).toarray()
        assert np.array_equal(m, np.diag([1.0, -1.0]))

    def test_single_x(self):
        m = term_matrix(term("X")).toarray()
        assert np.array_equal(m, np.array([[0.0, 1.0], [1.0, 0.0]]))

    def test_weighted_zz(self):
        m = term_matrix(term("ZZ", 2.0)).toarray()
        assert np.array_equal(m, np.diag([2.0, -2.0, -2.0, 2.0]))

    @pytest.mark.parametrize("label", ["Y", "XY", "YZ", "XYZ", "YY"])
    def test_matches_kronecker_oracle(self, label):
        ours = term_matrix(term(label, 1.5)).toarray()
        ref = kron_term(label, 1.5)
        assert np.allclose(ours, ref, atol=1e-14)

    def test_one_nonzero_per_row(self):
        m = term_matrix(term("XYZ", 0.7)).tocsr()
        counts = np.diff(m.indptr)
        assert np.all(counts == 1)

    def test_hermitian(self):
        for label in ["Y", "XY", "YYY"]:
            m = term_matrix(term(label, -0.3)).toarray()
            assert np.allclose(m, m.conj().T, atol=1e-14)

    def test_cap_enforced(self):
        wide = PauliTerm(15, 0, 1, 1.0)
        with pytest.raises(ValueError, match="dimension cap"):
            term_matrix(wide)


class TestHamMatrix:
    def test_demo_hamiltonian_spectrum(self, toy_hamiltonian):
        """Dense diagonalization of 2 II + 3 IX - 4 IZ + 5 ZI.

        Reference spectrum from the Kronecker oracle: {-8, 2, 2, 12}
        (trace 8, squared trace 216 = 4 * (4 + 9 + 16 + 25)).
        """
        m = ham_matrix(toy_hamiltonian).toarray()
        eigs = np.linalg.eigvalsh(m)
        assert np.allclose(eigs, [-8.0, 2.0, 2.0, 12.0], atol=1e-12)

    def test_empty_sum_is_zero_matrix(self):
        h = PauliHamiltonian(2, [])
        assert ham_matrix(h).nnz == 0

    def test_identity_term(self):
        h = PauliHamiltonian(1, [term("I")])
        assert np.array_equal(ham_matrix(h).toarray(), np.eye(2))

    def test_linearity(self):
        h1 = parse_hamiltonian("1.5 XY\n-2.0 ZZ")
        h2 = parse_hamiltonian("0.5 XY\n3.0 IX")
        total = combine([(1.0, h1), (1.0, h2)])
        m = ham_matrix(total).toarray()
        assert np.allclose(m, ham_matrix(h1).toarray() + ham_matrix(h2).toarray(),
                           atol=1e-12)

    def test_matches_oracle_random_sums(self):
        rng = np.random.default_rng(7)
        labels = ["".join(p) for p in itertools.product("IXYZ", repeat=3)]
        for _ in range(10):
            chosen = rng.choice(len(labels), size=6, replace=False)
            pairs = [(float(rng.normal()), labels[i]) for i in chosen]
            h = PauliHamiltonian(3, [term(l, c) for c, l in pairs])
            assert np.allclose(ham_matrix(h).toarray(), kron_hamiltonian(pairs),
                               atol=1e-12)

    def test_all_z_gives_diagonal(self):
        h = parse_hamiltonian("1.0 ZZ\n0.5 IZ\n-0.25 ZI")
        m = ham_matrix(h).toarray()
        assert np.count_nonzero(m - np.diag(np.diag(m))) == 0
        assert np.allclose(np.diag(m), diagonal_entries(h))


class TestIsAllZ:
    def test_clique_members(self):
        h = parse_hamiltonian("2.0 II\n-4.0 IZ\n5.0 ZI")
        assert is_all_z(h)

    def test_x_term_detected(self):
        assert not is_all_z(parse_hamiltonian("3.0 IX"))

    def test_empty_is_vacuously_true(self):
        assert is_all_z(PauliHamiltonian(2, []))


class TestParseSerialize:
    def test_fig_term(self):
        t = parse_pauli("5.0 ZI")
        assert (t.n_qubits, t.x_mask, t.z_mask, t.coefficient) == (2, 0, 2, 5.0)

    def test_identity(self):
        t = parse_pauli("1.0 II")
        assert t.x_mask == 0 and t.z_mask == 0

    def test_xy_masks(self):
        t = parse_pauli("2.5 XY")
        assert t.x_mask == 0b11 and t.z_mask == 0b01

    def test_unicode_minus(self):
        assert parse_pauli("−4.0 IZ").coefficient == -4.0

    def test_round_trip(self):
        for line in ["5.0 ZI", "-0.123456789012345 XYZI", "2.5 XY"]:
            t = parse_pauli(line)
            again = parse_pauli(serialize_pauli(t))
            assert again == t

    def test_illegal_character(self):
        with pytest.raises(ValueError, match="illegal Pauli character"):
            parse_pauli("1.0 AZ")

    def test_bad_coefficient(self):
        with pytest.raises(ValueError, match="not parseable"):
            parse_pauli("abc IZ")

    def test_label_convention_qubit0_rightmost(self):
        t = parse_pauli("1.0 ZI")
        assert t.z_mask == 0b10
        assert t.label == "ZI"


class TestCanonicalization:
    def test_duplicates_merge(self):
        h = PauliHamiltonian(2, [term("IZ", 1.0), term("IZ", 2.5)])
        assert len(h) == 1
        assert h.terms[0].coefficient == 3.5

    def test_zero_terms_dropped(self):
        h = PauliHamiltonian(2, [term("IZ", 1.0), term("IZ", -1.0), term("XI", 0.5)])
        assert [t.label for t in h.terms] == ["XI"]

    def test_sort_order_deterministic(self):
        a = parse_hamiltonian("1.0 XY\n2.0 ZI\n3.0 IX")
        b = parse_hamiltonian("3.0 IX\n1.0 XY\n2.0 ZI")
        assert a == b
        assert [t.key for t in a.terms] == sorted(t.key for t in a.terms)

    def test_mixed_widths_rejected(self):
        with pytest.raises(ValueError, match="inconsistent label widths"):
            parse_hamiltonian("1.0 XX\n2.0 X")


class TestFileFormats:
    def test_text_round_trip(self, toy_hamiltonian, tmp_path):
        path = tmp_path / "ham.txt"
        save_hamiltonian(toy_hamiltonian, path, header="demo")
        again = load_hamiltonian(path)
        assert again == toy_hamiltonian

    def test_json_round_trip(self, toy_hamiltonian, tmp_path):
        path = tmp_path / "ham.json"
        save_hamiltonian(toy_hamiltonian, path)
        again = load_hamiltonian(path)
        assert again == toy_hamiltonian
        doc = json.loads(path.read_text())
        assert doc["n_qubits"] == 2
        assert {e["label"] for e in doc["terms"]} == {"II", "IX", "IZ", "ZI"}

    def test_comments_and_blank_lines_ignored(self):
        h = parse_hamiltonian("# header\n\n2.0 II # trailing note\n\n5.0 ZI\n")
        assert [t.label for t in h.terms] == ["II", "ZI"]

    def test_dict_round_trip(self, toy_hamiltonian):
        doc = hamiltonian_to_dict(toy_hamiltonian)
        assert hamiltonian_from_dict(doc) == toy_hamiltonian
