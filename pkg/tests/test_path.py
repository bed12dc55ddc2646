"""Path Hamiltonian construction, endpoints, and discretization."""

import numpy as np
import pytest

from mczeno.pauli import parse_hamiltonian
from mczeno.path import PathHamiltonian, discretize, h_at, x_driver
from mczeno.spectral import dense_matrix


@pytest.fixture()
def demo_path(toy_hamiltonian):
    h_i = parse_hamiltonian("2.0 II\n-4.0 IZ\n5.0 ZI")
    return PathHamiltonian(h_i, toy_hamiltonian, alpha=0.5, total_time=10.0)


class TestXDriver:
    def test_three_qubits(self):
        h = x_driver(3)
        assert {t.label for t in h.terms} == {"IIX", "IXI", "XII"}
        assert all(t.coefficient == 1.0 for t in h.terms)


class TestHAt:
    def test_endpoint_identity_initial(self, demo_path):
        assert h_at(demo_path, 0.0) == demo_path.h_initial

    def test_endpoint_identity_final(self, demo_path):
        assert h_at(demo_path, 1.0) == demo_path.h_final

    @pytest.mark.parametrize("alpha", [0.0, 0.1, 0.5, 1.0])
    def test_endpoints_exact_for_every_alpha(self, toy_hamiltonian, alpha):
        h_i = parse_hamiltonian("2.0 II\n-4.0 IZ\n5.0 ZI")
        p = PathHamiltonian(h_i, toy_hamiltonian, alpha=alpha)
        assert h_at(p, 0.0) == h_i
        assert h_at(p, 1.0) == toy_hamiltonian

    def test_mc_terms_keep_full_coefficient(self, toy_hamiltonian):
        """With H_i inside H_p, shared terms carry h_i, the rest s * h_i."""
        h_i = parse_hamiltonian("2.0 II\n-4.0 IZ\n5.0 ZI")
        p = PathHamiltonian(h_i, toy_hamiltonian, alpha=0.0)
        s = 0.25
        h = h_at(p, s)
        assert h.coefficient_of("II") == pytest.approx(2.0)
        assert h.coefficient_of("IZ") == pytest.approx(-4.0)
        assert h.coefficient_of("ZI") == pytest.approx(5.0)
        assert h.coefficient_of("IX") == pytest.approx(3.0 * s)

    def test_affine_in_components(self, demo_path):
        s = 0.3
        m = dense_matrix(h_at(demo_path, s))
        m_i = dense_matrix(demo_path.h_initial)
        m_p = dense_matrix(demo_path.h_final)
        m_x = dense_matrix(x_driver(2))
        expected = (1 - s) * m_i + s * m_p + demo_path.alpha * s * (1 - s) * m_x
        assert np.allclose(m, expected, atol=1e-12)

    def test_envelope_peaks_at_half(self, demo_path):
        # X-driver weight alpha*s*(1-s) rides on top of the 3*s IX term of H_p
        coeff = [
            h_at(demo_path, s).coefficient_of("IX") - 3.0 * s
            for s in (0.25, 0.5, 0.75)
        ]
        assert coeff[1] == pytest.approx(demo_path.alpha * 0.25)
        assert coeff[0] == pytest.approx(demo_path.alpha * 0.1875)
        assert coeff[2] == pytest.approx(demo_path.alpha * 0.1875)

    def test_s_out_of_range(self, demo_path):
        with pytest.raises(ValueError, match="s must lie"):
            h_at(demo_path, 1.5)
        with pytest.raises(ValueError, match="s must lie"):
            h_at(demo_path, -0.1)

    def test_mismatched_registers_rejected(self, toy_hamiltonian):
        with pytest.raises(ValueError, match="qubit count"):
            PathHamiltonian(parse_hamiltonian("1.0 Z"), toy_hamiltonian)


class TestDiscretize:
    def test_n1_is_endpoints(self, demo_path):
        hams = discretize(demo_path, 1)
        assert hams == [demo_path.h_initial, demo_path.h_final]

    def test_n20_has_21_entries(self, demo_path):
        assert len(discretize(demo_path, 20)) == 21

    def test_midpoint_consistency(self, demo_path):
        hams = discretize(demo_path, 2)
        assert hams[1] == h_at(demo_path, 0.5)

    def test_invalid_n(self, demo_path):
        with pytest.raises(ValueError, match="n_steps"):
            discretize(demo_path, 0)
