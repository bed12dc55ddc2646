"""Command-line interface behavior."""

import json

import pytest

from mczeno.cli import main
from mczeno.pauli import load_hamiltonian


class TestMethodCommands:
    def test_clique_reports_members(self, data_dir, capsys):
        assert main(["clique", str(data_dir / "toy_two_qubit.txt")]) == 0
        out = capsys.readouterr().out
        assert "weight 11.0" in out
        assert "II IZ ZI" in out

    def test_qae_reports_energy(self, data_dir, capsys):
        code = main(
            ["qae", str(data_dir / "gapped_four_qubit.txt"), "--T", "10", "--dt", "0.5"]
        )
        assert code == 0
        assert "final energy" in capsys.readouterr().out

    def test_qzp_writes_distribution_csv(self, data_dir, tmp_path, capsys):
        out = tmp_path / "dist.csv"
        code = main(
            [
                "qzp",
                str(data_dir / "gapped_four_qubit.txt"),
                "--steps",
                "3",
                "--trials",
                "10",
                "--seed",
                "4",
                "-o",
                str(out),
            ]
        )
        assert code == 0
        assert out.read_text().splitlines()[0] == "initial_index,final_index,count"
        assert "ground frequency" in capsys.readouterr().out

    def test_spectrum_writes_csv(self, data_dir, tmp_path):
        out = tmp_path / "levels.csv"
        code = main(
            [
                "spectrum",
                str(data_dir / "toy_two_qubit.txt"),
                "--k",
                "2",
                "--points",
                "5",
                "-o",
                str(out),
            ]
        )
        assert code == 0
        assert len(out.read_text().splitlines()) == 6

    def test_config_file_with_flag_override(self, data_dir, tmp_path, capsys):
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"trials": 5, "n_steps": 2, "seed": 9}))
        code = main(
            [
                "qzp",
                str(data_dir / "gapped_four_qubit.txt"),
                "--config",
                str(config),
                "--trials",
                "3",
            ]
        )
        assert code == 0
        assert "over 3 trials" in capsys.readouterr().out

    def test_load_failure_exits_nonzero(self, capsys):
        assert main(["clique", "/nope.txt"]) == 1
        assert "error: stage 'load'" in capsys.readouterr().err


class TestHamCommand:
    def test_fcidump_conversion(self, data_dir, tmp_path, capsys):
        out = tmp_path / "h2.txt"
        code = main(
            [
                "ham",
                str(data_dir / "h2_sto3g_0.7414.fcidump"),
                "--mapping",
                "jw",
                "-o",
                str(out),
            ]
        )
        assert code == 0
        h = load_hamiltonian(out)
        assert h.n_qubits == 4
        assert len(h.terms) == 15
        assert "wrote 15 terms (jw)" in capsys.readouterr().out


class TestScanCommand:
    def test_bond_scan_csv(self, data_dir, tmp_path, capsys):
        config = tmp_path / "scan.json"
        config.write_text(
            json.dumps(
                {
                    "methods": ["exact", "qzp"],
                    "defaults": {
                        "mapping": "jw",
                        "alpha": 0.5,
                        "n_steps": 5,
                        "trials": 50,
                        "seed": 7,
                    },
                    "points": [
                        {
                            "coordinate": bond,
                            "source": str(data_dir / f"h2_sto3g_{bond}.fcidump"),
                        }
                        for bond in (0.7414, 1.2, 2.8)
                    ],
                }
            )
        )
        out = tmp_path / "curve.csv"
        assert main(["scan", str(config), "-o", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 4
        assert lines[0].startswith("coordinate,exact_hartree,qzp_hartree")
        printed = capsys.readouterr().out
        assert "0.7414: ok" in printed

    def test_relative_sources_resolve_against_config(self, data_dir, tmp_path):
        (tmp_path / "problem.txt").write_text(
            (data_dir / "toy_two_qubit.txt").read_text()
        )
        config = tmp_path / "scan.json"
        config.write_text(
            json.dumps(
                {
                    "defaults": {"n_steps": 2, "trials": 5},
                    "points": [{"coordinate": 1.0, "source": "problem.txt"}],
                }
            )
        )
        assert main(["scan", str(config)]) == 0

    def test_all_points_missing_exits_nonzero(self, tmp_path, capsys):
        config = tmp_path / "scan.json"
        config.write_text(
            json.dumps({"points": [{"coordinate": 1.0, "source": "absent.txt"}]})
        )
        assert main(["scan", str(config)]) == 1
        assert "missing" in capsys.readouterr().out
