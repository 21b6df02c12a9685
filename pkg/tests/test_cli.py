"""Command line interface: exit codes, output contract, file round trips."""
import json
import subprocess
import sys
from fractions import Fraction as Q

import pytest

from invder import load_algebra
from invder.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def path(algebra_dir, entry_id):
    return str(algebra_dir / f"{entry_id}.json")


class TestCheck:
    def test_kind_bundle_from_file(self, capsys, algebra_dir):
        code, out, err = run(capsys, "check", path(algebra_dir, "heisenberg3"))
        assert code == 0
        assert "skew_symmetry: holds" in out
        assert "jacobi: holds" in out
        assert err == ""

    def test_single_axiom(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "check", path(algebra_dir, "so3"),
                           "--axiom", "jacobi")
        assert code == 0
        assert out.strip() == "jacobi: holds"

    def test_failing_identity_exits_one_with_witness(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "check", path(algebra_dir, "so3"),
                           "--axiom", "invder-lie", "--map", "ad_e1")
        assert code == 1
        assert "invder_jacobi: fails at (0, 1, 2)" in out

    def test_json_report(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "check", path(algebra_dir, "so3"),
                           "--axiom", "invder_jacobi", "--map", "ad_e1",
                           "--json")
        assert code == 1
        data = json.loads(out)
        assert data["ok"] is False
        reports = data["axioms"]
        assert reports[0]["axiom"] == "invder_jacobi"
        assert reports[0]["holds"] is False
        assert reports[0]["witness"]["indices"] == [0, 1, 2]
        assert reports[0]["witness"]["lhs"] == ["-2", "0", "0"]

    def test_delta_axiom_needs_map(self, capsys, algebra_dir):
        code, _, err = run(capsys, "check", path(algebra_dir, "so3"),
                           "--axiom", "invder_jacobi")
        assert code == 2
        assert err.startswith("error:")

    def test_unknown_axiom(self, capsys, algebra_dir):
        code, _, err = run(capsys, "check", path(algebra_dir, "so3"),
                           "--axiom", "nonsense")
        assert code == 2
        assert "error:" in err

    def test_dendriform_bundle(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "check", path(algebra_dir, "d2"),
                           "--axiom", "dendriform")
        assert code == 0
        assert out.count("holds") == 3


class TestInputErrors:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "check", "/nonexistent/alg.json")
        assert code == 2
        assert "error:" in err

    def test_malformed_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{broken")
        code, _, err = run(capsys, "check", str(bad))
        assert code == 2
        assert "error:" in err

    def test_unknown_command(self, capsys):
        code = main(["frobnicate"])
        capsys.readouterr()
        assert code == 2

    def test_missing_required_option(self, capsys, algebra_dir):
        code = main(["invder", path(algebra_dir, "heisenberg3")])
        capsys.readouterr()
        assert code == 2

    def test_no_arguments(self, capsys):
        code = main([])
        capsys.readouterr()
        assert code == 2


class TestInvderVerdict:
    def test_accepted_map(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "invder", path(algebra_dir, "heisenberg3"),
                           "--map", "delta_w")
        assert code == 0
        assert "accepted: yes" in out
        assert "square_condition: yes" in out

    def test_rejected_map(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "invder", path(algebra_dir, "heisenberg3"),
                           "--map", "diag112")
        assert code == 1
        assert "inverse_is_derivation: no" in out
        assert "square_condition: no" in out

    def test_json_verdict(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "invder", path(algebra_dir, "heisenberg3"),
                           "--map", "delta_w", "--json")
        assert code == 0
        assert json.loads(out)["accepted"] is True


class TestDerivations:
    def test_plain_listing(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "derivations", path(algebra_dir, "solvable2"))
        assert code == 0
        assert "dim 2" in out

    def test_json_listing(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "derivations", path(algebra_dir, "so3"),
                           "--json")
        assert code == 0
        assert json.loads(out)["dim"] == 3


class TestInvderSearch:
    def test_found(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "invder-search",
                           path(algebra_dir, "heisenberg3"))
        assert code == 0
        assert "found" in out

    def test_certificate(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "invder-search", path(algebra_dir, "so3"))
        assert code == 1
        assert "generic determinant vanishes" in out

    def test_json(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "invder-search", path(algebra_dir, "so3"),
                           "--json")
        assert code == 1
        assert json.loads(out)["found"] is None


class TestTwist:
    def test_twist_writes_a_loadable_verified_file(self, capsys, algebra_dir,
                                                   tmp_path):
        src = path(algebra_dir, "heisenberg3")
        before = open(src, "rb").read()
        out_file = str(tmp_path / "twisted.json")
        code, out, _ = run(capsys, "twist", src, "--map", "delta_w",
                           "-o", out_file)
        assert code == 0
        assert open(src, "rb").read() == before
        doc = load_algebra(out_file)
        assert doc.algebra.op().basis_product(0, 1) == {2: Q(2)}
        assert doc.map_names() == ("delta",)
        code, out, _ = run(capsys, "check", out_file)
        assert code == 0

    def test_rejected_map_suggests_force(self, capsys, algebra_dir):
        code, _, err = run(capsys, "twist", path(algebra_dir, "heisenberg3"),
                           "--map", "diag112")
        assert code == 2
        assert "--force" in err

    def test_force_twists_anyway(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "twist", path(algebra_dir, "heisenberg3"),
                           "--map", "diag112", "--force")
        assert code == 0

    def test_twist_json_payload(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "twist", path(algebra_dir, "heisenberg3"),
                           "--map", "delta_w", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["ok"] is True
        assert data["algebra"]["kind"] == "lie"


class TestTransform:
    def test_commutator(self, capsys, algebra_dir, tmp_path):
        out_file = str(tmp_path / "comm.json")
        code, out, _ = run(capsys, "transform", "commutator-lie",
                           path(algebra_dir, "a3"), "-o", out_file)
        assert code == 0
        assert "kind lie" in out
        doc = load_algebra(out_file)
        assert doc.algebra.op().basis_product(0, 1) == {2: Q(2)}
        assert run(capsys, "check", out_file)[0] == 0

    def test_rb_prelie_from_lie(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "transform", "rb-prelie-from-lie",
                           path(algebra_dir, "heisenberg3"),
                           "--operator", "proj_center")
        assert code == 0

    def test_rb_prelie_from_assoc(self, capsys, algebra_dir):
        code, _, _ = run(capsys, "transform", "rb-prelie-from-assoc",
                         path(algebra_dir, "a3"), "--operator", "proj_z")
        assert code == 0

    def test_zinbiel_passages(self, capsys, algebra_dir):
        for name in ("zinbiel-to-assoc", "zinbiel-to-lie"):
            code, _, _ = run(capsys, "transform", name,
                             path(algebra_dir, "z3"))
            assert code == 0

    def test_dendriform_passages(self, capsys, algebra_dir):
        for name in ("dendriform-to-assoc", "dendriform-to-prelie"):
            code, _, _ = run(capsys, "transform", name,
                             path(algebra_dir, "d2"))
            assert code == 0

    def test_failed_precondition_is_usage_error(self, capsys, algebra_dir):
        code, _, err = run(capsys, "transform", "dendriform-to-zinbiel",
                           path(algebra_dir, "d2"))
        assert code == 2
        assert "error:" in err

    def test_missing_operator_is_usage_error(self, capsys, algebra_dir):
        code, _, err = run(capsys, "transform", "rb-prelie-from-lie",
                           path(algebra_dir, "heisenberg3"))
        assert code == 2

    def test_unknown_transform(self, capsys, algebra_dir):
        code = main(["transform", "no-such-passage",
                     path(algebra_dir, "a3")])
        capsys.readouterr()
        assert code == 2


class TestRotaBaxter:
    def test_weight_zero_operator(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "rota-baxter",
                           path(algebra_dir, "heisenberg3"),
                           "--map", "proj_center")
        assert code == 0
        assert "weight 0:" in out

    def test_identity_fails_weight_zero(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "rota-baxter", path(algebra_dir, "a3"),
                           "--map", "identity")
        assert code == 1
        assert "fails at (0, 1)" in out

    def test_identity_holds_weight_minus_one(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "rota-baxter", path(algebra_dir, "a3"),
                           "--map", "identity", "--weight=-1")
        assert code == 0

    def test_bad_weight_string(self, capsys, algebra_dir):
        code, _, err = run(capsys, "rota-baxter", path(algebra_dir, "a3"),
                           "--map", "identity", "--weight=0.5")
        assert code == 2


class TestVerifyTheorem:
    @pytest.mark.parametrize("name,entry_id,map_name", [
        ("thm-2.1", "heisenberg3", "delta_w"),
        ("prop-2.1", "heisenberg3", "delta_w"),
        ("thm-2.2", "a3", "delta_A"),
        ("prop-2.3", "a3", "delta_A"),
        ("thm-3.4", "a3", "delta_A"),
        ("prop-3.4", "a3", "delta_A"),
        ("thm-4.2", "a3_zinbiel", "delta_A"),
        ("prop-4.3", "a3_zinbiel", "delta_A"),
        ("prop-4.4-4.5", "a3_zinbiel", "delta_A"),
        ("thm-4-dendriform", "a3_dendriform", "delta_A"),
        ("thm-yau", "a3", "delta_A"),
        ("cor-yau", "heisenberg3", "delta_w"),
    ])
    def test_verified_statements(self, capsys, algebra_dir, name, entry_id,
                                 map_name):
        code, out, _ = run(capsys, "verify-theorem", name,
                           path(algebra_dir, entry_id), "--map", map_name)
        assert code == 0
        assert f"theorem {name}: verified" in out

    def test_statements_without_maps(self, capsys, algebra_dir):
        for name, entry_id in [("prop-3.5", "a3"), ("thm-4-zinbiel-lie", "z3")]:
            code, out, _ = run(capsys, "verify-theorem", name,
                               path(algebra_dir, entry_id))
            assert code == 0, name

    def test_operator_statements(self, capsys, algebra_dir):
        code, _, _ = run(capsys, "verify-theorem", "thm-3-rbo",
                         path(algebra_dir, "a3"), "--operator", "proj_z")
        assert code == 0
        code, _, _ = run(capsys, "verify-theorem", "prop-3.6",
                         path(algebra_dir, "a3"), "--operator", "identity")
        assert code == 0

    def test_refuted_statement_exits_one(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "verify-theorem", "prop-2.2",
                           path(algebra_dir, "so3"), "--map", "ad_e1")
        assert code == 1
        assert "theorem prop-2.2: refuted" in out

    def test_precondition_failure_exits_two(self, capsys, algebra_dir):
        code, _, err = run(capsys, "verify-theorem", "prop-2.1",
                           path(algebra_dir, "heisenberg3"),
                           "--map", "proj_center")
        assert code == 2
        code, _, err = run(capsys, "verify-theorem", "thm-2.1",
                           path(algebra_dir, "heisenberg3"),
                           "--map", "diag112")
        assert code == 2
        assert "--force" in err

    def test_unknown_theorem(self, capsys, algebra_dir):
        code = main(["verify-theorem", "thm-9.9",
                     path(algebra_dir, "heisenberg3")])
        capsys.readouterr()
        assert code == 2

    def test_json_payload(self, capsys, algebra_dir):
        code, out, _ = run(capsys, "verify-theorem", "prop-2.1",
                           path(algebra_dir, "heisenberg3"),
                           "--map", "delta_w", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["theorem"] == "prop-2.1"
        assert data["verified"] is True


class TestSuiteAndSearch:
    def test_suite_summary(self, capsys):
        code, out, _ = run(capsys, "suite", "--samples", "3")
        assert code == 0
        assert "violations: 0" in out

    def test_suite_json_is_deterministic(self, capsys):
        code_a, out_a, _ = run(capsys, "suite", "--samples", "3", "--json")
        code_b, out_b, _ = run(capsys, "suite", "--samples", "3", "--json")
        assert code_a == code_b == 0
        assert out_a == out_b
        assert json.loads(out_a)["ok"] is True

    def test_search_counterexample_bounds_line(self, capsys):
        code, out, _ = run(capsys, "search-counterexample", "--family",
                           "abelian", "--max-dim", "3", "--samples", "30")
        assert code == 0
        assert "no findings within bounds" in out

    def test_search_counterexample_json(self, capsys):
        code, out, _ = run(capsys, "search-counterexample", "--family",
                           "heisenberg_like", "--samples", "20", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["findings"] == []
        assert data["family"] == "heisenberg_like"

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "search-counterexample", "--family",
                           "diagonal")
        assert code == 2

    def test_dimension_cap_enforced(self, capsys, monkeypatch):
        monkeypatch.setenv("INVDER_MAX_DIM", "3")
        code, _, err = run(capsys, "search-counterexample", "--family",
                           "abelian", "--max-dim", "4")
        assert code == 2


class TestCatalog:
    def test_listing(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == 0
        assert len(out.strip().splitlines()) == 18
        assert "so3: dim 3, kind lie" in out

    def test_single_entry_verify(self, capsys):
        code, out, _ = run(capsys, "catalog", "--entry", "so3", "--verify")
        assert code == 0
        assert "mismatches" in out

    def test_dump_writes_loadable_files(self, capsys, tmp_path):
        code, out, _ = run(capsys, "catalog", "--dump", str(tmp_path))
        assert code == 0
        files = sorted(p.name for p in tmp_path.glob("*.json"))
        assert len(files) == 18
        doc = load_algebra(str(tmp_path / "heisenberg3.json"))
        assert doc.algebra.kind_hint == "lie"

    def test_unknown_entry(self, capsys):
        code, _, err = run(capsys, "catalog", "--entry", "missing")
        assert code == 2


class TestSubprocess:
    def test_module_entry_point(self, algebra_dir):
        proc = subprocess.run(
            [sys.executable, "-m", "invder", "check",
             path(algebra_dir, "heisenberg3")],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "jacobi: holds" in proc.stdout

    def test_exit_codes_through_the_real_process(self, algebra_dir):
        refuted = subprocess.run(
            [sys.executable, "-m", "invder", "check",
             path(algebra_dir, "so3"), "--axiom", "invder-lie",
             "--map", "ad_e1"], capture_output=True, text=True)
        assert refuted.returncode == 1
        usage = subprocess.run(
            [sys.executable, "-m", "invder", "check", "/missing.json"],
            capture_output=True, text=True)
        assert usage.returncode == 2
        assert usage.stderr.startswith("error:")
