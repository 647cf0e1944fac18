"""End-to-end tests of the command-line interface via cli.run()."""

import io
import json

import pytest

from singulact.cli import (
    EXIT_CHECK_FAILED,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    run,
)


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestReports:
    def test_lct(self):
        code, out, _ = invoke("lct", "--vars", "x,y", "--ideal", "x^2, y^3")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "lct = 5/6"

    def test_lct_certificate(self):
        code, out, _ = invoke(
            "lct", "--vars", "x,y", "--ideal", "x^2, x*y, y^3", "--certificate"
        )
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "lct = 1"
        assert lines[1] == "certificate: u = (1,1/2), ord = 3/2"

    def test_beta_monomial(self):
        code, out, _ = invoke("beta", "--vars", "x,y", "--poly", "x^4*y")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "beta = 1/3"

    def test_beta_ordinary(self):
        code, out, _ = invoke("beta", "--ordinary", "3,2")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "beta = 3/2"

    def test_alpha_cusp(self):
        code, out, _ = invoke("alpha", "--vars", "x,y", "--poly", "x^2 + y^3")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "alpha = 5/6"

    def test_alpha_smooth_is_inf(self):
        code, out, _ = invoke("alpha", "--vars", "x,y", "--poly", "x + y^5")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "alpha = inf"

    def test_milnor(self):
        code, out, _ = invoke("milnor", "--vars", "x,y", "--poly", "x^2 + y^3")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "milnor = 2"

    def test_mult(self):
        code, out, _ = invoke("mult", "--vars", "x,y", "--ideal", "x^2, x*y, y^3")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "multiplicity = 5"

    def test_newton_dump(self):
        code, out, _ = invoke("newton", "--vars", "x,y", "--ideal", "x^2, y^3")
        assert code == EXIT_OK
        assert "facet: u=(1,2/3) c=2" in out
        assert "vertices: 0,3; 2,0" in out


class TestJson:
    def test_report_schema(self):
        code, out, _ = invoke(
            "lct", "--vars", "x,y", "--ideal", "x^2, y^3", "--json", "--certificate"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["invariant"] == "lct"
        assert payload["value"] == "5/6"
        assert payload["n"] == 2
        assert payload["certificate"]["ord"] == "2"
        assert payload["certificate"]["u"] == ["1", "2/3"]

    def test_no_floats_anywhere(self):
        cases = [
            ("lct", "--vars", "x,y,z", "--ideal", "x*y, y*z, x*z", "--json"),
            ("alpha", "--vars", "x,y", "--poly", "x^2 + y^3", "--json"),
            ("check", "dfem", "--vars", "x,y", "--ideal", "x^2, y^3", "--json"),
            ("newton", "--vars", "x,y", "--ideal", "x^2, x*y, y^3", "--json"),
        ]
        for argv in cases:
            code, out, _ = invoke(*argv)
            assert code == EXIT_OK

            def reject_floats(obj):
                if isinstance(obj, float):
                    raise AssertionError(f"float leaked into JSON: {obj}")
                if isinstance(obj, dict):
                    for v in obj.values():
                        reject_floats(v)
                elif isinstance(obj, list):
                    for v in obj:
                        reject_floats(v)

            reject_floats(json.loads(out))

    def test_keys_sorted(self):
        _, out, _ = invoke("alpha", "--vars", "x,y", "--poly", "x^2 + y^3", "--json")
        payload = json.loads(out)
        assert out.strip() == json.dumps(payload, sort_keys=True)

    def test_check_schema(self):
        code, out, _ = invoke(
            "check", "question1", "--vars", "x,y", "--poly", "x^2 + y^3", "--json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["check"] == "question1"
        assert payload["holds"] is True
        assert (payload["lhs"], payload["rhs"]) == ("5/6", "1")


class TestChecks:
    def test_question1_holds(self):
        code, out, _ = invoke(
            "check", "question1", "--vars", "x,y", "--poly", "x^2 + y^3"
        )
        assert code == EXIT_OK
        assert out.startswith("holds: 5/6 <= 1")

    def test_thm_alpha_lct(self):
        code, out, _ = invoke(
            "check", "thm-alpha-lct", "--vars", "x,y",
            "--poly", "x^2 + y^3", "--ideal", "x, y^2",
        )
        assert code == EXIT_OK
        assert out.startswith("holds: 5/6 <= 3/2")

    def test_restriction(self):
        code, out, _ = invoke(
            "check", "restriction", "--vars", "x,y,z",
            "--poly", "x^2 + y^3 + z^7", "--axis", "z",
        )
        assert code == EXIT_OK

    def test_restriction_requires_axis(self):
        code, _, err = invoke(
            "check", "restriction", "--vars", "x,y", "--poly", "x^2 + y^3"
        )
        assert code == EXIT_INPUT
        assert "--axis" in err

    def test_madic(self):
        code, out, _ = invoke(
            "check", "madic", "--vars", "x,y",
            "--poly", "x^2 + y^3", "--poly2", "x^2 + y^5",
        )
        assert code == EXIT_OK

    def test_milnor_bound(self):
        code, out, _ = invoke(
            "check", "milnor-bound", "--vars", "x,y,z", "--poly", "x^3 + y^3 + z^3"
        )
        assert code == EXIT_OK
        assert out.startswith("holds: 8 = 8")

    def test_minkowski(self):
        code, _, _ = invoke(
            "check", "minkowski", "--vars", "x,y",
            "--ideal", "x, y", "--ideal2", "x, y^2",
        )
        assert code == EXIT_OK


class TestExitCodes:
    def test_input_error_on_bad_parse(self):
        code, out, err = invoke("lct", "--vars", "x,y", "--ideal", "x^2 + y")
        assert code == EXIT_INPUT
        assert out == ""
        assert "input error" in err

    def test_input_error_missing_vars(self):
        code, _, err = invoke("lct", "--ideal", "x^2, y^3")
        assert code == EXIT_INPUT
        assert "--vars" in err

    def test_unsupported_class(self):
        code, _, err = invoke(
            "beta", "--vars", "x,y", "--poly", "x^2 + y^2 + x*y^2"
        )
        assert code == EXIT_UNSUPPORTED
        assert "unsupported input class" in err

    def test_unknown_subcommand(self):
        code, _, _ = invoke("frobnicate")
        assert code == EXIT_INPUT

    def test_caps_env_override(self, monkeypatch):
        gens = ",".join(f"x{i+1}" for i in range(5))
        code, _, err = invoke("newton", "--vars", gens, "--ideal", gens)
        assert code == EXIT_INPUT
        assert "cap" in err
        monkeypatch.setenv("SINGULACT_CAPS_N", "5")
        code, out, _ = invoke("newton", "--vars", gens, "--ideal", gens)
        assert code == EXIT_OK
        assert "facet: u=(1,1,1,1,1) c=1" in out


class TestScan:
    def test_diagonal_question1(self):
        code, out, _ = invoke("scan", "diagonal", "--n", "2", "--max-exp", "4")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert len(lines) == 10  # 3x3 grid plus summary
        assert lines[-1].startswith("summary: 9 cases, 0 violations")

    def test_diagonal_deterministic(self):
        a = invoke("scan", "diagonal", "--n", "2", "--max-exp", "5", "--json")
        b = invoke("scan", "diagonal", "--n", "2", "--max-exp", "5", "--json")
        assert a == b

    def test_monomial_pairs_deterministic(self):
        args = (
            "scan", "monomial-pairs", "--n", "2", "--count", "20",
            "--seed", "7", "--check", "minkowski", "--json",
        )
        a = invoke(*args)
        b = invoke(*args)
        assert a == b
        assert a[0] == EXIT_OK

    def test_monomial_pairs_dfem(self):
        code, out, _ = invoke(
            "scan", "monomial-pairs", "--n", "2", "--count", "10",
            "--seed", "3", "--check", "dfem",
        )
        assert code == EXIT_OK
        assert out.splitlines()[-1] == "summary: 10 cases, 0 violations"

    def test_cell_cap(self):
        code, _, err = invoke(
            "scan", "diagonal", "--n", "4", "--max-exp", "9", "--max-cells", "100"
        )
        assert code == EXIT_INPUT
        assert "cap" in err


class TestRegistry:
    def test_text(self):
        code, out, _ = invoke("registry")
        assert code == EXIT_OK
        assert "det generic matrix: beta = 4 (registry)" in out
        assert "det generic matrix: alpha = 2 (registry)" in out
        assert "registry question1: holds (2 <= 4)" in out

    def test_json(self):
        code, out, _ = invoke("registry", "--json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert all(e["method"] == "registry" for e in payload["entries"])
        assert payload["question1"]["holds"] is True
