import json
from io import StringIO

import pytest

from presentation.cli.app import EXIT_INPUT, EXIT_INTERNAL, EXIT_OK, main


def run(*argv):
    stdout, stderr = StringIO(), StringIO()
    code = main(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    return code, json.loads(out) if out.strip() else None, json.loads(err) if err.strip() else None


class TestMu:
    def test_mu(self):
        code, report, _ = run_json("mu", "--map", "henon22.map", "--weights", "1,0,-1")
        assert code == EXIT_OK
        assert report['schema'] == "gitstab/1"
        assert report['exact'] is True
        assert report['command']['name'] == "mu"
        assert report['result']['mu'] == 0
        assert report['result']['exponents'] == [0, 0, 1, 2]

    def test_failed_expectation(self):
        code, report, _ = run_json("mu", "--map", "henon22.map", "--weights", "1,0,-1", "--expect", ">0")
        assert code == EXIT_INTERNAL
        assert report['result']['passed'] is False
        assert report['result']['certificate']['mu'] == 0

    def test_met_expectation(self):
        code, report, _ = run_json("mu", "--map", "henon23.map", "--weights", "4,-1,-3", "--expect", ">0")
        assert code == EXIT_OK
        assert report['result']['mu'] == 1
        assert report['result']['passed'] is True

    def test_parse_error(self):
        code, report, error = run_json("mu", "--map", "[x^2 : y$ : z^2]", "--weights", "1,0,-1")
        assert code == EXIT_INPUT
        assert report is None
        assert error['error']['kind'] == "parse"
        assert error['error']['column'] == 9

    def test_bad_weights(self):
        code, _, error = run_json("mu", "--map", "henon22.map", "--weights", "1,1")
        assert code == EXIT_INPUT
        assert error['error']['kind'] == "validation"

    def test_missing_file(self):
        code, _, error = run_json("mu", "--map", "no/such/file.map", "--weights", "1,0,-1")
        assert code == EXIT_INPUT


class TestStability:
    def test_destab_cubic(self):
        code, report, _ = run_json("destab", "--map", "henon23.map", "--solver", "simplex")
        assert code == EXIT_OK
        assert report['result']['found'] is True
        assert report['result']['certificate']['mu'] > 0

    def test_destab_quadratic(self):
        _, strict, _ = run_json("destab", "--map", "henon22.map")
        _, nonstrict, _ = run_json("destab", "--map", "henon22.map", "--nonstrict")
        assert strict['result']['found'] is False
        assert nonstrict['result']['certificate']['weights'] == [1, 0, -1]

    def test_henon_build_from_spec(self):
        code, report, _ = run_json("henon-build", "--spec", "henon3.spec", "--verdict")
        assert code == EXIT_OK
        result = report['result']
        assert result['inverse_verified'] is True
        assert result['verdict']['verdict'] == "not-stable"
        assert result['verdict']['certificate']['verified'] is True

    def test_henon_build_random_is_reproducible(self):
        first = run("henon-build", "--N", "3", "--k", "3", "--d", "3", "--seed", "17", "--verdict")
        second = run("henon-build", "--N", "3", "--k", "3", "--d", "3", "--seed", "17", "--verdict")
        assert first[0] == EXIT_OK
        assert first[1] == second[1]
        report = json.loads(first[1])
        assert report['seed'] == 17
        assert report['result']['verdict']['verdict'] == "unstable"
        assert report['result']['verdict']['certificate']['mu'] > 0

    def test_henon_build_needs_input(self):
        code, _, error = run_json("henon-build", "--N", "3")
        assert code == EXIT_INPUT

    def test_henon_build_bad_range(self):
        code, _, error = run_json("henon-build", "--N", "2", "--k", "3", "--d", "2")
        assert code == EXIT_INPUT
        assert error['error']['kind'] == "range"


class TestDynamics:
    def test_iterate(self):
        code, report, _ = run_json("iterate", "--map", "henon22.map", "--n", "3")
        assert code == EXIT_OK
        result = report['result']
        assert result['degrees'] == [2, 4, 8]
        assert result['algebraically_stable_upto_n'] is True
        assert result['morphism'] is False
        assert result['rational_common_zeros'] == ["[1 : 0 : 0]"]

    def test_iterate_degree_drop(self):
        _, report, _ = run_json("iterate", "--map", "degree_drop.map")
        assert report['result']['degrees'] == [2, 2]
        assert report['result']['algebraically_stable_upto_n'] is False

    def test_iterate_family_morphism(self):
        _, report, _ = run_json("iterate", "--map", "fdt21.map", "--n", "1")
        assert report['result']['morphism'] is True

    def test_iterate_count(self):
        code, _, error = run_json("iterate", "--map", "henon22.map", "--n", "0")
        assert code == EXIT_INPUT
        assert error['error']['kind'] == "range"

    def test_line_image(self):
        code, report, _ = run_json("line-image", "--map", "henon22.map", "--line", "y = 2*z")
        assert code == EXIT_OK
        assert report['result']['image']['kind'] == "line"

    def test_line_image_cubic(self):
        code, _, error = run_json("line-image", "--map", "henon23.map", "--line", "z")
        assert code == EXIT_INPUT
        assert error['error']['kind'] == "unsupported"


class TestClassification:
    def test_classify_phi(self):
        code, report, _ = run_json("classify22", "--map", "phi.map")
        assert code == EXIT_OK
        result = report['result']
        assert result['branch'] == "both"
        assert result['semistable_conclusion'] == "unknown"
        assert result['centers'] == [["0", "1", "0"]]
        assert result['evidence']['fibering'][0]['G'] == ["v*w", "w^2"]

    def test_classify_henon(self):
        _, report, _ = run_json("classify22", "--map", "henon22.map")
        assert report['result']['semistable_conclusion'] == "semistable"
        assert report['result']['deg_F2'] == 4

    def test_classify_not_dominant(self):
        code, _, error = run_json("classify22", "--map", "[x^2 : x*y : y^2]")
        assert code == EXIT_INPUT
        assert error['error']['kind'] == "unsupported"

    def test_audit(self):
        code, report, _ = run_json("audit-henon22", "--samples", "2", "--seed", "3")
        assert code == EXIT_OK
        assert report['result']['passed'] is True
        assert len(report['result']['checks']) == 5

    def test_audit_explicit_lines(self):
        code, report, _ = run_json("audit-henon22", "--spec", "henon N=2 k=2 d=2 b=(1,1) P3=(x2^2)",
                                   "--line", "z", "--line", "y = 2*z")
        assert code == EXIT_OK
        assert [check['class'] for check in report['result']['checks']] == ["infinity", "horizontal"]


class TestTablesAndSweeps:
    def test_table_text(self):
        code, out, _ = run("table", "--N", "2", "--k", "2", "--d", "2", "--format", "text")
        assert code == EXIT_OK
        assert out.startswith("N=2 k=2 d=2")
        assert "min = 0" in out
        assert "-r - s + t" in out

    def test_table_json(self):
        _, report, _ = run_json("table", "--N", "3", "--k", "3", "--d", "2")
        assert report['result']['minimum'] > 0
        assert report['result']['expected']['verdict'] == "unstable"

    def test_table_quadratic(self):
        _, report, _ = run_json("table", "--quadratic")
        assert len(report['result']['rows']) == 18

    def test_table_needs_dimensions(self):
        code, _, _ = run_json("table", "--N", "3")
        assert code == EXIT_INPUT

    @pytest.mark.parametrize("kind", ["theorem", "corollary"])
    def test_sweep(self, kind):
        code, report, _ = run_json("sweep", "--kind", kind, "--count", "2", "--max-N", "3", "--max-d", "3")
        assert code == EXIT_OK
        assert report['result']['passed'] is True
        assert report['result']['failures'] == 0
