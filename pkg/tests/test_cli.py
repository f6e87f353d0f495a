"""Command-line surface: exit codes, determinism, JSON contracts."""

import json

from ktcalc.cli import (
    EXIT_AMBIGUOUS,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_UNDETERMINED,
    main,
)

GOLDEN = {"k": 2, "step": {"rows": 2, "cols": 2, "entries": [["1", "1"], ["1", "0"]]},
          "unit": ["1", "1"]}

Z_GROUP = '{"free_rank": 1, "torsion": []}'
TRIVIAL_GROUP = '{"free_rank": 0, "torsion": []}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


class TestSnfCommand:
    def test_identity(self, capsys, tmp_path):
        path = write(tmp_path, "m.json",
                     {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]})
        code, out = run(capsys, "snf", path)
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["d"]["entries"] == [["1", "0"], ["0", "1"]]

    def test_deterministic_output(self, capsys, tmp_path):
        path = write(tmp_path, "m.json",
                     {"rows": 2, "cols": 2, "entries": [["2", "4"], ["6", "8"]]})
        code1, out1 = run(capsys, "snf", path)
        code2, out2 = run(capsys, "snf", path)
        assert (code1, out1) == (code2, out2)
        assert out1.encode("utf-8") == out2.encode("utf-8")

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _ = run(capsys, "snf", str(path))
        assert code == EXIT_INPUT_ERROR

    def test_missing_file(self, capsys):
        code, _ = run(capsys, "snf", "/nonexistent/m.json")
        assert code == EXIT_INPUT_ERROR


class TestGroupCommand:
    def test_normalize(self, capsys, tmp_path):
        path = write(tmp_path, "p.json", {
            "generators": 2,
            "relations": {"rows": 2, "cols": 2, "entries": [["2", "0"], ["0", "3"]]},
        })
        code, out = run(capsys, "group", path)
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["group"] == {"free_rank": 0, "torsion": ["6"]}


class TestPvCommand:
    def test_pointlike_pipeline(self, capsys, tmp_path):
        code, model_out = run(capsys, "realize", "--d", "1",
                              "--f0", TRIVIAL_GROUP, "--f1", TRIVIAL_GROUP)
        assert code == EXIT_OK
        path = tmp_path / "model.json"
        path.write_text(model_out)
        code, out = run(capsys, "pv", str(path))
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["k0"] == {"free_rank": 1, "torsion": []}
        assert doc["k1"] == {"free_rank": 1, "torsion": []}

    def test_ambiguous_exit_code(self, capsys, tmp_path):
        model = {
            "k0": {"generators": 1, "relations": {"rows": 1, "cols": 0, "entries": [[]]}},
            "k1": {"generators": 1, "relations": {"rows": 1, "cols": 1, "entries": [["2"]]}},
            "aut0": {"rows": 1, "cols": 1, "entries": [["1"]]},
            "aut1": {"rows": 1, "cols": 1, "entries": [["1"]]},
            "unit": ["1"],
        }
        path = write(tmp_path, "amb.json", model)
        code, out = run(capsys, "pv", path)
        assert code == EXIT_AMBIGUOUS
        doc = json.loads(out)
        assert doc["k0_ext_status"] == "ambiguous"

    def test_invalid_model_exit_one(self, capsys, tmp_path):
        model = {
            "k0": {"generators": 1, "relations": {"rows": 1, "cols": 0, "entries": [[]]}},
            "k1": {"generators": 0, "relations": {"rows": 0, "cols": 0, "entries": []}},
            "aut0": {"rows": 1, "cols": 1, "entries": [["2"]]},
            "aut1": {"rows": 0, "cols": 0, "entries": []},
            "unit": ["1"],
        }
        path = write(tmp_path, "bad.json", model)
        code, _ = run(capsys, "pv", path)
        assert code == EXIT_INPUT_ERROR


class TestRealizeCommand:
    def test_inline_group_json(self, capsys):
        code, out = run(capsys, "realize", "--d", "2",
                        "--f0", '{"free_rank": 0, "torsion": ["3"]}',
                        "--f1", TRIVIAL_GROUP)
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["k0"]["generators"] == 4
        assert doc["unit"] == ["1", "0", "0", "0"]

    def test_group_from_file(self, capsys, tmp_path):
        path = write(tmp_path, "g.json", {"free_rank": 0, "torsion": ["2"]})
        code, out = run(capsys, "realize", "--d", "1", "--f0", path, "--f1", path)
        assert code == EXIT_OK

    def test_rejects_infinite_factor(self, capsys):
        code, _ = run(capsys, "realize", "--d", "1", "--f0", Z_GROUP,
                      "--f1", TRIVIAL_GROUP)
        assert code == EXIT_INPUT_ERROR


class TestOrbitBreakCommand:
    def test_pointlike(self, capsys):
        code, out = run(capsys, "orbit-break", "--regime", "pointlike",
                        "--g0", '{"free_rank": 0, "torsion": ["3"]}',
                        "--g1", '{"free_rank": 0, "torsion": ["5"]}')
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["k0"] == {"free_rank": 1, "torsion": ["3"]}
        assert doc["k1"] == {"free_rank": 0, "torsion": ["5"]}
        assert doc["cone"]["tag"] == "SimpleCone"
        assert doc["unit"] == ["1", "0"]
        assert any("derivation" in key for key in doc)

    def test_point_needs_ambient(self, capsys):
        code, _ = run(capsys, "orbit-break", "--regime", "point")
        assert code == EXIT_INPUT_ERROR

    def test_point_with_ambient_file(self, capsys, tmp_path):
        path = write(tmp_path, "ambient.json", {
            "k0": {"free_rank": 0, "torsion": ["2"]},
            "k1": {"free_rank": 1, "torsion": []},
        })
        code, out = run(capsys, "orbit-break", "--regime", "point", "--ambient", path)
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["k0"] == {"free_rank": 0, "torsion": ["2"]}
        assert doc["k1"] == {"free_rank": 0, "torsion": []}

    def test_rr0(self, capsys, tmp_path):
        dg = write(tmp_path, "dg.json", GOLDEN)
        code, out = run(capsys, "orbit-break", "--regime", "rr0",
                        "--t", '{"free_rank": 0, "torsion": ["2"]}',
                        "--dimension-group", dg,
                        "--g1", '{"free_rank": 0, "torsion": ["3"]}')
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["k0"] == {"free_rank": 2, "torsion": ["2"]}
        assert doc["cone"]["tag"] == "OrderFromQuotient"
        assert doc["unit"] == ["1", "1", "0"]


class TestDimgroupCommand:
    def test_positivity_positive(self, capsys, tmp_path):
        path = write(tmp_path, "dg.json", GOLDEN)
        code, out = run(capsys, "dimgroup", path, "--op", "positivity",
                        "--element", "[1, -1]")
        assert code == EXIT_OK
        assert json.loads(out)["positivity"] == "positive"

    def test_positivity_undetermined_exit_three(self, capsys, tmp_path):
        path = write(tmp_path, "dg.json", GOLDEN)
        code, out = run(capsys, "dimgroup", path, "--op", "positivity",
                        "--element", "[-5, 8]", "--max-iter", "1")
        assert code == EXIT_UNDETERMINED
        assert json.loads(out)["positivity"] == "undetermined"

    def test_state(self, capsys, tmp_path):
        path = write(tmp_path, "dg.json", GOLDEN)
        code, out = run(capsys, "dimgroup", path, "--op", "state",
                        "--element", "[1, 1]", "--depth", "5")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["lo"] == "1" and doc["hi"] == "1"

    def test_underlying(self, capsys, tmp_path):
        path = write(tmp_path, "dg.json",
                     {"k": 1, "step": {"rows": 1, "cols": 1, "entries": [["2"]]},
                      "unit": ["1"]})
        code, out = run(capsys, "dimgroup", path, "--op", "underlying")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["finitely_generated"] is False

    def test_non_primitive_rejected(self, capsys, tmp_path):
        path = write(tmp_path, "dg.json",
                     {"k": 2, "step": {"rows": 2, "cols": 2,
                                       "entries": [["0", "1"], ["1", "0"]]},
                      "unit": ["1", "1"]})
        code, _ = run(capsys, "dimgroup", path, "--op", "underlying")
        assert code == EXIT_INPUT_ERROR


class TestElliottCommand:
    def test_compare_equal_via_two_routes(self, capsys, tmp_path):
        code, orbit_out = run(capsys, "orbit-break", "--regime", "pointlike",
                              "--g0", TRIVIAL_GROUP, "--g1", TRIVIAL_GROUP)
        assert code == EXIT_OK
        a = tmp_path / "a.json"
        a.write_text(orbit_out)
        code, inv_out = run(capsys, "elliott", "build-pointlike",
                            "--g0", TRIVIAL_GROUP, "--g1", TRIVIAL_GROUP, "--k", "1")
        assert code == EXIT_OK
        b = tmp_path / "b.json"
        b.write_text(inv_out)
        code, out = run(capsys, "elliott", "compare", str(a), str(b))
        assert code == EXIT_OK
        assert json.loads(out)["equal"] is True

    def test_compare_unequal_exit_one(self, capsys, tmp_path):
        code, a_out = run(capsys, "elliott", "build-pointlike",
                          "--g0", TRIVIAL_GROUP, "--g1", TRIVIAL_GROUP, "--k", "1")
        code, b_out = run(capsys, "elliott", "build-pointlike",
                          "--g0", TRIVIAL_GROUP, "--g1", TRIVIAL_GROUP, "--k", "2")
        a = tmp_path / "a.json"
        a.write_text(a_out)
        b = tmp_path / "b.json"
        b.write_text(b_out)
        code, out = run(capsys, "elliott", "compare", str(a), str(b))
        assert code == EXIT_INPUT_ERROR
        assert json.loads(out)["equal"] is False


class TestVerifyCommand:
    def test_companion_table(self, capsys):
        code, out = run(capsys, "verify", "companion", "--max-n", "6")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert len(lines) == 6  # n = 2..6 plus the summary line
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert lines[-1].endswith("passed")

    def test_json_format(self, capsys):
        code, out = run(capsys, "verify", "companion", "--max-n", "4",
                        "--format", "json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["failures"] == 0
        assert doc["total"] == 3

    def test_unknown_suite(self, capsys):
        code, _ = run(capsys, "verify", "bogus")
        assert code == EXIT_INPUT_ERROR


class TestArgumentHandling:
    def test_unknown_flag_rejected(self, capsys, tmp_path):
        path = write(tmp_path, "m.json",
                     {"rows": 1, "cols": 1, "entries": [["1"]]})
        code, _ = run(capsys, "snf", path, "--frobnicate")
        assert code == EXIT_INPUT_ERROR

    def test_output_file(self, capsys, tmp_path):
        path = write(tmp_path, "m.json",
                     {"rows": 1, "cols": 1, "entries": [["1"]]})
        out_path = tmp_path / "result.json"
        code, out = run(capsys, "snf", path, "-o", str(out_path))
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(out_path.read_text())["d"]["entries"] == [["1"]]

    def test_stdin_input(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(
            '{"rows": 1, "cols": 1, "entries": [["5"]]}'))
        code, out = run(capsys, "snf", "-")
        assert code == EXIT_OK
        assert json.loads(out)["d"]["entries"] == [["5"]]
