import json

import pytest

from cliffchar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCharpolyCommand:
    def test_published_values_text(self, capsys):
        code, out, _ = run(capsys, "charpoly", "--signature", "5,0", "e1 + e5 + e15")
        assert code == 0
        assert "C = [0,4,0,-6,0,4,0,-1]" in out

    def test_scalar_one(self, capsys):
        code, out, _ = run(capsys, "charpoly", "--signature", "2,0", "1")
        assert code == 0
        assert "C = [2,-1]" in out

    def test_json_document_shape(self, capsys):
        code, out, _ = run(
            capsys, "charpoly", "--signature", "5,0", "--json", "e1 + e5 + e15"
        )
        assert code == 0
        doc = json.loads(out)
        assert list(doc)[:6] == ["signature", "input", "N", "C", "det", "method"]
        assert doc["signature"] == [5, 0]
        assert doc["N"] == 8
        assert doc["C"] == ["0", "4", "0", "-6", "0", "4", "0", "-1"]
        assert doc["det"] == "1"

    def test_roundtrip_input_echo(self, capsys):
        _, out, _ = run(
            capsys, "charpoly", "--signature", "3,0", "--json", "2*e1 - 1/3*e23 + 4"
        )
        doc = json.loads(out)
        _, out2, _ = run(capsys, "charpoly", "--signature", "3,0", "--json", doc["input"])
        doc2 = json.loads(out2)
        assert doc2["C"] == doc["C"]
        assert doc2["input"] == doc["input"]

    @pytest.mark.parametrize("method", ["recursive", "closed", "explicit", "interp", "oracle"])
    def test_methods_agree(self, capsys, method):
        code, out, _ = run(
            capsys, "charpoly", "--signature", "4,1", "--method", method,
            "e1 + 2*e23 - e45",
        )
        assert code == 0
        first_line = out.splitlines()[0]
        assert first_line.startswith("C = ")

    def test_method_all_cross_checks(self, capsys):
        code, out, _ = run(
            capsys, "charpoly", "--signature", "3,3", "--method", "all",
            "1 + e1 - 2*e26 + 3*e456",
        )
        assert code == 0

    def test_unsupported_dimension_exit_2(self, capsys):
        code, _, err = run(
            capsys, "charpoly", "--signature", "4,3", "--method", "closed", "e1"
        )
        assert code == 2
        assert "n <= 6" in err

    def test_parse_error_exit_1(self, capsys):
        code, _, err = run(capsys, "charpoly", "--signature", "2,0", "e1 + + *")
        assert code == 1
        assert "position" in err

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("e1 + e5 + e15"))
        code, out, _ = run(capsys, "charpoly", "--signature", "5,0", "--stdin")
        assert code == 0
        assert "C = [0,4,0,-6,0,4,0,-1]" in out


class TestDetInverseCommands:
    def test_det(self, capsys):
        code, out, _ = run(capsys, "det", "--signature", "2,0", "e1")
        assert code == 0
        assert out.strip() == "-1"

    def test_inverse(self, capsys):
        code, out, _ = run(capsys, "inverse", "--signature", "2,0", "e1+e2")
        assert code == 0
        assert out.strip() == "1/2*e1 + 1/2*e2"

    def test_inverse_json_includes_adjugate_data(self, capsys):
        code, out, _ = run(capsys, "inverse", "--signature", "2,0", "--json", "e1+e2")
        doc = json.loads(out)
        assert doc["inverse"] == "1/2*e1 + 1/2*e2"
        assert doc["det"] == "-2"

    def test_singular_exit_4(self, capsys):
        code, _, err = run(capsys, "inverse", "--signature", "1,1", "e1 + e2")
        assert code == 4
        assert "determinant 0" in err


class TestVerifyCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "3", "--trials", "5", "--seed", "11")
        assert code == 0
        report = json.loads(out)
        assert report["total_mismatches"] == 0
        assert len(report["signatures"]) == 9
        assert report["golden"]["mismatches"] == 0

    def test_deterministic_given_seed(self, capsys):
        _, out1, _ = run(capsys, "verify", "--max-n", "2", "--trials", "4", "--seed", "3")
        _, out2, _ = run(capsys, "verify", "--max-n", "2", "--trials", "4", "--seed", "3")
        assert out1 == out2

    def test_trivial_run(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "1", "--trials", "1", "--seed", "0")
        assert code == 0

    def test_env_var_seed(self, capsys, monkeypatch):
        monkeypatch.setenv("CLIFFCHAR_SEED", "99")
        from cliffchar.cli import build_parser

        args = build_parser().parse_args(["verify", "--max-n", "1", "--trials", "1"])
        assert args.seed == 99

    def test_corpus_file(self, capsys, tmp_path):
        corpus = tmp_path / "cases.jsonl"
        lines = [
            json.dumps(
                {
                    "signature": [5, 0],
                    "expr": "e1 + e5 + e15",
                    "expect_C": ["0", "4", "0", "-6", "0", "4", "0", "-1"],
                }
            ),
            json.dumps({"signature": [2, 0], "expr": "1", "expect_C": ["2", "-1"]}),
        ]
        corpus.write_text("\n".join(lines) + "\n")
        code, out, _ = run(
            capsys, "verify", "--max-n", "1", "--trials", "1", "--seed", "0",
            "--corpus", str(corpus),
        )
        assert code == 0
        report = json.loads(out)
        assert report["corpus"] == {"cases": 2, "mismatches": 0, "failures": []}

    def test_corpus_mismatch_exit_3(self, capsys, tmp_path):
        corpus = tmp_path / "bad.jsonl"
        corpus.write_text(
            json.dumps({"signature": [2, 0], "expr": "1", "expect_C": ["2", "-2"]}) + "\n"
        )
        code, out, _ = run(
            capsys, "verify", "--max-n", "1", "--trials", "1", "--seed", "0",
            "--corpus", str(corpus),
        )
        assert code == 3
        report = json.loads(out)
        assert report["corpus"]["mismatches"] == 1


class TestBenchCommand:
    def test_csv_shape(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--signature", "4,1", "--trials", "3", "--seed", "1"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "method,trial,micros"
        assert len(lines) == 1 + 3 * 2  # recursive and closed per trial
        assert lines[1].startswith("recursive,0,")

    def test_zero_trials_header_only(self, capsys):
        code, out, _ = run(capsys, "bench", "--signature", "1,1", "--trials", "0")
        assert code == 0
        assert out.strip() == "method,trial,micros"

    def test_method_selection(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--signature", "3,3", "--trials", "2",
            "--methods", "recursive,closed",
        )
        assert code == 0
        methods = {line.split(",")[0] for line in out.strip().splitlines()[1:]}
        assert methods == {"recursive", "closed"}

    def test_unknown_method_exit_2(self, capsys):
        code, _, err = run(
            capsys, "bench", "--signature", "2,0", "--trials", "1", "--methods", "magic"
        )
        assert code == 2

    def test_inapplicable_method_exit_2(self, capsys):
        code, _, err = run(
            capsys, "bench", "--signature", "3,3", "--trials", "1", "--methods", "explicit"
        )
        assert code == 2
