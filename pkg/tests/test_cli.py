import json

import pytest

from fredpairs.cli import main

W2 = {"dim_x": 2, "dim_y": 1, "s": [[1, 0]], "t": [[0], [1]]}
NON_COMPLEX_CHAIN = {"dims": [1, 1, 1], "maps": [[[1]], [[1]]]}


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPairReport:
    def test_w2(self, tmp_path, capsys):
        code, out, err = run(capsys, ["pair-report", write(tmp_path, "w2.json", W2)])
        assert code == 0 and err == ""
        report = json.loads(out)
        assert report == {
            "a": 0,
            "b": 0,
            "c": 0,
            "d": 1,
            "index": 1,
            "dim_range_st": 0,
            "dim_range_ts": 1,
        }

    def test_zero_maps(self, tmp_path, capsys):
        obj = {"dim_x": 3, "dim_y": 1, "s": [[0, 0, 0]], "t": [[0], [0], [0]]}
        code, out, _ = run(capsys, ["pair-report", write(tmp_path, "z.json", obj)])
        assert code == 0
        assert json.loads(out)["index"] == 2

    def test_zero_denominator_rejected(self, tmp_path, capsys):
        obj = {"dim_x": 1, "dim_y": 1, "s": [["1/0"]], "t": [[0]]}
        code, out, err = run(capsys, ["pair-report", write(tmp_path, "bad.json", obj)])
        assert code == 2
        assert out == "" and "denominator" in err

    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, out, err = run(capsys, ["pair-report", str(path)])
        assert code == 2 and err

    def test_shape_mismatch(self, tmp_path, capsys):
        obj = {"dim_x": 2, "dim_y": 2, "s": [[1, 0]], "t": [[0], [1]]}
        code, _, err = run(capsys, ["pair-report", write(tmp_path, "bad.json", obj)])
        assert code == 2 and err


class TestChainReport:
    def test_non_complex(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, ["chain-report", write(tmp_path, "c.json", NON_COMPLEX_CHAIN)]
        )
        assert code == 0
        report = json.loads(out)
        assert report["index"] == 1
        assert report["d"] == [0, -1, 0]
        assert report["euler_characteristic"] == 1


class TestVerify:
    def test_w2_thm34(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, ["verify", write(tmp_path, "w2.json", W2), "--thm34"]
        )
        assert code == 0
        reports = json.loads(out)["reports"]
        assert [r["name"] for r in reports] == ["theorem_3_4"]
        assert reports[0]["passed"]

    def test_chain_all(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, ["verify", write(tmp_path, "c.json", NON_COMPLEX_CHAIN), "--all"]
        )
        assert code == 0
        names = [r["name"] for r in json.loads(out)["reports"]]
        assert names == ["remark_2_3", "theorem_4_2", "theorem_4_4", "theorem_3_4", "theorem_3_6"]

    def test_chain_checks_on_pair_rejected(self, tmp_path, capsys):
        code, _, err = run(
            capsys, ["verify", write(tmp_path, "w2.json", W2), "--thm42"]
        )
        assert code == 2 and err


class TestFuzz:
    def test_deterministic_output(self, tmp_path, capsys, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code1, out1, _ = run(capsys, ["fuzz", "--seed", "7", "--count", "8"])
        code2, out2, _ = run(capsys, ["fuzz", "--seed", "7", "--count", "8"])
        assert code1 == code2 == 0
        assert out1 == out2

    def test_lines_are_json(self, tmp_path, capsys, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, out, _ = run(capsys, ["fuzz", "--seed", "3", "--count", "4"])
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert len(lines) == 5  # 4 instances + summary
        assert lines[-1]["summary"]["passed"] == 4
        kinds = [line["kind"] for line in lines[:-1]]
        assert set(kinds) == {"pair", "chain"}

    def test_empty_run(self, capsys):
        code, out, _ = run(capsys, ["fuzz", "--count", "0"])
        assert code == 0
        assert json.loads(out)["summary"]["count"] == 0


class TestPinv:
    def test_scalar(self, tmp_path, capsys):
        code, out, _ = run(capsys, ["pinv", write(tmp_path, "m.json", [[2]])])
        assert code == 0
        assert json.loads(out) == [["1/2"]]

    def test_row_vector(self, tmp_path, capsys):
        code, out, _ = run(capsys, ["pinv", write(tmp_path, "m.json", [[1, 1]])])
        assert code == 0
        assert json.loads(out) == [["1/2"], ["1/2"]]

    def test_zero_matrix(self, tmp_path, capsys):
        code, out, _ = run(capsys, ["pinv", write(tmp_path, "m.json", [[0, 0], [0, 0]])])
        assert code == 0
        assert json.loads(out) == [[0, 0], [0, 0]]
