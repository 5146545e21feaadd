"""End-to-end command-line interface tests driven through main(argv)."""

import csv
import json

import pytest

from eqlines import lineset
from eqlines.cli import main
from eqlines.graph6 import encode_graph6


def petersen_bytes() -> bytes:
    adj = [0] * 10
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    for a, b in edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return encode_graph6(10, adj)


@pytest.fixture(scope="module")
def tremain_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "tremain.json"
    assert main(["construct", "tremain14", "-o", str(path)]) == 0
    return str(path)


@pytest.fixture(scope="module")
def asche_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "asche.json"
    assert main(["construct", "asche72", "-o", str(path)]) == 0
    return str(path)


class TestBound:
    @pytest.mark.parametrize(
        "rank,alpha,text",
        [
            ("42", "1/7", "R(42, 1/7) = 288 (floor 288)"),
            ("41", "1/7", "R(41, 1/7) = 246 (floor 246)"),
            ("40", "1/7", "R(40, 1/7) = 640/3 (floor 213)"),
            ("39", "1/7", "R(39, 1/7) = 936/5 (floor 187)"),
            ("20", "1/5", "R(20, 1/5) = 96 (floor 96)"),
            ("19", "1/5", "R(19, 1/5) = 76 (floor 76)"),
        ],
    )
    def test_values(self, capsys, rank, alpha, text):
        assert main(["bound", rank, alpha]) == 0
        assert capsys.readouterr().out.strip() == text

    def test_json(self, capsys):
        assert main(["bound", "40", "1/7", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {
            "alpha": "1/7",
            "exact": "640/3",
            "floor": 213,
            "rank": 40,
        }

    def test_out_of_hypothesis(self, capsys):
        assert main(["bound", "49", "1/7"]) == 2
        assert "error" in capsys.readouterr().err

    def test_bad_alpha(self):
        with pytest.raises(SystemExit) as exc:
            main(["bound", "40", "0.14"])
        assert exc.value.code == 2


class TestInfo:
    def test_range(self, capsys):
        assert main(["info", "18"]) == 0
        assert capsys.readouterr().out.strip() == "N(18) in [56, 60]"

    def test_exact(self, capsys):
        assert main(["info", "7"]) == 0
        assert capsys.readouterr().out.strip() == "N(7) = 28"

    def test_json(self, capsys):
        assert main(["info", "23", "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {
            "d": 23,
            "lower": 276,
            "upper": 276,
        }

    def test_out_of_table(self, capsys):
        assert main(["info", "44"]) == 2
        assert main(["info", "0"]) == 2


class TestConstruct:
    def test_tremain_human(self, capsys):
        assert main(["construct", "tremain14"]) == 0
        out = capsys.readouterr().out
        assert "28 lines, rank 14, angle 1/5" in out

    def test_octads_json(self, capsys):
        assert main(["construct", "octads", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["count"] == 759
        assert doc["octads"][0] == [1, 2, 3, 4, 5, 6, 7, 8]

    def test_octads_human(self, capsys):
        assert main(["construct", "octads"]) == 0
        assert "759 blocks" in capsys.readouterr().out

    def test_output_file_round_trip(self, tmp_path, capsys):
        path = tmp_path / "taylor.json"
        assert main(["construct", "taylor90", "-o", str(path)]) == 0
        ls = lineset.load(str(path))
        assert ls.n == 90 and ls.rank == 20

    def test_json_deterministic(self, capsys):
        assert main(["construct", "taylor90", "--json"]) == 0
        first = capsys.readouterr().out
        assert main(["construct", "taylor90", "--json"]) == 0
        second = capsys.readouterr().out
        assert first == second


class TestFromGraph6:
    def test_petersen(self, tmp_path, capsys):
        g6 = tmp_path / "petersen.g6"
        g6.write_bytes(petersen_bytes())
        code = main(["construct", "from-graph6", str(g6), "--angle", "1/3"])
        captured = capsys.readouterr()
        assert code == 0
        assert "10 lines, rank 5, angle 1/3" in captured.out
        assert "strongly regular: SRG(10, 3, 0, 1)" in captured.err

    def test_not_strongly_regular_warning(self, tmp_path, capsys):
        # path on 3 vertices
        g6 = tmp_path / "p3.g6"
        g6.write_bytes(encode_graph6(3, [0b010, 0b101, 0b010]))
        code = main(["construct", "from-graph6", str(g6), "--angle", "1/3"])
        captured = capsys.readouterr()
        assert code == 0
        assert "not strongly regular" in captured.err

    def test_incompatible_angle_fails_validation(self, tmp_path, capsys):
        g6 = tmp_path / "petersen.g6"
        g6.write_bytes(petersen_bytes())
        assert main(["construct", "from-graph6", str(g6), "--angle", "1/2"]) == 1
        assert "not positive semidefinite" in capsys.readouterr().err

    def test_angle_required(self, tmp_path):
        g6 = tmp_path / "petersen.g6"
        g6.write_bytes(petersen_bytes())
        with pytest.raises(SystemExit) as exc:
            main(["construct", "from-graph6", str(g6)])
        assert exc.value.code == 2

    def test_file_required(self, capsys):
        assert main(["construct", "from-graph6", "--angle", "1/3"]) == 2

    def test_missing_file(self, capsys):
        assert main(["construct", "from-graph6", "no.g6", "--angle", "1/3"]) == 2
        assert "no such file" in capsys.readouterr().err

    def test_malformed_file(self, tmp_path, capsys):
        g6 = tmp_path / "bad.g6"
        g6.write_bytes(b"B")  # n=3 but no edge bytes
        assert main(["construct", "from-graph6", str(g6), "--angle", "1/3"]) == 2
        assert "malformed" in capsys.readouterr().err


class TestValidate:
    def test_pass(self, tremain_file, capsys):
        assert main(["validate", tremain_file]) == 0
        out = capsys.readouterr().out
        assert "PASS: 28 lines, rank 14, angle 1/5" in out
        assert out.count(": ok") == 5

    def test_json(self, tremain_file, capsys):
        assert main(["validate", tremain_file, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["passed"] is True
        assert doc["n"] == 28
        assert len(doc["checks"]) == 5

    def test_fail_not_psd(self, tmp_path, capsys):
        # 3 lines at pairwise angle arccos(2/3) cannot exist in any rank:
        # the all-minus sign triangle at alpha 2/3 is not PSD
        doc = {
            "n": 3,
            "angle": "2/3",
            "signs": [[0, -1, -1], [-1, 0, -1], [-1, -1, 0]],
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        assert main(["validate", str(path)]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out

    def test_gram_form_accepted(self, tmp_path, capsys):
        doc = {
            "n": 2,
            "angle": "1/3",
            "gram": [["1", "1/3"], ["1/3", "1"]],
        }
        path = tmp_path / "gram.json"
        path.write_text(json.dumps(doc))
        assert main(["validate", str(path)]) == 0

    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "junk.json"
        path.write_text("{not json")
        assert main(["validate", str(path)]) == 2


class TestSaturate:
    BASIS = ",".join(str(i) for i in range(2, 29, 2))

    def test_named_basis_json(self, tremain_file, capsys):
        code = main(
            ["saturate", tremain_file, "--basis", self.BASIS, "--json"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["basis"] == list(range(2, 29, 2))
        assert doc["candidate_count"] == 378
        assert doc["clique_number"] == 14
        assert doc["N"] == 28
        assert doc["saturated"] is True
        assert doc["total_patterns"] == 1 << 13

    def test_human_output(self, tremain_file, capsys):
        assert main(["saturate", tremain_file, "--basis", self.BASIS]) == 0
        captured = capsys.readouterr()
        assert "candidates: 378" in captured.out
        assert "clique number: 14" in captured.out
        assert "N = 14 + 14 = 28" in captured.out
        assert "saturated: yes" in captured.out
        assert "patterns:" in captured.err  # progress went to stderr

    def test_json_byte_identical(self, tremain_file, capsys):
        argv = ["saturate", tremain_file, "--basis", self.BASIS, "--json"]
        assert main(argv) == 0
        first = capsys.readouterr()
        assert main(argv) == 0
        second = capsys.readouterr()
        assert first.out == second.out
        assert first.err == second.err == ""

    def test_engines_agree_bytewise(self, tremain_file, capsys):
        assert main(["saturate", tremain_file, "--json", "--engine", "batch"]) == 0
        batch = capsys.readouterr().out
        assert main(["saturate", tremain_file, "--json", "--engine", "gray"]) == 0
        gray = capsys.readouterr().out
        assert batch == gray

    def test_work_ceiling_refusal(self, tremain_file, capsys):
        code = main(["saturate", tremain_file, "--work-ceiling", "100"])
        assert code == 2
        err = capsys.readouterr().err
        assert "refusing" in err and "--force" in err

    def test_work_ceiling_power_syntax_and_force(self, tremain_file, capsys):
        code = main(
            ["saturate", tremain_file, "--work-ceiling", "2^6", "--force",
             "--basis", self.BASIS, "--json"]
        )
        assert code == 0
        assert json.loads(capsys.readouterr().out)["saturated"] is True

    def test_export_graph(self, tremain_file, tmp_path, capsys):
        clq = tmp_path / "compat.clq"
        code = main(
            ["saturate", tremain_file, "--basis", self.BASIS,
             "--export-graph", str(clq), "--json"]
        )
        assert code == 0
        lines = clq.read_text().splitlines()
        header = next(l for l in lines if l.startswith("p "))
        fields = header.split()
        assert fields[:3] == ["p", "edge", "378"]
        m = int(fields[3])
        edge_lines = [l for l in lines if l.startswith("e ")]
        assert len(edge_lines) == m > 0

    def test_rank_deficient_basis_rejected(self, tremain_file, capsys):
        # 1-based odd labels = complementary alternation, rank 13
        basis = ",".join(str(i) for i in range(1, 28, 2))
        assert main(["saturate", tremain_file, "--basis", basis]) == 2
        assert "error" in capsys.readouterr().err

    def test_zero_index_rejected(self, tremain_file):
        with pytest.raises(SystemExit) as exc:
            main(["saturate", tremain_file, "--basis", "0,1,2"])
        assert exc.value.code == 2


class TestSearch:
    ARGS = ["--rank", "18", "--runs", "60", "--seed", "0"]

    def test_json_document(self, asche_file, capsys):
        assert main(["search", asche_file, *self.ARGS, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["runs"] == 60
        assert doc["seed"] == 0
        best = doc["best"]
        assert best["run"] == 11
        assert best["closure_size"] == 56
        assert best["rank"] == 18
        assert len(best["closure"]) == 56
        assert min(best["closure"]) >= 1
        assert len(doc["complement"]) == 6
        assert all(len(v) == 24 for v in doc["complement"])

    def test_human_output(self, asche_file, capsys):
        assert main(["search", asche_file, *self.ARGS]) == 0
        captured = capsys.readouterr()
        assert "best closure: 56 lines of rank 18 at run 11" in captured.out
        assert "orthogonal complement of the best closure:" in captured.out
        assert "histogram (closure size: runs):" in captured.out
        assert "runs:" in captured.err

    def test_csv_log(self, asche_file, tmp_path, capsys):
        log = tmp_path / "runs.csv"
        assert main(["search", asche_file, *self.ARGS, "--csv", str(log)]) == 0
        with open(log, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["run", "seed", "closure_size", "rank_ok"]
        assert len(rows) == 61
        assert [r[0] for r in rows[1:]] == [str(i) for i in range(60)]
        assert rows[12][2] == "56" and rows[12][3] == "true"

    def test_emit_best_round_trip(self, asche_file, tmp_path, capsys):
        best = tmp_path / "best56.json"
        assert main(
            ["search", asche_file, *self.ARGS, "--emit-best", str(best)]
        ) == 0
        capsys.readouterr()
        assert main(["validate", str(best)]) == 0
        ls = lineset.load(str(best))
        assert ls.n == 56 and ls.rank == 18

    def test_json_byte_identical(self, asche_file, capsys):
        argv = ["search", asche_file, *self.ARGS, "--json", "--threads", "2"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        argv[-1] = "3"
        assert main(argv) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_bad_rank(self, asche_file, capsys):
        assert main(
            ["search", asche_file, "--rank", "0", "--runs", "1", "--seed", "0"]
        ) == 2
        assert main(
            ["search", asche_file, "--rank", "20", "--runs", "1", "--seed", "0"]
        ) == 2

    def test_hex_seed_accepted(self, asche_file, capsys):
        assert main(
            ["search", asche_file, "--rank", "18", "--runs", "2",
             "--seed", "0xDEADBEEF", "--json"]
        ) == 0
        assert json.loads(capsys.readouterr().out)["seed"] == 0xDEADBEEF


class TestParser:
    def test_no_command(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_ceiling(self, tremain_file):
        with pytest.raises(SystemExit) as exc:
            main(["saturate", tremain_file, "--work-ceiling", "many"])
        assert exc.value.code == 2
