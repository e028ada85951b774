import json

import pytest

from hyperorient import (
    GenSpec,
    ParseError,
    PreconditionError,
    bf_partition_connected,
    format_hypergraph,
    format_orientation,
    gen_instance,
    gen_orientation,
    hyperarc_connectivity,
    hypergraph,
    parse_hypergraph,
    parse_orientation,
)
from hyperorient.cli import cli


class TestGenerator:
    def test_triangle_is_the_only_3_cycle(self):
        h = gen_instance(GenSpec(n=3, k=1, seed=5))
        assert h.m == 3
        assert {e.members() for e in h.edges} == {(0, 1), (1, 2), (0, 2)}

    def test_doubled_triangle_is_2_2_connected(self):
        h = gen_instance(GenSpec(n=3, k=2, seed=1))
        assert h.m == 6
        assert bf_partition_connected(h, 2)[0]

    def test_generator_soundness(self):
        for seed in range(25):
            spec = GenSpec(
                n=3 + seed % 6,
                k=1 + seed % 3,
                extra_edges=seed % 4,
                max_edge_size=min(4, 3 + seed % 6),
                seed=seed,
            )
            h = gen_instance(spec)
            assert bf_partition_connected(h, spec.k)[0]

    def test_seed_determinism(self):
        spec = GenSpec(n=8, k=2, extra_edges=3, max_edge_size=4, seed=77)
        assert gen_instance(spec) == gen_instance(spec)

    def test_spec_validation(self):
        with pytest.raises(PreconditionError):
            GenSpec(n=2, k=1)
        with pytest.raises(PreconditionError):
            GenSpec(n=4, k=0)
        with pytest.raises(PreconditionError):
            GenSpec(n=4, k=1, max_edge_size=5)

    def test_orientation_modes(self):
        h = gen_instance(GenSpec(n=6, k=2, extra_edges=2, seed=3))
        o1 = gen_orientation(h, seed=9)
        assert o1 == gen_orientation(h, seed=9)
        assert all(o1.heads[e] in h.edges[e] for e in range(h.m))
        o2 = gen_orientation(h, mode="min-head")
        assert o2.heads == tuple(min(e) for e in h.edges)
        with pytest.raises(PreconditionError):
            gen_orientation(h, mode="roulette")


class TestFormats:
    def test_hypergraph_roundtrip(self):
        h = hypergraph(5, [(0, 1, 4), (2, 3), (2, 3)])
        assert parse_hypergraph(format_hypergraph(h)) == h

    def test_orientation_roundtrip(self):
        h = hypergraph(4, [(0, 1, 2), (1, 3)])
        from hyperorient import Orientation

        o = Orientation(h, (2, 3))
        assert parse_orientation(format_orientation(o), h) == o

    def test_comments_and_blanks(self):
        text = "# instance\nn 3\n\ne 0 1  # pair\ne 1 2\n"
        assert parse_hypergraph(text).m == 2

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_hypergraph("n 3\ne 0\n")
        with pytest.raises(ParseError, match="line 1"):
            parse_hypergraph("e 0 1\nn 3\n")
        with pytest.raises(ParseError, match="line 3"):
            parse_hypergraph("n 3\ne 0 1\nq 1 2\n")
        h = hypergraph(3, [(0, 1), (1, 2)])
        with pytest.raises(ParseError, match="line 2"):
            parse_orientation("o 0 1\no 0 0\n", h)
        with pytest.raises(ParseError, match="no orientation for edge 1"):
            parse_orientation("o 0 1\n", h)


def run_cli(capsys, *argv):
    code = cli(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCli:
    def write_three_cycle(self, tmp_path):
        hg = tmp_path / "tri.hg"
        orf = tmp_path / "tri.or"
        hg.write_text("n 3\ne 0 1\ne 1 2\ne 0 2\n")
        orf.write_text("o 0 1\no 1 2\no 2 0\n")
        return str(hg), str(orf)

    def test_check_prints_connectivity(self, capsys, tmp_path):
        hg, orf = self.write_three_cycle(tmp_path)
        code, out, _ = run_cli(capsys, "check", "--input", hg, "--orientation", orf)
        assert code == 0 and out.strip() == "1"
        code, out, _ = run_cli(capsys, "check", "--input", hg, "--orientation", orf, "--json")
        assert code == 0 and json.loads(out) == {"lambda": 1}

    def test_families_json(self, capsys, tmp_path):
        hg, orf = self.write_three_cycle(tmp_path)
        code, out, _ = run_cli(
            capsys, "families", "--input", hg, "--orientation", orf, "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["k"] == 1 and payload["m_minus"] == [[1], [2]]

    def test_gen_orient_verify_roundtrip(self, capsys, tmp_path):
        hg = tmp_path / "gen.hg"
        code, _, _ = run_cli(
            capsys, "gen", "--n", "6", "--k", "2", "--extra-edges", "2",
            "--seed", "4", "--out", str(hg),
        )
        assert code == 0
        orf = tmp_path / "start.or"
        trace = tmp_path / "run.trace"
        code, out, _ = run_cli(
            capsys, "orient", "--input", str(hg), "--target-k", "2", "--seed", "11",
            "--trace-out", str(trace), "--orientation-out", str(orf), "--json",
        )
        assert code == 0
        summary = json.loads(out)
        assert summary["lambda_final"] == 2
        code, out, _ = run_cli(
            capsys, "verify", "--input", str(hg), "--orientation", str(orf), str(trace)
        )
        assert code == 0 and out.strip() == "trace OK"

    def test_verify_rejects_tampered_trace(self, capsys, tmp_path):
        hg = tmp_path / "gen.hg"
        run_cli(capsys, "gen", "--n", "4", "--k", "1", "--seed", "2", "--out", str(hg))
        orf = tmp_path / "start.or"
        trace = tmp_path / "run.trace"
        code, _, _ = run_cli(
            capsys, "orient", "--input", str(hg), "--target-k", "1", "--seed", "3",
            "--trace-out", str(trace), "--orientation-out", str(orf),
        )
        assert code == 0
        lines = trace.read_text().splitlines()
        if len(lines) > 2:  # bump a recorded connectivity value
            rec = json.loads(lines[1])
            rec["lambda"] += 1
            lines[1] = json.dumps(rec)
            trace.write_text("\n".join(lines) + "\n")
            code, out, _ = run_cli(
                capsys, "verify", "--input", str(hg), "--orientation", str(orf), str(trace)
            )
            assert code == 1 and "FAIL" in out

    def test_orient_infeasible_exits_one(self, capsys, tmp_path):
        hg, orf = self.write_three_cycle(tmp_path)
        code, _, err = run_cli(
            capsys, "orient", "--input", hg, "--orientation", orf, "--target-k", "2",
            "--trace-out", str(tmp_path / "t.trace"),
        )
        assert code == 1 and "error" in err

    def test_usage_error_exits_two(self, capsys):
        assert run_cli(capsys, "check")[0] == 2
        assert run_cli(capsys, "frobnicate")[0] == 2

    def test_missing_file_exits_one(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "check", "--input", str(tmp_path / "nope.hg"),
            "--orientation", str(tmp_path / "nope.or"),
        )
        assert code == 1 and "error" in err

    def test_oracle_operations(self, capsys, tmp_path):
        hg, orf = self.write_three_cycle(tmp_path)
        code, out, _ = run_cli(
            capsys, "oracle", "lambda", "--input", hg, "--orientation", orf, "--json"
        )
        assert code == 0 and json.loads(out) == {"lambda": 1}
        code, out, _ = run_cli(
            capsys, "oracle", "partition-connected", "--input", hg, "--k", "2", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["partition_connected"] is False and "witness" in payload
        code, out, _ = run_cli(
            capsys, "oracle", "orientation-exists", "--input", hg, "--k", "1", "--json"
        )
        assert code == 0 and json.loads(out)["orientation_exists"] is True
        code, out, _ = run_cli(
            capsys, "oracle", "separator", "--input", hg, "--orientation", orf,
            "--side", "out", "--source", "0", "--sinks", "1", "--json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["value"] == 1 and payload["minimal"] == [0]
        code, out, _ = run_cli(
            capsys, "oracle", "safe-source", "--input", hg, "--orientation", orf,
            "--set", "1", "--vertex", "1", "--json",
        )
        assert code == 0 and json.loads(out) == {"safe": False}
