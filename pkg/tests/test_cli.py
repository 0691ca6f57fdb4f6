"""End-to-end tests for the command-line interface (exit codes and output)."""

import json

import pytest

from signedpaths import cli
from signedpaths.eulerian import IdentityReport, IdentityRow


def run_ok(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr()
    assert code == 0, out.err
    return out.out


def run_err(capsys, argv, code=2):
    got = cli.run(argv)
    out = capsys.readouterr()
    assert got == code
    return out.err


class TestEulerianCommand:
    def test_table(self, capsys):
        out = run_ok(capsys, ["eulerian", "--kind", "A", "--n", "3"])
        assert out == "1 4 1\n"

    def test_json(self, capsys):
        out = run_ok(
            capsys, ["eulerian", "--kind", "B", "--n", "2", "--format", "json"]
        )
        assert json.loads(out) == {
            "kind": "B",
            "n": 2,
            "method": "formula",
            "coefficients": [1, 6, 1],
        }

    def test_csv(self, capsys):
        out = run_ok(
            capsys, ["eulerian", "--kind", "B", "--n", "2", "--format", "csv"]
        )
        assert out.splitlines() == ["k,count", "0,1", "1,6", "2,1"]

    def test_bruteforce_matches_formula(self, capsys):
        brute = run_ok(
            capsys,
            ["eulerian", "--kind", "D", "--n", "4", "--method", "bruteforce"],
        )
        formula = run_ok(capsys, ["eulerian", "--kind", "D", "--n", "4"])
        assert brute == formula == "1 44 102 44 1\n"

    def test_jobs_do_not_change_output(self, capsys):
        base = run_ok(
            capsys,
            ["eulerian", "--kind", "B", "--n", "4", "--method", "bruteforce"],
        )
        split = run_ok(
            capsys,
            ["eulerian", "--kind", "B", "--n", "4", "--method", "bruteforce",
             "--jobs", "2"],
        )
        assert base == split

    def test_budget_violation(self, capsys):
        err = run_err(
            capsys,
            ["eulerian", "--kind", "B", "--n", "3", "--method", "bruteforce",
             "--max-elements", "10"],
        )
        assert "budget" in err

    def test_type_d_needs_two(self, capsys):
        assert "at least 2" in run_err(capsys, ["eulerian", "--kind", "D", "--n", "1"])


class TestVerifyCommand:
    def test_table_all_hold(self, capsys):
        out = run_ok(capsys, ["verify", "--identity", "main", "--max-n", "6"])
        lines = out.splitlines()
        assert len(lines) == 6
        assert all(": holds (" in line for line in lines)
        assert lines[0].startswith("main at n=1")

    def test_csv(self, capsys):
        out = run_ok(
            capsys,
            ["verify", "--identity", "eulBodd", "--max-n", "3", "--format", "csv"],
        )
        lines = out.splitlines()
        assert lines[0] == "identity,n,index,lhs,rhs,brute,holds"
        assert all(line.endswith("true") for line in lines[1:])
        # the brute column is populated for this identity
        assert all(line.split(",")[5] for line in lines[1:])

    def test_json(self, capsys):
        out = run_ok(
            capsys,
            ["verify", "--identity", "stembridge", "--max-n", "4",
             "--format", "json"],
        )
        data = json.loads(out)
        assert data["identity"] == "stembridge"
        assert data["holds"] is True
        assert [r["n"] for r in data["reports"]] == [2, 3, 4]

    def test_budget_violation(self, capsys):
        err = run_err(
            capsys,
            ["verify", "--identity", "eulBeven", "--max-n", "9",
             "--max-elements", "1000"],
        )
        assert "budget" in err

    def test_max_n_below_minimum(self, capsys):
        err = run_err(capsys, ["verify", "--identity", "stembridge", "--max-n", "1"])
        assert "needs --max-n >= 2" in err

    def test_failure_exits_one(self, capsys, monkeypatch):
        broken = IdentityReport("main", 1, (IdentityRow(0, 1, 2),))
        monkeypatch.setattr(cli, "verify_identity", lambda *a, **k: broken)
        code = cli.run(["verify", "--identity", "main", "--max-n", "1"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAILS" in out
        assert "index 0: lhs=1 rhs=2" in out


class TestBijectionCommand:
    @pytest.mark.parametrize(
        "check, n",
        [("psi", 3), ("theta", 3), ("chi", 3), ("tgdo", 3), ("bijtgsbps", 3)],
    )
    def test_audits_pass(self, capsys, check, n):
        out = run_ok(capsys, ["bijection", "--check", check, "--n", str(n)])
        assert f"{check} at n={n}:" in out
        assert "round trips verified" in out

    def test_chi_needs_two(self, capsys):
        assert "at least 2" in run_err(capsys, ["bijection", "--check", "chi", "--n", "1"])

    def test_budget_violation(self, capsys):
        err = run_err(
            capsys,
            ["bijection", "--check", "psi", "--n", "9", "--max-elements", "100"],
        )
        assert "budget" in err

    def test_broken_bijection_exits_one(self, capsys, monkeypatch):
        from signedpaths import barred

        monkeypatch.setattr(barred, "descB_formula", lambda sbp: -1)
        code = cli.run(["bijection", "--check", "psi", "--n", "2"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAILED" in out


class TestThresholdCommand:
    def test_counts_table(self, capsys):
        out = run_ok(capsys, ["threshold", "--n", "4"])
        assert "labeled threshold graphs on [4]: 46" in out
        assert "unlabeled classes: 8" in out
        assert "by distinct degrees (i=1..n): 2 20 24 0" in out
        assert "by degree-partition descents (k=0..): 8 32 6" in out

    def test_list_only(self, capsys):
        out = run_ok(capsys, ["threshold", "--n", "3", "--list"])
        lines = out.splitlines()
        assert len(lines) == 8
        assert lines[0] == "3;"
        assert all(line.startswith("3;") for line in lines)

    def test_list_with_counts(self, capsys):
        out = run_ok(capsys, ["threshold", "--n", "3", "--list", "--counts"])
        lines = out.splitlines()
        assert "labeled threshold graphs on [3]: 8" in lines[0]
        assert sum(1 for line in lines if line.startswith("3;")) == 8

    def test_json_list(self, capsys):
        out = run_ok(
            capsys,
            ["threshold", "--n", "3", "--list", "--counts", "--format", "json"],
        )
        data = json.loads(out)
        assert data["total"] == 8
        assert len(data["graphs"]) == 8
        assert {"n": 3, "edges": []} in data["graphs"]
        bare = json.loads(
            run_ok(capsys, ["threshold", "--n", "3", "--list", "--format", "json"])
        )
        assert "total" not in bare and len(bare["graphs"]) == 8

    def test_csv(self, capsys):
        out = run_ok(capsys, ["threshold", "--n", "2", "--format", "csv"])
        lines = out.splitlines()
        assert lines[0] == "series,index,value"
        assert "total,,2" in lines

    def test_rejects_nonpositive(self, capsys):
        run_err(capsys, ["threshold", "--n", "0"])

    def test_budget_guards_listing(self, capsys):
        err = run_err(
            capsys,
            ["threshold", "--n", "40", "--list", "--max-elements", "1000"],
        )
        assert "budget" in err


class TestRenderCommand:
    def test_ascii_anchor(self, capsys):
        out = run_ok(capsys, ["render", "--perm", "-2,3,1,6,-4,-7,5"])
        lines = out.splitlines()
        assert lines[-1] == "SEESSSESEEESSE"
        assert out.count("#") == 21

    def test_equals_form_also_accepted(self, capsys):
        spaced = run_ok(capsys, ["render", "--perm", "-2,3,1"])
        glued = run_ok(capsys, ["render", "--perm=-2,3,1"])
        assert spaced == glued

    def test_svg_output(self, capsys, tmp_path):
        target = tmp_path / "path.svg"
        out = run_ok(
            capsys, ["render", "--perm", "-2,3,1,6,-4,-7,5", "--svg", str(target)]
        )
        assert f"wrote {target}" in out
        body = target.read_text()
        assert body.lstrip().startswith("<svg")
        assert "polyline" in body

    def test_bad_window(self, capsys):
        assert cli.run(["render", "--perm", "1,1"]) == 2
        capsys.readouterr()


class TestPosetCommand:
    def test_iso_holds(self, capsys):
        out = run_ok(
            capsys, ["poset", "--kind", "D", "--n", "3", "--check", "iso"]
        )
        assert "order isomorphism" in out and "NOT" not in out

    def test_iso_rejects_other_kinds(self, capsys):
        err = run_err(capsys, ["poset", "--kind", "A", "--n", "3", "--check", "iso"])
        assert "--kind D or TG" in err

    def test_lattice(self, capsys):
        out = run_ok(
            capsys, ["poset", "--kind", "TG", "--n", "2", "--check", "lattice"]
        )
        assert "lattice (4 elements)" in out

    def test_covers_checks_descents(self, capsys):
        out = run_ok(
            capsys, ["poset", "--kind", "B", "--n", "2", "--check", "covers"]
        )
        lines = out.splitlines()
        assert lines[0] == "B poset at n=2: 8 cover pairs"
        assert len(lines) == 9

    def test_joinirr_matches_eulerian(self, capsys):
        out = run_ok(
            capsys, ["poset", "--kind", "B", "--n", "2", "--check", "joinirr"]
        )
        assert "6 join-irreducible elements" in out
        assert "Eulerian count with one descent: 6" in out
        tg = run_ok(
            capsys, ["poset", "--kind", "TG", "--n", "2", "--check", "joinirr"]
        )
        assert "2 join-irreducible elements" in tg

    def test_dot_file(self, capsys, tmp_path):
        target = tmp_path / "hasse.dot"
        out = run_ok(
            capsys,
            ["poset", "--kind", "A", "--n", "3", "--check", "lattice",
             "--dot", str(target)],
        )
        assert f"wrote {target}" in out
        assert target.read_text().startswith("digraph hasse {")

    def test_type_d_needs_two(self, capsys):
        run_err(capsys, ["poset", "--kind", "D", "--n", "1", "--check", "lattice"])

    def test_budget(self, capsys):
        err = run_err(
            capsys,
            ["poset", "--kind", "B", "--n", "8", "--check", "lattice",
             "--max-elements", "100"],
        )
        assert "budget" in err


class TestParsing:
    def test_missing_subcommand(self, capsys):
        assert cli.run([]) == 2
        capsys.readouterr()

    def test_missing_required_flag(self, capsys):
        assert cli.run(["eulerian"]) == 2
        capsys.readouterr()

    def test_unknown_choice(self, capsys):
        assert cli.run(["eulerian", "--kind", "Z", "--n", "3"]) == 2
        capsys.readouterr()
