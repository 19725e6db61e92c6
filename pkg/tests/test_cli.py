import json

import pytest

from spvote import fixtures
from spvote.cli import main
from spvote.profiles import serialize_profile


@pytest.fixture()
def profile_145(tmp_path):
    path = tmp_path / "ex145.profile"
    path.write_text(serialize_profile(fixtures.load("bloc-five-145")), "utf-8")
    return str(path)


@pytest.fixture()
def profile_61(tmp_path):
    path = tmp_path / "ex61.profile"
    path.write_text(serialize_profile(fixtures.load("center-squeeze-61")), "utf-8")
    return str(path)


class TestRankings:
    def test_five_candidates(self, capsys):
        assert main(["rankings", "--candidates", "5"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 17
        assert lines[0] == "A B C D E"
        assert lines[-2] == "E D C B A"
        assert lines[-1].startswith("16 single-peaked rankings")

    def test_one_candidate(self, capsys):
        assert main(["rankings", "--candidates", "1"]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert out[0] == "A" and len(out) == 2

    def test_six_candidates_count(self, capsys):
        assert main(["rankings", "--candidates", "6"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) - 1 == 2**5

    def test_invalid_count(self, capsys):
        assert main(["rankings", "--candidates", "0"]) == 2


class TestElect:
    def test_bloc_three_seats(self, capsys, profile_145):
        rc = main(["elect", "--profile", profile_145, "--winners", "3", "--method", "bloc"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "winners: BCE" in out
        assert "B=145" in out

    def test_copeland_tie_listing(self, capsys, profile_145):
        rc = main(
            ["elect", "--profile", profile_145, "--winners", "2", "--method", "copeland"]
        )
        assert rc == 0
        out = capsys.readouterr().out
        assert "winning sets: BC BD BE" in out
        assert "selected (leftmost): BC" in out

    def test_json_format(self, capsys, profile_145):
        rc = main(
            ["elect", "--profile", profile_145, "--winners", "1", "--format", "json"]
        )
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["winners"] == "A" and doc["tallies"]["A"] == 50

    def test_unanimous_prefix(self, capsys, tmp_path):
        path = tmp_path / "u.profile"
        path.write_text("m=4\n9: B C A D\n", "utf-8")
        assert main(["elect", "--profile", str(path), "--winners", "2"]) == 0
        assert "winners: BC" in capsys.readouterr().out

    def test_bad_k_exits_2(self, capsys, profile_145):
        assert main(["elect", "--profile", profile_145, "--winners", "9"]) == 2

    def test_unreadable_profile_exits_2(self, capsys, tmp_path):
        missing = str(tmp_path / "nope.profile")
        assert main(["elect", "--profile", missing, "--winners", "2"]) == 2

    def test_malformed_profile_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.profile"
        path.write_text("m=3\n5: A B B\n", "utf-8")
        assert main(["elect", "--profile", str(path), "--winners", "2"]) == 2


class TestClassify:
    def test_61_report(self, capsys, profile_61):
        rc = main(["classify", "--profile", profile_61, "--set", "B,D", "--format", "json"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["condorcet_set"] is False
        assert doc["locally_stable"] == {"majority": True, "droop": False}
        assert doc["witnesses"]["max_block"] == {"candidate": "C", "size": 21}

    def test_custom_quota(self, capsys, profile_61):
        rc = main(
            ["classify", "--profile", profile_61, "--set", "B,D", "--quota", "22",
             "--format", "json"]
        )
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["locally_stable"] == {"q=22": True}

    def test_whole_field_is_dominant(self, capsys, profile_61):
        rc = main(["classify", "--profile", profile_61, "--set", "A,B,C,D,E"])
        assert rc == 0
        assert "gehrlein_stable: True" in capsys.readouterr().out

    def test_unknown_candidate_exits_2(self, capsys, profile_61):
        assert main(["classify", "--profile", profile_61, "--set", "B,Z"]) == 2

    def test_duplicate_member_exits_2(self, capsys, profile_61):
        assert main(["classify", "--profile", profile_61, "--set", "B,B"]) == 2


class TestSimulate:
    def test_json_report_to_stdout(self, capsys):
        rc = main(
            ["simulate", "--model", "iac", "--candidates", "4", "--winners", "2",
             "--voters", "101", "--trials", "50", "--seed", "7"]
        )
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["effective_trials"] == 50
        assert doc["config"]["seed"] == 7

    def test_single_trial_reproducible(self, capsys):
        args = ["simulate", "--model", "en", "--candidates", "5", "--winners", "2",
                "--voters", "101", "--trials", "1", "--seed", "3"]
        assert main(args) == 0
        first = capsys.readouterr().out
        assert main(args) == 0
        assert capsys.readouterr().out == first

    def test_out_file_and_summary(self, capsys, tmp_path):
        out = tmp_path / "report.csv"
        rc = main(
            ["simulate", "--model", "iac", "--candidates", "4", "--winners", "2",
             "--voters", "101", "--trials", "40", "--seed", "1",
             "--format", "csv", "--out", str(out)]
        )
        assert rc == 0
        assert out.read_text("utf-8").startswith("winning_set,")
        assert "agreement=" in capsys.readouterr().out

    def test_threads_do_not_change_output(self, capsys, tmp_path):
        base = ["simulate", "--model", "eb", "--candidates", "5", "--winners", "2",
                "--voters", "101", "--trials", "60", "--seed", "5", "--format", "csv"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(base + ["--out", str(a), "--threads", "1"]) == 0
        assert main(base + ["--out", str(b), "--threads", "3"]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_dump_positions(self, capsys, tmp_path):
        dump = tmp_path / "pos.csv"
        rc = main(
            ["simulate", "--model", "en", "--candidates", "3", "--winners", "1",
             "--voters", "11", "--trials", "5", "--seed", "2",
             "--dump-positions", str(dump)]
        )
        assert rc == 0
        assert dump.read_text("utf-8").startswith("voter_pos,candidate_pos")

    def test_invalid_config_exits_2(self, capsys):
        rc = main(
            ["simulate", "--model", "iac", "--candidates", "4", "--winners", "4",
             "--trials", "5"]
        )
        assert rc == 2

    def test_env_threads_fallback(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("SPVOTE_THREADS", "2")
        from spvote.cli import build_parser

        args = build_parser().parse_args(
            ["simulate", "--model", "iac", "--candidates", "4", "--winners", "2",
             "--trials", "5"]
        )
        assert args.threads == 2


class TestVerify:
    def test_fresh_checkout_passes(self, capsys):
        assert main(["verify"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert out.strip().splitlines()[-1].endswith("fixture checks passed")

    def test_list_names_only(self, capsys):
        assert main(["verify", "--list"]) == 0
        names = capsys.readouterr().out.strip().splitlines()
        assert "bloc-five-145" in names
        assert len(names) == len(fixtures.FIXTURES)

    def test_broken_fixture_exits_1(self, capsys, monkeypatch):
        real_load = fixtures.load

        def broken(name):
            if name == "center-squeeze-61":
                raise ValueError("corrupted")
            return real_load(name)

        monkeypatch.setattr(fixtures, "load", broken)
        assert main(["verify"]) == 1
        out = capsys.readouterr().out
        assert "FAIL center-squeeze-61" in out
