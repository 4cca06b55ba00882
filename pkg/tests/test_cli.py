import json

import pytest

import config
from wpgap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_enumerate_lines_sorted(capsys):
    code, out = run(capsys, "enumerate", "--genus", "3", "--sorted", "--format", "lines")
    assert code == 0
    assert out == "1,2,3\n1,2,4\n1,2,5\n1,3,5\n"


def test_enumerate_genus_0(capsys):
    code, out = run(capsys, "enumerate", "--genus", "0")
    assert code == 0
    assert out == "\n"


def test_enumerate_even_gaps(capsys):
    assert run(capsys, "enumerate", "--genus", "2", "--even-gaps", "0") == (0, "1,3\n")


def test_enumerate_csv(capsys):
    code, out = run(capsys, "enumerate", "--genus", "3", "--sorted", "--format", "csv")
    assert code == 0
    assert out == (
        "genus,multiplicity,conductor,weight,gaps\n"
        "3,4,4,0,1;2;3\n"
        "3,3,5,1,1;2;4\n"
        "3,3,6,2,1;2;5\n"
        "3,2,6,3,1;3;5\n"
    )


def test_enumerate_json(capsys):
    code, out = run(capsys, "enumerate", "--genus", "2", "--format", "json", "--sorted")
    report = json.loads(out)
    assert code == 0
    assert list(report)[0] == "wpgap_report"
    assert report["wpgap_report"] == 1
    assert report["count"] == 2
    assert [s["gaps"] for s in report["semigroups"]] == [[1, 2], [1, 3]]


def test_enumerate_genus_cap(capsys):
    code, out = run(capsys, "enumerate", "--genus", str(config.GENUS_CAP + 1))
    assert code == 3
    assert out == ""


def test_enumerate_invalid_interval_for_genus(capsys):
    assert run(capsys, "enumerate", "--genus", "3", "--require-interval", "2:9")[0] == 2


def test_malformed_arguments_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["enumerate", "--genus", "3", "--require-interval", "5:3"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "lemma", "--gamma", "3", "--genus-range", "12:12", "--class", "IV"])
    assert e.value.code == 2


def test_enumerate_output_round_trips_through_weight(capsys):
    _, out = run(capsys, "enumerate", "--genus", "4", "--sorted")
    for line in out.splitlines():
        code, record = run(capsys, "weight", "--gaps", line)
        assert code == 0
        assert json.loads(record)["genus"] == 4


def test_weight_command(capsys):
    code, out = run(capsys, "weight", "--gaps", "1,2,4")
    record = json.loads(out)
    assert code == 0
    assert (record["genus"], record["multiplicity"], record["conductor"]) == (3, 3, 5)
    assert record["weight"] == 1
    assert record["even_gaps"] == 2
    assert record["oliveira"] is True
    assert json.loads(run(capsys, "weight", "--gaps", "1,3")[1])["oliveira"] is None
    assert run(capsys, "weight", "--gaps", "1,4")[0] == 2


@pytest.mark.parametrize("line", ["1,a", "1,,2", "1;2"])
def test_weight_malformed_gaps_exit_2(capsys, line):
    assert run(capsys, "weight", "--gaps", line) == (2, "")


def test_unusable_cache_dir_exits_2(capsys, tmp_path, cache_everything):
    blocker = tmp_path / "not_a_dir"
    blocker.write_text("x")
    code, _ = run(capsys, "enumerate", "--genus", "5", "--cache-dir", str(blocker))
    assert code == 2


def test_verify_theorem(capsys):
    code, out = run(capsys, "verify", "theorem", "--gamma", "3", "--genus", "16", "--t-policy", "paper")
    result = json.loads(out)["results"][0]
    assert code == 0
    assert result["holds"] and result["W1_lower"] == 63 and result["N"] == 60
    assert run(capsys, "verify", "theorem", "--gamma", "3", "--genus", "12")[0] == 1
    assert run(capsys, "verify", "theorem", "--gamma", "2", "--genus", "16")[0] == 2


def test_verify_theorem_range(capsys):
    code, out = run(capsys, "verify", "theorem", "--gamma", "3", "--genus-range", "16:40")
    report = json.loads(out)
    assert code == 0
    assert report["all_hold"]
    assert [r["g"] for r in report["results"]] == list(range(16, 41))


def test_verify_lemma(capsys):
    code, out = run(capsys, "verify", "lemma", "--gamma", "3", "--genus-range", "12:14", "--class", "II")
    report = json.loads(out)
    assert code == 0
    assert report["all_hold"]
    assert report["results"][0]["bound"] == 23


def test_verify_lemma_output_independent_of_jobs(capsys):
    argv = ["verify", "lemma", "--gamma", "3", "--genus-range", "12:13", "--class", "I"]
    serial = run(capsys, *argv, "--jobs", "1")
    parallel = run(capsys, *argv, "--jobs", "4")
    assert serial == parallel


def test_verify_properties(capsys):
    code, out = run(capsys, "verify", "properties", "--gamma-range", "0:4", "--genus-range", "2:10")
    assert code == 0
    assert json.loads(out)["findings"] == []


def test_table_thresholds(capsys):
    code, out = run(capsys, "table", "thresholds", "--gamma-range", "3:5")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "gamma,paper_threshold,exact_min_genus"
    assert lines[1] == "3,16,15"
    assert [line.split(",")[1] for line in lines[1:]] == ["16", "24", "32"]


def test_table_pflaum_n2(capsys):
    assert run(capsys, "table", "pflaum-n2", "--genus-range", "3:3", "--n", "2") == (
        0, "g,n,omega_n,W_lower,N,holds\n3,2,108,18,16,true\n")


def test_table_bounds(capsys):
    assert run(capsys, "table", "bounds", "--gamma", "3", "--genus-range", "16:16") == (
        0, "g,c1,c2,c3,N,omega1\n16,63,53,66,60,4080\n")


def test_cache_dir_from_environment(capsys, tmp_path, monkeypatch, cache_everything):
    monkeypatch.setenv(config.CACHE_DIR_ENV, str(tmp_path))
    first = run(capsys, "enumerate", "--genus", "5", "--sorted")
    assert len(list(tmp_path.iterdir())) == 1
    assert run(capsys, "enumerate", "--genus", "5", "--sorted") == first
