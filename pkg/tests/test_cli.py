import json

import pytest
from click.testing import CliRunner

from equigraph.cli import main
from equigraph.graphs import petersen, write_graph


@pytest.fixture
def runner():
    return CliRunner()


def test_spectrum_crown(runner):
    result = runner.invoke(main, ["spectrum", "--family", "crown", "--t", "5"])
    assert result.exit_code == 0
    assert "energy: 16" in result.output


def test_spectrum_ring(runner):
    result = runner.invoke(main, ["spectrum", "--ring", "2:2", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    values = [(e["value"], e["mult"]) for e in payload["spectrum"]["entries"]]
    assert values == [("2", 1), ("0", 2), ("-2", 1)]
    # the embedded object is the canonical spectrum wire format
    from equigraph.spectra import Spectrum
    spec = Spectrum.from_json_dict(payload["spectrum"])
    assert spec.n == 4 and spec.principal == 0


def test_spectrum_from_file(runner, tmp_path):
    path = tmp_path / "petersen.g"
    path.write_text(write_graph(petersen()))
    result = runner.invoke(main, ["spectrum", "--file", str(path), "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    mults = [e["mult"] for e in payload["spectrum"]["entries"]]
    assert mults == [1, 5, 4]


def test_check_srg_exit_codes(runner):
    equal = runner.invoke(main, ["check", "--srg", "16,6,2,2"])
    assert equal.exit_code == 0
    unequal = runner.invoke(main, ["check", "--srg", "10,3,0,1"])
    assert unequal.exit_code == 1
    broken = runner.invoke(main, ["check", "--srg", "10,3,1,1"])
    assert broken.exit_code == 2


def test_check_family_and_ring(runner):
    tri = runner.invoke(main, ["check", "--family", "triangular", "--n", "7"])
    assert tri.exit_code == 1
    ring = runner.invoke(main, ["check", "--ring", "3:1,5:1,5:1"])
    assert ring.exit_code == 0


def test_check_file_needs_assume_exact_at_branch_points(runner, tmp_path):
    from equigraph.graphs import crown
    path = tmp_path / "crown3.g"
    path.write_text(write_graph(crown(3)))
    strict = runner.invoke(main, ["check", "--file", str(path)])
    assert strict.exit_code == 2        # numeric -1 eigenvalues straddle a branch point
    snapped = runner.invoke(main, ["check", "--file", str(path), "--assume-exact"])
    assert snapped.exit_code == 0       # crowns are equienergetic with their complements


def test_check_rejects_ambiguous_source(runner):
    result = runner.invoke(main, ["check", "--family", "crown", "--t", "3",
                                  "--ring", "2:2"])
    assert result.exit_code == 2


def test_classify_conference(runner):
    result = runner.invoke(main, ["classify", "--srg", "25,12,5,6", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["class"] == "conference(d=6)"
    assert payload["oa"] == "OA(5,3)"


def test_classify_rejects_garbage(runner):
    result = runner.invoke(main, ["classify", "--srg", "1,2,3"])
    assert result.exit_code == 2


def test_enumerate_csv(runner):
    result = runner.invoke(main, ["enumerate", "--n-max", "30"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "n,k,e,d,class,alpha,r,s,m_r,m_s,energy,oa"
    assert any(line.startswith("16,6,2,2,") for line in lines)
    # every non-conference row carries an OA column entry
    for line in lines[1:]:
        if "conference" not in line:
            assert "OA(" in line


def test_enumerate_deterministic(runner):
    a = runner.invoke(main, ["enumerate", "--n-max", "50", "--json"])
    b = runner.invoke(main, ["enumerate", "--n-max", "50", "--json"])
    assert a.output == b.output


def test_enumerate_jobs_matches_serial(runner):
    serial = runner.invoke(main, ["enumerate", "--n-max", "120"])
    parallel = runner.invoke(main, ["enumerate", "--n-max", "120", "--jobs", "2"])
    assert serial.output == parallel.output


def test_rings_search_cli(runner):
    result = runner.invoke(main, ["rings-search", "--s", "3", "--qmax", "16", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["solutions"] == [[3, 4, 7], [3, 5, 5], [4, 4, 4]]


def test_verify_table1(runner):
    result = runner.invoke(main, ["verify", "table1"])
    assert result.exit_code == 0
    assert "[PASS]" in result.output
    assert "[FAIL]" not in result.output


def test_verify_crowns_json(runner):
    result = runner.invoke(main, ["verify", "crowns", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert all(r["passed"] for r in payload["results"])


def test_verify_unknown_suite(runner):
    result = runner.invoke(main, ["verify", "nonsense"])
    assert result.exit_code == 2
