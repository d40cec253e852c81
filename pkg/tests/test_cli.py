import json

import pytest
from click.testing import CliRunner

from prefgeo.click import cli
from prefgeo.ext.models.documents import embedding_to_document, profile_to_document


@pytest.fixture
def run(tmp_path):
    """Invoke the CLI against a throwaway configuration file."""
    runner = CliRunner()
    config = str(tmp_path / "config.json")

    def invoke(*args, env=None):
        return runner.invoke(cli, ["--config", config, *args], env=env)
    return invoke


def _json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_config_is_created_on_first_use(run, tmp_path):
    run("experiment", "maxsearch", "--trials", "0")
    config = json.loads((tmp_path / "config.json").read_text(encoding="utf-8"))
    assert config == {"seed": 0, "workers": 1, "svg": {"size": 640}}


def test_bisector_command(run):
    out = _json(run("bisector", "--norm", "l1", "--c1", "3,3", "--c2", "8,6"))
    assert out["kind"] == "V-"
    assert sorted(out["segment"]) == [[4, 6], [7, 3]]

    out = _json(run("bisector", "--norm", "l2", "--c1", "0,0", "--c2", "2,0"))
    assert out["line"] == "x=1"


def test_quadrant_bisector_warns(run):
    result = run("bisector", "--norm", "l1", "--c1", "3,3", "--c2", "6,6")
    assert result.exit_code == 0
    assert "Warning: quadrant-degenerate bisector" in result.stderr
    assert "warning" in json.loads(result.stdout)


def test_bisector_svg(run, tmp_path):
    path = tmp_path / "b.svg"
    result = run("bisector", "--norm", "linf", "--c1", "0,0", "--c2", "5,1", "--svg", str(path))
    assert result.exit_code == 0
    assert path.read_text(encoding="utf-8").lstrip().startswith("<svg")


def test_identical_candidates_exit_3(run):
    result = run("bisector", "--norm", "l1", "--c1", "1,1", "--c2", "1,1")
    assert result.exit_code == 3
    assert result.stderr.startswith("Error:")


def test_bad_point_is_a_usage_error(run):
    assert run("bisector", "--norm", "l1", "--c1", "1", "--c2", "1,1").exit_code == 2


def test_areas_on_the_l1_maximal_embedding(run, write_json, l1_maximal):
    path = write_json("l1max.json", embedding_to_document(l1_maximal))
    out = _json(run("areas", "--norm", "l1", "--embedding", path, "--graph"))
    assert out["count"] == 19
    assert len(out["cells"]) == 19
    assert out["graph"]["n_v"] == 8
    assert out["euler"]["passed"]
    assert out["size_bound"]["within_bound"]


def test_areas_writes_svg(run, write_json, triangle, tmp_path):
    path = write_json("tri.json", embedding_to_document(triangle))
    svg = tmp_path / "tri.svg"
    out = _json(run("areas", "--norm", "l2", "--embedding", path, "--svg", str(svg)))
    assert out["count"] == 6
    assert svg.exists()


def test_areas_degenerate_exit_4_unless_perturbed(run, write_json):
    path = write_json("sq.json", {"dimension": 2, "positions": [[0, 0], [2, 2], [5, 1]]})
    result = run("areas", "--norm", "l1", "--embedding", path)
    assert result.exit_code == 4
    assert "Error:" in result.stderr

    out = _json(run("areas", "--norm", "l1", "--embedding", path, "--perturb"))
    assert out["count"] == len(out["cells"]) >= 4
    assert out["perturbed"]["positions"] != [[0, 0], [2, 2], [5, 1]]


def test_malformed_and_duplicate_documents_exit_2(run, write_json, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("[1, 2", encoding="utf-8")
    assert run("areas", "--norm", "l1", "--embedding", str(broken)).exit_code == 2

    dup = write_json("dup.json", {"dimension": 2, "positions": [[1, 1], [1, 1]]})
    assert run("degeneracies", "--norm", "l1", "--embedding", dup).exit_code == 2


def test_degeneracies_command(run, write_json):
    path = write_json("sq.json", {"dimension": 2, "positions": [[0, 0], [2, 2]], "voters": [[0, -1]]})
    out = _json(run("degeneracies", "--norm", "l1", "--embedding", path, "--perturb"))
    assert out["report"]["square_pairs"]
    assert out["perturbed"]["positions"] == [[1, 0], [2, 2]]


def test_recognize4(run, write_json, canonical, mixed_profile):
    out = _json(run("recognize4", "--profile", write_json("p3.json", profile_to_document(canonical.p3))))
    assert out["euclidean_l2"] is True
    assert out["witness_profile"] == "P3"

    out = _json(run("recognize4", "--profile", write_json("mixed.json", profile_to_document(mixed_profile))))
    assert out["euclidean_l2"] is False
    assert out["l1_checks"]["passed"]


def test_recognize4_wrong_arity_exit_5(run, write_json):
    path = write_json("m3.json", {"m": 3, "rankings": [[0, 1, 2]]})
    assert run("recognize4", "--profile", path).exit_code == 5


def test_maximal(run, tmp_path):
    out = _json(run("maximal", "--which", "p0"))
    assert out["m"] == 4
    assert len(out["rankings"]) == 19

    target = tmp_path / "p1.json"
    result = run("maximal", "--which", "p1", "--out", str(target))
    assert result.exit_code == 0
    assert result.stdout.strip() == f"p1 (18 rankings) written to {target}"
    assert len(json.loads(target.read_text(encoding="utf-8"))["rankings"]) == 18


def test_construct(run):
    out = _json(run("construct", "--family", "theta-m4", "--m", "3"))
    assert out == {"dimension": 2, "positions": [[0, 0], [1, 2], [5, 1]]}

    out = _json(run("construct", "--family", "l1-last", "--d", "2", "--verify"))
    assert out["verification"]["count"] == 4
    assert out["verification"]["tight"]
    assert len(out["embedding"]["voters"]) == 4

    assert run("construct", "--family", "linf-last").exit_code == 2


def test_maxsearch_seed_sources(run):
    out = _json(run("experiment", "maxsearch", "--trials", "0"))
    assert out["seed"] == 0
    assert out["max_cells"] is None

    out = _json(run("experiment", "maxsearch", "--trials", "0", env={"PREFGEO_SEED": "11"}))
    assert out["seed"] == 11

    out = _json(run("experiment", "maxsearch", "--trials", "0", "--seed", "5"))
    assert out["seed"] == 5


def test_no_print_suppresses_output(run):
    result = run("-np", "maximal", "--which", "p2")
    assert result.exit_code == 0
    assert result.stdout == ""
    # the switch does not leak into the next invocation
    assert run("maximal", "--which", "p2").stdout


def test_no_print_keeps_warnings(run):
    result = run("-np", "bisector", "--norm", "l1", "--c1", "3,3", "--c2", "6,6")
    assert result.exit_code == 0
    assert result.stdout == ""
    assert "Warning: quadrant-degenerate bisector" in result.stderr
