import json

import pytest

from kohnert.cli import main

FIG5_RHO = "6,4,5,7,8,6,4,5,7,2,3,4"
FIG5_ALPHA = "6,4,4,4,4,3,2,2,2,1,1,1"
FIG5_CELLS = [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [2, 7], [3, 4], [4, 3], [4, 4], [4, 6], [4, 7], [6, 3]]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "w, method, text",
    [("132", "kohnert", "x1 + x2"), ("321", "schubert", "x1^2*x2"), ("2143", "bjs", "x1^2 + x1*x2 + x1*x3")],
)
def test_compute(capsys, w, method, text):
    assert run(capsys, "compute", w, "--method", method) == (0, text + "\n", "")


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "132", "--json")
    assert json.loads(out)["polynomial"] == [{"coeff": 1, "exps": [1, 0, 0]}, {"coeff": 1, "exps": [0, 1, 0]}]


@pytest.mark.parametrize("w, count", [("321", 1), ("132", 2), ("2143", 3)])
def test_diagrams_counts(capsys, w, count):
    code, out, _ = run(capsys, "diagrams", w, "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == count == len(data["diagrams"])
    code, out, _ = run(capsys, "diagrams", w)
    assert out.startswith(f"{count} diagrams for {w}")


def test_diagrams_paging_and_plot(capsys, tmp_path):
    _, full, _ = run(capsys, "diagrams", "1432", "--json", "--page-size", "0")
    every = json.loads(full)["diagrams"]
    _, p2, _ = run(capsys, "diagrams", "1432", "--json", "--page-size", "3", "--page", "2")
    assert json.loads(p2)["diagrams"] == every[3:6]
    assert run(capsys, "diagrams", "1432", "--page", "99")[0] == 2
    png = tmp_path / "kd.png"
    assert run(capsys, "diagrams", "2143", "--plot", str(png))[0] == 0
    assert png.read_bytes()[:4] == b"\x89PNG"


def test_forward_backward(capsys, tmp_path):
    code, out, _ = run(capsys, "forward", "--rho", FIG5_RHO, "--alpha", FIG5_ALPHA, "--json")
    assert code == 0 and json.loads(out)["diagram"]["cells"] == FIG5_CELLS
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"cells": FIG5_CELLS}))
    code, out, _ = run(capsys, "backward", str(path), "152869347", "--json")
    data = json.loads(out)
    assert data["rho"] == [int(x) for x in FIG5_RHO.split(",")]
    assert data["alpha"] == data["alpha_of_t"] == [int(x) for x in FIG5_ALPHA.split(",")]
    code, out, _ = run(capsys, "backward", str(path), "152869347")
    assert out.splitlines()[0] == f"rho: {FIG5_RHO}"
    assert run(capsys, "forward", "--rho", "1", "--alpha", "1", "--json")[1] == (
        '{"rho": [1], "alpha": [1], "diagram": {"cells": [[1, 1]]}}\n'
    )


def test_backward_accepts_forward_output(capsys, tmp_path):
    _, out, _ = run(capsys, "forward", "--rho", FIG5_RHO, "--alpha", FIG5_ALPHA, "--json")
    path = tmp_path / "f.json"
    path.write_text(out)
    assert run(capsys, "backward", str(path), "152869347")[0] == 0


def test_words(capsys):
    assert run(capsys, "words", "321")[1] == "1,2,1\n2,1,2\n"
    assert run(capsys, "words", "152869347", "--kind", "superY")[1] == "6,7,8,5,6,4,5,6,7,2,3,4\n"
    code, out, _ = run(capsys, "words", "152869347", "--kind", "compatible", "--rho", FIG5_RHO)
    assert out.splitlines() == ["5,4,4,4,4,3,2,2,2,1,1,1", FIG5_ALPHA]
    code, out, _ = run(capsys, "words", "152869347", "--kind", "matching", "--rho", "6,4,5,7,8,6,4,5,2,3,4,7", "--json")
    assert json.loads(out)["p"] == [2, 3, 4, 1, 7, 10, 11, 5, 6, 8, 9, 12]
    assert run(capsys, "words", "321", "--kind", "matching")[0] == 2
    assert run(capsys, "words", "321", "--kind", "matching", "--rho", "1,1")[0] == 2


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--all-n", "3", "--checks", "all")
    assert code == 0 and "(6 permutations)" in out and out.rstrip().endswith("result: pass")
    code, out, _ = run(capsys, "verify", "--w", "152869347", "--checks", "superY,matching")
    assert code == 0 and "result: pass" in out
    assert run(capsys, "verify", "--all-n", "2")[0] == 0
    code, out, _ = run(capsys, "verify", "--fixtures-only", "--json")
    assert code == 0 and json.loads(out)["failed"] == 0


def test_verify_failure_exit_code(capsys):
    # length-lowering swaps on this Rothe base are outside the sound range
    code, out, _ = run(capsys, "verify", "--w", "12543", "--checks", "colswap")
    assert code == 1 and "counterexample: 12543" in out


def test_verify_report_dir(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--all-n", "3", "--report-dir", str(tmp_path), "--workers", "2")
    assert code == 0
    tsv = (tmp_path / "report.tsv").read_text().splitlines()
    assert tsv[0] == "check\tinstances\tfailures\tstatus" and tsv[-1].endswith("pass")
    for name in ("checks.png", "closure_sizes.png"):
        assert (tmp_path / name).read_bytes()[:4] == b"\x89PNG"


@pytest.mark.parametrize(
    "argv, code",
    [
        (["compute", "1x3"], 2),
        (["compute", "1,5,5"], 2),
        (["compute", "152869347", "--max-n", "5"], 2),
        (["forward", "--rho", "1,1", "--alpha", "1,1"], 2),
        (["forward", "--rho", "2", "--alpha", "3"], 2),
        (["backward", "/nonexistent.json", "21"], 2),
        (["verify", "--all-n", "9"], 2),
        (["verify", "--checks", "bogus", "--all-n", "2"], 2),
        (["verify"], 2),
        (["diagrams", "152869347", "--max-states", "5"], 3),
        (["compute", "21", "--max-states", "0"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_byte_deterministic(capsys):
    outs = {run(capsys, "diagrams", "13254", "--json")[1] for _ in range(3)}
    assert len(outs) == 1
    outs = {run(capsys, "verify", "--all-n", "3")[1] for _ in range(2)}
    assert len(outs) == 1
