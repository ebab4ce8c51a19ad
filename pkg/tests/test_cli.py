import json
import subprocess
import sys

import pytest

from bruric.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "B", "--rank", "3")
    assert code == 0
    assert "order=48" in out and "reflections=9" in out and "max_length=9" in out


def test_d3_note(capsys):
    _, out, _ = run(capsys, "enumerate", "--family", "D", "--rank", "3")
    assert "note=D3 is isomorphic to A3" in out


def test_degrees_text_and_formats(capsys):
    code, out, _ = run(capsys, "degrees", "--family", "D", "--rank", "4")
    assert code == 0
    assert out.startswith("max_degree=") and "[1,2,-4,-3]" in out
    _, out, _ = run(capsys, "degrees", "--family", "B", "--rank", "5", "--all-argmax")
    assert out.startswith("max_degree=16 ") and "[1,2,-5,-4,-3]" in out
    _, out, _ = run(capsys, "degrees", "--family", "I2", "--m", "4", "--format", "json")
    assert json.loads(out)["histogram"] == {"2": 2, "3": 4, "4": 2}
    _, out, _ = run(capsys, "degrees", "--family", "I2", "--m", "4", "--format", "csv")
    assert out.splitlines()[0] == "degree,count"


def test_curvature(capsys):
    code, out, _ = run(capsys, "curvature", "--family", "I2", "--m", "4")
    assert code == 0
    assert "ric=0.5\n" in out and "within_bounds=True" in out
    _, out, _ = run(capsys, "curvature", "--family", "A", "--rank", "2", "--format", "json",
                    "--threads", "2")
    assert len(json.loads(out)["rows"]) == 6


def test_bounds(capsys):
    _, out, _ = run(capsys, "bounds", "--family", "B", "--rank", "3")
    assert "triangle_free=True" in out and "upper_bound=2.0" in out


def test_gamma(capsys):
    _, out, _ = run(capsys, "gamma", "--family", "B", "--element", "4,-3,2,-1", "--tilde",
                    "--format", "json")
    assert json.loads(out)["edge_count"] == 20
    _, out, _ = run(capsys, "gamma", "--family", "B", "--element", "[4,-3,2,-1]")
    assert out.count("[style=dashed]") == 3


def test_out_file_and_cache(tmp_path, capsys):
    cache = tmp_path / "a3.cache"
    out = tmp_path / "deg.txt"
    for _ in range(2):
        code, stdout, _ = run(capsys, "degrees", "--family", "A", "--rank", "3",
                              "--cache", str(cache), "--out", str(out))
        assert code == 0 and stdout == ""
    assert cache.exists() and out.read_text().startswith("max_degree=")
    code, _, err = run(capsys, "degrees", "--family", "B", "--rank", "3", "--cache", str(cache))
    assert code == 2 and "holds A3" in err


@pytest.mark.parametrize("argv,code", [
    (["enumerate", "--family", "E", "--rank", "7"], 2),
    (["enumerate", "--family", "H4"], 2),
    (["enumerate"], 2),
    (["enumerate", "--family", "D", "--rank", "2"], 2),
    (["gamma", "--family", "D", "--element", "-1,2,3"], 2),
    (["gamma", "--family", "B", "--element", "1,1"], 2),
    (["gamma", "--family", "A", "--element", "1,2"], 2),
    (["enumerate", "--family", "B", "--rank", "6", "--max-elements", "100"], 3),
    (["verify", "--check", "nope"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["curvature", "--family", "A", "--rank", "2", "--threads", "0"])
    assert info.value.code == 2


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--check", "1-dihedral", "--check", "7c-mindeg-B7",
                       "--sample", "200")
    assert code == 0
    assert out.count("[PASS]") == 2 and "2/2 checks passed" in out


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--check", "6c-gamma-D")
    assert code == 4 and "[FAIL]" in out


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and len(out.splitlines()) == 22


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "bruric", "enumerate", "--family", "I2",
                           "--m", "3"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "order=6" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "bruric", "enumerate", "--family", "E8"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and "E8" in proc.stderr
