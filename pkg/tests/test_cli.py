import json
import shlex
from pathlib import Path

import pytest

from rankperm.cli import main

GOLDEN = Path(__file__).parent / "golden" / "structured.jsonl"
GOLDEN_COMMANDS = [
    "dist 2,1,4,3 2,3,4,1",
    "invvec --perm 2,1,4,3",
    "volume --n 4 --k 2 --r 1",
    "bounds --n 4 --d 3",
    "bounds --n 5 --d 5",
    "optimal --n 4 --d 3",
]


def run(capsys, line):
    code = main(shlex.split(line))
    out, err = capsys.readouterr()
    return code, out, err


def structured(capsys, line):
    code, out, _ = run(capsys, line + " --format structured")
    assert code == 0
    return json.loads(out)


def test_golden_structured_output(capsys):
    expected = GOLDEN.read_text().splitlines()
    for line, want in zip(GOLDEN_COMMANDS, expected, strict=True):
        code, out, _ = run(capsys, line + " --format structured")
        assert code == 0
        assert out.rstrip("\n") == want, line


def test_structured_values_are_strings(capsys):
    for line in GOLDEN_COMMANDS:
        rec = structured(capsys, line)
        assert all(v is None or isinstance(v, str) for v in rec.values())


def test_dist(capsys):
    rec = structured(capsys, "dist 2,1,4,3 2,3,4,1")
    assert rec == {"kendall": "3", "footrule": "4", "cayley": "1", "l1_inversion": "3"}
    rec = structured(capsys, "dist 1,2,3 1,2,3")
    assert set(rec.values()) == {"0"}
    code, _, err = run(capsys, "dist 1,2,3 1,2")
    assert code == 1 and "size mismatch" in err
    code, _, err = run(capsys, "dist 1,x,3 1,2,3")
    assert code == 1 and "entry 2" in err


def test_invvec(capsys):
    assert structured(capsys, "invvec --vec 1,0,1")["permutation"] == "2,1,4,3"
    code, _, err = run(capsys, "invvec --vec 1,0,5")
    assert code == 1 and "coordinate 3" in err
    assert run(capsys, "invvec")[0] == 1


def test_volume(capsys):
    assert structured(capsys, "volume --n 4 --k 2")["K"] == "5"
    assert structured(capsys, "volume --n 4 --r 1")["kendall_ball"] == "4"
    assert structured(capsys, "volume --n 3 --r 2")["Q"] == "6"
    assert structured(capsys, "volume --n 6 --r 4 --check")["check"] == "pass"
    assert run(capsys, "volume --n 9 --r 1 --check")[0] == 3
    assert run(capsys, "volume --n 4")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["volume", "--n", "-4", "--k", "1"])
    assert exc.value.code == 1


def test_bounds(capsys):
    rec = structured(capsys, "bounds --n 4 --d 3")
    assert int(rec["best_upper"]) <= 6 and int(rec["best_lower"]) >= 3
    rec = structured(capsys, "bounds --n 3 --d 1")
    assert rec["best_upper"] == rec["best_lower"] == "6"
    assert run(capsys, "bounds --n 4 --d 7")[0] == 1
    code, out, _ = run(capsys, "bounds --n 4 --d 3")
    assert code == 0 and "plotkin_upper: n/a" in out


def test_optimal(capsys):
    assert structured(capsys, "optimal --n 3 --d 3")["A"] == "2"
    assert run(capsys, "optimal --n 6 --d 3")[0] == 3
    assert run(capsys, "optimal --n 4 --d 9")[0] == 1


def test_construct_verify_decode(capsys, tmp_path):
    path = tmp_path / "c71.json"
    rec = structured(capsys, f"construct --n 7 --t 1 --out {path}")
    assert int(rec["size"]) >= 388 and rec["m_t"] == "13" and int(rec["min_distance"]) >= 3
    assert path.exists()
    code, out, _ = run(capsys, f"verify {path}")
    assert code == 0 and "fail" not in out

    doc = json.loads(path.read_text())
    word = doc["codebook"][5]
    noisy = ",".join(str({3: 4, 4: 3}.get(int(v), int(v))) for v in word.split(","))
    assert structured(capsys, f"decode {path} {noisy}")["decoded"] == word
    assert run(capsys, f"decode {path} 1,2,3")[0] == 1

    # one adjacent transposition in a stored codeword is caught
    vals = [int(v) for v in word.split(",")]
    doc["codebook"][5] = ",".join(str({1: 2, 2: 1}.get(v, v)) for v in vals)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc, indent=1) + "\n")
    code, out, _ = run(capsys, f"verify {bad}")
    assert code == 2 and "fail" in out


@pytest.mark.parametrize("n, t", [(5, 2), (7, 2), (9, 2)])
def test_construct_then_verify(capsys, tmp_path, n, t):
    path = tmp_path / f"c{n}{t}.json"
    assert run(capsys, f"construct --n {n} --t {t} --out {path} --skip-distance")[0] == 0
    assert run(capsys, f"verify {path}")[0] == 0


def test_construct_limits(capsys, tmp_path):
    assert run(capsys, f"construct --n 13 --t 2 --out {tmp_path / 'x'}")[0] == 3
    assert run(capsys, f"construct --n 3 --t 1 --out {tmp_path / 'x'}")[0] == 1
    assert run(capsys, f"verify {tmp_path / 'missing.json'}")[0] == 1


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "--n", "x", "--d", "1"])
    assert exc.value.code == 1
