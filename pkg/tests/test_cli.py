import io
import json
import random

import pytest

from mingenus.cli import run
from mingenus.homology import parse_class, random_class
from mingenus.twisted import parse_twisted

S2 = '{"g":2,"handles":[[0,0,0,0],[0,0,0,0]],"e":1,"f":0}'
S1 = '{"g":1,"handles":[[0,0,0,0]],"e":1,"f":0}'


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_genus_section():
    code, out, _ = call("--format", "json", "genus", "--class", S2)
    rec = json.loads(out)
    assert code == 0 and rec["value"] == 2 and rec["case"] == "AdjunctionCase"
    code, out, _ = call("genus", "--class", S2)
    assert code == 0 and "G = 2" in out


def test_normalize_section():
    code, out, _ = call("normalize", "--class", S1, "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert parse_class(rec["normal"]) == parse_class('{"handles":[[1,0,0,0]],"e":1}')
    assert rec["word"] == ["Dxy(1)", "Rx(1)^-1", "Rz(1)^-1"]


def test_selftest_seed7():
    code, out, _ = call("selftest", "--seed", "7", "--samples", "1000")
    assert code == 0 and "FAIL" not in out


def test_selftest_is_deterministic():
    a = call("--format", "json", "selftest", "--seed", "3", "--samples", "30",
             "--only", "g_invariance", "gap_law")
    b = call("--format", "json", "selftest", "--seed", "3", "--samples", "30",
             "--only", "g_invariance", "gap_law")
    strip = lambda o: [{k: v for k, v in r.items() if k != "seconds"}
                       for r in json.loads(o)["results"]]
    assert strip(a[1]) == strip(b[1])


def test_other_commands():
    assert json.loads(call("--format", "json", "bound", "--class", S2)[1])["bound"] == 2
    rec = json.loads(call("--format", "json", "complexity", "--class", S2)[1])
    assert (rec["x"], rec["x_c"], rec["thurston_norm"]) == (2, 2, 2)
    code, out, _ = call("--format", "json", "act", "--class", S1, "--word", '["Dxy(1)"]')
    assert code == 0 and json.loads(out)["image"]["handles"] == [[0, 0, 0, 1]]
    code, out, _ = call("replay", "--class", '{"handles":[[1,2,0,0],[0,0,0,0]],"e":1,"f":3}')
    assert code == 0 and '"genus": 7' in out.splitlines()[-1]
    code, out, _ = call("--format", "json", "twisted-genus", "--class",
                        '{"m":5,"handles":[[0,0,0,0]],"fiber":3}')
    assert code == 0 and json.loads(out)["value"] == 1


def test_orbit():
    code, out, _ = call("--format", "json", "orbit", "--target", "exotic", "--depth", "2")
    rec = json.loads(out)
    assert code == 0 and rec["found"] is False and rec["summary"].startswith("not found up to depth 2")
    code, out, _ = call("--format", "json", "orbit", "--target", "move-word",
                        "--word", "Rz(1)", "--depth", "1")
    assert json.loads(out)["word"] == ["Rz(1)"]
    code, _, err = call("orbit", "--depth", "3", "--node-budget", "10")
    assert code == 1 and "partial statistics" in err


def test_exit_codes():
    assert call("genus", "--class", "{nope")[0] == 2
    assert call("genus")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("act", "--class", S1, "--word", "Bogus(1)")[0] == 2
    assert call("act", "--class", S1, "--word", "Rz(2)")[0] == 1
    assert call("bound", "--class", '{"handles":[[0,0,0,0]]}')[0] == 1
    assert call("complexity", "--class", S1)[0] == 1
    assert call("orbit", "--g", "1")[0] == 1
    assert call("genus", "--batch", "/nonexistent/file")[0] == 2


def test_batch_empty(tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("")
    assert call("genus", "--batch", str(p)) == (0, "", "")


def test_batch_mixed(tmp_path):
    p = tmp_path / "mixed.txt"
    p.write_text(S2 + "\n{broken\n")
    code, out, _ = call("--format", "json", "genus", "--batch", str(p))
    recs = records(out)
    assert code == 1 and len(recs) == 2
    assert recs[0]["value"] == 2 and "error" in recs[1] and recs[1]["line"] == 2


def test_batch_thousand_lines_in_order(tmp_path):
    rng = random.Random(13)
    classes = [random_class(rng, rng.randint(1, 3)) for _ in range(1000)]
    p = tmp_path / "many.txt"
    p.write_text("\n".join(c.dumps() for c in classes) + "\n")
    code, out, _ = call("--format", "json", "genus", "--batch", str(p))
    recs = records(out)
    assert code == 0 and len(recs) == 1000
    assert [parse_class(r["class"]) for r in recs] == classes
    assert [r["line"] for r in recs] == list(range(1, 1001))


def test_printed_classes_round_trip(tmp_path):
    rng = random.Random(14)
    for _ in range(50):
        s = random_class(rng, rng.randint(1, 3))
        for cmd in ("genus", "normalize", "replay"):
            rec = json.loads(call("--format", "json", cmd, "--class", s.dumps())[1])
            assert parse_class(rec["class"]) == s
            if "normal" in rec:
                parse_class(rec["normal"])
        t = '{"m":3,"handles":[[1,2,3,4]],"fiber":5}'
        rec = json.loads(call("--format", "json", "twisted-genus", "--class", t)[1])
        assert parse_twisted(rec["class"]) == parse_twisted(t)


def test_text_batch_errors(tmp_path):
    p = tmp_path / "t.txt"
    p.write_text(S1 + "\n\n")
    code, out, _ = call("genus", "--batch", str(p))
    assert code == 1 and out.splitlines()[1].startswith("line 2: error")


@pytest.mark.parametrize("flag", ["--help", "--version"])
def test_help_and_version(flag, capsys):
    assert run([flag]) == 0
