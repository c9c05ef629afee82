import csv
import io
import json

import jsonschema
import pytest

from artinprimes import cli
from artinprimes.schemas import COMMAND_SCHEMAS, ERROR, LOG_RESULT, MANIFEST
from artinprimes.search import LinearParams, QuadraticParams, SearchConfig

from test_artin import TINY, hard_prime


def run(*argv):
    buf = io.StringIO()
    code = cli.main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    doc = json.loads(text)
    if code == 0:
        jsonschema.validate(doc, COMMAND_SCHEMAS[argv[0]])
    return code, doc


def test_length_griffin():
    code, doc = run_json("length", "--poly", "10x^2+7", "--g", "10")
    assert code == 0
    assert doc["length"] == 16 and doc["stop_reason"] == "failure"


def test_tau_both_methods_agree():
    code, doc = run_json("tau", "--poly", "105x+2", "--disc", "5", "--method", "both")
    assert code == 0
    assert doc["values"] == {"formula": "1", "brute-force": "1"} and doc["equal"]


def test_delta_prime_count():
    code, doc = run_json("delta", "--poly", "326x^2+3", "--prime-count", "2000")
    assert code == 0
    assert doc["truncation"] == {"prime_count": 2000}
    assert 0.99 < float(doc["value"]) < 1


@pytest.mark.parametrize("argv", [
    ("parse", "326x^2+3"),
    ("parse", "--poly", "x^3-2x+5"),
    ("cf", "--poly", "x^2+1", "--prime-bound", "1000"),
    ("artin", "--p", "7", "--g", "2"),
    ("discs", "--poly", "105x+2", "--tau-one"),
    ("jacobsthal", "--q", "7", "--E", "2"),
    ("a-d", "--poly", "60x^3+29", "--d", "7"),
    ("alphas", "--poly", "326x^2+3"),
    ("empirical-delta", "--poly", "10x^2+7", "--g", "10", "--X", "3"),
    ("class-dist", "--poly", "x", "--m", "4", "--X", "1000"),
    ("pair-length", "--poly", "2x+1", "--poly2", "2x+3", "--g", "7"),
    ("delta", "--poly", "105x+2", "--g", "5", "--prime-bound", "1000", "--tail"),
    ("variations", "--poly", "326x^2+3", "--g", "326", "--shifts", "0", "--scales", "2",
     "--max-n", "3000", "--prime-bound", "1000"),
])
def test_every_command_validates(argv):
    code, _ = run_json(*argv)
    assert code == 0


def test_parse_examples():
    assert run_json("parse", "326x^2+3")[1]["coeffs"] == ["3", "0", "326"]
    assert run_json("parse", "x^3 - 2x + 5")[1]["canonical"] == "x^3-2x+5"


@pytest.mark.parametrize("argv", [
    ("parse", "7"),
    ("parse", "0x+0"),
    ("parse", "3x^^2"),
    ("length", "--poly", "10x^2+7", "--g", "ten"),
    ("delta", "--poly", "x", "--prime-count", "5", "--prime-bound", "7"),
    ("tau", "--poly", "x+1", "--disc", "9"),
    ("artin", "--p", "9", "--g", "2"),
    ("search", "linear", "--config", "/nonexistent.json"),
    ("artin", "--p", "7", "--g", "2", "--out", "csv"),
])
def test_config_errors_exit_2(argv):
    code, text = run(*argv)
    assert code == 2
    if text:
        jsonschema.validate(json.loads(text), ERROR)


def test_syntax_error_has_position():
    code, doc = run_json("parse", "3x^^2")
    assert code == 2 and doc["error"]["type"] == "PolySyntaxError"
    assert doc["error"]["position"] == 2


def test_unknown_status_exits_3():
    p, g = hard_prime()
    budget = f"trial_bound={TINY.trial_bound},rho_iterations={TINY.rho_iterations}"
    code, doc = run("artin", "--p", str(p), "--g", str(g), "--factor-budget", budget)
    doc = json.loads(doc)
    assert code == 3 and doc["status"] == "unknown"
    jsonschema.validate(doc, COMMAND_SCHEMAS["artin"])
    code, doc = run_json("length", "--poly", f"x+{p}", "--g", str(g), "--factor-budget", budget,
                         "--max-n", "10")
    assert code == 3 and doc["stop_reason"] == "unknown"


def test_invariant_violation_exits_4(monkeypatch):
    from fractions import Fraction

    class Fake:
        def __init__(self, m):
            self.method, self.value = m, Fraction(1 if m == "formula" else 0)

    monkeypatch.setattr(cli, "tau", lambda f, D, m: Fake(m))
    code, text = run("tau", "--poly", "105x+2", "--disc", "5", "--method", "both")
    assert code == 4
    jsonschema.validate(json.loads(text), ERROR)


def write_config(tmp_path, cfg):
    path = tmp_path / "cfg.json"
    path.write_text(cfg.to_json())
    return str(path)


def test_search_csv_header(tmp_path):
    cfg = SearchConfig(shape="quadratic", quadratic=QuadraticParams(deltas=[-652]),
                       truncation={"prime_bound": 10 ** 4}, max_n=3000)
    path = write_config(tmp_path, cfg)
    code, text = run("search", "quadratic", "--config", path, "--run-length", "--out", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["f", "g", "length", "delta"]
    assert ["326x^2+3", "326", "206"] in [r[:3] for r in rows[1:]]


def test_search_shape_mismatch(tmp_path):
    path = write_config(tmp_path, SearchConfig(shape="linear",
                                               linear=LinearParams(a_values=[105], b_values=[2])))
    assert run("search", "cubic", "--config", path)[0] == 2


def test_search_json_validates(tmp_path):
    path = write_config(tmp_path, SearchConfig(shape="linear",
                                               linear=LinearParams(a_values=[105], b_values=[2])))
    code, doc = run_json("search", "linear", "--config", path)
    assert code == 0 and {d["D"] for d in doc} == {"-3", "5", "21", "-35"}


def read_log(path):
    return [json.loads(line) for line in path.read_text().splitlines()]


def test_log_is_append_only_and_reproducible(tmp_path):
    log = tmp_path / "run.jsonl"
    argv = ("length", "--poly", "326x^2+3", "--g", "326", "--max-n", "800", "--log", str(log))
    run(*argv)
    first = read_log(log)
    run(*argv)
    both = read_log(log)
    assert both[:len(first)] == first
    second = both[len(first):]
    strip = lambda recs: [r for r in recs if r["record"] == "result"]
    assert strip(second) == strip(first)
    for r in both:
        jsonschema.validate(r, MANIFEST if r["record"] == "manifest" else LOG_RESULT)
    man = [r for r in both if r["record"] == "manifest"]
    assert len(man) == 2 and man[0]["config"] == man[1]["config"]
    assert man[0]["rho_seed"] == 1 and man[0]["outcome"]["exit_code"] == 0


def test_resume_from_log_and_report(tmp_path):
    log = tmp_path / "run.jsonl"
    code, doc = run_json("length", "--poly", "326x^2+3", "--g", "326", "--max-n", "500",
                         "--log", str(log))
    assert doc["scan_bound_hit"] and doc["next_n"] == "501"
    code, done = run_json("length", "--poly", "326x^2+3", "--g", "326", "--resume", str(log))
    assert code == 0 and done["length"] == 206
    report = tmp_path / "rep.json"
    report.write_text(json.dumps(doc))
    assert run_json("length", "--poly", "326x^2+3", "--g", "326",
                    "--resume", str(report))[1] == done
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    assert run("length", "--poly", "x", "--g", "3", "--resume", str(empty))[0] == 2


def test_big_integers_are_strings():
    big = "9828324151968468548"
    code, doc = run_json("parse", f"x^2+{big}")
    assert doc["coeffs"][0] == big


def test_threads_flag_matches_serial():
    a = run_json("length", "--poly", "326x^2+3", "--g", "326")[1]
    b = run_json("length", "--poly", "326x^2+3", "--g", "326", "--threads", "2")[1]
    assert a == b
