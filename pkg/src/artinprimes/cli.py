"""Command-line interface: ``artinprimes <command> ...``.

Output is JSON by default (``--out jsonl`` gives one record per line and
``--out csv`` a table with header ``f,g,length,delta`` for search
results).  ``--log FILE`` appends result records and a run manifest to a
JSONL file.  Exit codes: 0 success, 2 configuration or parse error,
3 factorization budget exhausted, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Iterable, List, Optional

from . import __version__
from .arith import DEFAULT_BUDGET, FactorBudget, represent_3B2
from .artin import LengthReport, is_artin_prime, length, pair_length
from .charsums import a_d, jacobsthal_phi3, jacobsthal_phi3_sum
from .density import (Truncation, bateman_horn_C, class_distribution, delta, delta_g_linear,
                      empirical_delta)
from .discriminant import alphas, candidate_discs, disc_bound, disc_of_sqrt, minimal_g, tau
from .polytext import PolySyntaxError, parse_poly, render_poly
from .search import ConfigError, SearchCandidate, SearchConfig, scan_variations, search

EXIT_OK, EXIT_CONFIG, EXIT_BUDGET, EXIT_INVARIANT = 0, 2, 3, 4
DEFAULT_PRIME_BOUND = 10 ** 5
TABLE_COLUMNS = ["f", "g", "length", "delta"]


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _budget(text: str) -> FactorBudget:
    """``rho_iterations=10000,trial_bound=1000`` or a bare integer rho_iterations."""
    base = DEFAULT_BUDGET.to_dict()
    try:
        if "=" not in text:
            base["rho_iterations"] = int(text)
        else:
            for part in text.split(","):
                k, v = part.split("=")
                k = k.strip()
                if k not in base:
                    raise KeyError(k)
                base[k] = int(v)
    except (ValueError, KeyError) as exc:
        raise argparse.ArgumentTypeError(f"bad factor budget {text!r}: {exc}") from None
    return FactorBudget(**base)


def _shared() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    tr = p.add_mutually_exclusive_group()
    tr.add_argument("--prime-count", type=_int, help="truncate products at the first N primes")
    tr.add_argument("--prime-bound", type=_int, help="truncate products at primes <= B")
    p.add_argument("--max-n", type=_int, default=10 ** 6, help="largest n scanned by length runs")
    p.add_argument("--factor-budget", type=_budget, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=_int, default=1, help="worker processes for length scans")
    p.add_argument("--out", choices=["json", "jsonl", "csv"], default="json")
    p.add_argument("--log", metavar="FILE", help="append results and a manifest to a JSONL file")
    p.add_argument("--resume", metavar="FILE", help="continue a length scan from a saved report")
    return p


def build_parser() -> argparse.ArgumentParser:
    shared = _shared()
    ap = argparse.ArgumentParser(prog="artinprimes", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, help_):
        return sub.add_parser(name, parents=[shared], help=help_)

    p = cmd("parse", "parse and canonicalise a polynomial")
    p.add_argument("text", nargs="?")
    p.add_argument("--poly")

    p = cmd("delta", "truncated density delta(f)")
    p.add_argument("--poly", required=True)
    p.add_argument("--method", choices=["general", "closed_form"], default="general")
    p.add_argument("--tail", action="store_true", help="analytic tail (linear f)")
    p.add_argument("--g", type=_int, help="linear f only: delta_g(f)")

    p = cmd("tau", "fraction of allowable classes inert in Q(sqrt D)")
    p.add_argument("--poly", required=True)
    p.add_argument("--disc", type=_int, required=True)
    p.add_argument("--method", choices=["auto", "formula", "brute-force", "both"], default="auto")

    p = cmd("discs", "candidate fundamental discriminants")
    p.add_argument("--poly", required=True)
    p.add_argument("--max-abs", type=_int)
    p.add_argument("--tau-one", action="store_true", help="keep only D with tau = 1")

    p = cmd("length", "Artin prime production length")
    p.add_argument("--poly", required=True)
    p.add_argument("--g", type=_int, required=True)

    p = cmd("pair-length", "joint length of two polynomials")
    p.add_argument("--poly", required=True)
    p.add_argument("--poly2", required=True)
    p.add_argument("--g", type=_int, required=True)

    p = cmd("artin", "is g a primitive root mod p")
    p.add_argument("--p", type=_int, required=True)
    p.add_argument("--g", type=_int, required=True)

    p = cmd("jacobsthal", "Jacobsthal sum phi_{q,3}(E)")
    p.add_argument("--q", type=_int, required=True)
    p.add_argument("--E", type=_int, required=True)
    p.add_argument("--method", choices=["formula", "sum", "both"], default="both")

    p = cmd("a-d", "normalised character sum a_d(f)")
    p.add_argument("--poly", required=True)
    p.add_argument("--d", type=_int, required=True)
    p.add_argument("--method", choices=["auto", "scan", "fast"], default="auto")

    p = cmd("alphas", "2-adic weights alpha_1, alpha_3, alpha_5, alpha_7")
    p.add_argument("--poly", required=True)

    p = cmd("cf", "Bateman-Horn constant C(f)")
    p.add_argument("--poly", required=True)
    p.add_argument("--method", choices=["general", "closed_form"], default="general")

    p = cmd("empirical-delta", "observed Artin share among f(0..X)")
    p.add_argument("--poly", required=True)
    p.add_argument("--g", type=_int, required=True)
    p.add_argument("--X", type=_int, required=True)

    p = cmd("class-dist", "prime values by allowable class mod m")
    p.add_argument("--poly", required=True)
    p.add_argument("--m", type=_int, required=True)
    p.add_argument("--X", type=_int, required=True)

    p = cmd("search", "run a search config")
    p.add_argument("shape", choices=["linear", "quadratic", "cubic"])
    p.add_argument("--config", required=True, help="JSON search config")
    p.add_argument("--run-length", action="store_true")

    p = cmd("variations", "shift and k^2 g variations of a candidate")
    p.add_argument("--poly", required=True)
    p.add_argument("--g", type=_int, required=True)
    p.add_argument("--shifts", type=_int, nargs="*", default=[])
    p.add_argument("--scales", type=_int, nargs="*", default=[])
    return ap


def _truncation(args) -> Truncation:
    if args.prime_count is not None:
        return Truncation(prime_count=args.prime_count)
    return Truncation(prime_bound=args.prime_bound or DEFAULT_PRIME_BOUND)


def _poly(text: str):
    return parse_poly(text)


def _load_resume(path: str) -> LengthReport:
    with open(path) as fh:
        text = fh.read()
    doc = None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        for line in text.splitlines():
            if line.strip():
                rec = json.loads(line)
                if rec.get("record") == "result" and "next_n" in rec.get("result", {}):
                    doc = rec["result"]
    if doc is None or "next_n" not in doc:
        raise ConfigError(f"no length report found in {path}")
    return LengthReport.from_dict(doc)


# command bodies return a list of result dicts -----------------------------------

def _run(args) -> List[dict]:
    c = args.command
    budget = args.factor_budget
    if c == "parse":
        text = args.poly if args.poly is not None else args.text
        if text is None:
            raise ConfigError("parse needs a polynomial")
        f = _poly(text)
        return [{"input": text, "coeffs": [str(v) for v in f.coeffs],
                 "canonical": render_poly(f), "degree": f.degree}]
    if c == "delta":
        f = _poly(args.poly)
        if args.g is not None:
            if f.degree != 1:
                raise ConfigError("--g needs a linear polynomial")
            a, b = f.as_linear()
            return [delta_g_linear(a, b, args.g, _truncation(args), args.tail).to_dict()]
        return [delta(f, _truncation(args), args.method, args.tail).to_dict()]
    if c == "tau":
        f = _poly(args.poly)
        methods = ["formula", "brute-force"] if args.method == "both" else [args.method]
        vals = {}
        for m in methods:
            r = tau(f, args.disc, m)
            vals[r.method if m == "auto" else m] = str(r.value)
        out = {"f": str(f), "D": str(args.disc), "values": vals}
        if len(vals) > 1:
            out["equal"] = len(set(vals.values())) == 1
            if not out["equal"]:
                raise AssertionError(f"tau methods disagree: {vals}")
        return [out]
    if c == "discs":
        f = _poly(args.poly)
        rows = []
        for D in candidate_discs(f, args.max_abs, budget):
            t = tau(f, D).value
            if args.tau_one and t != 1:
                continue
            rows.append({"D": str(D), "tau": str(t), "g": str(minimal_g(D))})
        return [{"f": str(f), "bound": str(disc_bound(f)), "discs": rows}]
    if c in ("length", "pair-length"):
        f = _poly(args.poly)
        resume = _load_resume(args.resume) if args.resume else None
        if c == "length":
            rep = length(f, args.g, args.max_n, budget, resume, workers=args.threads)
        else:
            rep = pair_length(f, _poly(args.poly2), args.g, args.max_n, budget, resume,
                              workers=args.threads)
        out = rep.to_dict()
        out["f"] = str(f)
        return [out]
    if c == "artin":
        st = is_artin_prime(args.p, args.g, budget)
        return [st.to_dict()]
    if c == "jacobsthal":
        out = {"q": str(args.q), "E": str(args.E)}
        if args.method in ("formula", "both"):
            rep = represent_3B2(args.q)
            out["formula"] = str(jacobsthal_phi3(args.q, args.E))
            out["A"], out["B"] = str(rep.A), str(rep.B)
        if args.method in ("sum", "both"):
            if args.E % args.q == 0 or args.q % 3 != 1:
                raise ConfigError("need q = 1 mod 3 and q not dividing E")
            out["sum"] = str(jacobsthal_phi3_sum(args.q, args.E))
        if args.method == "both" and out["formula"] != out["sum"]:
            raise AssertionError("Jacobsthal formula and sum disagree")
        return [out]
    if c == "a-d":
        f = _poly(args.poly)
        return [{"f": str(f), "d": str(args.d), "value": str(a_d(f, args.d, args.method, budget))}]
    if c == "alphas":
        f = _poly(args.poly)
        out = alphas(f).to_dict()
        out["f"] = str(f)
        return [out]
    if c == "cf":
        return [bateman_horn_C(_poly(args.poly), _truncation(args), args.method).to_dict()]
    if c == "empirical-delta":
        r = empirical_delta(_poly(args.poly), args.g, args.X, budget)
        return [r.to_dict()]
    if c == "class-dist":
        f = _poly(args.poly)
        dist = class_distribution(f, args.m, args.X)
        return [{"f": str(f), "m": str(args.m), "X": str(args.X),
                 "classes": {str(r): repr(v) for r, v in dist.items()}}]
    if c == "search":
        with open(args.config) as fh:
            cfg = SearchConfig.from_json(fh.read())
        if cfg.shape != args.shape:
            raise ConfigError(f"config shape {cfg.shape!r} does not match {args.shape!r}")
        if args.run_length:
            cfg.run_length = True
        return [cand.to_dict() for cand in search(cfg)]
    if c == "variations":
        f = _poly(args.poly)
        D = disc_of_sqrt(args.g, budget)
        seed = SearchCandidate(f, D, args.g, delta(f, _truncation(args), "general"))
        res = list(scan_variations(seed, args.shifts, args.scales, args.max_n, budget, args.threads))
        return [v.to_dict() for v in res]
    raise ConfigError(f"unknown command {c}")  # pragma: no cover


def _exit_code_for(results: List[dict]) -> int:
    for r in results:
        if r.get("stop_reason") == "unknown" or r.get("status") == "unknown":
            return EXIT_BUDGET
        if r.get("unknown") and isinstance(r.get("unknown"), int):
            return EXIT_BUDGET
        length_rep = r.get("length")
        if isinstance(length_rep, dict) and length_rep.get("stop_reason") == "unknown":
            return EXIT_BUDGET
    return EXIT_OK


def _table_row(r: dict) -> dict:
    ln = r.get("length")
    if isinstance(ln, dict):
        ln = ln["length"]
    d = r.get("delta")
    if isinstance(d, dict):
        d = f"{float(d['value']):.6f}"
    return {"f": r.get("f", ""), "g": r.get("g", ""), "length": "" if ln is None else ln,
            "delta": "" if d is None else d}


def _render(command: str, results: List[dict], fmt: str) -> str:
    if fmt == "jsonl":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in results)
    if fmt == "csv":
        if command not in ("search", "variations", "length", "pair-length"):
            raise ConfigError(f"csv output is only available for tables, not {command}")
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in results:
            w.writerow(_table_row(r))
        return buf.getvalue()
    doc = results if command in ("search", "variations") else results[0]
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _config_of(args) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in ("log", "out"):
            continue
        if isinstance(v, FactorBudget):
            v = v.to_dict()
        elif isinstance(v, int) and not isinstance(v, bool):
            v = str(v)
        out[k] = v
    return out


def _append_log(path: str, args, results: List[dict], wall: float, code: int) -> None:
    tr = None
    if getattr(args, "prime_count", None) is not None or getattr(args, "prime_bound", None) is not None:
        tr = _truncation(args).to_dict()
    lines = [json.dumps({"record": "result", "command": args.command, "index": i, "result": r},
                        sort_keys=True) for i, r in enumerate(results)]
    manifest = {
        "record": "manifest", "command": args.command, "config": _config_of(args),
        "version": __version__, "truncation": tr, "rho_seed": args.factor_budget.rho_seed,
        "wall_time": round(wall, 6), "outcome": {"exit_code": code, "records": len(results)},
    }
    lines.append(json.dumps(manifest, sort_keys=True))
    with open(path, "a") as fh:
        fh.write("\n".join(lines) + "\n")


def _error(exc: BaseException, code: int, out) -> int:
    err = {"type": type(exc).__name__, "message": str(exc), "exit_code": code}
    if isinstance(exc, PolySyntaxError):
        err["position"] = exc.position
    out.write(json.dumps({"error": err}, sort_keys=True) + "\n")
    return code


def main(argv: Optional[Iterable[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_CONFIG
    start = time.perf_counter()
    try:
        results = _run(args)
        code = _exit_code_for(results)
        text = _render(args.command, results, args.out)
    except (ConfigError, PolySyntaxError, FileNotFoundError, json.JSONDecodeError) as exc:
        return _error(exc, EXIT_CONFIG, out)
    except AssertionError as exc:
        return _error(exc, EXIT_INVARIANT, out)
    except ArithmeticError as exc:
        if isinstance(exc, ZeroDivisionError):
            return _error(exc, EXIT_CONFIG, out)
        return _error(exc, EXIT_BUDGET, out)
    except ValueError as exc:
        return _error(exc, EXIT_CONFIG, out)
    out.write(text)
    if args.log:
        _append_log(args.log, args, results, time.perf_counter() - start, code)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
