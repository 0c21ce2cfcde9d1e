"""Command-line front end.

Exit codes: 0 classified or checked ok, 1 unclassified or violations found,
2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import kulikov, report
from .errors import InvalidModel, K3DegError, NotInClassification, ParseError
from .fibres import classify
from .germs import GermError, classify_germ, classify_point
from .models import FiberModel, HYPERELLIPTIC, UNIGONAL, P114_VARS
from .parsing import format_poly, parse_poly
from .tables import ALL_ROWS, UNCLASSIFIED

GERM_VARS = ("x", "y")
EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class _InputError(Exception):
    def __init__(self, errors):
        super().__init__("; ".join(errors))
        self.errors = list(errors)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("K3DEG_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _InputError([f"K3DEG_SEED must be an integer, got {env!r}"])
    return 0


def _parse(text, what, names=None):
    try:
        return parse_poly(text) if names is None else parse_poly(text, names)
    except ParseError as exc:
        raise _InputError([f"{what}: {exc}"])


# classify


def _model_from_args(args):
    f6 = _parse(args.f6, "--f6")
    if args.model == HYPERELLIPTIC:
        if args.f2 is not None:
            raise _InputError(["--f2 is only used with --model unigonal"])
        return FiberModel(HYPERELLIPTIC, f6), {"model": HYPERELLIPTIC, "f6": format_poly(f6)}
    if args.f2 is None:
        raise _InputError(["--model unigonal needs --f2"])
    f2 = _parse(args.f2, "--f2")
    echo = {"model": UNIGONAL, "f2": format_poly(f2), "f6": format_poly(f6)}
    param = None
    if args.param:
        parts = args.param.split(",")
        if len(parts) != 3:
            raise _InputError(["--param needs three comma-separated forms in u, v"])
        param = tuple(_parse(p, "--param", P114_VARS[:2]) for p in parts)
        echo["parametrization"] = [format_poly(p) for p in param]
    return FiberModel(UNIGONAL, f6, f2, param), echo


def run_classify(args):
    model, echo = _model_from_args(args)
    c = classify(model)
    code = EXIT_FAIL if c.row == UNCLASSIFIED else EXIT_OK
    return echo, c.to_dict(), code


def _human_classify(echo, result):
    lines = [f"input: {json.dumps(echo)}", f"type: {result['type'] or '-'}", f"row:  {result['row']}"]
    for k, v in result["annotations"].items():
        lines.append(f"{k}: {v}")
    if result["inventory"]:
        lines.append(f"{'where':<6} {'class':<14} {'size':>4} {'mu':>4}  point")
        for p in result["inventory"]:
            name = p["label"] + (f"({','.join(map(str, p['params']))})" if p["params"] else "")
            orbit = p.get("orbit", {})
            pt = f"{orbit.get('chart', '')} {orbit.get('point', '')}"
            lines.append(f"{p['where']:<6} {name:<14} {p['size']:>4} {str(p.get('milnor', '-')):>4}  {pt}")
    for d in result["diagnostics"]:
        lines.append(f"diagnostic: {d}")
    return "\n".join(lines)


# germ


def _parse_point(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise _InputError(["--at needs two comma-separated rationals"])
    try:
        return tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise _InputError([f"--at: cannot read {text!r} as two rationals"])


def run_germ(args):
    f = _parse(args.f, "--f", GERM_VARS)
    at = _parse_point(args.at)
    echo = {"f": format_poly(f), "at": [str(c) for c in at]}
    g = f.translate(at) if any(at) else f
    if not g:
        raise _InputError(["the germ is zero"])
    if g.constant_value():
        raise _InputError(["the point is not on the curve"])
    try:
        rep = classify_germ(g)
        result = {"class": rep.cls.to_dict(), **{k: v for k, v in rep.to_dict().items() if k != "class"}}
    except GermError:
        # non-reduced: report the local type of the surface z^2 = f instead
        cls = classify_point(g)
        result = {"class": cls.to_dict(), "multiplicity": g.low_degree(), "milnor": "inf",
                  "tangent_cone": [], "non_normal": cls.to_dict()}
    code = EXIT_FAIL if result["class"]["label"] == "Unclassified" else EXIT_OK
    return echo, result, code


# kulikov


def _load_config(path):
    try:
        data = json.loads(Path(path).read_text("utf-8"))
    except OSError as exc:
        raise _InputError([f"cannot read {path}: {exc.strerror}"])
    except json.JSONDecodeError as exc:
        raise _InputError([f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})"])
    try:
        return kulikov.KulikovConfig.from_dict(data)
    except kulikov.InvalidConfig as exc:
        raise _InputError([str(exc)])


def run_kulikov_check(args):
    cfg = _load_config(args.config)
    rep = kulikov.check(cfg)
    return {"config": args.config}, rep.to_dict(), EXIT_OK if rep.ok else EXIT_FAIL


# corpus


def corpus_dir() -> Path:
    return Path(str(resources.files("k3deg").joinpath("corpus")))


def load_corpus(directory=None, row=None):
    d = Path(directory) if directory else corpus_dir()
    if not d.is_dir():
        raise _InputError([f"corpus directory {d} does not exist"])
    entries = []
    for fn in sorted(d.glob("*.json")):
        try:
            e = json.loads(fn.read_text("utf-8"))
        except json.JSONDecodeError as exc:
            raise _InputError([f"{fn.name}: invalid JSON ({exc.msg})"])
        e.setdefault("name", fn.stem)
        if row is None or e.get("expected_row") == row:
            entries.append(e)
    return entries


def corpus_model(entry) -> FiberModel:
    f6 = parse_poly(entry["f6"])
    f2 = parse_poly(entry["f2"]) if entry.get("f2") else None
    return FiberModel(entry["model"], f6, f2)


def _run_entry(entry):
    t = time.perf_counter()
    try:
        row = classify(corpus_model(entry)).row
    except (K3DegError, ArithmeticError) as exc:
        row, err = "error", str(exc)
    else:
        err = None
    out = {"name": entry["name"], "expected_row": entry["expected_row"], "row": row,
           "pass": row == entry["expected_row"], "seconds": time.perf_counter() - t}
    if err:
        out["error"] = err
    return out


def run_corpus(args):
    if args.filter is not None and args.filter not in ALL_ROWS:
        raise _InputError([f"--filter must name a table row, got {args.filter!r}"])
    entries = load_corpus(args.dir, args.filter)
    if not entries:
        raise _InputError(["no corpus entries to run"])
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_entry, entries))  # map keeps corpus order
    else:
        results = [_run_entry(e) for e in entries]
    timings = {r["name"]: r.pop("seconds") for r in results}
    rows = {}
    for r in results:
        cell = rows.setdefault(r["expected_row"], {"matched": 0, "total": 0})
        cell["total"] += 1
        cell["matched"] += r["pass"]
    matched = sum(r["pass"] for r in results)
    result = {"entries": results, "matched": matched, "total": len(results),
              "rows": {k: rows[k] for k in ALL_ROWS if k in rows}}
    echo = {"filter": args.filter, "dir": args.dir}
    args._timings = timings
    return echo, result, EXIT_OK if matched == len(results) else EXIT_FAIL


def _human_corpus(result):
    lines = [f"{'entry':<36} {'expected':<9} {'got':<13} ok"]
    for r in result["entries"]:
        lines.append(f"{r['name']:<36} {r['expected_row']:<9} {r['row']:<13} {'yes' if r['pass'] else 'NO'}")
    lines.append("")
    lines.append("row       matched")
    for k, v in result["rows"].items():
        lines.append(f"{k:<9} {v['matched']}/{v['total']}")
    lines.append(f"corpus: {result['matched']}/{result['total']} matched")
    return "\n".join(lines)


def _human_kulikov(result):
    lines = ["pass" if result["ok"] else "FAIL"]
    for v in result["violations"]:
        lines.append(f"  [{v['check']}] {v['message']}")
    for cid, cls in result["surfaces"].items():
        lines.append(f"  component {cid}: {cls}")
    if result["starCurves"]:
        lines.append(f"  (*)-curves: {result['starCurves']}")
    return "\n".join(lines)


def _human_germ(echo, result):
    return f"{result['class']['name']}  (multiplicity {result['multiplicity']}, milnor {result['milnor']})"


# argument parsing


def _add_globals(p, suppress):
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                   help="emit a JSON report")
    p.add_argument("--seed", type=_u64, default=default, help="RNG seed (overrides K3DEG_SEED)")
    p.add_argument("--timing", action="store_true", default=argparse.SUPPRESS if suppress else False,
                   help="include wall-clock timings in the report")


def _u64(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="k3deg", description="Classify degenerate fibres of degree-two K3 surfaces.")
    _add_globals(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="classify a fibre model")
    _add_globals(c, suppress=True)
    c.add_argument("--model", required=True, choices=(HYPERELLIPTIC, UNIGONAL))
    c.add_argument("--f6", required=True, help="sextic in x1, x2, x3 (and y for unigonal models)")
    c.add_argument("--f2", help="quadric in x1, x2, x3 (unigonal models)")
    c.add_argument("--param", help="parametrization of the conic: three forms in u, v")

    g = sub.add_parser("germ", help="classify a plane curve germ (variables x, y)")
    _add_globals(g, suppress=True)
    g.add_argument("--f", required=True)
    g.add_argument("--at", default="0,0")

    k = sub.add_parser("kulikov", help="Kulikov configuration checks")
    ksub = k.add_subparsers(dest="kcommand", required=True, parser_class=_Parser)
    kc = ksub.add_parser("check", help="check a JSON configuration file")
    _add_globals(kc, suppress=True)
    kc.add_argument("config")

    cp = sub.add_parser("corpus", help="bundled corpus")
    csub = cp.add_subparsers(dest="ccommand", required=True, parser_class=_Parser)
    cr = csub.add_parser("run", help="classify every corpus entry")
    _add_globals(cr, suppress=True)
    cr.add_argument("--filter", help="only run entries expected in this row")
    cr.add_argument("--dir", help="corpus directory (default: the bundled one)")
    cr.add_argument("--jobs", type=int, default=1, help="worker processes (results keep corpus order)")
    return p


def main(argv=None, stdout=None) -> int:
    out = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    command = {"classify": "classify", "germ": "germ", "kulikov": "kulikov check", "corpus": "corpus run"}[args.command]
    runner = {"classify": run_classify, "germ": run_germ, "kulikov check": run_kulikov_check,
              "corpus run": run_corpus}[command]
    t0 = time.perf_counter()
    echo, result, errors = {}, None, []
    try:
        seed = _seed(args)
        echo, result, code = runner(args)
    except _InputError as exc:
        seed, errors, code = getattr(args, "seed", None) or 0, exc.errors, EXIT_INVALID
    except InvalidModel as exc:
        errors, code = exc.errors, EXIT_INVALID
    except (NotInClassification, GermError) as exc:
        errors, code = [f"{type(exc).__name__}: {exc}"], EXIT_INVALID
    timing = None
    if args.timing:
        timing = {"total_seconds": time.perf_counter() - t0}
        timing.update(getattr(args, "_timings", {}))
    rep = report.make_report(command, echo, valid=not errors, errors=errors, result=result,
                             exit_code=code, seed=seed, timing=timing)
    if args.json:
        report.validate_report(rep)
        print(report.dumps(rep), file=out)
    elif errors:
        print("invalid input:", file=out)
        for e in errors:
            print(f"  {e}", file=out)
    elif command == "classify":
        print(_human_classify(echo, result), file=out)
    elif command == "germ":
        print(_human_germ(echo, result), file=out)
    elif command == "kulikov check":
        print(_human_kulikov(result), file=out)
    else:
        print(_human_corpus(result), file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
