"""Command-line front end.

Four subcommands: `solve` one instance to a JSON record, `gen` seeded
random instances, `verify` a corpus against the brute-force oracle with a
declared factor bound (exit 1 on any violation), and `bench` a corpus
without oracles. Suite rows are sorted by instance id so --jobs never
changes the emitted bytes; --no-timing zeroes the wall-clock field for
byte-reproducible output.

Exit codes: 0 ok, 1 verify violation, 2 usage, 3 instance parse error,
4 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .balanced import (cutwidth_balanced_approx, dpw_2approx, fas_balanced_approx,
                       fas_scheme, ola_directed_approx, ola_undirected_approx)
from .graph import EVALUATORS, OBJECTIVES, Digraph, gen_random
from .guards import SizeGuardError
from .instance_io import ParseError, parse_graph, serialize_graph
from .oracle import perm_opt
from .subset_dp import cutwidth_exact, dpw_exact, fas_exact, ola_exact

CSV_HEADER = ("instance,objective,mode,value,lower_bound,opt,ratio,"
              "table_entries,triangles,calls,millis")

_EXACT = {"fas": fas_exact, "cutwidth": cutwidth_exact,
          "ola": ola_exact, "dpw": dpw_exact}


class UsageError(Exception):
    pass


def _frac(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{what} must be a rational number, got {text!r}")


def _check_flags(obj: str, mode: str, eps, alpha, weighted: bool) -> None:
    """Reject flag combinations the selected solver cannot honor."""
    if mode == "exact":
        if eps is not None or alpha is not None or weighted:
            raise UsageError("--eps/--alpha/--weighted do not apply to --mode exact")
        return
    if alpha is not None and obj != "ola":
        raise UsageError("--alpha only applies to --obj ola")
    if mode == "scheme":
        if obj != "fas":
            raise UsageError("--mode scheme only applies to --obj fas")
        if eps is None:
            raise UsageError("--mode scheme requires --eps")
        return
    if mode == "3approx":
        if obj not in ("fas", "cutwidth"):
            raise UsageError("--mode 3approx only applies to fas and cutwidth")
        if eps is not None:
            raise UsageError("--mode 3approx fixes eps=1; drop --eps")
        if weighted:
            raise UsageError("--mode 3approx is already the weighted variant")
        return
    # 2approx
    if obj == "ola":
        if eps is not None:
            raise UsageError("ola derives its rounding from --alpha; drop --eps")
    elif obj == "dpw":
        if eps is not None or weighted:
            raise UsageError("--eps/--weighted do not apply to --obj dpw")
    elif weighted:
        raise UsageError(f"{obj} handles weights exactly; use --eps for the "
                         "rounded-cut variant")


def _mode_label(obj: str, mode: str, eps, alpha, weighted: bool) -> str:
    params = []
    if mode != "exact":
        if eps is not None:
            params.append(f"eps={eps}")
        if obj == "ola" and mode == "2approx":
            params.append(f"alpha={alpha if alpha is not None else Fraction(1, 2)}")
        if weighted:
            params.append("weighted")
    return mode + (f"({','.join(params)})" if params else "")


def _dispatch(g: Digraph, obj: str, mode: str, eps, alpha, weighted: bool):
    if mode == "exact":
        return _EXACT[obj](g)
    if obj == "fas":
        if mode == "2approx":
            return fas_balanced_approx(g, cut_eps=eps)
        if mode == "3approx":
            return fas_balanced_approx(g, cut_eps=1)
        return fas_scheme(g, eps, weighted=weighted)
    if obj == "cutwidth":
        if mode == "3approx":
            return cutwidth_balanced_approx(g, cut_eps=1)
        return cutwidth_balanced_approx(g, cut_eps=eps)
    if obj == "ola":
        a = alpha if alpha is not None else Fraction(1, 2)
        if g.undirected:
            return ola_undirected_approx(g, a, weighted=weighted)
        return ola_directed_approx(g, a, weighted=weighted)
    if obj == "dpw":
        return dpw_2approx(g)
    raise UsageError(f"no {mode} solver for --obj {obj}")


def _record(instance: str, g: Digraph, obj: str, label: str, rep,
            want_opt: bool, no_timing: bool) -> dict:
    if EVALUATORS[obj](g, rep.ordering) != rep.value:
        raise AssertionError("emitted value does not match its ordering")
    rec = {"instance": instance, "objective": obj, "mode": label,
           "value": rep.value, "lower_bound": rep.lower_bound}
    if want_opt:
        orc = perm_opt(g, obj)
        rec["opt"] = orc.opt
        if orc.opt > 0:
            rec["ratio"] = rep.value / orc.opt
        elif rep.value > 0:
            rec["ratio"] = "inf"
        # opt = 0 and value = 0: exact-zero, no ratio field
    rec["ordering"] = list(rep.ordering.pos)
    rec["stats"] = rep.stats.as_dict()
    rec["millis"] = 0.0 if no_timing else round(rep.millis, 3)
    return rec


def _csv_row(rec: dict) -> str:
    if "opt" in rec:
        opt = str(rec["opt"])
        if "ratio" in rec:
            ratio = str(rec["ratio"])
        else:
            ratio = "exact-zero"
    else:
        opt = ratio = ""
    stats = rec["stats"]
    cells = [rec["instance"], rec["objective"], rec["mode"], str(rec["value"]),
             str(rec["lower_bound"]), opt, ratio, str(stats["table_entries"]),
             str(stats["triangles"]), str(stats["calls"]), str(rec["millis"])]
    return ",".join(cells)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(path: str) -> Digraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}")
    return parse_graph(text)


def _corpus(path: str) -> list[tuple[str, str]]:
    """(instance id, file path) pairs, sorted by id."""
    if os.path.isfile(path):
        return [(os.path.basename(path), path)]
    if not os.path.isdir(path):
        raise UsageError(f"corpus path {path!r} is neither a file nor a directory")
    pairs = [(name, os.path.join(path, name))
             for name in os.listdir(path) if name.endswith(".g")]
    return sorted(pairs)


def _run_task(task: tuple) -> dict:
    """Worker for suite commands; re-parses the instance in-process."""
    instance, path, obj, mode, eps, alpha, weighted, want_opt, no_timing = task
    g = _load(path)
    eps_f = Fraction(eps) if eps is not None else None
    alpha_f = Fraction(alpha) if alpha is not None else None
    rep = _dispatch(g, obj, mode, eps_f, alpha_f, weighted)
    label = _mode_label(obj, mode, eps_f, alpha_f, weighted)
    return _record(instance, g, obj, label, rep, want_opt, no_timing)


def _run_suite(tasks: list[tuple], jobs: int) -> list[dict]:
    if jobs <= 1 or len(tasks) <= 1:
        records = [_run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_task, tasks))
    return sorted(records, key=lambda r: (r["instance"], r["mode"]))


def cmd_solve(ns: argparse.Namespace) -> int:
    eps = _frac(ns.eps, "--eps") if ns.eps is not None else None
    alpha = _frac(ns.alpha, "--alpha") if ns.alpha is not None else None
    _check_flags(ns.obj, ns.mode, eps, alpha, ns.weighted)
    g = _load(ns.instance)
    rep = _dispatch(g, ns.obj, ns.mode, eps, alpha, ns.weighted)
    label = _mode_label(ns.obj, ns.mode, eps, alpha, ns.weighted)
    rec = _record(ns.instance, g, ns.obj, label, rep, ns.oracle, ns.no_timing)
    _emit(json.dumps(rec, indent=2) + "\n", ns.out)
    return 0


def cmd_gen(ns: argparse.Namespace) -> int:
    if not 0.0 <= ns.p <= 1.0:
        raise UsageError("--p must lie in [0, 1]")
    if ns.n <= 0:
        raise UsageError("--n must be positive")
    if not 0 <= ns.wmin <= ns.wmax:
        raise UsageError("need 0 <= --wmin <= --wmax")
    g = gen_random(ns.n, ns.p, weight_range=(ns.wmin, ns.wmax),
                   seed=ns.seed, undirected=ns.ug)
    _emit(serialize_graph(g), ns.out)
    return 0


def cmd_verify(ns: argparse.Namespace) -> int:
    eps = _frac(ns.eps, "--eps") if ns.eps is not None else None
    alpha = _frac(ns.alpha, "--alpha") if ns.alpha is not None else None
    _check_flags(ns.obj, ns.mode, eps, alpha, ns.weighted)
    factor = _frac(ns.factor, "--factor")
    tasks = [(inst, path, ns.obj, ns.mode,
              str(eps) if eps is not None else None,
              str(alpha) if alpha is not None else None,
              ns.weighted, True, ns.no_timing)
             for inst, path in _corpus(ns.corpus)]
    records = _run_suite(tasks, ns.jobs)
    lines = [CSV_HEADER] + [_csv_row(r) for r in records]
    _emit("\n".join(lines) + "\n", ns.out)
    slack = Fraction(1, 10 ** 12)
    violations = 0
    for rec in records:
        value, opt = rec["value"], rec["opt"]
        bad = (value < opt
               or (opt == 0 and value > 0)
               or (opt > 0 and Fraction(value, opt) > factor + slack))
        if bad:
            violations += 1
            print(f"violation: {rec['instance']} value={value} opt={opt} "
                  f"factor={factor}", file=sys.stderr)
    print(f"verify: {len(records)} instance(s), {violations} violation(s)",
          file=sys.stderr)
    return 1 if violations else 0


def cmd_bench(ns: argparse.Namespace) -> int:
    modes = ns.mode or ["exact"]
    eps = _frac(ns.eps, "--eps") if ns.eps is not None else None
    alpha = _frac(ns.alpha, "--alpha") if ns.alpha is not None else None
    for mode in modes:
        _check_flags(ns.obj, mode, eps, alpha, ns.weighted)
    tasks = [(inst, path, ns.obj, mode,
              str(eps) if eps is not None else None,
              str(alpha) if alpha is not None else None,
              ns.weighted, False, ns.no_timing)
             for inst, path in _corpus(ns.corpus)
             for mode in modes]
    records = _run_suite(tasks, ns.jobs)
    lines = [CSV_HEADER] + [_csv_row(r) for r in records]
    _emit("\n".join(lines) + "\n", ns.out)
    return 0


def _add_mode_flags(p: argparse.ArgumentParser, multi_mode: bool = False) -> None:
    p.add_argument("--obj", required=True, choices=sorted(OBJECTIVES))
    if multi_mode:
        p.add_argument("--mode", action="append",
                       choices=["exact", "2approx", "3approx", "scheme"],
                       help="may be repeated; default exact")
    else:
        p.add_argument("--mode", default="exact",
                       choices=["exact", "2approx", "3approx", "scheme"])
    p.add_argument("--eps", help="rational, e.g. 0.5 or 1/3")
    p.add_argument("--alpha", help="rational in (0,1); ola approximations only")
    p.add_argument("--weighted", action="store_true",
                   help="weighted variant (fas scheme, ola)")
    p.add_argument("--no-timing", action="store_true",
                   help="report millis as 0 for byte-reproducible output")
    p.add_argument("--out", help="write to this path instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordercut",
        description="Exact and approximate vertex-ordering solvers "
                    "(fas, cutwidth, ola, dpw).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance, print a JSON record")
    p.add_argument("instance", help="instance file")
    _add_mode_flags(p)
    p.add_argument("--oracle", action="store_true",
                   help="also run the brute-force oracle (n <= 9)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=1)
    p.add_argument("--ug", action="store_true", help="undirected instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write to this path instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify",
                       help="run a corpus against the oracle; exit 1 on violation")
    p.add_argument("corpus", help="directory of .g files (or one file)")
    _add_mode_flags(p)
    p.add_argument("--factor", required=True,
                   help="declared approximation factor (rational)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a corpus, emit CSV (no oracle)")
    p.add_argument("corpus", help="directory of .g files (or one file)")
    _add_mode_flags(p, multi_mode=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
