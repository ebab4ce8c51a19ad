"""Command line interface: ``bruric <command> [options]``."""

import argparse
import json
import os
import signal
import sys
from contextlib import contextmanager

from . import io as bio
from .curvature import (global_ricci, lower_bound_triangle_free, simplified_lower_bound,
                        upper_bound_triangles)
from .errors import (BruricError, BudgetExceeded, CacheError, InvalidElement, OverflowBudget,
                     UnsupportedType)
from .gamma import gamma_b, gamma_d
from .groups import DEFAULT_MAX_ELEMENTS, CoxeterSpec, enumerate_group
from .hasse import ARGMAX_CAP, build_hasse, degree_report, is_triangle_free, max_triangle_pairs
from .perms import check_window, parse_window

EXIT_USAGE, EXIT_BUDGET, EXIT_VERIFY = 2, 3, 4


class UsageError(Exception):
    pass


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", help="A, B, D, I2, H3, F4 or E6")
    common.add_argument("--rank", type=int)
    common.add_argument("--m", type=int, help="m for the dihedral family I2(m)")
    common.add_argument("--cache", metavar="PATH",
                        help="load the group from PATH if it exists, otherwise save it there")
    common.add_argument("--out", metavar="PATH", help="write the result to PATH instead of stdout")
    common.add_argument("--format", choices=("text", "dot", "csv", "json"), default=None)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--tol", type=float, default=1e-12, help="eigen solver tolerance")
    common.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)
    common.add_argument("--max-seconds", type=float, default=1800.0)

    parser = argparse.ArgumentParser(prog="bruric", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="enumerate a group and summarise it")
    deg = sub.add_parser("degrees", parents=[common], help="degree statistics of the Hasse diagram")
    deg.add_argument("--all-argmax", action="store_true", help="list every maximising element")
    sub.add_parser("curvature", parents=[common], help="Ricci curvature of the Hasse diagram")
    sub.add_parser("bounds", parents=[common], help="curvature bounds from degrees and triangles")
    gam = sub.add_parser("gamma", parents=[common], help="Gamma graph of one element")
    gam.add_argument("--element", required=True, help="window such as 4,-3,2,-1")
    gam.add_argument("--tilde", action="store_true", help="the graph on signed values (type B)")
    ver = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    ver.add_argument("--check", action="append", help="run only this check (repeatable)")
    ver.add_argument("--sample", type=int, default=10_000, help="sampled B7 windows")
    ver.add_argument("--list", action="store_true", help="list check names and exit")
    return parser


def _spec(args):
    if args.family is None:
        raise UsageError("--family is required")
    try:
        return CoxeterSpec.parse(args.family, args.rank, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _table(args):
    spec = _spec(args)
    if args.cache and os.path.exists(args.cache):
        g = bio.load_group(args.cache)
        if g.spec != spec:
            raise UsageError(f"cache {args.cache} holds {g.spec.name}, not {spec.name}")
        return g
    g = enumerate_group(spec, args.max_elements)
    if args.cache:
        bio.save_group(g, args.cache)
    return g


def _emit(args, text, newline="\n"):
    if args.out:
        bio._write(args.out, text, newline=newline)
    else:
        sys.stdout.write(text)


@contextmanager
def _deadline(seconds):
    if not seconds or not hasattr(signal, "SIGALRM") or os.name != "posix":
        yield
        return
    try:
        previous = signal.signal(signal.SIGALRM, _timeout)
    except ValueError:  # not in the main thread
        yield
        return
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)


def _timeout(signum, frame):
    raise BudgetExceeded("wall-clock budget exhausted")


# ---------------------------------------------------------------------------
# commands

def cmd_enumerate(args):
    g = _table(args)
    lines = [f"group={g.spec.name}", f"order={len(g)}", f"reflections={len(g.reflections)}",
             f"max_length={int(g.length.max())}"]
    if g.spec.note:
        lines.append(f"note={g.spec.note}")
    if args.format == "json":
        _emit(args, json.dumps(dict(kv.split("=", 1) for kv in lines), indent=2) + "\n")
    else:
        _emit(args, "\n".join(lines) + "\n")


def cmd_degrees(args):
    g = _table(args)
    h = build_hasse(g)
    rep = degree_report(h)
    cap = None if args.all_argmax else ARGMAX_CAP
    labels = rep.argmax_labels(h, cap)
    fmt = args.format or "text"
    if fmt == "csv":
        _emit(args, bio.csv_text(rep), newline="")
    elif fmt == "json":
        data = {"group": g.spec.name, "max_degree": rep.max_degree,
                "argmax_count": rep.argmax_count, "argmax": labels,
                "histogram": {str(k): v for k, v in rep.histogram.items()}}
        _emit(args, json.dumps(data, indent=2) + "\n")
    elif fmt == "dot":
        _emit(args, bio.dot_text(h))
    else:
        shown = " ".join(f"[{x}]" for x in labels)
        more = " ..." if len(labels) < rep.argmax_count else ""
        hist = " ".join(f"{d}:{c}" for d, c in rep.histogram.items())
        _emit(args, f"max_degree={rep.max_degree} argmax={shown}{more}\n"
                    f"argmax_count={rep.argmax_count}\nhistogram={hist}\n")


def cmd_curvature(args):
    g = _table(args)
    h = build_hasse(g)
    threads = args.threads or os.cpu_count() or 1
    rep = global_ricci(h, threads=threads, tol=args.tol)
    fmt = args.format or "text"
    if fmt == "json":
        _emit(args, bio.json_text(rep))
        return
    if fmt == "csv":
        lines = ["vertex,window,degree,ric"]
        lines += [f'{r.vertex},"{rep.labels[r.vertex]}",{r.degree},{r.ric!r}' for r in rep.rows]
        _emit(args, "\r\n".join(lines) + "\r\n", newline="")
        return
    lower = "n/a (graph has triangles)" if rep.lower_bound is None else f"{rep.lower_bound:.12g}"
    _emit(args, "\n".join([
        f"ric={rep.ric:.12g}",
        f"worst_vertex={rep.worst_vertex} [{rep.labels[rep.worst_vertex]}]",
        f"lower_bound={lower}",
        f"simplified_lower_bound={rep.simplified_lower_bound}",
        f"upper_bound={rep.upper_bound:.12g}",
        f"d_max={rep.d_max}",
        f"within_bounds={(rep.lower_bound is None or rep.lower_bound <= rep.ric + 1e-9) and rep.ric <= rep.upper_bound + 1e-9}",
    ]) + "\n")


def cmd_bounds(args):
    h = build_hasse(_table(args))
    free = is_triangle_free(h)
    data = {
        "d_max": h.max_degree,
        "triangle_free": free,
        "lower_bound": lower_bound_triangle_free(h) if free else None,
        "simplified_lower_bound": simplified_lower_bound(h.max_degree),
        "T": max_triangle_pairs(h),
        "upper_bound": upper_bound_triangles(h),
    }
    if args.format == "json":
        _emit(args, json.dumps(data, indent=2) + "\n")
    else:
        _emit(args, "".join(f"{k}={v}\n" for k, v in data.items()))


def cmd_gamma(args):
    family = (args.family or "").upper()
    if family not in ("B", "D"):
        raise UsageError("gamma needs --family B or --family D")
    w = check_window(parse_window(args.element), family)
    if args.rank is not None and args.rank != len(w):
        raise UsageError(f"window has length {len(w)}, not {args.rank}")
    if family == "D":
        if args.tilde:
            raise UsageError("--tilde applies to type B only")
        graph = gamma_d(w)
    else:
        graph = gamma_b(w).tilde() if args.tilde else gamma_b(w)
    fmt = args.format or "dot"
    if fmt == "dot":
        _emit(args, bio.dot_text(graph))
    elif fmt in ("json", "text"):
        if hasattr(graph, "loops"):
            data = {"n": graph.n, "loops": list(graph.loops),
                    "plain": [list(e) for e in graph.plain],
                    "minus": [list(e) for e in graph.minus], "edge_count": graph.edge_count}
        else:
            data = {"n": graph.n, "edges": [list(e) for e in graph.edges],
                    "edge_count": graph.edge_count}
        data["degrees"] = {str(k): v for k, v in graph.degrees().items()}
        _emit(args, json.dumps(data, indent=2 if fmt == "json" else None) + "\n")
    else:
        raise UsageError("gamma supports --format dot, json or text")


def cmd_verify(args):
    from . import verify

    if args.list:
        _emit(args, "".join(f"{key}: {title}\n" for key, title, *_ in verify.CHECKS))
        return 0
    known = {key for key, *_ in verify.CHECKS}
    for name in args.check or ():
        if name not in known:
            raise UsageError(f"unknown check {name!r}")
    if args.sample < 1:
        raise UsageError("--sample must be positive")
    checks = [(k, t, (lambda s=args.sample: verify.check_min_degree_b7(samples=s))
               if k == "7c-mindeg-B7" else fn, lim)
              for k, t, fn, lim in verify.CHECKS]
    results = verify.run_all(args.check, stream=sys.stdout, checks=checks)
    failed = [r.name for r in results if not r.passed]
    summary = f"{len(results) - len(failed)}/{len(results)} checks passed"
    if failed:
        summary += "; failed: " + ", ".join(failed)
    print(summary)
    if args.out:
        bio._write(args.out, "".join(r.line() + "\n" for r in results) + summary + "\n")
    return EXIT_VERIFY if failed else 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "degrees": cmd_degrees,
    "curvature": cmd_curvature,
    "bounds": cmd_bounds,
    "gamma": cmd_gamma,
    "verify": cmd_verify,
}


def _glue_values(argv):
    """Let ``--element -1,2`` through: argparse would read the window as a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--element":
            value = next(it, None)
            out.append(tok if value is None else f"--element={value}")
        else:
            out.append(tok)
    return out


def main(argv=None):
    parser = _parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be positive")
    if args.tol <= 0:
        parser.error("--tol must be positive")
    try:
        with _deadline(args.max_seconds):
            code = COMMANDS[args.command](args)
    except (UsageError, UnsupportedType, InvalidElement) as exc:
        print(f"bruric: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OverflowBudget, BudgetExceeded) as exc:
        print(f"bruric: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CacheError, BruricError) as exc:
        print(f"bruric: error: {exc}", file=sys.stderr)
        return 1
    return code or 0


def entry():
    sys.exit(main())
