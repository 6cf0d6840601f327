"""Command-line front end.

Exit codes: 0 success, 1 I/O or parse error, 2 usage error, 3 a flower was
found where freeness was asserted, 4 a detector budget ran out.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .graph import (
    FlowerSpec,
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    cycle,
    efgg_extremal,
    flower,
    friendship,
    hks_extremal,
    path,
    split_graph,
    to_graph6,
    windmill,
)
from .search import (
    SearchAborted,
    StreamError,
    enumerate_labeled,
    ingest_stream,
    randomized_challenge,
    spectral_extremal_search,
    turan_search,
)
from .spectral import BoundReport, ConvergenceError, bound_report, q_radius
from .subgraph import DEFAULT_BUDGET, BudgetExceeded, CapabilityError, find_flower

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_CONTAINS, EXIT_BUDGET = 0, 1, 2, 3, 4

log = logging.getLogger("flowerq")


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"3..6"`` or ``"5"`` as an inclusive integer pair."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            pair = int(lo), int(hi)
        else:
            pair = int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if pair[0] > pair[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return pair


def parse_spec(text: str) -> FlowerSpec:
    try:
        return FlowerSpec.parse(text)
    except GraphError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def fmt(x: float) -> str:
    return f"{x:.9f}"


def resolved_config(args: argparse.Namespace) -> dict:
    out = {}
    for key, val in sorted(vars(args).items()):
        if key == "func":
            continue
        if isinstance(val, FlowerSpec):
            val = str(val)
        elif isinstance(val, Path):
            val = str(val)
        elif isinstance(val, tuple):
            val = list(val)
        out[key] = val
    return out


def write_json(path: str | None, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_graphs(path: str):
    if path == "-":
        tmp = sys.stdin.read().splitlines()
        from .graph import from_graph6

        for line_no, line in enumerate(tmp, 1):
            line = line.strip()
            if not line or line == ">>graph6<<":
                continue
            try:
                yield from_graph6(line)
            except GraphError as exc:
                raise StreamError("<stdin>", line_no, exc) from exc
        return
    yield from ingest_stream(path)


# -- construct -------------------------------------------------------------------------


def _family_graph(args) -> Graph:
    fam, p = args.family, list(args.params or [])

    def pick(name, index):
        val = getattr(args, name)
        if val is not None:
            return val
        if index < len(p):
            return p[index]
        raise UsageError(f"--family {fam} needs --{name}")

    if fam == "split":
        return split_graph(pick("n", 0), pick("t", 1))
    if fam == "windmill":
        return windmill(pick("r", 0), pick("t", 1))
    if fam == "flower":
        spec = args.spec if args.spec is not None else (FlowerSpec(p) if p else None)
        if spec is None:
            raise UsageError("--family flower needs --spec a1,a2,...")
        return flower(spec)
    if fam == "friendship":
        return friendship(pick("k", 0))
    if fam == "efgg":
        return efgg_extremal(pick("n", 0), pick("k", 1))
    if fam == "hks":
        return hks_extremal(pick("n", 0), pick("k", 1))
    if fam == "complete":
        return complete(pick("n", 0))
    if fam == "cycle":
        return cycle(pick("n", 0))
    if fam == "path":
        return path(pick("n", 0))
    if fam == "bipartite":
        return complete_bipartite(pick("r", 0), pick("s", 1))
    raise UsageError(f"unknown family {fam}")


def cmd_construct(args) -> int:
    g = _family_graph(args)
    g6 = to_graph6(g)
    if args.out:
        Path(args.out).write_text(g6 + "\n")
    print(g6)
    degs = g.degree_sequence()
    summary = f"n={g.n} e={g.edge_count}"
    if g.n:
        summary += f" max_degree={degs[0]} min_degree={degs[-1]}"
    print(summary)
    return EXIT_OK


# -- q ----------------------------------------------------------------------------------


def cmd_q(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n") if args.bounds else None
    if writer:
        writer.writerow(BoundReport.CSV_FIELDS)
    for g in _read_graphs(args.input):
        if args.bounds:
            writer.writerow(bound_report(g).csv_row())
        else:
            value = q_radius(g, args.tol).value if g.n else 0.0
            print(f"{to_graph6(g)} {fmt(value)}")
    return EXIT_OK


# -- free-check ---------------------------------------------------------------------------


def cmd_free_check(args) -> int:
    status = EXIT_OK
    for g in _read_graphs(args.input):
        g6 = to_graph6(g)
        try:
            w = find_flower(g, args.spec, args.budget)
        except BudgetExceeded:
            print(f"{g6} BUDGET", flush=True)
            sys.stderr.write(f"detector budget {args.budget} exceeded on {g6}\n")
            return EXIT_BUDGET
        if w is None:
            print(f"{g6} FREE")
        else:
            status = EXIT_CONTAINS
            print(f"{g6} CONTAINS" + (f" {w.to_json()}" if args.witness else ""))
    return status


# -- search --------------------------------------------------------------------------------


def cmd_search(args) -> int:
    t0 = time.perf_counter()
    spec = args.spec
    if args.challenge is not None:
        if args.objective != "q":
            raise UsageError("--challenge only supports --objective q")
        rec = randomized_challenge(args.n, spec, args.challenge, args.seed, args.budget)
    else:
        if args.input:
            graphs = (g for g in ingest_stream(args.input) if g.n == args.n)
        elif args.labeled:
            graphs = enumerate_labeled(args.n)
        else:
            raise UsageError("choose --labeled, --in FILE or --challenge TRIALS")
        run = spectral_extremal_search if args.objective == "q" else turan_search
        kw = {"connected_only": args.connected, "workers": args.workers, "budget": args.budget}
        rec = run(graphs, spec, **kw)
    payload = {"config": resolved_config(args), "record": rec.as_dict(), "timing": {"elapsed_s": time.perf_counter() - t0}}
    if args.out:
        write_json(args.out, payload)
    best = rec.best_value
    shown = "none" if best is None else (fmt(best) if args.objective == "q" else str(best))
    line = f"n={args.n} spec={spec} objective={args.objective} best={shown} scanned={rec.scanned} free={rec.free_count}"
    if rec.reference is not None:
        line += f" q(S_n,t)={fmt(rec.reference)} match={rec.matches_reference}"
    print(line)
    print(f"witnesses={len(rec.witnesses)} classes={len(rec.classes())}")
    if rec.violations:
        print(f"VIOLATIONS={len(rec.violations)}")
        return EXIT_CONTAINS
    return EXIT_OK


# -- verify ----------------------------------------------------------------------------------

CHECK_CHOICES = (
    "lemma2.1", "lemma2.2", "lemma2.3", "lemma2.4", "lemma2.5", "lemma2.6",
    "lemma3.1", "lemma3.2", "theorem", "turan", "sandwich", "all",
)


def _check_params(args) -> dict:
    c = args.check
    given = {k: v for k, v in (("n", args.n_range), ("k", args.k), ("t", args.t), ("r", args.r)) if v is not None}
    if c in ("lemma2.1", "lemma2.2"):
        return _fold(given, n="n_range", k="k_range")
    if c == "lemma2.6":
        return _fold(given, n="n_range")
    if c == "lemma2.4":
        p = _fold(given, t="t_range")
        if "n" in given:
            p["n_max"] = given["n"][1]
        p["seed"] = args.seed
        return p
    if c == "lemma2.5":
        return _fold(given, t="t_range", r="r_range")
    if c in ("lemma2.3", "lemma3.2"):
        return {**_fold(given, n="n_range"), **_spec_param(args)}
    if c == "lemma3.1":
        p = {"seed": args.seed, "window": args.window, **_spec_param(args)}
        if "n" in given:
            p["n"] = given["n"][0]
        if args.trials is not None:
            p["trials"] = args.trials
        return p
    if c == "theorem":
        p = {**_fold(given, n="n_range"), **_spec_param(args), "workers": args.workers}
        if args.fixture:
            p.update(source="fixture", fixture=args.fixture)
        elif args.trials is not None:
            p.update(source="challenge", trials=args.trials, seed=args.seed)
        return p
    if c == "turan":
        return _fold(given, n="n_range", k="k_range")
    if c == "sandwich":
        p = {"seed": args.seed}
        if "n" in given:
            p["n_max"] = given["n"][1]
        if args.samples is not None:
            p["samples"] = args.samples
        return p
    raise UsageError(f"unknown check {c}")


def _fold(given: dict, **names) -> dict:
    extra = set(given) - set(names)
    if extra:
        raise UsageError(f"flag(s) {', '.join('--' + e for e in sorted(extra))} do not apply here")
    return {names[k]: v for k, v in given.items()}


def _spec_param(args) -> dict:
    return {"spec": str(args.spec)} if args.spec is not None else {}


def cmd_verify(args) -> int:
    from .verify import desk_plan, run_check

    t0 = time.perf_counter()
    if args.check == "all":
        if not args.desk:
            raise UsageError("--check all runs the desk plan; pass --desk")
        plan = desk_plan(args.fixture)
    else:
        plan = [(args.check, _check_params(args))]
    reports = []
    for check_id, params in plan:
        try:
            rep = run_check(check_id, **params)
        except CapabilityError as exc:
            raise UsageError(
                f"{exc}. Feasible envelope: exhaustive checks need n <= 7; "
                "order 8 needs --fixture; larger orders use --trials (randomized challenge)"
            ) from None
        reports.append(rep)
        print(rep.to_text(), flush=True)
    ok = all(r.passed for r in reports)
    payload = {
        "config": resolved_config(args),
        "status": "pass" if ok else "fail",
        "reports": [r.as_dict(timing=False) for r in reports],
        "timing": {"total_s": time.perf_counter() - t0, "per_check_s": [r.elapsed for r in reports]},
    }
    if args.out:
        write_json(args.out, payload)
    print(f"overall: {'PASS' if ok else 'FAIL'} ({sum(r.passed for r in reports)}/{len(reports)} checks)")
    return EXIT_OK if ok else EXIT_CONTAINS


# -- parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="flowerq", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named graph family and write graph6")
    c.add_argument("--family", required=True,
                   choices=["split", "windmill", "flower", "efgg", "hks", "friendship",
                            "complete", "cycle", "path", "bipartite"])
    c.add_argument("--params", nargs="*", type=int, help="positional family parameters")
    for name in ("n", "t", "r", "k", "s"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--spec", type=parse_spec)
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    q = sub.add_parser("q", help="signless Laplacian spectral radius per graph6 line")
    q.add_argument("--in", dest="input", required=True)
    q.add_argument("--bounds", action="store_true", help="emit a CSV bound report")
    q.add_argument("--tol", type=float)
    q.set_defaults(func=cmd_q)

    f = sub.add_parser("free-check", help="test each graph for a flower")
    f.add_argument("--in", dest="input", required=True)
    f.add_argument("--spec", required=True, type=parse_spec)
    f.add_argument("--witness", action="store_true")
    f.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    f.set_defaults(func=cmd_free_check)

    s = sub.add_parser("search", help="extremal search over a graph stream")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--spec", required=True, type=parse_spec)
    src = s.add_mutually_exclusive_group()
    src.add_argument("--labeled", action="store_true")
    src.add_argument("--in", dest="input")
    src.add_argument("--challenge", type=int, metavar="TRIALS")
    s.add_argument("--objective", choices=["q", "edges"], default="q")
    s.add_argument("--connected", action="store_true")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--workers", type=int)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="run lemma and theorem checks")
    v.add_argument("--check", required=True, choices=CHECK_CHOICES)
    v.add_argument("--desk", action="store_true", help="with --check all, run the full desk plan")
    v.add_argument("--n", dest="n_range", type=parse_range)
    v.add_argument("--k", type=parse_range)
    v.add_argument("--t", type=parse_range)
    v.add_argument("--r", type=parse_range)
    v.add_argument("--spec", type=parse_spec)
    v.add_argument("--fixture")
    v.add_argument("--trials", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--window", type=float, default=0.0)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--workers", type=int)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    log.info("config %s", json.dumps(resolved_config(args), default=str))
    try:
        return args.func(args)
    except (UsageError, CapabilityError) as exc:
        sys.stderr.write(f"flowerq: error: {exc}\n")
        return EXIT_USAGE
    except SearchAborted as exc:
        sys.stderr.write(f"flowerq: {exc}\n")
        return EXIT_BUDGET
    except (StreamError, OSError, ConvergenceError) as exc:
        sys.stderr.write(f"flowerq: {exc}\n")
        return EXIT_IO
    except GraphError as exc:
        sys.stderr.write(f"flowerq: error: {exc}\n")
        return EXIT_USAGE

if __name__ == "__main__":
    sys.exit(main())
