"""Graph streams and extremal search drivers."""

from __future__ import annotations

import json
import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from itertools import islice
from pathlib import Path
from typing import Callable, Iterable, Iterator

import numpy as np

from .graph import FlowerSpec, Graph, Graph6Error, GraphError, complete_bipartite, from_graph6, split_graph, to_graph6
from .spectral import default_tol, merris_upper, q_radius, q_split_closed_form
from .subgraph import DEFAULT_BUDGET, BudgetExceeded, CapabilityError, find_flower, find_flower_through

log = logging.getLogger(__name__)

WORKERS_ENV = "FLOWERQ_WORKERS"
MAX_LABELED_ORDER = 7
MAXIMIZER_TOL = 1e-8
CHUNK = 4096


class StreamError(GraphError):
    """A graph6 stream line could not be decoded."""

    def __init__(self, path, line_no: int, cause: Exception):
        super().__init__(f"{path}:{line_no}: {cause}")
        self.path = path
        self.line_no = line_no


class SearchAborted(RuntimeError):
    """The detector gave up on one graph; soundness wins over completeness."""

    def __init__(self, graph6: str, budget: int):
        super().__init__(f"detector budget {budget} exceeded on {graph6}")
        self.graph6 = graph6
        self.budget = budget


def worker_count(workers: int | None = None) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


# -- streams ------------------------------------------------------------------------


def edge_order(n: int) -> list[tuple[int, int]]:
    """Column-major upper-triangle edge order (the graph6 bit order)."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n <= 7`` vertices, in increasing edge-mask order.

    Bit ``b`` of the mask is edge ``edge_order(n)[b]``.
    """
    if n > MAX_LABELED_ORDER:
        raise CapabilityError(
            f"labeled enumeration stops at n={MAX_LABELED_ORDER}; ingest a graph6 fixture for n={n}"
        )
    if n < 0:
        raise GraphError("order must be non-negative")
    for rows in _labeled_rows(n):
        yield Graph.from_rows(rows, check=False)


def _labeled_rows(n: int) -> Iterator[tuple[int, ...]]:
    # The edges to vertex n-1 are the high bits, so the outer loop runs over
    # the neighbourhood of n-1 and the inner loop over graphs on n-1 vertices.
    if n == 0:
        yield ()
        return
    if n == 1:
        yield (0,)
        return
    prev = list(_labeled_rows(n - 1))
    top = 1 << (n - 1)
    for nb in range(1 << (n - 1)):
        flags = [top if nb >> i & 1 else 0 for i in range(n - 1)]
        for rows in prev:
            yield tuple(r | f for r, f in zip(rows, flags)) + (nb,)


def labeled_edge_mask(g: Graph) -> int:
    return sum(1 << b for b, (i, j) in enumerate(edge_order(g.n)) if g.adj[i] >> j & 1)


def labeled_row_batches(n: int, chunk: int = 1 << 18) -> Iterator[tuple[int, np.ndarray]]:
    """The labeled graphs of :func:`enumerate_labeled` as ``(first_mask, rows)`` numpy batches.

    ``rows[g, v]`` is the neighbour bitset of ``v`` in graph ``first_mask + g``.
    """
    if n > MAX_LABELED_ORDER:
        raise CapabilityError(f"labeled enumeration stops at n={MAX_LABELED_ORDER}")
    total = 1 << (n * (n - 1) // 2)
    order = edge_order(n)
    for lo in range(0, total, chunk):
        masks = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        rows = np.zeros((masks.size, max(n, 1)), dtype=np.uint8)
        for b, (i, j) in enumerate(order):
            bit = ((masks >> b) & 1).astype(np.uint8)
            rows[:, i] |= bit << j
            rows[:, j] |= bit << i
        yield lo, rows[:, :n]


def graph_from_mask(n: int, mask: int) -> Graph:
    return Graph(n, (e for b, e in enumerate(edge_order(n)) if mask >> b & 1))


def ingest_stream(path: str | Path, skip_bad: bool = False) -> Iterator[Graph]:
    """Decode a graph6 file line by line.  A ``>>graph6<<`` header is skipped.

    Malformed lines raise :class:`StreamError` (or are logged and skipped with
    ``skip_bad``).
    """
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        for line_no, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text == ">>graph6<<":
                continue
            try:
                yield from_graph6(text)
            except (Graph6Error, GraphError) as exc:
                if not skip_bad:
                    raise StreamError(path, line_no, exc) from exc
                log.warning("%s:%d: skipping malformed line: %s", path, line_no, exc)


# -- records ------------------------------------------------------------------------


@dataclass
class ExtremalRecord:
    n: int | None
    spec: FlowerSpec
    objective: str
    best_value: float | int | None = None
    witnesses: list[str] = field(default_factory=list)
    scanned: int = 0
    free_count: int = 0
    reference: float | None = None
    borderline: list[str] = field(default_factory=list)
    samples: list[tuple[str, float]] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def matches_reference(self) -> bool | None:
        if self.reference is None or self.best_value is None:
            return None
        return abs(self.best_value - self.reference) <= MAXIMIZER_TOL

    def classes(self) -> list[str]:
        """One witness per invariant fingerprint, in first-seen order."""
        seen = {}
        for w in self.witnesses:
            key = fingerprint(from_graph6(w))
            seen.setdefault(key, w)
        return list(seen.values())

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "spec": list(self.spec.lengths),
            "t": self.spec.t,
            "objective": self.objective,
            "best_value": self.best_value,
            "reference": self.reference,
            "matches_reference": self.matches_reference,
            "scanned": self.scanned,
            "free_count": self.free_count,
            "witnesses": self.witnesses,
            "witness_classes": self.classes(),
            "borderline": self.borderline,
            "samples": [list(s) for s in self.samples],
            "violations": self.violations,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.as_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "ExtremalRecord":
        return cls(
            n=d["n"],
            spec=FlowerSpec(d["spec"]),
            objective=d["objective"],
            best_value=d["best_value"],
            witnesses=list(d["witnesses"]),
            scanned=d["scanned"],
            free_count=d["free_count"],
            reference=d.get("reference"),
            borderline=list(d.get("borderline", [])),
            samples=[tuple(s) for s in d.get("samples", [])],
            violations=list(d.get("violations", [])),
        )

    def summary_row(self) -> list:
        return [self.n, self.spec.t, self.best_value, self.reference, self.matches_reference]


def fingerprint(g: Graph) -> tuple:
    """Sorted degrees plus sorted vertex-deleted ``q`` values rounded to 1e-6."""
    if g.n <= 1:
        return (g.degree_sequence(), ())
    qs = sorted(round(q_radius(g.remove_vertex(v)).value, 6) for v in range(g.n))
    return (g.degree_sequence(), tuple(qs))


# -- scanning -------------------------------------------------------------------------


def _scan(graphs: Iterable[Graph], spec: FlowerSpec, objective: str, connected_only: bool, budget: int, tol: float):
    """Serial scan of one chunk.  Returns a partial :class:`ExtremalRecord`."""
    best = None
    wit: list[tuple[float, str]] = []
    scanned = free = 0
    n = None
    for g in graphs:
        scanned += 1
        if n is None:
            n = g.n
        elif g.n != n:
            raise GraphError(f"mixed orders in stream: {n} and {g.n}")
        if connected_only and not g.is_connected():
            continue
        try:
            if find_flower(g, spec, budget) is not None:
                continue
        except BudgetExceeded:
            raise SearchAborted(to_graph6(g), budget) from None
        free += 1
        if objective == "edges":
            val = g.edge_count
            if best is None or val > best:
                best, wit = val, [(val, to_graph6(g))]
            elif val == best:
                wit.append((val, to_graph6(g)))
            continue
        # q <= Merris bound, so graphs whose bound is already below the
        # maximizer band cannot be maximizers
        if best is not None and merris_upper(g) < best - tol - 1e-9:
            continue
        val = q_radius(g).value if g.n else 0.0
        if best is None or val > best:
            best = val
            wit = [(v, s) for v, s in wit if v >= best - tol]
        if val >= best - tol:
            wit.append((val, to_graph6(g)))
    return n, best, wit, scanned, free


_EMPTY_PART = (None, None, (), 0, 0)


def merge_parts(a: tuple, b: tuple, band: float) -> tuple:
    """Merge two partial scan results ``(n, best, [(value, graph6)], scanned, free)``.

    Associative and commutative: the merged witness list is exactly the
    union of both lists cut at the merged optimum minus ``band``, sorted.
    """
    an, abest, awit, ascan, afree = a
    bn, bbest, bwit, bscan, bfree = b
    if an is not None and bn is not None and an != bn:
        raise GraphError(f"mixed orders in stream: {an} and {bn}")
    n = an if an is not None else bn
    best = max((v for v in (abest, bbest) if v is not None), default=None)
    wit = ()
    if best is not None:
        wit = tuple(sorted({w for w in (*awit, *bwit) if w[0] >= best - band}))
    return n, best, wit, ascan + bscan, afree + bfree


def _chunks(it: Iterable, size: int) -> Iterator[list]:
    it = iter(it)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def _scan_job(args):
    block, spec, objective, connected_only, budget, tol = args
    return _scan(block, spec, objective, connected_only, budget, tol)


def _run(graphs, spec, objective, connected_only, budget, tol, workers) -> ExtremalRecord:
    workers = worker_count(workers)
    parts = []
    if workers == 1:
        parts.append(_scan(graphs, spec, objective, connected_only, budget, tol))
    else:
        jobs = ((block, spec, objective, connected_only, budget, tol) for block in _chunks(graphs, CHUNK))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts.extend(pool.map(_scan_job, jobs))
    band = tol if objective == "q" else 0
    n, best, wit, scanned, free = reduce(lambda a, b: merge_parts(a, b, band), parts, _EMPTY_PART)
    kept = sorted({s for v, s in wit if best is not None and v >= best - band})
    borderline = sorted({s for v, s in wit if best is not None and objective == "q" and best - band <= v < best - band / 10})
    reference = None
    if objective == "q" and n is not None and 1 <= spec.t <= n:
        reference = q_split_closed_form(n, spec.t)
    return ExtremalRecord(
        n=n,
        spec=spec,
        objective=objective,
        best_value=best,
        witnesses=kept,
        scanned=scanned,
        free_count=free,
        reference=reference,
        borderline=borderline,
    )


def spectral_extremal_search(
    graphs: Iterable[Graph],
    spec: FlowerSpec,
    connected_only: bool = False,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
    tol: float = MAXIMIZER_TOL,
) -> ExtremalRecord:
    """Maximum ``q`` over the flower-free graphs of a same-order stream.

    ``witnesses`` lists every maximizer within ``tol``; ``reference`` is
    ``q(S_{n,t})`` for comparison.
    """
    return _run(graphs, spec, "q", connected_only, budget, tol, workers)


def turan_search(
    graphs: Iterable[Graph],
    spec: FlowerSpec,
    connected_only: bool = False,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> ExtremalRecord:
    """Maximum edge count over the flower-free graphs of a stream (exact)."""
    return _run(graphs, spec, "edges", connected_only, budget, 0.0, workers)


# -- randomized challenge ----------------------------------------------------------------

CHALLENGE_SEEDS = ("empty", "split", "bipartite")


def _seed_graph(kind: str, n: int, t: int, rng: random.Random) -> list[int]:
    """Starting rows for one trial; every seed is flower-free by construction."""
    if kind == "empty":
        return [0] * n
    base = split_graph(n, t) if kind == "split" else complete_bipartite((n + 1) // 2, n // 2)
    rows = list(base.adj)
    keep = rng.uniform(0.5, 1.0)
    for u, v in base.edges():
        if rng.random() > keep:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
    return rows


def greedy_flower_free(rows: list[int], spec: FlowerSpec, rng: random.Random, budget: int = DEFAULT_BUDGET) -> Graph:
    """Add non-edges in random order, keeping each one that creates no flower.

    Flower containment is monotone, so a rejected pair never becomes
    acceptable later and one pass yields a maximal flower-free graph.
    """
    n = len(rows)
    rows = list(rows)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not rows[u] >> v & 1]
    rng.shuffle(pairs)
    for u, v in pairs:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        g = Graph.from_rows(rows, check=False)
        if find_flower_through(g, spec, u, v, budget) is not None:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
    return Graph.from_rows(rows, check=False)


def challenge_graphs(n: int, spec: FlowerSpec, trials: int, seed: int, budget: int = DEFAULT_BUDGET) -> Iterator[Graph]:
    """Maximal flower-free graphs from seeded greedy edge addition.

    Trials cycle through three seeds: the empty graph, a random spanning
    subgraph of ``S_{n,t}``, and a random spanning subgraph of the balanced
    complete bipartite graph.
    """
    t = spec.t
    if t > n:
        raise GraphError(f"spec needs t <= n (t={t}, n={n})")
    for i in range(trials):
        rng = random.Random(f"{seed}:{n}:{spec}:{i}")
        kind = CHALLENGE_SEEDS[i % len(CHALLENGE_SEEDS)]
        yield greedy_flower_free(_seed_graph(kind, n, t, rng), spec, rng, budget)


def randomized_challenge(
    n: int,
    spec: FlowerSpec,
    trials: int,
    seed: int,
    budget: int = DEFAULT_BUDGET,
    progress: Callable[[int, Graph, float], None] | None = None,
) -> ExtremalRecord:
    """Falsification harness: no flower-free graph may beat ``q(S_{n,t})``.

    Every trial graph is kept in ``samples``; any graph above the bound by more
    than :data:`MAXIMIZER_TOL` lands in ``violations``.
    """
    bound = q_split_closed_form(n, spec.t)
    rec = ExtremalRecord(n=n, spec=spec, objective="q", reference=bound)
    for i, g in enumerate(challenge_graphs(n, spec, trials, seed, budget)):
        val = q_radius(g, default_tol(n)).value
        g6 = to_graph6(g)
        rec.scanned += 1
        rec.free_count += 1
        rec.samples.append((g6, val))
        if rec.best_value is None or val > rec.best_value + MAXIMIZER_TOL:
            rec.best_value = val
            rec.witnesses = [g6]
        elif val >= rec.best_value - MAXIMIZER_TOL:
            rec.witnesses.append(g6)
        if val > bound + MAXIMIZER_TOL:
            rec.violations.append(g6)
            log.warning("falsification candidate: q=%.12f > %.12f for %s", val, bound, g6)
        if progress is not None:
            progress(i, g, val)
    rec.witnesses = sorted(set(rec.witnesses))
    return rec
