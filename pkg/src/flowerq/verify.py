"""Runnable checks for each lemma and theorem, each producing a :class:`CheckReport`.

Every check records the keyword arguments it was called with, so
``run_check(report.check_id, **report.params)`` reproduces it exactly.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from .graph import (
    FlowerSpec,
    Graph,
    GraphError,
    complete,
    cone,
    efgg_extremal,
    efgg_surplus,
    from_graph6,
    hks_extremal,
    split_graph,
    to_graph6,
    windmill,
)
from .search import (
    MAX_LABELED_ORDER,
    ExtremalRecord,
    enumerate_labeled,
    graph_from_mask,
    labeled_row_batches,
    randomized_challenge,
    spectral_extremal_search,
)
from .spectral import (
    das_bound,
    lemma24_edge_threshold,
    lemma24_lower_bound,
    merris_upper,
    q_radius,
    q_split_closed_form,
    q_two_dominant_closed_form,
)
from .subgraph import (
    CapabilityError,
    blocks_all_cliques,
    contains_disjoint_paths,
    find_flower,
    has_dominating_vertex,
    is_complete_bipartite,
    is_disjoint_cliques,
    is_split_graph,
    is_windmill,
    path_cycle_profiles,
    peel_min_degree,
    split_containment,
    windmill_params,
)

SLACK = 1e-8
MAX_STORED_FAILURES = 100

EXHAUSTIVE = "exhaustive"
PROPERTY = "property-tested, not exhaustively verified"
SWEEP = "closed-form sweep"


@dataclass
class Failure:
    params: dict
    graph6: str
    expected: object
    observed: object

    def as_dict(self) -> dict:
        return {"params": self.params, "graph6": self.graph6, "expected": self.expected, "observed": self.observed}


@dataclass
class CheckReport:
    check_id: str
    params: dict
    strength: str = EXHAUSTIVE
    instances: int = 0
    failures: list[Failure] = field(default_factory=list)
    failure_count: int = 0
    notes: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.failure_count == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, params: dict, g: Graph | str | None, expected, observed) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            g6 = g if isinstance(g, str) or g is None else to_graph6(g)
            self.failures.append(Failure(dict(params), g6 or "", expected, observed))

    def as_dict(self, timing: bool = True) -> dict:
        d = {
            "check_id": self.check_id,
            "status": self.status,
            "strength": self.strength,
            "params": self.params,
            "instances": self.instances,
            "failure_count": self.failure_count,
            "failures": [f.as_dict() for f in self.failures],
            "notes": self.notes,
            "info": self.info,
        }
        if timing:
            d["timing"] = {"elapsed_s": self.elapsed}
        return d

    def to_json(self, timing: bool = True, **kw) -> str:
        return json.dumps(self.as_dict(timing), default=_jsonable, **kw)

    def to_text(self) -> str:
        head = f"[{self.status.upper()}] {self.check_id} ({self.strength}) instances={self.instances} failures={self.failure_count}"
        lines = [head, f"  params: {json.dumps(self.params, default=_jsonable)}"]
        lines += [f"  note: {n}" for n in self.notes]
        for f in self.failures[:10]:
            lines.append(f"  failure {f.graph6} {f.params}: expected {f.expected}, observed {f.observed}")
        if self.failure_count > 10:
            lines.append(f"  ... {self.failure_count - 10} more")
        return "\n".join(lines)

    def rerun(self) -> "CheckReport":
        return run_check(self.check_id, **self.params)


def _jsonable(x):
    if isinstance(x, FlowerSpec):
        return list(x.lengths)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (set, frozenset, tuple)):
        return sorted(x) if isinstance(x, (set, frozenset)) else list(x)
    raise TypeError(f"not serialisable: {type(x).__name__}")


def _timed(fn: Callable[..., CheckReport]) -> Callable[..., CheckReport]:
    def wrapper(*args, **kw):
        t0 = time.perf_counter()
        rep = fn(*args, **kw)
        rep.elapsed = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__wrapped__ = fn
    return wrapper


def span(r) -> range:
    """Inclusive ``(lo, hi)`` pair (or a single int) as a range."""
    if isinstance(r, int):
        return range(r, r + 1)
    lo, hi = r
    return range(lo, hi + 1)


def _need_enumerable(n_range) -> None:
    top = max(span(n_range), default=0)
    if top > MAX_LABELED_ORDER:
        raise CapabilityError(f"exhaustive checks enumerate labeled graphs with n <= {MAX_LABELED_ORDER}; got n={top}")


# -- exhaustive profiles over the labeled graphs --------------------------------------

_POP = np.array([bin(i).count("1") for i in range(256)], dtype=np.int16)


@lru_cache(maxsize=8)
def labeled_profiles(n: int):
    """Per labeled graph on ``n`` vertices: ``(edges, min_degree, longest_path, circumference)``."""
    parts = []
    for _, rows in labeled_row_batches(n):
        deg = _POP[rows]
        lp, circ = path_cycle_profiles(n, rows)
        e = deg.sum(axis=1) // 2 if n else np.zeros(rows.shape[0], dtype=np.int64)
        mind = deg.min(axis=1) if n else np.zeros(rows.shape[0], dtype=np.int16)
        parts.append((e, mind, lp, circ))
    return tuple(np.concatenate([p[i] for p in parts]) for i in range(4))


@_timed
def check_lemma_2_1(n_range=(1, 7), k_range=(3, 7)) -> CheckReport:
    """``P_k``-free graphs have ``e <= (k-2)n/2``; equality only for disjoint ``K_{k-1}`` copies."""
    _need_enumerable(n_range)
    rep = CheckReport("lemma2.1", {"n_range": _pair(n_range), "k_range": _pair(k_range)})
    equalities = 0
    for n in span(n_range):
        e, _, lp, _ = labeled_profiles(n)
        for k in span(k_range):
            free = lp <= k - 1
            rep.instances += int(free.sum())
            over = np.nonzero(free & (2 * e > (k - 2) * n))[0]
            for m in over:
                rep.fail({"n": n, "k": k}, graph_from_mask(n, int(m)), f"e <= {(k - 2) * n / 2}", int(e[m]))
            for m in np.nonzero(free & (2 * e == (k - 2) * n))[0]:
                equalities += 1
                g = graph_from_mask(n, int(m))
                if not is_disjoint_cliques(g, k - 1):
                    rep.fail({"n": n, "k": k}, g, f"disjoint copies of K_{k - 1}", "other equality graph")
    rep.info["equality_instances"] = equalities
    return rep


def _pair(r) -> list[int]:
    s = span(r)
    return [s.start, s.stop - 1]


@_timed
def check_lemma_2_2(n_range=(1, 7), k_range=(3, 4)) -> CheckReport:
    """Circumference ``<= k`` forces ``e <= k(n-1)/2``, with equality only for ``L_{r,k-1}``.

    ``K_1`` (the ``r = 0`` windmill) is accepted as the trivial equality case.
    The report's ``info`` also counts equality graphs whose blocks are all
    ``K_k``, which is the shape the edge bound is actually tight on.
    """
    _need_enumerable(n_range)
    rep = CheckReport("lemma2.2", {"n_range": _pair(n_range), "k_range": _pair(k_range)})
    equalities = block_shaped = 0
    for n in span(n_range):
        e, _, _, circ = labeled_profiles(n)
        for k in span(k_range):
            ok = circ <= k
            rep.instances += int(ok.sum())
            for m in np.nonzero(ok & (2 * e > k * (n - 1)))[0]:
                rep.fail({"n": n, "k": k}, graph_from_mask(n, int(m)), f"e <= {k * (n - 1) / 2}", int(e[m]))
            for m in np.nonzero(ok & (2 * e == k * (n - 1)))[0]:
                equalities += 1
                g = graph_from_mask(n, int(m))
                if n > 1 and blocks_all_cliques(g, k):
                    block_shaped += 1
                if n == 1:
                    continue
                if not (is_windmill(g, k - 1) and (n - 1) % (k - 1) == 0):
                    rep.fail({"n": n, "k": k}, g, f"L_(r,{k - 1}) with n = r({k - 1})+1", _shape(g))
    rep.info["equality_instances"] = equalities
    rep.info["equality_all_blocks_K_k"] = block_shaped
    return rep


def _shape(g: Graph) -> str:
    params = windmill_params(g)
    if params:
        return f"L_({params[0]},{params[1]})"
    return f"n={g.n} e={g.edge_count} degrees={list(g.degree_sequence())}"


@_timed
def check_lemma_2_6(n_range=(1, 7)) -> CheckReport:
    """Minimum degree ``d >= 2`` guarantees a cycle of length at least ``d + 1``."""
    _need_enumerable(n_range)
    rep = CheckReport("lemma2.6", {"n_range": _pair(n_range)})
    for n in span(n_range):
        _, mind, _, circ = labeled_profiles(n)
        hyp = mind >= 2
        rep.instances += int(hyp.sum())
        for m in np.nonzero(hyp & (circ < mind + 1))[0]:
            rep.fail({"n": n}, graph_from_mask(n, int(m)), f"circumference >= {int(mind[m]) + 1}", int(circ[m]))
    return rep


# -- closed-form checks -----------------------------------------------------------------


@_timed
def check_lemma_2_4(t_range=(2, 6), n_max=500, samples=200, seed=0) -> CheckReport:
    """Part (1) as a full sweep over ``5t^2 < n <= n_max``; part (2) on random perturbations of ``S_{n,t}``.

    Part (2) quantifies over every graph of order ``n > 5t^2``, which is far
    beyond enumeration, so it is sampled: ``S_{n,t}`` with random edges added
    and removed.  Whenever such a graph reaches ``q(S_{n,t})`` its edge count
    must clear ``tn - t^2 + 1``.
    """
    rep = CheckReport(
        "lemma2.4",
        {"t_range": _pair(t_range), "n_max": n_max, "samples": samples, "seed": seed},
        strength=f"part (1): {SWEEP}; part (2): {PROPERTY}",
    )
    worst_gap = math.inf
    for t in span(t_range):
        if t < 2:
            continue
        for n in range(5 * t * t + 1, n_max + 1):
            rep.instances += 1
            closed = q_split_closed_form(n, t)
            bound = lemma24_lower_bound(n, t)
            solved = q_radius(split_graph(n, t)).value
            p = {"part": 1, "n": n, "t": t}
            if not closed > bound:
                rep.fail(p, None, f"q(S_n,t) > {bound!r}", closed)
            if not bound > n + 2 * t - 3:
                rep.fail(p, None, f"bound > {n + 2 * t - 3}", bound)
            if abs(solved - closed) > SLACK:
                rep.fail(p, None, f"eigensolver == {closed!r}", solved)
            worst_gap = min(worst_gap, closed - bound)
    rep.info["min_closed_minus_bound"] = worst_gap
    rng = random.Random(seed)
    hits = 0
    ts = [t for t in span(t_range) if t >= 2]
    for i in range(samples if ts else 0):
        t = rng.choice(ts)
        n = rng.randint(5 * t * t + 1, 5 * t * t + 40)
        g = _perturbed_split(n, t, rng)
        rep.instances += 1
        target = q_split_closed_form(n, t)
        if q_radius(g).value >= target - SLACK:
            hits += 1
            need = lemma24_edge_threshold(n, t)
            if g.edge_count < need:
                rep.fail({"part": 2, "n": n, "t": t, "sample": i}, g, f"e >= {need}", g.edge_count)
    rep.info["part2_samples_reaching_q"] = hits
    return rep


def _perturbed_split(n: int, t: int, rng: random.Random) -> Graph:
    g = split_graph(n, t)
    rows = list(g.adj)
    for _ in range(rng.randint(0, 3 * t)):
        u, v = rng.sample(range(n), 2)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    return Graph.from_rows(rows)


@_timed
def check_lemma_2_5(t_range=(3, 6), r_range=(1, 20)) -> CheckReport:
    """``q(K_1 + L_{r,t-1}) < n + 2t - 3`` and agreement with the two-dominant closed form."""
    rep = CheckReport("lemma2.5", {"t_range": _pair(t_range), "r_range": _pair(r_range)}, strength=SWEEP)
    for t in span(t_range):
        for r in span(r_range):
            if t < 3 or r < 1:
                continue
            g = cone(windmill(r, t - 1))
            n = g.n
            rep.instances += 1
            q = q_radius(g).value
            closed = q_two_dominant_closed_form(n, t)
            p = {"t": t, "r": r, "n": n}
            if not q < n + 2 * t - 3:
                rep.fail(p, g, f"q < {n + 2 * t - 3}", q)
            if abs(q - closed) > SLACK:
                rep.fail(p, g, f"q == {closed!r}", q)
    return rep


# -- stream checks -----------------------------------------------------------------------


def main_threshold(spec: FlowerSpec) -> int:
    """The order from which the main theorem's part for ``spec`` applies.

    Part (2) (a single odd cycle of length at least 5) also carries the
    ``110 t^2`` side condition; the larger of the two thresholds is used.
    Part (3) (friendship graphs), taken from its original source, holds from
    ``3k^2 - k - 2``.
    """
    t, k = spec.t, spec.k
    base = 8 * t * t - 12 * t + 9
    if k == 1 and t >= 2:
        return max(base, 110 * t * t)
    if k >= 2 and max(spec.lengths) == 1:
        return 3 * k * k - k - 2
    return base


def theorem_part(spec: FlowerSpec) -> int:
    if spec.k == 1:
        return 1 if spec.t == 1 else 2
    return 3 if max(spec.lengths) == 1 else 4


@lru_cache(maxsize=4)
def _challenge(n: int, spec_text: str, trials: int, seed: int) -> ExtremalRecord:
    # the desk run asks for the same challenge from two checks
    return randomized_challenge(n, FlowerSpec.parse(spec_text), trials, seed)


@_timed
def check_lemma_3_1_conclusion(
    n: int = 45, spec="2,1", trials: int = 200, seed: int = 1, window: float = 0.0, record: ExtremalRecord | None = None
) -> CheckReport:
    """Flower-free graphs with ``q`` at least ``q(S_{n,t}) - window`` have a dominating vertex.

    Graphs come from the seeded randomized challenge (or a precomputed
    challenge ``record``); ``window = 0`` is the lemma itself, a positive
    window probes the near-extremal region as well.
    """
    spec = _spec(spec)
    rep = CheckReport(
        "lemma3.1",
        {"n": n, "spec": str(spec), "trials": trials, "seed": seed, "window": window},
        strength=PROPERTY,
    )
    if n < 8 * spec.t**2 - 12 * spec.t + 9:
        rep.notes.append(f"n={n} is below 8t^2-12t+9; the conclusion is checked anyway")
    if record is None:
        record = _challenge(n, str(spec), trials, seed)
    bound = q_split_closed_form(n, spec.t)
    near = 0
    for g6, q in record.samples:
        rep.instances += 1
        if q >= bound - SLACK - window:
            near += 1
            g = from_graph6(g6)
            if not has_dominating_vertex(g):
                rep.fail({"n": n, "spec": str(spec), "q": q}, g6, f"max degree {n - 1}", g.max_degree)
    rep.info.update(near_extremal=near, best_q=record.best_value, bound=bound)
    if not near:
        rep.notes.append("no sample reached the window; the check is vacuous for this run")
    return rep


@_timed
def check_lemma_3_2(n_range=(4, 7), spec="1,1") -> CheckReport:
    """Peeling removes at most ``t^2 - t - 1`` vertices, each of degree at most ``t - 2``.

    Scans every labeled graph in ``n_range`` that satisfies the edge
    hypothesis and is free of the disjoint path forest.
    """
    _need_enumerable(n_range)
    spec = _spec(spec)
    t = spec.t
    rep = CheckReport("lemma3.2", {"n_range": _pair(n_range), "spec": str(spec)})
    if spec.k < 2:
        raise GraphError("the peeling lemma needs k >= 2")
    cap = t * t - t - 1
    orders = spec.path_orders
    for n in span(n_range):
        if n <= cap:
            continue
        need = (t - 1) * n - cap
        e, _, lp, _ = labeled_profiles(n)
        # a path on sum(orders) vertices already splits into the forest
        for m in np.nonzero((e >= need) & (lp < sum(orders)))[0]:
            g = graph_from_mask(n, int(m))
            if contains_disjoint_paths(g, orders):
                continue
            rep.instances += 1
            res = peel_min_degree(g, t - 1)
            p = {"n": n, "spec": str(spec)}
            if len(res.removed) > cap:
                rep.fail(p, g, f"at most {cap} removed", len(res.removed))
            if any(d > t - 2 for d in res.removal_degrees):
                rep.fail(p, g, f"removed degrees <= {t - 2}", list(res.removal_degrees))
            core = res.core(g)
            if core.n and core.min_degree < t - 1:
                rep.fail(p, g, f"core min degree >= {t - 1}", core.min_degree)
    return rep


@_timed
def check_lemma_2_3(n_range=(4, 7), spec="1,1") -> CheckReport:
    """Connected, disjoint-path-forest-free graphs with ``delta >= t - 1`` and ``n >= 2t``
    sit inside ``S_{n,t-1}`` or are windmills ``L_{r,t-1}``."""
    _need_enumerable(n_range)
    spec = _spec(spec)
    t = spec.t
    if spec.k < 2:
        raise GraphError("the stability lemma needs k >= 2")
    rep = CheckReport("lemma2.3", {"n_range": _pair(n_range), "spec": str(spec)})
    windmills = 0
    for n in span(n_range):
        if n < 2 * t:
            continue
        _, mind, lp, _ = labeled_profiles(n)
        for m in np.nonzero((mind >= t - 1) & (lp < 2 * t))[0]:
            g = graph_from_mask(n, int(m))
            if not g.is_connected() or contains_disjoint_paths(g, spec.path_orders):
                continue
            rep.instances += 1
            if split_containment(g, t - 1) is not None:
                continue
            if is_windmill(g, t - 1) and (n - 1) % (t - 1) == 0:
                windmills += 1
                continue
            rep.fail({"n": n, "spec": str(spec)}, g, f"subgraph of S_(n,{t - 1}) or L_(r,{t - 1})", _shape(g))
    rep.info["windmill_cases"] = windmills
    return rep


@_timed
def check_theorem_main(n_range=(5, 7), spec="1", source: str = "labeled", fixture: str | None = None,
                       trials: int = 200, seed: int = 1, workers: int | None = None) -> CheckReport:
    """Spectral maximum over flower-free graphs against ``q(S_{n,t})``.

    ``source`` is ``labeled`` (exhaustive, n <= 7), ``fixture`` (a graph6 file
    holding one graph per isomorphism class) or ``challenge`` (seeded
    randomized search; property-level evidence only).
    """
    from .search import ingest_stream

    spec = _spec(spec)
    part = theorem_part(spec)
    threshold = main_threshold(spec)
    params = {"n_range": _pair(n_range), "spec": str(spec), "source": source}
    if source == "fixture":
        params["fixture"] = fixture
    if source == "challenge":
        params.update(trials=trials, seed=seed)
    rep = CheckReport("theorem", params, strength=PROPERTY if source == "challenge" else EXHAUSTIVE)
    rep.info["part"] = part
    rep.info["threshold"] = threshold
    for n in span(n_range):
        if source == "labeled":
            _need_enumerable(n)
            rec = spectral_extremal_search(enumerate_labeled(n), spec, workers=workers)
        elif source == "fixture":
            if fixture is None:
                raise GraphError("source=fixture needs a fixture path")
            rec = spectral_extremal_search((g for g in ingest_stream(fixture) if g.n == n), spec, workers=workers)
        elif source == "challenge":
            rec = _challenge(n, str(spec), trials, seed)
        else:
            raise GraphError(f"unknown source {source!r}")
        rep.instances += rec.scanned
        bound = q_split_closed_form(n, spec.t)
        best = rec.best_value
        rep.info[f"n={n}"] = {"best": best, "bound": bound, "witnesses": len(rec.witnesses), "classes": rec.classes()}
        p = {"n": n, "spec": str(spec)}
        if best is None:
            rep.notes.append(f"n={n}: empty stream")
            continue
        if n < threshold:
            rep.notes.append(f"n={n} is below the threshold {threshold}; compared but not required")
        applies = n >= threshold
        if best > bound + SLACK:
            if applies:
                rep.fail(p, max(rec.witnesses), f"q <= {bound!r}", best)
            continue
        if source == "challenge" or not applies:
            continue
        if abs(best - bound) > SLACK:
            rep.fail(p, None, f"max q == {bound!r}", best)
        for w in rec.witnesses:
            g = from_graph6(w)
            good = is_complete_bipartite(g) if part == 1 else is_split_graph(g, spec.t)
            if not good:
                rep.fail(p, w, "complete bipartite" if part == 1 else f"S_({n},{spec.t})", _shape(g))
        if part != 1 and not rec.witnesses:
            rep.fail(p, None, f"S_({n},{spec.t}) among maximizers", "none")
    return rep


@_timed
def check_turan_constructions(n_range=(16, 20), k_range=(1, 3)) -> CheckReport:
    """Edge counts of both extremal constructions and their freeness under the detector.

    The second family is checked against each mix of triangles and
    5-cycles for ``1 <= s <= k``.
    """
    rep = CheckReport("turan", {"n_range": _pair(n_range), "k_range": _pair(k_range)})
    for k in span(k_range):
        for n in span(n_range):
            if n < 4 * k:
                continue
            g = efgg_extremal(n, k)
            p = {"n": n, "k": k, "family": "efgg"}
            rep.instances += 1
            want = n * n // 4 + efgg_surplus(k)
            if g.edge_count != want:
                rep.fail(p, g, want, g.edge_count)
            if find_flower(g, FlowerSpec.friendship(k)) is not None:
                rep.fail(p, g, f"F^({k})-free", "contains")
            if k < 2:
                continue
            h = hks_extremal(n, k)
            want = n * n // 4 + (k - 1) ** 2
            rep.instances += 1
            p = {"n": n, "k": k, "family": "hks"}
            if h.edge_count != want:
                rep.fail(p, h, want, h.edge_count)
            for s in range(1, k + 1):
                spec = FlowerSpec.hks(k, s)
                if find_flower(h, spec) is not None:
                    rep.fail({**p, "s": s}, h, f"{spec}-free", "contains")
    return rep


@_timed
def check_bound_sandwich(n_max: int = 7, samples: int = 100_000, seed: int = 0) -> CheckReport:
    """``Delta + 1 <= q <= min(Merris, Das)`` on ``samples`` connected labeled graphs and the constructed families."""
    rep = CheckReport("sandwich", {"n_max": n_max, "samples": samples, "seed": seed}, strength=PROPERTY)
    rng = random.Random(seed)
    tol = 1e-9

    def one(g: Graph, p: dict) -> bool:
        if g.n < 2 or not g.is_connected():
            return False
        rep.instances += 1
        q = q_radius(g).value
        lo = g.max_degree + 1
        hi = min(merris_upper(g), das_bound(g))
        if not lo - tol <= q <= hi + tol:
            rep.fail(p, g, f"[{lo}, {hi}]", q)
        return True

    # rejection sampling: uniform labeled graphs, disconnected draws discarded
    drawn = kept = 0
    while kept < samples:
        n = rng.randint(2, n_max)
        mask = rng.getrandbits(n * (n - 1) // 2)
        kept += one(graph_from_mask(n, mask), {"draw": drawn, "n": n, "mask": mask})
        drawn += 1
    rep.info.update(connected_samples=kept, draws=drawn)
    for name, g in constructed_families():
        one(g, {"family": name})
    return rep


def constructed_families() -> Iterable[tuple[str, Graph]]:
    from .graph import complete_bipartite, cycle, flower, path, star

    for n in range(2, 13):
        yield f"complete({n})", complete(n)
        yield f"path({n})", path(n)
        yield f"star({n - 1})", star(n - 1)
        if n >= 3:
            yield f"cycle({n})", cycle(n)
        for t in range(1, n + 1):
            yield f"split({n},{t})", split_graph(n, t)
    for r in range(1, 6):
        for s in range(1, 6):
            yield f"bipartite({r},{s})", complete_bipartite(r, s)
            yield f"windmill({r},{s})", windmill(r, s)
    for lengths in ([1], [2], [1, 1], [2, 1], [2, 2], [3, 1, 1], [1, 1, 1, 1]):
        spec = FlowerSpec(lengths)
        yield f"flower({spec})", flower(spec)
    for k in (1, 2, 3, 4):
        yield f"efgg(20,{k})", efgg_extremal(20, k)
        if k >= 2:
            yield f"hks(20,{k})", hks_extremal(20, k)
    for t in range(3, 7):
        for r in range(1, 6):
            yield f"cone(windmill({r},{t - 1}))", cone(windmill(r, t - 1))


def _spec(spec) -> FlowerSpec:
    if isinstance(spec, FlowerSpec):
        return spec
    if isinstance(spec, str):
        return FlowerSpec.parse(spec)
    return FlowerSpec(list(spec))


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "lemma2.1": check_lemma_2_1,
    "lemma2.2": check_lemma_2_2,
    "lemma2.3": check_lemma_2_3,
    "lemma2.4": check_lemma_2_4,
    "lemma2.5": check_lemma_2_5,
    "lemma2.6": check_lemma_2_6,
    "lemma3.1": check_lemma_3_1_conclusion,
    "lemma3.2": check_lemma_3_2,
    "theorem": check_theorem_main,
    "turan": check_turan_constructions,
    "sandwich": check_bound_sandwich,
}


def run_check(check_id: str, **params) -> CheckReport:
    try:
        fn = CHECKS[check_id]
    except KeyError:
        raise GraphError(f"unknown check {check_id!r}; choose from {', '.join(CHECKS)}") from None
    return fn(**params)


def desk_plan(fixture: str | None = None) -> list[tuple[str, dict]]:
    """The full desk-scale run: every check at the ranges that finish on one machine."""
    plan = [
        ("lemma2.1", {"n_range": (1, 7), "k_range": (3, 7)}),
        ("lemma2.2", {"n_range": (1, 7), "k_range": (3, 4)}),
        ("lemma2.6", {"n_range": (1, 7)}),
        ("lemma2.3", {"n_range": (4, 7), "spec": "1,1"}),
        ("lemma2.4", {"t_range": (2, 6), "n_max": 500}),
        ("lemma2.5", {"t_range": (3, 6), "r_range": (1, 20)}),
        ("lemma3.2", {"n_range": (4, 7), "spec": "1,1"}),
        ("lemma3.2", {"n_range": (6, 7), "spec": "2,1"}),
        ("theorem", {"n_range": (5, 7), "spec": "1"}),
        ("theorem", {"n_range": (45, 45), "spec": "2,1", "source": "challenge", "trials": 200, "seed": 1}),
        ("lemma3.1", {"n": 45, "spec": "2,1", "trials": 200, "seed": 1, "window": 0.5}),
        ("theorem", {"n_range": (17, 17), "spec": "1,1", "source": "challenge", "trials": 500, "seed": 1}),
        ("lemma3.1", {"n": 17, "spec": "1,1", "trials": 500, "seed": 1, "window": 0.5}),
        ("turan", {"n_range": (16, 20), "k_range": (1, 3)}),
        ("sandwich", {"n_max": 7, "samples": 100_000, "seed": 0}),
    ]
    if fixture is not None:
        plan.insert(9, ("theorem", {"n_range": (8, 8), "spec": "1,1", "source": "fixture", "fixture": fixture}))
    return plan


def run_all(fixture: str | None = None, progress: Callable[[CheckReport], None] | None = None) -> list[CheckReport]:
    out = []
    for check_id, params in desk_plan(fixture):
        rep = run_check(check_id, **params)
        out.append(rep)
        if progress is not None:
            progress(rep)
    return out
