"""Detectors for flowers, disjoint path packings, long paths and cycles.

All searches run on bitset adjacency.  The flower and path-packing searches
share one backtracking core (:class:`_Packer`) with three prunings:

* twin symmetry: among vertices with identical (open or closed)
  neighbourhoods only the lowest available one is ever tried;
* walk layers: a vertex that still needs ``r`` more path vertices after it must
  have a walk of length ``r`` to an admissible endpoint;
* orientation and ordering: each path starts at the endpoint of smaller twin
  class, and equal-order paths are taken in non-decreasing start class.

Twin transpositions are automorphisms and the class labels are invariant
under them, so the three prunings are mutually consistent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import FlowerSpec, Graph, bits

DEFAULT_BUDGET = 10**8
EXACT_DP_CAP = 24


class BudgetExceeded(RuntimeError):
    """A search used up its node-expansion budget without an answer."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} expansions exceeded")
        self.budget = budget


class CapabilityError(RuntimeError):
    """The requested exact computation is outside the supported envelope."""


@dataclass(frozen=True)
class FlowerWitness:
    center: int
    cycles: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph, spec: FlowerSpec) -> list[str]:
        """Return a list of problems; empty when the witness is a valid flower in ``g``."""
        problems = []
        lengths = sorted((len(c) for c in self.cycles), reverse=True)
        if lengths != list(spec.cycle_lengths):
            problems.append(f"cycle lengths {lengths} != {list(spec.cycle_lengths)}")
        seen = {self.center}
        for cyc in self.cycles:
            if not cyc or cyc[0] != self.center:
                problems.append(f"cycle {cyc} does not start at the centre")
                continue
            if len(set(cyc)) != len(cyc):
                problems.append(f"cycle {cyc} repeats a vertex")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not g.has_edge(a, b):
                    problems.append(f"cycle {cyc} uses non-edge ({a}, {b})")
            inner = set(cyc[1:])
            if inner & seen:
                problems.append(f"cycle {cyc} meets another cycle outside the centre")
            seen |= inner
        return problems

    def as_dict(self) -> dict:
        return {"center": self.center, "cycles": [list(c) for c in self.cycles]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def twin_classes(adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Twin class label (lowest member) and lower-twin bitset for each vertex."""
    n = len(adj)
    open_groups: dict[int, list[int]] = {}
    closed_groups: dict[int, list[int]] = {}
    for v, row in enumerate(adj):
        open_groups.setdefault(row, []).append(v)
        closed_groups.setdefault(row | (1 << v), []).append(v)
    label = list(range(n))
    lower = [0] * n
    for groups in (open_groups, closed_groups):
        for members in groups.values():
            if len(members) > 1:
                acc = 0
                for v in members:
                    label[v] = members[0]
                    lower[v] = acc
                    acc |= 1 << v
    return label, lower


class _Packer:
    """Vertex-disjoint paths of prescribed orders with endpoints in a target set."""

    def __init__(self, adj: Sequence[int], budget: int | None):
        self.adj = adj
        self.label, self.lower = twin_classes(adj)
        self.budget = DEFAULT_BUDGET if budget is None else budget
        self.expansions = 0

    def _tick(self):
        self.expansions += 1
        if self.expansions > self.budget:
            raise BudgetExceeded(self.budget)

    def pack(self, avail: int, targets: int, orders: Sequence[int]):
        orders = tuple(sorted(orders, reverse=True))
        return self._next(avail, targets, orders, 0, -1, [])

    def _next(self, avail, targets, orders, idx, prev_cls, acc):
        if idx == len(orders):
            return list(acc)
        rest = orders[idx:]
        if sum(rest) > avail.bit_count():
            return None
        tav = targets & avail
        if tav.bit_count() < sum(1 if o == 1 else 2 for o in rest):
            return None
        order = orders[idx]
        floor = prev_cls if idx and orders[idx - 1] == order else -1
        adj, lower, label = self.adj, self.lower, self.label
        if order == 1:
            for s in bits(tav):
                self._tick()
                if lower[s] & avail or label[s] < floor:
                    continue
                acc.append((s,))
                found = self._next(avail & ~(1 << s), targets, orders, idx + 1, label[s], acc)
                if found is not None:
                    return found
                acc.pop()
            return None
        # layers[j]: available vertices with a walk of length j into tav
        layers = [tav]
        av_list = list(bits(avail))
        for _ in range(order - 1):
            prev = layers[-1]
            nxt = 0
            for v in av_list:
                if adj[v] & prev:
                    nxt |= 1 << v
            layers.append(nxt)
        starts = tav & layers[order - 1]
        for s in bits(starts):
            self._tick()
            if lower[s] & avail or label[s] < floor:
                continue
            bit = 1 << s
            found = self._grow(s, avail & ~bit, targets, orders, idx, layers, order - 1, label[s], acc, [s])
            if found is not None:
                return found
        return None

    def _grow(self, v, avail, targets, orders, idx, layers, remaining, start_cls, acc, current):
        adj, lower, label = self.adj, self.lower, self.label
        if remaining == 1:
            cand = adj[v] & avail & targets
            for w in bits(cand):
                self._tick()
                if lower[w] & avail or label[w] < start_cls:
                    continue
                current.append(w)
                acc.append(tuple(current))
                found = self._next(avail & ~(1 << w), targets, orders, idx + 1, start_cls, acc)
                if found is not None:
                    return found
                acc.pop()
                current.pop()
            return None
        cand = adj[v] & avail & layers[remaining - 1]
        for w in bits(cand):
            self._tick()
            if lower[w] & avail:
                continue
            current.append(w)
            found = self._grow(w, avail & ~(1 << w), targets, orders, idx, layers, remaining - 1, start_cls, acc, current)
            if found is not None:
                return found
            current.pop()
        return None


def _degree_order(g: Graph) -> tuple[list[int], list[int]]:
    """Relabel so that label order is (degree, old label) ascending."""
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (deg[v], v))
    new_of = [0] * g.n
    for i, v in enumerate(order):
        new_of[v] = i
    rows = []
    for v in order:
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << new_of[u]
        rows.append(row)
    return rows, order


def find_flower(g: Graph, spec: FlowerSpec, budget: int | None = DEFAULT_BUDGET) -> FlowerWitness | None:
    """A copy of the flower ``spec`` in ``g``, or ``None`` if there is none.

    Raises :class:`BudgetExceeded` when the search gives up.
    """
    if g.n < spec.order or g.edge_count < 2 * spec.t + spec.k:
        return None
    adj, old = _degree_order(g)
    n = g.n
    packer = _Packer(adj, budget)
    full = (1 << n) - 1
    need = 2 * spec.k
    orders = spec.path_orders
    for u in range(n - 1, -1, -1):
        if adj[u].bit_count() < need:
            break
        if packer.lower[u]:
            continue
        avail = full & ~(1 << u)
        if not _groups_feasible(packer, avail, adj[u], orders):
            continue
        paths = packer.pack(avail, adj[u], orders)
        if paths is not None:
            cycles = tuple(tuple(old[x] for x in (u,) + p) for p in paths)
            return FlowerWitness(old[u], cycles)
    return None


def _groups_feasible(packer: _Packer, avail: int, targets: int, orders: Sequence[int]) -> bool:
    """Necessary condition: each group of equal orders packs on its own."""
    groups = sorted(set(orders))
    if len(groups) == 1:
        return True
    for o in groups:
        if packer.pack(avail, targets, [x for x in orders if x == o]) is None:
            return False
    return True


def _ball(adj: Sequence[int], v: int, radius: int) -> int:
    ball = frontier = 1 << v
    for _ in range(radius):
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & ~ball
        ball |= frontier
    return ball


def _tails(packer: _Packer, v: int, avail: int, targets: int, layers: list[int], remaining: int):
    """Yield ``(vertices, mask)`` for paths that leave ``v`` through ``remaining``
    more available vertices and end in ``targets``.  ``v`` itself is excluded."""
    adj, lower = packer.adj, packer.lower
    if remaining == 0:
        yield (), 0
        return
    if remaining == 1:
        for w in bits(adj[v] & avail & targets):
            packer._tick()
            if lower[w] & avail:
                continue
            yield (w,), 1 << w
        return
    for w in bits(adj[v] & avail & layers[remaining - 1]):
        packer._tick()
        if lower[w] & avail:
            continue
        bit = 1 << w
        for rest, mask in _tails(packer, w, avail & ~bit, targets, layers, remaining - 1):
            yield (w,) + rest, mask | bit


def _walk_layers(adj: Sequence[int], avail: int, targets: int, depth: int) -> list[int]:
    layers = [targets & avail]
    av = list(bits(avail))
    for _ in range(depth):
        prev = layers[-1]
        nxt = 0
        for v in av:
            if adj[v] & prev:
                nxt |= 1 << v
        layers.append(nxt)
    return layers


def find_flower_through(
    g: Graph, spec: FlowerSpec, x: int, y: int, budget: int | None = DEFAULT_BUDGET
) -> FlowerWitness | None:
    """A flower in ``g`` that uses the edge ``xy``, or ``None``.

    When ``g - xy`` is flower-free this decides containment for ``g`` while
    only exploring flowers around the new edge.
    """
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    if g.n < spec.order or g.edge_count < 2 * spec.t + spec.k:
        return None
    adj, old = _degree_order(g)
    new_of = {v: i for i, v in enumerate(old)}
    X, Y = new_of[x], new_of[y]
    ends = (1 << X) | (1 << Y)
    n = g.n
    packer = _Packer(adj, budget)
    full = (1 << n) - 1
    need = 2 * spec.k
    orders = list(spec.path_orders)
    reach = _ball(adj, X, spec.lengths[0]) & _ball(adj, Y, spec.lengths[0])
    for u in range(n - 1, -1, -1):
        if adj[u].bit_count() < need:
            break
        # a lower twin other than x or y gives the same answer
        if not reach >> u & 1 or packer.lower[u] & ~ends:
            continue
        targets = adj[u]
        avail = full & ~(1 << u)
        for order in sorted(set(orders), reverse=True):
            rest = list(orders)
            rest.remove(order)
            free = avail & ~ends
            if rest and packer.pack(free, targets, rest) is None:
                continue
            layers = _walk_layers(adj, free, targets, order)
            if u in (X, Y):
                other = Y if u == X else X
                if not targets >> other & 1:
                    continue
                seeds = (((other,) + tail, (1 << other) | mask) for tail, mask in _tails(packer, other, free, targets, layers, order - 1))
            else:
                seeds = _through_seeds(packer, X, Y, free, targets, layers, order)
            for petal, mask in seeds:
                found = packer.pack(avail & ~mask, targets, rest) if rest else []
                if found is not None:
                    cycles = [(u,) + petal] + [(u,) + p for p in found]
                    cycles.sort(key=len, reverse=True)
                    return FlowerWitness(old[u], tuple(tuple(old[v] for v in c) for c in cycles))
    return None


def _through_seeds(packer, X, Y, free, targets, layers, order):
    """Paths of ``order`` vertices containing the edge ``XY`` with both ends in ``targets``."""
    ends = (1 << X) | (1 << Y)
    for left_len in range(1, order):
        right_len = order - left_len
        if left_len == 1 and not targets >> X & 1:
            continue
        if right_len == 1 and not targets >> Y & 1:
            continue
        for left, lmask in _tails(packer, X, free, targets, layers, left_len - 1):
            for right, rmask in _tails(packer, Y, free & ~lmask, targets, layers, right_len - 1):
                yield tuple(reversed(left)) + (X, Y) + right, lmask | rmask | ends


# Containment under its predicate-style name; the witness doubles as the truth value.
contains_flower = find_flower


def is_flower_free(g: Graph, spec: FlowerSpec, budget: int | None = DEFAULT_BUDGET) -> bool:
    return find_flower(g, spec, budget) is None


def find_disjoint_paths(g: Graph, orders: Sequence[int], budget: int | None = DEFAULT_BUDGET):
    """Vertex-disjoint paths with exactly the given vertex counts, or ``None``."""
    if not orders or min(orders) < 1:
        raise ValueError("orders must be a non-empty list of positive integers")
    if sum(orders) > g.n:
        return None
    adj, old = _degree_order(g)
    full = (1 << g.n) - 1
    paths = _Packer(adj, budget).pack(full, full, orders)
    if paths is None:
        return None
    return [tuple(old[x] for x in p) for p in paths]


def contains_disjoint_paths(g: Graph, orders: Sequence[int], budget: int | None = DEFAULT_BUDGET) -> bool:
    return find_disjoint_paths(g, orders, budget) is not None


# -- longest paths and cycles --------------------------------------------------


def _path_end_dp(adj: Sequence[int], n: int) -> list[int]:
    """``dp[mask]``: vertices where a Hamiltonian path of ``G[mask]`` can end."""
    dp = [0] * (1 << n)
    for v in range(n):
        dp[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        ends = dp[mask]
        if not ends:
            continue
        ext = 0
        for v in bits(ends):
            ext |= adj[v]
        ext &= ~mask
        for w in bits(ext):
            dp[mask | (1 << w)] |= 1 << w
    return dp


def _longest_path_search(adj: Sequence[int], n: int, budget: int) -> int:
    """Exact branch and bound over simple paths; the bound is the reachable set size."""
    best = 1 if n else 0
    count = [0]

    def reach(v, avail):
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            frontier = nxt & avail & ~comp
            comp |= frontier
        return comp.bit_count()

    def dfs(v, avail, length):
        nonlocal best
        count[0] += 1
        if count[0] > budget:
            raise BudgetExceeded(budget)
        if length > best:
            best = length
            if best == n:
                return True
        if length - 1 + reach(v, avail) <= best:
            return False
        for w in bits(adj[v] & avail):
            if dfs(w, avail & ~(1 << w), length + 1):
                return True
        return False

    full = (1 << n) - 1
    for s in range(n):
        if dfs(s, full & ~(1 << s), 1):
            break
    return best


def longest_path_order(g: Graph, budget: int | None = None) -> int:
    """Number of vertices on a longest path (0 for the empty graph)."""
    n = g.n
    if n == 0:
        return 0
    if n <= EXACT_DP_CAP:
        dp = _path_end_dp(g.adj, n)
        return max(mask.bit_count() for mask in range(1, 1 << n) if dp[mask])
    if budget is None:
        raise CapabilityError(f"exact longest path for n={n} > {EXACT_DP_CAP} needs a budget")
    return _longest_path_search(g.adj, n, budget)


def is_path_free(g: Graph, k: int) -> bool:
    """True when ``g`` has no path on ``k`` vertices."""
    return longest_path_order(g) <= k - 1


def circumference(g: Graph, budget: int | None = None) -> int:
    """Length of a longest cycle, 0 for forests."""
    n = g.n
    adj = g.adj
    if n > EXACT_DP_CAP:
        if budget is None:
            raise CapabilityError(f"exact circumference for n={n} > {EXACT_DP_CAP} needs a budget")
        return _circumference_search(adj, n, budget)
    best = 0
    for s in range(n):
        # paths starting at s through vertices > s only
        higher = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        if (adj[s] & higher).bit_count() < 2:
            continue
        dp = {1 << s: 1 << s}
        frontier = [1 << s]
        size = 1
        while frontier:
            nxt = {}
            for mask in frontier:
                ends = dp[mask]
                ext = 0
                for v in bits(ends):
                    ext |= adj[v]
                for w in bits(ext & higher & ~mask):
                    m2 = mask | (1 << w)
                    nxt[m2] = nxt.get(m2, 0) | (1 << w)
            size += 1
            if size >= 3 and size > best:
                for m2, ends in nxt.items():
                    if ends & adj[s]:
                        best = size
                        break
            dp.update(nxt)
            frontier = list(nxt)
    return best


def _circumference_search(adj, n, budget):
    best = 0
    count = 0

    def dfs(s, v, avail, length):
        nonlocal best, count
        count += 1
        if count > budget:
            raise BudgetExceeded(budget)
        if length >= 3 and adj[v] >> s & 1 and length > best:
            best = length
        if length + avail.bit_count() <= best:
            return
        for w in bits(adj[v] & avail):
            dfs(s, w, avail & ~(1 << w), length + 1)

    for s in range(n):
        higher = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        dfs(s, s, higher, 1)
    return best


def path_cycle_profiles(n: int, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Longest path order and circumference for a batch of graphs.

    ``rows`` has shape ``(G, n)`` and holds neighbour bitsets (``uint8``, so
    ``n <= 8``).  Vectorised version of the two subset dynamic programs.
    """
    if n > 8:
        raise CapabilityError("batch profiles are limited to n <= 8")
    count = rows.shape[0]
    size = 1 << n
    longest = np.zeros(count, dtype=np.int8)
    circ = np.zeros(count, dtype=np.int8)
    if n == 0:
        return longest, circ
    ends = np.zeros((size, count), dtype=np.uint8)
    from_low = np.zeros((size, count), dtype=np.uint8)
    col = [rows[:, v] for v in range(n)]
    for mask in range(1, size):
        pc = mask.bit_count()
        low = (mask & -mask).bit_length() - 1
        if pc == 1:
            ends[mask] = 1 << low
            from_low[mask] = 1 << low
            longest = np.maximum(longest, 1)
            continue
        acc = np.zeros(count, dtype=np.uint8)
        acc_low = np.zeros(count, dtype=np.uint8)
        for v in bits(mask):
            prev = mask ^ (1 << v)
            hit = (col[v] & ends[prev]) != 0
            acc |= hit.astype(np.uint8) << v
            if v != low:
                hit_low = (col[v] & from_low[prev]) != 0
                acc_low |= hit_low.astype(np.uint8) << v
        ends[mask] = acc
        from_low[mask] = acc_low
        longest = np.where(acc != 0, np.maximum(longest, pc), longest)
        if pc >= 3:
            closes = (acc_low & col[low]) != 0
            circ = np.where(closes, np.maximum(circ, pc), circ)
    return longest, circ


# -- vertex covers and peeling ---------------------------------------------------


def split_containment(g: Graph, t: int) -> frozenset[int] | None:
    """A vertex cover of size at most ``t`` (so ``g`` is a subgraph of ``S_{n,t}``), or ``None``."""
    if t < 0:
        raise ValueError("t must be non-negative")
    adj = list(g.adj)

    def solve(rows, k, chosen):
        # high-degree rule: a vertex of degree > k must be in every small cover
        forced = [v for v, r in enumerate(rows) if r.bit_count() > k]
        if forced:
            if len(forced) > k:
                return None
            rows = list(rows)
            for v in forced:
                for u in bits(rows[v]):
                    rows[u] &= ~(1 << v)
                rows[v] = 0
            return solve(rows, k - len(forced), chosen | frozenset(forced))
        m = sum(r.bit_count() for r in rows) // 2
        if m == 0:
            return chosen
        if k == 0 or m > k * k:
            return None
        u = next(v for v, r in enumerate(rows) if r)
        w = (rows[u] & -rows[u]).bit_length() - 1
        for pick in (u, w):
            sub = list(rows)
            for x in bits(sub[pick]):
                sub[x] &= ~(1 << pick)
            sub[pick] = 0
            found = solve(sub, k - 1, chosen | {pick})
            if found is not None:
                return found
        return None

    return solve(adj, t, frozenset())


@dataclass(frozen=True)
class PeelResult:
    kept: tuple[int, ...]
    removed: tuple[int, ...]
    removal_degrees: tuple[int, ...]

    def core(self, g: Graph) -> Graph:
        return g.induced(self.kept)


def peel_min_degree(g: Graph, threshold: int) -> PeelResult:
    """Delete a minimum-degree vertex (lowest label on ties) while the minimum degree is below ``threshold``."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    alive = g.vertex_mask
    deg = g.degrees()
    removed, at = [], []
    while alive:
        v = min(bits(alive), key=lambda x: (deg[x], x))
        if deg[v] >= threshold:
            break
        removed.append(v)
        at.append(deg[v])
        alive &= ~(1 << v)
        for u in bits(g.adj[v] & alive):
            deg[u] -= 1
    return PeelResult(tuple(bits(alive)), tuple(removed), tuple(at))


# -- recognisers -----------------------------------------------------------------


def is_clique(g: Graph, mask: int) -> bool:
    return all((g.adj[v] | (1 << v)) & mask == mask for v in bits(mask))


def is_disjoint_cliques(g: Graph, size: int) -> bool:
    """Every component is ``K_size``."""
    return all(c.bit_count() == size and is_clique(g, c) for c in g.components())


def windmill_params(g: Graph) -> tuple[int, int] | None:
    """``(r, t)`` when ``g`` is isomorphic to ``L_{r,t}`` with ``r, t >= 1``."""
    n = g.n
    if n < 2:
        return None
    for c in range(n):
        if g.degree(c) != n - 1:
            continue
        rest = g.remove_vertex(c)
        comps = rest.components()
        sizes = {x.bit_count() for x in comps}
        if len(sizes) == 1 and all(is_clique(rest, x) for x in comps):
            return len(comps), sizes.pop()
        return None
    return None


def is_windmill(g: Graph, blade: int | None = None) -> bool:
    params = windmill_params(g)
    if params is None:
        return False
    r, t = params
    if blade is None or t == blade:
        return True
    # K_n is L_{1,n-1}; a star K_{1,m} is L_{m,1}; neither has another reading
    return False


def blocks_all_cliques(g: Graph, size: int) -> bool:
    """Connected and every biconnected block is ``K_size``."""
    if not g.is_connected():
        return False
    return all(len(b) == size and is_clique(g, sum(1 << v for v in b)) for b in biconnected_blocks(g))


def biconnected_blocks(g: Graph) -> list[frozenset[int]]:
    """Biconnected blocks (bridges count as 2-vertex blocks); isolated vertices are omitted."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    stack: list[tuple[int, int]] = []
    blocks = []
    timer = 0
    for root in range(n):
        if disc[root] != -1 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        work = [(root, -1, iter(g.neighbors(root)))]
        while work:
            v, parent, it = work[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    work.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            work.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = set()
                    while True:
                        a, b = stack.pop()
                        block.update((a, b))
                        if (a, b) == (parent, v):
                            break
                    blocks.append(frozenset(block))
    return blocks


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-colouring as vertex bitsets, or ``None`` if ``g`` has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        todo = [s]
        while todo:
            v = todo.pop()
            for u in bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    todo.append(u)
                elif color[u] == color[v]:
                    return None
    side = sum(1 << v for v in range(g.n) if color[v] == 0)
    return side, g.vertex_mask & ~side


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_complete_bipartite(g: Graph) -> bool:
    """``g`` is ``K_{r,s}`` with ``r, s >= 1`` and ``r + s = n``."""
    if g.n < 2 or not g.is_connected():
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    a, b = parts
    return g.edge_count == a.bit_count() * b.bit_count()


def is_split_graph(g: Graph, t: int) -> bool:
    """``g`` is isomorphic to ``S_{n,t}``."""
    n = g.n
    if not 1 <= t <= n:
        return False
    if g.edge_count != t * (n - t) + t * (t - 1) // 2:
        return False
    return split_containment(g, t) is not None or t == n


def has_dominating_vertex(g: Graph) -> bool:
    return g.n > 0 and g.max_degree == g.n - 1
