"""Immutable simple graphs, graph6 I/O and the named graph families.

Adjacency is stored as one Python ``int`` bitset per vertex, so neighbourhood
intersections are single ``&`` operations.  Vertex labels are ``0..n-1``;
every constructor documents where its distinguished vertices live.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 4096
GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid constructor arguments or graph operations."""


class CapacityError(GraphError):
    """Requested order exceeds :data:`MAX_ORDER`."""


class Graph6Error(GraphError):
    """Malformed graph6 text.  ``offset`` is the byte index of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; equality is labeled equality.
    """

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("order must be non-negative")
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds cap {MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))
        object.__setattr__(self, "_m", None)

    @classmethod
    def from_rows(cls, rows: Sequence[int], check: bool = True) -> "Graph":
        """Build from per-vertex neighbour bitsets.

        With ``check=False`` the rows are trusted (hot enumeration loops).
        """
        n = len(rows)
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds cap {MAX_ORDER}")
        rows = tuple(rows)
        if check:
            full = (1 << n) - 1
            for v, row in enumerate(rows):
                if row & ~full or row < 0:
                    raise GraphError(f"row {v} has bits outside 0..{n - 1}")
                if row >> v & 1:
                    raise GraphError(f"self-loop at {v}")
                for u in bits(row):
                    if not rows[u] >> v & 1:
                        raise GraphError(f"asymmetric adjacency {v}->{u}")
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", rows)
        object.__setattr__(g, "_m", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.edge_count}, g6={to_graph6(self)!r})"

    def __reduce__(self):
        return (Graph.from_rows, (self.adj, False))

    # -- basic quantities -------------------------------------------------

    @property
    def edge_count(self) -> int:
        if self._m is None:
            object.__setattr__(self, "_m", sum(r.bit_count() for r in self.adj) // 2)
        return self._m

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted non-increasing."""
        return tuple(sorted(self.degrees(), reverse=True))

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    def non_edges(self) -> Iterator[tuple[int, int]]:
        full = self.vertex_mask
        for u, row in enumerate(self.adj):
            missing = ~row & full & ~((1 << (u + 1)) - 1)
            for v in bits(missing):
                yield u, v

    # -- structure --------------------------------------------------------

    def components(self) -> list[int]:
        """Connected components as vertex bitsets, ordered by lowest vertex."""
        seen = 0
        comps = []
        adj = self.adj
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def isolated_vertices(self) -> list[int]:
        return [v for v, r in enumerate(self.adj) if not r]

    def induced(self, vertices: Iterable[int] | int) -> "Graph":
        """Induced subgraph, relabelled in increasing order of old labels."""
        if isinstance(vertices, int):
            keep = list(bits(vertices))
        else:
            keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph.from_rows(rows, check=False)

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced(self.vertex_mask & ~(1 << v))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.from_rows(rows, check=False)

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.from_rows(rows, check=False)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of old vertex ``v``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph.from_rows([~r & full & ~(1 << v) for v, r in enumerate(self.adj)], check=False)

    def to_graph6(self) -> str:
        return to_graph6(self)


# -- graph6 -----------------------------------------------------------------


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no newline)."""
    n = g.n
    out = [_encode_order(n)]
    adj = g.adj
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes, cap: int = MAX_ORDER) -> Graph:
    """Decode one graph6 line.  A leading ``>>graph6<<`` header is skipped."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    base = 0
    if text.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        text = text[base:]
    text = text.rstrip("\r\n")
    if not text:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in text]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 36-bit order", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 18-bit order", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    if n > cap:
        raise CapacityError(f"graph6 order {n} exceeds cap {cap}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(vals) - pos != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {len(vals) - pos}",
            base + min(len(vals), pos + need),
        )
    rows = [0] * n
    i, j = 0, 1
    for b in vals[pos:]:
        for s in range(5, -1, -1):
            if j >= n:
                break
            if b >> s & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_rows(rows, check=False)


# -- flower parameters --------------------------------------------------------


@dataclass(frozen=True)
class FlowerSpec:
    """Half-lengths ``a_1 >= ... >= a_k >= 1`` of the odd cycles of a flower.

    Cycle ``i`` has length ``2*a_i + 1``; all cycles share exactly one vertex.
    """

    lengths: tuple[int, ...]

    def __init__(self, lengths: Iterable[int]):
        vals = tuple(sorted((int(a) for a in lengths), reverse=True))
        if not vals:
            raise GraphError("a flower needs at least one cycle")
        if vals[-1] < 1:
            raise GraphError("half-lengths must be >= 1")
        object.__setattr__(self, "lengths", vals)

    @classmethod
    def parse(cls, text: str) -> "FlowerSpec":
        """Parse ``"2,1"`` style text."""
        try:
            return cls(int(p) for p in text.replace(" ", "").split(",") if p)
        except ValueError as exc:
            raise GraphError(f"bad flower spec {text!r}: {exc}") from None

    @classmethod
    def friendship(cls, k: int) -> "FlowerSpec":
        return cls([1] * k)

    @classmethod
    def hks(cls, k: int, s: int, long_half: int = 2) -> "FlowerSpec":
        """``s`` cycles with half-length ``long_half >= 2`` plus ``k - s`` triangles."""
        if not 1 <= s <= k or long_half < 2:
            raise GraphError("need 1 <= s <= k and long_half >= 2")
        return cls([long_half] * s + [1] * (k - s))

    @property
    def k(self) -> int:
        return len(self.lengths)

    @property
    def t(self) -> int:
        return sum(self.lengths)

    @property
    def order(self) -> int:
        return 2 * self.t + 1

    @property
    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(2 * a + 1 for a in self.lengths)

    @property
    def path_orders(self) -> tuple[int, ...]:
        """Orders of the petal paths once the centre is removed."""
        return tuple(2 * a for a in self.lengths)

    def __str__(self):
        return ",".join(map(str, self.lengths))


# -- constructors -------------------------------------------------------------


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.from_rows([full & ~(1 << v) for v in range(n)], check=False)


def empty(n: int) -> Graph:
    if n < 0:
        raise GraphError("order must be non-negative")
    return Graph.from_rows([0] * n, check=False)


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(r: int, s: int) -> Graph:
    """Parts ``0..r-1`` and ``r..r+s-1``."""
    return join(empty(r), empty(s))


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return join(complete(1), empty(leaves))


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; ``h`` is shifted to ``g.n..``."""
    s = g.n
    return Graph.from_rows(list(g.adj) + [r << s for r in h.adj], check=False)


def join(g: Graph, h: Graph) -> Graph:
    s = g.n
    low = (1 << s) - 1
    high = ((1 << h.n) - 1) << s
    rows = [r | high for r in g.adj] + [(r << s) | low for r in h.adj]
    return Graph.from_rows(rows, check=False)


def disjoint_copies(m: int, g: Graph) -> Graph:
    out = empty(0)
    for _ in range(m):
        out = union(out, g)
    return out


def cone(g: Graph) -> Graph:
    """``K_1`` joined to ``g``; the apex is vertex 0."""
    return join(complete(1), g)


def split_graph(n: int, t: int) -> Graph:
    """``S_{n,t}``: clique on ``0..t-1`` joined to an independent set ``t..n-1``."""
    if not 1 <= t <= n:
        raise GraphError(f"split graph needs 1 <= t <= n, got n={n}, t={t}")
    return join(complete(t), empty(n - t))


def windmill(r: int, t: int) -> Graph:
    """``L_{r,t}``: ``r`` copies of ``K_t`` all joined to centre 0."""
    if r < 1 or t < 1:
        raise GraphError("windmill needs r >= 1 and t >= 1")
    return cone(disjoint_copies(r, complete(t)))


def flower(spec: FlowerSpec) -> Graph:
    """``F_{a_1..a_k}`` with centre 0; petal ``i`` is a consecutive label run."""
    edges = []
    nxt = 1
    for a in spec.lengths:
        run = list(range(nxt, nxt + 2 * a))
        nxt += 2 * a
        edges.append((0, run[0]))
        edges.extend(zip(run, run[1:]))
        edges.append((run[-1], 0))
    return Graph(2 * spec.t + 1, edges)


def friendship(k: int) -> Graph:
    return flower(FlowerSpec.friendship(k))


def even_core(k: int) -> Graph:
    """A graph on ``2k-1`` vertices with ``k^2 - 3k/2`` edges and max degree ``k-1``.

    Circulant with jumps ``1..(k-2)/2`` plus the matching ``i ~ i+k-1`` for
    ``i < k-1``; vertex ``2k-2`` is the single vertex of degree ``k-2``.
    """
    if k < 2 or k % 2:
        raise GraphError("even_core needs an even k >= 2")
    m = 2 * k - 1
    edges = {(min(i, (i + d) % m), max(i, (i + d) % m)) for i in range(m) for d in range(1, (k - 2) // 2 + 1)}
    edges |= {(i, i + k - 1) for i in range(k - 1)}
    return Graph(m, edges)


def _embed(n: int, inner: Graph) -> Graph:
    """``K_{ceil(n/2), floor(n/2)}`` with ``inner`` placed on vertices ``0..`` of the larger part."""
    big = (n + 1) // 2
    if inner.n > big:
        raise GraphError(f"n={n} too small to embed a graph on {inner.n} vertices")
    base = complete_bipartite(big, n // 2)
    rows = list(base.adj)
    for v, r in enumerate(inner.adj):
        rows[v] |= r
    return Graph.from_rows(rows, check=False)


def efgg_extremal(n: int, k: int) -> Graph:
    """Turán-extremal construction for the friendship graph ``F^(k)``.

    Odd ``k``: two disjoint ``K_k`` inside the larger part.  Even ``k``:
    :func:`even_core` inside the larger part.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    if n < 4 * k:
        raise GraphError(f"efgg_extremal needs n >= 4k, got n={n}, k={k}")
    inner = disjoint_copies(2, complete(k)) if k % 2 else even_core(k)
    return _embed(n, inner)


def efgg_surplus(k: int) -> int:
    return k * k - k if k % 2 else k * k - 3 * k // 2


def hks_extremal(n: int, k: int) -> Graph:
    """Balanced complete bipartite graph with ``K_{k-1,k-1}`` inside the larger part."""
    if k < 2:
        raise GraphError("k must be >= 2")
    if n < 4 * k:
        raise GraphError(f"hks_extremal needs n >= 4k, got n={n}, k={k}")
    return _embed(n, complete_bipartite(k - 1, k - 1))
