"""Signless Laplacian spectral radius and the closed forms/bounds around it."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, bits, to_graph6

DEFAULT_MAX_ITER = 10**6
# Residual target by order: absolute infinity-norm of Qx - qx.
SMALL_TOL = 1e-10
LARGE_TOL = 1e-8
LARGE_ORDER = 500


class ConvergenceError(RuntimeError):
    """The eigensolver hit its iteration budget.  Carries the best estimate."""

    def __init__(self, message: str, value: float, residual: float, iterations: int):
        super().__init__(message)
        self.value = value
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class SpectralResult:
    value: float
    residual: float
    iterations: int
    vector: np.ndarray


def default_tol(n: int) -> float:
    return SMALL_TOL if n <= LARGE_ORDER else LARGE_TOL


def signless_laplacian(g: Graph, vertices: list[int] | None = None) -> np.ndarray:
    """Dense ``Q = D + A``, optionally restricted to ``vertices`` (in that order)."""
    verts = list(range(g.n)) if vertices is None else vertices
    m = len(verts)
    if m == 0:
        return np.zeros((0, 0))
    if vertices is None:
        nbytes = (g.n + 7) // 8
        raw = b"".join(r.to_bytes(nbytes, "little") for r in g.adj)
        a = np.unpackbits(np.frombuffer(raw, dtype=np.uint8).reshape(m, nbytes), axis=1, bitorder="little")
        a = a[:, :m].astype(np.float64)
    else:
        index = {v: i for i, v in enumerate(verts)}
        a = np.zeros((m, m))
        for i, v in enumerate(verts):
            for u in bits(g.adj[v]):
                j = index.get(u)
                if j is not None:
                    a[i, j] = 1.0
    a[np.diag_indices(m)] = a.sum(axis=1)
    return a


def _perron(q: np.ndarray, tol: float, max_iter: int) -> tuple[float, float, int, np.ndarray]:
    """Dominant eigenpair of an irreducible nonnegative symmetric matrix.

    Shift-and-invert power iteration: the shift is the Collatz-Wielandt upper
    bound ``max (Qx)_i / x_i``, which never drops below the Perron root, so the
    iterate stays strictly positive and converges to the Perron vector.
    """
    m = q.shape[0]
    x = np.diag(q).copy()
    x /= np.linalg.norm(x)
    eye = np.eye(m)
    best = (0.0, math.inf, x)
    stalls = 0
    for it in range(max_iter + 1):
        y = q @ x
        lam = float(x @ y)
        res = float(np.max(np.abs(y - lam * x)))
        if res < best[1]:
            best, stalls = (lam, res, x), 0
        else:
            stalls += 1
        if res <= tol:
            return lam, res, it, x
        if it == max_iter or stalls > 8:
            break
        if np.all(x > 0):
            sigma = float(np.max(y / x))
        else:
            sigma = lam
        sigma = max(sigma, lam) + 4 * np.finfo(float).eps * max(abs(sigma), 1.0)
        try:
            z = np.linalg.solve(sigma * eye - q, x)
        except np.linalg.LinAlgError:
            z = None
        if z is None or not np.all(np.isfinite(z)):
            z = y
        if z.sum() < 0:
            z = -z
        nz = np.linalg.norm(z)
        if nz == 0 or not np.isfinite(nz):
            break
        x = z / nz
    lam, res, x = best
    raise ConvergenceError(
        f"no convergence to tol={tol:g}: best residual {res:.3e}", lam, res, max_iter
    )


def q_radius(g: Graph, tol: float | None = None, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    """Largest eigenvalue of ``D(G) + A(G)`` with a residual certificate.

    Disconnected graphs are split into components and the maximum taken; the
    returned vector is supported on the maximising component.
    """
    n = g.n
    if n < 1:
        raise GraphError("q_radius needs n >= 1")
    if tol is None:
        tol = default_tol(n)
    comps = g.components()
    best_val, best_res, best_it, best_vec, best_verts = -1.0, 0.0, 0, None, None
    total_it = 0
    for comp in comps:
        size = comp.bit_count()
        if size == 1:
            val, res, it, vec = 0.0, 0.0, 0, np.ones(1)
            verts = list(bits(comp))
        elif size == 2:
            val, res, it, vec = 2.0, 0.0, 0, np.full(2, math.sqrt(0.5))
            verts = list(bits(comp))
        else:
            verts = list(bits(comp))
            mat = signless_laplacian(g) if size == n else signless_laplacian(g, verts)
            val, res, it, vec = _perron(mat, tol, max_iter)
        total_it += it
        if val > best_val:
            best_val, best_res, best_it, best_vec, best_verts = val, res, it, vec, verts
    full = np.zeros(n)
    full[best_verts] = best_vec
    return SpectralResult(best_val, best_res, total_it, full)


def q_value(g: Graph, tol: float | None = None) -> float:
    return q_radius(g, tol).value


# -- closed forms ---------------------------------------------------------------


def q_split_closed_form(n: int, t: int) -> float:
    """``q(S_{n,t})``: largest root of ``q^2 - (n+2t-2) q + 2t(t-1)``."""
    if not 1 <= t <= n:
        raise GraphError("need 1 <= t <= n")
    if n == 1:
        # K_1: the quadratic's larger root (1) is not an eigenvalue here
        return 0.0
    s = n + 2 * t - 2
    return (s + math.sqrt(s * s - 8 * t * (t - 1))) / 2


def q_two_dominant_closed_form(n: int, t: int, d1: int | None = None) -> float:
    """``q`` for degree sequence ``(d1, d1, t, ..., t)`` with ``d1 = n - 1``.

    This is the cone over ``L_{r,t-1}``; the two dominating vertices and the
    rest form an equitable partition, so the value is exact.
    """
    if d1 is None:
        d1 = n - 1
    if d1 != n - 1 or d1 < t:
        raise GraphError("need d1 = n - 1 >= t")
    disc = (2 * t - d1 + 1) ** 2 + 16 * (d1 - t)
    return (d1 + 2 * t - 1 + math.sqrt(disc)) / 2


def lemma24_lower_bound(n: int, t: int) -> float:
    """``n + 2t - 2 - 2(t^2 - t)/(n + 2t - 3)``, a lower bound on ``q(S_{n,t})`` for ``n > 5t^2``."""
    if t < 2 or n <= 5 * t * t:
        raise GraphError(f"need t >= 2 and n > 5t^2, got n={n}, t={t}")
    return n + 2 * t - 2 - 2 * (t * t - t) / (n + 2 * t - 3)


def lemma24_edge_threshold(n: int, t: int) -> int:
    if t < 2 or n <= 5 * t * t:
        raise GraphError(f"need t >= 2 and n > 5t^2, got n={n}, t={t}")
    return t * n - t * t + 1


# -- bounds -----------------------------------------------------------------------


def merris_bound(g: Graph) -> float:
    """``max_v d(v) + (1/d(v)) sum_{z ~ v} d(z)``.  Requires minimum degree >= 1."""
    deg = g.degrees()
    if g.n == 0 or min(deg) == 0:
        raise GraphError("merris_bound needs every vertex to have a neighbour")
    return _merris(g.adj, deg)


def _merris(adj, deg) -> float:
    best = 0.0
    for v, row in enumerate(adj):
        d = deg[v]
        if d:
            s = 0
            for u in bits(row):
                s += deg[u]
            val = d + s / d
            if val > best:
                best = val
    return best


def merris_upper(g: Graph) -> float:
    """Merris bound over non-isolated vertices (0 for an edgeless graph)."""
    return _merris(g.adj, g.degrees())


def das_bound(g: Graph) -> float:
    """``2e/(n-1) + n - 2`` for connected graphs with ``n >= 2``."""
    if g.n < 2 or not g.is_connected():
        raise GraphError("das_bound needs a connected graph with n >= 2")
    return 2 * g.edge_count / (g.n - 1) + g.n - 2


@dataclass(frozen=True)
class BoundReport:
    graph6: str
    n: int
    e: int
    q: float
    merris: float
    das: float | None
    max_degree_plus_one: float
    split_lower: float | None = None

    CSV_FIELDS = ("graph6", "n", "e", "q", "merris", "das", "delta_plus_one")

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "e": self.e,
            "q": self.q,
            "merris": self.merris,
            "das": self.das,
            "delta_plus_one": self.max_degree_plus_one,
        }

    def csv_row(self) -> list[str]:
        def fmt(x):
            if x is None:
                return ""
            return f"{x:.9f}" if isinstance(x, float) else str(x)

        return [fmt(v) for v in self.as_dict().values()]

    def violations(self, tol: float = 1e-9) -> list[str]:
        out = []
        if self.q > self.merris + tol:
            out.append("q > merris")
        if self.das is not None and self.q > self.das + tol:
            out.append("q > das")
        if self.e > 0 and self.q < self.max_degree_plus_one - tol:
            out.append("q < max degree + 1")
        return out


def bound_report(g: Graph, t: int | None = None) -> BoundReport:
    q = q_radius(g).value if g.n else 0.0
    das = das_bound(g) if g.n >= 2 and g.is_connected() else None
    split_lower = None
    if t is not None and t >= 2 and g.n > 5 * t * t:
        split_lower = lemma24_lower_bound(g.n, t)
    return BoundReport(
        graph6=to_graph6(g),
        n=g.n,
        e=g.edge_count,
        q=q,
        merris=merris_upper(g),
        das=das,
        max_degree_plus_one=float(g.max_degree + 1),
        split_lower=split_lower,
    )
