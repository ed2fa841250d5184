"""Geodesic counting and vertex stress.

The normative stress of ``v`` is half the sum, over ordered pairs ``(s, t)`` of
distinct vertices other than ``v`` with ``d(s,v) + d(v,t) = d(s,t)``, of
``sigma(s,v) * sigma(v,t)``. :func:`stress_profile_accumulated` computes the same
numbers with one dependency sweep per source, and :func:`enumerate_geodesics`
materialises every geodesic so the count can be checked by brute force.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameter, Disconnected, IndexOutOfRange, OutputLimitExceeded
from .graph import UNREACHABLE, Graph, bfs

DEFAULT_PATH_CAP = 10**6


@dataclass(frozen=True)
class GeodesicCensus:
    """All-pairs distances and shortest-path counts of one graph."""

    n: int
    dist: tuple[tuple, ...]
    sigma: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class StressProfile:
    stress: tuple[int, ...]
    total: int

    @property
    def n(self) -> int:
        return len(self.stress)


@dataclass(frozen=True)
class GeodesicHistogram:
    """``counts[i]`` is the number of geodesics of length ``i``; index 0 is unused."""

    counts: tuple[int, ...]

    def __getitem__(self, length: int) -> int:
        if 1 <= length < len(self.counts):
            return self.counts[length]
        return 0

    @property
    def max_length(self) -> int:
        return len(self.counts) - 1


def census(g: Graph) -> GeodesicCensus:
    rows = [bfs(g, s) for s in range(g.n)]
    return GeodesicCensus(g.n, tuple(r.dist for r in rows), tuple(r.sigma for r in rows))


def stress(c: GeodesicCensus, v: int) -> int:
    if not 0 <= v < c.n:
        raise IndexOutOfRange(f"vertex {v} outside [0, {c.n})")
    dv = c.dist[v]
    sv = c.sigma[v]
    total = 0
    for s in range(c.n):
        dsv = dv[s]
        if s == v or dsv is UNREACHABLE:
            continue
        ds = c.dist[s]
        for t in range(c.n):
            if t == v or t == s or dv[t] is UNREACHABLE:
                continue
            if dsv + dv[t] == ds[t]:
                total += sv[s] * sv[t]
    assert total % 2 == 0
    return total // 2


def stress_profile(g: Graph) -> StressProfile:
    c = census(g)
    values = tuple(stress(c, v) for v in range(g.n))
    return StressProfile(values, sum(values))


def stress_profile_accumulated(g: Graph) -> StressProfile:
    """Stress of every vertex from one shortest-path DAG sweep per source."""
    acc = [0] * g.n
    for s in range(g.n):
        r = bfs(g, s)
        dist, sigma = r.dist, r.sigma
        # tails[v]: number of geodesics from v down the DAG to a farther target
        tails = [0] * g.n
        for v in reversed(r.order):
            dv = dist[v]
            for w in g.adj[v]:
                if dist[w] == dv + 1:
                    tails[v] += 1 + tails[w]
            if v != s:
                acc[v] += sigma[v] * tails[v]
    values = tuple(x // 2 for x in acc)
    return StressProfile(values, sum(values))


def geodesic_histogram(c: GeodesicCensus) -> GeodesicHistogram:
    counts: dict[int, int] = {}
    for u in range(c.n):
        for v in range(u + 1, c.n):
            d = c.dist[u][v]
            if d is not UNREACHABLE:
                counts[d] = counts.get(d, 0) + c.sigma[u][v]
    top = max(counts, default=0)
    return GeodesicHistogram(tuple([0] + [counts.get(i, 0) for i in range(1, top + 1)]))


def total_stress_from_histogram(h: GeodesicHistogram) -> int:
    return sum((i - 1) * h[i] for i in range(1, h.max_length + 1))


def enumerate_geodesics(g: Graph, cap: int = DEFAULT_PATH_CAP) -> list[tuple[int, ...]]:
    """Every geodesic of length >= 1, smaller endpoint first, each listed once.

    Paths are grouped by ``(source, target)`` in lexicographic order and are
    lexicographically sorted inside a group.
    """
    out: list[tuple[int, ...]] = []
    for s in range(g.n):
        dist = bfs(g, s).dist
        for t in range(s + 1, g.n):
            if dist[t] is UNREACHABLE:
                continue
            found: list[tuple[int, ...]] = []
            # walk predecessors back from t; every branch reaches s
            stack = [(t, (t,))]
            while stack:
                v, suffix = stack.pop()
                if v == s:
                    found.append(suffix)
                    if len(out) + len(found) > cap:
                        raise OutputLimitExceeded(f"more than {cap} geodesics")
                    continue
                for u in g.adj[v]:
                    if dist[u] is not UNREACHABLE and dist[u] == dist[v] - 1:
                        stack.append((u, (u,) + suffix))
            out.extend(sorted(found))
    return out


def stress_oracle(g: Graph, v: int, geodesics: list[tuple[int, ...]] | None = None) -> int:
    """Stress of ``v`` by counting enumerated geodesics with ``v`` strictly inside."""
    g._check(v)
    if geodesics is None:
        geodesics = enumerate_geodesics(g)
    return sum(1 for p in geodesics if v in p[1:-1])


def imposes_stress(g: Graph, u: int, v: int) -> bool:
    """Whether some geodesic starting at ``u`` passes through ``v``.

    Decided by looking for a neighbour of ``v`` one step farther from ``u``
    than ``v`` itself.
    """
    g._check(u)
    g._check(v)
    if u == v:
        raise BadParameter("imposes_stress needs two distinct vertices")
    dist = bfs(g, u).dist
    if UNREACHABLE in dist:
        raise Disconnected("imposes_stress requires a connected graph")
    return any(dist[w] == dist[v] + 1 for w in g.adj[v])
