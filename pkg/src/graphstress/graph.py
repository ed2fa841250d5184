"""Immutable simple graphs on vertices ``0..n-1`` and basic traversal queries."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import Disconnected, IndexOutOfRange, SelfLoop


class _Unreachable:
    """Distance sentinel for vertex pairs in different components.

    It supports equality and hashing only; adding or comparing it raises
    ``TypeError`` so it can never leak into a distance sum.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    validated on construction and never mutated afterwards.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise IndexOutOfRange(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise IndexOutOfRange(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        for v, nbrs in enumerate(self.adj):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise IndexOutOfRange(f"neighbour {u} of {v} outside [0, {self.n})")
                if u == v:
                    raise SelfLoop(f"self-loop at {v}")
                if u <= prev:
                    raise ValueError(f"adjacency row {v} is not strictly increasing")
                prev = u
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if v not in self._nbr_sets[u]:
                    raise ValueError(f"asymmetric adjacency: {v}->{u} without {u}->{v}")

    @property
    def _nbr_sets(self) -> tuple[frozenset[int], ...]:
        try:
            return self.__dict__["_sets"]
        except KeyError:
            sets = tuple(frozenset(a) for a in self.adj)
            object.__setattr__(self, "_sets", sets)
            return sets

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise IndexOutOfRange("relabelling is not a permutation of the vertices")
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside [0, {self.n})")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicates collapse, self-loops are rejected."""
    if n < 0:
        raise IndexOutOfRange(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


@dataclass(frozen=True)
class BfsResult:
    source: int
    dist: tuple  # int or UNREACHABLE per vertex
    sigma: tuple[int, ...]
    order: tuple[int, ...]


def bfs(g: Graph, source: int) -> BfsResult:
    """Breadth-first search recording distances and shortest-path counts."""
    g._check(source)
    dist: list = [UNREACHABLE] * g.n
    sigma = [0] * g.n
    dist[source] = 0
    sigma[source] = 1
    order = []
    queue = deque([source])
    while queue:
        v = queue.popleft()
        order.append(v)
        dv = dist[v]
        for w in g.adj[v]:
            if dist[w] is UNREACHABLE:
                dist[w] = dv + 1
                queue.append(w)
            if dist[w] == dv + 1:
                sigma[w] += sigma[v]
    return BfsResult(source, tuple(dist), tuple(sigma), tuple(order))


def eccentricity(g: Graph, v: int) -> int:
    dist = bfs(g, v).dist
    if UNREACHABLE in dist:
        raise Disconnected(f"some vertex is unreachable from {v}")
    return max(dist)


def diameter(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(eccentricity(g, v) for v in range(g.n))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        part = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    part.append(w)
                    stack.append(w)
        parts.append(sorted(part))
    return parts


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def induced_is_clique(g: Graph, s: Iterable[int]) -> bool:
    members = sorted(set(s))
    for v in members:
        g._check(v)
    return all(g.has_edge(u, v) for u, v in combinations(members, 2))


def nonadjacent_pairs(g: Graph, s: Iterable[int]) -> int:
    """Number of unordered non-adjacent pairs inside the vertex set ``s``."""
    members = sorted(set(s))
    for v in members:
        g._check(v)
    return sum(1 for u, v in combinations(members, 2) if not g.has_edge(u, v))
