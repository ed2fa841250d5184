"""Constructors for the graph families and named fixtures used throughout.

Vertex numbering is fixed per family so stress vectors can be compared
positionally.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import BadParameter, Disconnected, UnknownFixture
from .graph import UNREACHABLE, Graph, bfs, from_edge_list


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    _need(n >= 1, f"star needs n >= 1 leaves, got {n}")
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}; side A is ``0..m-1``, side B is ``m..m+n-1``."""
    _need(m >= 1 and n >= 1, f"complete bipartite needs m, n >= 1, got {m}, {n}")
    return from_edge_list(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def windmill(n: int, m: int) -> Graph:
    """``m`` copies of K_n glued at the shared vertex 0.

    Copy ``j`` uses vertices ``1 + j*(n-1) .. (j+1)*(n-1)``.
    """
    _need(n >= 2 and m >= 2, f"windmill needs n, m >= 2, got {n}, {m}")
    edges = []
    for j in range(m):
        block = [0] + list(range(1 + j * (n - 1), 1 + (j + 1) * (n - 1)))
        edges.extend(combinations(block, 2))
    return from_edge_list(m * (n - 1) + 1, edges)


def corona(g1: Graph, g2: Graph) -> Graph:
    """One copy of ``g1`` plus a copy of ``g2`` hung on each of its vertices.

    Copy ``i`` of ``g2`` sits at ``g1.n + i*g2.n`` onwards and every vertex in
    it is joined to vertex ``i``.
    """
    _need(g2.n >= 1, "corona needs a non-empty second factor")
    edges = list(g1.edges())
    for i in range(g1.n):
        base = g1.n + i * g2.n
        edges.extend((base + u, base + v) for u, v in g2.edges())
        edges.extend((i, base + u) for u in range(g2.n))
    return from_edge_list(g1.n + g1.n * g2.n, edges)


def power(g: Graph, k: int) -> Graph:
    _need(k >= 1, f"graph power needs k >= 1, got {k}")
    edges = []
    for u in range(g.n):
        dist = bfs(g, u).dist
        if UNREACHABLE in dist:
            raise Disconnected("graph power is only defined here for connected graphs")
        edges.extend((u, w) for w in range(u + 1, g.n) if dist[w] <= k)
    return from_edge_list(g.n, edges)


def cocktail_party(k: int) -> Graph:
    """K_{2k+2} minus the perfect matching ``{2i, 2i+1}``."""
    _need(k >= 1, f"cocktail party needs k >= 1, got {k}")
    n = 2 * k + 2
    return from_edge_list(n, [(u, v) for u, v in combinations(range(n), 2) if u // 2 != v // 2])


_FIXTURES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    # two K4-minus-an-edge halves joined hub to hub; stresses 43/16/1
    "FIG1_REG3": (10, [
        (0, 5),
        (0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        (5, 6), (5, 7), (6, 8), (6, 9), (7, 8), (7, 9), (8, 9),
    ]),
    # square 0-1-3-2 with both diagonals subdivided by 4 and 5, plus edge 4-5
    "FIG2_2SR": (6, [
        (0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (1, 4), (0, 4), (0, 5), (3, 5), (1, 5), (4, 5),
    ]),
    "FIG3_PRISM": (6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
    "FIG4_OCTAHEDRON": (6, [
        (u, v) for u, v in combinations(range(6), 2) if (u, v) not in {(0, 1), (2, 3), (4, 5)}
    ]),
    # outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    "PETERSEN": (10, (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
    )),
}

FIXTURE_NAMES = tuple(_FIXTURES)


def named(fixture: str) -> Graph:
    try:
        n, edges = _FIXTURES[fixture.upper()]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {fixture!r}; choose from {', '.join(_FIXTURES)}") from None
    return from_edge_list(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree decoded from a random Prufer sequence.

    The sequence is drawn from numpy's PCG64 bit generator seeded with ``seed``.
    """
    _need(n >= 1, f"random tree needs n >= 1, got {n}")
    if n <= 2:
        return path(n)
    rng = np.random.Generator(np.random.PCG64(seed))
    return prufer_decode([int(x) for x in rng.integers(0, n, size=n - 2)])


def prufer_decode(seq: list[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise BadParameter(f"Prufer entry {x} outside [0, {n})")
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (i for i in range(n) if degree[i] == 1)
    edges.append((u, w))
    return from_edge_list(n, edges)


def random_connected(n: int, seed: int, p: float = 0.3) -> Graph:
    """Random spanning tree plus each remaining pair independently with probability ``p``."""
    _need(n >= 1, f"random connected graph needs n >= 1, got {n}")
    _need(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p}")
    tree = random_tree(n, seed)
    rng = np.random.Generator(np.random.PCG64([seed, n]))
    extra = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return from_edge_list(n, tree.edges() + extra)


class Family(enum.Enum):
    COMPLETE = "complete"
    CYCLE = "cycle"
    PATH = "path"
    COMPLETE_BIPARTITE = "complete_bipartite"
    STAR = "star"
    WINDMILL = "windmill"
    COCKTAIL_PARTY = "cocktail_party"
    NAMED = "named"
    RANDOM_TREE = "random_tree"


_ARITY = {
    Family.COMPLETE: 1,
    Family.CYCLE: 1,
    Family.PATH: 1,
    Family.COMPLETE_BIPARTITE: 2,
    Family.STAR: 1,
    Family.WINDMILL: 2,
    Family.COCKTAIL_PARTY: 1,
    Family.RANDOM_TREE: 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its integer parameters.

    ``NAMED`` takes the fixture tag in ``name`` and no parameters;
    ``RANDOM_TREE`` takes ``n`` and a ``seed``.
    """

    family: Family
    params: tuple[int, ...] = ()
    seed: int | None = None
    name: str | None = field(default=None)

    def build(self) -> Graph:
        if self.family is Family.NAMED:
            _need(self.name is not None and not self.params, "named fixtures take a tag and no parameters")
            return named(self.name)
        arity = _ARITY[self.family]
        _need(len(self.params) == arity, f"{self.family.value} takes {arity} parameter(s), got {len(self.params)}")
        if self.family is Family.RANDOM_TREE:
            _need(self.seed is not None, "random_tree needs a seed")
            return random_tree(self.params[0], self.seed)
        ctor = {
            Family.COMPLETE: complete,
            Family.CYCLE: cycle,
            Family.PATH: path,
            Family.COMPLETE_BIPARTITE: complete_bipartite,
            Family.STAR: star,
            Family.WINDMILL: windmill,
            Family.COCKTAIL_PARTY: cocktail_party,
        }[self.family]
        return ctor(*self.params)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise BadParameter(message)
