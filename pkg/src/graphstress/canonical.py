"""Canonical labelling of small graphs by exhaustive lexicographic search."""
from __future__ import annotations

from .errors import TooLarge
from .formats import to_graph6
from .graph import Graph, from_edge_list

MAX_CANONICAL_N = 8


def _refined_colours(g: Graph) -> list[int]:
    """Iterated degree refinement; colour values depend only on the isomorphism class."""
    colours = [len(a) for a in g.adj]
    while True:
        sigs = [(colours[v], tuple(sorted(colours[u] for u in g.adj[v]))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colours)):
            return new
        colours = new


def canonical_order(g: Graph, limit: int = MAX_CANONICAL_N) -> list[int]:
    """Vertex order whose upper-triangle bit string (graph6 pair order) is minimal.

    Only orders that list colour classes in increasing colour are searched;
    the classes are isomorphism invariant, so the result is still a
    canonical labelling.
    """
    if g.n > limit:
        raise TooLarge(f"canonical form is limited to n <= {limit}, got {g.n}")
    n = g.n
    colours = _refined_colours(g)
    slots = sorted(colours)
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges():
        adj[u][v] = adj[v][u] = True

    best_bits: list[bool] | None = None
    best_order: list[int] = []
    order: list[int] = []
    used = [False] * n

    def extend(bits: list[bool]) -> None:
        nonlocal best_bits, best_order
        pos = len(order)
        if pos == n:
            if best_bits is None or bits < best_bits:
                best_bits, best_order = bits, list(order)
            return
        for v in range(n):
            if used[v] or colours[v] != slots[pos]:
                continue
            new = bits + [adj[order[i]][v] for i in range(pos)]
            if best_bits is not None and new > best_bits[:len(new)]:
                continue
            used[v] = True
            order.append(v)
            extend(new)
            order.pop()
            used[v] = False

    extend([])
    return best_order


def canonical_graph(g: Graph, limit: int = MAX_CANONICAL_N) -> Graph:
    order = canonical_order(g, limit)
    position = {v: i for i, v in enumerate(order)}
    return from_edge_list(g.n, [(position[u], position[v]) for u, v in g.edges()])


def canonical_form(g: Graph, limit: int = MAX_CANONICAL_N) -> str:
    """Isomorphism-class key: the graph6 string of the canonical relabelling.

    Raising ``limit`` above 8 is allowed, but the search can become
    exponential for graphs with large automorphism groups.
    """
    return to_graph6(canonical_graph(g, limit))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)
