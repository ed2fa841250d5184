"""Closed-form stress predictions for standard graph families.

Every function returns an exact integer; a formula that would need rounding
raises instead.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameter, InfeasibleParameters, NotATree, WrongDiameter
from .graph import Graph, components, diameter, from_edge_list, is_connected, nonadjacent_pairs


@dataclass(frozen=True)
class SrgParameters:
    """Strongly regular parameters ``srg(v, k, lambda, mu)``."""

    v: int
    k: int
    lam: int
    mu: int

    def is_feasible(self) -> bool:
        return (
            0 <= self.k < self.v
            and 0 <= self.lam <= self.k - 1
            and 0 <= self.mu <= self.k
            and self.k * (self.k - self.lam - 1) == (self.v - self.k - 1) * self.mu
        )


def _halve(numerator: int) -> int:
    if numerator % 2:
        raise InfeasibleParameters(f"{numerator}/2 is not an integer")
    return numerator // 2


def _choose2(x: int) -> int:
    return x * (x - 1) // 2


def predict_complete_bipartite(m: int, n: int, side: str) -> int:
    """Stress of a vertex of K_{m,n} on side ``"A"`` (size m) or ``"B"`` (size n)."""
    if m < 1 or n < 1:
        raise BadParameter(f"K_{{m,n}} needs m, n >= 1, got {m}, {n}")
    if side == "A":
        return _choose2(n)
    if side == "B":
        return _choose2(m)
    raise BadParameter(f"side must be 'A' or 'B', got {side!r}")


def predict_complete_bipartite_total(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise BadParameter(f"K_{{m,n}} needs m, n >= 1, got {m}, {n}")
    return _halve(m * n * (m + n - 2))


def predict_cycle(n: int) -> int:
    if n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {n}")
    if n % 2:
        return (n - 1) * (n - 3) // 8
    return n * (n - 2) // 8


def predict_cycle_total(n: int) -> int:
    if n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {n}")
    if n % 2:
        return n * (n - 1) * (n - 3) // 8
    return n * n * (n - 2) // 8


def predict_windmill_center(n: int, m: int) -> int:
    """Stress of the shared vertex of Wd(n, m); every other vertex has stress 0."""
    if n < 2 or m < 2:
        raise BadParameter(f"windmill needs n, m >= 2, got {n}, {m}")
    return _halve(m * (m - 1) * (n - 1) ** 2)


def predict_tree_vertex(t: Graph, v: int) -> int:
    """Sum of pairwise products of the component sizes left after deleting ``v``."""
    t._check(v)
    if t.num_edges != t.n - 1 or not is_connected(t):
        raise NotATree("input is not a tree")
    keep = [u for u in range(t.n) if u != v]
    index = {u: i for i, u in enumerate(keep)}
    rest = from_edge_list(len(keep), [(index[a], index[b]) for a, b in t.edges() if v not in (a, b)])
    sizes = [len(c) for c in components(rest)]
    seen = 0
    total = 0
    for s in sizes:
        total += seen * s
        seen += s
    return total


def predict_srg(p: SrgParameters) -> int:
    if not p.is_feasible():
        raise InfeasibleParameters(f"{p} violates the strongly regular feasibility conditions")
    if p.mu == 0:
        return 0
    return _halve(p.k * (p.k - 1 - p.lam))


def predict_corona_hub(m: int, n: int) -> int:
    """Published hub-stress formula for K_m o G with |V(G)| = n: ``m n (m-1)(n+1) / 2``.

    It matches exact counts only when ``m == 2`` and G is complete; see
    :func:`corona_hub_stress` for the exact value.
    """
    if m < 2 or n < 1:
        raise BadParameter(f"corona hub formula needs m >= 2 and n >= 1, got {m}, {n}")
    return _halve(m * n * (m - 1) * (n + 1))


def corona_hub_stress(m: int, g: Graph) -> int:
    """Exact stress of a K_m vertex in K_m o G.

    Through hub ``h`` pass: one geodesic from each pendant vertex of ``h`` to
    each other hub and to each vertex of the other pendant copies, plus one
    for every non-adjacent pair inside its own copy of G.
    """
    if m < 2 or g.n < 1:
        raise BadParameter(f"corona hub stress needs m >= 2 and a non-empty G, got m={m}, n={g.n}")
    n = g.n
    return n * (m - 1) * (n + 1) + nonadjacent_pairs(g, range(n))


def predict_corona_leaf(g: Graph, v: int) -> int:
    """Stress in K_m o G of the copy of ``v``: non-adjacent pairs in ``N_G(v)``."""
    return nonadjacent_pairs(g, g.neighbors(v))


def predict_diameter2(g: Graph, v: int) -> int:
    g._check(v)
    if not is_connected(g) or diameter(g) != 2:
        raise WrongDiameter("prediction applies only to connected graphs of diameter 2")
    return nonadjacent_pairs(g, g.adj[v])
