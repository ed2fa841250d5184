"""Structural predicates and the characterisations they are checked against."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .canonical import is_isomorphic
from .closed_forms import SrgParameters, predict_srg
from .errors import Disconnected, TooSmall
from .generators import complete, cycle, named, star
from .geodesics import StressProfile, stress_profile
from .graph import UNREACHABLE, Graph, diameter, induced_is_clique, is_connected, nonadjacent_pairs


@dataclass(frozen=True)
class BlockCutDecomposition:
    cut_vertices: frozenset[int]
    blocks: tuple[tuple[int, ...], ...]


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if induced_is_clique(g, g.adj[v]))


def block_cut_decomposition(g: Graph) -> BlockCutDecomposition:
    """Biconnected components by iterative depth-first search with low-links."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            disc[root] = clock
            clock += 1
            blocks.append((root,))
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(g.adj[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    edge_stack.append((v, w))
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                block: set[int] = set()
                while True:
                    e = edge_stack.pop()
                    block.update(e)
                    if e == (parent, v):
                        break
                blocks.append(tuple(sorted(block)))
        if root_children >= 2:
            cuts.add(root)
    return BlockCutDecomposition(frozenset(cuts), tuple(sorted(blocks)))


def _require_connected_3(g: Graph) -> None:
    if g.n < 3:
        raise TooSmall(f"needs at least 3 vertices, got {g.n}")
    if not is_connected(g):
        raise Disconnected("needs a connected graph")


def is_unique_cutvertex_complete_blocks(g: Graph) -> int | None:
    """The cut vertex, if it is the only one and every block is a clique."""
    _require_connected_3(g)
    d = block_cut_decomposition(g)
    if len(d.cut_vertices) != 1:
        return None
    if not all(induced_is_clique(g, b) for b in d.blocks):
        return None
    return next(iter(d.cut_vertices))


def has_single_positive_stress_vertex(g: Graph, profile: StressProfile | None = None) -> int | None:
    _require_connected_3(g)
    profile = profile or stress_profile(g)
    positive = [v for v, s in enumerate(profile.stress) if s > 0]
    return positive[0] if len(positive) == 1 else None


def is_star_by_stress(g: Graph, profile: StressProfile | None = None) -> bool:
    """Exactly one vertex carries stress ``L(L-1)/2`` (``L = n - 1``) and the rest carry none."""
    if not is_connected(g):
        raise Disconnected("needs a connected graph")
    if g.n < 3:
        raise TooSmall(f"needs at least 3 vertices, got {g.n}")
    leaves = g.n - 1
    profile = profile or stress_profile(g)
    target = leaves * (leaves - 1) // 2
    hits = sum(1 for s in profile.stress if s == target)
    zeros = sum(1 for s in profile.stress if s == 0)
    return hits == 1 and zeros == g.n - 1


def is_star_graph(g: Graph) -> bool:
    """Structural test for K_{1,n} with n >= 2."""
    if g.n < 3:
        return False
    degs = sorted(g.degrees())
    return degs[-1] == g.n - 1 and all(d == 1 for d in degs[:-1])


def is_complete_graph(g: Graph) -> bool:
    return all(len(a) == g.n - 1 for a in g.adj)


def detect_srg(g: Graph) -> SrgParameters | None:
    """``srg(v, k, lambda, mu)`` if ``g`` is strongly regular, else ``None``.

    Complete and edgeless graphs return ``None``: one of the two constants
    would be undefined.
    """
    if g.n < 2:
        return None
    degs = set(g.degrees())
    if len(degs) != 1:
        return None
    k = degs.pop()
    if k == 0 or k == g.n - 1:
        return None
    sets = [set(a) for a in g.adj]
    lam = mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = len(sets[u] & sets[v])
            if v in sets[u]:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    return SrgParameters(g.n, k, lam, mu)


def stress_regularity(g: Graph, profile: StressProfile | None = None) -> int | None:
    if g.n == 0:
        return None
    values = set((profile or stress_profile(g)).stress)
    return values.pop() if len(values) == 1 else None


class RecognizedFamily(enum.Enum):
    COMPLETE = "COMPLETE"
    C4 = "C4"
    C5 = "C5"
    FIG2_2SR = "FIG2_2SR"
    PRISM = "PRISM"
    OCTAHEDRON = "OCTAHEDRON"
    STAR = "STAR"
    NONE = "NONE"


ONE_STRESS_REGULAR = (RecognizedFamily.C4, RecognizedFamily.C5)
TWO_STRESS_REGULAR = (RecognizedFamily.FIG2_2SR, RecognizedFamily.PRISM, RecognizedFamily.OCTAHEDRON)


def family_graph(family: RecognizedFamily) -> Graph:
    return {
        RecognizedFamily.C4: lambda: cycle(4),
        RecognizedFamily.C5: lambda: cycle(5),
        RecognizedFamily.FIG2_2SR: lambda: named("FIG2_2SR"),
        RecognizedFamily.PRISM: lambda: named("FIG3_PRISM"),
        RecognizedFamily.OCTAHEDRON: lambda: named("FIG4_OCTAHEDRON"),
    }[family]()


def recognize_family(g: Graph) -> RecognizedFamily:
    if g.n == 0 or not is_connected(g):
        return RecognizedFamily.NONE
    if is_complete_graph(g):
        return RecognizedFamily.COMPLETE
    if is_star_graph(g):
        return RecognizedFamily.STAR
    for fam in ONE_STRESS_REGULAR + TWO_STRESS_REGULAR:
        if is_isomorphic(g, family_graph(fam)):
            return fam
    return RecognizedFamily.NONE


@dataclass
class ClassificationReport:
    n: int
    is_connected: bool
    diameter: object  # int or UNREACHABLE
    stress_regular_k: int | None
    simplicial: frozenset[int]
    srg: SrgParameters | None
    one_stress_center: int | None
    recognized_family: RecognizedFamily
    findings: list[str] = field(default_factory=list)


def classify(g: Graph) -> ClassificationReport:
    """Run stress-side and structure-side predicates and cross-check them.

    Every disagreement between the two sides lands in ``findings``; an empty
    list means all characterisations agreed on this graph.
    """
    profile = stress_profile(g)
    connected = is_connected(g)
    diam = diameter(g) if connected else UNREACHABLE
    k = stress_regularity(g, profile)
    simp = simplicial_vertices(g)
    srg = detect_srg(g)
    family = recognize_family(g)
    findings = []

    zero = frozenset(v for v, s in enumerate(profile.stress) if s == 0)
    if zero != simp:
        findings.append(f"zero-stress vertices {sorted(zero)} differ from simplicial vertices {sorted(simp)}")

    center = None
    if connected and g.n >= 3:
        center = has_single_positive_stress_vertex(g, profile)
        structural = is_unique_cutvertex_complete_blocks(g)
        if center != structural:
            findings.append(f"single positive-stress vertex {center} but unique complete-block cut vertex {structural}")
        if is_star_by_stress(g, profile) != is_star_graph(g):
            findings.append("stress-based star test disagrees with the degree sequence")

    if connected:
        expected = {
            0: (RecognizedFamily.COMPLETE,),
            1: ONE_STRESS_REGULAR,
            2: TWO_STRESS_REGULAR,
        }
        for kk, fams in expected.items():
            if (k == kk) != (family in fams):
                findings.append(f"stress regularity {k} inconsistent with family {family.value}")

    if srg is not None:
        if k is None:
            findings.append(f"{srg} is strongly regular but not stress regular")
        elif k != predict_srg(srg):
            findings.append(f"{srg} predicts stress {predict_srg(srg)}, computed {k}")

    if connected and diam == 2:
        for v in range(g.n):
            if profile.stress[v] != nonadjacent_pairs(g, g.adj[v]):
                findings.append(f"diameter-2 shortcut fails at vertex {v}")

    return ClassificationReport(g.n, connected, diam, k, simp, srg, center, family, findings)
