from __future__ import annotations

from itertools import combinations

import pytest

from graphstress.graph import Graph

INF = float("inf")


def floyd_warshall(g: Graph) -> list[list[float]]:
    d = [[0 if i == j else INF for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def all_simple_paths(g: Graph, s: int, t: int) -> list[tuple[int, ...]]:
    out = []

    def walk(v, trail):
        if v == t:
            out.append(tuple(trail))
            return
        for w in g.adj[v]:
            if w not in trail:
                trail.append(w)
                walk(w, trail)
                trail.pop()

    walk(s, [s])
    return out


def brute_geodesics(g: Graph) -> dict[tuple[int, int], list[tuple[int, ...]]]:
    """Shortest members of the full simple-path set, per unordered pair."""
    result = {}
    for s, t in combinations(range(g.n), 2):
        paths = all_simple_paths(g, s, t)
        if paths:
            shortest = min(len(p) for p in paths)
            result[(s, t)] = sorted(p for p in paths if len(p) == shortest)
    return result


def brute_stress(g: Graph) -> list[int]:
    counts = [0] * g.n
    for paths in brute_geodesics(g).values():
        for p in paths:
            for v in p[1:-1]:
                counts[v] += 1
    return counts


ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


@pytest.fixture
def record_criterion():
    """Record a pass/fail line for the acceptance summary, whatever the outcome."""
    entries = []

    def record(name: str, passed: bool, detail: str = "") -> None:
        entries.append((name, passed, detail))

    yield record
    ACCEPTANCE_LINES.extend(entries)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_LINES:
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
