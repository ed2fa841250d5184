"""Exit criteria. Every comparison is exact integer equality.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import time
from pathlib import Path

import pytest

from graphstress.canonical import canonical_form
from graphstress.closed_forms import (
    predict_complete_bipartite,
    predict_complete_bipartite_total,
    predict_corona_hub,
    predict_corona_leaf,
    predict_cycle,
    predict_cycle_total,
    predict_srg,
    predict_tree_vertex,
    predict_windmill_center,
)
from graphstress.formats import parse_edge_list, parse_graph6, to_edge_list_text, to_graph6
from graphstress.generators import (
    cocktail_party,
    complete,
    complete_bipartite,
    corona,
    cycle,
    named,
    path,
    random_connected,
    random_tree,
    windmill,
)
from graphstress.geodesics import stress_profile
from graphstress.graph import from_edge_list
from graphstress.report import emit_json
from graphstress.structure import classify, detect_srg
from graphstress.verify import (
    BATTERY_CHECKS,
    random_connected_corpus,
    scan,
    verify,
    verify_invariant_battery,
)

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704, 7: 1866256}
CORONA_FACTORS = {"K1": complete(1), "K2": complete(2), "P3": path(3), "C4": cycle(4), "K3": complete(3)}


def test_criterion_1_figure1(record_criterion):
    g = named("FIG1_REG3")
    best = min(_timed(lambda: stress_profile(g))[1] for _ in range(20))
    stress = stress_profile(g).stress
    ok = stress == (43, 16, 16, 1, 1, 43, 16, 16, 1, 1) and best < 1e-3
    record_criterion("1 FIG1_REG3 stresses 43/16/1", ok, f"{stress}, {best * 1e3:.3f} ms")
    assert stress == (43, 16, 16, 1, 1, 43, 16, 16, 1, 1)
    assert best < 1e-3


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


@pytest.fixture(scope="module")
def sweep():
    """Engine-vs-formula mismatches per family, plus total runtime."""
    start = time.perf_counter()
    bad = {k: [] for k in ("cycles", "bipartite", "windmills", "corona hubs", "corona non-hubs", "trees")}

    for n in range(3, 31):
        p = stress_profile(cycle(n))
        if set(p.stress) != {predict_cycle(n)} or p.total != predict_cycle_total(n):
            bad["cycles"].append(n)

    for m in range(1, 9):
        for n in range(1, 9):
            p = stress_profile(complete_bipartite(m, n))
            expected = [predict_complete_bipartite(m, n, "A")] * m + [predict_complete_bipartite(m, n, "B")] * n
            if list(p.stress) != expected or p.total != predict_complete_bipartite_total(m, n):
                bad["bipartite"].append((m, n))

    for n in range(2, 6):
        for m in range(2, 6):
            p = stress_profile(windmill(n, m)).stress
            if p[0] != predict_windmill_center(n, m) or any(p[1:]):
                bad["windmills"].append((n, m))

    for m in range(2, 5):
        for name, g in CORONA_FACTORS.items():
            p = stress_profile(corona(complete(m), g)).stress
            hub = predict_corona_hub(m, g.n)
            for h in range(m):
                if p[h] != hub:
                    bad["corona hubs"].append(f"K{m}o{name}: engine {p[h]} vs formula {hub}")
                    break
            for i in range(m):
                for v in range(g.n):
                    if p[m + i * g.n + v] != predict_corona_leaf(g, v):
                        bad["corona non-hubs"].append((m, name, v))

    for seed in range(100):
        t = random_tree(1 + seed % 20, seed)
        p = stress_profile(t).stress
        if list(p) != [predict_tree_vertex(t, v) for v in range(t.n)]:
            bad["trees"].append(seed)

    return bad, time.perf_counter() - start


@pytest.mark.parametrize("family", ["cycles", "bipartite", "windmills", "corona hubs", "corona non-hubs", "trees"])
def test_criterion_2_closed_forms(sweep, family, record_criterion):
    bad, _ = sweep
    detail = "exact" if not bad[family] else f"{len(bad[family])} mismatches, e.g. {bad[family][:3]}"
    record_criterion(f"2 closed-form sweep: {family}", not bad[family], detail)
    assert bad[family] == []


def test_criterion_2_runtime(sweep, record_criterion):
    _, elapsed = sweep
    record_criterion("2 closed-form sweep runtime < 5 s", elapsed < 5, f"{elapsed:.2f} s")
    assert elapsed < 5


def test_criterion_3_strongly_regular(record_criterion):
    start = time.perf_counter()
    cases = [(named("PETERSEN"), 3), (named("FIG4_OCTAHEDRON"), 2)]
    cases += [(cocktail_party(k), k) for k in range(1, 6)]
    failures = []
    for g, k in cases:
        params = detect_srg(g)
        if params is None or stress_profile(g).stress != (k,) * g.n or predict_srg(params) != k:
            failures.append((g.n, k))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1
    record_criterion("3 strongly regular graphs are k(k-1-lambda)/2-stress regular", ok, f"{elapsed:.3f} s")
    assert failures == []
    assert elapsed < 1


@pytest.fixture(scope="module")
def exhaustive():
    return scan(7, ("T6_5", "T6_6", "T4_1", "C4_2"))


def test_criterion_4_one_stress_regular(exhaustive, record_criterion):
    r = exhaustive["T6_5"]
    expected = sorted({canonical_form(cycle(4)), canonical_form(cycle(5))})
    ok = r.counts_by_n == CONNECTED_COUNTS and r.witnesses == expected and not r.counterexamples
    ok = ok and r.elapsed < 300
    record_criterion("4 1-stress regular <=> C4 or C5 (n <= 7)", ok,
                     f"{r.graphs_scanned} graphs, shared pass {r.elapsed:.1f} s")
    assert r.counts_by_n == CONNECTED_COUNTS
    assert r.witnesses == expected
    assert r.counterexamples == []
    assert r.elapsed < 300


def test_criterion_5_two_stress_regular(exhaustive, record_criterion):
    r = exhaustive["T6_6"]
    expected = sorted(canonical_form(named(f)) for f in ("FIG2_2SR", "FIG3_PRISM", "FIG4_OCTAHEDRON"))
    ok = r.counts_by_n == CONNECTED_COUNTS and r.witnesses == expected and not r.counterexamples
    record_criterion("5 2-stress regular <=> FIG2_2SR, prism, octahedron (n <= 7)", ok, f"witnesses {r.witnesses}")
    assert r.witnesses == expected
    assert r.counterexamples == []


def test_criterion_6_single_positive_stress_and_star(exhaustive, record_criterion):
    t41, c42 = exhaustive["T4_1"], exhaustive["C4_2"]
    stars = sorted(canonical_form(from_edge_list(n, [(0, i) for i in range(1, n)])) for n in range(3, 8))
    ok = not t41.counterexamples and not c42.counterexamples and c42.witnesses == stars
    record_criterion("6 unique positive stress <=> unique complete-block cut vertex; star corollary", ok,
                     f"{len(t41.witnesses)} classes, {len(c42.witnesses)} stars")
    assert t41.counterexamples == []
    assert c42.counterexamples == []
    assert c42.witnesses == stars
    assert canonical_form(windmill(3, 3)) in t41.witnesses


BATTERY_LABELS = {
    "T2_4": "(a) simplicial <=> zero stress",
    "P2_6": "(b) total stress identity",
    "C5_3": "(c) diameter-2 shortcut",
    "L5_2": "(d) imposes_stress vs enumeration",
    "L6_2": "(e) geodesic length bound",
    "L6_1": "(f) min-degree bound",
    "L6_3": "(f) eccentricity-1 dominance",
    "C6_4": "(f) eccentricity corollary",
    "ENGINES": "(g) accumulated == naive == oracle",
}


def test_criterion_7_invariant_battery(record_criterion):
    report = verify_invariant_battery(6, extra_graphs=random_connected_corpus(1000, 12, seed=0))
    assert report.graphs_scanned == sum(CONNECTED_COUNTS[n] for n in range(1, 7)) + 1000
    for check in BATTERY_CHECKS:
        bad = [c for c in report.counterexamples if c["check"] == check]
        record_criterion(f"7 {BATTERY_LABELS[check]}", not bad, f"{len(bad)} violations")
    record_criterion("7 battery runtime < 2 min", report.elapsed < 120, f"{report.elapsed:.1f} s")
    assert report.counterexamples == []
    assert report.elapsed < 120


def test_criterion_8_parsers(record_criterion):
    golden = [("Bw", complete(3)), ("A_", complete(2)), ("A?", from_edge_list(2, []))]
    ok = all(parse_graph6(s) == g and to_graph6(g) == s for s, g in golden)
    for seed in range(50):
        g = random_connected(1 + seed % 20, 1000 + seed, 0.25)
        line = to_graph6(g)
        ok = ok and to_graph6(parse_graph6(line)) == line and parse_graph6(line) == g
        ok = ok and parse_edge_list(to_edge_list_text(g)) == g
    goldens = Path(__file__).parent / "golden"
    runs = [
        (emit_json(stress_profile(cycle(4))), "compute_c4.json"),
        (emit_json(classify(complete(3))), "classify_k3.json"),
        (emit_json(verify("T6_5", 5), include_timing=False), "verify_t6_5_n5.json"),
    ]
    for text, name in runs + runs:
        ok = ok and text + "\n" == (goldens / name).read_text()
    record_criterion("8 graph6 bit-exactness and stable JSON", ok)
    assert ok
