"""End-to-end acceptance checks, one test per criterion.

Each test records a ``PASS`` or ``FAIL`` line that is printed in the
terminal summary, then asserts on the same outcome.
"""

import json
import random
import time
from functools import lru_cache

from powerdom.cli import main
from powerdom.exact import gamma_p_exact
from powerdom.generators import (
    b_path,
    build,
    facial_triakis,
    lower_bound_family,
    named,
    named_corpus,
    random_corpus,
)
from powerdom.harness import closure_order_independent, desk_corpus
from powerdom.monitor import is_power_dominating
from powerdom.properties import STRUCTURAL_CHECKS, fixpoint_violations
from powerdom.solver import algorithm1, algorithm2, check_property_star, power_dominate
from powerdom.triangulation import parse, serialize

from conftest import ACCEPTANCE

RANDOM_COUNT = 500
DESK_COUNT = 220


def record(number, title, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number} {status}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f"; first failures: {failures[:3]}"
    ACCEPTANCE[number] = line
    print(line)
    assert not failures, line


@lru_cache(maxsize=None)
def random_graphs():
    return [(s.label, build(s)) for s in random_corpus(RANDOM_COUNT, 6, 200, seed=2024)]


def random_families():
    return {s.family for s in random_corpus(RANDOM_COUNT, 6, 200, seed=2024)}


@lru_cache(maxsize=None)
def full_corpus():
    graphs = [(s.label, build(s)) for s in named_corpus()]
    for k in (1, 2, 3):
        for gadget in ("bad", "good", "ugly"):
            graphs.append((f"lower_bound(k={k},{gadget})", lower_bound_family(k, gadget)))
    graphs += [(f"b_path({k})", b_path(k)) for k in (3, 4, 5, 8)]
    graphs += [(f"facial_triakis({m},{s})", facial_triakis(m, s)) for m, s in ((4, 1), (10, 2), (30, 3))]
    return graphs + list(random_graphs())


def test_criterion_1_tight_instances():
    failures = []
    for tag, want in (("octahedron", 1), ("triakis", 2)):
        g = named(tag)
        t0 = time.perf_counter()
        r = power_dominate(g)
        ex = gamma_p_exact(g)
        dt = time.perf_counter() - t0
        if r.size != want or ex.gamma_p != want or not is_power_dominating(g, r.S) or dt >= 1.0:
            failures.append((tag, r.size, ex.gamma_p, round(dt, 3)))
    record(1, "octahedron |S|=1, triakis |S|=2, exact agrees", failures)


def test_criterion_2_lower_bound_family():
    failures = []
    timings = {}
    for k in (1, 2, 3):
        for gadget in ("bad", "ugly"):
            g = lower_bound_family(k, gadget)
            t0 = time.perf_counter()
            ex = gamma_p_exact(g)
            r = power_dominate(g)
            dt = time.perf_counter() - t0
            timings[(k, gadget)] = dt
            ok = (
                g.n == 6 * k
                and ex.gamma_p == k
                and k <= r.size <= (g.n - 2) // 4
                and is_power_dominating(g, r.S)
                and (k != 3 or dt < 60)
            )
            if not ok:
                failures.append((k, gadget, g.n, ex.gamma_p, r.size))
    worst = max(timings.values())
    record(2, "lower-bound family k=1..3, gamma_P=k=n/6", failures, f"slowest {worst:.2f}s")


def test_criterion_3_bound_at_scale():
    graphs = random_graphs()
    failures = []
    total = 0.0
    for label, g in graphs:
        t0 = time.perf_counter()
        r = power_dominate(g)
        total += time.perf_counter() - t0
        if not is_power_dominating(g, r.S) or 4 * r.size > g.n - 2 or r.diagnostics:
            failures.append((label, g.n, r.size))
    avg = total / len(graphs)
    if avg >= 0.5:
        failures.append(("average seconds", avg))
    kinds = random_families()
    if len(graphs) < 500 or kinds != {"random_stacked", "random_mixed"}:
        failures.append(("corpus", len(graphs), sorted(kinds)))
    record(3, f"4|S| <= n-2 on {len(graphs)} random triangulations", failures, f"avg {avg * 1000:.1f} ms")


def test_criterion_4_oracle_equivalence():
    specs = desk_corpus(14, DESK_COUNT, seed=7)
    failures = []
    for spec in specs:
        g = build(spec)
        r = power_dominate(g)
        ex = gamma_p_exact(g)
        # the bound is stated for n >= 6; the two 5-vertex triangulations
        # need one seed and are held to the exact optimum instead
        cap = (g.n - 2) // 4 if g.n >= 6 else ex.gamma_p
        ok = (
            ex.gamma_p <= r.size <= cap
            and is_power_dominating(g, r.S)
            and is_power_dominating(g, ex.witness)
        )
        if not ok:
            failures.append((spec.label, g.n, ex.gamma_p, r.size))
    if len(specs) < 200:
        failures.append(("corpus", len(specs)))
    record(4, f"exact <= constructive <= floor((n-2)/4) on {len(specs)} instances, n <= 14", failures)


def test_criterion_5_fixpoint_laws():
    failures = []
    count = 0
    for label, g in full_corpus():
        if g.n < 6:
            continue
        sel = algorithm1(g)
        algorithm2(g, sel.state)
        count += 1
        bad = fixpoint_violations(g, sel.state)
        if bad:
            failures.append((label, bad[:2]))
    record(5, f"fixpoint laws after greedy stop on {count} instances", failures)


def test_criterion_6_structural_laws():
    failures = []
    corpus = full_corpus()
    for label, g in corpus:
        for name, check in STRUCTURAL_CHECKS.items():
            bad = check(g)
            if bad:
                failures.append((label, name, bad[:2]))
    record(6, f"structural laws {sorted(STRUCTURAL_CHECKS)} on {len(corpus)} instances", failures)


def test_criterion_7_property_star():
    failures = []
    worst = 0.0
    specs = desk_corpus(14, DESK_COUNT, seed=7)
    count = 0
    for spec in specs:
        g = build(spec)
        if g.n < 6:
            continue
        sel = algorithm1(g)
        algorithm2(g, sel.state)
        t0 = time.perf_counter()
        res = check_property_star(g, sel.state.seeds)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        count += 1
        if not res.ok or dt >= 10:
            failures.append((spec.label, res.violations[:2], round(dt, 2)))
    record(7, f"induced-subgraph seed budget for S2 on {count} instances", failures, f"slowest {worst:.2f}s")


def test_criterion_8_closure_order_independence():
    rng = random.Random(8)
    corpus = full_corpus()
    picks = rng.sample(range(len(corpus)), 20)
    failures = []
    for i in picks:
        label, g = corpus[i]
        seed_sets = [power_dominate(g).S, rng.sample(range(g.n), min(2, g.n))]
        for seeds in seed_sets:
            if not closure_order_independent(g, seeds, orders=100, seed=i):
                failures.append((label, seeds))
    record(8, "closure identical under 100 random propagation orders, 20 graphs", failures)


def test_criterion_9_determinism_and_round_trip(tmp_path, capsys):
    failures = []
    corpus = full_corpus()
    for label, g in corpus:
        text = serialize(g)
        if parse(text) != g or serialize(parse(text)) != text:
            failures.append((label, "round_trip"))
    for label, g in corpus[::25]:
        if power_dominate(g).to_json(True) != power_dominate(g).to_json(True):
            failures.append((label, "report"))
    for tag in ("octahedron", "triakis", "icosahedron"):
        path = tmp_path / f"{tag}.rot"
        path.write_text(serialize(named(tag)))
        outs = []
        for _ in range(2):
            main(["solve", "--explain", str(path)])
            outs.append(capsys.readouterr().out)
        json.loads(outs[0])
        if outs[0] != outs[1]:
            failures.append((tag, "cli"))
    record(9, f"round-trip on {len(corpus)} instances, byte-identical reports", failures)
