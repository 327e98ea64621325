import itertools

import networkx as nx
from hypothesis import strategies as st

from powerdom.generators import random_mixed, random_stacked


def naive_closure(g, seeds):
    """Set-based monitoring closure written independently of the engine."""
    m = set(seeds)
    for s in seeds:
        m.update(g.neighbors(s))
    while True:
        forced = set()
        for v in m:
            outside = [w for w in g.neighbors(v) if w not in m]
            if len(outside) == 1:
                forced.add(outside[0])
        if not forced:
            return m
        m |= forced


def brute_gamma(g):
    """Minimum power dominating set size using networkx adjacency only."""
    h = g.to_networkx()
    n = h.number_of_nodes()
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            if len(naive_closure(h, combo)) == n:
                return k
    raise AssertionError("unreachable")


@st.composite
def triangulations(draw, n_min=4, n_max=40):
    n = draw(st.integers(n_min, n_max))
    seed = draw(st.integers(0, 10**6))
    flips = draw(st.sampled_from([0, n, 3 * n]))
    if flips == 0:
        return random_stacked(n, seed)
    return random_mixed(n, seed, flips)


def is_planar(g) -> bool:
    return nx.check_planarity(g.to_networkx())[0]


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
