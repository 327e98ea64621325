"""Checkable structural laws.  Each function returns a list of violations.

An empty list means the law holds on the given graph (and state).  The
violation entries are small tuples meant for error messages and JSON.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, Tuple

from .monitor import MonitorState
from .structure import b_vertex_witnesses, b_vertices, classify_small, three_vertices
from .triangulation import Triangulation


def fixpoint_violations(g: Triangulation, state: MonitorState) -> List[Tuple]:
    """Laws of a monitoring state where no vertex adds four or more.

    * a monitored vertex has 0, 2 or 3 non-monitored neighbors;
    * a non-monitored vertex has at most 2 non-monitored neighbors;
    * a monitored non-seed vertex has a neighbor whose closed neighborhood
      is fully monitored;
    * components of the non-monitored subgraph have at most 3 vertices.
    """
    m = state.monitored
    out: List[Tuple] = []
    for v in range(g.n):
        k = sum(1 for w in g.rotation[v] if w not in m)
        if v in m:
            if k not in (0, 2, 3):
                out.append(("monitored_degree", v, k))
            if v not in state.seeds and not any(
                w in m and g.closed_neighborhood(w) <= m for w in g.rotation[v]
            ):
                out.append(("no_source", v))
        elif k > 2:
            out.append(("unmonitored_degree", v, k))
    seen = set()
    for v in range(g.n):
        if v in m or v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in g.rotation[x]:
                if w not in m and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        if len(comp) > 3:
            out.append(("component_order", tuple(sorted(comp))))
    return out


def b_adjacency_violations(g: Triangulation) -> List[Tuple]:
    """Two b-vertices are adjacent exactly when they share a 3-neighbor."""
    bs = sorted(b_vertices(g))
    threes = three_vertices(g)
    out = []
    for u, w in combinations(bs, 2):
        shared = bool(g.adj[u] & g.adj[w] & threes)
        if g.has_edge(u, w) != shared:
            out.append(("b_adjacency", u, w))
    return out


def b_degree_violations(g: Triangulation) -> List[Tuple]:
    """b-vertices have degree at most 6 and one of the two neighborhood shapes.

    With 3-neighbors ``v, v'`` the shapes are: degree 6 with
    ``N(v) & N(v') = {u}``, or degree 5 with one more shared neighbor.
    Degree 4 only occurs in the five-vertex tower.
    """
    out = []
    for u in sorted(b_vertices(g)):
        d = g.degree(u)
        v, w = b_vertex_witnesses(g, u)  # type: ignore[misc]
        shared = (g.adj[v] & g.adj[w]) - {u}
        if d > 6:
            out.append(("b_degree", u, d))
        elif d == 6 and shared:
            out.append(("b_shape", u, d))
        elif d == 5 and len(shared) != 1:
            out.append(("b_shape", u, d))
        elif d == 4 and g.n != 5:
            out.append(("b_degree", u, d))
    return out


def chainsaw_violations(g: Triangulation) -> List[Tuple]:
    """Around a vertex of degree >= 5, any two neighbors can be told apart.

    For neighbors ``u1, u2`` of ``v`` some neighbor ``w`` of ``v`` is
    adjacent to exactly one ``u_i`` and ``[v u_i w]`` is a face.
    """
    out = []
    for v in range(g.n):
        if g.degree(v) < 5:
            continue
        nbrs = g.rotation[v]
        for u1, u2 in combinations(nbrs, 2):
            ok = False
            for w in nbrs:
                if w in (u1, u2):
                    continue
                a, b = g.has_edge(w, u1), g.has_edge(w, u2)
                if a != b and g.is_face(v, u1 if a else u2, w):
                    ok = True
                    break
            if not ok:
                out.append(("chainsaw", v, u1, u2))
    return out


def _shared_three(g: Triangulation, a: int, b: int) -> List[int]:
    return sorted(x for x in g.adj[a] & g.adj[b] if g.degree(x) == 3)


def b_path_violations(g: Triangulation) -> List[Tuple]:
    """Every induced path ``u1 u2 u3`` of b-vertices has two distinct hubs.

    With ``v1`` the 3-vertex on ``u1 u2`` and ``v2`` the one on ``u2 u3``,
    there are distinct ``x, x'`` with ``{u1,u2,u3,v1}`` in ``N(x)``,
    ``{u1,u2,u3,v2}`` in ``N(x')`` and faces ``[x u2 u3]``, ``[x' u1 u2]``.
    """
    bs = b_vertices(g)
    out = []
    for u2 in sorted(bs):
        bn = sorted(w for w in g.rotation[u2] if w in bs)
        for u1, u3 in combinations(bn, 2):
            if g.has_edge(u1, u3):
                continue
            v1s, v2s = _shared_three(g, u1, u2), _shared_three(g, u2, u3)
            if not v1s or not v2s:
                out.append(("b_path_threes", u1, u2, u3))
                continue
            found = False
            for v1 in v1s:
                for v2 in v2s:
                    xs = [x for x in range(g.n) if {u1, u2, u3, v1} <= g.adj[x] and g.is_face(x, u2, u3)]
                    ys = [x for x in range(g.n) if {u1, u2, u3, v2} <= g.adj[x] and g.is_face(x, u1, u2)]
                    if any(x != y for x in xs for y in ys):
                        found = True
            if not found:
                out.append(("b_path_hubs", u1, u2, u3))
    return out


def shared_b_pair_violations(g: Triangulation) -> List[Tuple]:
    """Two 3-vertices with two common b-neighbors only happen in small towers."""
    bs = b_vertices(g)
    threes = sorted(three_vertices(g))
    out = []
    for a, b in combinations(threes, 2):
        if len(g.adj[a] & g.adj[b] & bs) >= 2 and classify_small(g) not in ("tower(3)", "tower(4)"):
            out.append(("shared_b_pair", a, b))
    return out


STRUCTURAL_CHECKS = {
    "b_adjacency": b_adjacency_violations,
    "b_degree": b_degree_violations,
    "chainsaw": chainsaw_violations,
    "b_path_hubs": b_path_violations,
    "shared_b_pair": shared_b_pair_violations,
}
