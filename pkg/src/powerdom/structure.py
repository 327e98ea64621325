"""Detection of the gadgets that force seeds: b-vertices and facial octahedra.

A *3-vertex* has degree three.  A *b-vertex* ``u`` has exactly two
3-neighbors ``v, v'`` and ``N[u] = N[v] | N[v']``.  Maximal connected sets
of b-vertices, together with their 3-neighbors, form the configurations
handled first by the constructive solver; facial octahedra form the last
kind.

Configuration types are numbered by the shape of the b-component:

===== =====================================================================
type  shape
===== =====================================================================
1     isolated b-vertex of degree 6 (its two 3-neighbors share no neighbor)
2     path or cycle of at least three b-vertices
3     isolated b-vertex of degree 5 (its 3-neighbors share a neighbor)
4     triangle of b-vertices with a common 3-neighbor (facial triakis)
5     triangle of b-vertices without a common 3-neighbor
6     two adjacent b-vertices, three exterior vertices
7     two adjacent b-vertices, four or more exterior vertices
8     facial octahedron
===== =====================================================================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .monitor import MonitorState, monitor
from .triangulation import Triangulation


class UnclassifiableComponent(AssertionError):
    """A b-component whose shape matches none of the known configurations."""


def three_vertices(g: Triangulation) -> FrozenSet[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 3)


def b_vertex_witnesses(g: Triangulation, u: int) -> Optional[Tuple[int, int]]:
    """The two 3-neighbors certifying that ``u`` is a b-vertex, else ``None``."""
    threes = [v for v in g.rotation[u] if g.degree(v) == 3]
    if len(threes) != 2:
        return None
    v, w = sorted(threes)
    if g.closed_neighborhood(u) == g.closed_neighborhood(v) | g.closed_neighborhood(w):
        return v, w
    return None


def b_vertices(g: Triangulation) -> FrozenSet[int]:
    return frozenset(u for u in range(g.n) if b_vertex_witnesses(g, u) is not None)


@dataclass(frozen=True)
class BComponent:
    """A maximal connected set of b-vertices.

    ``shape`` is one of ``singleton``, ``P2``, ``path`` (three or more
    vertices, possibly closed into a cycle, see ``cyclic``), ``triangle``,
    ``triangle_variant`` (triangle sharing one 3-neighbor) or ``other``.
    """

    vertices: Tuple[int, ...]
    shape: str
    three_neighbors: Tuple[int, ...]
    universal: Tuple[int, ...] = ()
    cyclic: bool = False
    order: Tuple[int, ...] = ()

    @property
    def interior(self) -> FrozenSet[int]:
        return frozenset(self.vertices) | frozenset(self.three_neighbors)


def _path_order(g: Triangulation, members: Sequence[int]) -> Tuple[Tuple[int, ...], bool]:
    """Order the members along a path or cycle; empty tuple if neither."""
    mset = set(members)
    deg = {u: sum(1 for w in g.rotation[u] if w in mset) for u in members}
    if any(d > 2 for d in deg.values()):
        return (), False
    ends = sorted(u for u in members if deg[u] == 1)
    cyclic = not ends
    if not cyclic and len(ends) != 2:
        return (), False
    start = min(members) if cyclic else ends[0]
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in g.rotation[cur] if w in mset and w != prev and w not in order]
        if not nxt:
            break
        prev, cur = cur, min(nxt)
        order.append(cur)
    if len(order) != len(members):
        return (), False
    return tuple(order), cyclic


def b_components(g: Triangulation) -> List[BComponent]:
    """Partition the b-vertices into connected components with their shapes."""
    bs = b_vertices(g)
    seen: set = set()
    comps = []
    for s in sorted(bs):
        if s in seen:
            continue
        members = []
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            members.append(u)
            for w in g.rotation[u]:
                if w in bs and w not in seen:
                    seen.add(w)
                    stack.append(w)
        members.sort()
        threes = sorted({v for u in members for v in g.rotation[u] if g.degree(v) == 3})
        universal = tuple(
            x for x in range(g.n) if x not in members and all(x in g.adj[u] for u in members)
        ) if len(members) >= 3 else ()
        k = len(members)
        order: Tuple[int, ...] = tuple(members)
        cyclic = False
        if k == 1:
            shape = "singleton"
        elif k == 2:
            shape = "P2"
        elif k == 3 and all(members[j] in g.adj[members[i]] for i in range(3) for j in range(i + 1, 3)):
            common = set.intersection(*(set(g.rotation[u]) for u in members)) & set(threes)
            shape = "triangle_variant" if common else "triangle"
            cyclic = True
        else:
            order, cyclic = _path_order(g, members)
            shape = "path" if order else "other"
            if not order:
                order = tuple(members)
        comps.append(BComponent(tuple(members), shape, tuple(threes), universal, cyclic, order))
    return comps


@dataclass(frozen=True)
class SpecialConfiguration:
    """A b-component (types 1-7) or a facial octahedron (type 8)."""

    config_type: int
    interior: FrozenSet[int]
    exterior: FrozenSet[int]
    b_vertices: FrozenSet[int] = frozenset()
    special_vertex: Optional[int] = None
    circled_vertices: Tuple[int, ...] = ()
    component: Optional[BComponent] = field(default=None, compare=False)

    @property
    def vertices(self) -> FrozenSet[int]:
        return self.interior | self.exterior

    @property
    def targets(self) -> FrozenSet[int]:
        """Vertices that must be monitored for the configuration to count as monitored."""
        return self.vertices if self.config_type == 8 else self.b_vertices

    def is_monitored(self, monitored) -> bool:
        return all(v in monitored for v in self.targets)

    def to_dict(self) -> dict:
        d = {
            "type": self.config_type,
            "interior": sorted(self.interior),
            "exterior": sorted(self.exterior),
        }
        if self.component is not None:
            d["shape"] = self.component.shape
        if self.special_vertex is not None:
            d["special_vertex"] = self.special_vertex
            d["circled_vertices"] = list(self.circled_vertices)
        return d


def facial_octahedra(g: Triangulation) -> List[SpecialConfiguration]:
    """Induced octahedra all of whose faces but one are faces of ``g``.

    The interior triangle consists of degree-4 vertices; one result is
    returned per vertex set, keeping the lexicographically least interior.
    """
    found: Dict[FrozenSet[int], SpecialConfiguration] = {}
    for f in sorted(tuple(sorted(f)) for f in g.faces):
        if any(g.degree(x) != 4 for x in f):
            continue
        ext = set()
        for x in f:
            ext.update(w for w in g.rotation[x] if w not in f)
        if len(ext) != 3:
            continue
        a, b, c = sorted(ext)
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
            continue
        # each exterior vertex sees exactly two interior ones
        if any(sum(1 for x in f if g.has_edge(e, x)) != 2 for e in ext):
            continue
        vs = frozenset(f) | frozenset(ext)
        inner_faces_ok = all(
            g.is_face(*t)
            for t in _octahedron_triangles(f, ext, g)
            if set(t) != ext
        )
        if not inner_faces_ok:
            continue
        cfg = SpecialConfiguration(8, frozenset(f), frozenset(ext))
        if vs not in found or sorted(cfg.interior) < sorted(found[vs].interior):
            found[vs] = cfg
    return sorted(found.values(), key=lambda c: sorted(c.interior))


def _octahedron_triangles(inner, outer, g: Triangulation):
    vs = list(inner) + list(outer)
    out = []
    for i in range(6):
        for j in range(i + 1, 6):
            for k in range(j + 1, 6):
                a, b, c = vs[i], vs[j], vs[k]
                if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
                    out.append((a, b, c))
    return out


def _config_type(g: Triangulation, comp: BComponent, exterior: FrozenSet[int]) -> int:
    if comp.shape == "singleton":
        return 1 if g.degree(comp.vertices[0]) >= 6 else 3
    if comp.shape == "path":
        return 2
    if comp.shape == "triangle_variant":
        return 4
    if comp.shape == "triangle":
        return 5
    if comp.shape == "P2":
        return 6 if len(exterior) <= 3 else 7
    raise UnclassifiableComponent(f"b-component {comp.vertices} has shape {comp.shape}")


def template_special_candidates(g: Triangulation, comp: BComponent) -> List[int]:
    """Template guesses for the special vertex, best first."""
    if comp.shape == "path":
        # prefer the universal vertex that also sees 3-vertices
        return sorted(comp.universal, key=lambda x: (-sum(1 for v in comp.three_neighbors if g.has_edge(x, v)), x))
    if comp.shape == "singleton":
        u = comp.vertices[0]
        v, w = comp.three_neighbors
        shared = sorted((g.adj[v] & g.adj[w]) - {u})
        return shared + [u]
    if comp.shape == "triangle":
        return list(comp.vertices)
    return []


def candidate_pool(g: Triangulation, vertices) -> List[int]:
    """``N[N[vertices]]`` ordered by degree descending then id."""
    pool = set(vertices)
    for v in vertices:
        pool.update(g.rotation[v])
    ring = set(pool)
    for v in ring:
        pool.update(g.rotation[v])
    return sorted(pool, key=lambda x: (-g.degree(x), x))


def choose_special_vertex(
    g: Triangulation,
    comp: BComponent,
    state: Optional[MonitorState] = None,
    others: Sequence[FrozenSet[int]] = (),
) -> Optional[int]:
    """A vertex whose addition to ``state`` monitors every b-vertex of ``comp``.

    Candidates come from the figure-derived templates and from the pool
    ``N[N[comp]]``.  Ranking: most of the ``others`` target sets completed
    as well, then template candidates in template order, then largest gain,
    degree and lowest id.
    """
    base = state if state is not None else MonitorState.empty(g)
    targets = set(comp.vertices)
    templates = template_special_candidates(g, comp)
    best = None
    best_key = None
    for x in dict.fromkeys(templates + candidate_pool(g, comp.vertices)):
        scratch = base.copy()
        gain = len(scratch.add_seed(x, record=False))
        if not targets <= scratch.monitored:
            continue
        done = sum(1 for t in others if t <= scratch.monitored)
        rank = templates.index(x) if x in templates else len(templates)
        key = (-done, rank, -gain, -g.degree(x), x)
        if best_key is None or key < best_key:
            best, best_key = x, key
    return best


def _circled(g: Triangulation, cfg_vertices, special: int, comp: BComponent) -> Tuple[int, ...]:
    newly = monitor(g, [special]).monitored
    ranked = (
        sorted(v for v in comp.vertices if v != special)
        + sorted(v for v in comp.three_neighbors if v != special)
        + sorted(v for v in cfg_vertices if v not in comp.interior and v != special)
    )
    out = [v for v in ranked if v in newly]
    return tuple(out[: max(4, len(comp.vertices) + 1)])


def classify_configurations(g: Triangulation) -> List[SpecialConfiguration]:
    """Wrap every maximal b-component into a configuration, then add octahedra.

    Special vertices (types 1-5) are validated by running the closure from
    the empty set.

    Raises:
        UnclassifiableComponent: a b-component has an unexpected shape or a
            type 1-5 component admits no monitoring vertex.
    """
    configs = []
    for comp in b_components(g):
        interior = comp.interior
        exterior = frozenset(w for v in interior for w in g.rotation[v]) - interior
        ctype = _config_type(g, comp, exterior)
        special = None
        circled: Tuple[int, ...] = ()
        if ctype <= 5:
            special = choose_special_vertex(g, comp)
            if special is not None:
                circled = _circled(g, interior | exterior, special, comp)
        configs.append(
            SpecialConfiguration(ctype, interior, exterior, frozenset(comp.vertices), special, circled, comp)
        )
    configs.extend(facial_octahedra(g))
    return configs


# -- small whole graphs ----------------------------------------------------------


def _is_tower(g: Triangulation) -> bool:
    n = g.n
    apexes = [v for v in range(n) if g.degree(v) == n - 1]
    if len(apexes) < 2:
        return False
    for i in range(len(apexes)):
        for j in range(i + 1, len(apexes)):
            a, b = apexes[i], apexes[j]
            rest = [v for v in range(n) if v not in (a, b)]
            if _path_order(g, rest)[0] and not _path_order(g, rest)[1]:
                return True
            if n - 2 == 1:
                return True
    return False


@lru_cache(maxsize=None)
def _reference_graphs():
    from .generators import named

    return {
        "triakis": named("triakis").to_networkx(),
        "fig6_variant_a": named("fig6_variant_a").to_networkx(),
        "fig6_variant_b": named("fig6_variant_b").to_networkx(),
    }


def classify_small(g: Triangulation) -> str:
    """Tag ``g`` if it is one of the named whole graphs, else ``"none"``.

    Isomorphic names collapse: ``fig4_a`` is ``tower(3)`` and both
    ``fig4_b`` and the flip-octahedron are ``tower(4)``.  Both whole graphs
    around a triangle of b-vertices report ``fig6_variant``.
    """
    n = g.n
    if n == 3:
        return "K3"
    if n == 4:
        return "K4"
    if _is_tower(g):
        return f"tower({n - 2})"
    if n == 6 and all(g.degree(v) == 4 for v in range(n)):
        return "octahedron"
    if n in (7, 8, 10):
        import networkx as nx

        h = g.to_networkx()
        for tag, ref in _reference_graphs().items():
            if ref.number_of_nodes() == n and nx.is_isomorphic(h, ref):
                return "fig6_variant" if tag.startswith("fig6") else tag
    return "none"


def analyze(g: Triangulation) -> dict:
    """JSON-ready summary of every detected structure."""
    small = classify_small(g)
    try:
        configs = [c.to_dict() for c in classify_configurations(g)]
        error = None
    except UnclassifiableComponent as exc:
        configs = []
        error = str(exc)
    out = {
        "n": g.n,
        "three_vertices": sorted(three_vertices(g)),
        "b_vertices": sorted(b_vertices(g)),
        "components": [
            {"vertices": list(c.vertices), "shape": c.shape, "three_neighbors": list(c.three_neighbors),
             "universal": list(c.universal)}
            for c in b_components(g)
        ],
        "configurations": configs,
        "small_class": small,
    }
    if error:
        out["error"] = error
    return out
