"""Constructive power dominating sets of size at most ``(n - 2) / 4``.

The construction runs in three stages that share one :class:`MonitorState`:

1. ``algorithm1`` seeds every b-configuration and facial octahedron.
2. ``algorithm2`` greedily adds a maximum-degree vertex while some vertex
   still increases the monitored set by at least four.
3. ``algorithm3`` finishes the remaining non-monitored vertices.  Each one
   sits in a small non-monitored *core* whose neighbors (the *frame*) split
   the graph into smaller induced triangulations (the *ports*).  Ports are
   solved recursively, then one core vertex is added.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .exact import gamma_p_exact
from .monitor import MonitorState, format_trace, monitor
from .structure import (
    SpecialConfiguration,
    UnclassifiableComponent,
    b_vertices,
    classify_configurations,
    classify_small,
    choose_special_vertex,
    facial_octahedra,
)
from .triangulation import InducedSubgraphView, Triangulation, is_induced_triangulation, trace_faces


class TemplateMismatch(AssertionError):
    """The non-monitored region around a vertex fits no splitting structure."""


class NoMonitoringCoreVertex(AssertionError):
    """No single core vertex completes the monitoring of its triangulation."""


# -- stage 1 ------------------------------------------------------------------------


@dataclass
class LabeledSelection:
    """Stage-1 seeds with the vertices each seed is charged for.

    ``label[v] = u`` charges the monitored vertex ``v`` to the seed ``u``;
    a vertex is charged at most once.
    """

    S1: List[int] = field(default_factory=list)
    label: Dict[int, int] = field(default_factory=dict)
    state: Optional[MonitorState] = field(default=None, repr=False, compare=False)
    configs: List[SpecialConfiguration] = field(default_factory=list, repr=False, compare=False)

    def labels_of(self, u: int) -> List[int]:
        return sorted(v for v, w in self.label.items() if w == u)

    def accounting_ok(self) -> bool:
        if not self.S1:
            return True
        monitored = len(self.state.monitored) if self.state else len(self.label)
        return 4 * len(self.S1) <= monitored - 2


def _add_labeled(
    sel: LabeledSelection, state: MonitorState, u: int, owned: Sequence[int] = (), extra: Sequence[int] = (),
    minimum: int = 5,
) -> List[int]:
    """Add seed ``u`` and charge it for monitored, still unlabeled vertices.

    ``u`` always takes its own label and every vertex of ``owned``; vertices
    of ``extra`` and then other newly monitored vertices are taken only
    until ``minimum`` labels are reached.
    """
    new = state.add_seed(u)
    sel.S1.append(u)
    taken = [u] if u not in sel.label else []
    sel.label.setdefault(u, u)
    for v in owned:
        if v in state.monitored and v not in sel.label:
            sel.label[v] = u
            taken.append(v)
    for v in list(extra) + sorted(new):
        if len(taken) >= minimum:
            break
        if v in state.monitored and v not in sel.label:
            sel.label[v] = u
            taken.append(v)
    return new


def _label_more(sel: LabeledSelection, state: MonitorState, u: int, vertices: Iterable[int]) -> None:
    for v in sorted(vertices):
        if v in state.monitored and v not in sel.label:
            sel.label[v] = u


def _monitors_after(state: MonitorState, u: int, targets: Iterable[int]) -> Tuple[bool, int]:
    scratch = state.copy()
    new = scratch.add_seed(u, record=False)
    return all(t in scratch.monitored for t in targets), len(new)


def _triakis_pair(g: Triangulation) -> Tuple[int, int]:
    bs = sorted(b_vertices(g))
    for u, v in combinations(bs, 2):
        if g.has_edge(u, v) or not (g.adj[u] & g.adj[v]):
            continue
        if monitor(g, (u, v)).is_complete():
            return u, v
    raise AssertionError("triakis tetrahedron without a monitoring b-vertex pair")


def algorithm1(g: Triangulation, configs: Optional[List[SpecialConfiguration]] = None) -> LabeledSelection:
    """Monitor every b-vertex and every facial octahedron.

    Returns the stage-1 seeds together with their labels and the monitoring
    state they produce.
    """
    state = MonitorState.empty(g)
    sel = LabeledSelection(state=state)
    n = g.n
    big = [v for v in range(n) if g.degree(v) >= n - 2]
    if big:
        u = min(big, key=lambda v: (-g.degree(v), v))
        _add_labeled(sel, state, u)
        for v in g.closed_neighborhood(u):
            sel.label[v] = u
        return sel
    if classify_small(g) == "triakis":
        u, v = _triakis_pair(g)
        threes = [w for w in g.rotation[u] if g.degree(w) == 3]
        bs = b_vertices(g)
        near_b = sorted(w for w in g.rotation[u] if w in bs)[:2]
        _add_labeled(sel, state, u, owned=threes + near_b, minimum=0)
        _add_labeled(sel, state, v, owned=range(n), minimum=0)
        return sel

    if configs is None:
        configs = classify_configurations(g)
    sel.configs = list(configs)
    primary = [c for c in configs if c.config_type <= 5]
    secondary = [c for c in configs if c.config_type >= 6]

    progress = True
    while progress:
        progress = False
        for cfg in primary:
            if cfg.is_monitored(state.monitored):
                continue
            rivals = [c for c in primary if c is not cfg and not c.is_monitored(state.monitored)]
            u = choose_special_vertex(g, cfg.component, state, [c.b_vertices for c in rivals])
            if u is None:
                # no single vertex works; take the best partial one and retry
                u = max(sorted(cfg.b_vertices - state.monitored), key=lambda x: (g.degree(x), -x))
            _add_labeled(sel, state, u, owned=sorted(cfg.interior), extra=sorted(cfg.exterior))
            for c in rivals:
                if c.is_monitored(state.monitored):
                    _label_more(sel, state, u, c.interior)
            progress = True

    def open_secondary() -> List[SpecialConfiguration]:
        return [c for c in secondary if not c.is_monitored(state.monitored)]

    while True:
        pending = open_secondary()
        choice = None
        for h1, h2 in combinations(pending, 2):
            shared = sorted(h1.vertices & h2.vertices)
            for u in shared:
                ok, _ = _monitors_after(state, u, h1.targets | h2.targets)
                if ok:
                    choice = u
                    break
            if choice is not None:
                break
        if choice is None:
            break
        near = sorted(v for v in (h1.interior | h2.interior) if g.has_edge(choice, v))
        _add_labeled(sel, state, choice, owned=near, extra=sorted(h1.vertices | h2.vertices))

    while True:
        pending = open_secondary()
        if not pending:
            break
        h = pending[0]
        choice = None
        for u in sorted(h.exterior):
            if _monitors_after(state, u, h.targets)[0]:
                choice = u
                break
        if choice is None:
            pool = sorted(h.vertices | {w for v in h.vertices for w in g.rotation[v]})
            scored = [(u, _monitors_after(state, u, h.targets)) for u in pool]
            good = [(u, gain) for u, (ok, gain) in scored if ok]
            if good:
                choice = max(good, key=lambda t: (t[1], g.degree(t[0]), -t[0]))[0]
            else:
                choice = max(scored, key=lambda t: (t[1][1], -t[0]))[0]
        _add_labeled(sel, state, choice, owned=sorted(h.vertices))
    return sel


# -- stage 2 ------------------------------------------------------------------------


def _gain_at_least(state: MonitorState, v: int, k: int) -> bool:
    g = state.graph
    fresh = sum(1 for w in g.rotation[v] if w not in state.monitored) + (v not in state.monitored)
    if fresh >= k:
        return True
    if fresh == 0:
        return False
    scratch = state.copy()
    return len(scratch.add_seed(v, record=False)) >= k


def algorithm2(g: Triangulation, state: MonitorState) -> List[int]:
    """Greedy expansion; mutates ``state`` and returns the added vertices.

    Candidates are scanned by degree descending then id, so the first one
    whose addition monitors at least four new vertices is the choice.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    added = []
    while True:
        chosen = None
        for v in order:
            if v in state.seeds:
                continue
            if _gain_at_least(state, v, 4):
                chosen = v
                break
        if chosen is None:
            return added
        state.add_seed(chosen)
        added.append(chosen)


# -- stage 3 ------------------------------------------------------------------------


@dataclass(frozen=True)
class SplittingStructure:
    """A non-monitored core, its frame and the port triangulations it separates.

    ``template`` letters: ``a`` for a K3 core; ``b``/``c`` for a P3 core with
    five or six frame vertices; ``d``/``e`` for an edge plus an isolated vertex;
    ``f``/``g`` for three pairwise non-adjacent vertices.
    """

    template: str
    core: Tuple[int, ...]
    core_shape: str
    frame: Tuple[int, ...]
    ports: Tuple[Tuple[int, int, int], ...]
    regions: Tuple[FrozenSet[int], ...]
    region_vertices: FrozenSet[int]

    @property
    def G1(self) -> FrozenSet[int]:
        return self.regions[0] if self.regions else frozenset()

    @property
    def G2(self) -> FrozenSet[int]:
        return self.regions[1] if len(self.regions) > 1 else frozenset()

    def preferred_core_order(self, g: Triangulation) -> List[int]:
        core = list(self.core)
        inner = {c: sum(1 for d in core if g.has_edge(c, d)) for c in core}
        return sorted(core, key=lambda c: (-inner[c], c))

    def to_dict(self) -> dict:
        return {
            "template": self.template,
            "core": list(self.core),
            "core_shape": self.core_shape,
            "frame": list(self.frame),
            "ports": [list(p) for p in self.ports],
            "regions": [sorted(r) for r in self.regions],
        }


_TEMPLATES = {
    ("K3", None): "a",
    ("P3", 5): "b",
    ("P3", 6): "c",
    ("P2+K1", 5): "d",
    ("P2+K1", 6): "e",
    ("3K1", 5): "f",
    ("3K1", 6): "g",
}


def _core_shape(g: Triangulation, core: Sequence[int]) -> str:
    k = len(core)
    edges = sum(1 for a, b in combinations(core, 2) if g.has_edge(a, b))
    if k == 3:
        return {3: "K3", 2: "P3", 1: "P2+K1", 0: "3K1"}[edges]
    if k == 2:
        return "P2" if edges else "2K1"
    return "K1" if k == 1 else f"{k}-set"


def _core_of(g: Triangulation, region: FrozenSet[int], monitored, u: int) -> Tuple[int, ...]:
    core = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        near: Set[int] = set()
        for w in g.rotation[x]:
            if w not in region:
                continue
            if w in monitored:
                near.update(y for y in g.rotation[w] if y in region)
            else:
                near.add(w)
        for y in near:
            if y not in monitored and y not in core:
                core.add(y)
                stack.append(y)
    return tuple(sorted(core))


def _dart_faces(faces: Sequence[Tuple[int, ...]]) -> Dict[Tuple[int, int], int]:
    darts = {}
    for i, f in enumerate(faces):
        for j in range(len(f)):
            darts[(f[j], f[(j + 1) % len(f)])] = i
    return darts


def locate_face(g: Triangulation, inside: FrozenSet[int], faces, darts, x: int) -> int:
    """Index of the face of ``G[inside]`` whose interior holds the outside vertex ``x``."""
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for a in g.rotation[y]:
            if a in inside:
                rot = g.rotation[a]
                i = rot.index(y)
                k = len(rot)
                step = 1
                while rot[(i + step) % k] not in inside:
                    step += 1
                h_next = rot[(i + step) % k]
                return darts[(h_next, a)]
            if a not in seen:
                seen.add(a)
                stack.append(a)
    raise ValueError(f"vertex {x} is not attached to the subgraph")


def find_splitting_structure(
    g: Triangulation, monitored, region: Iterable[int], u: int
) -> SplittingStructure:
    """Describe the splitting structure of ``G[region]`` around the non-monitored ``u``.

    Raises:
        TemplateMismatch: the core is too large, a port is not bounded by a
            triangle, or the core and frame sizes match no template.
    """
    region = frozenset(region)
    if u in monitored or u not in region:
        raise ValueError(f"vertex {u} is monitored or outside the region")
    core = _core_of(g, region, monitored, u)
    shape = _core_shape(g, core)
    if len(core) > 3:
        raise TemplateMismatch(f"non-monitored core {core} has {len(core)} vertices")
    frame = tuple(sorted({w for c in core for w in g.rotation[c] if w in region} - set(core)))
    hub = frozenset(core) | frozenset(frame)
    hub_rot = {v: tuple(w for w in g.rotation[v] if w in hub) for v in sorted(hub)}
    hub_faces = trace_faces(hub_rot)
    darts = _dart_faces(hub_faces)
    # components of region minus hub, each placed in one face of the hub
    rest = set(region - hub)
    placed: Dict[int, Set[int]] = {}
    while rest:
        x = min(rest)
        comp = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for w in g.rotation[y]:
                if w in rest and w not in comp:
                    comp.add(w)
                    stack.append(w)
        rest -= comp
        idx = locate_face(g, hub, hub_faces, darts, x)
        placed.setdefault(idx, set()).update(comp)
    ports = []
    regions = []
    for idx in sorted(placed, key=lambda i: sorted(hub_faces[i])):
        face = hub_faces[idx]
        if len(face) != 3 or set(face) & set(core):
            raise TemplateMismatch(f"port face {face} is not a frame triangle")
        ports.append(tuple(sorted(face)))
        regions.append(frozenset(face) | frozenset(placed[idx]))
    key = (shape, None) if shape == "K3" else (shape, len(frame))
    template = _TEMPLATES.get(key)
    if template is None:
        raise TemplateMismatch(f"core {core} ({shape}) with {len(frame)} frame vertices")
    covered = frozenset().union(*regions) if regions else frozenset()
    return SplittingStructure(template, core, shape, frame, tuple(ports), tuple(regions), covered)


@dataclass
class RecursionNode:
    region_size: int
    added: int
    seeds_inside: int
    template: Optional[str]
    depth: int

    @property
    def within_bound(self) -> bool:
        return 4 * self.seeds_inside <= self.region_size - 2


def algorithm3(
    g: Triangulation,
    state: MonitorState,
    region: Optional[Iterable[int]] = None,
    fixed: Optional[FrozenSet[int]] = None,
    nodes: Optional[List[RecursionNode]] = None,
    depth: int = 0,
) -> List[int]:
    """Complete the monitoring of ``G[region]``; mutates ``state``.

    ``fixed`` is the monitored set left by the greedy stage; structures are
    read off it, while each added core vertex is validated against the live
    ``state``.  Returns the vertices added inside ``region``.

    Raises:
        TemplateMismatch: see :func:`find_splitting_structure`.
        NoMonitoringCoreVertex: no core vertex completes the region.
    """
    region = frozenset(range(g.n)) if region is None else frozenset(region)
    if fixed is None:
        fixed = frozenset(state.monitored)
    if nodes is None:
        nodes = []
    pending = sorted(v for v in region if v not in fixed)
    if not pending:
        return []
    st = find_splitting_structure(g, fixed, region, pending[0])
    added: List[int] = []
    for sub in st.regions:
        added.extend(algorithm3(g, state, sub, fixed, nodes, depth + 1))
    if not region <= state.monitored:
        for c in st.preferred_core_order(g):
            scratch = state.copy()
            scratch.add_seed(c, record=False)
            if region <= scratch.monitored:
                state.add_seed(c)
                added.append(c)
                break
        else:
            raise NoMonitoringCoreVertex(f"no vertex of core {st.core} monitors its region")
    inside = sum(1 for s in state.seeds if s in region)
    nodes.append(RecursionNode(len(region), len(added), inside, st.template, depth))
    return added


# -- end to end ---------------------------------------------------------------------


@dataclass
class SolveReport:
    """Result of :func:`power_dominate`."""

    n: int
    S: List[int]
    provenance: Dict[int, str]
    rounds: List[int]
    trace: list
    configurations: List[dict] = field(default_factory=list)
    structures: List[dict] = field(default_factory=list)
    diagnostics: List[str] = field(default_factory=list)
    method: str = "constructive"

    @property
    def size(self) -> int:
        return len(self.S)

    @property
    def bound(self) -> float:
        return (self.n - 2) / 4

    @property
    def bound_margin(self) -> float:
        return self.bound - len(self.S)

    def to_dict(self, explain: bool = False) -> dict:
        d = {
            "n": self.n,
            "method": self.method,
            "S": self.S,
            "size": len(self.S),
            "bound": self.bound,
            "bound_margin": self.bound_margin,
            "provenance": {str(v): self.provenance[v] for v in self.S},
            "rounds": self.rounds,
            "diagnostics": self.diagnostics,
        }
        if explain:
            d["trace"] = format_trace(self.trace).splitlines()
            d["configurations"] = self.configurations
            d["structures"] = self.structures
        return d

    def to_json(self, explain: bool = False) -> str:
        return json.dumps(self.to_dict(explain), sort_keys=True)


def power_dominate(g: Triangulation) -> SolveReport:
    """Power dominating set of ``g`` with at most ``(n - 2) / 4`` vertices for ``n >= 6``.

    Graphs with fewer than six vertices are solved exactly.  If a structural
    assumption fails, the set is completed greedily and the failure is listed
    in ``diagnostics`` rather than hidden.
    """
    if g.n < 6:
        res = gamma_p_exact(g)
        st = monitor(g, res.witness)
        return SolveReport(
            g.n, list(res.witness), {v: "exact" for v in res.witness}, [len(st.monitored)], st.trace, method="exact"
        )
    diagnostics: List[str] = []
    sel = algorithm1(g)
    configs = sel.configs
    if not configs:
        try:
            configs = classify_configurations(g)
        except UnclassifiableComponent:
            configs = []
    state = sel.state
    assert state is not None
    provenance = {v: "alg1" for v in sel.S1}
    rounds = [len(state.monitored)] if sel.S1 else []
    for v in algorithm2(g, state):
        provenance[v] = "alg2"
    rounds.append(len(state.monitored))
    structures: List[dict] = []
    if not state.is_complete():
        fixed = frozenset(state.monitored)
        nodes: List[RecursionNode] = []
        try:
            added = algorithm3(g, state, None, fixed, nodes)
        except (TemplateMismatch, NoMonitoringCoreVertex) as exc:
            diagnostics.append(f"{type(exc).__name__}: {exc}")
            added = [v for v in state.seeds if v not in provenance]
        for v in added:
            provenance[v] = "alg3"
        for node in nodes:
            structures.append(
                {"template": node.template, "region_size": node.region_size, "seeds_inside": node.seeds_inside,
                 "depth": node.depth, "within_bound": node.within_bound}
            )
            if not node.within_bound:
                diagnostics.append(f"recursion node of size {node.region_size} holds {node.seeds_inside} seeds")
        while not state.is_complete():
            v = max(
                (w for w in range(g.n) if w not in state.seeds),
                key=lambda w: (len(state.copy().add_seed(w, record=False)), g.degree(w), -w),
            )
            state.add_seed(v)
            provenance[v] = "fallback"
            diagnostics.append(f"fallback seed {v}")
        rounds.append(len(state.monitored))
    S = sorted(state.seeds)
    if 4 * len(S) > g.n - 2:
        diagnostics.append(f"bound violated: |S|={len(S)} > (n-2)/4")
    return SolveReport(
        g.n, S, provenance, rounds, list(state.trace), [c.to_dict() for c in configs], structures, diagnostics
    )


# -- induced-subgraph seed budget -----------------------------------------------------


def outer_face_of(g: Triangulation, vertices: FrozenSet[int], outer: Tuple[int, int, int]) -> Tuple[int, ...]:
    """The face of ``G[vertices]`` that contains the outer face ``outer`` of ``g``."""
    if set(outer) <= vertices:
        return tuple(outer)
    view = InducedSubgraphView.of(g, vertices)
    darts = _dart_faces(view.faces)
    x = next(v for v in outer if v not in vertices)
    return view.faces[locate_face(g, vertices, view.faces, darts, x)]


@dataclass
class PropertyStarResult:
    ok: bool
    checked: int
    violations: List[Tuple[int, ...]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def check_property_star(
    g: Triangulation,
    S: Iterable[int],
    max_n: int = 14,
    outer: Optional[Tuple[int, int, int]] = None,
) -> PropertyStarResult:
    """Verify the accounting property for every monitored induced triangulation.

    For each vertex set of order at least 4 that induces a triangulation and
    is entirely monitored by ``S``, either some vertex on its outer face has
    its whole closed neighborhood monitored, or it holds at most
    ``(|V'| - 2) / 4`` seeds.  The outer face of ``g`` defaults to its first
    traced face.
    """
    n = g.n
    if n > max_n:
        raise ValueError(f"n={n} exceeds max_n={max_n}")
    S = set(S)
    monitored = monitor(g, S).monitored
    outer = outer or tuple(g.faces[0])  # type: ignore[assignment]
    full = {v for v in range(n) if g.closed_neighborhood(v) <= monitored}
    mon_list = sorted(monitored)
    masks = [sum(1 << w for w in g.adj[v]) for v in range(n)]
    checked = 0
    violations = []
    for k in range(4, len(mon_list) + 1):
        for combo in combinations(mon_list, k):
            bits = 0
            for v in combo:
                bits |= 1 << v
            edges = sum(bin(masks[v] & bits).count("1") for v in combo) // 2
            if edges != 3 * k - 6:
                continue
            vs = frozenset(combo)
            if not is_induced_triangulation(InducedSubgraphView.of(g, vs)):
                continue
            checked += 1
            face = outer_face_of(g, vs, outer)  # type: ignore[arg-type]
            if any(v in full for v in face):
                continue
            if 4 * len(S & vs) <= k - 2:
                continue
            violations.append(combo)
    return PropertyStarResult(not violations, checked, violations)
