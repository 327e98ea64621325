"""Named triangulations, the lower-bound family and random triangulations.

Everything is built from face lists through :meth:`Triangulation.from_faces`,
so every generator emits a valid rotation system.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .triangulation import Triangulation, parse, serialize  # noqa: F401  (re-exported)

FaceList = List[Tuple[int, int, int]]


class UnknownTag(KeyError):
    pass


def _tower_faces(k: int) -> FaceList:
    # apexes 0 and 1, path 2..k+1
    path = list(range(2, k + 2))
    if k == 1:
        return [(0, 1, 2), (0, 1, 2)]
    faces = [(0, 1, path[0]), (0, 1, path[-1])]
    for a, b in zip(path, path[1:]):
        faces += [(0, a, b), (1, a, b)]
    return faces


def tower(k: int) -> Triangulation:
    """The tower graph ``P2 + Pk`` on ``k + 2`` vertices (apexes 0 and 1)."""
    if k < 1:
        raise ValueError("tower needs k >= 1")
    return Triangulation.from_faces(_tower_faces(k), n=k + 2)


def _octahedron_faces() -> FaceList:
    # poles 0 and 5, equator 1-2-3-4
    eq = [1, 2, 3, 4]
    faces = []
    for i in range(4):
        a, b = eq[i], eq[(i + 1) % 4]
        faces += [(0, a, b), (5, a, b)]
    return faces


def _stack(faces: FaceList, face: Tuple[int, int, int], new: int) -> FaceList:
    key = set(face)
    out = [f for f in faces if set(f) != key]
    if len(out) != len(faces) - 1:
        raise ValueError(f"{face} is not a face")
    a, b, c = face
    return out + [(a, b, new), (b, c, new), (c, a, new)]


def _triakis_faces() -> FaceList:
    # octahedron on u1,u2,u3 = 1,2,3 and w1,w2,w3 = 7,8,9 with
    # u1~w1,w2  u2~w2,w3  u3~w3,w1; four alternate faces stacked by
    # v = 0 (in u1u2u3), v1 = 4, v2 = 5, v3 = 6
    u1, u2, u3, w1, w2, w3 = 1, 2, 3, 7, 8, 9
    octa = [
        (u1, u2, u3), (w1, w2, w3),
        (u1, w1, w2), (u2, w2, w3), (u3, w3, w1),
        (u1, u2, w2), (u2, u3, w3), (u3, u1, w1),
    ]
    faces = _stack(octa, (u1, u2, u3), 0)
    faces = _stack(faces, (u1, w1, w2), 4)
    faces = _stack(faces, (u2, w2, w3), 5)
    return _stack(faces, (u3, w3, w1), 6)


def _icosahedron_faces() -> FaceList:
    # pole 0, rings 1-5 and 6-10, pole 11
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [(0, 1 + i, 1 + j), (11, 6 + i, 6 + j), (1 + i, 1 + j, 6 + i), (6 + i, 6 + j, 1 + j)]
    return faces


def _b_triangle_faces(variant: str) -> FaceList:
    """Whole graphs around a facial triangle of b-vertices u1,u2,u3 = 0,1,2.

    ``"a"``: all three 3-vertices share their third neighbor (n = 7).
    ``"b"``: two of them share it (n = 8).
    ``"open"``: three distinct third neighbors forming a triangle (n = 9).
    """
    u1, u2, u3 = 0, 1, 2
    if variant == "a":
        z = 3
        base = [(u1, u2, u3), (u1, u2, z), (u2, u3, z), (u1, u3, z)]
        faces = _stack(base, (u1, u2, z), 4)
        faces = _stack(faces, (u2, u3, z), 5)
        return _stack(faces, (u1, u3, z), 6)
    if variant == "b":
        z, zp, v1, v2, v3 = 3, 4, 5, 6, 7
        return [
            (u1, u2, u3),
            (u1, u2, v1), (u1, v1, z), (u2, v1, z),
            (u2, u3, v2), (u2, v2, zp), (u3, v2, zp),
            (u1, u3, v3), (u1, v3, z), (u3, v3, z),
            (u2, z, zp), (u3, z, zp),
        ]
    if variant == "open":
        z1, z2, z3 = 3, 4, 5
        octa = [
            (u1, u2, u3), (z1, z2, z3),
            (u1, u2, z1), (u2, u3, z2), (u1, u3, z3),
            (u1, z1, z3), (u2, z1, z2), (u3, z2, z3),
        ]
        faces = _stack(octa, (u1, u2, z1), 6)
        faces = _stack(faces, (u2, u3, z2), 7)
        return _stack(faces, (u1, u3, z3), 8)
    raise ValueError(variant)


@dataclass(frozen=True)
class Gadget:
    """A facial configuration that forces a seed inside it.

    ``boundary`` lists the outer-face cycle in order; the remaining vertices
    are interior.  ``faces`` are the inner faces only.
    """

    name: str
    n: int
    boundary: Tuple[int, ...]
    faces: Tuple[Tuple[int, int, int], ...]

    @property
    def interior(self) -> Tuple[int, ...]:
        return tuple(v for v in range(self.n) if v not in self.boundary)


_UGLY = Gadget(
    "ugly", 6, (0, 1, 2),
    ((3, 4, 5), (0, 1, 5), (1, 2, 3), (2, 0, 4), (0, 4, 5), (1, 5, 3), (2, 3, 4)),
)
# good: degree-6 b-vertex 4 with 3-neighbors 5 (~0,1) and 6 (~2,3); outer 4-cycle 0-1-2-3
_GOOD = Gadget(
    "good", 7, (0, 1, 2, 3),
    ((4, 0, 5), (4, 5, 1), (5, 0, 1), (4, 1, 2), (4, 2, 6), (4, 6, 3), (6, 2, 3), (4, 3, 0)),
)


def _fixed_bad_faces() -> Tuple[Tuple[int, int, int], ...]:
    # apexes a=0, b=3; path p1..p4 = 4, 1, 2, 5; outer face [a p2 p3] = (0, 1, 2)
    a, b, p1, p2, p3, p4 = 0, 3, 4, 1, 2, 5
    tower_faces = [(a, b, p1), (a, b, p4)]
    for x, y in ((p1, p2), (p2, p3), (p3, p4)):
        tower_faces += [(a, x, y), (b, x, y)]
    return tuple(f for f in tower_faces if set(f) != {a, p2, p3})


# bad: P2+P4 seen from the face [apex, p2, p3]; interior = other apex + path ends
_BAD = Gadget("bad", 6, (0, 1, 2), _fixed_bad_faces())
GADGETS: Dict[str, Gadget] = {"bad": _BAD, "ugly": _UGLY, "good": _GOOD}


def gadget_graph(name: str) -> Triangulation:
    """The gadget closed into a triangulation (outer face filled by a fan)."""
    gd = GADGETS[name]
    b = gd.boundary
    closing = [(b[0], b[i], b[i + 1]) for i in range(1, len(b) - 1)]
    return Triangulation.from_faces(list(gd.faces) + closing, n=gd.n)


_NAMED_FACES = {
    "K3": lambda: [(0, 1, 2), (0, 1, 2)],
    "K4": lambda: [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
    "octahedron": _octahedron_faces,
    "icosahedron": _icosahedron_faces,
    "triakis": _triakis_faces,
    "fig6_variant_a": lambda: _b_triangle_faces("a"),
    "fig6_variant_b": lambda: _b_triangle_faces("b"),
    "b_triangle_open": lambda: _b_triangle_faces("open"),
}

NAMED_TAGS = (
    "K3", "K4", "tower(k)", "octahedron", "icosahedron", "flip_octahedron", "triakis", "fig4_a", "fig4_b",
    "fig6_variant_a", "fig6_variant_b", "b_triangle_open", "good_gadget", "bad_gadget", "ugly_gadget",
)


def named(tag: str) -> Triangulation:
    """Return a named graph.

    ``flip_octahedron`` and ``fig4_b`` are both isomorphic to ``tower(4)``,
    and ``fig4_a`` to ``tower(3)``; they differ only in labelling.  The
    flip-octahedron is labelled so that ``(0, 1, 2)`` is the face from which
    one interior vertex has degree five.  Gadget tags return the closed
    gadget whose outer face starts at vertex 0 (see :data:`GADGETS`).

    Raises:
        UnknownTag: the tag is not recognised.
    """
    m = re.fullmatch(r"tower\((\d+)\)", tag)
    if m:
        return tower(int(m.group(1)))
    if tag in _NAMED_FACES:
        faces = _NAMED_FACES[tag]()
        return Triangulation.from_faces(faces, n=1 + max(max(f) for f in faces))
    if tag == "flip_octahedron":
        return gadget_graph("bad")
    if tag == "fig4_a":
        # 3-vertices 0, 1 sharing neighbors 2, 3, 4
        return Triangulation.from_faces([(0, 2, 3), (0, 3, 4), (0, 4, 2), (1, 2, 3), (1, 3, 4), (1, 4, 2)], n=5)
    if tag == "fig4_b":
        # 3-vertices 0, 1 with common b-neighbors 2, 3 and third neighbors 4, 5
        return Triangulation.from_faces(
            [(0, 2, 3), (0, 3, 4), (0, 4, 2), (1, 2, 3), (1, 3, 5), (1, 5, 2), (2, 4, 5), (3, 4, 5)], n=6
        )
    if tag.endswith("_gadget") and tag[: -len("_gadget")] in GADGETS:
        return gadget_graph(tag[: -len("_gadget")])
    raise UnknownTag(tag)


# -- lower-bound family ------------------------------------------------------


def lower_bound_family(k: int, gadget: str = "bad") -> Triangulation:
    """``k`` vertex-disjoint facial gadgets with edges added between them.

    Gadget ``i`` occupies vertices ``[i*s, (i+1)*s)`` where ``s`` is the gadget
    order (6 for ``bad`` and ``ugly``, so ``n = 6k``).  The boundary vertex 0
    of each gadget sits on an inner cycle and the others on an outer cycle;
    the quadrilaterals between consecutive gadgets get one diagonal and both
    cycles are closed by a fan from their first vertex.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    gd = GADGETS[gadget]
    s = gd.n
    faces: List[Tuple[int, int, int]] = []
    bounds = []
    for i in range(k):
        off = i * s
        faces += [(a + off, b + off, c + off) for a, b, c in gd.faces]
        bounds.append([v + off for v in gd.boundary])
    if k == 1:
        b = bounds[0]
        faces += [(b[0], b[i], b[i + 1]) for i in range(1, len(b) - 1)]
        return Triangulation.from_faces(faces, n=s)
    for i in range(k):
        cur, nxt = bounds[i], bounds[(i + 1) % k]
        faces += [(cur[0], cur[-1], nxt[0]), (cur[-1], nxt[1], nxt[0])]
    inner = [b[0] for b in bounds]
    if k >= 3:
        faces += [(inner[0], inner[i], inner[i + 1]) for i in range(1, k - 1)]
    outer = [v for b in bounds for v in b[1:]]
    faces += [(outer[0], outer[i], outer[i + 1]) for i in range(1, len(outer) - 1)]
    return Triangulation.from_faces(faces, n=s * k)


# -- random triangulations -----------------------------------------------------


def _stacked_faces(n: int, rng: random.Random) -> List[Tuple[int, int, int]]:
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    for v in range(4, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces += [(b, c, v), (c, a, v)]
    return faces


def random_stacked(n: int, seed: int) -> Triangulation:
    """Stacked (Apollonian) triangulation: K4, then ``n - 4`` random face insertions."""
    if n < 4:
        raise ValueError("random_stacked needs n >= 4")
    return Triangulation.from_faces(_stacked_faces(n, random.Random(seed)), n=n)


def b_path(k: int) -> Triangulation:
    """A path of ``k >= 3`` b-vertices between two hubs.

    Hubs ``x = 0`` and ``x' = 1`` are adjacent to every path vertex
    ``u_i = 2 + i``.  Each path edge gets a 3-vertex stacked on the side of
    alternating hubs, and both ends get one more 3-vertex on the hub edge.
    """
    if k < 3:
        raise ValueError("b_path needs k >= 3")
    x, xp = 0, 1
    us = [2 + i for i in range(k)]
    faces: FaceList = [(x, xp, us[0]), (x, xp, us[-1])]
    for i in range(k - 1):
        faces += [(x, us[i], us[i + 1]), (xp, us[i], us[i + 1])]
    nxt = 2 + k
    faces = _stack(faces, (x, xp, us[0]), nxt)
    faces = _stack(faces, (x, xp, us[-1]), nxt + 1)
    nxt += 2
    for i in range(k - 1):
        hub = x if i % 2 == 0 else xp
        faces = _stack(faces, (hub, us[i], us[i + 1]), nxt)
        nxt += 1
    return Triangulation.from_faces(faces, nxt)


def facial_triakis(n_host: int, seed: int) -> Triangulation:
    """A random stacked host with a triakis tetrahedron glued into one face.

    The host face becomes the triakis' outer triangle, so its seven inner
    vertices form a facial copy.
    """
    rng = random.Random(seed)
    host = _stacked_faces(n_host, rng) if n_host >= 4 else [(0, 1, 2), (0, 2, 1)]
    a, b, c = host.pop(rng.randrange(len(host)))
    relabel = {7: a, 8: b, 9: c}
    for old in range(7):
        relabel[old] = n_host + old
    faces = [tuple(relabel[v] for v in f) for f in _triakis_faces() if set(f) != {7, 8, 9}]
    return Triangulation.from_faces(host + faces, n_host + 7)


def _band(outer: Sequence[int], inner: Sequence[int]) -> FaceList:
    """Faces of the antiprism band between two nested triangles."""
    faces = []
    for i in range(3):
        j = (i + 1) % 3
        faces.append((outer[i], outer[j], inner[i]))
        faces.append((inner[i], inner[j], outer[j]))
    return faces


def nested_cores(depth: int) -> Tuple[Triangulation, Tuple[int, ...]]:
    """A graph and seed set leaving ``depth`` nested triangles non-monitored.

    Each level is a monitored triangle, a band to a non-monitored core
    triangle, and a band to an inner monitored triangle.  A seed adjacent to
    that inner triangle also monitors the next level's outer triangle.  No
    vertex added to these seeds monitors four more vertices, so the pair is
    a ready-made input for the final completion stage.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    faces: FaceList = []
    seeds: List[int] = []
    counter = [0]

    def new(k: int) -> List[int]:
        out = list(range(counter[0], counter[0] + k))
        counter[0] += k
        return out

    outer = new(3)
    (apex,) = new(1)
    seeds.append(apex)
    faces.extend((apex, outer[i], outer[(i + 1) % 3]) for i in range(3))
    for level in range(depth):
        core = new(3)
        inner = new(3)
        faces.extend(_band(outer, core))
        faces.extend(_band(core, inner))
        if level == depth - 1:
            (hub,) = new(1)
            faces.extend((hub, inner[i], inner[(i + 1) % 3]) for i in range(3))
            seeds.append(hub)
            break
        # the next level sits in a triangle of hub neighbors away from this core
        hub, r1, r2, r3 = new(4)
        i0, i1, i2 = inner
        faces.extend([(hub, i1, i2), (hub, i2, i0), (hub, i0, r1), (i0, i1, r1), (i1, hub, r2), (i1, r1, r2)])
        faces.extend([(hub, r1, r3), (r2, hub, r3)])
        seeds.append(hub)
        outer = [r1, r2, r3]
    return Triangulation.from_faces(faces, counter[0]), tuple(seeds)


@dataclass(frozen=True)
class FlipStats:
    attempted: int
    applied: int
    skipped: int


def random_mixed(n: int, seed: int, flips: int, return_stats: bool = False):
    """Random stacked triangulation followed by ``flips`` random edge flips.

    A flip of edge ``uv`` with opposite corners ``a, b`` is skipped when
    ``a`` and ``b`` are already adjacent or ``u``/``v`` has degree 3.
    """
    if n < 4:
        raise ValueError("random_mixed needs n >= 4")
    rng = random.Random(seed)
    faces = _stacked_faces(n, rng)
    adj: List[set] = [set() for _ in range(n)]
    edge_faces: Dict[frozenset, set] = {}
    for i, f in enumerate(faces):
        for x, y in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])):
            adj[x].add(y)
            adj[y].add(x)
            edge_faces.setdefault(frozenset((x, y)), set()).add(i)
    applied = skipped = 0
    for _ in range(flips):
        i = rng.randrange(len(faces))
        f = faces[i]
        j = rng.randrange(3)
        u, v = f[j], f[(j + 1) % 3]
        a = f[(j + 2) % 3]
        (other,) = edge_faces[frozenset((u, v))] - {i}
        b = next(x for x in faces[other] if x not in (u, v))
        if a == b or b in adj[a] or len(adj[u]) <= 3 or len(adj[v]) <= 3:
            skipped += 1
            continue
        for idx in (i, other):
            g = faces[idx]
            for x, y in ((g[0], g[1]), (g[1], g[2]), (g[2], g[0])):
                edge_faces[frozenset((x, y))].discard(idx)
        del edge_faces[frozenset((u, v))]
        adj[u].discard(v)
        adj[v].discard(u)
        adj[a].add(b)
        adj[b].add(a)
        faces[i] = (a, b, u)
        faces[other] = (a, b, v)
        for idx in (i, other):
            g = faces[idx]
            for x, y in ((g[0], g[1]), (g[1], g[2]), (g[2], g[0])):
                edge_faces.setdefault(frozenset((x, y)), set()).add(idx)
        applied += 1
    g = Triangulation.from_faces(faces, n=n)
    if return_stats:
        return g, FlipStats(flips, applied, skipped)
    return g


# -- family dispatch -------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of one generated instance.

    ``family`` is ``"named"``, ``"lower_bound"``, ``"b_path"``,
    ``"facial_triakis"``, ``"random_stacked"`` or ``"random_mixed"``.
    """

    family: str
    name: Optional[str] = None
    n: Optional[int] = None
    k: Optional[int] = None
    seed: Optional[int] = None
    flips: int = 0
    gadget: str = "bad"

    @property
    def label(self) -> str:
        if self.family == "named":
            return str(self.name)
        if self.family == "lower_bound":
            return f"lower_bound(k={self.k},{self.gadget})"
        if self.family == "b_path":
            return f"b_path(k={self.k})"
        if self.family == "facial_triakis":
            return f"facial_triakis(n={self.n},seed={self.seed})"
        if self.family == "random_stacked":
            return f"stacked(n={self.n},seed={self.seed})"
        return f"mixed(n={self.n},seed={self.seed},flips={self.flips})"


def build(spec: FamilySpec) -> Triangulation:
    if spec.family == "named":
        return named(str(spec.name))
    if spec.family == "lower_bound":
        return lower_bound_family(int(spec.k or 1), spec.gadget)
    if spec.family == "b_path":
        return b_path(int(spec.k or 3))
    if spec.n is None or spec.seed is None:
        raise ValueError(f"{spec.family} needs n and seed")
    if spec.family == "random_stacked":
        return random_stacked(spec.n, spec.seed)
    if spec.family == "random_mixed":
        return random_mixed(spec.n, spec.seed, spec.flips)
    if spec.family == "facial_triakis":
        return facial_triakis(spec.n, spec.seed)
    raise UnknownTag(spec.family)


def random_corpus(count: int, n_min: int, n_max: int, seed: int, flip_factor: int = 2) -> List[FamilySpec]:
    """Deterministic mix of stacked and flipped instances with ``n`` in range."""
    rng = random.Random(seed)
    specs = []
    for i in range(count):
        n = rng.randint(n_min, n_max)
        s = rng.randrange(2**31)
        if i % 2 == 0:
            specs.append(FamilySpec("random_stacked", n=n, seed=s))
        else:
            specs.append(FamilySpec("random_mixed", n=n, seed=s, flips=flip_factor * n))
    return specs


DEFAULT_NAMED: Tuple[str, ...] = (
    "octahedron", "flip_octahedron", "triakis", "fig4_a", "fig4_b",
    "fig6_variant_a", "fig6_variant_b", "b_triangle_open", "icosahedron",
    "tower(3)", "tower(4)", "tower(5)", "tower(6)", "tower(7)", "tower(8)",
)


def named_corpus(names: Sequence[str] = DEFAULT_NAMED) -> List[FamilySpec]:
    return [FamilySpec("named", name=t) for t in names]
