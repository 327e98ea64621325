"""Maximal planar graphs stored as rotation systems.

A :class:`Triangulation` keeps, for every vertex, the cyclic order of its
neighbors in a plane embedding.  Faces are recovered by face tracing: the
dart ``u -> v`` is followed by ``v -> w`` where ``w`` is the neighbor of
``v`` immediately preceding ``u`` in the rotation of ``v``.

Maximal planar graphs on at least four vertices are 3-connected, so the
embedding is unique up to reflection and nothing here depends on which
face is drawn as the outer one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

Face = Tuple[int, int, int]


class TriangulationError(ValueError):
    """Base class for invalid rotation systems."""


class NotSymmetric(TriangulationError):
    pass


class NotTriangulation(TriangulationError):
    pass


class Disconnected(TriangulationError):
    pass


def _canonical_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    if not cycle:
        return ()
    i = min(range(len(cycle)), key=cycle.__getitem__)
    return tuple(cycle[i:]) + tuple(cycle[:i])


def trace_faces(rotation: Dict[int, Sequence[int]]) -> List[Tuple[int, ...]]:
    """Trace all faces of a rotation system given as ``{v: cyclic neighbors}``.

    Every dart lies on exactly one returned face.  Faces are emitted in a
    deterministic order (by their first dart, in vertex then rotation order).
    """
    position = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rotation.items()}
    seen = set()
    faces = []
    for u in sorted(rotation):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                nbrs = rotation[b]
                w = nbrs[position[b][a] - 1]
                a, b = b, w
            faces.append(tuple(face))
    return faces


def _is_connected(adjacency: Dict[int, Iterable[int]]) -> bool:
    if not adjacency:
        return True
    start = next(iter(adjacency))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(adjacency)


class Triangulation:
    """An immutable maximal planar graph with its combinatorial embedding.

    Vertices are the integers ``0..n-1``.  Rotations are normalised so the
    cycle of every vertex starts at its lowest-id neighbor; the cyclic
    direction given by the caller is preserved.

    Raises:
        NotSymmetric: ``v`` lists ``u`` but ``u`` does not list ``v``.
        NotTriangulation: bad vertex ids, repeated neighbors, ``m != 3n - 6``
            or a traced face that is not a triangle.
        Disconnected: the graph is not connected.
    """

    __slots__ = ("n", "m", "rotation", "adj", "faces", "_face_keys", "_hash")

    def __init__(self, rotation: Sequence[Sequence[int]]):
        n = len(rotation)
        if n < 3:
            raise NotTriangulation(f"need at least 3 vertices, got {n}")
        rot = []
        for v, nbrs in enumerate(rotation):
            nbrs = [int(u) for u in nbrs]
            for u in nbrs:
                if not 0 <= u < n:
                    raise NotTriangulation(f"vertex {v} lists unknown vertex {u}")
                if u == v:
                    raise NotTriangulation(f"self-loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise NotTriangulation(f"vertex {v} repeats a neighbor")
            rot.append(_canonical_cycle(nbrs))
        adj = [frozenset(r) for r in rot]
        for v in range(n):
            for u in adj[v]:
                if v not in adj[u]:
                    raise NotSymmetric(f"{u} is a neighbor of {v} but not vice versa")
        if not _is_connected({v: adj[v] for v in range(n)}):
            raise Disconnected("rotation system is not connected")
        m = sum(len(a) for a in adj) // 2
        if m != 3 * n - 6:
            raise NotTriangulation(f"edge count {m} != 3n-6 = {3 * n - 6}")
        faces = trace_faces(dict(enumerate(rot)))
        for f in faces:
            if len(f) != 3:
                raise NotTriangulation(f"traced face {f} has length {len(f)}")
        self.n = n
        self.m = m
        self.rotation: Tuple[Tuple[int, ...], ...] = tuple(rot)
        self.adj: Tuple[FrozenSet[int], ...] = tuple(adj)
        self.faces: Tuple[Face, ...] = tuple(faces)  # type: ignore[arg-type]
        self._face_keys = frozenset(frozenset(f) for f in faces)
        self._hash = hash(self.rotation)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_faces(cls, faces: Iterable[Sequence[int]], n: Optional[int] = None) -> "Triangulation":
        """Build a triangulation from its (unoriented) list of triangular faces.

        Orientations are made coherent by propagation across shared edges, so
        callers may list each face's corners in any order.
        """
        faces = [tuple(f) for f in faces]
        if n is None:
            n = 1 + max(max(f) for f in faces)
        edge_faces: Dict[FrozenSet[int], List[int]] = {}
        for i, f in enumerate(faces):
            if len(set(f)) != 3:
                raise NotTriangulation(f"degenerate face {f}")
            for a, b in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])):
                edge_faces.setdefault(frozenset((a, b)), []).append(i)
        for e, fs in edge_faces.items():
            if len(fs) != 2:
                raise NotTriangulation(f"edge {tuple(sorted(e))} lies on {len(fs)} faces")
        oriented: Dict[int, Face] = {}
        for root in range(len(faces)):
            if root in oriented:
                continue
            oriented[root] = faces[root]  # type: ignore[assignment]
            queue = deque([root])
            while queue:
                i = queue.popleft()
                a, b, c = oriented[i]
                for x, y in ((a, b), (b, c), (c, a)):
                    for j in edge_faces[frozenset((x, y))]:
                        if j == i:
                            continue
                        # the neighbouring face must traverse y -> x
                        f = faces[j]
                        darts = {(f[0], f[1]), (f[1], f[2]), (f[2], f[0])}
                        want = f if (y, x) in darts else (f[0], f[2], f[1])
                        if j in oriented:
                            od = oriented[j]
                            if (y, x) not in {(od[0], od[1]), (od[1], od[2]), (od[2], od[0])}:
                                raise NotTriangulation("faces cannot be oriented coherently")
                            continue
                        oriented[j] = want  # type: ignore[assignment]
                        queue.append(j)
        succ: Dict[int, Dict[int, int]] = {v: {} for v in range(n)}
        for x, y, z in oriented.values():
            for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
                # traced face p -> q -> r: at q, r immediately precedes p
                if r in succ[q]:
                    raise NotTriangulation(f"vertex {q} is not a disk in the face list")
                succ[q][r] = p
        rotation = []
        for v in range(n):
            s = succ[v]
            if not s:
                raise NotTriangulation(f"vertex {v} lies on no face")
            start = min(s)
            cycle = [start]
            w = s[start]
            while w != start:
                cycle.append(w)
                if len(cycle) > len(s):
                    raise NotTriangulation(f"rotation at {v} is not a single cycle")
                w = s[w]
            if len(cycle) != len(s):
                raise NotTriangulation(f"rotation at {v} is not a single cycle")
            rotation.append(cycle)
        return cls(rotation)

    def relabel(self, perm: Sequence[int]) -> "Triangulation":
        """Return the isomorphic triangulation where vertex ``v`` becomes ``perm[v]``."""
        rot: List[List[int]] = [[] for _ in range(self.n)]
        for v, nbrs in enumerate(self.rotation):
            rot[perm[v]] = [perm[u] for u in nbrs]
        return Triangulation(rot)

    # -- queries ----------------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Triangulation) and self.rotation == other.rotation

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Triangulation(n={self.n}, m={self.m})"

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.rotation[v]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def closed_neighborhood(self, v: int) -> FrozenSet[int]:
        return self.adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        for v in range(self.n):
            for u in self.rotation[v]:
                if v < u:
                    yield v, u

    def is_face(self, u: int, v: int, w: int) -> bool:
        return frozenset((u, v, w)) in self._face_keys

    def induced(self, subset: Iterable[int]) -> "InducedSubgraphView":
        return InducedSubgraphView.of(self, subset)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


@dataclass(frozen=True)
class InducedSubgraphView:
    """``G[subset]`` with the embedding inherited from the parent."""

    parent: Triangulation
    vertices: FrozenSet[int]
    rotation: Dict[int, Tuple[int, ...]] = field(compare=False, repr=False)
    faces: Tuple[Tuple[int, ...], ...] = field(compare=False, repr=False)

    @classmethod
    def of(cls, parent: Triangulation, subset: Iterable[int]) -> "InducedSubgraphView":
        vs = frozenset(subset)
        rotation = {v: tuple(u for u in parent.rotation[v] if u in vs) for v in sorted(vs)}
        faces = tuple(trace_faces(rotation))
        return cls(parent, vs, rotation, faces)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation.values()) // 2

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.rotation[v]

    def is_connected(self) -> bool:
        return _is_connected(self.rotation)

    def hole_faces(self) -> List[Tuple[int, ...]]:
        """Faces of the view that are not faces of the parent."""
        return [f for f in self.faces if len(f) != 3 or not self.parent.is_face(*f)]


def is_induced_triangulation(view: InducedSubgraphView) -> bool:
    """True iff the view is itself maximal planar under the inherited embedding."""
    n = view.n
    if n < 3:
        return False
    if any(len(r) < 2 for r in view.rotation.values()):
        return False
    if view.m != 3 * n - 6 or not view.is_connected():
        return False
    return all(len(f) == 3 for f in view.faces)


# -- rotrep text format ----------------------------------------------------------


def serialize(g: Triangulation) -> str:
    """Render ``g`` in the line-oriented rotrep format."""
    lines = [str(g.n)]
    lines.extend(" ".join(map(str, nbrs)) for nbrs in g.rotation)
    return "\n".join(lines) + "\n"


def parse(text: str) -> Triangulation:
    """Parse rotrep text.  ``#`` starts a comment; blank lines are ignored.

    Raises:
        NotTriangulation: malformed header or wrong number of vertex lines,
            besides every error :class:`Triangulation` itself may raise.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise NotTriangulation("empty rotrep input")
    try:
        n = int(rows[0])
        rotation = [[int(tok) for tok in row.split()] for row in rows[1:]]
    except ValueError as exc:
        raise NotTriangulation(f"malformed rotrep: {exc}") from None
    if len(rotation) != n:
        raise NotTriangulation(f"header says {n} vertices but {len(rotation)} lines follow")
    return Triangulation(rotation)
