import pytest
from hypothesis import given, settings

from powerdom.generators import named
from powerdom.triangulation import (
    Disconnected,
    NotSymmetric,
    NotTriangulation,
    Triangulation,
    is_induced_triangulation,
    parse,
    serialize,
)

from conftest import is_planar, triangulations

K4 = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]


def test_k4_counts():
    g = Triangulation(K4)
    assert (g.n, g.m, len(g.faces)) == (4, 6, 4)
    assert all(g.degree(v) == 3 for v in range(4))


def test_octahedron_counts():
    g = named("octahedron")
    assert (g.n, g.m, len(g.faces)) == (6, 12, 8)
    assert all(len(g.neighbors(v)) == 4 for v in range(6))


def test_missing_reciprocal_entry():
    bad = [list(r) for r in K4]
    bad[0] = [1, 2]
    with pytest.raises(NotSymmetric):
        Triangulation(bad)


def test_wrong_edge_count():
    # the 4-cycle plus one chord is planar but not maximal
    with pytest.raises(NotTriangulation):
        Triangulation([[1, 3, 2], [0, 2], [1, 0, 3], [2, 0]])


def test_disconnected():
    rot = [[1, 2], [2, 0], [0, 1], [4, 5], [5, 3], [3, 4]]
    with pytest.raises(Disconnected):
        Triangulation(rot)


def test_bad_rotation_order_gives_non_triangular_face():
    # K4 with vertex 0's rotation reversed traces a face of length != 3
    rot = [[1, 3, 2], [0, 3, 2], [0, 1, 3], [0, 2, 1]]
    with pytest.raises(NotTriangulation):
        Triangulation(rot)


def test_is_face_octahedron_and_k4():
    g = named("octahedron")
    for a in range(6):
        for b in g.neighbors(a):
            for c in g.neighbors(b):
                if c != a and g.has_edge(a, c):
                    assert g.is_face(a, b, c)
    k4 = Triangulation(K4)
    assert all(k4.is_face(*f) for f in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def test_tower_apex_triangle_is_not_facial():
    g = named("tower(4)")
    # apexes 0, 1 with path 2-3-4-5; the middle vertex 3 sees both apexes
    assert g.has_edge(0, 3) and g.has_edge(1, 3)
    assert not g.is_face(0, 1, 3)
    assert g.is_face(0, 1, 2)


def test_induced_views():
    g = named("octahedron")
    whole = g.induced(range(6))
    assert whole.n == 6 and whole.m == 12 and is_induced_triangulation(whole)
    f = g.faces[0]
    tri = g.induced(f)
    assert tri.m == 3 and is_induced_triangulation(tri)


def test_three_vertex_neighborhood_induces_k4():
    g = named("triakis")
    v = next(x for x in range(g.n) if g.degree(x) == 3)
    view = g.induced(g.closed_neighborhood(v))
    assert view.n == 4 and view.m == 6 and is_induced_triangulation(view)


def test_non_triangulated_view():
    g = named("octahedron")
    # the equator 4-cycle
    assert not is_induced_triangulation(g.induced([1, 2, 3, 4]))


def test_parse_comments_and_errors():
    g = named("octahedron")
    text = "# octahedron\n" + serialize(g).replace("\n", "  # row\n", 2)
    assert parse(text) == g
    with pytest.raises(NotTriangulation):
        parse("6\n1 2 3 4\n")
    with pytest.raises(NotTriangulation):
        parse("")


def test_from_faces_ignores_corner_order():
    faces = [(0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2)]
    # the first face fixes the orientation; the rest may be listed either way
    shuffled = [(1, 2, 0), (1, 0, 3), (3, 2, 0), (1, 2, 3)]
    assert Triangulation.from_faces(faces) == Triangulation.from_faces(shuffled)
    base = Triangulation.from_faces(faces)
    mirrored = Triangulation.from_faces([(2, 1, 0)] + faces[1:])
    for v in range(4):
        cycle = base.rotation[v]
        assert mirrored.rotation[v] == (cycle[0],) + tuple(reversed(cycle[1:]))


@settings(max_examples=60, deadline=None)
@given(triangulations())
def test_invariants_hold_for_generated(g):
    assert g.m == 3 * g.n - 6
    assert len(g.faces) == 2 * g.n - 4
    assert all(len(f) == 3 for f in g.faces)
    for v in range(g.n):
        for u in g.neighbors(v):
            assert v in g.neighbors(u)
    assert is_planar(g)


@settings(max_examples=60, deadline=None)
@given(triangulations())
def test_round_trip_and_relabel(g):
    assert parse(serialize(g)) == g
    perm = list(reversed(range(g.n)))
    h = g.relabel(perm)
    assert h.m == g.m and sorted(h.degree(v) for v in range(h.n)) == sorted(g.degree(v) for v in range(g.n))
