import pytest
from hypothesis import given, settings

from powerdom.generators import b_path, facial_triakis, lower_bound_family, named, random_stacked
from powerdom.monitor import monitor
from powerdom.structure import (
    analyze,
    b_components,
    b_vertices,
    classify_configurations,
    classify_small,
    facial_octahedra,
    three_vertices,
)

from conftest import triangulations


def test_three_vertices():
    assert len(three_vertices(named("triakis"))) == 4
    assert three_vertices(named("octahedron")) == frozenset()
    assert three_vertices(named("K4")) == frozenset(range(4))


def test_triakis_b_vertices_are_the_octahedron():
    g = named("triakis")
    bs = b_vertices(g)
    assert bs == frozenset(v for v in range(g.n) if g.degree(v) == 6)
    comps = b_components(g)
    assert len(comps) == 1 and len(comps[0].vertices) == 6 and comps[0].shape == "other"


@pytest.mark.parametrize("tag, count", [("fig4_a", 3), ("fig4_b", 2), ("octahedron", 0)])
def test_b_vertex_counts(tag, count):
    assert len(b_vertices(named(tag))) == count


def test_no_three_vertices_means_no_components():
    g = named("octahedron")
    assert b_components(g) == []


def test_facial_octahedra():
    assert len(facial_octahedra(named("octahedron"))) == 1
    assert facial_octahedra(named("triakis")) == []


def test_b_path_component():
    g = b_path(5)
    (cfg,) = classify_configurations(g)
    assert cfg.config_type == 2 and cfg.component.shape == "path"
    assert set(cfg.component.universal) == {0, 1}
    x = cfg.special_vertex
    assert all(g.has_edge(x, u) for u in cfg.component.vertices)
    assert monitor(g, [x]).monitored >= cfg.b_vertices


def test_facial_triakis_is_type_4():
    g = facial_triakis(20, 2)
    types = [c.config_type for c in classify_configurations(g)]
    assert 4 in types


@pytest.mark.parametrize("tag", ["fig6_variant_a", "fig6_variant_b", "b_triangle_open"])
def test_b_triangles_without_common_three_neighbor(tag):
    (cfg,) = classify_configurations(named(tag))
    assert cfg.config_type == 5


def test_p2_components():
    g = named("fig4_b")
    (cfg,) = classify_configurations(g)
    assert cfg.component.shape == "P2" and cfg.config_type in (6, 7)


def test_bad_family_types():
    g = lower_bound_family(3, "bad")
    assert sorted(c.config_type for c in classify_configurations(g)) == [3, 3, 3]


@pytest.mark.parametrize(
    "tag, expected",
    [
        ("K3", "K3"),
        ("K4", "K4"),
        ("tower(4)", "tower(4)"),
        ("tower(7)", "tower(7)"),
        ("octahedron", "octahedron"),
        ("triakis", "triakis"),
        # the flip-octahedron and both fig4 tags are towers
        ("flip_octahedron", "tower(4)"),
        ("fig4_a", "tower(3)"),
        ("fig4_b", "tower(4)"),
        ("fig6_variant_a", "fig6_variant"),
    ],
)
def test_classify_small(tag, expected):
    assert classify_small(named(tag)) == expected


def test_classify_small_none_for_random():
    assert classify_small(random_stacked(50, 1)) == "none"


@settings(max_examples=60, deadline=None)
@given(triangulations(n_min=6, n_max=60))
def test_configuration_postconditions(g):
    configs = classify_configurations(g)
    bs = b_vertices(g)
    covered = set()
    for c in configs:
        if c.config_type <= 5:
            assert c.special_vertex is not None
            assert len({c.special_vertex, *c.circled_vertices}) >= 5
            assert monitor(g, [c.special_vertex]).monitored >= c.b_vertices
        if c.config_type <= 7:
            assert not covered & c.b_vertices
            covered |= c.b_vertices
        else:
            assert len(c.vertices) == 6
    assert covered == bs
    interiors = [c.interior for c in configs if c.config_type == 8]
    for i in range(len(interiors)):
        for j in range(i + 1, len(interiors)):
            assert not interiors[i] & interiors[j]


def test_analyze_schema():
    d = analyze(named("fig6_variant_b"))
    assert set(d) >= {"three_vertices", "b_vertices", "components", "configurations", "small_class"}
    assert d["small_class"] == "fig6_variant"
    assert "error" in analyze(named("triakis"))
