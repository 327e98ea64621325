import pytest
from hypothesis import given, settings

from powerdom.generators import FamilySpec, b_path, build, facial_triakis, named, named_corpus
from powerdom.harness import closure_order_independent, property_record
from powerdom.monitor import MonitorState, monitor
from powerdom.properties import STRUCTURAL_CHECKS, fixpoint_violations
from powerdom.solver import algorithm1, algorithm2

from conftest import triangulations

EXTRA = [b_path(3), b_path(6), facial_triakis(4, 1), facial_triakis(12, 3)]


@pytest.mark.parametrize("name", sorted(STRUCTURAL_CHECKS))
def test_structural_laws_on_named_graphs(name):
    check = STRUCTURAL_CHECKS[name]
    for spec in named_corpus():
        assert check(build(spec)) == [], spec.label
    for g in EXTRA:
        assert check(g) == []


@settings(max_examples=80, deadline=None)
@given(triangulations(n_min=6, n_max=60))
def test_structural_laws_random(g):
    for name, check in STRUCTURAL_CHECKS.items():
        assert check(g) == [], name


@settings(max_examples=60, deadline=None)
@given(triangulations(n_min=6, n_max=80))
def test_fixpoint_laws_after_greedy(g):
    sel = algorithm1(g)
    algorithm2(g, sel.state)
    assert fixpoint_violations(g, sel.state) == []


def test_fixpoint_detects_component_of_four():
    # one icosahedron seed monitors six vertices and stalls with the other
    # six in a single component; the greedy loop would not stop here
    g = named("icosahedron")
    state = MonitorState.empty(g)
    state.add_seed(0)
    out = fixpoint_violations(g, state)
    assert any(v[0] == "component_order" for v in out)


def test_fixpoint_detects_missing_source():
    g = named("octahedron")
    state = monitor(g, [])
    state.monitored.add(1)
    assert ("no_source", 1) in fixpoint_violations(g, state)


def test_property_record_on_triakis():
    rec = property_record(FamilySpec("named", name="triakis"))
    assert rec.ok and rec.checks["property_star"] and rec.size == 2


def test_closure_order_independence():
    g = facial_triakis(12, 3)
    assert closure_order_independent(g, [0, 5], orders=20, seed=1)
