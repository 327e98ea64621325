import pytest
from hypothesis import given, settings

from powerdom.exact import Exceeded, gamma_p_exact, is_optimal
from powerdom.generators import lower_bound_family, named
from powerdom.monitor import is_power_dominating

from conftest import brute_gamma, triangulations


@pytest.mark.parametrize(
    "tag, value",
    # frozen from the networkx brute force in conftest
    [("K3", 1), ("K4", 1), ("octahedron", 1), ("flip_octahedron", 1), ("triakis", 2), ("tower(7)", 1)],
)
def test_named_values(tag, value):
    res = gamma_p_exact(named(tag))
    assert res.gamma_p == value
    assert is_power_dominating(named(tag), res.witness)


def test_triakis_witness_is_lexicographically_least():
    assert gamma_p_exact(named("triakis")).witness == (0, 7)


def test_pruning_agrees():
    for k in (1, 2):
        g = lower_bound_family(k, "good")
        plain = gamma_p_exact(g)
        pruned = gamma_p_exact(g, prune_dominated=True)
        assert plain.gamma_p == pruned.gamma_p == k
        assert pruned.subsets_examined <= plain.subsets_examined


def test_exceeded():
    with pytest.raises(Exceeded) as info:
        gamma_p_exact(named("triakis"), k_max=1)
    assert info.value.k_max == 1


def test_is_optimal():
    g = named("triakis")
    assert is_optimal(g, [1, 9])
    assert not is_optimal(g, [0, 1, 9])
    with pytest.raises(ValueError):
        is_optimal(g, [0])


@settings(max_examples=40, deadline=None)
@given(triangulations(n_max=11))
def test_matches_independent_brute_force(g):
    assert gamma_p_exact(g).gamma_p == brute_gamma(g)
    assert gamma_p_exact(g, prune_dominated=True).gamma_p == brute_gamma(g)
