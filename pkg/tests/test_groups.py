from fractions import Fraction
from itertools import combinations

import pytest

from hyperhomology.errors import ResourceCapError
from hyperhomology.groups import (
    Permutation,
    aut_group,
    aut_isom,
    edge_action,
    homeo_group,
    isom_group,
    pi_surjection_check,
    stab_group,
    subgroup_identities,
)
from hyperhomology.hypergraphs import hyperdigraph, hypergraph, lift
from hyperhomology.metrics import (
    circle_sample,
    distance_matrix_sample,
    euclidean_sample,
)

TRIANGLE_PLUS_ISOLATED = hypergraph(
    [[1, 2], [0, 2], [0, 1], [0, 1, 2]], vertices=range(4)
)
TWO_PAIRS = hypergraph([[0, 1], [2, 3]])
ONE_PAIR = hypergraph([[0, 1]], vertices=range(4))
TWO_TRIPLES = hypergraph([[0, 1, 2], [1, 2, 3]])


@pytest.mark.parametrize(
    "h,expected",
    [
        (TRIANGLE_PLUS_ISOLATED, (6, 1, 6)),
        (TWO_PAIRS, (8, 4, 2)),
        (ONE_PAIR, (4, 4, 1)),
        (TWO_TRIPLES, (4, 2, 2)),
    ],
)
def test_group_table_fixtures(h, expected):
    assert (
        homeo_group(h).order,
        stab_group(h).order,
        aut_group(h).order,
    ) == expected


def test_two_pairs_structure():
    homeo = homeo_group(TWO_PAIRS)
    stab = stab_group(TWO_PAIRS)
    assert stab.is_normal_in(homeo)
    # the stabilizer is elementary abelian: every element squares to identity
    for p in stab.elements:
        assert p.compose(p) == Permutation.identity(p.domain)


def test_stab_of_complete_uniform():
    four = range(4)
    complete2 = hypergraph(list(combinations(four, 2)))
    assert stab_group(complete2).order == 1  # |V| > n
    assert aut_group(complete2).order == 24
    complete4 = hypergraph([tuple(four)])
    assert stab_group(complete4).order == 24  # |V| = n


def test_aut_action_is_faithful_and_consistent():
    action = aut_group(TWO_PAIRS)
    assert len(set(action.elements)) == action.order
    homeo = homeo_group(TWO_PAIRS)
    stab = stab_group(TWO_PAIRS)
    assert action.order * stab.order == homeo.order
    for element, rep in zip(action.elements, action.vertex_reps):
        assert edge_action(TWO_PAIRS, rep) == element


def test_empty_hypergraph_groups():
    empty = hypergraph([], vertices=range(3))
    assert homeo_group(empty).order == 6
    assert stab_group(empty).order == 6
    assert aut_group(empty).order == 1


def test_directed_groups():
    d = hyperdigraph([(0, 1)], vertices=[0, 1, 2])
    homeo = homeo_group(d)
    # the single edge must map to itself coordinatewise, pinning 0 and 1,
    # and bijectivity then pins 2 as well
    assert homeo.order == 1
    two_cycle = hyperdigraph([(0, 1), (1, 0)])
    assert homeo_group(two_cycle).order == 2
    assert stab_group(two_cycle).order == 1


def test_one_pair_homeo_equals_stab():
    # with edge {0,1} alone, preserving and fixing the edge coincide
    assert homeo_group(ONE_PAIR).element_set() == stab_group(ONE_PAIR).element_set()


def test_lifted_groups_sit_inside_projected_ones():
    for h in (TWO_PAIRS, TWO_TRIPLES, hypergraph([[0, 1], [1, 2]])):
        up = lift(h)
        assert stab_group(up).is_normal_in(stab_group(h))
        assert homeo_group(up).is_subgroup_of(homeo_group(h))


def test_pi_surjection_examples():
    assert pi_surjection_check(lift(hypergraph([[0, 1]])))
    assert pi_surjection_check(lift(TWO_PAIRS))
    assert pi_surjection_check(lift(hypergraph([], vertices=[0, 1])))
    with pytest.raises(ValueError):
        pi_surjection_check(hyperdigraph([(0, 1)]))


def test_subgroup_identities_examples():
    simplicial = hypergraph([[0], [1], [0, 1]])
    report = subgroup_identities(simplicial, [0, 1])
    assert report.all_ok
    report = subgroup_identities(hypergraph([[0, 1], [0, 1, 2]]), [0, 1, 2])
    assert report.all_ok
    report = subgroup_identities(TWO_TRIPLES, range(4))
    assert report.all_ok


def test_vertex_cap():
    big = hypergraph([], vertices=range(11))
    with pytest.raises(ResourceCapError):
        homeo_group(big)
    homeo_group(hypergraph([], vertices=range(4)), cap=4)
    with pytest.raises(ResourceCapError):
        homeo_group(hypergraph([], vertices=range(5)), cap=4)


def test_isom_group_examples():
    unit_square = euclidean_sample([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert isom_group(unit_square).order == 8
    collinear = euclidean_sample([(0,), (1,), (3,)])
    assert isom_group(collinear).order == 1
    discrete = distance_matrix_sample(
        [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    )
    assert isom_group(discrete).order == 24


def test_isom_group_circle_exact():
    square_on_circle = circle_sample([0, Fraction(1, 2), 1, Fraction(3, 2)])
    assert isom_group(square_on_circle).order == 8


def test_isom_tolerance_mode():
    wobbly = euclidean_sample([(0, 0), (1, 0), (1.0000001, 1), (0, 1)])
    assert isom_group(wobbly).order == 1
    assert isom_group(wobbly, tolerance=1e-3).order == 8


def test_aut_isom_report():
    square = euclidean_sample([(0, 0), (1, 0), (1, 1), (0, 1)])
    cycle = hypergraph([[0, 1], [1, 2], [2, 3], [0, 3]])
    report = aut_isom(cycle, square)
    assert report.isom_order == 8
    assert report.isom_h_order == 8
    assert report.stab_isom_order == 1
    assert report.aut_isom_order == 8
    assert report.stab_isom_normal_in_isom_h
    assert report.aut_isom_subgroup_of_aut


def test_aut_isom_requires_matching_ids():
    square = euclidean_sample([(0, 0), (1, 0), (1, 1), (0, 1)])
    with pytest.raises(ValueError):
        aut_isom(hypergraph([[0, 5]]), square)


def test_permutation_algebra():
    p = Permutation((0, 1, 2), (1, 2, 0))
    q = p.inverse()
    assert p.compose(q) == Permutation.identity((0, 1, 2))
    assert p.apply_edge((0, 2), directed=False) == (0, 1)
    assert p.apply_edge((0, 2), directed=True) == (1, 0)
    assert p.cycles() == [(0, 1, 2)]
    with pytest.raises(ValueError):
        Permutation((0, 1), (0, 0))


def test_group_generators_generate():
    homeo = homeo_group(TWO_PAIRS)
    gens = homeo.generators()
    seen = {Permutation.identity(homeo.domain).images}
    frontier = [Permutation.identity(homeo.domain)]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a.compose(g)
                if b.images not in seen:
                    seen.add(b.images)
                    nxt.append(b)
        frontier = nxt
    assert len(seen) == homeo.order
    assert len(gens) <= 3
