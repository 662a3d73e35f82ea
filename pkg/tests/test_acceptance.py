"""Acceptance criteria, one test per numbered criterion.

Each test prints a single PASS line on success (run with -s to see them);
all tolerances are exact integer/boolean comparisons, and the two stated
runtime budgets are enforced with time measurements.
"""

import math
import random
import time
from fractions import Fraction

from hyperhomology.bundles import (
    Sphere,
    Surface,
    a_coeff,
    embedding_dimension_bound,
    order_bound,
    rho,
)
from hyperhomology.chains import ambient_complex, inf_complex, sup_complex
from hyperhomology.groups import aut_group, homeo_group, stab_group
from hyperhomology.homology import betti
from hyperhomology.hypergraphs import delta_closure, hypergraph
from hyperhomology.metrics import PiValue, evenly_spaced_circle_sample, hard_sphere
from hyperhomology.suites import (
    circle_suite,
    covering_suite,
    group_tables_suite,
    laplacian_suite,
    persistence_suite,
    quasi_iso_suite,
    quotient_suite,
    random_simplicial_complex,
    simplicial_identity_suite,
    structural_suite,
)

from oracles import simplicial_betti

SEED = 20240809


def _report(number, label):
    print(f"ACCEPTANCE {number} ({label}): PASS")


def test_criterion_1_group_tables():
    start = time.perf_counter()
    fixtures = [
        (hypergraph([[1, 2], [0, 2], [0, 1], [0, 1, 2]], vertices=range(4)), (6, 1, 6)),
        (hypergraph([[0, 1], [2, 3]]), (8, 4, 2)),
        (hypergraph([[0, 1]], vertices=range(4)), (4, 4, 1)),
        (hypergraph([[0, 1, 2], [1, 2, 3]]), (4, 2, 2)),
    ]
    for h, expected in fixtures:
        got = (homeo_group(h).order, stab_group(h).order, aut_group(h).order)
        assert got == expected, f"expected {expected}, got {got}"
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"group tables took {elapsed:.3f}s (budget 1s)"
    _report(1, "four-vertex group tables")


def test_criterion_2_quasi_isomorphism_suite():
    start = time.perf_counter()
    result = quasi_iso_suite(SEED, hypergraphs=200, hyperdigraphs=100)
    elapsed = time.perf_counter() - start
    assert result.checks >= 300
    assert result.passed, result.failures[:3]
    assert elapsed < 60.0, f"quasi-iso suite took {elapsed:.1f}s (budget 60s)"
    _report(2, "inf/sup quasi-isomorphism on 300 random instances")


def test_criterion_3_simplicial_identity():
    result = simplicial_identity_suite(SEED + 1, count=50)
    assert result.checks >= 50
    assert result.passed, result.failures[:3]
    # independent dense-elimination homology oracle on fresh instances
    rng = random.Random(SEED + 100)
    for _ in range(50):
        h = random_simplicial_complex(rng, max_vertices=6, max_card=4)
        expected = simplicial_betti(h.edges)
        assert betti(ambient_complex(h, "closure")).betti == expected
        assert betti(inf_complex(h)).betti == expected
        assert betti(sup_complex(h)).betti == expected
    _report(3, "simplicial case: Inf = Sup = ambient, oracle homology")


def test_criterion_4_quotient_quasi_isomorphism():
    result = quotient_suite(SEED + 2, count=30)
    assert result.checks >= 30
    assert result.passed, result.failures[:3]
    _report(4, "equal quotient homology with surjective q")


def test_criterion_5_covering_sheets():
    result = covering_suite(SEED + 3, count=50)
    assert result.checks >= 50
    assert result.passed, result.failures[:3]
    _report(5, "n!-sheeted covering counts and lifted automorphisms")


def test_criterion_6_circle_emptiness():
    twelve = evenly_spaced_circle_sample(12)
    just_below = math.pi / 3 - 1e-6
    assert len(hard_sphere(twelve, just_below, 3).level(3)) > 0
    assert hard_sphere(twelve, PiValue(Fraction(1, 3)), 3).level(3) == ()
    result = circle_suite(SEED + 4)
    assert result.passed, result.failures[:3]
    # exact equally spaced samples empty at exactly pi/n for n <= 5
    for count in (5, 7, 10, 12):
        sample = evenly_spaced_circle_sample(count)
        for n in range(2, 6):
            if n > count:
                continue
            assert hard_sphere(sample, PiValue(Fraction(1, n)), n).level(n) == ()
    _report(6, "circle emptiness at and beyond pi/n")


def test_criterion_7_persistence_sanity():
    result = persistence_suite(SEED + 5, samples=20)
    assert result.checks >= 21
    assert result.passed, result.failures[:3]
    _report(7, "triangle persistence and rank monotonicity")


def test_criterion_8_laplacian_betti():
    result = laplacian_suite(SEED + 6, count=50)
    assert result.checks >= 50
    assert result.passed, result.failures[:3]
    _report(8, "harmonic rank equals Betti number")


def test_criterion_9_bundle_arithmetic():
    assert rho(4) == 3
    assert rho(10) == 6
    assert a_coeff(3, 3) == 12
    assert a_coeff(4, 5) == 60
    for n in (1, 2, 3, 7, 11):
        assert order_bound(Surface(genus=1), n).bound == 4
        assert order_bound(Surface(genus=3), n).bound == 4
    assert order_bound(Sphere(2), 2).bound == 4
    assert embedding_dimension_bound(2, 2) == 4
    _report(9, "bundle order arithmetic")


def test_criterion_10_structural_invariants():
    result = structural_suite(SEED + 7, fuzz_elements=1000)
    assert result.details["fuzzed_elements"] >= 1000
    assert result.passed, result.failures[:3]
    # boundary-squared holds on every freshly constructed complex kind
    rng = random.Random(SEED + 200)
    for _ in range(10):
        h = delta_closure(random_simplicial_complex(rng, max_vertices=6, max_card=4))
        for builder in (
            lambda: ambient_complex(h, "closure"),
            lambda: inf_complex(h).complex,
            lambda: sup_complex(h).complex,
        ):
            builder().validate()
    _report(10, "structural invariants and ambient independence")
