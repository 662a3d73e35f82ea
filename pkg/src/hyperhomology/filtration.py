"""Hard-sphere filtrations and persistent Betti numbers.

Shrinking the exclusion radius only adds edges, so the hard-sphere
hypergraphs at decreasing radii form an increasing filtration.  Persistent
Betti numbers are the exact ranks of the homology maps induced by the
chain-level inclusions of the embedded (Inf or Sup) complexes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .chains import ambient_complex, inf_complex, sup_complex
from .errors import InvariantViolation
from .fields import QQ
from .homology import betti, induced_homology_rank
from .hypergraphs import Hypergraph
from .metrics import (
    CircleMetric,
    MetricPointSample,
    PiValue,
    critical_radii,
    hard_sphere,
    midpoint,
)


@dataclass(frozen=True)
class FiltrationStep:
    """One constancy interval of the hard-sphere family.

    The hypergraph is constant for radii in the open interval
    (lower, upper); the representative is the probe radius actually used.
    Steps are listed by decreasing radius, so hypergraphs grow with the
    step index.
    """

    lower: object
    upper: object
    representative: object
    hypergraph: Hypergraph


def build_filtration(sample: MetricPointSample, n_max: int) -> tuple[FiltrationStep, ...]:
    """All hard-sphere hypergraphs of a sample, one step per radius interval.

    Steps are ordered by decreasing radius: the first step (radius above
    the largest half distance) holds the vertices only, the last (radius
    below the smallest half distance) is the full hard-sphere hypergraph
    at radius 0.
    """
    if len(sample) < 1:
        raise ValueError("need at least one point")
    if len(sample) == 1:
        only = hard_sphere(sample, 0, n_max)
        return (FiltrationStep(0, math.inf, 1, only),)
    radii = critical_radii(sample, n_max)
    steps = []
    top_rep = radii[-1] * 2
    steps.append(
        FiltrationStep(radii[-1], math.inf, top_rep, hard_sphere(sample, top_rep, n_max))
    )
    for lo, hi in zip(reversed(radii[:-1]), reversed(radii[1:])):
        rep = midpoint(lo, hi)
        steps.append(FiltrationStep(lo, hi, rep, hard_sphere(sample, rep, n_max)))
    zero_rep = radii[0] / 2
    steps.append(
        FiltrationStep(0, radii[0], zero_rep, hard_sphere(sample, zero_rep, n_max))
    )
    for earlier, later in zip(steps, steps[1:]):
        if not earlier.hypergraph.edges <= later.hypergraph.edges:
            raise InvariantViolation("filtration steps are not nested")
    return tuple(steps)


@dataclass(frozen=True)
class PersistentBettiTable:
    """Exact ranks of induced homology maps between filtration steps."""

    kind: str
    degrees: tuple[int, ...]
    step_radii: tuple[object, ...]
    betti_by_step: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, int, int, int], ...]  # (degree, i, j, rank)

    def rank(self, degree: int, i: int, j: int) -> int:
        if i == j:
            row = self.betti_by_step[i]
            return row[degree] if degree < len(row) else 0
        for d, a, b, r in self.entries:
            if (d, a, b) == (degree, i, j):
                return r
        raise KeyError(f"no entry for degree {degree}, steps {i}->{j}")

    def csv_rows(self) -> list[list]:
        rows = [["degree", "r_i", "r_j", "beta_i", "beta_j", "rank"]]
        for d, i, j, r in self.entries:
            bi = self.betti_by_step[i][d] if d < len(self.betti_by_step[i]) else 0
            bj = self.betti_by_step[j][d] if d < len(self.betti_by_step[j]) else 0
            rows.append(
                [d, float(self.step_radii[i]), float(self.step_radii[j]), bi, bj, r]
            )
        return rows

    def barcode(self) -> list[dict]:
        """Bars derived from the ranks by inclusion-exclusion.

        Requires the table to contain every pair i <= j.  A bar recorded as
        (degree, born, dies) is a class appearing at step `born` and not
        surviving to step `dies` (dies = None for classes alive at the end).
        """
        steps = len(self.betti_by_step)

        def r(d, i, j):
            if i > j:
                raise ValueError("bad interval")
            if i < 0:
                return 0
            return self.rank(d, i, j)

        bars = []
        for d in self.degrees:
            for born in range(steps):
                for dies in range(born, steps):
                    alive_to_dies = r(d, born, dies) - r(d, born - 1, dies)
                    if dies + 1 < steps:
                        alive_past = r(d, born, dies + 1) - r(d, born - 1, dies + 1)
                    else:
                        alive_past = 0
                    count = alive_to_dies - alive_past
                    for _ in range(count):
                        bars.append(
                            {
                                "degree": d,
                                "born_step": born,
                                "dies_step": dies + 1 if dies + 1 < steps else None,
                            }
                        )
        return bars


def persistent_betti(
    steps: Sequence[FiltrationStep],
    degrees: Sequence[int],
    kind: str = "inf",
    *,
    all_pairs: bool = False,
    field=QQ,
) -> PersistentBettiTable:
    """Ranks of H_n(step_i) -> H_n(step_j) along the inclusion order.

    kind selects the Inf or the Sup complex of each step; both nest along
    the filtration, and the maps are induced by chain inclusion inside the
    common ambient of the final (largest) step.
    """
    if kind not in ("inf", "sup"):
        raise ValueError("kind must be 'inf' or 'sup'")
    steps = list(steps)
    for earlier, later in zip(steps, steps[1:]):
        if not earlier.hypergraph.edges <= later.hypergraph.edges:
            raise ValueError("steps must be nested increasingly")
    if not steps:
        raise ValueError("empty filtration")
    build = inf_complex if kind == "inf" else sup_complex
    ambient = ambient_complex(steps[-1].hypergraph, "closure", field=field)
    embedded = [build(s.hypergraph, field=field, ambient=ambient) for s in steps]
    betti_by_step = tuple(betti(e).betti for e in embedded)
    pairs = (
        [(i, j) for i in range(len(steps)) for j in range(i + 1, len(steps))]
        if all_pairs
        else [(i, i + 1) for i in range(len(steps) - 1)]
    )
    entries = []
    for d in degrees:
        for i, j in pairs:
            r = induced_homology_rank(embedded[i], embedded[j], d)
            bi = betti_by_step[i][d] if d < len(betti_by_step[i]) else 0
            bj = betti_by_step[j][d] if d < len(betti_by_step[j]) else 0
            if r > min(bi, bj):
                raise InvariantViolation(
                    f"induced rank {r} exceeds min Betti at degree {d}, steps {i}->{j}"
                )
            entries.append((d, i, j, r))
    return PersistentBettiTable(
        kind,
        tuple(degrees),
        tuple(s.representative for s in steps),
        betti_by_step,
        tuple(entries),
    )


def emptiness_threshold(sample: MetricPointSample, n: int):
    """Least radius at which the level-n hard-sphere hypergraph is empty.

    Defined for circle samples only.  Equals half the best achievable
    minimum pairwise arc distance among n points, hence never exceeds
    pi/n; level 1 never empties, giving +infinity.
    """
    if not isinstance(sample.metric, CircleMetric):
        raise ValueError("emptiness threshold is defined for circle samples")
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return math.inf
    if n > len(sample):
        # no n-subsets at all: empty from radius 0 on
        return PiValue(0) if sample.metric.exact else 0.0
    best = None
    ids = sorted(sample.ids)
    for subset in combinations(ids, n):
        worst = min(
            sample.metric.distance_key(i, j) for i, j in combinations(subset, 2)
        )
        if best is None or worst > best:
            best = worst
    if sample.metric.exact:
        return PiValue(Fraction(best) / 2)
    return float(best) / 2.0
