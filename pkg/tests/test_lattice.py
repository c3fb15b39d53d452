"""Finite-box separation experiments, cross-checked against a plain
breadth-first oracle on the same grid."""

from __future__ import annotations

import random

import pytest

from conftest import bfs_distances, box_points, grid_components
from raagsplit.errors import InvalidScenarioError, ScenarioTooLargeError
from raagsplit.lattice import (
    DOES_NOT_SEPARATE,
    SEPARATES,
    CatalogSpec,
    LatticeScenario,
    SubgroupSpec,
    _subgroup_points,
    check_rank_separation,
    deep_components,
    quasi_density_check,
    quasi_density_scenario,
    report_to_dict,
    scenario_from_dict,
    scenario_to_dict,
    standard_box_radius,
    standard_rank_scenario,
)


def oracle_counts(n, radius, thickening, depth, subset):
    """Component and deep-component counts straight from BFS."""
    dist = bfs_distances(n, radius, set(subset))
    alive = {p for p in box_points(n, radius) if dist[p] > thickening}
    comps = grid_components(alive)
    deep = [c for c in comps if any(dist[p] >= depth for p in c)]
    return comps, dist, len(comps), len(deep)


def check_against_oracle(sc, subset):
    report = deep_components(sc)
    comps, dist, total, deep = oracle_counts(
        sc.ambient_rank, sc.box_radius, sc.thickening, sc.depth, subset
    )
    assert report.total_components == total
    assert report.deep_components == deep
    assert len(report.deep_witnesses) == deep
    assert list(report.deep_witnesses) == sorted(report.deep_witnesses)
    homes = []
    for p in report.deep_witnesses:
        assert dist[p] >= sc.depth
        home = next(i for i, c in enumerate(comps) if p in c)
        homes.append(home)
    assert len(set(homes)) == len(homes)
    return report


class TestFrozenExamples:
    def test_line_in_plane(self):
        sc = LatticeScenario(2, SubgroupSpec(((1, 0),)), 32, 1, 8)
        report = deep_components(sc)
        assert report.deep_components == 2
        assert report.total_components == 2

    def test_line_in_three_space(self):
        sc = LatticeScenario(3, SubgroupSpec(((1, 0, 0),)), 16, 1, 6)
        assert deep_components(sc).deep_components == 1

    def test_diagonal_line(self):
        sc = LatticeScenario(2, SubgroupSpec(((1, 1),)), 32, 1, 8)
        assert deep_components(sc).deep_components == 2


class TestOracleCrossCheck:
    def test_axis_line(self):
        sc = LatticeScenario(2, SubgroupSpec(((1, 0),)), 10, 1, 2)
        check_against_oracle(sc, {(x, 0) for x in range(-10, 11)})

    def test_diagonal(self):
        sc = LatticeScenario(2, SubgroupSpec(((1, 1),)), 9, 1, 3)
        check_against_oracle(sc, {(k, k) for k in range(-9, 10)})

    def test_sparse_line_with_zero_thickening(self):
        # even points only; the odd gaps join the two half-planes
        sc = LatticeScenario(2, SubgroupSpec(((2, 0),)), 8, 0, 2)
        report = check_against_oracle(sc, {(x, 0) for x in range(-8, 9, 2)})
        assert report.total_components == 1

    def test_origin_on_the_line(self):
        sc = LatticeScenario(1, SubgroupSpec(()), 10, 1, 2)
        report = check_against_oracle(sc, {(0,)})
        assert report.deep_components == 2

    def test_axis_line_in_three_space(self):
        sc = LatticeScenario(3, SubgroupSpec(((1, 0, 0),)), 5, 1, 2)
        report = check_against_oracle(sc, {(x, 0, 0) for x in range(-5, 6)})
        assert report.deep_components == 1

    def test_checkerboard_sublattice(self):
        sc = LatticeScenario(2, SubgroupSpec(((1, 1), (1, -1))), 7, 0, 2)
        subset = {
            (x, y)
            for x in range(-7, 8)
            for y in range(-7, 8)
            if (x + y) % 2 == 0
        }
        report = check_against_oracle(sc, subset)
        assert report.deep_components == 0

    def test_catalog_half_line(self):
        sc = LatticeScenario(2, CatalogSpec("half-line"), 10, 1, 2)
        report = check_against_oracle(sc, {(x, 0) for x in range(0, 11)})
        assert report.total_components == 1

    def test_catalog_hyperplane_plane(self):
        sc = LatticeScenario(2, CatalogSpec("hyperplane"), 10, 1, 2)
        report = check_against_oracle(sc, {(x, 0) for x in range(-10, 11)})
        assert report.deep_components == 2

    def test_catalog_half_hyperplane_three_space(self):
        sc = LatticeScenario(3, CatalogSpec("half-hyperplane"), 6, 1, 2)
        subset = {(x, y, 0) for x in range(0, 7) for y in range(-6, 7)}
        report = check_against_oracle(sc, subset)
        assert report.deep_components == 1

    def test_catalog_hyperplane_three_space(self):
        sc = LatticeScenario(3, CatalogSpec("hyperplane"), 6, 1, 2)
        subset = {(x, y, 0) for x in range(-6, 7) for y in range(-6, 7)}
        report = check_against_oracle(sc, subset)
        assert report.deep_components == 2

    def test_full_lattice_leaves_nothing(self):
        sc = LatticeScenario(2, SubgroupSpec(((1, 0), (0, 1))), 6, 1, 2)
        report = check_against_oracle(sc, {p for p in box_points(2, 6)})
        assert report.total_components == 0


class TestSubgroupPoints:
    def test_axis(self):
        pts = _subgroup_points(SubgroupSpec(((1, 0),)), 2, 5)
        assert set(pts) == {(x, 0) for x in range(-5, 6)}

    def test_redundant_generators(self):
        pts = _subgroup_points(SubgroupSpec(((2, 0), (-2, 0))), 2, 5)
        assert set(pts) == {(x, 0) for x in range(-4, 5, 2)}

    def test_zero_generator(self):
        assert set(_subgroup_points(SubgroupSpec(((0, 0),)), 2, 3)) == {(0, 0)}

    def test_no_generators(self):
        assert set(_subgroup_points(SubgroupSpec(()), 2, 3)) == {(0, 0)}

    def test_dependent_spanning_set(self):
        pts = _subgroup_points(SubgroupSpec(((1, 0), (0, 1), (1, 1))), 2, 2)
        assert set(pts) == set(box_points(2, 2))

    def test_index_two_sublattice(self):
        pts = _subgroup_points(SubgroupSpec(((1, 1), (1, -1))), 2, 3)
        assert set(pts) == {p for p in box_points(2, 3) if (p[0] + p[1]) % 2 == 0}

    def test_one_dimensional_gcd(self):
        assert set(_subgroup_points(SubgroupSpec(((3,),)), 1, 7)) == {
            (x,) for x in range(-6, 7, 3)
        }
        assert set(_subgroup_points(SubgroupSpec(((2,), (3,))), 1, 4)) == {
            (x,) for x in range(-4, 5)
        }

    def test_generator_outside_box(self):
        assert set(_subgroup_points(SubgroupSpec(((100, 0),)), 2, 10)) == {(0, 0)}

    def test_no_duplicates(self):
        pts = _subgroup_points(SubgroupSpec(((1, 1), (2, 0))), 2, 6)
        assert len(pts) == len(set(pts))

    def test_random_full_rank_pairs(self):
        rng = random.Random(2024)
        trials = 0
        while trials < 60:
            g1 = (rng.randint(-3, 3), rng.randint(-3, 3))
            g2 = (rng.randint(-3, 3), rng.randint(-3, 3))
            det = g1[0] * g2[1] - g1[1] * g2[0]
            if det == 0:
                continue
            trials += 1
            radius = rng.randint(2, 9)
            expected = set()
            for p in box_points(2, radius):
                c1 = p[0] * g2[1] - p[1] * g2[0]
                c2 = g1[0] * p[1] - g1[1] * p[0]
                if c1 % det == 0 and c2 % det == 0:
                    expected.add(p)
            got = set(_subgroup_points(SubgroupSpec((g1, g2)), 2, radius))
            assert got == expected, (g1, g2, radius)


class TestVerdicts:
    @pytest.mark.parametrize(
        "n,k,verdict",
        [
            (1, 0, SEPARATES),
            (1, 1, DOES_NOT_SEPARATE),
            (2, 1, SEPARATES),
            (2, 0, DOES_NOT_SEPARATE),
            (2, 2, DOES_NOT_SEPARATE),
            (3, 2, SEPARATES),
            (3, 1, DOES_NOT_SEPARATE),
            (4, 3, SEPARATES),
            (4, 2, DOES_NOT_SEPARATE),
            (4, 1, DOES_NOT_SEPARATE),
        ],
    )
    def test_rank_table(self, n, k, verdict):
        assert check_rank_separation(n, k) == verdict

    def test_rank_out_of_range(self):
        with pytest.raises(InvalidScenarioError):
            check_rank_separation(2, 3)
        with pytest.raises(InvalidScenarioError):
            check_rank_separation(2, -1)

    def test_standard_defaults(self):
        sc = standard_rank_scenario(2, 1)
        assert sc.box_radius == 32 and sc.thickening == 1 and sc.depth == 8
        assert sc.subset_spec == SubgroupSpec(((1, 0),))
        assert standard_box_radius(3) == 16 and standard_box_radius(4) == 8


class TestQuasiDensity:
    def test_half_hyperplane_does_not_separate(self):
        assert quasi_density_check(2) == DOES_NOT_SEPARATE

    def test_full_hyperplane_control(self):
        assert quasi_density_check(2, "hyperplane") == SEPARATES

    def test_three_space_half_plane(self):
        assert quasi_density_check(3) == DOES_NOT_SEPARATE

    def test_half_line(self):
        assert quasi_density_check(2, "half-line") == DOES_NOT_SEPARATE

    def test_needs_rank_two(self):
        with pytest.raises(InvalidScenarioError):
            quasi_density_scenario(1)

    def test_unknown_tag(self):
        with pytest.raises(InvalidScenarioError):
            quasi_density_scenario(2, "torus")


class TestInvariants:
    def test_monotone_in_thickening(self):
        counts = []
        for L in range(0, 4):
            sc = standard_rank_scenario(2, 1, box_radius=16, thickening=L, depth=4)
            counts.append(deep_components(sc).deep_components)
        assert counts == sorted(counts, reverse=True)

    def test_mirror_symmetry_plane(self):
        sc = standard_rank_scenario(2, 1, box_radius=8, thickening=1, depth=2)
        subset = {(x, 0) for x in range(-8, 9)}
        comps, dist, _, _ = oracle_counts(2, 8, 1, 2, subset)
        deep = [c for c in comps if any(dist[p] >= 2 for p in c)]
        mirrored = {
            frozenset(p[:-1] + (-p[-1],) for p in c) for c in deep
        }
        assert mirrored == {frozenset(c) for c in deep}
        sizes = sorted(len(c) for c in deep)
        assert sizes == sorted(len(c) for c in mirrored)

    def test_mirror_symmetry_three_space(self):
        sc = standard_rank_scenario(3, 2, box_radius=5, thickening=1, depth=2)
        subset = {(x, y, 0) for x in range(-5, 6) for y in range(-5, 6)}
        check_against_oracle(sc, subset)
        comps, dist, _, _ = oracle_counts(3, 5, 1, 2, subset)
        deep = {
            frozenset(c) for c in comps if any(dist[p] >= 2 for p in c)
        }
        mirrored = {
            frozenset(p[:-1] + (-p[-1],) for p in c) for c in deep
        }
        assert mirrored == deep and len(deep) == 2

    def test_determinism(self):
        sc = LatticeScenario(2, SubgroupSpec(((1, 1),)), 12, 1, 3)
        assert deep_components(sc) == deep_components(sc)
        assert check_rank_separation(3, 2) == check_rank_separation(3, 2)


class TestScenarioValidation:
    def test_rank_bounds(self):
        with pytest.raises(InvalidScenarioError):
            LatticeScenario(0, SubgroupSpec(()), 8, 1, 2)
        with pytest.raises(InvalidScenarioError):
            LatticeScenario(5, SubgroupSpec(()), 8, 1, 2)

    def test_radius_bounds(self):
        with pytest.raises(InvalidScenarioError):
            LatticeScenario(2, SubgroupSpec(()), 0, 1, 2)
        with pytest.raises(InvalidScenarioError):
            LatticeScenario(2, SubgroupSpec(()), 65, 1, 8)

    def test_depth_plus_thickening_needs_margin(self):
        with pytest.raises(InvalidScenarioError):
            LatticeScenario(2, SubgroupSpec(((1, 0),)), 8, 4, 4)

    def test_negative_thickening(self):
        with pytest.raises(InvalidScenarioError):
            LatticeScenario(2, SubgroupSpec(()), 8, -1, 2)

    def test_zero_depth(self):
        with pytest.raises(InvalidScenarioError):
            LatticeScenario(2, SubgroupSpec(()), 8, 1, 0)

    def test_generator_length_mismatch(self):
        with pytest.raises(InvalidScenarioError):
            LatticeScenario(2, SubgroupSpec(((1, 0, 0),)), 8, 1, 2)

    def test_cell_cap(self):
        with pytest.raises(ScenarioTooLargeError):
            LatticeScenario(4, SubgroupSpec(((1, 0, 0, 0),)), 40, 1, 8)

    def test_subset_spec_type(self):
        with pytest.raises(InvalidScenarioError):
            LatticeScenario(2, "half-line", 8, 1, 2)


class TestSerialization:
    def test_subgroup_round_trip(self):
        sc = LatticeScenario(3, SubgroupSpec(((1, 0, 0), (0, 2, 0))), 10, 2, 3)
        assert scenario_from_dict(scenario_to_dict(sc)) == sc

    def test_catalog_round_trip(self):
        sc = LatticeScenario(2, CatalogSpec("hyperplane"), 12, 1, 3)
        assert scenario_from_dict(scenario_to_dict(sc)) == sc

    def test_defaults_applied(self):
        sc = scenario_from_dict(
            {
                "ambient_rank": 2,
                "subset_spec": {"kind": "subgroup", "generators": [[1, 0]]},
                "box_radius": 20,
            }
        )
        assert sc.thickening == 1 and sc.depth == 5

    def test_missing_field(self):
        with pytest.raises(InvalidScenarioError):
            scenario_from_dict({"ambient_rank": 2, "box_radius": 8})

    def test_unknown_kind(self):
        with pytest.raises(InvalidScenarioError):
            scenario_from_dict(
                {
                    "ambient_rank": 2,
                    "subset_spec": {"kind": "sphere"},
                    "box_radius": 8,
                }
            )

    def test_bad_generator_payload(self):
        with pytest.raises(InvalidScenarioError):
            scenario_from_dict(
                {
                    "ambient_rank": 2,
                    "subset_spec": {"kind": "subgroup", "generators": [["a", 0]]},
                    "box_radius": 8,
                }
            )

    def test_report_payload(self):
        sc = LatticeScenario(2, SubgroupSpec(((1, 0),)), 10, 1, 2)
        payload = report_to_dict(deep_components(sc))
        assert payload["deep_components"] == 2
        assert payload["scenario"]["box_radius"] == 10
        assert all(isinstance(p, list) for p in payload["deep_witnesses"])
        assert "proxy" in payload["note"] or "box" in payload["note"]
