"""Finite-box experiments on coarse separation in the integer lattice.

A scenario fixes an ambient rank n, a subset of ℤⁿ (an integer
subgroup given by generating vectors, or a named catalog shape), a box
[-R, R]ⁿ, a thickening radius L and a depth D.  The experiment removes
every box point within ℓ¹-distance L of the subset, splits the rest
into unit-step components, and counts the components that still reach
ℓ¹-distance at least D from the subset.

These are desk-scale proxies on a finite box, not proofs about the
infinite lattice; every report carries its scenario and says so.

All distances are ℓ¹ (the word metric of ℤⁿ on standard generators)
and all arithmetic is integer-exact.  Distances are measured to the
subset points inside the box; the ℓ¹ metric is geodesically convex on
the box, so the chamfer transform below computes them exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
from scipy import ndimage

from .errors import InvalidScenarioError, ScenarioTooLargeError

MAX_AMBIENT_RANK = 4
MAX_BOX_RADIUS = 64
MAX_BOX_CELLS = 2_000_000

CATALOG_TAGS = ("half-line", "half-hyperplane", "hyperplane")

SEPARATES = "separates"
DOES_NOT_SEPARATE = "does-not-separate"

PROXY_NOTE = (
    "finite-box proxy: components and depths are measured on the box "
    "[-R, R]^n only and prove nothing about the infinite lattice"
)

Point = tuple[int, ...]


@dataclass(frozen=True)
class SubgroupSpec:
    """Subset = the subgroup of ℤⁿ generated by integer vectors."""

    generators: tuple[Point, ...]

    def __init__(self, generators):
        gens = tuple(tuple(int(x) for x in v) for v in generators)
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class CatalogSpec:
    """Subset drawn from the fixed catalog of named shapes.

    half-line        {(x, 0, ..., 0) : x >= 0}
    half-hyperplane  {x : x_n = 0, x_1 >= 0}
    hyperplane       {x : x_n = 0}
    """

    tag: str


SubsetSpec = Union[SubgroupSpec, CatalogSpec]


@dataclass(frozen=True)
class LatticeScenario:
    ambient_rank: int
    subset_spec: SubsetSpec
    box_radius: int
    thickening: int = 1
    depth: int = 8

    def __post_init__(self):
        n, R, L, D = self.ambient_rank, self.box_radius, self.thickening, self.depth
        if not 1 <= n <= MAX_AMBIENT_RANK:
            raise InvalidScenarioError(
                f"ambient rank must be between 1 and {MAX_AMBIENT_RANK}, got {n}"
            )
        if not 1 <= R <= MAX_BOX_RADIUS:
            raise InvalidScenarioError(
                f"box radius must be between 1 and {MAX_BOX_RADIUS}, got {R}"
            )
        if L < 0:
            raise InvalidScenarioError(f"thickening must be >= 0, got {L}")
        if D < 1:
            raise InvalidScenarioError(f"depth must be >= 1, got {D}")
        if D + L >= R:
            raise InvalidScenarioError(
                f"need depth + thickening < box radius ({D} + {L} >= {R}); "
                "deep components must be witnessable inside the box"
            )
        if isinstance(self.subset_spec, SubgroupSpec):
            for v in self.subset_spec.generators:
                if len(v) != n:
                    raise InvalidScenarioError(
                        f"generator {v} has length {len(v)}, ambient rank is {n}"
                    )
        elif isinstance(self.subset_spec, CatalogSpec):
            if self.subset_spec.tag not in CATALOG_TAGS:
                raise InvalidScenarioError(
                    f"unknown catalog tag {self.subset_spec.tag!r}; "
                    f"known: {', '.join(CATALOG_TAGS)}"
                )
        else:
            raise InvalidScenarioError("subset_spec must be a subgroup or a catalog entry")
        if (2 * R + 1) ** n > MAX_BOX_CELLS:
            raise ScenarioTooLargeError(
                f"box has {(2 * R + 1) ** n} cells, limit is {MAX_BOX_CELLS}"
            )


@dataclass(frozen=True)
class SeparationReport:
    total_components: int
    deep_components: int
    deep_witnesses: tuple[Point, ...]
    scenario: LatticeScenario
    note: str = PROXY_NOTE


def _echelon_basis(generators: Sequence[Point]) -> list[list[int]]:
    """Integer row-echelon basis of the subgroup the generators span.

    Plain integer Gaussian elimination with gcd steps; pivots positive,
    rows ordered by pivot column.  Same subgroup, triangular shape.
    """
    rows = [list(v) for v in generators if any(v)]
    if not rows:
        return []
    width = len(rows[0])
    basis: list[list[int]] = []
    for col in range(width):
        pool = [r for r in rows if r[col] != 0]
        if not pool:
            continue
        pivot = pool[0]
        for other in pool[1:]:
            # euclidean row steps; |other[col]| strictly shrinks
            while other[col] != 0:
                q = pivot[col] // other[col]
                for i in range(width):
                    pivot[i] -= q * other[i]
                pivot, other = other, pivot
        rows = [r for r in rows if r is not pivot and any(r)]
        if pivot[col] < 0:
            pivot[:] = [-x for x in pivot]
        basis.append(pivot)
    return basis


def _subgroup_points(spec: SubgroupSpec, n: int, radius: int) -> list[Point]:
    """All subgroup elements inside [-R, R]ⁿ.

    Enumerates integer combinations of the echelon basis.  Because the
    basis is triangular, the coefficient of each basis vector is pinned
    to the exact integer interval that keeps its pivot coordinate
    inside the box, so each point is produced exactly once.
    """
    basis = _echelon_basis(spec.generators)
    points: list[Point] = []
    partial = [0] * n

    def walk(level: int, fixed_below: int) -> None:
        if level == len(basis):
            if all(-radius <= x <= radius for x in partial):
                points.append(tuple(partial))
            return
        vec = basis[level]
        pivot_col = next(i for i, x in enumerate(vec) if x)
        # columns before this pivot are final from here on
        if any(not -radius <= partial[i] <= radius for i in range(fixed_below, pivot_col)):
            return
        step = vec[pivot_col]
        # step > 0: ceil((-R - p)/step) and floor((R - p)/step)
        lo = -((radius + partial[pivot_col]) // step)
        hi = (radius - partial[pivot_col]) // step
        for c in range(lo, hi + 1):
            for i in range(pivot_col, n):
                partial[i] += c * vec[i]
            walk(level + 1, pivot_col)
            for i in range(pivot_col, n):
                partial[i] -= c * vec[i]

    walk(0, 0)
    return points


def _subset_mask(sc: LatticeScenario) -> np.ndarray:
    n, R = sc.ambient_rank, sc.box_radius
    shape = (2 * R + 1,) * n
    mask = np.zeros(shape, dtype=bool)
    spec = sc.subset_spec
    if isinstance(spec, SubgroupSpec):
        for p in _subgroup_points(spec, n, R):
            mask[tuple(x + R for x in p)] = True
        return mask
    tag = spec.tag
    if tag == "half-line":
        mask[(slice(R, None),) + (R,) * (n - 1)] = True
    elif tag == "hyperplane":
        mask[(slice(None),) * (n - 1) + (R,)] = True
    elif tag == "half-hyperplane":
        mask[(slice(R, None),) + (slice(None),) * (n - 2) + (R,)] = True
    return mask


def deep_components(sc: LatticeScenario) -> SeparationReport:
    """Count complement components reaching depth D off the subset.

    Removes every box point at ℓ¹-distance <= L from the subset, labels
    what is left by unit steps, and reports the components containing a
    point at distance >= D, each with its lexicographically smallest
    witness point.
    """
    n, R = sc.ambient_rank, sc.box_radius
    subset = _subset_mask(sc)
    # chamfer transform with the taxicab metric is exact ℓ¹ here
    dist = ndimage.distance_transform_cdt(~subset, metric="taxicab")
    keep = dist > sc.thickening
    labels, total = ndimage.label(keep, structure=ndimage.generate_binary_structure(n, 1))
    deep_mask = keep & (dist >= sc.depth)
    deep_ids = np.unique(labels[deep_mask])
    witnesses = []
    for lab in deep_ids:
        cells = np.argwhere((labels == lab) & deep_mask)
        first = min(map(tuple, cells))
        witnesses.append(tuple(int(x) - R for x in first))
    witnesses.sort()
    return SeparationReport(
        total_components=int(total),
        deep_components=int(len(deep_ids)),
        deep_witnesses=tuple(witnesses),
        scenario=sc,
    )


def standard_box_radius(n: int) -> int:
    return 32 if n <= 2 else 16 if n == 3 else 8


def standard_rank_scenario(
    n: int,
    k: int,
    box_radius: Optional[int] = None,
    thickening: int = 1,
    depth: Optional[int] = None,
) -> LatticeScenario:
    """Scenario for the rank-k coordinate subgroup of ℤⁿ with the
    standard box defaults (R = 32 / 16 / 8 by rank, L = 1, D = R / 4)."""
    if not 0 <= k <= n:
        raise InvalidScenarioError(f"subgroup rank must be between 0 and {n}, got {k}")
    R = standard_box_radius(n) if box_radius is None else box_radius
    D = R // 4 if depth is None else depth
    gens = tuple(
        tuple(1 if j == i else 0 for j in range(n)) for i in range(k)
    )
    return LatticeScenario(n, SubgroupSpec(gens), R, thickening, D)


def check_rank_separation(
    n: int,
    k: int,
    box_radius: Optional[int] = None,
    thickening: int = 1,
    depth: Optional[int] = None,
) -> str:
    """Box verdict on whether the rank-k coordinate subgroup coarsely
    separates ℤⁿ: ``separates`` iff at least two deep components
    survive.  Expected pattern: separates exactly when k = n - 1.

    >>> check_rank_separation(2, 1)
    'separates'
    >>> check_rank_separation(2, 2)
    'does-not-separate'
    """
    report = deep_components(standard_rank_scenario(n, k, box_radius, thickening, depth))
    return SEPARATES if report.deep_components >= 2 else DOES_NOT_SEPARATE


def quasi_density_scenario(
    n: int,
    subset_tag: str = "half-hyperplane",
    box_radius: Optional[int] = None,
    thickening: int = 1,
    depth: Optional[int] = None,
) -> LatticeScenario:
    if n < 2:
        raise InvalidScenarioError("quasi-density experiments need ambient rank >= 2")
    R = standard_box_radius(n) if box_radius is None else box_radius
    D = R // 4 if depth is None else depth
    return LatticeScenario(n, CatalogSpec(subset_tag), R, thickening, D)


def quasi_density_check(
    n: int,
    subset_tag: str = "half-hyperplane",
    box_radius: Optional[int] = None,
    thickening: int = 1,
    depth: Optional[int] = None,
) -> str:
    """Box verdict for a catalog subset of the last-coordinate
    hyperplane.  The default half-hyperplane misses half the plane, is
    not quasi-dense in it, and should leave at most one deep component;
    the full hyperplane tag gives the separating control case.
    """
    report = deep_components(
        quasi_density_scenario(n, subset_tag, box_radius, thickening, depth)
    )
    return SEPARATES if report.deep_components >= 2 else DOES_NOT_SEPARATE


def scenario_to_dict(sc: LatticeScenario) -> dict:
    if isinstance(sc.subset_spec, SubgroupSpec):
        subset = {
            "kind": "subgroup",
            "generators": [list(v) for v in sc.subset_spec.generators],
        }
    else:
        subset = {"kind": "catalog", "tag": sc.subset_spec.tag}
    return {
        "ambient_rank": sc.ambient_rank,
        "subset_spec": subset,
        "box_radius": sc.box_radius,
        "thickening": sc.thickening,
        "depth": sc.depth,
    }


def scenario_from_dict(data: dict) -> LatticeScenario:
    if not isinstance(data, dict):
        raise InvalidScenarioError("scenario must be a JSON object")
    missing = {"ambient_rank", "subset_spec", "box_radius"} - set(data)
    if missing:
        raise InvalidScenarioError(f"scenario is missing fields: {', '.join(sorted(missing))}")
    raw = data["subset_spec"]
    if not isinstance(raw, dict) or "kind" not in raw:
        raise InvalidScenarioError("subset_spec must be an object with a 'kind' field")
    if raw["kind"] == "subgroup":
        gens = raw.get("generators")
        if not isinstance(gens, list) or not all(
            isinstance(v, list) and all(isinstance(x, int) for x in v) for v in gens
        ):
            raise InvalidScenarioError("subgroup generators must be lists of integers")
        spec: SubsetSpec = SubgroupSpec(tuple(tuple(v) for v in gens))
    elif raw["kind"] == "catalog":
        spec = CatalogSpec(str(raw.get("tag", "")))
    else:
        raise InvalidScenarioError(f"unknown subset kind {raw['kind']!r}")
    try:
        n = int(data["ambient_rank"])
        R = int(data["box_radius"])
        L = int(data.get("thickening", 1))
        D = int(data.get("depth", max(1, R // 4)))
    except (TypeError, ValueError) as exc:
        raise InvalidScenarioError(f"scenario fields must be integers: {exc}") from None
    return LatticeScenario(n, spec, R, L, D)


def report_to_dict(report: SeparationReport) -> dict:
    return {
        "total_components": report.total_components,
        "deep_components": report.deep_components,
        "deep_witnesses": [list(p) for p in report.deep_witnesses],
        "scenario": scenario_to_dict(report.scenario),
        "note": report.note,
    }
