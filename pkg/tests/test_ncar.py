"""
NCAR Pipeline: Pairing, Farthest Points, Regions and Reassignment
"""

import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pytest

from apollonius.config import ReassignmentStrategy
from apollonius.containers import (
    OUTLIER,
    UNASSIGNED,
    DataSet,
    GroupRecord,
    NcarParams,
    Partition,
    Provenance,
    RegionForm,
    TargetPairing,
)
from apollonius.data import FIG8_PARAMS, generate_gaussian_rings, parse_generator_spec
from apollonius.density import distance_matrix
from apollonius.exceptions import CoincidentFoci, SingleTarget
from apollonius.geometry import contains
from apollonius.metrics import rand_index
from apollonius.ncar import (
    build_group_regions,
    detect_outliers,
    farthest_admissible,
    initial_assignment,
    k_sequence_diagnostic,
    pair_targets,
    reassign_uncovered,
    resolve_overlaps,
    run_ncar,
    run_ncar_detailed,
)


def _index(dataset: DataSet, point_id: int) -> int:
    return dataset.point_ids.index(point_id)


def test_fig8_targets(fig8: DataSet) -> None:
    """
    Points 1, 5 and 8 are the targets
    """
    detailed = run_ncar_detailed(fig8, FIG8_PARAMS)
    assert {fig8.point_ids[target] for target in detailed.targets} == {1, 5, 8}


def test_fig8_farthest_point_of_target_one(fig8: DataSet) -> None:
    """
    FP_1 = 4
    """
    detailed = run_ncar_detailed(fig8, FIG8_PARAMS)
    farthest = {fp.target: fp for fp in detailed.farthest}
    assert fig8.point_ids[farthest[_index(fig8, 1)].point] == 4


def test_fig8_first_group(fig8: DataSet) -> None:
    """
    G1 = {2, 3, 4} next to its target 1, all inside the circle
    """
    partition = run_ncar(fig8, FIG8_PARAMS)
    group = partition.assignments[_index(fig8, 1)]
    members = {fig8.point_ids[index] for index in partition.members(group)}
    assert members == {1, 2, 3, 4}
    for point_id in (2, 3, 4):
        assert partition.provenance[_index(fig8, point_id)] == Provenance.inside_circle


def test_fig8_outlier(fig8: DataSet) -> None:
    """
    Point 10 is the only outlier
    """
    partition = run_ncar(fig8, FIG8_PARAMS)
    assert [fig8.point_ids[index] for index in partition.outliers] == [10]
    assert partition.provenance[_index(fig8, 10)] == Provenance.outlier


def test_fig8_final_grouping(fig8: DataSet) -> None:
    """
    Three groups plus the outlier reproduce the fixture labels
    """
    partition = run_ncar(fig8, FIG8_PARAMS)
    assert partition.is_final
    assert partition.n_groups == 3
    assert partition.group_sizes() == [4, 3, 2]
    assert partition.provenance[_index(fig8, 9)] == Provenance.reassigned_uncovered
    assert rand_index(partition, fig8.labels) == 1.0


def test_fig8_regions(fig8: DataSet) -> None:
    """
    Every group's circle encloses its target
    """
    partition = run_ncar(fig8, FIG8_PARAMS)
    target_one = partition.groups[0]
    assert target_one.region.form == RegionForm.sphere_side_a
    assert target_one.region.center == pytest.approx((-9 / 28, 0.0))
    assert target_one.region.radius == pytest.approx(51 / 28)
    for group in partition.groups:
        assert group.region is not None
        assert group.region.k < 1


def test_pair_targets_orders_by_distance() -> None:
    """
    Nearest other target, sorted by pair distance
    """
    points = np.array([[0.0, 0.0], [10.0, 0.0], [10.0, 4.0]])
    pairings = pair_targets([0, 1, 2], distance_matrix(points))
    assert [(p.target, p.partner, p.pair_distance) for p in pairings] == [
        (1, 2, 4.0),
        (2, 1, 4.0),
        (0, 1, 10.0),
    ]


def test_pair_targets_needs_two_targets() -> None:
    """
    A single target cannot be paired
    """
    with pytest.raises(SingleTarget):
        pair_targets([0], np.zeros((1, 1)))


def test_pair_targets_rejects_coincident_targets() -> None:
    """
    Two targets on the same spot have no Apollonius region
    """
    with pytest.raises(CoincidentFoci):
        pair_targets([0, 1], distance_matrix(np.array([[1.0, 1.0], [1.0, 1.0]])))


def _brute_farthest(pairing: TargetPairing, dist: np.ndarray, targets: List[int], non_targets: List[int]) -> Optional[int]:
    best, best_distance = None, -math.inf
    for m in sorted(non_targets):
        to_target = dist[pairing.target, m]
        if to_target >= pairing.pair_distance:
            continue
        if any(dist[other, m] <= to_target for other in targets if other != pairing.target):
            continue
        if to_target > best_distance:
            best, best_distance = m, to_target
    return best


def test_farthest_admissible_matches_brute_force(rng: np.random.Generator) -> None:
    """
    Vectorized admissibility against a plain loop on random instances
    """
    for _ in range(200):
        n = int(rng.integers(4, 51))
        points = np.round(rng.uniform(0, 10, size=(n, 2)), 1)
        dist = distance_matrix(points)
        count = int(rng.integers(2, min(6, n - 1) + 1))
        targets = sorted(int(index) for index in rng.choice(n, size=count, replace=False))
        if any(dist[a, b] == 0 for a in targets for b in targets if a != b):
            continue
        non_targets = [index for index in range(n) if index not in targets]
        for pairing in pair_targets(targets, dist):
            fp = farthest_admissible(pairing, dist, targets, non_targets)
            assert fp.point == _brute_farthest(pairing, dist, targets, non_targets)
            if fp.point is not None:
                assert fp.distance == dist[pairing.target, fp.point]


def test_isolated_target_has_no_region() -> None:
    """
    A target with no admissible point gets no circle
    """
    points = np.array([[0.0, 0.0], [10.0, 0.0], [10.5, 0.0]])
    dist = distance_matrix(points)
    pairings = pair_targets([0, 1], dist)
    farthest = {p.target: farthest_admissible(p, dist, [0, 1], [2]) for p in pairings}
    regions = build_group_regions(pairings, farthest, points)
    assert regions[0] is None
    assert regions[1] is not None


def test_draft_queues_and_outliers(fig8: DataSet) -> None:
    """
    The draft keeps the uncovered points until reassignment
    """
    points = fig8.points
    dist = distance_matrix(points)
    targets = [0, 4, 7]
    pairings = pair_targets(targets, dist)
    non_targets = [index for index in range(fig8.n) if index not in targets]
    farthest = {p.target: farthest_admissible(p, dist, targets, non_targets) for p in pairings}
    draft = initial_assignment(build_group_regions(pairings, farthest, points), points, targets)
    assert not draft.is_final
    assert draft.uncovered == (8, 9)
    assert draft.assignments[8] == UNASSIGNED
    draft = detect_outliers(dist, targets, pairings, draft)
    assert draft.outliers == (9,)
    assert draft.uncovered == (8,)
    final = resolve_overlaps(reassign_uncovered(draft, dist, points), dist, points)
    assert final.is_final
    assert final.assignments[8] == 1


def test_nearest_center_reassignment(fig8: DataSet) -> None:
    """
    The alternative strategy still yields a final partition
    """
    params = FIG8_PARAMS.evolve(reassignment=ReassignmentStrategy.nearest_center)
    partition = run_ncar(fig8, params)
    assert partition.is_final
    assert partition.outliers == (9,)
    assert partition.assignments[8] in (1, 2)


def test_separated_blobs_are_recovered_exactly(two_blobs: DataSet) -> None:
    """
    Two blobs far apart with two targets: RI = 1 and no outliers
    """
    partition = run_ncar(two_blobs, NcarParams(target_count=2))
    assert partition.outliers == ()
    assert rand_index(partition, two_blobs.labels) == 1.0


def test_planted_outliers_are_found() -> None:
    """
    Ten far outliers are flagged, no inlier is
    """
    dataset = parse_generator_spec("blobs:3x40+10", seed=15)
    partition = run_ncar(dataset, NcarParams(target_count=3))
    outlier_code = dataset.label_names.index("outlier")
    planted = {index for index, label in enumerate(dataset.labels) if label == outlier_code}
    assert len(planted) == 10
    assert set(partition.outliers) == planted


def test_rings_analogue() -> None:
    """
    Fifteen Gaussian clusters in rings with fifteen targets
    """
    dataset = generate_gaussian_rings(15, 40)
    partition = run_ncar(dataset, NcarParams(target_count=15))
    assert partition.n_groups == 15
    assert rand_index(partition, dataset.labels) >= 0.97


def test_single_target_is_one_group(two_blobs: DataSet) -> None:
    """
    With one target every point joins one group
    """
    partition = run_ncar(two_blobs, NcarParams(target_count=1))
    assert partition.n_groups == 1
    assert set(partition.assignments) == {0}
    assert OUTLIER not in partition.assignments


def test_coincident_points_collapse_to_one_group() -> None:
    """
    All-zero distances give a single group
    """
    dataset = DataSet(name="same", points=[[1.0, 1.0]] * 5)
    partition = run_ncar(dataset)
    assert partition.n_groups == 1


def test_k_sequence_diagnostic(fig8: DataSet) -> None:
    """
    Candidates are consumed farthest first with suffix statistics
    """
    dist = distance_matrix(fig8.points)
    pairing = TargetPairing(target=0, partner=4, pair_distance=10.0)
    steps = k_sequence_diagnostic(pairing, dist, [1, 2, 3, 5, 6, 8, 9])
    assert [step.point for step in steps] == [3, 1, 2]
    ratios = [step.k for step in steps]
    assert ratios[0] == pytest.approx(1.5 / 8.5)
    assert steps[0].mean == pytest.approx(np.mean(ratios))
    assert steps[0].variance == pytest.approx(np.var(ratios, ddof=1))
    assert steps[-1].variance == 0.0
    assert steps[-1].mean == pytest.approx(ratios[-1])


def test_k_sequence_on_a_line() -> None:
    """
    Points at 0.5 and 0.6 between targets at 0 and 1: k runs 1.5 then 1.0
    """
    points = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, 0.0], [0.6, 0.0]])
    dist = distance_matrix(points)
    pairing = TargetPairing(target=0, partner=1, pair_distance=1.0)
    steps = k_sequence_diagnostic(pairing, dist, [2, 3])
    assert [step.point for step in steps] == [3, 2]
    assert [step.k for step in steps] == pytest.approx([1.5, 1.0])
    assert steps[0].mean == pytest.approx(1.25)
    assert steps[0].variance == pytest.approx(0.125)
    assert steps[1].variance == 0.0


def test_duplicated_peak_is_one_target(duplicate_peak: DataSet) -> None:
    """
    Two copies of the densest point never become two targets
    """
    for target_count in (2, None):
        partition = run_ncar(duplicate_peak, NcarParams(p=0.3, target_count=target_count))
        assert partition.targets == (0, 5)
        assert partition.assignments == (0, 0, 0, 0, 0, 1, 1, 1, 1)
        assert partition.provenance[1] == Provenance.inside_circle


def _draft(
    coordinates: Sequence[float],
    targets: Sequence[int],
    members: Dict[int, int],
    uncovered: Sequence[int] = (),
    overlaps: Optional[Dict[int, Tuple[int, ...]]] = None,
) -> Tuple[Partition, np.ndarray, np.ndarray]:
    """
    Draft partition on a line: every group is anchored at its target
    """
    points = np.asarray(coordinates, dtype=float).reshape(-1, 1)
    assignments = [UNASSIGNED] * points.shape[0]
    provenance: List[Optional[Provenance]] = [None] * points.shape[0]
    for group_id, target in enumerate(targets):
        assignments[target] = group_id
        provenance[target] = Provenance.target
    for index, group_id in members.items():
        assignments[index] = group_id
        provenance[index] = Provenance.inside_circle
    draft = Partition(
        assignments=assignments,
        groups=[
            GroupRecord(group_id=group_id, target=target)
            for group_id, target in enumerate(targets)
        ],
        provenance=provenance,
        uncovered=list(uncovered),
        overlaps=overlaps or {},
    )
    return draft, distance_matrix(points), points


def test_overlap_goes_to_the_smaller_mean_distance() -> None:
    """
    Mean distances 0.5 and 2.0: the first group wins
    """
    draft, dist, points = _draft([0.0, 2.5, 0.5], targets=[0, 1], members={}, overlaps={2: (0, 1)})
    final = resolve_overlaps(draft, dist, points)
    assert final.assignments[2] == 0
    assert final.provenance[2] == Provenance.reassigned_overlap
    assert final.is_final


def test_overlap_only_among_covering_groups() -> None:
    """
    A nearer group that does not cover the point is not a candidate
    """
    draft, dist, points = _draft(
        [0.0, 3.0, 1.0, 10.0], targets=[0, 1, 3], members={}, overlaps={2: (1, 2)}
    )
    final = resolve_overlaps(draft, dist, points)
    assert final.assignments[2] == 1


def test_mean_distance_tie_goes_to_the_nearer_center() -> None:
    """
    Equal mean distances of 2; the second group's target is nearer
    """
    draft, dist, points = _draft(
        [0.0, 4.0, 3.0, -1.0, 2.0], targets=[0, 2], members={1: 0, 3: 1}, uncovered=[4]
    )
    final = reassign_uncovered(draft, dist, points)
    assert final.assignments[4] == 1
    assert final.provenance[4] == Provenance.reassigned_uncovered


def test_symmetric_point_goes_to_the_lower_group() -> None:
    """
    Exactly between two mirrored groups: group 0
    """
    draft, dist, points = _draft([1.0, -1.0, 0.0], targets=[0, 1], members={}, overlaps={2: (0, 1)})
    assert resolve_overlaps(draft, dist, points).assignments[2] == 0


def test_one_group_takes_every_uncovered_point() -> None:
    """
    With a single group there is no choice
    """
    draft, dist, points = _draft([0.0, 1.0, 5.0, 100.0], targets=[0], members={}, uncovered=[1, 2, 3])
    final = reassign_uncovered(draft, dist, points)
    assert final.assignments == (0, 0, 0, 0)
    assert final.uncovered == ()


def test_reassignment_uses_frozen_members() -> None:
    """
    A point reassigned earlier in the pass does not pull later points along
    """
    draft, dist, points = _draft(
        [0.0, 10.0, 5.5, 4.9], targets=[0, 1], members={}, uncovered=[2, 3]
    )
    final = reassign_uncovered(draft, dist, points)
    assert final.assignments[2] == 1
    assert final.assignments[3] == 0


def _random_points(rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(0, 10, size=(int(rng.integers(10, 41)), 2))


def test_every_point_gets_one_final_label(rng: np.random.Generator) -> None:
    """
    Group sizes and outliers add up to n
    """
    for _ in range(30):
        points = _random_points(rng)
        partition = run_ncar(DataSet(name="random", points=points), NcarParams(p=0.1, target_count=3))
        assert partition.is_final
        assert UNASSIGNED not in partition.assignments
        assert sum(partition.group_sizes()) + len(partition.outliers) == points.shape[0]
        assert partition.n_groups == 3


def test_inside_circle_points_lie_in_their_region(rng: np.random.Generator) -> None:
    """
    InsideCircle points are covered by their own group's region
    """
    for _ in range(30):
        points = _random_points(rng)
        partition = run_ncar(DataSet(name="random", points=points), NcarParams(p=0.1, target_count=3))
        for index, tag in enumerate(partition.provenance):
            if tag == Provenance.inside_circle:
                region = partition.groups[partition.assignments[index]].region
                assert region is not None
                assert contains(region, points[index])


def test_runs_are_deterministic(rng: np.random.Generator) -> None:
    """
    Identical input gives identical partitions
    """
    dataset = DataSet(name="random", points=_random_points(rng))
    params = NcarParams(p=0.1, target_count=4)
    assert run_ncar(dataset, params) == run_ncar(dataset, params)


def _structure(partition: Partition, original: Sequence[int]) -> Tuple[set, set]:
    groups = {
        frozenset(original[index] for index in partition.members(group.group_id))
        for group in partition.groups
    }
    return groups, {original[index] for index in partition.outliers}


def test_permuted_points_give_the_same_groups(rng: np.random.Generator) -> None:
    """
    Reordering the input relabels the groups and nothing else
    """
    for _ in range(20):
        points = _random_points(rng)
        n = points.shape[0]
        permutation = rng.permutation(n)
        params = NcarParams(p=0.1, target_count=3)
        partition = run_ncar(DataSet(name="random", points=points), params)
        permuted = run_ncar(DataSet(name="permuted", points=points[permutation]), params)
        assert _structure(permuted, permutation.tolist()) == _structure(partition, list(range(n)))


@pytest.mark.parametrize("factor", [1.5, 3.0, 10.0])
def test_moving_an_outlier_away_keeps_it_an_outlier(factor: float, fig8: DataSet) -> None:
    """
    Point 10 pushed farther from every target stays an outlier
    """
    points = np.array(fig8.points, dtype=float)
    points[_index(fig8, 10)] *= factor
    moved = fig8.evolve(points=points)
    partition = run_ncar(moved, FIG8_PARAMS)
    assert _index(fig8, 10) in partition.outliers
