"""
Neighborhood Construction by Apollonius Regions

The pipeline runs in three steps: target points are chosen from the density
profile, every target gets an Apollonius region fixed by its farthest admissible
point, and the points left uncovered or covered twice are reassigned.
"""

import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from apollonius.config import ReassignmentStrategy
from apollonius.containers import (
    OUTLIER,
    UNASSIGNED,
    ApolloniusRegion,
    DataSet,
    FarthestPoint,
    GroupRecord,
    KSequenceStep,
    NcarParams,
    NcarResult,
    Partition,
    Point,
    Provenance,
    TargetPairing,
)
from apollonius.density import density_profile, distance_matrix, rank_by_score, select_targets
from apollonius.exceptions import CoincidentFoci, EmptySelection, SingleTarget
from apollonius.geometry import apollonius_region, covered_mask, ratio

logger = logging.getLogger(__name__)


def pair_targets(targets: Sequence[int], dist: np.ndarray) -> List[TargetPairing]:
    """
    Pair every Target with its Nearest Other Target

    Parameters
    ----------
    targets: Sequence[int]
    dist: np.ndarray

    Returns
    -------
    List[TargetPairing]
        Sorted by ascending pair distance, then by target index
    """
    ordered = sorted(set(targets))
    if len(ordered) < 2:  # noqa: PLR2004
        raise SingleTarget("a single target point forms a single group")
    pairings: List[TargetPairing] = []
    for target in ordered:
        others = [other for other in ordered if other != target]
        distances = dist[target, others]
        partner = others[int(np.argmin(distances))]
        pair_distance = float(dist[target, partner])
        if pair_distance <= 0:
            raise CoincidentFoci(f"targets {target} and {partner} coincide")
        pairings.append(
            TargetPairing(target=target, partner=partner, pair_distance=pair_distance)
        )
    pairings.sort(key=lambda pairing: (pairing.pair_distance, pairing.target))
    for pairing in pairings:
        logger.debug(
            "Target %s pairs with %s at distance %.6g",
            pairing.target,
            pairing.partner,
            pairing.pair_distance,
        )
    return pairings


def farthest_admissible(
    pairing: TargetPairing,
    dist: np.ndarray,
    targets: Sequence[int],
    non_targets: Sequence[int],
) -> FarthestPoint:
    """
    Farthest Non-Target Point that Still Belongs to a Target

    A point is admissible when it is closer to the target than the target's
    partner is, and closer to the target than to any other target.

    Parameters
    ----------
    pairing: TargetPairing
    dist: np.ndarray
    targets: Sequence[int]
    non_targets: Sequence[int]

    Returns
    -------
    FarthestPoint
        `point` and `distance` are None when nothing is admissible
    """
    target = pairing.target
    candidates = np.array(sorted(non_targets), dtype=int)
    if candidates.size == 0:
        return FarthestPoint(target=target)
    to_target = dist[target, candidates]
    admissible = to_target < pairing.pair_distance
    others = [other for other in targets if other != target]
    if others:
        to_others = dist[np.ix_(others, candidates)]
        admissible &= np.all(to_target[np.newaxis, :] < to_others, axis=0)
    if not admissible.any():
        return FarthestPoint(target=target)
    choices = candidates[admissible]
    best = int(np.argmax(to_target[admissible]))
    return FarthestPoint(
        target=target,
        point=int(choices[best]),
        distance=float(to_target[admissible][best]),
    )


def build_group_regions(
    pairings: Sequence[TargetPairing],
    farthest: Mapping[int, FarthestPoint],
    points: np.ndarray,
) -> Dict[int, Optional[ApolloniusRegion]]:
    """
    Apollonius Region of every Target

    The target is focus A and its partner focus B, so an admissible farthest point
    gives k < 1 and a region enclosing the target.

    Parameters
    ----------
    pairings: Sequence[TargetPairing]
    farthest: Mapping[int, FarthestPoint]
        Farthest admissible point per target
    points: np.ndarray
        Coordinate matrix

    Returns
    -------
    Dict[int, Optional[ApolloniusRegion]]
        None for isolated targets
    """
    regions: Dict[int, Optional[ApolloniusRegion]] = {}
    for pairing in pairings:
        fp = farthest[pairing.target]
        if fp.point is None or fp.distance == 0:
            regions[pairing.target] = None
            logger.debug("Target %s is isolated, no region", pairing.target)
            continue
        focus_a = Point(coords=points[pairing.target].tolist(), id=pairing.target)
        focus_b = Point(coords=points[pairing.partner].tolist(), id=pairing.partner)
        k = ratio(focus_a, focus_b, points[fp.point])
        region = apollonius_region(focus_a, focus_b, k)
        regions[pairing.target] = region
        logger.debug(
            "Target %s: farthest point %s, k=%.6g, %s",
            pairing.target,
            fp.point,
            k,
            region.form.value,
        )
    return regions


def initial_assignment(
    regions: Mapping[int, Optional[ApolloniusRegion]],
    points: np.ndarray,
    targets: Sequence[int],
) -> Partition:
    """
    Draft Partition from Region Membership

    Group ids follow ascending target index. Points covered by exactly one region
    join it, points covered by several are queued as overlaps and points covered by
    none are queued as uncovered.

    Parameters
    ----------
    regions: Mapping[int, Optional[ApolloniusRegion]]
    points: np.ndarray
    targets: Sequence[int]

    Returns
    -------
    Partition
        A draft partition
    """
    ordered = sorted(set(targets))
    n = points.shape[0]
    coverage = np.zeros((len(ordered), n), dtype=bool)
    for group_id, target in enumerate(ordered):
        region = regions.get(target)
        if region is not None:
            coverage[group_id] = covered_mask(region, points)
    assignments = [UNASSIGNED] * n
    provenance: List[Optional[Provenance]] = [None] * n
    for group_id, target in enumerate(ordered):
        assignments[target] = group_id
        provenance[target] = Provenance.target
    target_set = set(ordered)
    uncovered: List[int] = []
    overlaps: Dict[int, Tuple[int, ...]] = {}
    for index in range(n):
        if index in target_set:
            continue
        covering = np.flatnonzero(coverage[:, index])
        if covering.size == 1:
            assignments[index] = int(covering[0])
            provenance[index] = Provenance.inside_circle
        elif covering.size == 0:
            uncovered.append(index)
        else:
            overlaps[index] = tuple(int(group_id) for group_id in covering)
    groups = [
        GroupRecord(group_id=group_id, target=target, region=regions.get(target))
        for group_id, target in enumerate(ordered)
    ]
    logger.debug(
        "Initial assignment: %s uncovered, %s in overlaps", len(uncovered), len(overlaps)
    )
    return Partition(
        assignments=assignments,
        groups=groups,
        provenance=provenance,
        uncovered=uncovered,
        overlaps=overlaps,
    )


def detect_outliers(
    dist: np.ndarray,
    targets: Sequence[int],
    pairings: Sequence[TargetPairing],
    draft: Partition,
) -> Partition:
    """
    Flag Uncovered Points Too Far From their Nearest Target

    An uncovered point is an outlier when its distance to the nearest target is at
    least that target's pair distance.

    Parameters
    ----------
    dist: np.ndarray
    targets: Sequence[int]
    pairings: Sequence[TargetPairing]
    draft: Partition

    Returns
    -------
    Partition
    """
    if not draft.uncovered:
        return draft
    ordered = sorted(set(targets))
    pair_distance = {pairing.target: pairing.pair_distance for pairing in pairings}
    assignments = list(draft.assignments)
    provenance = list(draft.provenance)
    still_uncovered: List[int] = []
    for index in draft.uncovered:
        nearest = ordered[int(np.argmin(dist[index, ordered]))]
        if dist[index, nearest] >= pair_distance[nearest]:
            assignments[index] = OUTLIER
            provenance[index] = Provenance.outlier
        else:
            still_uncovered.append(index)
    flagged = len(draft.uncovered) - len(still_uncovered)
    if flagged:
        logger.debug("%s uncovered points flagged as outliers", flagged)
    return draft.evolve(
        assignments=assignments,
        provenance=provenance,
        outliers=[index for index, group in enumerate(assignments) if group == OUTLIER],
        uncovered=still_uncovered,
    )


def _group_anchors(partition: Partition, points: np.ndarray) -> np.ndarray:
    """
    Region center of every group, or its target when there is no circle
    """
    anchors = []
    for group in partition.groups:
        if group.region is not None and group.region.center is not None:
            anchors.append(group.region.center)
        elif group.target is not None:
            anchors.append(points[group.target].tolist())
        else:
            anchors.append([np.nan] * points.shape[1])
    return np.asarray(anchors, dtype=float)


def _choose_groups(
    queue: Sequence[int],
    candidates: Sequence[Sequence[int]],
    partition: Partition,
    dist: np.ndarray,
    points: np.ndarray,
    strategy: ReassignmentStrategy,
) -> List[int]:
    """
    Pick a group for every queued point against frozen memberships
    """
    queue_array = np.asarray(queue, dtype=int)
    anchors = _group_anchors(partition, points)
    anchor_distance = np.linalg.norm(
        points[queue_array][:, np.newaxis, :] - anchors[np.newaxis, :, :], axis=2
    )
    if strategy == ReassignmentStrategy.mean_distance:
        members = [
            np.asarray(partition.members(group.group_id), dtype=int)
            for group in partition.groups
        ]
        mean_distance = np.column_stack(
            [dist[np.ix_(queue_array, group_members)].mean(axis=1) for group_members in members]
        )
    else:
        mean_distance = anchor_distance
    chosen: List[int] = []
    for row, allowed in enumerate(candidates):
        best = min(
            allowed,
            key=lambda group_id: (
                mean_distance[row, group_id],
                anchor_distance[row, group_id],
                group_id,
            ),
        )
        chosen.append(int(best))
    return chosen


def reassign_uncovered(
    draft: Partition,
    dist: np.ndarray,
    points: np.ndarray,
    strategy: ReassignmentStrategy = ReassignmentStrategy.mean_distance,
) -> Partition:
    """
    Assign every Uncovered Point to its Most Similar Group

    Memberships are frozen for the whole pass: a reassigned point does not count
    as a member for the points after it.

    Parameters
    ----------
    draft: Partition
    dist: np.ndarray
    points: np.ndarray
    strategy: ReassignmentStrategy
        Mean distance to members (default) or distance to the region center

    Returns
    -------
    Partition
    """
    if not draft.uncovered:
        return draft
    queue = sorted(draft.uncovered)
    every_group = list(range(draft.n_groups))
    chosen = _choose_groups(
        queue, [every_group] * len(queue), draft, dist, points, strategy
    )
    assignments = list(draft.assignments)
    provenance = list(draft.provenance)
    for index, group_id in zip(queue, chosen):
        assignments[index] = group_id
        provenance[index] = Provenance.reassigned_uncovered
    logger.debug("Reassigned %s uncovered points", len(queue))
    return draft.evolve(assignments=assignments, provenance=provenance, uncovered=[])


def resolve_overlaps(
    draft: Partition,
    dist: np.ndarray,
    points: np.ndarray,
    strategy: ReassignmentStrategy = ReassignmentStrategy.mean_distance,
) -> Partition:
    """
    Settle Points Covered by Several Regions

    Only the overlapping groups compete, with the same rule as `reassign_uncovered`.

    Parameters
    ----------
    draft: Partition
    dist: np.ndarray
    points: np.ndarray
    strategy: ReassignmentStrategy

    Returns
    -------
    Partition
    """
    if not draft.overlaps:
        return draft
    queue = sorted(draft.overlaps)
    chosen = _choose_groups(
        queue, [draft.overlaps[index] for index in queue], draft, dist, points, strategy
    )
    assignments = list(draft.assignments)
    provenance = list(draft.provenance)
    for index, group_id in zip(queue, chosen):
        assignments[index] = group_id
        provenance[index] = Provenance.reassigned_overlap
    logger.debug("Resolved %s overlap points", len(queue))
    return draft.evolve(assignments=assignments, provenance=provenance, overlaps={})


def _single_group(n: int, target: int) -> Partition:
    provenance = [Provenance.reassigned_uncovered] * n
    provenance[target] = Provenance.target
    return Partition(
        assignments=[0] * n,
        groups=[GroupRecord(group_id=0, target=target)],
        provenance=provenance,
    )


def _choose_targets(
    score: Sequence[float], params: NcarParams, dist: np.ndarray
) -> List[int]:
    try:
        return select_targets(score, params.target_count, dist)
    except EmptySelection:
        first = int(rank_by_score(score)[0])
        logger.debug("No score stands out, falling back to a single target %s", first)
        return [first]


def run_ncar_detailed(
    dataset: DataSet,
    params: Optional[NcarParams] = None,
    dist: Optional[np.ndarray] = None,
) -> NcarResult:
    """
    Run the Full Pipeline and Keep its Intermediate Results

    Parameters
    ----------
    dataset: DataSet
    params: Optional[NcarParams]
    dist: Optional[np.ndarray]
        A precomputed distance matrix of `dataset.points`

    Returns
    -------
    NcarResult
    """
    params = params or NcarParams()
    points = dataset.points
    if dist is None:
        dist = distance_matrix(points)
    profile = density_profile(dist, params.p)
    if float(dist.max()) == 0.0:
        logger.warning("All points of %s coincide, returning a single group", dataset.name)
        targets = [0]
    else:
        targets = _choose_targets(profile.score, params, dist)
    logger.debug("Targets: %s", sorted(targets))
    try:
        pairings = pair_targets(targets, dist)
    except SingleTarget:
        return NcarResult(
            partition=_single_group(dataset.n, targets[0]),
            profile=profile,
            targets=targets,
        )
    ordered = sorted(targets)
    target_set = set(ordered)
    non_targets = [index for index in range(dataset.n) if index not in target_set]
    farthest = {
        pairing.target: farthest_admissible(pairing, dist, ordered, non_targets)
        for pairing in pairings
    }
    regions = build_group_regions(pairings, farthest, points)
    draft = initial_assignment(regions, points, ordered)
    draft = detect_outliers(dist, ordered, pairings, draft)
    draft = reassign_uncovered(draft, dist, points, params.reassignment)
    partition = resolve_overlaps(draft, dist, points, params.reassignment)
    logger.info(
        "NCAR on %s: %s groups, %s outliers",
        dataset.name,
        partition.n_groups,
        len(partition.outliers),
    )
    return NcarResult(
        partition=partition,
        profile=profile,
        targets=ordered,
        pairings=pairings,
        farthest=[farthest[target] for target in ordered],
    )


def run_ncar(
    dataset: DataSet,
    params: Optional[NcarParams] = None,
    dist: Optional[np.ndarray] = None,
) -> Partition:
    """
    Partition a DataSet into Apollonius Groups and Outliers

    Parameters
    ----------
    dataset: DataSet
    params: Optional[NcarParams]
        Neighbor fraction `p`, optional `target_count` and reassignment strategy
    dist: Optional[np.ndarray]
        A precomputed distance matrix of `dataset.points`

    Returns
    -------
    Partition
    """
    return run_ncar_detailed(dataset, params, dist).partition


def k_sequence_diagnostic(
    pairing: TargetPairing,
    dist: np.ndarray,
    non_targets: Sequence[int],
) -> List[KSequenceStep]:
    """
    Ratios Seen While Repeatedly Removing the Farthest Point

    Candidates are the non-target points closer to the target than its partner.
    They are consumed farthest first; each step reports k = d(target, M) /
    d(partner, M), the mean of the ratios not yet consumed and their sample
    variance (zero for the last step). The result is observational only.

    Parameters
    ----------
    pairing: TargetPairing
    dist: np.ndarray
    non_targets: Sequence[int]

    Returns
    -------
    List[KSequenceStep]
    """
    candidates = [
        index
        for index in sorted(non_targets)
        if dist[pairing.target, index] < pairing.pair_distance
    ]
    candidates.sort(key=lambda index: (-dist[pairing.target, index], index))
    ratios = np.array(
        [dist[pairing.target, index] / dist[pairing.partner, index] for index in candidates],
        dtype=float,
    )
    steps: List[KSequenceStep] = []
    for position, index in enumerate(candidates):
        remaining = ratios[position:]
        variance = float(np.var(remaining, ddof=1)) if remaining.size > 1 else 0.0
        steps.append(
            KSequenceStep(
                point=index,
                distance=float(dist[pairing.target, index]),
                k=float(ratios[position]),
                mean=float(np.mean(remaining)),
                variance=variance,
            )
        )
    return steps
