"""
Storage Containers for the Application
"""

import logging
import math
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import Field, root_validator, validator

from apollonius.containers.base_container import ApolloniusModel

logger = logging.getLogger(__name__)

OUTLIER: int = -1
UNASSIGNED: int = -2


class RegionForm(str, Enum):
    """
    Shape of an Apollonius Region
    """

    sphere_side_a = "SphereSideA"
    sphere_side_b = "SphereSideB"
    bisector_line = "BisectorLine"


class Side(str, Enum):
    """
    Position of a Point Relative to an Apollonius Region
    """

    inside = "Inside"
    on_boundary = "OnBoundary"
    outside = "Outside"


class Provenance(str, Enum):
    """
    How a Point Received its Final Label
    """

    inside_circle = "InsideCircle"
    reassigned_uncovered = "ReassignedUncovered"
    reassigned_overlap = "ReassignedOverlap"
    target = "Target"
    outlier = "Outlier"
    # memberships decided by a comparison algorithm
    assigned = "Assigned"


class DataSource(str, Enum):
    """
    Where a DataSet Came From
    """

    csv_file = "CsvFile"
    generator = "Generator"
    fixture = "Fixture"


class Point(ApolloniusModel):
    """
    A Point of a DataSet
    """

    coords: Tuple[float, ...]
    id: int = 0

    @validator("coords")
    @classmethod
    def coords_must_be_finite(cls, v):
        """
        Validate that coords are non-empty and finite
        """
        if len(v) == 0:
            raise ValueError("a point needs at least one coordinate")
        if not all(math.isfinite(value) for value in v):
            raise ValueError("coordinates must be finite")
        return v

    @property
    def vector(self) -> np.ndarray:
        """
        Coordinates as a numpy vector
        """
        return np.asarray(self.coords, dtype=float)

    @property
    def dimensions(self) -> int:
        """
        Number of coordinates
        """
        return len(self.coords)


class ApolloniusRegion(ApolloniusModel):
    """
    The Locus d(A, P) / d(P, B) = k, with its Enclosed Side
    """

    focus_a: Point
    focus_b: Point
    k: float = Field(gt=0)
    form: RegionForm
    center: Optional[Tuple[float, ...]] = None
    radius: Optional[float] = Field(default=None, ge=0)

    @root_validator(skip_on_failure=True)
    @classmethod
    def center_matches_form(cls, values):
        """
        Center and radius are absent exactly for the bisector
        """
        is_bisector = values["form"] == RegionForm.bisector_line
        has_circle = values.get("center") is not None and values.get("radius") is not None
        if is_bisector == has_circle:
            raise ValueError(
                f"{values['form'].value} regions {'must not' if is_bisector else 'must'} "
                "carry a center and radius"
            )
        return values

    @property
    def encloses(self) -> Optional[Point]:
        """
        The focus on the enclosed side, None for the bisector
        """
        if self.form == RegionForm.sphere_side_a:
            return self.focus_a
        elif self.form == RegionForm.sphere_side_b:
            return self.focus_b
        return None


class DataSet(ApolloniusModel):
    """
    Point Matrix with Optional Class Labels
    """

    name: str
    points: np.ndarray
    labels: Optional[Tuple[int, ...]] = None
    label_names: Tuple[str, ...] = ()
    ids: Optional[Tuple[int, ...]] = None
    source: DataSource = DataSource.generator

    __unhashable__ = {"label_names"}

    @validator("points", pre=True)
    @classmethod
    def points_must_be_finite_matrix(cls, v):
        """
        Validate the point matrix: two dimensional, finite, at least two rows
        """
        array = np.array(v, dtype=float)
        if array.ndim != 2:  # noqa: PLR2004
            raise ValueError(f"points must be an n x m matrix, got {array.ndim} dimensions")
        if array.shape[0] < 2 or array.shape[1] < 1:  # noqa: PLR2004
            raise ValueError("a dataset needs at least two points with one feature")
        if not np.isfinite(array).all():
            raise ValueError("points must not contain NaN or infinite entries")
        array.setflags(write=False)
        return array

    @root_validator(skip_on_failure=True)
    @classmethod
    def labels_match_points(cls, values):
        """
        Labels and ids, when present, have one entry per point
        """
        n = values["points"].shape[0]
        labels = values.get("labels")
        if labels is not None:
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} points")
            label_names = values.get("label_names") or ()
            if label_names and max(labels) >= len(label_names):
                raise ValueError("label codes must index label_names")
        ids = values.get("ids")
        if ids is not None:
            if len(ids) != n:
                raise ValueError(f"{len(ids)} ids for {n} points")
            if len(set(ids)) != n:
                raise ValueError("point ids must be unique")
        return values

    @property
    def n(self) -> int:
        """
        Number of points
        """
        return int(self.points.shape[0])

    @property
    def m(self) -> int:
        """
        Number of features
        """
        return int(self.points.shape[1])

    @property
    def point_ids(self) -> Tuple[int, ...]:
        """
        Point identifiers, defaulting to the row index
        """
        if self.ids is not None:
            return self.ids
        return tuple(range(self.n))

    @property
    def has_labels(self) -> bool:
        """
        Whether ground truth class labels are attached
        """
        return self.labels is not None

    def point(self, index: int) -> Point:
        """
        A single row as a Point

        Parameters
        ----------
        index: int
            Row index

        Returns
        -------
        Point
        """
        return Point(coords=self.points[index].tolist(), id=self.point_ids[index])

    def label_name(self, code: int) -> str:
        """
        Human readable name of a class code
        """
        if self.label_names:
            return self.label_names[code]
        return str(code)


class DensityProfile(ApolloniusModel):
    """
    Local Density, Separation and Score of every Point
    """

    rho: Tuple[float, ...]
    delta: Tuple[float, ...]
    score: Tuple[float, ...]
    nearest_higher: Tuple[Optional[int], ...]
    r: int = Field(ge=1)

    @root_validator(skip_on_failure=True)
    @classmethod
    def vectors_are_consistent(cls, values):
        """
        Validate vector lengths, the score product and the otherwise-branch points
        """
        n = len(values["rho"])
        for key in ("delta", "score", "nearest_higher"):
            if len(values[key]) != n:
                raise ValueError(f"{key} has {len(values[key])} entries, expected {n}")
        for rho, delta, score in zip(values["rho"], values["delta"], values["score"]):
            if not 0 < rho <= 1:
                raise ValueError(f"rho {rho} outside of (0, 1]")
            if delta < 0 or not math.isclose(score, delta * rho, rel_tol=1e-12, abs_tol=0.0):
                raise ValueError("score must equal delta * rho")
        maximum = max(values["rho"])
        for rho, higher in zip(values["rho"], values["nearest_higher"]):
            if (higher is None) != (rho == maximum):
                raise ValueError("only globally densest points lack a nearest higher point")
        return values

    @property
    def n(self) -> int:
        """
        Number of points
        """
        return len(self.rho)


class TargetPairing(ApolloniusModel):
    """
    A Target Point and its Nearest Other Target
    """

    target: int
    partner: int
    pair_distance: float = Field(gt=0)

    @root_validator(skip_on_failure=True)
    @classmethod
    def partner_differs(cls, values):
        """
        A target never pairs with itself
        """
        if values["target"] == values["partner"]:
            raise ValueError("a target cannot be its own partner")
        return values


class FarthestPoint(ApolloniusModel):
    """
    Farthest Admissible Point of a Target (absent for isolated targets)
    """

    target: int
    point: Optional[int] = None
    distance: Optional[float] = None


class GroupRecord(ApolloniusModel):
    """
    One Group of a Partition
    """

    group_id: int = Field(ge=0)
    target: Optional[int] = None
    region: Optional[ApolloniusRegion] = None


class Partition(ApolloniusModel):
    """
    Group Assignment of every Point

    `assignments` holds a group id, `OUTLIER`, or `UNASSIGNED` while the partition
    is still a draft. Draft partitions carry the points waiting for reassignment in
    `uncovered` and `overlaps` (point -> candidate group ids).
    """

    assignments: Tuple[int, ...]
    groups: Tuple[GroupRecord, ...]
    outliers: Tuple[int, ...] = ()
    provenance: Tuple[Optional[Provenance], ...]
    uncovered: Tuple[int, ...] = ()
    overlaps: Dict[int, Tuple[int, ...]] = Field(default_factory=dict)

    @root_validator(skip_on_failure=True)
    @classmethod
    def assignments_are_consistent(cls, values):
        """
        Validate group ids, the outlier set and target membership
        """
        assignments = values["assignments"]
        provenance = values["provenance"]
        groups = values["groups"]
        if len(provenance) != len(assignments):
            raise ValueError("one provenance tag per point is required")
        if [group.group_id for group in groups] != list(range(len(groups))):
            raise ValueError("group ids must be 0..G-1 in order")
        valid = set(range(len(groups))) | {OUTLIER, UNASSIGNED}
        if not set(assignments) <= valid:
            raise ValueError("assignment to an unknown group")
        outliers = tuple(index for index, group in enumerate(assignments) if group == OUTLIER)
        if tuple(sorted(values.get("outliers") or ())) != outliers:
            raise ValueError("outliers must be exactly the points assigned OUTLIER")
        tagged = tuple(
            index for index, tag in enumerate(provenance) if tag == Provenance.outlier
        )
        if tagged != outliers:
            raise ValueError("outliers must be exactly the points tagged Outlier")
        for group in groups:
            if group.target is not None and assignments[group.target] != group.group_id:
                raise ValueError(f"target {group.target} is not in its own group")
        values["outliers"] = outliers
        return values

    @property
    def n(self) -> int:
        """
        Number of points
        """
        return len(self.assignments)

    @property
    def n_groups(self) -> int:
        """
        Number of groups
        """
        return len(self.groups)

    @property
    def is_final(self) -> bool:
        """
        Whether every point has its final label
        """
        return (
            UNASSIGNED not in self.assignments
            and len(self.uncovered) == 0
            and len(self.overlaps) == 0
        )

    @property
    def targets(self) -> Tuple[int, ...]:
        """
        Target point of every group that has one
        """
        return tuple(group.target for group in self.groups if group.target is not None)

    def labels(self) -> np.ndarray:
        """
        Assignments as an integer vector (OUTLIER for outliers)
        """
        return np.asarray(self.assignments, dtype=int)

    def members(self, group_id: int) -> Tuple[int, ...]:
        """
        Point indices of one group
        """
        return tuple(
            index for index, group in enumerate(self.assignments) if group == group_id
        )

    def group_sizes(self) -> List[int]:
        """
        Size of every group, in group id order
        """
        counts = np.bincount(
            [group for group in self.assignments if group >= 0],
            minlength=self.n_groups,
        )
        return [int(count) for count in counts]


class NcarResult(ApolloniusModel):
    """
    Everything run_ncar Computed on the Way to its Partition
    """

    partition: Partition
    profile: DensityProfile
    targets: Tuple[int, ...]
    pairings: Tuple[TargetPairing, ...] = ()
    farthest: Tuple[FarthestPoint, ...] = ()


class MetricsReport(ApolloniusModel):
    """
    RI, SN, VN and Runtime of one Algorithm on one DataSet
    """

    algorithm: str
    dataset: str
    ri: Optional[float] = Field(default=None, ge=0, le=1)
    sn: Optional[float] = Field(default=None, ge=0, le=1)
    vn: float = Field(ge=0)
    runtime_seconds: float = Field(ge=0)
    params: Dict[str, Any] = Field(default_factory=dict)

    @validator("vn")
    @classmethod
    def vn_must_be_finite(cls, v):
        """
        Validate that VN is finite
        """
        if not math.isfinite(v):
            raise ValueError("vn must be finite")
        return v


class Circle(ApolloniusModel):
    """
    A Drawable Apollonius Circle of one Group
    """

    group_id: int
    center: Tuple[float, ...]
    radius: float = Field(ge=0)


class RunResult(ApolloniusModel):
    """
    Serializable Outcome of one Algorithm Run
    """

    report: MetricsReport
    point_ids: Tuple[int, ...]
    groups: Tuple[Optional[int], ...]
    coordinates: Tuple[Tuple[float, ...], ...]
    targets: Tuple[int, ...] = ()
    circles: Tuple[Circle, ...] = ()

    @root_validator(skip_on_failure=True)
    @classmethod
    def one_row_per_point(cls, values):
        """
        Point ids, groups and coordinates line up
        """
        n = len(values["point_ids"])
        if len(values["groups"]) != n or len(values["coordinates"]) != n:
            raise ValueError("point_ids, groups and coordinates must have equal length")
        if len({len(row) for row in values["coordinates"]}) > 1:
            raise ValueError("all points must have the same dimension")
        return values

    @property
    def dimensions(self) -> int:
        """
        Dimension of the stored coordinates
        """
        return len(self.coordinates[0]) if self.coordinates else 0

    @property
    def config(self) -> Dict[str, Any]:
        """
        Echo of the run configuration
        """
        return self.report.params


class KSequenceStep(ApolloniusModel):
    """
    One Removal Step of the k-Sequence Diagnostic
    """

    point: int
    distance: float = Field(ge=0)
    k: float = Field(ge=0)
    mean: float
    variance: float = Field(ge=0)


class BlobSpec(ApolloniusModel):
    """
    One Isotropic Gaussian Blob of a Synthetic DataSet
    """

    center: Tuple[float, ...]
    sigma: float = Field(gt=0)
    count: int = Field(ge=1)
