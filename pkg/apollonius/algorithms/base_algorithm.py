"""
Timed Algorithm Runs
"""

import logging
import time
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Set, Tuple

import numpy as np

from apollonius.config import BenchConfig, ReassignmentStrategy
from apollonius.containers import (
    OUTLIER,
    Circle,
    DataSet,
    MetricsReport,
    Partition,
    RunResult,
)
from apollonius.density import distance_matrix
from apollonius.exceptions import InvalidParameter
from apollonius.metrics import evaluate

logger = logging.getLogger(__name__)


class BaseAlgorithm(ABC):
    """
    Neighborhood Construction Algorithm
    """

    name: str
    accepted_params: Set[str] = set()

    def __init__(
        self,
        p: Optional[float] = None,
        target_count: Optional[int] = None,
        k_fraction: Optional[float] = None,
        epsilon: Optional[float] = None,
        reassignment: Optional[ReassignmentStrategy] = None,
    ) -> None:
        """
        Initialize with Algorithm Parameters

        Parameters left as None take the algorithm's defaults. Setting a parameter
        the algorithm does not use raises InvalidParameter.

        Parameters
        ----------
        p: Optional[float]
            Neighbor fraction of the local density
        target_count: Optional[int]
            Number of target points or centers; automatic when absent
        k_fraction: Optional[float]
            Neighbor fraction of the kNN graph
        epsilon: Optional[float]
            Radius of the epsilon graph; automatic when absent
        reassignment: Optional[ReassignmentStrategy]
            How NCAR reassigns uncovered and overlapping points
        """
        given = {
            "p": p,
            "target_count": target_count,
            "k_fraction": k_fraction,
            "epsilon": epsilon,
            "reassignment": reassignment,
        }
        unused = sorted(
            key
            for key, value in given.items()
            if value is not None and key not in self.accepted_params
        )
        if unused:
            raise InvalidParameter(f"{self.name} does not take {', '.join(unused)}")
        self._configure(**{key: value for key, value in given.items() if value is not None})

    def __repr__(self) -> str:
        """
        String Representation
        """
        return f"<{self.__class__.__name__}: {self.name} {self.params()}>"

    @abstractmethod
    def _configure(self, **params: Any) -> None:
        """
        Validate and store the accepted parameters
        """

    @abstractmethod
    def params(self) -> Dict[str, Any]:
        """
        Effective parameters as plain values
        """

    @abstractmethod
    def partition(self, dataset: DataSet, dist: Optional[np.ndarray] = None) -> Partition:
        """
        Partition a DataSet

        Parameters
        ----------
        dataset: DataSet
        dist: Optional[np.ndarray]
            A precomputed distance matrix

        Returns
        -------
        Partition
        """

    def timed_partition(self, dataset: DataSet, repeats: int = 1) -> Tuple[Partition, float]:
        """
        Partition a DataSet and Time it

        Each repeat computes its own distances; the median wall-clock time is
        reported.

        Parameters
        ----------
        dataset: DataSet
        repeats: int

        Returns
        -------
        Tuple[Partition, float]
            The partition and the median runtime in seconds
        """
        if repeats < 1:
            raise InvalidParameter(f"repeats must be at least 1, got {repeats}")
        timings: List[float] = []
        for _ in range(repeats):
            start = time.perf_counter()
            partition = self.partition(dataset)
            timings.append(time.perf_counter() - start)
        return partition, float(np.median(timings))

    def run(
        self,
        dataset: DataSet,
        repeats: int = BenchConfig.DEFAULT_REPEATS,
        dist: Optional[np.ndarray] = None,
    ) -> RunResult:
        """
        Run, Time and Evaluate the Algorithm

        Parameters
        ----------
        dataset: DataSet
        repeats: int
        dist: Optional[np.ndarray]
            Distance matrix for the metrics, computed when absent

        Returns
        -------
        RunResult
        """
        partition, runtime = self.timed_partition(dataset, repeats=repeats)
        if dist is None:
            dist = distance_matrix(dataset.points)
        report = evaluate(
            algorithm=self.name,
            dataset=dataset,
            partition=partition,
            dist=dist,
            runtime_seconds=runtime,
            params=self.params(),
        )
        logger.info(
            "%s on %s: %s groups, %s outliers in %.4fs",
            self.name,
            dataset.name,
            partition.n_groups,
            len(partition.outliers),
            runtime,
        )
        return self.run_result(dataset, partition, report)

    @staticmethod
    def run_result(
        dataset: DataSet, partition: Partition, report: MetricsReport
    ) -> RunResult:
        """
        Bundle a Partition into a Serializable RunResult
        """
        ids = dataset.point_ids
        circles = [
            Circle(
                group_id=group.group_id,
                center=group.region.center,
                radius=group.region.radius,
            )
            for group in partition.groups
            if group.region is not None and group.region.center is not None
        ]
        return RunResult(
            report=report,
            point_ids=ids,
            groups=[None if group == OUTLIER else group for group in partition.assignments],
            coordinates=dataset.points.tolist(),
            targets=[ids[target] for target in partition.targets],
            circles=circles,
        )
