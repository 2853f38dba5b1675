"""
Registered Algorithm Variations
"""

from typing import Any, Dict, Optional

import numpy as np

from apollonius.algorithms.base_algorithm import BaseAlgorithm
from apollonius.baselines import run_baseline
from apollonius.config import AlgorithmOptions, BaselineDefaults, DensityConfig
from apollonius.containers import (
    BaselineConfig,
    BaselineMethod,
    DataSet,
    NcarParams,
    Partition,
)
from apollonius.ncar import run_ncar


class NcarAlgorithm(BaseAlgorithm):
    """
    Neighborhood Construction by Apollonius Regions
    """

    name = AlgorithmOptions.ncar.value
    accepted_params = {"p", "target_count", "reassignment"}

    def _configure(self, **params: Any) -> None:
        self.config = NcarParams(**params)

    def params(self) -> Dict[str, Any]:
        return self.config.echo()

    def partition(self, dataset: DataSet, dist: Optional[np.ndarray] = None) -> Partition:
        return run_ncar(dataset, self.config, dist)


class _BaselineAlgorithm(BaseAlgorithm):
    """
    Algorithms Backed by a BaselineConfig
    """

    method: BaselineMethod

    def _baseline_config(self, **params: Any) -> BaselineConfig:
        return BaselineConfig(method=self.method, **params)

    def _configure(self, **params: Any) -> None:
        self.config = self._baseline_config(**params)

    def params(self) -> Dict[str, Any]:
        return self.config.echo()

    def partition(self, dataset: DataSet, dist: Optional[np.ndarray] = None) -> Partition:
        return run_baseline(dataset, self.config, dist)


class Knn1Algorithm(_BaselineAlgorithm):
    """
    kNN Graph Components, k = 5% of the Points
    """

    name = AlgorithmOptions.knn1.value
    method = BaselineMethod.knn_graph
    accepted_params = {"k_fraction"}
    default_fraction = BaselineDefaults.KNN1_FRACTION

    def _baseline_config(self, **params: Any) -> BaselineConfig:
        params.setdefault("k_fraction", self.default_fraction)
        return BaselineConfig(method=self.method, **params)


class Knn2Algorithm(Knn1Algorithm):
    """
    kNN Graph Components, k = 10% of the Points
    """

    name = AlgorithmOptions.knn2.value
    default_fraction = BaselineDefaults.KNN2_FRACTION


class EpsilonAlgorithm(_BaselineAlgorithm):
    """
    Epsilon Graph Components, Singletons as Outliers
    """

    name = AlgorithmOptions.epsilon.value
    method = BaselineMethod.epsilon_graph
    accepted_params = {"epsilon"}


class DpcAlgorithm(_BaselineAlgorithm):
    """
    Density Peaks, Nearest Center Assignment
    """

    name = AlgorithmOptions.dpc.value
    method = BaselineMethod.dpc_nearest_center
    accepted_params = {"p", "target_count"}

    def _baseline_config(self, **params: Any) -> BaselineConfig:
        return BaselineConfig(
            method=self.method,
            p=params.get("p", DensityConfig.DEFAULT_P),
            center_count=params.get("target_count"),
        )


class DpcKnnAlgorithm(DpcAlgorithm):
    """
    Density Peaks, Assignment Down the Density Chain
    """

    name = AlgorithmOptions.dpc_knn.value
    method = BaselineMethod.dpc_density_chain
