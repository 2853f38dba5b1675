"""
Algorithm Parameter Models
"""

from enum import Enum
from typing import Any, Dict, Optional

from pydantic import Field, root_validator

from apollonius.config import DensityConfig, ReassignmentStrategy
from apollonius.containers.base_container import ApolloniusModel


class BaselineMethod(str, Enum):
    """
    Comparison Algorithm Families
    """

    knn_graph = "KnnGraph"
    epsilon_graph = "EpsilonGraph"
    dpc_nearest_center = "DpcNearestCenter"
    dpc_density_chain = "DpcDensityChain"


_RELEVANT_FIELDS = {
    BaselineMethod.knn_graph: {"k_fraction"},
    BaselineMethod.epsilon_graph: {"epsilon"},
    BaselineMethod.dpc_nearest_center: {"p", "center_count"},
    BaselineMethod.dpc_density_chain: {"p", "center_count"},
}
_REQUIRED_FIELDS = {
    BaselineMethod.knn_graph: {"k_fraction"},
    BaselineMethod.epsilon_graph: set(),
    BaselineMethod.dpc_nearest_center: {"p"},
    BaselineMethod.dpc_density_chain: {"p"},
}


class NcarParams(ApolloniusModel):
    """
    NCAR Parameters

    `target_count` absent means automatic target selection.
    """

    p: float = Field(default=DensityConfig.DEFAULT_P, gt=0, lt=1)
    target_count: Optional[int] = Field(default=None, ge=1)
    reassignment: ReassignmentStrategy = ReassignmentStrategy.mean_distance

    def echo(self) -> Dict[str, Any]:
        """
        Parameters as plain values for result files
        """
        return {
            "p": self.p,
            "target_count": self.target_count,
            "reassignment": self.reassignment.value,
        }


class BaselineConfig(ApolloniusModel):
    """
    Configuration of one Comparison Algorithm
    """

    method: BaselineMethod
    k_fraction: Optional[float] = Field(default=None, gt=0, le=1)
    epsilon: Optional[float] = Field(default=None, gt=0)
    p: Optional[float] = Field(default=None, gt=0, lt=1)
    center_count: Optional[int] = Field(default=None, ge=1)

    @root_validator(skip_on_failure=True)
    @classmethod
    def fields_match_method(cls, values):
        """
        Exactly the fields relevant to the method may be set
        """
        method = values["method"]
        relevant = _RELEVANT_FIELDS[method]
        for key in ("k_fraction", "epsilon", "p", "center_count"):
            if key not in relevant and values.get(key) is not None:
                raise ValueError(f"{key} does not apply to {method.value}")
        for key in _REQUIRED_FIELDS[method]:
            if values.get(key) is None:
                raise ValueError(f"{method.value} requires {key}")
        return values

    def echo(self) -> Dict[str, Any]:
        """
        Set parameters as plain values for result files
        """
        return {
            key: value
            for key, value in self.dict(exclude={"method"}).items()
            if value is not None
        }
