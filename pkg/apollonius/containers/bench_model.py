"""
Pydantic model for Bench Manifest YAML files
"""

from enum import Enum
from typing import Any, List, Optional, Union

from pydantic import Field, root_validator, validator

from apollonius.config import (
    AlgorithmOptions,
    BenchConfig,
    GeneratorConfig,
    ReassignmentStrategy,
)
from apollonius.containers.base_container import ApolloniusModel


class StrEnum(str, Enum):
    """
    String Enum
    """


class ScalingOption(StrEnum):
    """
    Feature Scaling Applied Before a Bench Run
    """

    raw = "raw"
    zscore = "zscore"


class DatasetEntry(ApolloniusModel):
    """
    One Dataset of a Bench Suite
    """

    name: str
    path: Optional[str] = None
    generator: Optional[str] = None
    seed: int = GeneratorConfig.DEFAULT_SEED
    label_column: Optional[Union[int, str]] = Field(
        default="last",
        description="Column index, header name, 'last', or null for unlabeled files",
    )
    header: bool = False
    delimiter: str = ","
    targets: Optional[int] = Field(
        default=None,
        ge=1,
        description="Target count for algorithms that do not set their own",
    )
    scaling: List[ScalingOption] = Field(default_factory=lambda: [ScalingOption.raw])

    @root_validator(skip_on_failure=True)
    @classmethod
    def one_source(cls, values):
        """
        A dataset comes from exactly one of a file or a generator
        """
        if (values.get("path") is None) == (values.get("generator") is None):
            raise ValueError(
                f"dataset {values['name']} needs exactly one of `path` or `generator`"
            )
        return values

    @validator("scaling", pre=True)
    @classmethod
    def validate_scaling(cls, value):
        """
        Accept a single scaling option
        """
        if isinstance(value, str):
            return [value]
        return value


class AlgorithmEntry(ApolloniusModel):
    """
    One Algorithm of a Bench Suite
    """

    name: AlgorithmOptions
    p: Optional[float] = Field(default=None, gt=0, lt=1)
    targets: Optional[int] = Field(default=None, ge=1)
    k_fraction: Optional[float] = Field(default=None, gt=0, le=1)
    epsilon: Optional[float] = Field(default=None, gt=0)
    reassignment: Optional[ReassignmentStrategy] = None

    @validator("name", pre=True)
    @classmethod
    def validate_name(cls, value):
        """
        Validate algorithm names case-insensitively
        """
        if isinstance(value, str):
            return value.lower()
        return value


class BenchManifest(ApolloniusModel):
    """
    Bench Suite Data Model
    """

    datasets: List[DatasetEntry] = Field(default_factory=list)
    algorithms: List[AlgorithmEntry] = Field(default_factory=list)
    repeats: int = Field(default=BenchConfig.DEFAULT_REPEATS, ge=1)
    workers: int = Field(default=1, ge=1)
    timing: bool = True

    @validator("algorithms", pre=True)
    @classmethod
    def validate_algorithms(cls, value) -> List[Any]:
        """
        Accept bare algorithm names next to full entries
        """
        if value is None:
            return []
        if isinstance(value, (str, dict)):
            value = [value]
        return [{"name": item} if isinstance(item, str) else item for item in value]

    @validator("datasets", pre=True)
    @classmethod
    def validate_datasets(cls, value) -> List[Any]:
        """
        Accept an empty datasets key
        """
        if value is None:
            return []
        return value

    @property
    def is_empty(self) -> bool:
        """
        Whether the manifest describes no runs at all
        """
        return len(self.datasets) == 0 or len(self.algorithms) == 0
