"""
apollonius algorithms __init__ file
"""

from typing import Any, Dict, List, Type

from pydantic import ValidationError

from apollonius.algorithms.base_algorithm import BaseAlgorithm
from apollonius.algorithms.variations import (
    DpcAlgorithm,
    DpcKnnAlgorithm,
    EpsilonAlgorithm,
    Knn1Algorithm,
    Knn2Algorithm,
    NcarAlgorithm,
)
from apollonius.exceptions import InvalidParameter

# Register Algorithms Here
__algorithms__: List[Type[BaseAlgorithm]] = [
    NcarAlgorithm,
    Knn1Algorithm,
    Knn2Algorithm,
    EpsilonAlgorithm,
    DpcAlgorithm,
    DpcKnnAlgorithm,
]

ALGORITHMS: Dict[str, Type[BaseAlgorithm]] = {
    algorithm.name: algorithm for algorithm in __algorithms__
}


def get_algorithm(name: str, **params: Any) -> BaseAlgorithm:
    """
    Instantiate a Registered Algorithm by Name

    Parameters
    ----------
    name: str
        One of the ALGORITHMS keys, case-insensitive
    **params
        Algorithm parameters, None values are ignored

    Returns
    -------
    BaseAlgorithm
    """
    algorithm_class = ALGORITHMS.get(str(name).lower())
    if algorithm_class is None:
        raise InvalidParameter(
            f"unknown algorithm {name!r}, choose from {', '.join(ALGORITHMS)}"
        )
    try:
        return algorithm_class(**params)
    except ValidationError as validation_error:
        raise InvalidParameter(str(validation_error)) from validation_error


__all__ = [
    "ALGORITHMS",
    "BaseAlgorithm",
    "DpcAlgorithm",
    "DpcKnnAlgorithm",
    "EpsilonAlgorithm",
    "Knn1Algorithm",
    "Knn2Algorithm",
    "NcarAlgorithm",
    "get_algorithm",
]
