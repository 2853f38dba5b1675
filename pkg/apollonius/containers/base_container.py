"""
Base Pydantic Object for Containers
"""

from typing import Any, Set, TypeVar

import numpy as np
from pydantic import BaseModel

TModel = TypeVar("TModel", bound="ApolloniusModel")


def _freeze(value: Any) -> Any:
    """
    Turn a field value into something hashable
    """
    if isinstance(value, np.ndarray):
        return value.shape, value.tobytes()
    elif isinstance(value, dict):
        return tuple(sorted((key, _freeze(item)) for key, item in value.items()))
    elif isinstance(value, (list, tuple)):
        return tuple(_freeze(item) for item in value)
    return value


def _equal(left: Any, right: Any) -> bool:
    """
    Field equality that understands numpy arrays
    """
    if isinstance(left, np.ndarray) or isinstance(right, np.ndarray):
        return bool(np.array_equal(np.asarray(left), np.asarray(right)))
    return bool(left == right)


class ApolloniusModel(BaseModel):
    """
    Hashable, Immutable Pydantic Model
    """

    __unhashable__: Set[str] = set()

    def __hash__(self):
        """
        Hash Method for Pydantic BaseModels
        """
        return hash(self.__class__) + hash(
            tuple(
                _freeze(value)
                for key, value in self.__dict__.items()
                if key not in self.__unhashable__
            )
        )

    def __eq__(self, other: Any) -> bool:
        """
        Exclude Unhashable Fields When Evaluating Equality
        """
        if not isinstance(other, ApolloniusModel) or type(other) is not type(self):
            return False
        return all(
            _equal(value, getattr(other, key))
            for key, value in self.__dict__.items()
            if key not in self.__unhashable__
        )

    def evolve(self: TModel, **updates: Any) -> TModel:
        """
        Return a re-validated copy with some fields replaced

        Parameters
        ----------
        **updates
            Field values to replace

        Returns
        -------
        TModel
        """
        values = {key: getattr(self, key) for key in self.__fields__}
        values.update(updates)
        return self.__class__(**values)

    class Config:
        """
        Apollonius Wide Configuration
        """

        anystr_strip_whitespace = True
        allow_mutation = False
        arbitrary_types_allowed = True
        json_encoders = {np.ndarray: lambda array: array.tolist()}
