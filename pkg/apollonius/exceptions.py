"""
Apollonius: Common Exceptions
"""

from typing import Optional, Union


class ApolloniusError(Exception):
    """
    Base Apollonius Error
    """


class InvalidParameter(ApolloniusError):
    """
    Algorithm parameter outside of its accepted range
    """


#################
# Geometry Errors
#################


class GeometryError(ApolloniusError):
    """
    Generic Geometry Error
    """


class DegenerateRatio(GeometryError):
    """
    The ratio point coincides with focus B

    Callers treat the point as interior to B's side.
    """


class CoincidentFoci(GeometryError):
    """
    The two foci of an Apollonius region coincide
    """


################
# Density Errors
################


class DensityError(ApolloniusError):
    """
    Generic Density Error
    """


class DimensionMismatch(DensityError):
    """
    Points of different dimensionality were mixed
    """


class EmptySelection(DensityError):
    """
    Automatic target selection found nothing to select
    """


#####################
# Neighborhood Errors
#####################


class NeighborhoodError(ApolloniusError):
    """
    Generic Neighborhood Construction Error
    """


class SingleTarget(NeighborhoodError):
    """
    Only one target point exists, the partition is a single group
    """


################
# Metrics Errors
################


class MetricsError(ApolloniusError):
    """
    Generic Metrics Error
    """


class LengthMismatch(MetricsError):
    """
    Label vectors of different length
    """


#############
# Data Errors
#############


class DataError(ApolloniusError):
    """
    Generic Data Error

    Carries the offending file and location when they are known.
    """

    def __init__(
        self,
        message: str,
        path: Optional[Union[str, object]] = None,
        row: Optional[int] = None,
        column: Optional[Union[int, str]] = None,
    ) -> None:
        self.path = path
        self.row = row
        self.column = column
        location = []
        if path is not None:
            location.append(f"file {path}")
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column {column}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)


class ParseError(DataError):
    """
    The file could not be parsed
    """


class EmptyDataset(DataError):
    """
    The file holds fewer than two points
    """


class NonNumericFeature(DataError):
    """
    A feature field is not a finite number
    """


class ResultFormatError(DataError):
    """
    A run result file is malformed
    """


#############
# Plot Errors
#############


class PlotError(ApolloniusError):
    """
    Generic Plotting Error
    """


class DimensionError(PlotError):
    """
    A plot was requested for data that is not two dimensional
    """
