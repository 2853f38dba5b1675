"""
The Ten Point Worked Example
"""

from apollonius.containers import DataSet, DataSource, NcarParams

FIG8_NOTE = (
    "Constructed coordinates. The reference layout is known only through the relations "
    "between its ten points: targets 1, 5 and 8, farthest point 4 for target 1, "
    "first group {2, 3, 4} around target 1 and point 10 as an outlier. "
    "This layout reproduces those relations with p=0.2 (r=2) and three targets."
)

FIG8_COORDINATES = (
    (0.0, 0.0),
    (-1.0, 0.0),
    (0.0, 1.0),
    (1.5, 0.0),
    (10.0, 0.0),
    (11.0, 0.0),
    (10.0, 5.0),
    (10.0, 4.0),
    (10.0, 2.0),
    (0.0, -12.0),
)
FIG8_IDS = tuple(range(1, 11))
FIG8_LABEL_NAMES = ("G1", "G2", "G3", "outlier")
FIG8_LABELS = (0, 0, 0, 0, 1, 1, 2, 2, 1, 3)
FIG8_PARAMS = NcarParams(p=0.2, target_count=3)


def fig8_fixture() -> DataSet:
    """
    Ten Point Layout of the Worked Example

    Point ids run from 1 to 10; the labels are the
    expected final grouping.

    Returns
    -------
    DataSet
    """
    return DataSet(
        name="fig8",
        points=FIG8_COORDINATES,
        labels=FIG8_LABELS,
        label_names=FIG8_LABEL_NAMES,
        ids=FIG8_IDS,
        source=DataSource.fixture,
    )
