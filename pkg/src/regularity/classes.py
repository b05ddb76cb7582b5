"""Three-way classification of graphs by regularity."""

from enum import Enum

from src.graphs import Graph, is_regular
from src.regularity.profile import is_walk_regular


class GraphClass(str, Enum):
    WALK_REGULAR = "WalkRegular"
    REGULAR_NOT_WALK_REGULAR = "RegularNotWalkRegular"
    NON_REGULAR = "NonRegular"


def classify(g: Graph) -> GraphClass:
    if not is_regular(g):
        return GraphClass.NON_REGULAR
    if is_walk_regular(g):
        return GraphClass.WALK_REGULAR
    return GraphClass.REGULAR_NOT_WALK_REGULAR
