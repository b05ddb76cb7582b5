"""Additivity of the walk entropy under tensor products."""

from dataclasses import dataclass

from src.entropy.walk import walk_entropy
from src.errors import GraphError
from src.graphs import Graph, is_connected, line_graph, tensor_product
from src.regularity import is_walk_regular

ADDITIVITY_TOL = 1e-9


@dataclass(frozen=True)
class TensorEntropyReport:
    product_entropy: float
    sum_entropy: float
    g_walk_regular: bool
    h_walk_regular: bool
    product_walk_regular: bool

    @property
    def difference(self) -> float:
        return self.product_entropy - self.sum_entropy

    @property
    def additive(self) -> bool:
        return abs(self.difference) <= ADDITIVITY_TOL


@dataclass(frozen=True)
class LineTensorEntropyReport:
    """Entropies around P = L(g) x L(h).

    ``line_of_product_entropy`` is S(L(P)), ``predicted`` is
    S(L(g)) + S(L(h)) + 1, and ``product_entropy`` is S(P) itself, which is
    plainly additive when L(g) and L(h) are walk-regular.
    """

    line_of_product_entropy: float
    predicted: float
    product_entropy: float
    line_sum_entropy: float

    @property
    def difference(self) -> float:
        return self.line_of_product_entropy - self.predicted


def walk_entropy_tensor_check(g: Graph, h: Graph, beta: float) -> TensorEntropyReport:
    if not (is_connected(g) and is_connected(h)):
        raise GraphError("Tensor entropy check needs two connected graphs")
    product = tensor_product(g, h)
    return TensorEntropyReport(
        product_entropy=walk_entropy(product, beta),
        sum_entropy=walk_entropy(g, beta) + walk_entropy(h, beta),
        g_walk_regular=is_walk_regular(g),
        h_walk_regular=is_walk_regular(h),
        product_walk_regular=is_walk_regular(product),
    )


def line_entropy_tensor_check(g: Graph, h: Graph, beta: float) -> LineTensorEntropyReport:
    lg, _ = line_graph(g)
    lh, _ = line_graph(h)
    product = tensor_product(lg, lh)
    line_of_product, _ = line_graph(product)
    line_sum = walk_entropy(lg, beta) + walk_entropy(lh, beta)
    return LineTensorEntropyReport(
        line_of_product_entropy=walk_entropy(line_of_product, beta),
        predicted=line_sum + 1.0,
        product_entropy=walk_entropy(product, beta),
        line_sum_entropy=line_sum,
    )
