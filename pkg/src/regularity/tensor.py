"""Walk regularity of tensor products of line graphs, checked on exact walk counts."""

from dataclasses import dataclass

from src.graphs import Graph, line_graph, tensor_product
from src.regularity.profile import is_edge_walk_regular, is_walk_regular


@dataclass(frozen=True)
class LineTensorRegularityReport:
    """Flags for L(g), L(h) and the product P = L(g) x L(h).

    ``product_edge_walk_regular`` applies the edge criterion to P's adjacency;
    ``line_of_product_walk_regular`` tests L(P) directly.
    """

    g_edge_walk_regular: bool
    h_edge_walk_regular: bool
    product_edge_walk_regular: bool
    line_of_product_walk_regular: bool

    @property
    def inputs_pass(self) -> bool:
        return self.g_edge_walk_regular and self.h_edge_walk_regular

    @property
    def consistent(self) -> bool:
        """False only when both inputs pass but a product check fails."""
        if not self.inputs_pass:
            return True
        return self.product_edge_walk_regular and self.line_of_product_walk_regular


def line_walk_regular_tensor_check(g: Graph, h: Graph) -> LineTensorRegularityReport:
    lg, _ = line_graph(g)
    lh, _ = line_graph(h)
    product = tensor_product(lg, lh)
    line_of_product, _ = line_graph(product)
    return LineTensorRegularityReport(
        g_edge_walk_regular=is_edge_walk_regular(g),
        h_edge_walk_regular=is_edge_walk_regular(h),
        product_edge_walk_regular=is_edge_walk_regular(product),
        line_of_product_walk_regular=is_walk_regular(line_of_product),
    )
