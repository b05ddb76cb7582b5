import pytest

from src.errors import Graph6Error
from src.graphs import Graph, enumerate_graphs, iter_graph6_lines, parse_graph6, read_graph6
from src.graphs import families, write_graph6


@pytest.mark.parametrize(
    "text,n,edges",
    [
        ("@", 1, ()),
        ("A_", 2, ((0, 1),)),
        ("Bw", 3, ((0, 1), (0, 2), (1, 2))),
        ("C~", 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    ],
)
def test_parse_known_strings(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n
    assert g.edges() == edges


def test_write_known_graphs():
    assert write_graph6(Graph.empty(1)) == "@"
    assert write_graph6(families.complete(2)) == "A_"
    assert write_graph6(families.complete(3)) == "Bw"


def test_column_order_of_bits():
    # only pair (0, 2), the second bit of the column-ordered stream
    g = Graph.from_edges(3, [(0, 2)])
    assert write_graph6(g) == chr(63 + 3) + chr(63 + 0b010000)
    assert parse_graph6(write_graph6(g)) == g


def test_enumerated_graphs_survive_the_codec():
    for n in range(1, 6):
        for g in enumerate_graphs(n, connected=False):
            assert parse_graph6(write_graph6(g)) == g


def test_surrounding_whitespace_is_ignored():
    assert parse_graph6("  Bw\n") == families.complete(3)


@pytest.mark.parametrize(
    "text,offset",
    [
        ("A!", 1),  # "!" is below the graph6 range
        ("A_x", 2),  # one byte too many for n = 2
        ("B", 1),  # data byte missing
        ("A`", 1),  # padding bit set
        ("~?", 0),  # long form
        ("?", 0),  # zero nodes
    ],
)
def test_malformed_strings_report_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert f"byte offset {offset}" in str(info.value)


def test_non_ascii_character_is_rejected():
    with pytest.raises(Graph6Error) as info:
        parse_graph6("Bé")
    assert info.value.offset == 1


def test_empty_string_is_rejected():
    with pytest.raises(Graph6Error):
        parse_graph6("   ")


def test_write_rejects_large_graphs():
    with pytest.raises(Graph6Error):
        write_graph6(Graph.empty(63))


def test_iter_lines_strips_header_and_blanks():
    lines = [">>graph6<<A_\n", "\n", "Bw\n", ">>graph6<<\n", "@"]
    assert list(iter_graph6_lines(lines)) == [(1, "A_"), (3, "Bw"), (5, "@")]


def test_read_graph6_names_the_failing_line():
    with pytest.raises(Graph6Error, match="Line 2"):
        list(read_graph6(["A_", "A "]))
