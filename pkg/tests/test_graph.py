import pytest
from hypothesis import given, strategies as st

from antimagic.errors import MalformedLabelingError, ParseError
from antimagic.graph import (
    ArcLabeling,
    Graph,
    Orientation,
    center_vertices,
    format_certificate,
    format_edge_list,
    is_antimagic,
    is_connected,
    parse_certificate,
    parse_edge_list,
    radius,
    set_distance,
    vertex_sums,
)


def test_vertex_sums_triangle():
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])
    # 0->1 (1), 2->0 (2), 1->2 (3)
    o = Orientation(g, [True, False, True])
    s = vertex_sums(o, ArcLabeling([1, 2, 3]))
    assert s.sums == (1, -2, 1)
    ok, clash = is_antimagic(o, ArcLabeling([1, 2, 3]))
    assert not ok and clash == (0, 2)


def test_isolated_vertices_sum_zero():
    g = Graph(4, [(0, 1)])
    s = vertex_sums(Orientation(g, [True]), ArcLabeling([1]))
    assert s.sums == (-1, 1, 0, 0)


def test_labeling_window_and_validate():
    lab = ArcLabeling([3, 4, 5], offset=2)
    assert list(lab.window) == [3, 4, 5]
    lab.validate()
    with pytest.raises(MalformedLabelingError):
        ArcLabeling([1, 1, 3]).validate()


def test_radius_and_center():
    path = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert radius(path) == 2
    assert center_vertices(path) == [2]
    assert set_distance(path, 4, [0, 1]) == 3


def test_parse_edge_list_roundtrip():
    text = "4 3\n0 1\n0 3\n2 3\n"
    g = parse_edge_list(text)
    assert g.n == 4 and g.edges == ((0, 1), (0, 3), (2, 3))
    assert format_edge_list(g) == text


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("2", 1),
        ("2 1\n1 0\n", 2),
        ("2 1\nx y\n", 2),
        ("3 2\n0 1\n", 2),
        ("3 2\n0 2\n0 1\n", 3),
    ],
)
def test_parse_edge_list_errors(text, line):
    with pytest.raises(ParseError) as e:
        parse_edge_list(text)
    assert e.value.line == line


def test_certificate_roundtrip():
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])
    o = Orientation(g, [True, False, True])
    lab = ArcLabeling([2, 3, 1])
    o2, lab2 = parse_certificate(format_certificate(o, lab), g)
    assert o2.forward == o.forward and lab2.labels == lab.labels


def test_certificate_rejects_wrong_arc_and_duplicate_label():
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])
    with pytest.raises(MalformedLabelingError):
        parse_certificate("0 1 1\n1 2 2\n1 2 3\n", g)
    with pytest.raises(MalformedLabelingError):
        parse_certificate("0 1 1\n0 2 1\n1 2 3\n", g)


def test_connectivity():
    assert is_connected(Graph(3, [(0, 1), (1, 2)]))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))


@given(st.integers(2, 8).flatmap(
    lambda n: st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).map(
            lambda p: (min(p), max(p))
        ).filter(lambda p: p[0] != p[1]),
        unique=True, max_size=12,
    ).map(lambda es: Graph(n, sorted(es)))
))
def test_format_parse_inverse(g):
    assert parse_edge_list(format_edge_list(g)).edges == tuple(sorted(g.edges))
