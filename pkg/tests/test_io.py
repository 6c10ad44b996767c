import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hsparse.core import (
    DirectedHyperarc,
    DirectedHypergraph,
    UndirectedHyperedge,
    UndirectedHypergraph,
    arc,
    edge,
)
from hsparse.hgio import ParseError, parse, write
from hsparse.instances import gen_lower_bound, gen_random_directed, gen_random_undirected
from hsparse.instances import LowerBoundParams
from fractions import Fraction


def test_parse_directed_example():
    H = parse(b"dhg 1\n2 1\n1.0 1 0 1 1\n")
    assert H == DirectedHypergraph(2, (arc((0,), (1,), 1.0),))


def test_parse_undirected_example():
    H = parse(b"uhg 1\n3 1\n2.5 3 0 1 2\n")
    assert H == UndirectedHypergraph(3, (edge((0, 1, 2), 2.5),))


def test_comments_and_blank_lines_ignored():
    text = b"# a comment\ndhg 1\n\n2 1  # inline\n1.0 1 0 1 1\n"
    assert parse(text).m == 1


def test_round_trip_examples():
    for data in (
        b"dhg 1\n2 1\n1.0 1 0 1 1\n",
        b"uhg 1\n3 1\n2.5 3 0 1 2\n",
        b"dhg 1\n4 2\n0.1 2 0 1 1 2\n3.0 1 3 2 0 1\n",
    ):
        H = parse(data)
        assert parse(write(H)) == H


def expect_error(data, category, line):
    with pytest.raises(ParseError) as exc:
        parse(data)
    assert exc.value.category == category
    assert exc.value.line == line


def test_malformed_header():
    expect_error(b"", "malformed header", 1)
    expect_error(b"xhg 1\n1 0\n", "malformed header", 1)
    expect_error(b"dhg 2\n1 0\n", "malformed header", 1)
    expect_error(b"dhg 1\nnope 0\n", "malformed header", 2)
    expect_error(b"dhg 1\n1\n", "malformed header", 2)


def test_index_out_of_range():
    expect_error(b"dhg 1\n2 1\n1.0 1 0 1 2\n", "index out of range", 3)
    expect_error(b"uhg 1\n2 1\n1.0 2 0 -1\n", "index out of range", 3)


def test_nonpositive_weight():
    expect_error(b"dhg 1\n2 1\n0 1 0 1 1\n", "nonpositive weight", 3)
    expect_error(b"uhg 1\n2 1\n-3.5 2 0 1\n", "nonpositive weight", 3)
    expect_error(b"uhg 1\n2 1\nabc 2 0 1\n", "nonpositive weight", 3)


def test_arity_mismatch():
    expect_error(b"dhg 1\n2 1\n1.0 2 0 1 1\n", "arity mismatch", 3)  # truncated
    expect_error(b"dhg 1\n2 2\n1.0 1 0 1 1\n", "arity mismatch", 3)  # record count
    expect_error(b"uhg 1\n3 1\n1.0 2 0 1 2\n", "arity mismatch", 3)  # trailing
    expect_error(b"uhg 1\n3 1\n1.0 0\n", "arity mismatch", 3)  # empty edge


def test_non_ascii_rejected():
    with pytest.raises(ParseError):
        parse("dhg 1\n2 1\n1.0 1 0 1 1 # é\n".encode("utf-8"))


def test_round_trip_generator_outputs():
    instances = [
        gen_lower_bound(LowerBoundParams(8, Fraction(1, 16))),
        gen_random_directed(10, 100, 5, (0.25, 4.0), seed=0),
        gen_random_undirected(10, 100, 4, (0.25, 4.0), seed=0),
    ]
    for H in instances:
        assert parse(write(H)) == H


weights = st.floats(min_value=1e-6, max_value=1e6, allow_nan=False)


@st.composite
def directed_hypergraphs(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    m = draw(st.integers(min_value=0, max_value=12))
    verts = st.sets(st.integers(min_value=0, max_value=n - 1), min_size=1)
    arcs = tuple(
        DirectedHyperarc(tuple(draw(verts)), tuple(draw(verts)), draw(weights))
        for _ in range(m)
    )
    return DirectedHypergraph(n, arcs)


@given(directed_hypergraphs())
@settings(max_examples=60, deadline=None)
def test_round_trip_property(H):
    assert parse(write(H)) == H
