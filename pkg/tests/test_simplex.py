"""
Tests for the integer simplex core

Vertex validation, adjacency, the h-metric and position classification.
"""

import pytest

from core.exceptions import (
    InvalidParamsError,
    InvalidVertexError,
    ParamsMismatchError,
    VertexFormatError,
)
from core.simplex import (
    GraphParams,
    Vertex,
    classify_positions,
    corner,
    degree,
    enumerate_vertices,
    h_distance,
    is_adjacent,
    make_vertex,
    minimum_degree,
    neighbors,
    parse_vertex,
)


class TestGraphParams:
    """Test suite for instance parameters."""

    def test_valid_params(self):
        """Test a valid instance and its printable name."""
        params = GraphParams(n=2, m=3)
        assert params.n == 2
        assert params.m == 3
        assert str(params) == "T_3^2"

    @pytest.mark.parametrize("n,m", [(0, 2), (2, 0), (-1, 1)])
    def test_invalid_params(self, n, m):
        """Test that n < 1 or m < 1 is rejected."""
        with pytest.raises(InvalidParamsError):
            GraphParams(n=n, m=m)

    @pytest.mark.parametrize("n,m,count", [(2, 2, 6), (3, 3, 20), (2, 4, 15), (3, 2, 10)])
    def test_vertex_count(self, n, m, count):
        """Test binomial(n+m, m) vertex count."""
        assert GraphParams(n=n, m=m).vertex_count == count

    def test_params_are_hashable(self):
        """Test params work as cache keys."""
        assert {GraphParams(2, 2): 1}[GraphParams(n=2, m=2)] == 1


class TestMakeVertex:
    """Test suite for vertex validation."""

    def test_valid_vertex(self, t22):
        """Test that a valid tuple becomes a vertex."""
        v = make_vertex((2, 0, 0), t22)
        assert v.coords == (2, 0, 0)
        assert str(v) == "2,0,0"
        assert v.params == t22

    def test_leftmost_is_index_n(self):
        """Test that the leftmost coordinate is index n."""
        v = make_vertex((3, 1, 0, 0), GraphParams(n=3, m=4))
        assert v.coord(3) == 3
        assert v.coord(2) == 1
        assert v.coord(0) == 0

    def test_length_violation(self, t22):
        """Test wrong coordinate count."""
        with pytest.raises(InvalidVertexError) as exc_info:
            make_vertex((1, 1), t22)
        assert exc_info.value.invariant == "length"

    def test_negative_violation(self, t22):
        """Test negative coordinate."""
        with pytest.raises(InvalidVertexError) as exc_info:
            make_vertex((3, -1, 0), t22)
        assert exc_info.value.invariant == "nonnegative"

    def test_sum_violation(self, t22):
        """Test coordinate sum different from m."""
        with pytest.raises(InvalidVertexError) as exc_info:
            make_vertex((1, 0, 0), t22)
        assert exc_info.value.invariant == "sum"
        assert "violates sum invariant" in str(exc_info.value)

    def test_parse_vertex(self, t22):
        """Test the textual format."""
        assert parse_vertex("1, 0, 1", t22) == Vertex((1, 0, 1))

    def test_parse_vertex_garbage(self, t22):
        """Test non-numeric text."""
        with pytest.raises(VertexFormatError):
            parse_vertex("a,b,c", t22)


class TestAdjacency:
    """Test suite for implicit adjacency."""

    def test_corner_neighbors(self, t22):
        """Test the neighbors of a corner."""
        v = make_vertex((2, 0, 0), t22)
        assert neighbors(v) == {Vertex((1, 1, 0)), Vertex((1, 0, 1))}

    def test_interior_neighbors(self):
        """Test the six neighbors of (1,1,0,0) in T_2^3."""
        params = GraphParams(n=3, m=2)
        v = make_vertex((1, 1, 0, 0), params)
        assert neighbors(v) == {
            Vertex((0, 2, 0, 0)), Vertex((0, 1, 1, 0)), Vertex((0, 1, 0, 1)),
            Vertex((2, 0, 0, 0)), Vertex((1, 0, 1, 0)), Vertex((1, 0, 0, 1)),
        }

    def test_degree_formula(self, t33):
        """Test degree = n * (number of positive coordinates)."""
        for v in enumerate_vertices(t33):
            assert degree(v) == len(neighbors(v))
            assert degree(v) == 3 * sum(1 for c in v.coords if c > 0)

    def test_neighbors_stay_in_instance(self, t32):
        """Test that every neighbor is a valid vertex at h-distance 1."""
        for v in enumerate_vertices(t32):
            for w in neighbors(v):
                assert make_vertex(w.coords, t32) == w
                assert is_adjacent(v, w)

    def test_adjacency_symmetric(self, t22):
        """Test adjacency is symmetric."""
        vertices = enumerate_vertices(t22)
        for a in vertices:
            for b in vertices:
                assert is_adjacent(a, b) == is_adjacent(b, a)

    @pytest.mark.parametrize("n,m", [(2, 2), (2, 4), (3, 2)])
    def test_minimum_degree(self, n, m):
        """Test minimum degree equals n (attained at corners)."""
        assert minimum_degree(GraphParams(n=n, m=m)) == n


class TestHDistance:
    """Test suite for the h-metric."""

    def test_corners(self, t22):
        """Test the distance between opposite corners is m."""
        assert h_distance(Vertex((2, 0, 0)), Vertex((0, 0, 2))) == 2

    def test_example_pair(self):
        """Test (3,1,0,0) to (0,1,2,1) in T_4^3."""
        params = GraphParams(n=3, m=4)
        u = make_vertex((3, 1, 0, 0), params)
        v = make_vertex((0, 1, 2, 1), params)
        assert h_distance(u, v) == 3

    def test_identity_and_bound(self, t33):
        """Test h(v, v) = 0 and h <= m."""
        vertices = enumerate_vertices(t33)
        for a in vertices:
            assert h_distance(a, a) == 0
            for b in vertices:
                assert h_distance(a, b) <= t33.m

    def test_mismatch(self, t22):
        """Test vertices of different instances are rejected."""
        with pytest.raises(ParamsMismatchError):
            h_distance(Vertex((2, 0, 0)), Vertex((2, 0, 0, 0)))
        with pytest.raises(ParamsMismatchError):
            h_distance(Vertex((2, 0, 0)), Vertex((3, 0, 0)))


class TestEnumeration:
    """Test suite for vertex enumeration."""

    def test_order(self, t22):
        """Test lexicographic order."""
        assert [str(v) for v in enumerate_vertices(t22)] == [
            "0,0,2", "0,1,1", "0,2,0", "1,0,1", "1,1,0", "2,0,0",
        ]

    def test_distinct_and_valid(self, t33):
        """Test every enumerated vertex is distinct and valid."""
        vertices = enumerate_vertices(t33)
        assert len(set(vertices)) == len(vertices) == 20
        for v in vertices:
            assert make_vertex(v.coords, t33) == v


class TestClassifyPositions:
    """Test suite for position classification."""

    def test_example(self):
        """Test (3,1,0,0) vs (0,1,2,1)."""
        params = GraphParams(n=3, m=4)
        classes = classify_positions(
            make_vertex((3, 1, 0, 0), params), make_vertex((0, 1, 2, 1), params)
        )
        assert classes.down == {3}
        assert classes.up == {1, 0}
        assert classes.equal == {2}
        assert (classes.p, classes.q) == (1, 2)

    def test_partition(self, t33):
        """Test the three sets partition 0..n and p, q >= 1 for u != v."""
        vertices = enumerate_vertices(t33)
        for u in vertices:
            for v in vertices:
                classes = classify_positions(u, v)
                assert classes.down | classes.up | classes.equal == {0, 1, 2, 3}
                assert not classes.down & classes.up
                if u != v:
                    assert classes.p >= 1 and classes.q >= 1


class TestCorner:
    """Test suite for corner vertices."""

    def test_corners(self, t32):
        """Test m0^n and 0^n m."""
        assert corner(t32, 2) == Vertex((3, 0, 0))
        assert corner(t32, 0) == Vertex((0, 0, 3))

    def test_corner_out_of_range(self, t32):
        """Test an index outside 0..n."""
        with pytest.raises(InvalidVertexError):
            corner(t32, 3)
