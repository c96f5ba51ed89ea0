"""
Tests for mesh and tripy embeddings
"""

import pytest

from core.embeddings import (
    AdjacencyView,
    MeshVertex,
    TripyVertex,
    mesh_adjacent,
    mesh_vertices,
    mesh_view,
    parse_mesh_vertex,
    parse_tripy_vertex,
    sigma1,
    sigma2,
    sigma2_printed,
    simplex_view,
    tripy_adjacent,
    tripy_vertices,
    tripy_view,
    verify_isomorphism,
)
from core.exceptions import InvalidVertexError, VertexFormatError
from core.simplex import GraphParams, Vertex, make_vertex


class TestMesh:
    """Test suite for the triangular mesh."""

    def test_vertex_count(self):
        """Test T_m has (m+1)(m+2)/2 vertices."""
        assert len(mesh_vertices(4)) == 15

    def test_adjacency(self):
        """Test unit and anti-diagonal steps."""
        assert mesh_adjacent(MeshVertex(0, 0), MeshVertex(1, 0))
        assert mesh_adjacent(MeshVertex(1, 0), MeshVertex(0, 1))
        assert not mesh_adjacent(MeshVertex(0, 0), MeshVertex(1, 1))

    def test_parse(self):
        """Test the "x,y" format and its validation."""
        assert parse_mesh_vertex("1,2", 3) == MeshVertex(1, 2)
        with pytest.raises(InvalidVertexError):
            parse_mesh_vertex("2,2", 3)
        with pytest.raises(VertexFormatError):
            parse_mesh_vertex("1;2", 3)


class TestTripy:
    """Test suite for the triangular pyramid."""

    def test_vertex_count(self):
        """Test TP_L has binomial(L+3, 3) vertices."""
        assert len(tripy_vertices(2)) == 10
        assert len(tripy_vertices(4)) == 35

    def test_level_links(self):
        """Test parent/child links between adjacent levels."""
        parent = TripyVertex(1, 0, 0)
        assert tripy_adjacent(parent, TripyVertex(2, 0, 0))
        assert tripy_adjacent(parent, TripyVertex(2, 1, 0))
        assert tripy_adjacent(parent, TripyVertex(2, 0, 1))
        assert not tripy_adjacent(parent, TripyVertex(2, 1, 1))
        assert not tripy_adjacent(TripyVertex(0, 0, 0), TripyVertex(2, 0, 0))

    def test_parse(self):
        """Test the "k:x,y" format."""
        assert parse_tripy_vertex("2:1,0", 2) == TripyVertex(2, 1, 0)
        with pytest.raises(InvalidVertexError):
            parse_tripy_vertex("3:0,0", 2)
        with pytest.raises(VertexFormatError):
            parse_tripy_vertex("2,1,0", 2)


class TestSigma1:
    """Test suite for the mesh map."""

    def test_example(self):
        """Test (1,0) in T_2 maps to (1,1,0)."""
        assert sigma1(MeshVertex(1, 0), 2) == Vertex((1, 1, 0))

    @pytest.mark.parametrize("m", range(1, 7))
    def test_isomorphism(self, m):
        """Test sigma1 is an isomorphism T_m -> T_m^2."""
        assert verify_isomorphism(
            lambda a: sigma1(a, m), mesh_view(m), simplex_view(GraphParams(n=2, m=m))
        )


class TestSigma2:
    """Test suite for the tripy map."""

    def test_example(self):
        """Test (2,(1,0)) in TP_2 maps to (0,1,1,0)."""
        assert sigma2(TripyVertex(2, 1, 0), 2) == Vertex((0, 1, 1, 0))

    @pytest.mark.parametrize("levels", range(1, 5))
    def test_isomorphism(self, levels):
        """Test the corrected sigma2 is an isomorphism TP_L -> T_L^3."""
        assert verify_isomorphism(
            lambda a: sigma2(a, levels),
            tripy_view(levels),
            simplex_view(GraphParams(n=3, m=levels)),
        )

    def test_printed_formula_leaves_simplex(self):
        """Test the published formula gives a negative coordinate at (2,(1,0)), L=2."""
        image = sigma2_printed(TripyVertex(2, 1, 0), 2)
        assert image == (-1, 2, 1, 0)
        with pytest.raises(InvalidVertexError) as exc_info:
            make_vertex(image, GraphParams(n=3, m=2))
        assert exc_info.value.invariant == "nonnegative"

    def test_printed_formula_rejected(self):
        """Test the verifier rejects the published formula."""
        params = GraphParams(n=3, m=2)
        assert not verify_isomorphism(
            lambda a: make_vertex(sigma2_printed(a, 2), params),
            tripy_view(2),
            simplex_view(params),
        )


class TestVerifyIsomorphism:
    """Test suite for the isomorphism verifier."""

    def test_mapping_input(self):
        """Test a dict works as the vertex map."""
        mapping = {a: sigma1(a, 2) for a in mesh_vertices(2)}
        assert verify_isomorphism(mapping, mesh_view(2), simplex_view(GraphParams(n=2, m=2)))

    def test_size_mismatch(self):
        """Test graphs of different sizes."""
        assert not verify_isomorphism(
            lambda a: sigma1(a, 2), mesh_view(2), simplex_view(GraphParams(n=2, m=3))
        )

    def test_non_injective(self):
        """Test a map collapsing two vertices."""
        target = simplex_view(GraphParams(n=2, m=2))
        assert not verify_isomorphism(lambda a: Vertex((2, 0, 0)), mesh_view(2), target)

    def test_adjacency_broken(self):
        """Test a bijection that does not preserve adjacency."""
        path = AdjacencyView((0, 1, 2), lambda a, b: abs(a - b) == 1)
        relabeled = {0: 1, 1: 0, 2: 2}
        assert not verify_isomorphism(relabeled, path, path)
