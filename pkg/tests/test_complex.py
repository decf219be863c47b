import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from serre_sr.complex import (EMPTY, PROPER, VOID, DomainError, MalformedInputError,
                              alexander_dual, empty, f_vector, face, facet_graph, facet_height,
                              faces_of_dim, format_facets, from_facets, induced, is_connected,
                              is_face, is_j_locally_connected, link, members, minimal_nonfaces,
                              parse_facets, simplex, skeleton, void)
from strategies import complexes, pure_complexes


def F(*vs):
    return face(vs)


def test_from_facets_absorbs_subsets():
    d = from_facets([[0, 1], [1, 2], [0, 1, 2]], 3)
    assert d.facets == (F(0, 1, 2),)


def test_empty_face_gives_empty_complex():
    d = from_facets([0], 3)
    assert d.kind == EMPTY and d.dim == -1 and d.krull_dim == 0


def test_no_candidates_give_void():
    d = from_facets([], 3)
    assert d.kind == VOID and d.dim is None and d.krull_dim is None
    assert f_vector(d) == () and not is_connected(d)


def test_vertex_outside_ground_set_rejected():
    with pytest.raises(MalformedInputError):
        from_facets([[0, 3]], 3)


def test_bowtie_basics(bowtie):
    assert bowtie.kind == PROPER and len(bowtie.facets) == 2 and bowtie.dim == 2
    assert is_face(bowtie, F(0, 2)) and not is_face(bowtie, F(0, 3))
    assert is_face(empty(0), 0)
    assert len(faces_of_dim(bowtie, 0)) == 5
    edges = [members(e) for e in faces_of_dim(bowtie, 1)]
    assert sorted(edges) == [[0, 1], [0, 2], [1, 2], [2, 3], [2, 4], [3, 4]]
    assert faces_of_dim(bowtie, -1) == [0]
    assert faces_of_dim(simplex(4), 3) == [F(0, 1, 2, 3)]
    assert faces_of_dim(bowtie, 7) == []
    assert bowtie.is_pure()
    assert not from_facets([[0, 1, 2], [3, 4]], 5).is_pure()


def test_f_vector_of_cycle(cycle3):
    assert f_vector(cycle3) == (1, 3, 3)


def test_links(bowtie):
    assert link(bowtie, F(2)).facets == (F(0, 1), F(3, 4))
    assert not is_connected(link(bowtie, F(2)))
    assert link(bowtie, 0) == bowtie
    assert link(bowtie, F(0, 1, 2)).kind == EMPTY
    with pytest.raises(DomainError):
        link(bowtie, F(0, 3))


def test_induced(bowtie):
    assert induced(bowtie, F(0, 1, 2)).facets == (F(0, 1, 2),)
    assert induced(bowtie, F(0, 3)).facets == (F(0), F(3))
    assert induced(bowtie, bowtie.ground) == bowtie


def test_skeletons(bowtie):
    assert len(skeleton(bowtie, 1).facets) == 6
    assert skeleton(bowtie, 0).facets == tuple(1 << v for v in range(5))
    assert skeleton(bowtie, 2) == bowtie
    assert skeleton(bowtie, -1).kind == EMPTY


def test_alexander_dual_examples(bowtie):
    pts = from_facets([[0], [1]], 2)
    assert alexander_dual(pts).kind == EMPTY
    dual = alexander_dual(bowtie)
    assert minimal_nonfaces(dual) == (F(0, 1), F(3, 4))
    assert alexander_dual(simplex(3)).kind == VOID
    assert alexander_dual(void(3)) == simplex(3)


def test_facet_graphs(bowtie, sphere2):
    assert facet_graph(bowtie, 1).edges == ()
    assert facet_graph(bowtie, 2).edges == ((0, 1),)
    assert len(facet_graph(sphere2, 1).edges) == 6
    assert is_j_locally_connected(bowtie, 2) == (True, None)
    assert is_j_locally_connected(bowtie, 1) == (False, 0)
    assert is_j_locally_connected(simplex(3), 1) == (True, None)
    with pytest.raises(DomainError):
        facet_graph(bowtie, 0)
    with pytest.raises(DomainError):
        facet_graph(void(2), 1)


def test_height_nonpure_uses_largest_facet():
    d = from_facets([[0, 1, 2], [2, 3]], 4)
    # the meet {2} sits in the triangle, so its height is 3 - 1
    assert facet_height(d, F(0, 1, 2), F(2, 3)) == 2


def test_empty_is_disconnected_and_single_vertex_connected():
    assert not is_connected(empty(2))
    assert is_connected(from_facets([[1]], 2))


# facet file format

def test_parse_labels_in_first_appearance_order():
    d = parse_facets("# bowtie\nb a c\nc, d e\n")
    assert d.names == ("b", "a", "c", "d", "e")
    assert d.facets == (F(0, 1, 2), F(2, 3, 4))


def test_parse_empty_and_void():
    assert parse_facets("empty\n").kind == EMPTY
    assert parse_facets("# nothing\n").kind == VOID


def test_parse_vertices_header():
    d = parse_facets("vertices: a b c\na b\n")
    assert d.n == 3 and d.facets == (F(0, 1),)
    with pytest.raises(MalformedInputError, match="line 2"):
        parse_facets("a b\nvertices: a b\n")
    with pytest.raises(MalformedInputError, match="undeclared"):
        parse_facets("vertices: a\na b\n")


def test_format_is_canonical(bowtie):
    assert format_facets(bowtie) == "0 1 2\n2 3 4\n"
    assert format_facets(empty(0)) == "vertices: \nempty\n"


@given(complexes(max_n=7))
def test_format_round_trip(d):
    assert parse_facets(format_facets(d)).facets == d.facets
    assert format_facets(parse_facets(format_facets(d))) == format_facets(d)


# structural properties

@given(complexes(max_n=7))
def test_dual_is_involution(d):
    assert alexander_dual(alexander_dual(d)) == d


@given(complexes(max_n=6), st.data())
def test_link_composition(d, data):
    faces = d.faces
    s = data.draw(st.sampled_from(faces))
    lk = link(d, s)
    t = data.draw(st.sampled_from(lk.faces))
    assert link(lk, t) == link(d, s | t)


@given(complexes(max_n=6), st.integers(-1, 5))
def test_skeleton_idempotent(d, i):
    sk = skeleton(d, i)
    assert skeleton(sk, i) == sk
    assert all(f.bit_count() <= i + 1 for f in sk.facets)


@given(pure_complexes(max_n=6), st.data())
def test_skeleton_of_pure_is_pure(d, data):
    i = data.draw(st.integers(0, d.dim))
    assert skeleton(d, i).is_pure()


@given(complexes(max_n=6), st.integers(1, 4))
def test_facet_graph_monotone(d, j):
    assert set(facet_graph(d, j).edges) <= set(facet_graph(d, j + 1).edges)


@given(pure_complexes(max_n=6))
def test_pure_g1_is_facet_ridge_graph(d):
    fs = d.facets
    k = fs[0].bit_count()
    ridge = {(a, b) for a in range(len(fs)) for b in range(a + 1, len(fs))
             if (fs[a] & fs[b]).bit_count() == k - 1}
    assert set(facet_graph(d, 1).edges) == ridge


@settings(max_examples=60)
@given(complexes(max_n=6))
def test_faces_are_closed_under_subsets(d):
    fs = set(d.faces)
    for f in fs:
        for v in members(f):
            assert f & ~(1 << v) in fs
