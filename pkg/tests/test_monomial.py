import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import minimal_primes_brute
from serre_sr.complex import (EMPTY, VOID, DomainError, MalformedInputError, alexander_dual,
                              face, from_facets, simplex)
from serre_sr.monomial import (MonomialIdeal, alexander_dual_ideal, codim, complex_of_ideal,
                               depolarize, divides, drop_unused, format_ideal, minimal_primes,
                               parse_ideal, polarize, radical, stanley_reisner_ideal)
from strategies import complexes


def I(n, *gens):
    return MonomialIdeal.from_generators(gens, n)


def sq(n, *supports):
    return MonomialIdeal.from_supports([face(s) for s in supports], n)


def test_stanley_reisner_examples(cycle3, bowtie):
    assert stanley_reisner_ideal(cycle3) == sq(3, [0, 1, 2])
    assert stanley_reisner_ideal(bowtie) == sq(5, [0, 3], [0, 4], [1, 3], [1, 4])
    assert stanley_reisner_ideal(simplex(3)).is_zero


def test_complex_of_ideal_examples():
    assert complex_of_ideal(sq(2, [0, 1])) == from_facets([[0], [1]], 2)
    assert complex_of_ideal(MonomialIdeal(3, ())) == simplex(3)
    assert complex_of_ideal(sq(2, [0], [1])).kind == EMPTY
    assert complex_of_ideal(I(2, (0, 0))).kind == VOID
    with pytest.raises(DomainError):
        complex_of_ideal(I(2, (2, 0)))


def test_minimal_primes_examples(bowtie):
    assert minimal_primes(stanley_reisner_ideal(bowtie)) == [face([0, 1]), face([3, 4])]
    assert minimal_primes(sq(2, [0, 1])) == [face([0]), face([1])]
    assert minimal_primes(MonomialIdeal(3, ())) == [0]


def test_dual_ideal_examples(bowtie):
    assert alexander_dual_ideal(sq(2, [0, 1])) == sq(2, [0], [1])
    assert alexander_dual_ideal(stanley_reisner_ideal(bowtie)) == sq(5, [3, 4], [0, 1])
    assert alexander_dual_ideal(sq(2, [0], [1])) == sq(2, [0, 1])
    assert alexander_dual_ideal(MonomialIdeal(2, ())).is_unit
    assert alexander_dual_ideal(I(2, (0, 0))).is_zero


def test_polarize_examples():
    p = polarize(I(1, (2,)))
    assert p.n == 2 and p.gens == ((1, 1),)
    assert str(p) == "(x0_1*x0_2)"
    p = polarize(I(2, (2, 1)))
    assert p.n == 4 and p.gens == ((1, 1, 1, 0),)
    s = sq(3, [0, 1], [1, 2])
    assert polarize(s).gens == s.gens
    assert polarize(s).names == ("x0_1", "x1_1", "x2_1")
    with pytest.raises(DomainError):
        polarize(I(2, (0, 0)))


def test_radical_examples():
    assert radical(I(2, (2, 1))) == sq(2, [0, 1])
    assert radical(I(2, (2, 0), (1, 3))) == sq(2, [0])
    s = sq(3, [0, 1], [2])
    assert radical(s) == s


def test_codim_examples(bowtie):
    assert codim(stanley_reisner_ideal(bowtie)) == 2
    assert codim(MonomialIdeal(4, ())) == 0
    assert codim(sq(4, [0], [1], [2], [3])) == 4


def test_minimalization():
    ideal = I(2, (1, 1), (1, 0), (2, 3), (1, 0))
    assert ideal.gens == ((1, 0),)
    with pytest.raises(MalformedInputError):
        I(2, (1, 2, 3))
    with pytest.raises(MalformedInputError):
        I(2, (-1, 0))


def test_drop_unused():
    small, dropped = drop_unused(polarize(I(2, (2, 0), (1, 1))))
    assert dropped == ["x1_2"]
    assert small.n == 3 and small.names == ("x0_1", "x0_2", "x1_1")


def test_ideal_file_format():
    text = "# an ideal\nvars: a b c\na^2*c\nb*c\n"
    ideal = parse_ideal(text)
    assert set(ideal.gens) == {(2, 0, 1), (0, 1, 1)}
    assert parse_ideal(format_ideal(ideal)) == ideal
    assert parse_ideal("vars: a\n1\n").is_unit
    assert parse_ideal("vars: a b\n").is_zero
    with pytest.raises(MalformedInputError, match="line 2"):
        parse_ideal("vars: a b\na*z\n")
    with pytest.raises(MalformedInputError, match="vars"):
        parse_ideal("a*b\n")


monomial_ideals = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 3)] * n), min_size=1, max_size=4).map(
        lambda gens: MonomialIdeal.from_generators([g for g in gens if any(g)] or [(1,) * n], n)))


@given(complexes(max_n=6))
def test_dictionary_round_trip(d):
    assert complex_of_ideal(stanley_reisner_ideal(d)) == d


@given(complexes(max_n=6))
def test_dual_consistency(d):
    assert alexander_dual_ideal(stanley_reisner_ideal(d)) == stanley_reisner_ideal(alexander_dual(d))


@given(complexes(max_n=6))
def test_ideal_dual_involution(d):
    ideal = stanley_reisner_ideal(d)
    assert alexander_dual_ideal(alexander_dual_ideal(ideal)) == ideal


@given(complexes(max_n=6))
def test_minimal_primes_match_brute_force(d):
    ideal = stanley_reisner_ideal(d)
    want = [sum(1 << v for v in P) for P in minimal_primes_brute(ideal.gens, ideal.n)]
    assert sorted(minimal_primes(ideal)) == sorted(want)


@given(monomial_ideals)
def test_depolarization_recovers_the_radical(ideal):
    width = max(ideal.max_exponent, 1)
    back = depolarize(polarize(ideal), ideal.n, width)
    assert radical(back) == radical(ideal)
    assert back == ideal


@given(monomial_ideals)
def test_generators_stay_minimal(ideal):
    for built in (ideal, polarize(ideal), radical(ideal)):
        for a in built.gens:
            for b in built.gens:
                assert a == b or not divides(a, b)


@given(monomial_ideals)
def test_polarization_preserves_degrees(ideal):
    assert polarize(ideal).degrees() == ideal.degrees()
    assert polarize(ideal).is_squarefree
