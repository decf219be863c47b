import pytest

from serre_sr.complex import face, format_facets, from_facets, simplex
from serre_sr.monomial import MonomialIdeal, alexander_dual_ideal, stanley_reisner_ideal
from serre_sr.verify import (EXHAUSTIVE, RANDOM, SUITES, CapError, CorpusSpec, Params,
                             SuiteReport, VacuousSuiteError, bundled_config,
                             check_pd_bound, check_radical_transfer, check_reg_bound,
                             check_skeleton_theorems, enumerate_pure, generate, load_config,
                             minimize, random_monomial_ideal, run_config_section,
                             run_equivalence_suite, run_properties, run_radical_suite)


def sq(n, *supports):
    return MonomialIdeal.from_supports([face(s) for s in supports], n)


def test_exhaustive_counts():
    assert len(list(enumerate_pure(4, 3))) == 15
    assert len(list(enumerate_pure(5, 3))) == 1023
    assert list(enumerate_pure(3, 3)) == [simplex(3)]
    corpus = list(enumerate_pure(5, 3))
    assert len({d.facets for d in corpus}) == len(corpus)


def test_caps():
    with pytest.raises(CapError, match="mode=random"):
        list(enumerate_pure(20, 3))
    with pytest.raises(CapError):
        CorpusSpec(8, 3).validate()  # C(8,4) = 70 candidate facets
    with pytest.raises(CapError):
        CorpusSpec(13, None, RANDOM, 5).validate()
    with pytest.raises(CapError):
        CorpusSpec(5, None, RANDOM, 0).validate()
    CorpusSpec(8, 0).validate()


def test_random_corpora_are_deterministic():
    spec = CorpusSpec(7, None, RANDOM, 40, seed=11)
    a = [d.facets for d in generate(spec)]
    assert a == [d.facets for d in generate(spec)]
    assert a != [d.facets for d in generate(CorpusSpec(7, None, RANDOM, 40, seed=12))]
    nonpure = list(generate(CorpusSpec(7, None, RANDOM, 60, seed=3, pure=False)))
    assert any(not d.is_pure() for d in nonpure)
    fixed = list(enumerate_pure(6, 3, RANDOM, 10, seed=4))
    assert all(d.is_pure() and d.dim == 2 for d in fixed)


def test_random_monomial_ideal():
    # frozen outputs of the seeded generator
    assert str(random_monomial_ideal(2, 2, 2, 0)) == "(x0*x1)"
    assert str(random_monomial_ideal(2, 2, 2, 1)) == "(x0^2)"
    assert len(random_monomial_ideal(3, 3, 1, 9).gens) == 1
    assert random_monomial_ideal(3, 1, 4, 2).is_squarefree
    ideal = random_monomial_ideal(4, 3, 4, 5)
    assert ideal.is_proper and not ideal.is_zero and ideal.max_exponent <= 3
    with pytest.raises(CapError):
        random_monomial_ideal(5, 5, 2, 0)


def test_pd_bound_fixtures(bowtie, two_triangles):
    chk = check_pd_bound(bowtie, 1, 2)[0]
    assert chk.applicable and (chk.value, chk.bound, chk.slack) == (3, 3, 0)
    chk = check_pd_bound(two_triangles, 2, 2)[0]
    assert chk.applicable and (chk.value, chk.bound, chk.slack) == (5, 5, 0)
    assert not check_pd_bound(two_triangles, 2, 2)[1].applicable
    assert not any(c.applicable for c in check_pd_bound(simplex(3), 0, 2))


def test_reg_bound_fixtures(bowtie):
    chk = check_reg_bound(alexander_dual_ideal(stanley_reisner_ideal(bowtie)), 1, 2)[0]
    assert chk.applicable and (chk.value, chk.bound) == (3, 3)
    # principal ideal: the dual of three points on three vertices' complement
    chk = check_reg_bound(sq(3, [0, 1, 2]), 0, 2)
    assert not chk[0].applicable  # c = 3 > n - 1
    # the maximal ideal is generated in degree c = 1, so the clause applies with no slack
    chk = check_reg_bound(sq(4, [0], [1], [2], [3]), 0, 2)[0]
    assert chk.applicable and (chk.value, chk.bound) == (1, 1)


def test_reg_bound_needs_the_dimension_hypothesis():
    # two disjoint edges: the dual ideal (x0x1, x2x3) has c = 2 <= n - 2 and
    # satisfies the Tor vanishing at j = 1, yet reg = 3 exceeds n - 2 - floor((n-3-j)/c) = 2
    edges = from_facets([[0, 1], [2, 3]], 4)
    dual = alexander_dual_ideal(stanley_reisner_ideal(edges))
    literal = check_reg_bound(dual, 1, 2, literal=True)[1]
    assert literal.applicable and not literal.ok and (literal.value, literal.bound) == (3, 2)
    assert not check_reg_bound(dual, 1, 2)[1].applicable


def test_skeleton_fixtures(bowtie):
    chk = check_skeleton_theorems(bowtie, 2, 1, 1, 2)
    assert chk.applicable and chk.pure_exponent == 0 and chk.ok
    assert not check_skeleton_theorems(bowtie, 2, 0, 1, 2).applicable
    same = check_skeleton_theorems(bowtie, 2, 1, 2, 2)
    assert same.ok and same.pure_exponent == 1


def test_radical_fixtures():
    sqf = sq(3, [0, 1], [1, 2])
    chk = check_radical_transfer(sqf, 2, 0, 2)
    assert chk.polarization_holds == chk.radical_holds
    chk = check_radical_transfer(MonomialIdeal.from_generators([(2,)], 1), 2, 0, 2)
    assert chk.polarization_holds and chk.radical_holds


def test_single_simplex_passes():
    rep = run_properties([simplex(3)], SUITES["equivalence"], Params())
    assert rep.passed


def test_everything_skipped_is_not_a_pass():
    rep = run_properties([simplex(3)], ["pd-bound"], Params())
    assert rep.properties["pd-bound"].skipped == 1 and not rep.passed


def test_minimize_keeps_failure():
    d = from_facets([[0, 1, 2], [2, 3, 4], [0, 5]], 6)
    small = minimize(d, lambda x: len(x.facets) >= 2 and face([2, 3, 4]) in x.facets)
    assert len(small.facets) == 2 and face([2, 3, 4]) in small.facets


def test_failures_are_reported_with_facet_files(monkeypatch):
    import serre_sr.verify as v

    def always_fails(delta, prm):
        return "boom" if len(delta.facets) > 1 else None

    monkeypatch.setitem(v.PROPERTIES, "always-fails", always_fails)
    d = from_facets([[0, 1], [1, 2], [2, 3]], 4)
    rep = run_properties([d], ["always-fails"], Params())
    f = rep.properties["always-fails"].failures[0]
    assert f["complex"] == format_facets(d) and f["detail"] == "boom"
    assert [ln for ln in f["minimized"].splitlines() if "vertices" not in ln] == ["1 2", "2 3"]
    assert not rep.passed


def test_reports_are_deterministic_and_mergeable():
    spec = CorpusSpec(5, 2, EXHAUSTIVE)
    a = run_equivalence_suite(spec, js=(0, 1), ells=(2,), cross_field=None)
    b = run_equivalence_suite(spec, js=(0, 1), ells=(2,), cross_field=None, workers=2)
    strip = lambda r: [(p.property_id, p.checked, p.skipped, p.failures) for p in r.properties.values()]
    assert strip(a) == strip(b)
    merged = SuiteReport("m")
    merged.merge(a)
    merged.merge(b)
    assert merged.instances == 2 * 1023 and merged.passed


def test_empty_grid_is_vacuous():
    with pytest.raises(VacuousSuiteError):
        run_equivalence_suite(CorpusSpec(4, 2), ells=())
    with pytest.raises(VacuousSuiteError):
        run_radical_suite(0)


def test_config_parsing():
    runs = load_config("field = 3\n[a]\nn = 4\nk = 3\n[b]\nn = 5\nk=2\nells = 2-3\n")
    assert [r["name"] for r in runs] == ["a", "b"]
    assert runs[0]["field"] == "3"
    assert load_config("n = 4\nk = 3\n")[0]["name"] == "run"
    rep = run_config_section(load_config("n=4\nk=3\nsuites=equivalence,necessity\n")[0], 1)
    assert rep.passed and rep.instances == 15
    with pytest.raises(CapError):
        run_config_section(load_config("mode = exhaustive\nn = 20\nk = 3\n")[0])


def test_bundled_config_lists_acceptance_runs():
    names = [r["name"] for r in load_config(bundled_config())]
    assert names == ["pure-n5-k3", "pure-n4-k3", "random-pure-n7", "random-any-n7", "radical"]
