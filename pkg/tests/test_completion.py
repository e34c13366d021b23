import random

import pytest

from gsb.completion import (
    Ambiguity,
    CompletionStatus,
    check_gsb,
    composition,
    find_ambiguities,
    is_trivial,
    shirshov_complete,
)
from gsb.errors import LeadingNotBelowError, MalformedAmbiguityError, ZeroPolynomialError
from gsb.orderings import DegLex
from gsb.poly import Polynomial, parse_polynomial
from gsb.rewrite import normal_form
from gsb.words import Alphabet

AB = Alphabet(("a", "b"))
ABCD = Alphabet(("a", "b", "c", "d"))
SPEC = DegLex()


def p(text, alphabet=AB):
    return parse_polynomial(text, alphabet)


def test_find_ambiguities_intersection_example():
    # leading words aab and ba overlap on b: w = aaba (plus the reverse
    # direction baab, where the suffix a of ba meets the prefix a of aab)
    rels = [p("a*a*b - b"), p("b*a - a")]
    ambs = find_ambiguities(rels, SPEC)
    assert all(x.kind == "intersection" for x in ambs)
    forward = [x for x in ambs if (x.f_index, x.g_index) == (0, 1)]
    assert len(forward) == 1
    amb = forward[0]
    assert (str(amb.w), str(amb.a), str(amb.b)) == ("a*a*b*a", "a*a", "a")
    assert amb.w.degree < 3 + 2  # proper overlap: deg f + deg g > deg w


def test_find_ambiguities_inclusion_example():
    rels = [p("a*b*a - b"), p("b - 1")]
    ambs = [x for x in find_ambiguities(rels, SPEC) if x.kind == "inclusion"]
    assert len(ambs) == 1
    amb = ambs[0]
    assert (str(amb.w), str(amb.a), str(amb.b)) == ("a*b*a", "a", "a")


def test_find_ambiguities_disjoint_letters():
    rels = [p("a*b - a", ABCD), p("c*d - c", ABCD)]
    assert find_ambiguities(rels, SPEC) == []


def test_find_ambiguities_equal_leading_words_once():
    rels = [p("a*b - a"), p("a*b - b")]
    ambs = find_ambiguities(rels, SPEC)
    assert len(ambs) == 1
    assert ambs[0].kind == "inclusion"
    assert (ambs[0].f_index, ambs[0].g_index) == (0, 1)
    assert ambs[0].a.is_empty() and ambs[0].b.is_empty()


def test_self_overlap_included():
    rels = [p("a*a - b")]
    ambs = find_ambiguities(rels, SPEC)
    assert len(ambs) == 1
    assert str(ambs[0].w) == "a*a*a"


def test_composition_examples():
    f = p("a*a - b")
    ambs = find_ambiguities([f], SPEC)
    h = composition(f, f, ambs[0], SPEC)
    assert h == p("a*b - b*a")
    # a degenerate self-inclusion computes to zero when built by hand
    amb = Ambiguity("inclusion", 0, 0, AB.word("a*a"), AB.word("1"), AB.word("1"))
    assert composition(f, f, amb, SPEC).is_zero()
    bad = Ambiguity("intersection", 0, 0, AB.word("a*b"), AB.word("a"), AB.word("b"))
    with pytest.raises(MalformedAmbiguityError):
        composition(f, f, bad, SPEC)


def test_composition_leading_below_w_random():
    rng = random.Random(17)
    keyf = SPEC.letter_key(AB)
    checked = 0
    while checked < 1000:
        lead_f = tuple(rng.randrange(2) for _ in range(rng.randint(2, 4)))
        tail_f = tuple(rng.randrange(2) for _ in range(rng.randint(0, 2)))
        lead_g = tuple(rng.randrange(2) for _ in range(rng.randint(2, 4)))
        tail_g = tuple(rng.randrange(2) for _ in range(rng.randint(0, 2)))
        f = Polynomial(AB, ((lead_f, 1), (tail_f, -1)))
        g = Polynomial(AB, ((lead_g, 1), (tail_g, -1)))
        if f.is_zero() or g.is_zero():
            continue
        if f.leading_word(SPEC).letters != lead_f or g.leading_word(SPEC).letters != lead_g:
            continue
        for amb in find_ambiguities([f, g], SPEC):
            h = composition(
                [f, g][amb.f_index], [f, g][amb.g_index], amb, SPEC
            )
            if not h.is_zero():
                assert keyf(h.leading_word(SPEC).letters) < keyf(amb.w.letters)
            checked += 1


def test_is_trivial_examples():
    w = AB.word("a*a*a")
    assert not is_trivial(p("a*b - b*a"), [p("a*a - b")], w, SPEC)
    assert is_trivial(Polynomial.zero(AB), [p("a*a - b")], w, SPEC)
    assert is_trivial(p("a*b - b*a"), [p("a*a - b"), p("a*b - b*a")], w, SPEC)
    with pytest.raises(LeadingNotBelowError):
        is_trivial(p("a*a*a*a"), [p("a*a - b")], w, SPEC)


def test_worked_completion():
    report = shirshov_complete([p("a*a - b")], SPEC)
    assert report.status is CompletionStatus.CERTIFIED_GSB
    assert set(report.relations) == {p("a*a - b"), p("a*b - b*a")}
    assert [str(e.relation) for e in report.added] == ["a*b - b*a"]
    assert report.processed >= 1
    assert report.verify_ideal_preservation()
    # certificate validity: the certified output passes the full check
    assert check_gsb(report.relations, SPEC).is_certificate
    cert = report.certificate()
    assert cert.relations == report.relations


def test_completion_rejects_zero_and_bad_limits():
    with pytest.raises(ZeroPolynomialError):
        shirshov_complete([Polynomial.zero(AB)], SPEC)
    with pytest.raises(ValueError):
        shirshov_complete([p("a*a - b")], SPEC, max_deg=0)


def test_completion_statuses():
    # degree bound below the one ambiguity: nothing to do, not certified
    report = shirshov_complete([p("a*a - b")], SPEC, max_deg=2)
    assert report.status is CompletionStatus.COMPLETE_UP_TO_DEGREE
    assert report.degree_bound == 2
    assert report.status_text() == "CompleteUpToDegree(2)"
    assert not report.added
    with pytest.raises(Exception):
        report.certificate()
    # a one-step budget on a system that needs more
    report = shirshov_complete([p("a*a - a*b"), p("b*b - b")], SPEC, max_steps=1)
    assert report.status is CompletionStatus.BUDGET_EXHAUSTED


def test_completion_interreduces_input():
    # aaa - a reduces against aa - b to ba - a at the start
    report = shirshov_complete([p("a*a - b"), p("a*a*a - a")], SPEC)
    assert report.status is CompletionStatus.CERTIFIED_GSB
    assert report.removed
    assert report.verify_ideal_preservation()
    for r in report.relations:
        assert r.is_monic(SPEC)
    assert check_gsb(report.relations, SPEC).is_certificate
    # the discarded input is still in the ideal of the output
    assert normal_form(p("a*a*a - a"), report.relations, SPEC).is_zero()


def test_unit_relation_collapse():
    # equal leading words force 1 into the ideal; everything collapses
    report = shirshov_complete([p("a - 1"), p("a - 2")], SPEC)
    assert report.status is CompletionStatus.CERTIFIED_GSB
    assert list(report.relations) == [Polynomial.unit(AB)]
    from gsb.rewrite import irr_words, quotient_dim_oracle

    assert irr_words(AB, report.relations, SPEC, 2) == []
    assert quotient_dim_oracle(AB, report.relations, SPEC, 2) == 0


def test_binomial_closure_sample():
    rng = random.Random(18)
    for _ in range(20):
        rels = []
        for _ in range(rng.randint(1, 3)):
            u = tuple(rng.randrange(2) for _ in range(rng.randint(1, 3)))
            v = tuple(rng.randrange(2) for _ in range(rng.randint(0, 3)))
            if u != v:
                rels.append(Polynomial(AB, ((u, 1), (v, -1))))
        if not rels:
            continue
        report = shirshov_complete(rels, SPEC, max_deg=6, max_steps=5000)
        assert all(r.is_binomial_difference() for r in report.relations)


def test_check_gsb_examples():
    report = check_gsb([p("a*a - b")], SPEC)
    assert not report.is_certificate
    assert len(report.nontrivial) == 1
    amb, residual = report.nontrivial[0]
    assert str(amb.w) == "a*a*a" and residual == p("a*b - b*a")
    assert check_gsb([p("a*a - b"), p("a*b - b*a")], SPEC).is_certificate


def test_check_gsb_degree_bound_blocks_certificate():
    report = check_gsb([p("a*a - b")], SPEC, max_deg=2)
    assert report.skipped == 1 and not report.nontrivial
    assert not report.is_certificate


def test_completion_soundness_on_random_inputs():
    # ideal preservation, replayable certificates, and independent
    # re-verification of certified outputs
    from gsb.rewrite import quotient_dim_oracle

    rng = random.Random(20)
    for _ in range(15):
        rels = []
        for _ in range(rng.randint(1, 3)):
            terms = [
                (
                    tuple(rng.randrange(2) for _ in range(rng.randint(0, 3))),
                    rng.choice((1, -1, 2)),
                )
                for _ in range(rng.randint(2, 3))
            ]
            q = Polynomial(AB, terms)
            if not q.is_zero():
                rels.append(q)
        if not rels:
            continue
        report = shirshov_complete(rels, SPEC, max_deg=6, max_steps=10_000)
        assert report.verify_ideal_preservation()
        # inputs lie in the output's ideal
        for r in rels:
            assert normal_form(r, report.relations, SPEC).is_zero()
        # adding the inputs back changes no quotient dimension
        monic_inputs = [r.make_monic(SPEC) for r in rels]
        for d in range(7):
            assert quotient_dim_oracle(
                AB, report.relations, SPEC, d
            ) == quotient_dim_oracle(AB, list(report.relations) + monic_inputs, SPEC, d)
        if report.status is CompletionStatus.CERTIFIED_GSB:
            assert check_gsb(report.relations, SPEC).is_certificate


def test_hnn_relations_complete_with_zero_additions():
    from gsb.constructions import GroupTable, build_hnn

    result = build_hnn(GroupTable.cyclic(3), 2)
    pres = result.presentation
    report = shirshov_complete(pres.relations, pres.ordering, max_deg=12)
    assert report.status is CompletionStatus.CERTIFIED_GSB
    assert not report.added
    assert set(report.relations) == set(pres.relations)
