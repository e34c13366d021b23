import random
from fractions import Fraction

import pytest

from gsb.completion import shirshov_complete
from gsb.errors import (
    CapacityError,
    NonMonicRelationError,
    UncertifiedBasisError,
)
from gsb.orderings import DegLex
from gsb.poly import Polynomial, parse_polynomial
from gsb.rewrite import (
    GsbCertificate,
    irr_words,
    is_member,
    normal_form,
    normal_form_random,
    normal_form_with_trace,
    quotient_dim_oracle,
)
from gsb.words import Alphabet

AB = Alphabet(("a", "b"))
SPEC = DegLex()


def p(text):
    return parse_polynomial(text, AB)


GSB = [p("a*a - b"), p("a*b - b*a")]


def test_normal_form_examples():
    assert normal_form(p("a*a*a"), GSB, SPEC) == p("b*a")
    assert normal_form(p("a*b"), GSB, SPEC) == p("b*a")
    assert normal_form(p("a"), [], SPEC) == p("a")


def test_normal_form_alphabet_mismatch():
    from gsb.errors import AlphabetMismatchError

    other = Alphabet(("c", "d"))
    with pytest.raises(AlphabetMismatchError):
        normal_form(p("a"), [parse_polynomial("c*c - d", other)], SPEC)


def test_normal_form_requires_monic():
    with pytest.raises(NonMonicRelationError) as exc:
        normal_form(p("a"), [p("2*a*a - b")], SPEC)
    assert exc.value.index == 0
    with pytest.raises(NonMonicRelationError):
        normal_form(p("a"), [Polynomial.zero(AB)], SPEC)


def test_normal_form_idempotent_and_linear():
    rng = random.Random(13)
    for _ in range(200):
        terms = lambda: [
            (tuple(rng.randrange(2) for _ in range(rng.randint(0, 5))), rng.choice((1, -1, 2, Fraction(1, 2))))
            for _ in range(rng.randint(0, 4))
        ]
        f, g = Polynomial(AB, terms()), Polynomial(AB, terms())
        nf_f = normal_form(f, GSB, SPEC)
        assert normal_form(nf_f, GSB, SPEC) == nf_f
        alpha, beta = Fraction(2), Fraction(-1, 3)
        combo = normal_form(alpha * f + beta * g, GSB, SPEC)
        assert combo == alpha * nf_f + beta * normal_form(g, GSB, SPEC)


def test_deterministic_step_choice():
    # leftmost occurrence first, then lowest rule index: the single letter
    # rule at position 0 wins over the longer rule at the same position
    abc = Alphabet(("a", "b", "c"))
    rules = [parse_polynomial("a - b", abc), parse_polynomial("a*a - c", abc)]
    out = normal_form(parse_polynomial("a*a", abc), rules, SPEC)
    assert out == parse_polynomial("b*b", abc)


def test_trace_replays_and_is_bounded():
    rng = random.Random(14)
    keyf = SPEC.letter_key(AB)
    for _ in range(200):
        terms = [
            (tuple(rng.randrange(2) for _ in range(rng.randint(0, 5))), rng.choice((1, -1, 3)))
            for _ in range(rng.randint(1, 4))
        ]
        f = Polynomial(AB, terms)
        nf, trace = normal_form_with_trace(f, GSB, SPEC)
        assert trace.residual == nf
        assert trace.reconstruct(GSB) == f
        if f.is_zero():
            continue
        bound = keyf(f.leading_word(SPEC).letters)
        for step in trace.steps:
            assert keyf(step.rewritten.letters) <= bound
        for word, _ in nf.terms():
            assert keyf(word.letters) <= bound
        # decomposition multiples stay below the input's leading word
        for coeff, left, rule, right in trace.decomposition():
            lead = left * GSB[rule].leading_word(SPEC) * right
            assert keyf(lead.letters) <= bound


def test_trace_degrees_never_increase_under_deglex():
    nf, trace = normal_form_with_trace(p("a*a*a*b"), GSB, SPEC)
    degrees = [step.rewritten.degree for step in trace.steps]
    assert degrees == sorted(degrees, reverse=True)


def test_irr_words_examples():
    words = irr_words(AB, GSB, SPEC, 3)
    assert [str(w) for w in words] == ["1", "b", "a", "b*b", "b*a", "b*b*b", "b*b*a"]
    assert len(irr_words(AB, [], SPEC, 2)) == 7
    assert [str(w) for w in irr_words(AB, [p("a - b")], SPEC, 1)] == ["1", "b"]


def test_irr_words_unit_relation_kills_everything():
    assert irr_words(AB, [Polynomial.unit(AB)], SPEC, 3) == []


def test_quotient_dim_examples():
    assert quotient_dim_oracle(AB, GSB, SPEC, 3) == 7
    assert quotient_dim_oracle(AB, [], SPEC, 2) == 7
    assert quotient_dim_oracle(AB, [p("a - b")], SPEC, 1) == 2


def test_quotient_dim_capacity():
    with pytest.raises(CapacityError):
        quotient_dim_oracle(AB, [], SPEC, 10, capacity=100)


def test_oracle_agrees_with_irr_on_certified_sets():
    rng = random.Random(15)
    for _ in range(5):
        rels = [
            Polynomial(
                AB,
                [
                    (tuple(rng.randrange(2) for _ in range(rng.randint(1, 3))), 1),
                    (tuple(rng.randrange(2) for _ in range(rng.randint(0, 3))), -1),
                ],
            )
            for _ in range(rng.randint(1, 2))
        ]
        rels = [r for r in rels if not r.is_zero()]
        if not rels:
            continue
        report = shirshov_complete(rels, SPEC, max_deg=5, max_steps=5000)
        for d in range(6):
            assert len(irr_words(AB, report.relations, SPEC, d)) == quotient_dim_oracle(
                AB, report.relations, SPEC, d
            )


def test_is_member_examples():
    cert = GsbCertificate(tuple(GSB), SPEC)
    assert is_member(p("a*b - b*a"), cert)
    assert not is_member(p("a"), cert)
    assert is_member(p("a*b*a - b*b"), cert)
    with pytest.raises(UncertifiedBasisError):
        is_member(p("a"), GSB)


def test_randomized_strategy_agrees_on_certified_basis():
    rng = random.Random(16)
    for _ in range(100):
        terms = [
            (tuple(rng.randrange(2) for _ in range(rng.randint(0, 5))), rng.choice((1, -1, 2)))
            for _ in range(rng.randint(1, 4))
        ]
        f = Polynomial(AB, terms)
        assert normal_form(f, GSB, SPEC) == normal_form_random(f, GSB, SPEC, rng)
