import random

import pytest

from gsb.completion import CompletionStatus
from gsb.errors import NonMonicRelationError, ZeroPolynomialError
from gsb.modules import (
    module_ambiguities,
    module_check_gsb,
    module_complete,
    module_composition,
    module_irr,
    module_nf,
    module_nf_with_trace,
)
from gsb.orderings import ModuleTop
from gsb.poly import ModuleElement, Polynomial, act, parse_module_element
from gsb.words import Alphabet, ModuleBasis

AB = Alphabet(("a", "b"))
Y = ModuleBasis(("y1", "y2", "y3"))
SPEC = ModuleTop()


def m(text):
    return parse_module_element(text, AB, Y)


def test_module_nf_example():
    out = module_nf(m("b*a*y1"), [m("a*y1 - y2")], SPEC)
    assert out == m("b*y2")


def test_module_nf_suffix_only():
    # reduction anchors at the suffix: a*b*y1 is irreducible for lead b*a*y1
    rels = [m("b*a*y1 - y2")]
    assert module_nf(m("a*b*y1"), rels, SPEC) == m("a*b*y1")
    assert module_nf(m("a*b*a*y1"), rels, SPEC) == m("a*y2")


def test_module_nf_requires_monic():
    with pytest.raises(NonMonicRelationError):
        module_nf(m("y1"), [m("2*a*y1 - y2")], SPEC)


def test_module_trace_replays():
    rels = [m("a*y1 - y2"), m("b*y2 - y3")]
    elt = m("b*a*y1 + a*y1 - y3")
    nf, trace = module_nf_with_trace(elt, rels, SPEC)
    assert trace.reconstruct(rels) == elt
    assert module_nf(nf, rels, SPEC) == nf


def test_module_ambiguities_examples():
    f = m("a*b*y1 - y2")
    g = m("b*y1 - y3")
    ambs = module_ambiguities([f, g], SPEC)
    assert len(ambs) == 1
    assert (ambs[0].f_index, ambs[0].g_index, str(ambs[0].a)) == (0, 1, "a")

    assert module_ambiguities([m("a*y1 - y3"), m("a*y2 - y3")], SPEC) == []
    assert module_ambiguities([m("a*b*y1 - y2"), m("a*y1 - y3")], SPEC) == []


def test_module_ambiguities_equal_leads_once():
    ambs = module_ambiguities([m("a*y1 - y2"), m("a*y1 - y3")], SPEC)
    assert len(ambs) == 1
    assert (ambs[0].f_index, ambs[0].g_index) == (0, 1)
    assert ambs[0].a.is_empty()


def test_module_composition_cancels_leading():
    f = m("a*b*y1 - y2")
    g = m("b*y1 - y3")
    h = module_composition(f, g, AB.word("a"))
    assert h == m("a*y3 - y2")


def test_module_complete_empty_and_simple():
    report = module_complete([], SPEC)
    assert report.status is CompletionStatus.CERTIFIED_GSB
    assert report.relations == ()

    report = module_complete([m("a*b*y1 - y2"), m("b*y1 - y3")], SPEC)
    assert report.status is CompletionStatus.CERTIFIED_GSB
    assert module_check_gsb(report.relations, SPEC).is_certificate
    # the overlap residual a*y3 - y2 joins the basis
    assert m("a*y3 - y2") in report.relations
    assert module_nf(m("a*b*y1"), report.relations, SPEC) == module_nf(
        act(Polynomial.parse("a", AB), m("b*y1")), report.relations, SPEC
    )


def test_module_complete_rejects_zero():
    with pytest.raises(ZeroPolynomialError):
        module_complete([ModuleElement.zero(AB, Y)], SPEC)


def test_module_irr():
    rels = [m("a*y1 - y2")]
    words = module_irr(AB, Y, rels, SPEC, 1)
    names = [str(w) for w in words]
    # all prefix-degree <= 1 module words except a*y1
    assert "a*y1" not in names
    assert len(names) == 3 + 2 * 3 - 1
    assert names[0] == "y3"  # least: empty prefix, least generator
    assert len(module_irr(AB, Y, [], SPEC, 2)) == 7 * 3


def _module_rank_oracle(alphabet, basis, relations, spec, max_deg):
    """Exact elimination over the rows a*t, independent of the rewriting path."""
    from fractions import Fraction
    from itertools import product

    keyf = spec.module_key(alphabet)
    pivots = {}
    rank = 0
    for t in relations:
        lead_deg = t.leading_word(spec).degree
        for da in range(max_deg - lead_deg + 1):
            for a in product(range(alphabet.size), repeat=da):
                row = {(a + w, g): c for (w, g), c in t.raw_terms().items()}
                while row:
                    key = max(row, key=keyf)
                    piv = pivots.get(key)
                    if piv is None:
                        c = row[key]
                        pivots[key] = {k: v / c for k, v in row.items()}
                        rank += 1
                        break
                    c = row.pop(key)
                    for k, v in piv.items():
                        if k == key:
                            continue
                        nv = row.get(k, Fraction(0)) - c * v
                        if nv:
                            row[k] = nv
                        else:
                            row.pop(k, None)
    nwords = sum(alphabet.size**d for d in range(max_deg + 1))
    return nwords * basis.size - rank


def test_module_irr_counts_match_rank_oracle():
    rng = random.Random(21)
    for _ in range(15):
        rels = []
        for _ in range(rng.randint(1, 3)):
            terms = [
                (
                    (tuple(rng.randrange(2) for _ in range(rng.randint(0, 2))), rng.randrange(3)),
                    rng.choice((1, -1, 2)),
                )
                for _ in range(rng.randint(1, 3))
            ]
            elt = ModuleElement(AB, Y, terms)
            if not elt.is_zero():
                rels.append(elt)
        if not rels:
            continue
        report = module_complete(rels, SPEC, max_deg=5, max_steps=5000)
        if report.status is not CompletionStatus.CERTIFIED_GSB:
            continue
        for d in range(5):
            assert len(module_irr(AB, Y, report.relations, SPEC, d)) == _module_rank_oracle(
                AB, Y, report.relations, SPEC, d
            )


def test_leading_of_action_concatenates():
    # left compatibility makes leading words multiplicative
    rng = random.Random(19)
    for _ in range(200):
        pterms = [
            (tuple(rng.randrange(2) for _ in range(rng.randint(0, 3))), rng.choice((1, -1, 2)))
            for _ in range(rng.randint(1, 3))
        ]
        mterms = [
            ((tuple(rng.randrange(2) for _ in range(rng.randint(0, 3))), rng.randrange(3)), rng.choice((1, -1)))
            for _ in range(rng.randint(1, 3))
        ]
        p = Polynomial(AB, pterms)
        elt = ModuleElement(AB, Y, mterms)
        if p.is_zero() or elt.is_zero() or act(p, elt).is_zero():
            continue
        from gsb.orderings import DegLex

        lead = act(p, elt).leading_word(SPEC)
        expect_prefix = p.leading_word(DegLex()) * elt.leading_word(SPEC).prefix
        assert lead.prefix == expect_prefix
        assert lead.generator == elt.leading_word(SPEC).generator
