import pytest

from gsb.errors import PresentationFormatError
from gsb.orderings import DegLex, ModuleTop, Tower
from gsb.poly import parse_polynomial
from gsb.presentation import (
    ModulePresentation,
    Presentation,
    format_presentation,
    load_presentation,
)

ALGEBRA_FILE = """\
# worked example
alphabet: a > b
ordering: deglex
relations:
a*a - b          # comments allowed here too
a*b - b*a
"""

MODULE_FILE = """\
alphabet: a > b
ordering: module-top
basis: y1 > y2
relations:
a*y1 - y2
"""

TOWER_FILE = """\
alphabet: t > t^-1 > b^-1 > b > a^-1 > a
ordering: tower(t, t^-1)
relations:
a*t - t*b
t*t^-1 - 1
"""


def test_load_algebra():
    p = load_presentation(ALGEBRA_FILE)
    assert isinstance(p, Presentation)
    assert p.alphabet.symbols == ("a", "b")
    assert isinstance(p.ordering, DegLex)
    assert set(p.relations) == {
        parse_polynomial("a*a - b", p.alphabet),
        parse_polynomial("a*b - b*a", p.alphabet),
    }


def test_load_module():
    p = load_presentation(MODULE_FILE)
    assert isinstance(p, ModulePresentation)
    assert isinstance(p.ordering, ModuleTop)
    assert p.basis.symbols == ("y1", "y2")
    assert len(p.relations) == 1


def test_load_tower_with_inverse_pairs():
    p = load_presentation(TOWER_FILE)
    assert isinstance(p.ordering, Tower)
    assert ("t", "t^-1") in p.alphabet.inverse_pairs
    assert ("a", "a^-1") in p.alphabet.inverse_pairs
    assert len(p.relations) == 2


def test_roundtrip():
    for text in (ALGEBRA_FILE, MODULE_FILE, TOWER_FILE):
        p = load_presentation(text)
        assert load_presentation(format_presentation(p)) == p


def test_relations_sorted_and_monicized():
    text = "alphabet: a > b\nordering: deglex\nrelations:\nb - a*a\n2*b*b - b\n"
    p = load_presentation(text)
    # b - a*a reorients to a*a - b; 2*b*b - b scales to b*b - 1/2*b
    assert [str(r) for r in p.relations] == ["b*b - 1/2*b", "a*a - b"]


def test_unknown_section_rejected():
    with pytest.raises(PresentationFormatError):
        load_presentation("alphabet: a\nweights: 1\nordering: deglex\nrelations:\n")


def test_missing_sections_rejected():
    with pytest.raises(PresentationFormatError):
        load_presentation("ordering: deglex\nrelations:\n")
    with pytest.raises(PresentationFormatError):
        load_presentation("alphabet: a\nrelations:\n")


def test_module_needs_basis_and_vice_versa():
    with pytest.raises(PresentationFormatError):
        load_presentation("alphabet: a\nordering: module-top\nrelations:\n")
    with pytest.raises(PresentationFormatError):
        load_presentation("alphabet: a\nordering: deglex\nbasis: y\nrelations:\n")


def test_bad_ordering_rejected():
    with pytest.raises(PresentationFormatError):
        load_presentation("alphabet: a\nordering: lex\nrelations:\n")


def test_empty_relations_allowed():
    p = load_presentation("alphabet: a > b\nordering: deglex\nrelations:\n")
    assert p.relations == ()
    q = load_presentation("alphabet: a > b\nordering: deglex\n")
    assert q.relations == ()
