"""Presentations and their text file format.

File layout (UTF-8, ``#`` starts a comment):

    alphabet: a > b > x1 > x2
    ordering: deglex | tower(t, t^-1) | module-top
    basis: y1 > y2            # modules only
    relations:
    a*a - b

Relations are normalized monic on load (scaling does not change the ideal)
and presentations keep their relations sorted by leading word, so the
loader and writer are mutually inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import PresentationFormatError, ZeroPolynomialError
from .orderings import DegLex, ModuleTop, Tower
from .poly import (
    ModuleElement,
    Polynomial,
    format_module_element,
    format_polynomial,
    parse_module_element,
    parse_polynomial,
)
from .words import Alphabet, ModuleBasis, pair_formal_inverses

_TOWER_RE = re.compile(r"tower\(\s*([^\s,]+)\s*,\s*([^\s,)]+)\s*\)")


@dataclass(frozen=True)
class Presentation:
    """An alphabet with precedence, an ordering spec, and monic relations."""

    alphabet: Alphabet
    ordering: object
    relations: tuple[Polynomial, ...]

    def __post_init__(self):
        keyf = self.ordering.letter_key(self.alphabet)
        for idx, r in enumerate(self.relations):
            if r.is_zero():
                raise ZeroPolynomialError(f"relation #{idx} is zero")
        ordered = sorted(
            self.relations, key=lambda p: keyf(p.leading_word(self.ordering).letters)
        )
        object.__setattr__(self, "relations", tuple(ordered))

    def monic(self) -> Presentation:
        return Presentation(
            self.alphabet,
            self.ordering,
            tuple(r.make_monic(self.ordering) for r in self.relations),
        )


@dataclass(frozen=True)
class ModulePresentation:
    """A module presentation: alphabet, ordered basis, monic relations."""

    alphabet: Alphabet
    basis: ModuleBasis
    ordering: ModuleTop
    relations: tuple[ModuleElement, ...]

    def __post_init__(self):
        keyf = self.ordering.module_key(self.alphabet)
        for idx, r in enumerate(self.relations):
            if r.is_zero():
                raise ZeroPolynomialError(f"relation #{idx} is zero")
        ordered = sorted(
            self.relations,
            key=lambda m: keyf(max(m.raw_terms(), key=keyf)),
        )
        object.__setattr__(self, "relations", tuple(ordered))

    def monic(self) -> ModulePresentation:
        return ModulePresentation(
            self.alphabet,
            self.basis,
            self.ordering,
            tuple(r.make_monic(self.ordering) for r in self.relations),
        )


def _parse_symbol_chain(body: str, where: str) -> tuple[str, ...]:
    names = [part.strip() for part in body.split(">")]
    if any(not n for n in names):
        raise PresentationFormatError(f"empty symbol in {where} section")
    return tuple(names)


def _parse_ordering(body: str):
    text = body.strip()
    if text == "deglex":
        return DegLex()
    if text == "module-top":
        return ModuleTop()
    m = _TOWER_RE.fullmatch(text)
    if m:
        return Tower(m.group(1), m.group(2))
    raise PresentationFormatError(f"unknown ordering {text!r}")


def load_presentation(text: str):
    """Parse a presentation file; returns Presentation or ModulePresentation."""
    sections: dict[str, str] = {}
    relation_lines: list[str] = []
    in_relations = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if in_relations:
            relation_lines.append(line.strip())
            continue
        if ":" not in line:
            raise PresentationFormatError(f"line {lineno}: expected 'section: ...'")
        head, _, body = line.partition(":")
        section = head.strip()
        if section == "relations":
            if body.strip():
                raise PresentationFormatError(
                    f"line {lineno}: relations start on the following lines"
                )
            in_relations = True
            continue
        if section not in ("alphabet", "ordering", "basis"):
            raise PresentationFormatError(f"line {lineno}: unknown section {section!r}")
        if section in sections:
            raise PresentationFormatError(f"line {lineno}: duplicate section {section!r}")
        sections[section] = body.strip()
    if "alphabet" not in sections:
        raise PresentationFormatError("missing alphabet section")
    if "ordering" not in sections:
        raise PresentationFormatError("missing ordering section")
    symbols = _parse_symbol_chain(sections["alphabet"], "alphabet")
    alphabet = Alphabet(symbols, pair_formal_inverses(symbols))
    ordering = _parse_ordering(sections["ordering"])
    if "basis" in sections or isinstance(ordering, ModuleTop):
        if "basis" not in sections:
            raise PresentationFormatError("module-top ordering needs a basis section")
        if not isinstance(ordering, ModuleTop):
            raise PresentationFormatError("a basis section needs the module-top ordering")
        basis = ModuleBasis(_parse_symbol_chain(sections["basis"], "basis"))
        rels = tuple(
            parse_module_element(line, alphabet, basis).make_monic(ordering)
            for line in relation_lines
        )
        return ModulePresentation(alphabet, basis, ordering, rels)
    rels = tuple(
        parse_polynomial(line, alphabet).make_monic(ordering)
        for line in relation_lines
    )
    return Presentation(alphabet, ordering, rels)


def _format_ordering(ordering) -> str:
    if isinstance(ordering, DegLex):
        return "deglex"
    if isinstance(ordering, Tower):
        return f"tower({ordering.stable}, {ordering.stable_inv})"
    if isinstance(ordering, ModuleTop):
        return "module-top"
    raise PresentationFormatError(f"cannot format ordering {ordering!r}")


def format_presentation(p) -> str:
    lines = [f"alphabet: {' > '.join(p.alphabet.symbols)}"]
    lines.append(f"ordering: {_format_ordering(p.ordering)}")
    if isinstance(p, ModulePresentation):
        lines.append(f"basis: {' > '.join(p.basis.symbols)}")
        lines.append("relations:")
        lines.extend(format_module_element(r, p.ordering) for r in p.relations)
    else:
        lines.append("relations:")
        lines.extend(format_polynomial(r, p.ordering) for r in p.relations)
    return "\n".join(lines) + "\n"


def load_presentation_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return load_presentation(fh.read())


def save_presentation_file(p, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_presentation(p))
