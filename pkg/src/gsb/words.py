"""Alphabets, free-monoid words, and module words.

Symbols are interned: a word stores indices into its alphabet, and the
alphabet's listing order is its precedence (earlier symbol = greater).
All values are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    AlphabetError,
    AlphabetMismatchError,
    EmptyPatternError,
    UnknownSymbolError,
    WordSyntaxError,
)

_SYMBOL_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:\^-1)?")


def _validate_symbols(symbols):
    if not symbols:
        raise AlphabetError("a symbol list must not be empty")
    seen = set()
    for name in symbols:
        if not isinstance(name, str) or _SYMBOL_RE.fullmatch(name) is None:
            raise AlphabetError(f"bad symbol name {name!r}")
        if name in seen:
            raise AlphabetError(f"duplicate symbol {name!r}")
        seen.add(name)


@dataclass(frozen=True)
class Alphabet:
    """A finite ordered symbol set; listing order is descending precedence.

    ``inverse_pairs`` optionally pairs a symbol with its formal inverse
    (for group presentations).  The engine attaches no semantics to the
    pairing; unit relations are ordinary relations emitted by the
    constructions that need them.
    """

    symbols: tuple[str, ...]
    inverse_pairs: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        _validate_symbols(self.symbols)
        for s, t in self.inverse_pairs:
            if s not in self.symbols or t not in self.symbols:
                raise AlphabetError(f"inverse pair ({s}, {t}) is outside the alphabet")
            if s == t:
                raise AlphabetError(f"symbol {s!r} cannot be its own formal inverse")
        # canonical pair orientation and order, so equality ignores listing
        def orient(pair):
            s, t = pair
            if s.endswith("^-1") and not t.endswith("^-1"):
                return (t, s)
            if t.endswith("^-1") and not s.endswith("^-1"):
                return (s, t)
            return (s, t) if self.symbols.index(s) < self.symbols.index(t) else (t, s)

        canonical = sorted(
            (orient(p) for p in self.inverse_pairs),
            key=lambda pair: self.symbols.index(pair[0]),
        )
        object.__setattr__(self, "inverse_pairs", tuple(canonical))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, name: str) -> int:
        try:
            return self.symbols.index(name)
        except ValueError:
            raise UnknownSymbolError(name) from None

    def name(self, index: int) -> str:
        return self.symbols[index]

    def inverse_index(self, index: int) -> int | None:
        """Index of the declared formal inverse of a symbol, if any."""
        name = self.symbols[index]
        for s, t in self.inverse_pairs:
            if s == name:
                return self.index(t)
            if t == name:
                return self.index(s)
        return None

    def empty(self) -> Word:
        return Word(self, ())

    def word(self, text: str) -> Word:
        return parse_word(text, self)

    def word_from_names(self, names) -> Word:
        return Word(self, tuple(self.index(n) for n in names))


def pair_formal_inverses(symbols) -> tuple[tuple[str, str], ...]:
    """Pair every symbol ``s`` with ``s^-1`` when both are present."""
    present = set(symbols)
    pairs = []
    for name in symbols:
        if not name.endswith("^-1") and name + "^-1" in present:
            pairs.append((name, name + "^-1"))
    return tuple(pairs)


@dataclass(frozen=True, repr=False)
class Word:
    """An element of the free monoid over an alphabet.

    The empty word is the monoid unit and prints as ``1``.
    """

    alphabet: Alphabet
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        n = self.alphabet.size
        for c in self.letters:
            if not 0 <= c < n:
                raise AlphabetError(f"letter index {c} out of range")

    @property
    def degree(self) -> int:
        return len(self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def names(self) -> tuple[str, ...]:
        return tuple(self.alphabet.name(c) for c in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __str__(self) -> str:
        return print_word(self)

    def __repr__(self) -> str:
        return f"Word({print_word(self)})"


def concat(u: Word, v: Word) -> Word:
    """Monoid product; degrees add."""
    return u * v


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse ``a*a*b``-style text; the literal ``1`` is the empty word."""
    s = text.strip()
    if s == "1":
        return Word(alphabet, ())
    letters = []
    i, n = 0, len(s)
    expect_symbol = True
    while i < n:
        if s[i].isspace():
            i += 1
            continue
        if expect_symbol:
            m = _SYMBOL_RE.match(s, i)
            if m is None:
                raise WordSyntaxError("expected a symbol", i)
            letters.append(alphabet.index(m.group()))
            i = m.end()
            expect_symbol = False
        else:
            if s[i] != "*":
                raise WordSyntaxError("expected '*'", i)
            i += 1
            expect_symbol = True
    if expect_symbol:
        raise WordSyntaxError("dangling '*' or empty word text", n)
    return Word(alphabet, tuple(letters))


def print_word(word: Word) -> str:
    if not word.letters:
        return "1"
    return "*".join(word.names())


def occurrences(pattern: Word, host: Word) -> list[tuple[Word, Word]]:
    """All factorizations ``host = left * pattern * right``.

    Returned by increasing length of ``left``; empty if there is none.
    """
    if pattern.is_empty():
        raise EmptyPatternError("occurrence search needs a non-empty pattern")
    if pattern.alphabet != host.alphabet:
        raise AlphabetMismatchError("pattern and host live over different alphabets")
    p, h = pattern.letters, host.letters
    out = []
    for i in range(len(h) - len(p) + 1):
        if h[i : i + len(p)] == p:
            out.append(
                (Word(host.alphabet, h[:i]), Word(host.alphabet, h[i + len(p) :]))
            )
    return out


@dataclass(frozen=True)
class ModuleBasis:
    """Ordered free-module generator symbols (earlier = greater)."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        _validate_symbols(self.symbols)

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, name: str) -> int:
        try:
            return self.symbols.index(name)
        except ValueError:
            raise UnknownSymbolError(name) from None

    def name(self, index: int) -> str:
        return self.symbols[index]


@dataclass(frozen=True, repr=False)
class ModuleWord:
    """A module monomial ``u*y``: a word prefix and one basis generator."""

    prefix: Word
    basis: ModuleBasis
    generator: int

    def __post_init__(self):
        if not 0 <= self.generator < self.basis.size:
            raise AlphabetError(f"generator index {self.generator} out of range")

    @property
    def degree(self) -> int:
        return self.prefix.degree

    def generator_name(self) -> str:
        return self.basis.name(self.generator)

    def __str__(self) -> str:
        if self.prefix.is_empty():
            return self.generator_name()
        return f"{self.prefix}*{self.generator_name()}"

    def __repr__(self) -> str:
        return f"ModuleWord({self})"
