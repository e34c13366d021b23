"""Monomial orderings on words and module words.

Every ordering is realized as a sort key: ``spec.key(w)`` returns a tuple
whose natural comparison agrees with the ordering, so ``sorted``/``max``
work directly.  ``compare`` returns -1, 0 or +1 and returns 0 only on
structural equality.  All comparisons are pure functions of (spec, words);
several orderings can coexist in one process.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import (
    AlphabetMismatchError,
    BasisMismatchError,
    TowerSymbolMissingError,
    UnknownSymbolError,
)
from .words import Alphabet, ModuleBasis, ModuleWord, Word

LESS, EQUAL, GREATER = -1, 0, 1


def _deglex_key(letters):
    # precedence rank == alphabet index, smaller index == greater letter
    return (len(letters), tuple(-c for c in letters))


@dataclass(frozen=True)
class DegLex:
    """Compare by degree first, then by letter precedence left to right."""

    def letter_key(self, alphabet: Alphabet):
        return _deglex_key

    def key(self, word: Word):
        return _deglex_key(word.letters)


@dataclass(frozen=True)
class Tower:
    """Weight-tuple ordering for presentations with a designated stable letter.

    A word splits uniquely as u0 t^e1 u1 ... t^en un around occurrences of
    the stable letters.  Words are compared by the tuple
    (n, u0, e1, u1, ..., en, un) lexicographically, base segments deg-lex,
    with t > t^-1.
    """

    stable: str = "t"
    stable_inv: str = "t^-1"

    def letter_key(self, alphabet: Alphabet):
        try:
            up = alphabet.index(self.stable)
            down = alphabet.index(self.stable_inv)
        except UnknownSymbolError as exc:
            raise TowerSymbolMissingError(
                f"tower letters ({self.stable}, {self.stable_inv}) not in alphabet"
            ) from exc

        def key(letters):
            parts = []
            seg = []
            count = 0
            for c in letters:
                if c == up or c == down:
                    parts.append(_deglex_key(tuple(seg)))
                    parts.append(1 if c == up else -1)
                    seg = []
                    count += 1
                else:
                    seg.append(c)
            parts.append(_deglex_key(tuple(seg)))
            return (count, *parts)

        return key

    def key(self, word: Word):
        return self.letter_key(word.alphabet)(word.letters)


@dataclass(frozen=True)
class WeightTuple:
    """The tower decomposition of one word: segments and signed stable letters.

    ``segments`` alternates base words and +1/-1 exponents, starting and
    ending with a (possibly empty) base word.
    """

    count: int
    segments: tuple

    def reassemble(self) -> Word:
        word = self.segments[0]
        alphabet = word.alphabet
        for i in range(1, len(self.segments), 2):
            name = self._stable if self.segments[i] == 1 else self._stable_inv
            word = word * Word(alphabet, (alphabet.index(name),)) * self.segments[i + 1]
        return word

    # filled in by tower_weight; kept out of equality on purpose
    _stable: str = field(default="t", compare=False)
    _stable_inv: str = field(default="t^-1", compare=False)


def tower_weight(spec: Tower, word: Word) -> WeightTuple:
    """Decompose a word into its tower weight tuple."""
    alphabet = word.alphabet
    try:
        up = alphabet.index(spec.stable)
        down = alphabet.index(spec.stable_inv)
    except UnknownSymbolError as exc:
        raise TowerSymbolMissingError(
            f"tower letters ({spec.stable}, {spec.stable_inv}) not in alphabet"
        ) from exc
    segments = []
    seg = []
    count = 0
    for c in word.letters:
        if c == up or c == down:
            segments.append(Word(alphabet, tuple(seg)))
            segments.append(1 if c == up else -1)
            seg = []
            count += 1
        else:
            seg.append(c)
    segments.append(Word(alphabet, tuple(seg)))
    return WeightTuple(
        count, tuple(segments), _stable=spec.stable, _stable_inv=spec.stable_inv
    )


@dataclass(frozen=True)
class ModuleTop:
    """Ordering on module words: prefixes first, generator order on ties."""

    word_order: DegLex | Tower = DegLex()

    def module_key(self, alphabet: Alphabet):
        wkey = self.word_order.letter_key(alphabet)

        def key(pair):
            letters, gen = pair
            return (wkey(letters), -gen)

        return key

    def key(self, mw: ModuleWord):
        return (self.word_order.key(mw.prefix), -mw.generator)


def compare(spec, u: Word, v: Word) -> int:
    """Total comparison; LESS/EQUAL/GREATER."""
    if u.alphabet != v.alphabet:
        raise AlphabetMismatchError("cannot compare words over different alphabets")
    ku, kv = spec.key(u), spec.key(v)
    if ku < kv:
        return LESS
    if ku > kv:
        return GREATER
    return EQUAL


def compare_module(spec: ModuleTop, w1: ModuleWord, w2: ModuleWord) -> int:
    if w1.basis != w2.basis:
        raise BasisMismatchError("cannot compare module words over different bases")
    if w1.prefix.alphabet != w2.prefix.alphabet:
        raise AlphabetMismatchError("cannot compare module words over different alphabets")
    k1, k2 = spec.key(w1), spec.key(w2)
    if k1 < k2:
        return LESS
    if k1 > k2:
        return GREATER
    return EQUAL


@dataclass
class OrderCheckReport:
    """Result of a randomized monomiality / compatibility check."""

    samples: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def _random_word(rng: random.Random, alphabet: Alphabet, max_len: int) -> Word:
    n = rng.randint(0, max_len)
    return Word(alphabet, tuple(rng.randrange(alphabet.size) for _ in range(n)))


def check_monomial(
    spec,
    alphabet: Alphabet,
    samples: int,
    seed: int,
    basis: ModuleBasis | None = None,
    max_len: int = 5,
) -> OrderCheckReport:
    """Randomized check that the ordering respects one-hole contexts.

    For word orderings: draws triples (u, v, context) with u < v and checks
    that the context preserves strictness.  For ModuleTop: draws module
    words w < w' and a left factor a, and checks a*w < a*w'.  Returns every
    violation found (expected none for the shipped orderings).
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    rng = random.Random(seed)
    violations = []
    if isinstance(spec, ModuleTop):
        if basis is None:
            raise ValueError("ModuleTop check needs a basis")
        for _ in range(samples):
            m1 = ModuleWord(_random_word(rng, alphabet, max_len), basis, rng.randrange(basis.size))
            m2 = ModuleWord(_random_word(rng, alphabet, max_len), basis, rng.randrange(basis.size))
            c = compare_module(spec, m1, m2)
            if c == EQUAL:
                continue
            if c == GREATER:
                m1, m2 = m2, m1
            a = _random_word(rng, alphabet, max_len)
            n1 = ModuleWord(a * m1.prefix, basis, m1.generator)
            n2 = ModuleWord(a * m2.prefix, basis, m2.generator)
            if compare_module(spec, n1, n2) != LESS:
                violations.append((m1, m2, a))
        return OrderCheckReport(samples, violations)

    for _ in range(samples):
        u = _random_word(rng, alphabet, max_len)
        v = _random_word(rng, alphabet, max_len)
        c = compare(spec, u, v)
        if c == EQUAL:
            continue
        if c == GREATER:
            u, v = v, u
        left = _random_word(rng, alphabet, max_len)
        right = _random_word(rng, alphabet, max_len)
        if compare(spec, left * u * right, left * v * right) != LESS:
            violations.append((u, v, left, right))
    return OrderCheckReport(samples, violations)
