"""Builders for the embedding presentations, certified at finite truncation.

Each builder emits the relation families for user-chosen index bounds,
computes (never transcribes) the orientation of every relation, and then
runs the full composition check.  A builder fails loudly when the
predicted zero-nontrivial-compositions certification does not hold on the
instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .completion import CheckReport, check_gsb, find_ambiguities
from .errors import (
    CertificationError,
    IndexOutOfRangeError,
    NonCanonicalSupportError,
    OrientationError,
    PresentationFormatError,
    SingleLetterAlphabetError,
    SymbolClashError,
    TableIncompleteError,
    UncertifiedBasisError,
    ZeroPolynomialError,
)
from .lyndon import BracketedWord, is_alsw, std_bracketing
from .modules import module_ambiguities, module_check_gsb, module_nf
from .orderings import DegLex, Tower
from .poly import ModuleElement, Polynomial
from .presentation import ModulePresentation, Presentation
from .rewrite import normal_form
from .words import Alphabet, ModuleBasis, Word


class GroupTable:
    """A (possibly truncated) group multiplication table.

    Elements are indexed 1..size; index 0 stands for the identity.
    ``product`` maps (j, k) to an element index, ``inverse`` maps j to the
    index of its inverse.  Associativity is checked wherever every lookup
    involved is defined.
    """

    def __init__(self, size: int, product, inverse):
        if size < 1:
            raise PresentationFormatError("a group table needs at least one element")
        self.size = size
        self.product = {tuple(k): v for k, v in dict(product).items()}
        self.inverse = dict(inverse)
        for (j, k), v in self.product.items():
            if not (1 <= j <= size and 1 <= k <= size and 0 <= v <= size):
                raise PresentationFormatError(f"product entry ({j},{k})->{v} out of range")
        for j, v in self.inverse.items():
            if not (1 <= j <= size and 0 <= v <= size):
                raise PresentationFormatError(f"inverse entry {j}->{v} out of range")
        self._check_associativity()
        self._check_inverses()

    @classmethod
    def cyclic(cls, order: int) -> GroupTable:
        """The cyclic group of the given order; size is order - 1."""
        if order < 2:
            raise PresentationFormatError("cyclic tables need order >= 2")
        size = order - 1
        product = {
            (j, k): (j + k) % order for j in range(1, size + 1) for k in range(1, size + 1)
        }
        inverse = {j: (order - j) % order for j in range(1, size + 1)}
        return cls(size, product, inverse)

    def _mul(self, x: int, y: int):
        """Product with identity folded in; None when the entry is missing."""
        if x == 0:
            return y
        if y == 0:
            return x
        return self.product.get((x, y))

    def _check_associativity(self):
        for j in range(1, self.size + 1):
            for k in range(1, self.size + 1):
                jk = self.product.get((j, k))
                if jk is None:
                    continue
                for l in range(1, self.size + 1):
                    kl = self.product.get((k, l))
                    if kl is None:
                        continue
                    left = self._mul(jk, l)
                    right = self._mul(j, kl)
                    if left is None or right is None:
                        continue
                    if left != right:
                        raise PresentationFormatError(
                            f"table is not associative at ({j},{k},{l})"
                        )

    def _check_inverses(self):
        for j, v in self.inverse.items():
            for pair in ((j, v), (v, j)):
                if 0 not in pair and pair in self.product and self.product[pair] != 0:
                    raise PresentationFormatError(
                        f"inverse entry {j}->{v} conflicts with the product table"
                    )

    def require(self, j: int, k: int) -> int:
        v = self.product.get((j, k))
        if v is None:
            raise TableIncompleteError(f"product ({j},{k}) is missing")
        return v

    def require_inverse(self, j: int) -> int:
        v = self.inverse.get(j)
        if v is None:
            raise TableIncompleteError(f"inverse of element {j} is missing")
        return v


@dataclass(frozen=True)
class HnnResult:
    presentation: Presentation
    report: CheckReport


def build_hnn(table: GroupTable, index_bound: int) -> HnnResult:
    """The two-generator group embedding presentation, truncated.

    Emits the eight relation families over {g_i, a, b, t and inverses}
    under the tower ordering and certifies that every composition is
    trivial on the instance.
    """
    if not 1 <= index_bound <= table.size:
        raise IndexOutOfRangeError(
            f"index bound {index_bound} outside 1..{table.size}"
        )
    names = ("t", "t^-1", "b^-1", "b", "a^-1", "a") + tuple(
        f"g{i}" for i in range(1, table.size + 1)
    )
    alphabet = Alphabet(names, (("a", "a^-1"), ("b", "b^-1"), ("t", "t^-1")))
    spec = Tower("t", "t^-1")

    def run(name: str, power: int = 1):
        return [name] * power

    def g_word(index: int):
        return [] if index == 0 else [f"g{index}"]

    def word(parts) -> Word:
        return alphabet.word_from_names(parts)

    relations = []

    def rel(lhs_parts, rhs_parts):
        lhs = word(lhs_parts)
        rhs = word(rhs_parts)
        p = Polynomial.from_word(lhs) - Polynomial.from_word(rhs)
        if p.is_zero():
            raise ZeroPolynomialError(f"degenerate relation at {lhs}")
        if p.leading_word(spec) != lhs:
            raise OrientationError(
                f"computed leading side of {lhs} = {rhs} is not the displayed left side"
            )
        relations.append(p)

    b_ = index_bound
    # family 1: the group table
    for j in range(1, b_ + 1):
        for k in range(1, b_ + 1):
            rel(["g" + str(j), "g" + str(k)], g_word(table.require(j, k)))
    # families 2 and 3: the stable letter shifts a to b and back
    for eps in ("a", "a^-1"):
        rel([eps, "t"], ["t", "b" if eps == "a" else "b^-1"])
    for eps in ("b", "b^-1"):
        rel([eps, "t^-1"], ["t^-1", "a" if eps == "b" else "a^-1"])
    # families 4-7: the conjugation relations
    for i in range(1, b_ + 1):
        inv = table.require_inverse(i)
        core = g_word(i) + run("a^-1", i) + ["b"] + run("a", i)
        core_inv = run("a^-1", i) + ["b^-1"] + run("a", i) + g_word(inv)
        rel(["a"] + run("b", i) + ["t"], run("b", i) + ["t"] + core)
        rel(["a^-1"] + run("b", i) + ["t"], run("b", i) + ["t"] + core_inv)
        rel(
            ["b"] + run("a", i) + ["t^-1"],
            run("a", i) + g_word(inv) + ["t^-1"] + run("b^-1", i) + ["a"] + run("b", i),
        )
        rel(
            ["b^-1"] + run("a", i) + g_word(inv) + ["t^-1"],
            run("a", i) + ["t^-1"] + run("b^-1", i) + ["a^-1"] + run("b", i),
        )
    # family 8: formal inverses multiply to the unit
    for s in ("a", "b", "t"):
        rel([s, s + "^-1"], [])
        rel([s + "^-1", s], [])

    presentation = Presentation(alphabet, spec, tuple(relations))
    report = check_gsb(presentation.relations, spec)
    if not report.is_certificate:
        raise CertificationError(
            f"{len(report.nontrivial)} nontrivial compositions in the truncated instance"
        )
    return HnnResult(presentation, report)


@dataclass(frozen=True)
class MalcevResult:
    presentation: Presentation
    report: CheckReport
    new_ambiguities: int
    witness: dict


def build_malcev(base: Presentation, count: int, a: str = "a", b: str = "b") -> MalcevResult:
    """Adjoin the two fresh generators and the defining words for x_1..x_count.

    The base must be a certified basis under deg-lex; the extended set is
    re-certified and the irreducibility of the original generators is
    returned as the embedding witness.
    """
    if not isinstance(base.ordering, DegLex):
        raise PresentationFormatError("this construction works over deg-lex bases")
    if a == b or a in base.alphabet.symbols or b in base.alphabet.symbols:
        raise SymbolClashError(f"fresh symbols {a!r}, {b!r} clash with the base alphabet")
    if not 1 <= count <= base.alphabet.size:
        raise IndexOutOfRangeError(
            f"count {count} outside 1..{base.alphabet.size}"
        )
    base_report = check_gsb(base.relations, base.ordering)
    if not base_report.is_certificate:
        raise UncertifiedBasisError("the base presentation is not a certified basis")
    spec = DegLex()
    alphabet = Alphabet((a, b) + base.alphabet.symbols)
    shift = 2

    def embed(p: Polynomial) -> Polynomial:
        return Polynomial(
            alphabet,
            {
                tuple(c + shift for c in w): coeff
                for w, coeff in p.raw_terms().items()
            },
        )

    relations = [embed(r) for r in base.relations]
    base_len = len(relations)
    ai, bi = 0, 1
    for i in range(1, count + 1):
        lhs = (ai, ai) + (bi,) * i + (ai, bi)
        p = Polynomial(alphabet, {lhs: 1, (shift + i - 1,): -1})
        if p.leading_word(spec).letters != lhs:
            raise OrientationError("defining word does not lead its generator")
        relations.append(p)
    ambiguities = find_ambiguities(relations, spec)
    new = [
        amb
        for amb in ambiguities
        if amb.f_index >= base_len or amb.g_index >= base_len
    ]
    if new:
        raise CertificationError(f"{len(new)} unexpected new compositions")
    report = check_gsb(relations, spec)
    if not report.is_certificate:
        raise CertificationError("extended set failed certification")
    witness = {}
    for i in range(count):
        gen = Word(alphabet, (shift + i,))
        witness[alphabet.name(shift + i)] = normal_form(
            Polynomial.from_word(gen), relations, spec
        )
    return MalcevResult(
        Presentation(alphabet, spec, tuple(relations)), report, len(new), witness
    )


class MultTable:
    """A total multiplication table over a finite basis x_1..x_n.

    Values are linear combinations over the basis and the unit; entries may
    be given as a generator name, ``"1"``, or a {name: coeff} mapping.
    """

    def __init__(self, basis, products):
        self.basis = tuple(basis)
        n = len(self.basis)
        if n < 1:
            raise PresentationFormatError("a multiplication table needs a basis")
        index = {name: i for i, name in enumerate(self.basis)}
        self.entries = {}
        products = dict(products)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if (i, j) not in products:
                    raise TableIncompleteError(f"product ({i},{j}) is missing")
        for (i, j), value in products.items():
            if not (1 <= i <= len(self.basis) and 1 <= j <= len(self.basis)):
                raise PresentationFormatError(f"entry ({i},{j}) out of range")
            if isinstance(value, str):
                value = {value: 1}
            combo = []
            for name, coeff in value.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                if name == "1":
                    combo.append((None, coeff))
                elif name in index:
                    combo.append((index[name], coeff))
                else:
                    raise PresentationFormatError(
                        f"entry ({i},{j}) references unknown generator {name!r}"
                    )
            self.entries[(i, j)] = tuple(combo)

    def base_alphabet(self) -> Alphabet:
        return Alphabet(self.basis)


@dataclass(frozen=True)
class SimplePair:
    """One stage pair (f, g) with its two fresh letters."""

    f: Polynomial
    g: Polynomial
    x_symbol: str
    y_symbol: str


@dataclass(frozen=True)
class SimpleStepInput:
    pairs: tuple[SimplePair, ...]


@dataclass(frozen=True)
class SimpleStepResult:
    presentation: Presentation
    report: CheckReport
    ambiguity_words: tuple[Word, ...]
    exponents: tuple[int, ...]


def simple_relation_exponent(g: Polynomial, spec) -> int:
    """The power used on the pair's x-letter: one more than deg of g's lead."""
    return g.degree(spec) + 1


def build_simple_step(
    base: MultTable, steps: SimpleStepInput, m_bound: int, n_bound: int
) -> SimpleStepResult:
    """One stage of the simple two-generated algebra construction.

    Emits the table relations, the generator-defining (a,b)-words for all
    slots within the bounds, and one pair relation per supplied pair; the
    only ambiguities must be the degree-3 table overlaps, and all must be
    trivial.
    """
    pairs = tuple(steps.pairs)
    if m_bound < 1 or n_bound < 1:
        raise IndexOutOfRangeError("bounds must be at least 1")
    if len(pairs) > m_bound:
        raise IndexOutOfRangeError("more pairs than m_bound slots")
    nb = len(base.basis)
    spec = DegLex()

    x_names = {}
    y_names = {}
    for m in range(1, m_bound + 1):
        for n in range(1, n_bound + 1):
            if n == 1 and m <= len(pairs):
                x_names[(m, n)] = pairs[m - 1].x_symbol
                y_names[(m, n)] = pairs[m - 1].y_symbol
            else:
                x_names[(m, n)] = f"x{m}_{n}"
                y_names[(m, n)] = f"y{m}_{n}"
    x_order = [
        x_names[(m, n)] for n in range(n_bound, 0, -1) for m in range(1, m_bound + 1)
    ]
    y_order = [
        y_names[(m, n)] for n in range(1, n_bound + 1) for m in range(1, m_bound + 1)
    ]
    symbols = tuple(x_order) + ("a", "b") + base.basis + tuple(y_order)
    if len(set(symbols)) != len(symbols):
        raise SymbolClashError("fresh letters clash with the base or each other")
    alphabet = Alphabet(symbols)
    base_offset = len(x_order) + 2

    relations = []
    # table relations: x_i x_j = combination
    for (i, j), combo in sorted(base.entries.items()):
        lhs = (base_offset + i - 1, base_offset + j - 1)
        terms = {lhs: Fraction(1)}
        for target, coeff in combo:
            key = () if target is None else (base_offset + target,)
            terms[key] = terms.get(key, Fraction(0)) - coeff
        p = Polynomial(alphabet, terms)
        if p.leading_word(spec).letters != lhs:
            raise OrientationError("table relation does not lead with its product word")
        relations.append(p)
    table_count = len(relations)

    ai = alphabet.index("a")
    bi = alphabet.index("b")

    def slot_word(n: int, tail_b: int) -> tuple[int, ...]:
        return (ai, ai) + (ai, bi) * n + (bi,) * tail_b + (ai, bi)

    for n in range(1, n_bound + 1):
        for m in range(1, m_bound + 1):
            for tail, names in ((2 * m + 1, x_names), (2 * m, y_names)):
                lhs = slot_word(n, tail)
                p = Polynomial(alphabet, {lhs: 1, (alphabet.index(names[(m, n)]),): -1})
                if p.leading_word(spec).letters != lhs:
                    raise OrientationError("defining word does not lead its letter")
                relations.append(p)
    # the designated word for the first table generator
    lhs = (ai, ai, bi, bi, ai, bi)
    relations.append(Polynomial(alphabet, {lhs: 1, (base_offset,): -1}))

    def embed(p: Polynomial) -> Polynomial:
        terms = {}
        for w, c in p.raw_terms().items():
            terms[tuple(base_offset + ltr for ltr in w)] = c
        return Polynomial(alphabet, terms)

    table_leads = {
        (base_offset + i - 1, base_offset + j - 1) for (i, j) in base.entries
    }

    def canonical(p: Polynomial) -> bool:
        for w in p.raw_terms():
            for s in range(len(w) - 1):
                if w[s : s + 2] in table_leads:
                    return False
        return True

    exponents = []
    for pidx, pair in enumerate(pairs, start=1):
        if pair.f.is_zero() or pair.g.is_zero():
            raise NonCanonicalSupportError(pidx, "pair members must be nonzero")
        f, g = embed(pair.f), embed(pair.g)
        if not canonical(f) or not canonical(g):
            raise NonCanonicalSupportError(pidx)
        power = simple_relation_exponent(g, spec)
        exponents.append(power)
        x_word = Polynomial.from_word(
            Word(alphabet, (alphabet.index(pair.x_symbol),) * power)
        )
        y_word = Polynomial.from_word(Word(alphabet, (alphabet.index(pair.y_symbol),)))
        p = (x_word * f * y_word - g).make_monic(spec)
        lead = p.leading_word(spec).letters
        expected = (
            (alphabet.index(pair.x_symbol),) * power
            + f.leading_word(spec).letters
            + (alphabet.index(pair.y_symbol),)
        )
        if lead != expected:
            raise OrientationError("pair relation does not lead with its x-f-y word")
        relations.append(p)

    ambiguities = find_ambiguities(relations, spec)
    base_range = range(base_offset, base_offset + nb)
    for amb in ambiguities:
        shape_ok = (
            amb.kind == "intersection"
            and amb.w.degree == 3
            and all(c in base_range for c in amb.w.letters)
            and amb.f_index < table_count
            and amb.g_index < table_count
        )
        if not shape_ok:
            raise CertificationError(f"unexpected ambiguity {amb.describe()}")
    report = check_gsb(relations, spec)
    if not report.is_certificate:
        raise CertificationError(
            "a table overlap was nontrivial; the table is not associative"
        )
    return SimpleStepResult(
        Presentation(alphabet, spec, tuple(relations)),
        report,
        tuple(amb.w for amb in ambiguities),
        tuple(exponents),
    )


@dataclass(frozen=True)
class ModuleCyclicResult:
    presentation: ModulePresentation
    report: CheckReport
    witness: dict


def build_module_cyclic(
    base: ModulePresentation, count: int, generator: str = "y"
) -> ModuleCyclicResult:
    """Adjoin one generator mapping onto y_1..y_count via a*b^i words.

    Rejects single-letter alphabets: over one letter the construction
    cannot embed (the defining prefixes would collide).
    """
    if base.alphabet.size < 2:
        raise SingleLetterAlphabetError(
            "the cyclic-module construction needs at least two letters"
        )
    if generator in base.basis.symbols:
        raise SymbolClashError(f"generator {generator!r} clashes with the basis")
    if not 1 <= count <= base.basis.size:
        raise IndexOutOfRangeError(f"count {count} outside 1..{base.basis.size}")
    base_report = module_check_gsb(base.relations, base.ordering)
    if not base_report.is_certificate:
        raise UncertifiedBasisError("the base module presentation is not certified")
    spec = base.ordering
    basis = ModuleBasis(base.basis.symbols + (generator,))
    alphabet = base.alphabet

    def embed(m: ModuleElement) -> ModuleElement:
        return ModuleElement(alphabet, basis, dict(m.raw_terms()))

    relations = [embed(r) for r in base.relations]
    base_len = len(relations)
    y_new = basis.size - 1
    ai, bi = 0, 1
    for i in range(1, count + 1):
        prefix = (ai,) + (bi,) * i
        m = ModuleElement(alphabet, basis, {(prefix, y_new): 1, ((), i - 1): -1})
        if m.leading_word(spec).prefix.letters != prefix:
            raise OrientationError("defining prefix does not lead")
        relations.append(m)
    ambiguities = module_ambiguities(relations, spec)
    new = [
        amb
        for amb in ambiguities
        if amb.f_index >= base_len or amb.g_index >= base_len
    ]
    if new:
        raise CertificationError(f"{len(new)} unexpected new module compositions")
    report = module_check_gsb(relations, spec)
    if not report.is_certificate:
        raise CertificationError("extended module set failed certification")
    witness = {}
    for i in range(base.basis.size):
        gen = ModuleElement(alphabet, basis, {((), i): 1})
        witness[basis.name(i)] = module_nf(gen, relations, spec)
    return ModuleCyclicResult(
        ModulePresentation(alphabet, basis, spec, tuple(relations)), report, witness
    )


def bracket_embedding_words(i_max: int) -> list[tuple[Word, BracketedWord]]:
    """The words a*a*b^i*a*b with their standard bracketings, i = 1..i_max.

    Each word is checked to be an associative Lyndon-Shirshov word; no Lie
    completion is performed.
    """
    if i_max < 1:
        raise IndexOutOfRangeError("i_max must be >= 1")
    alphabet = Alphabet(("a", "b"))
    out = []
    for i in range(1, i_max + 1):
        word = Word(alphabet, (0, 0) + (1,) * i + (0, 1))
        if not is_alsw(word):
            raise CertificationError(f"{word} unexpectedly fails the rotation test")
        out.append((word, std_bracketing(word)))
    return out
