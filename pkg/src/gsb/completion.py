"""Ambiguity detection, compositions, triviality, and Shirshov completion.

Completion processes ambiguities smallest-first (by their word, then by
relation indices), appends the monic normal form of each nontrivial
composition, and inter-reduces after every addition.  Every accepted
addition and every removal carries an exact replayable decomposition, so
ideal preservation is certified, not assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    LeadingNotBelowError,
    MalformedAmbiguityError,
    UncertifiedBasisError,
    ZeroPolynomialError,
)
from .poly import (
    ModuleElement,
    Polynomial,
    format_module_element,
    format_polynomial,
)
from .rewrite import GsbCertificate, compile_rules, normal_form, normal_form_with_trace
from .words import Word


def format_element(x, spec) -> str:
    """Render a polynomial or module element with its leading term first."""
    if isinstance(x, ModuleElement):
        return format_module_element(x, spec)
    return format_polynomial(x, spec)

INTERSECTION = "intersection"
INCLUSION = "inclusion"


@dataclass(frozen=True)
class Ambiguity:
    """One collision of two leading words on the word ``w``.

    Intersection: w = lead(f)*b = a*lead(g) with a proper overlap.
    Inclusion:    w = lead(f) = a*lead(g)*b.
    """

    kind: str
    f_index: int
    g_index: int
    w: Word
    a: Word
    b: Word

    @property
    def degree(self) -> int:
        return self.w.degree

    def describe(self) -> str:
        return (
            f"{self.kind} of #{self.f_index} and #{self.g_index} at {self.w}"
        )


def find_ambiguities(relations, spec) -> list[Ambiguity]:
    """Every intersection and inclusion ambiguity, each reported once.

    Self-overlaps are included; equal leading words of distinct relations
    count as an inclusion with empty context, reported for the lower index
    pair only.  Sorted by (w, f_index, g_index).
    """
    rules = compile_rules(relations, spec)
    leads = [lead for lead, _ in rules]
    alphabet = relations[0].alphabet if relations else None
    out = []
    n = len(leads)
    for i in range(n):
        fi = leads[i]
        for j in range(n):
            gj = leads[j]
            # intersections: proper suffix of lead(f) == proper prefix of lead(g)
            for o in range(1, min(len(fi), len(gj))):
                if fi[len(fi) - o :] == gj[:o]:
                    w = fi + gj[o:]
                    out.append(
                        Ambiguity(
                            INTERSECTION,
                            i,
                            j,
                            Word(alphabet, w),
                            Word(alphabet, fi[: len(fi) - o]),
                            Word(alphabet, gj[o:]),
                        )
                    )
            # inclusions: lead(g) inside lead(f)
            if i == j:
                continue
            if len(gj) < len(fi) or (len(gj) == len(fi) and i < j):
                start = 0
                limit = len(fi) - len(gj)
                while start <= limit:
                    if fi[start : start + len(gj)] == gj:
                        out.append(
                            Ambiguity(
                                INCLUSION,
                                i,
                                j,
                                Word(alphabet, fi),
                                Word(alphabet, fi[:start]),
                                Word(alphabet, fi[start + len(gj) :]),
                            )
                        )
                    start += 1
    keyf = spec.letter_key(alphabet) if alphabet is not None else None
    out.sort(
        key=lambda amb: (
            keyf(amb.w.letters),
            amb.f_index,
            amb.g_index,
            amb.kind,
            len(amb.a),
        )
    )
    return out


def composition(f: Polynomial, g: Polynomial, amb: Ambiguity, spec) -> Polynomial:
    """The composition polynomial of ``f`` and ``g`` relative to ``amb.w``."""
    lf = f.leading_word(spec)
    lg = g.leading_word(spec)
    a = Polynomial.from_word(amb.a)
    b = Polynomial.from_word(amb.b)
    if amb.kind == INTERSECTION:
        if amb.w.letters != lf.letters + amb.b.letters or amb.w.letters != amb.a.letters + lg.letters:
            raise MalformedAmbiguityError(f"{amb.describe()} does not reassemble")
        if len(lf) + len(lg) <= len(amb.w):
            raise MalformedAmbiguityError("intersection requires a proper overlap")
        return f * b - a * g
    if amb.kind == INCLUSION:
        if amb.w.letters != lf.letters or amb.w.letters != amb.a.letters + lg.letters + amb.b.letters:
            raise MalformedAmbiguityError(f"{amb.describe()} does not reassemble")
        return f - a * g * b
    raise MalformedAmbiguityError(f"unknown ambiguity kind {amb.kind!r}")


def is_trivial(h: Polynomial, relations, w: Word, spec) -> bool:
    """Triviality of ``h`` modulo (relations, w): reduction to zero below w."""
    if not h.is_zero():
        keyf = spec.letter_key(h.alphabet)
        if keyf(h.leading_word(spec).letters) >= keyf(w.letters):
            raise LeadingNotBelowError(
                f"leading word {h.leading_word(spec)} is not below {w}"
            )
    return normal_form(h, relations, spec).is_zero()


class CompletionStatus(enum.Enum):
    CERTIFIED_GSB = "CertifiedGSB"
    COMPLETE_UP_TO_DEGREE = "CompleteUpToDegree"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class AddedRelation:
    """A nontrivial composition residual, with its exact provenance.

    ``composition(f, g, ambiguity) == residual + sum(coeff * a * s * b)``
    replays exactly; ``relation`` is the monic form that was appended.
    """

    relation: Polynomial
    residual: Polynomial
    ambiguity: Ambiguity
    f: Polynomial
    g: Polynomial
    decomposition: tuple


@dataclass(frozen=True)
class RemovedRelation:
    """An inter-reduction event: relation == residual + replayed multiples."""

    relation: Polynomial
    residual: Polynomial
    replacement: Polynomial | None
    decomposition: tuple


@dataclass(frozen=True)
class CompletionReport:
    status: CompletionStatus
    degree_bound: int | None
    input_size: int
    relations: tuple[Polynomial, ...]
    added: tuple[AddedRelation, ...]
    removed: tuple[RemovedRelation, ...]
    processed: int
    nontrivial_log: tuple
    ordering: object

    @property
    def is_certified(self) -> bool:
        return self.status is CompletionStatus.CERTIFIED_GSB

    def status_text(self) -> str:
        if self.status is CompletionStatus.COMPLETE_UP_TO_DEGREE:
            return f"CompleteUpToDegree({self.degree_bound})"
        return self.status.value

    def certificate(self) -> GsbCertificate:
        if not self.is_certified:
            raise UncertifiedBasisError(
                f"completion ended with status {self.status_text()}"
            )
        return GsbCertificate(self.relations, self.ordering, source="completion")

    def verify_ideal_preservation(self) -> bool:
        """Replay every addition and removal decomposition exactly."""
        for entry in self.added:
            total = entry.residual
            for coeff, a, s, b in entry.decomposition:
                total = total + (
                    Polynomial.from_word(a, coeff) * s * Polynomial.from_word(b)
                )
            comp = composition(entry.f, entry.g, entry.ambiguity, self.ordering)
            if total != comp:
                return False
            if entry.residual.make_monic(self.ordering) != entry.relation:
                return False
        for entry in self.removed:
            total = entry.residual
            for coeff, a, s, b in entry.decomposition:
                total = total + (
                    Polynomial.from_word(a, coeff) * s * Polynomial.from_word(b)
                )
            if total != entry.relation:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "status": self.status_text(),
            "added": [format_element(e.relation, self.ordering) for e in self.added],
            "nontrivial": [
                {"ambiguity": str(amb.w), "residual": format_element(res, self.ordering)}
                for amb, res in self.nontrivial_log
            ],
            "processed": self.processed,
        }


def _trace_decomposition(trace, pool):
    return tuple(
        (step.coefficient, step.left, pool[step.rule], step.right)
        for step in trace.steps
    )


def _interreduce(rels, spec, removed_log) -> bool:
    """Reduce each relation by the others until stable; True if anything moved."""
    changed_any = False
    i = 0
    while i < len(rels):
        r = rels[i]
        others = rels[:i] + rels[i + 1 :]
        if not others:
            break
        nf, trace = normal_form_with_trace(r, others, spec)
        if nf == r:
            i += 1
            continue
        changed_any = True
        decomposition = _trace_decomposition(trace, others)
        if nf.is_zero():
            removed_log.append(RemovedRelation(r, nf, None, decomposition))
            del rels[i]
        else:
            monic = nf.make_monic(spec)
            removed_log.append(RemovedRelation(r, nf, monic, decomposition))
            rels[i] = monic
        i = 0
    return changed_any


def _amb_cache_key(amb: Ambiguity, rels):
    return (
        amb.kind,
        rels[amb.f_index],
        rels[amb.g_index],
        amb.w.letters,
        amb.a.letters,
        amb.b.letters,
    )


def shirshov_complete(
    relations, spec, max_deg: int = 12, max_steps: int = 10_000
) -> CompletionReport:
    """Run the completion loop within the given degree and step limits.

    Returns CertifiedGSB when no ambiguity is left unchecked,
    CompleteUpToDegree(max_deg) when only ambiguities on words of degree
    beyond the bound remain, and BudgetExhausted when the step budget ran
    out first.  Nontermination is expected in general, so the limits are
    always enforced.
    """
    if max_deg <= 0 or max_steps <= 0:
        raise ValueError("limits must be positive")
    for idx, s in enumerate(relations):
        if s.is_zero():
            raise ZeroPolynomialError(f"relation #{idx} is zero")
    input_size = len(relations)
    rels = [s.make_monic(spec) for s in relations]
    removed: list[RemovedRelation] = []
    added: list[AddedRelation] = []
    nontrivial_log = []
    sort_key = None
    if rels:
        keyf = spec.letter_key(rels[0].alphabet)
        sort_key = lambda p: keyf(p.leading_word(spec).letters)
        rels.sort(key=sort_key)
    _interreduce(rels, spec, removed)
    if sort_key:
        rels.sort(key=sort_key)
    trivial_cache = set()
    processed = 0
    status = None
    degree_bound = None
    while True:
        ambiguities = find_ambiguities(rels, spec)
        fresh = [
            amb for amb in ambiguities if _amb_cache_key(amb, rels) not in trivial_cache
        ]
        todo = [amb for amb in fresh if amb.degree <= max_deg]
        if not todo:
            if len(fresh) > len(todo):
                status = CompletionStatus.COMPLETE_UP_TO_DEGREE
                degree_bound = max_deg
            else:
                status = CompletionStatus.CERTIFIED_GSB
            break
        exhausted = False
        mutated = False
        for amb in todo:
            if processed >= max_steps:
                exhausted = True
                break
            processed += 1
            f, g = rels[amb.f_index], rels[amb.g_index]
            h = composition(f, g, amb, spec)
            nf, trace = normal_form_with_trace(h, rels, spec)
            if nf.is_zero():
                trivial_cache.add(_amb_cache_key(amb, rels))
                continue
            nontrivial_log.append((amb, nf))
            monic = nf.make_monic(spec)
            added.append(
                AddedRelation(
                    monic, nf, amb, f, g, _trace_decomposition(trace, rels)
                )
            )
            rels.append(monic)
            _interreduce(rels, spec, removed)
            rels.sort(key=sort_key)
            mutated = True
            break
        if exhausted:
            status = CompletionStatus.BUDGET_EXHAUSTED
            break
        if not mutated:
            continue
    return CompletionReport(
        status=status,
        degree_bound=degree_bound,
        input_size=input_size,
        relations=tuple(rels),
        added=tuple(added),
        removed=tuple(removed),
        processed=processed,
        nontrivial_log=tuple(nontrivial_log),
        ordering=spec,
    )


@dataclass(frozen=True)
class CheckReport:
    """Result of evaluating every composition of a relation set."""

    relations: tuple[Polynomial, ...]
    ordering: object
    max_deg: int | None
    nontrivial: tuple
    evaluated: int
    skipped: int

    @property
    def is_certificate(self) -> bool:
        return not self.nontrivial and self.skipped == 0

    def certificate(self) -> GsbCertificate:
        if not self.is_certificate:
            raise UncertifiedBasisError(
                "the relation set is not certified by this check"
            )
        return GsbCertificate(self.relations, self.ordering, source="check")

    def to_json_dict(self) -> dict:
        return {
            "status": "CertifiedGSB" if self.is_certificate else "NotCertified",
            "added": [],
            "nontrivial": [
                {"ambiguity": str(amb.w), "residual": format_element(res, self.ordering)}
                for amb, res in self.nontrivial
            ],
            "processed": self.evaluated,
        }


def check_gsb(relations, spec, max_deg: int | None = None) -> CheckReport:
    """Evaluate every ambiguity (optionally bounded by degree of w).

    An empty report with nothing skipped is a Groebner-Shirshov basis
    certificate for the set.
    """
    rels = list(relations)
    ambiguities = find_ambiguities(rels, spec)
    nontrivial = []
    evaluated = 0
    skipped = 0
    for amb in ambiguities:
        if max_deg is not None and amb.degree > max_deg:
            skipped += 1
            continue
        evaluated += 1
        h = composition(rels[amb.f_index], rels[amb.g_index], amb, spec)
        nf = normal_form(h, rels, spec)
        if not nf.is_zero():
            nontrivial.append((amb, nf))
    return CheckReport(
        relations=tuple(rels),
        ordering=spec,
        max_deg=max_deg,
        nontrivial=tuple(nontrivial),
        evaluated=evaluated,
        skipped=skipped,
    )
