"""Command-line front end.

Exit codes: 0 success / certified, 2 a check or completion found the set is
not a certified basis, 1 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .completion import check_gsb, format_element, shirshov_complete
from .constructions import (
    GroupTable,
    MultTable,
    SimplePair,
    SimpleStepInput,
    bracket_embedding_words,
    build_hnn,
    build_malcev,
    build_module_cyclic,
    build_simple_step,
)
from .errors import GsbError, PresentationFormatError
from .lyndon import alsw_up_to, std_bracketing
from .modules import module_check_gsb, module_complete, module_irr
from .poly import parse_module_element, parse_polynomial
from .presentation import (
    ModulePresentation,
    Presentation,
    format_presentation,
    load_presentation_file,
    save_presentation_file,
)
from .rewrite import irr_words, normal_form_with_trace, quotient_dim_oracle
from .words import Alphabet


class _Parser(argparse.ArgumentParser):
    """argparse uses exit code 2 for usage errors; this tool reserves 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _print_report(report, as_json: bool) -> None:
    data = report.to_json_dict()
    if as_json:
        _emit_json(data)
        return
    print(f"status: {data['status']}")
    print(f"processed: {data['processed']} compositions")
    if data["added"]:
        print(f"added {len(data['added'])} relations:")
        for line in data["added"]:
            print(f"  {line}")
    for entry in data["nontrivial"]:
        print(f"  nontrivial at {entry['ambiguity']}: {entry['residual']}")


def _load_for(args):
    """Load the presentation, honoring an explicit --module assertion."""
    p = load_presentation_file(args.file)
    if getattr(args, "module", False) and not isinstance(p, ModulePresentation):
        raise PresentationFormatError(
            "--module was given but the file is not a module presentation"
        )
    return p


def _cmd_complete(args) -> int:
    p = _load_for(args)
    if args.threads < 1:
        raise PresentationFormatError("--threads must be at least 1")
    if isinstance(p, ModulePresentation):
        report = module_complete(
            p.relations, p.ordering, max_deg=args.max_deg, max_steps=args.max_steps
        )
        completed = ModulePresentation(p.alphabet, p.basis, p.ordering, report.relations)
    else:
        report = shirshov_complete(
            p.relations, p.ordering, max_deg=args.max_deg, max_steps=args.max_steps
        )
        completed = Presentation(p.alphabet, p.ordering, report.relations)
    _print_report(report, args.json)
    if args.output:
        save_presentation_file(completed, args.output)
    return 0 if report.is_certified else 2


def _cmd_check(args) -> int:
    p = _load_for(args)
    if isinstance(p, ModulePresentation):
        report = module_check_gsb(p.relations, p.ordering, max_deg=args.max_deg)
    else:
        report = check_gsb(p.relations, p.ordering, max_deg=args.max_deg)
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        if report.is_certificate:
            print(f"certified basis ({report.evaluated} compositions evaluated)")
        else:
            print(
                f"not certified: {len(report.nontrivial)} nontrivial, "
                f"{report.skipped} skipped"
            )
            for amb, res in report.nontrivial:
                print(f"  at {amb.w}: {format_element(res, p.ordering)}")
    return 0 if report.is_certificate else 2


def _cmd_nf(args) -> int:
    p = _load_for(args)
    if isinstance(p, ModulePresentation):
        element = parse_module_element(args.poly, p.alphabet, p.basis)
        from .modules import module_nf_with_trace

        nf, trace = module_nf_with_trace(element, p.relations, p.ordering)
        if args.trace:
            for n, step in enumerate(trace.steps, start=1):
                print(f"step {n}: rule #{step.rule} left {step.left}: {step.rewritten}")
    else:
        poly = parse_polynomial(args.poly, p.alphabet)
        nf, trace = normal_form_with_trace(poly, p.relations, p.ordering)
        if args.trace:
            for n, step in enumerate(trace.steps, start=1):
                print(
                    f"step {n}: rule #{step.rule} at ({step.left} | {step.right}): "
                    f"{step.rewritten}"
                )
    print(format_element(nf, p.ordering))
    return 0


def _cmd_irr(args) -> int:
    p = _load_for(args)
    if isinstance(p, ModulePresentation):
        words = module_irr(p.alphabet, p.basis, p.relations, p.ordering, args.max_deg)
    else:
        words = irr_words(p.alphabet, p.relations, p.ordering, args.max_deg)
    if args.count_only:
        print(len(words))
    else:
        for w in words:
            print(w)
    return 0


def _cmd_dim(args) -> int:
    p = _load_for(args)
    if isinstance(p, ModulePresentation):
        raise PresentationFormatError("the dimension oracle works on algebra presentations")
    print(quotient_dim_oracle(p.alphabet, p.relations, p.ordering, args.max_deg))
    return 0


def _cmd_lyndon(args) -> int:
    names = tuple(part.strip() for part in args.alphabet.split(">"))
    alphabet = Alphabet(names)
    words = alsw_up_to(alphabet, args.max_len)
    if args.count_only:
        for n in range(1, args.max_len + 1):
            print(f"{n} {sum(1 for w in words if len(w) == n)}")
        return 0
    for w in words:
        if args.bracket:
            print(f"{w}\t{std_bracketing(w)}")
        else:
            print(w)
    return 0


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _pair_key(raw: str) -> tuple[int, int]:
    parts = raw.replace(",", " ").split()
    if len(parts) != 2:
        raise PresentationFormatError(f"bad table key {raw!r}; expected 'j k'")
    return int(parts[0]), int(parts[1])


def _load_group_table(path) -> GroupTable:
    data = _load_json(path)
    try:
        product = {_pair_key(k): int(v) for k, v in data["product"].items()}
        inverse = {int(k): int(v) for k, v in data["inverse"].items()}
        return GroupTable(int(data["size"]), product, inverse)
    except (KeyError, TypeError, ValueError) as exc:
        raise PresentationFormatError(f"bad group table file: {exc}") from exc


def _load_mult_table(path) -> MultTable:
    data = _load_json(path)
    try:
        products = {}
        for k, v in data["product"].items():
            if isinstance(v, str):
                products[_pair_key(k)] = v
            else:
                products[_pair_key(k)] = {name: Fraction(c) for name, c in v.items()}
        return MultTable(tuple(data["basis"]), products)
    except (KeyError, TypeError, ValueError) as exc:
        raise PresentationFormatError(f"bad multiplication table file: {exc}") from exc


def _load_pairs(path, alphabet: Alphabet) -> SimpleStepInput:
    data = _load_json(path)
    pairs = []
    try:
        for entry in data["pairs"]:
            pairs.append(
                SimplePair(
                    parse_polynomial(entry["f"], alphabet),
                    parse_polynomial(entry["g"], alphabet),
                    entry["x"],
                    entry["y"],
                )
            )
    except (KeyError, TypeError) as exc:
        raise PresentationFormatError(f"bad pairs file: {exc}") from exc
    return SimpleStepInput(tuple(pairs))


def _write_construction(presentation, report, args) -> None:
    if args.output:
        save_presentation_file(presentation, args.output)
        cert_path = args.cert or f"{args.output}.cert.json"
        with open(cert_path, "w", encoding="utf-8") as fh:
            json.dump(report.to_json_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    else:
        print(format_presentation(presentation), end="")
        if args.cert:
            with open(args.cert, "w", encoding="utf-8") as fh:
                json.dump(report.to_json_dict(), fh, indent=2, sort_keys=True)
                fh.write("\n")


def _cmd_construct(args) -> int:
    kind = args.kind
    if kind == "hnn":
        if args.cyclic is not None:
            table = GroupTable.cyclic(args.cyclic)
        elif args.table:
            table = _load_group_table(args.table)
        else:
            raise PresentationFormatError("hnn needs --cyclic ORDER or --table FILE")
        bound = args.index_bound if args.index_bound is not None else table.size
        result = build_hnn(table, bound)
        _write_construction(result.presentation, result.report, args)
        return 0
    if kind == "malcev":
        if not args.base:
            raise PresentationFormatError("malcev needs a base presentation file")
        base = load_presentation_file(args.base)
        if isinstance(base, ModulePresentation):
            raise PresentationFormatError("malcev extends algebra presentations")
        count = args.count if args.count is not None else base.alphabet.size
        result = build_malcev(base, count, a=args.a, b=args.b)
        _write_construction(result.presentation, result.report, args)
        return 0
    if kind == "simple":
        if not args.table:
            raise PresentationFormatError("simple needs --table FILE")
        table = _load_mult_table(args.table)
        steps = (
            _load_pairs(args.pairs, table.base_alphabet())
            if args.pairs
            else SimpleStepInput(())
        )
        result = build_simple_step(table, steps, args.m_bound, args.n_bound)
        _write_construction(result.presentation, result.report, args)
        return 0
    if kind == "module-cyclic":
        if not args.base:
            raise PresentationFormatError("module-cyclic needs a base presentation file")
        base = load_presentation_file(args.base)
        if not isinstance(base, ModulePresentation):
            raise PresentationFormatError("module-cyclic extends module presentations")
        count = args.count if args.count is not None else base.basis.size
        result = build_module_cyclic(base, count, generator=args.generator)
        _write_construction(result.presentation, result.report, args)
        return 0
    if kind == "lie-words":
        for word, bracket in bracket_embedding_words(args.max_i):
            print(f"{word}\t{bracket}")
        return 0
    raise PresentationFormatError(f"unknown construction {kind!r}")


def _cmd_selftest(args) -> int:
    from .selftest import run_all

    failures = run_all()
    return 1 if failures else 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="gsb", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complete", parents=[], help="run Shirshov completion")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, default=12)
    p.add_argument("--max-steps", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int, default=1, help="cap on parallel reductions")
    p.add_argument("-o", "--output", help="write the completed presentation here")
    p.add_argument("--module", action="store_true", help="require a module presentation")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("check", help="evaluate every composition")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--module", action="store_true", help="require a module presentation")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("nf", help="normal form of a polynomial")
    p.add_argument("file")
    p.add_argument("--poly", required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--module", action="store_true", help="require a module presentation")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("irr", help="irreducible words up to a degree")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--module", action="store_true", help="require a module presentation")
    p.set_defaults(func=_cmd_irr)

    p = sub.add_parser("dim", help="exact quotient dimension oracle")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--module", action="store_true", help="require a module presentation")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("lyndon", help="Lyndon-Shirshov word tooling")
    p.add_argument("--alphabet", required=True, help='e.g. "x2>x1"')
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--bracket", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_lyndon)

    p = sub.add_parser("construct", help="emit a certified embedding presentation")
    p.add_argument("kind", choices=["hnn", "malcev", "simple", "module-cyclic", "lie-words"])
    p.add_argument("base", nargs="?", help="base presentation file (malcev, module-cyclic)")
    p.add_argument("--cyclic", type=int, help="hnn: cyclic group order")
    p.add_argument("--table", help="hnn/simple: table file (JSON)")
    p.add_argument("--index-bound", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--a", default="a")
    p.add_argument("--b", default="b")
    p.add_argument("--generator", default="y")
    p.add_argument("--pairs", help="simple: pairs file (JSON)")
    p.add_argument("--m-bound", type=int, default=1)
    p.add_argument("--n-bound", type=int, default=1)
    p.add_argument("--max-i", type=int, default=4)
    p.add_argument("-o", "--output")
    p.add_argument("--cert", help="write the JSON certificate here")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.set_defaults(func=_cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GsbError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
