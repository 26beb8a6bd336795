"""Command-line front end.

Subcommands: ``match`` (word against a regex or grammar file), ``enum``
(bounded enumeration), ``equiv`` (exact or bounded comparison),
``axioms`` (randomized law battery), ``dot`` (derivative automaton).
Exit codes follow the verdict: 0 for yes/equal/all-pass, 1 for
no/counterexample, and for ``equiv`` 2 means the pair cap was hit and 3
an input error (other commands use 2 for input errors).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import axioms as axioms_mod
from . import equiv as equiv_mod
from .grammar import Grammar, GrammarError, grammar_lang, parse_grammar
from .lang import Lang, out_bounded
from .regex import RegexSyntaxError, denote, parse
from .words import Alphabet, AlphabetError, Word

__all__ = ["main"]

EPSILON = "ε"


class _InputError(Exception):
    """Bad user input; message goes to stderr, exit code is command-specific."""


def _emit_json(kind: str, input_obj, verdict, witness) -> None:
    print(json.dumps({"kind": kind, "input": input_obj, "verdict": verdict,
                      "witness": witness}, ensure_ascii=False))


def _alphabet(args) -> Alphabet:
    try:
        return Alphabet(args.alphabet)
    except AlphabetError as exc:
        raise _InputError(str(exc)) from None


def _load_grammar(path: str) -> Grammar:
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_grammar(handle.read())
    except OSError as exc:
        raise _InputError(f"cannot read grammar file: {exc}") from None
    except GrammarError as exc:
        raise _InputError(f"bad grammar: {exc}") from None


def _spec_lang(kind: str, spec: str, alphabet: Alphabet) -> tuple[Lang, Alphabet]:
    """Build the language and the alphabet its words are written in."""
    if kind == "regex":
        try:
            return denote(parse(spec, alphabet)), alphabet
        except RegexSyntaxError as exc:
            raise _InputError(f"bad regex: {exc}") from None
    grammar = _load_grammar(spec)
    try:
        return grammar_lang(grammar), grammar.terminals
    except GrammarError as exc:
        raise _InputError(f"bad grammar: {exc}") from None


def _word(text: str, alphabet: Alphabet) -> Word:
    try:
        return alphabet.word(text)
    except AlphabetError as exc:
        raise _InputError(str(exc)) from None


def _fmt_word(word, alphabet: Alphabet) -> str:
    return alphabet.text(tuple(word)) or EPSILON


def _cmd_match(args) -> int:
    lang, alphabet = _spec_lang(args.kind, args.spec, _alphabet(args))
    verdict = lang.member(_word(args.word, alphabet))
    if args.format == "json-lines":
        _emit_json("match", {"kind": args.kind, "spec": args.spec, "word": args.word},
                   verdict, None)
    else:
        print("true" if verdict else "false")
    return 0 if verdict else 1


def _cmd_enum(args) -> int:
    if args.maxlen < 0:
        raise _InputError("maxlen must be nonnegative")
    lang, alphabet = _spec_lang(args.kind, args.spec, _alphabet(args))
    found = out_bounded(lang, args.maxlen, alphabet)
    if args.format == "json-lines":
        _emit_json("enum", {"kind": args.kind, "spec": args.spec, "maxlen": args.maxlen},
                   "ok", [alphabet.text(w) for w in found])
    else:
        for word in found:
            print(_fmt_word(word, alphabet))
    return 0


def _cmd_equiv(args) -> int:
    alphabet = _alphabet(args)
    relation = "leq" if args.leq else "equal"
    try:
        lhs = parse(args.lhs, alphabet)
        rhs = parse(args.rhs, alphabet)
    except RegexSyntaxError as exc:
        raise _InputError(f"bad regex: {exc}") from None
    input_obj = {"lhs": args.lhs, "rhs": args.rhs, "mode": args.mode, "relation": relation}

    if args.mode == "bounded":
        check = equiv_mod.sim_bounded if args.leq else equiv_mod.bisim_bounded
        found = check(denote(lhs), denote(rhs), args.depth, alphabet)
        if found is None:
            if args.format == "json-lines":
                _emit_json("equiv", input_obj, relation, None)
            else:
                print("leq" if args.leq else "equal")
            return 0
        word = _fmt_word(found.word, alphabet)
        if args.format == "json-lines":
            _emit_json("equiv", input_obj, "counterexample",
                       {"word": alphabet.text(found.word)})
        else:
            print(f"counterexample: {word}")
        return 1

    compare = equiv_mod.leq_regex if args.leq else equiv_mod.equiv_regex
    try:
        outcome = compare(lhs, rhs, alphabet, limit=args.cap)
    except equiv_mod.PairLimitExceeded as exc:
        if args.format == "json-lines":
            _emit_json("equiv", input_obj, "inconclusive", {"pair_limit": exc.limit})
        else:
            print(f"inconclusive: pair cap {exc.limit} exceeded")
        return 2
    if isinstance(outcome, equiv_mod.Counterexample):
        if args.format == "json-lines":
            _emit_json("equiv", input_obj, "counterexample",
                       {"word": alphabet.text(outcome.word)})
        else:
            print(f"counterexample: {_fmt_word(outcome.word, alphabet)}")
        return 1
    if args.format == "json-lines":
        _emit_json("equiv", input_obj, relation, {"certificate_pairs": len(outcome.pairs)})
    else:
        print("leq" if args.leq else "equal")
        print(f"certificate: {len(outcome.pairs)} pairs")
    return 0


def _cmd_axioms(args) -> int:
    if args.trials < 0:
        raise _InputError("trials must be nonnegative")
    alphabet = _alphabet(args)
    results = axioms_mod.run_battery(seed=args.seed, trials=args.trials,
                                     depth=args.depth, alphabet=alphabet)
    if args.report_dir is not None:
        from .report import write_report

        write_report(results, args.report_dir, alphabet)
    failed = False
    for result in results:
        status = "PASS" if result.ok else "FAIL"
        failed = failed or not result.ok
        if args.format == "json-lines":
            witness = result.failures[0] if result.failures else None
            _emit_json("axiom",
                       {"name": result.name, "seed": args.seed,
                        "trials": args.trials, "depth": args.depth},
                       "pass" if result.ok else "fail",
                       None if witness is None else witness.describe(alphabet))
        else:
            line = f"{status} {result.name}: {result.passes}/{result.checked}"
            if result.failures:
                line += f"  witness: {result.failures[0].describe(alphabet)}"
            print(line)
    return 1 if failed else 0


def _cmd_dot(args) -> int:
    alphabet = _alphabet(args)
    try:
        r = parse(args.pattern, alphabet)
    except RegexSyntaxError as exc:
        raise _InputError(f"bad regex: {exc}") from None
    try:
        automaton = equiv_mod.derivative_automaton(r, alphabet, limit=args.cap)
    except equiv_mod.PairLimitExceeded as exc:
        raise _InputError(f"too many derivative states (cap {exc.limit})") from None
    sys.stdout.write(automaton.to_dot())
    return 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--alphabet", default="ab",
                        help="symbol names, one character each (default: ab)")
    shared.add_argument("--depth", type=int, default=6,
                        help="bound for bounded comparisons (default: 6)")
    shared.add_argument("--cap", type=int, default=equiv_mod.DEFAULT_PAIR_LIMIT,
                        help="pair cap for exact equivalence (default: 100000)")
    shared.add_argument("--seed", type=int, default=axioms_mod.DEFAULT_SEED,
                        help="random seed for the axioms battery (default: 0)")
    shared.add_argument("--format", choices=("text", "json-lines"), default="text",
                        help="output format (default: text)")

    parser = argparse.ArgumentParser(
        prog="trielang",
        description="Formal languages as lazy tries: match, enumerate, compare.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("match", parents=[shared],
                       help="test one word; exits 0 (member) or 1 (not)")
    p.add_argument("kind", choices=("regex", "grammar"))
    p.add_argument("spec", help="regex text, or path to a grammar file")
    p.add_argument("word", help='the word, one character per symbol; "" for the empty word')
    p.set_defaults(run=_cmd_match, input_error_code=2)

    p = sub.add_parser("enum", parents=[shared],
                       help="list members up to a length bound, shortest first")
    p.add_argument("kind", choices=("regex", "grammar"))
    p.add_argument("spec")
    p.add_argument("maxlen", type=int)
    p.set_defaults(run=_cmd_enum, input_error_code=2)

    p = sub.add_parser("equiv", parents=[shared],
                       help="compare two regexes; exits 0/1/2 (cap)/3 (input)")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--mode", choices=("exact", "bounded"), default="exact")
    p.add_argument("--leq", action="store_true",
                   help="check inclusion of lhs in rhs instead of equality")
    p.set_defaults(run=_cmd_equiv, input_error_code=3)

    p = sub.add_parser("axioms", parents=[shared],
                       help="run the randomized law battery; exits 1 on a counterexample")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--report-dir", default=None,
                   help="also write axioms.csv and axioms.png here")
    p.set_defaults(run=_cmd_axioms, input_error_code=2)

    p = sub.add_parser("dot", parents=[shared],
                       help="print the derivative automaton of a regex as DOT")
    p.add_argument("pattern")
    p.set_defaults(run=_cmd_dot, input_error_code=2)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return args.input_error_code


if __name__ == "__main__":
    sys.exit(main())
