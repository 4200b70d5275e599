"""Command-line interface: ``thompsonf <subcommand> ...``.

Exit status: 0 success, 1 verification failure, 2 input or parse error,
3 size limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .dyadic import parse_dyadic
from .errors import MembershipError, SizeLimitExceeded, ThompsonError
from .interpolate import interpolate, parse_partition
from .plmap import (
    abelianization,
    compose,
    equals,
    evaluate,
    format_element,
    in_derived_subgroup,
    inverse,
    parse_element,
    standard_generator,
)
from .render import render_svg
from .witness import (
    DEFAULT_WORD_LIMIT,
    dump_reports,
    multi_witness,
    report_to_dict,
    universal_witness,
    witness_for_word,
)
from .words import (
    DEDUP_MODES,
    DEFAULT_SIZE_LIMIT,
    combine_identity,
    embed_two_vars,
    evaluate_word,
    format_word,
    parse_word,
)

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_SIZE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _element(path: str):
    return parse_element(_read(path))


def _partition(arg: str):
    # a file, stdin, or the literal points themselves
    if arg == "-" or os.path.isfile(arg):
        return parse_partition(_read(arg))
    return parse_partition(arg)


def _word_lines(path: str, arity: int | None):
    words = []
    for line in _read(path).splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.append(parse_word(line, arity))
    if not words:
        raise InputError(f"{path} contains no words")
    return words


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args):
    _emit(args, format_element(standard_generator(args.index)))
    return EXIT_OK


def cmd_eval(args):
    f = _element(args.element)
    print(evaluate(f, parse_dyadic(args.point)))
    return EXIT_OK


def cmd_compose(args):
    f, g = _element(args.f), _element(args.g)
    _emit(args, format_element(compose(f, g)))
    return EXIT_OK


def cmd_inverse(args):
    _emit(args, format_element(inverse(_element(args.f))))
    return EXIT_OK


def cmd_equal(args):
    print("true" if equals(_element(args.f), _element(args.g)) else "false")
    return EXIT_OK


def cmd_interp(args):
    f = interpolate(_partition(args.source), _partition(args.target))
    _emit(args, format_element(f))
    return EXIT_OK


def cmd_word_eval(args):
    elements = [_element(p) for p in args.elements]
    w = parse_word(args.word, len(elements))
    _emit(args, format_element(evaluate_word(w, elements)))
    return EXIT_OK


def cmd_witness(args):
    w = parse_word(args.word, args.arity)
    report = witness_for_word(w, full_check=args.full_check)
    _emit(args, json.dumps(report_to_dict(report), indent=2) + "\n")
    return EXIT_OK if report.verified else EXIT_VERIFY


def cmd_multi_witness(args):
    words = _word_lines(args.words, args.arity)
    elements, reports = multi_witness(words, args.arity, full_check=args.full_check)
    _emit(args, dump_reports(elements, reports) + "\n")
    return EXIT_OK if all(r.verified for r in reports) else EXIT_VERIFY


def cmd_universal_witness(args):
    elements, reports = universal_witness(args.arity, args.max_len, dedup=args.dedup,
                                          word_limit=args.word_limit, full_check=args.full_check)
    _emit(args, dump_reports(elements, reports) + "\n")
    return EXIT_OK if all(r.verified for r in reports) else EXIT_VERIFY


def cmd_combine(args):
    words = _word_lines(args.words, args.arity)
    h = combine_identity(words, size_limit=args.size_limit)
    _emit(args, format_word(h) + "\n")
    return EXIT_OK


def cmd_embed(args):
    w = parse_word(args.word, args.arity)
    _emit(args, format_word(embed_two_vars(w)) + "\n")
    return EXIT_OK


def cmd_check(args):
    text = _read(args.element)
    try:
        f = parse_element(text)
    except MembershipError as exc:
        print(f"member: false ({type(exc).__name__}: {exc})")
        return EXIT_VERIFY
    a0, a1 = abelianization(f)
    print("member: true")
    print(f"abelianization: ({a0}, {a1})")
    print(f"derived-subgroup: {'true' if in_derived_subgroup(f) else 'false'}")
    return EXIT_OK


def cmd_render(args):
    _emit(args, render_svg(_element(args.element), title=args.title))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompsonf", description="Exact computations in Thompson's group F.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "print the standard generator x_i")
    p.add_argument("index", type=int)
    p.add_argument("--out")

    p = add("eval", cmd_eval, "image of a point under an element")
    p.add_argument("element", help="element file, or - for stdin")
    p.add_argument("point")

    p = add("compose", cmd_compose, "print f(g(x)); g acts first")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--out")

    p = add("inverse", cmd_inverse, "print the inverse element")
    p.add_argument("f")
    p.add_argument("--out")

    p = add("equal", cmd_equal, "compare two elements")
    p.add_argument("f")
    p.add_argument("g")

    p = add("interp", cmd_interp, "element carrying one dyadic partition onto another")
    p.add_argument("source", help="partition file, - or literal points such as '0 1/2 1'")
    p.add_argument("target")
    p.add_argument("--out")

    p = add("word-eval", cmd_word_eval, "evaluate a word at a tuple of elements")
    p.add_argument("word")
    p.add_argument("elements", nargs="+")
    p.add_argument("--out")

    def witness_flags(p):
        p.add_argument("--full-check", action="store_true",
                       help="also compose each word and compare with the identity")
        p.add_argument("--out")

    p = add("witness", cmd_witness, "elements on which a word does not vanish")
    p.add_argument("word")
    p.add_argument("--arity", type=int)
    witness_flags(p)

    p = add("multi-witness", cmd_multi_witness, "one tuple witnessing every word in a file")
    p.add_argument("words")
    p.add_argument("--arity", type=int, required=True)
    witness_flags(p)

    p = add("universal-witness", cmd_universal_witness,
            "tuple satisfying no relation of length below --max-len")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--dedup", choices=DEDUP_MODES, default="inversion_and_conjugacy")
    p.add_argument("--word-limit", type=int, default=DEFAULT_WORD_LIMIT)
    witness_flags(p)

    p = add("combine", cmd_combine, "fold relations into one word vanishing wherever any does")
    p.add_argument("words")
    p.add_argument("--arity", type=int)
    p.add_argument("--size-limit", type=int, default=DEFAULT_SIZE_LIMIT)
    p.add_argument("--out")

    p = add("embed", cmd_embed, "rewrite an n-variable word in two variables")
    p.add_argument("word")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--out")

    p = add("check", cmd_check, "membership, abelianization and derived-subgroup test")
    p.add_argument("element")

    p = add("render", cmd_render, "SVG graph of an element")
    p.add_argument("element")
    p.add_argument("--out")
    p.add_argument("--title")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"thompsonf: size limit exceeded: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (ThompsonError, InputError, ValueError) as exc:
        print(f"thompsonf: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
