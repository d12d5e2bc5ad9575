"""``uniglyph`` command line.

Exit status: 0 success, 1 transliteration/validation/I-O error, 2 usage error.
Machine output goes to stdout (or ``-o``); diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import os
import sys
from contextlib import contextmanager

from .codec import (IpaConversionError, LengthMark, Pitch, WireFormatError, emit_ascii, encode,
                    parse_ascii, tokens_to_ipa)
from .registry import (CONSONANT, VOWEL, Phoneme, PhonemeRegistry, RegistryError,
                       build_builtin_registry, dump_registry, load_registry, read_registry)
from .renderer import RenderError, render_svg, render_terminal, validate_patterns
from .segments import SegmentPattern
from .tokenizer import SEPARATOR, Mode, Scheme, TransliterationError, TransliterationOptions, tokenize

ENV_REGISTRY = "UNIGLYPH_REGISTRY"
TABLES = ("consonants", "vowels", "length", "pitch")


class CliError(Exception):
    """Reported on stderr with exit status 1."""


def _add_registry_flags(p):
    p.add_argument("--registry", metavar="PATH",
                   help=f"registry file overlaid on the builtin inventory (default: ${ENV_REGISTRY})")
    p.add_argument("--registry-only", action="store_true",
                   help="use the registry file instead of the builtin inventory")


def _add_output_flag(p):
    p.add_argument("-o", "--output", metavar="PATH", help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uniglyph", description="UniGlyph transliteration tools")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("tr", help="transliterate text read from stdin or a file")
    p.add_argument("input", nargs="?", help="input file (default: stdin)")
    p.add_argument("--from", dest="source", choices=[s.value for s in Scheme], default="ipa")
    p.add_argument("--to", dest="target", choices=["ascii", "ipa", "terminal", "svg"], default="ascii")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", dest="mode", action="store_const", const=Mode.STRICT,
                      help="fail on unmapped or ambiguous input")
    mode.add_argument("--lossy", dest="mode", action="store_const", const=Mode.LOSSY,
                      help="skip unmapped input with a warning, resolve duplicates to the earliest row (default)")
    p.set_defaults(mode=Mode.LOSSY)
    _add_registry_flags(p)
    _add_output_flag(p)

    p = sub.add_parser("render", help="draw wire-format text as seven-segment glyphs")
    p.add_argument("input", nargs="?", help="input file (default: stdin)")
    p.add_argument("--to", dest="target", choices=["terminal", "svg"], default="terminal")
    _add_registry_flags(p)
    _add_output_flag(p)

    p = sub.add_parser("tables", help="print a mapping table")
    p.add_argument("which", choices=TABLES)
    _add_registry_flags(p)
    _add_output_flag(p)

    p = sub.add_parser("validate", help="check a registry file")
    p.add_argument("path")

    p = sub.add_parser("registry", help="inspect or extend a registry file")
    rsub = p.add_subparsers(dest="action", required=True, metavar="ACTION")
    r = rsub.add_parser("dump", help="print the active registry")
    _add_registry_flags(r)
    _add_output_flag(r)

    r = rsub.add_parser("add-phoneme", help="append a phoneme to a registry file")
    r.add_argument("--keyboard", required=True)
    r.add_argument("--category", choices=[VOWEL, CONSONANT], required=True)
    cont = r.add_mutually_exclusive_group()
    cont.add_argument("--continuous", dest="continuous", action="store_true", default=None)
    cont.add_argument("--non-continuous", dest="continuous", action="store_false")
    r.add_argument("--iso", default="")
    r.add_argument("--ipa", required=True, help="comma-separated IPA variants, canonical first")
    r.add_argument("--origin", default="")
    r.add_argument("--segments", required=True, help="lit segments, e.g. ABG")
    _add_registry_flags(r)
    _add_output_flag(r)

    r = rsub.add_parser("add-species", help="append a species code to a registry file")
    r.add_argument("number", type=int)
    r.add_argument("label")
    _add_registry_flags(r)
    _add_output_flag(r)
    return parser


# --- helpers ------------------------------------------------------------------

def _registry_path(args):
    return args.registry or os.environ.get(ENV_REGISTRY) or None


def active_registry(args) -> PhonemeRegistry:
    path = _registry_path(args)
    if args.registry_only and not path:
        raise CliError("--registry-only needs --registry PATH")
    builtin = build_builtin_registry()
    if not path:
        return builtin
    try:
        extra = read_registry(path)
    except OSError as exc:
        raise CliError(f"cannot read registry {path}: {exc.strerror or exc}") from None
    except RegistryError as exc:
        raise CliError(f"{path}: {exc}") from None
    if args.registry_only:
        return extra
    try:
        return builtin.merge(extra)
    except RegistryError as exc:
        raise CliError(f"{path}: conflicts with builtin inventory: {exc}") from None


@contextmanager
def _open_input(path, stdin):
    if path is None:
        yield stdin
        return
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None
    with fh:
        yield fh


@contextmanager
def _open_output(path, stdout):
    if path is None:
        yield stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}") from None
    with fh:
        yield fh


def _split_eol(line):
    body = line.rstrip("\r\n")
    return body, line[len(body):]


def _line_tokens(reg, body, scheme, opts, lineno, stderr):
    if scheme is Scheme.ASCII:
        try:
            return parse_ascii(body, reg)
        except WireFormatError as exc:
            raise CliError(f"line {lineno}: {exc}") from None
    try:
        seg = tokenize(reg, body, opts)
    except TransliterationError as exc:
        raise CliError(f"line {lineno}: {exc}") from None
    for w in seg.warnings:
        print(f"warning: line {lineno}: {w}", file=stderr)
    return encode(seg.phones)


# --- commands -------------------------------------------------------------------

def cmd_tr(args, stdin, stdout, stderr):
    reg = active_registry(args)
    scheme = Scheme(args.source)
    opts = TransliterationOptions(mode=args.mode, source_scheme=scheme)
    with _open_input(args.input, stdin) as src, _open_output(args.output, stdout) as out:
        if args.target == "svg":
            tokens = []
            for lineno, line in enumerate(src, start=1):
                body, _ = _split_eol(line)
                toks = _line_tokens(reg, body, scheme, opts, lineno, stderr)
                if tokens and toks and tokens[-1] != SEPARATOR and toks[0] != SEPARATOR:
                    tokens.append(SEPARATOR)
                tokens.extend(toks)
            out.write(render_svg(reg, tokens))
            return 0
        for lineno, line in enumerate(src, start=1):
            body, eol = _split_eol(line)
            toks = _line_tokens(reg, body, scheme, opts, lineno, stderr)
            if args.target == "ascii":
                out.write(emit_ascii(toks) + eol)
            elif args.target == "ipa":
                try:
                    out.write(tokens_to_ipa(reg, toks) + eol)
                except IpaConversionError as exc:
                    raise CliError(f"line {lineno}: {exc}") from None
            else:
                out.write(render_terminal(reg, toks) + "\n\n")
    return 0


def cmd_render(args, stdin, stdout, stderr):
    args.source = Scheme.ASCII.value
    args.mode = Mode.STRICT
    return cmd_tr(args, stdin, stdout, stderr)


def format_table(reg: PhonemeRegistry, which: str) -> str:
    if which not in TABLES:
        raise ValueError(f"unknown table {which!r}; choose from {', '.join(TABLES)}")
    if which in ("consonants", "vowels"):
        rows = [("origin", "iso15919", "ipa", "continuous", "keyboard", "segments")]
        wanted = CONSONANT if which == "consonants" else VOWEL
        for p in reg.phonemes:
            if p.category != wanted:
                continue
            cont = "-" if p.continuous is None else ("Yes" if p.continuous else "No")
            rows.append((p.origin, p.iso15919, ", ".join(p.ipa_variants), cont,
                         p.keyboard_char, p.pattern.letters))
    elif which == "length":
        rows = [("length", "wire")]
        marks = [LengthMark.SHORT, LengthMark.VERY_SHORT, LengthMark.LONG,
                 LengthMark.VERY_LONG]
        rows += [(m.kind.value, m.wire) for m in marks]
        rows.append(("prolong(n)", "-n  (n = 2..999)"))
    else:
        rows = [("pitch", "level", "keyboard", "wire")]
        for p in Pitch:
            rows.append((p.name.lower(), f"{p.level:+d}", p.value, p.wire or "(none)"))
    return "".join("\t".join(r) + "\n" for r in rows)


def cmd_tables(args, stdin, stdout, stderr):
    reg = active_registry(args)
    with _open_output(args.output, stdout) as out:
        out.write(format_table(reg, args.which))
    return 0


def cmd_validate(args, stdin, stdout, stderr):
    try:
        reg = read_registry(args.path)
    except OSError as exc:
        raise CliError(f"cannot read {args.path}: {exc.strerror or exc}") from None
    except RegistryError as exc:
        print(f"{args.path}: {exc}", file=stdout)
        return 1
    problems = validate_patterns(reg)
    for msg in problems:
        print(f"{args.path}: {msg}", file=stdout)
    if problems:
        return 1
    print(f"{args.path}: ok ({len(reg.phonemes)} phonemes, {len(reg.species)} species)", file=stderr)
    return 0


def _edit_registry(args, stdout, update):
    """Apply ``update`` to the registry file (or an empty one) and write it back."""
    path = _registry_path(args)
    base = PhonemeRegistry()
    if path and os.path.exists(path):
        try:
            base = read_registry(path)
        except RegistryError as exc:
            raise CliError(f"{path}: {exc}") from None
    try:
        updated = update(base)
        if not args.registry_only:
            # must not clash with the builtin inventory it will be overlaid on
            build_builtin_registry().merge(updated)
    except RegistryError as exc:
        raise CliError(str(exc)) from None
    target = args.output or path
    with _open_output(target, stdout) as out:
        out.write(dump_registry(updated))
    return 0


def cmd_registry(args, stdin, stdout, stderr):
    if args.action == "dump":
        reg = active_registry(args)
        with _open_output(args.output, stdout) as out:
            out.write(dump_registry(reg))
        return 0
    if args.action == "add-species":
        return _edit_registry(args, stdout, lambda reg: reg.register_species(args.number, args.label))

    def add(reg):
        try:
            pattern = SegmentPattern.from_letters(args.segments)
        except ValueError as exc:
            raise RegistryError(str(exc)) from None
        ph = Phoneme(
            keyboard_char=args.keyboard,
            category=args.category,
            continuous=args.continuous if args.category == CONSONANT else None,
            iso15919=args.iso,
            ipa_variants=tuple(v.strip() for v in args.ipa.split(",")),
            origin=args.origin,
            pattern=pattern,
        )
        return reg.register_phoneme(ph)
    return _edit_registry(args, stdout, add)


COMMANDS = {
    "tr": cmd_tr,
    "render": cmd_render,
    "tables": cmd_tables,
    "validate": cmd_validate,
    "registry": cmd_registry,
}


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "registry" and args.action == "add-phoneme":
        if args.category == CONSONANT and args.continuous is None:
            print("uniglyph: consonants need --continuous or --non-continuous", file=stderr)
            return 2
    try:
        return COMMANDS[args.command](args, stdin, stdout, stderr)
    except (CliError, RenderError) as exc:
        print(f"uniglyph: error: {exc}", file=stderr)
        return 1


def main():
    if hasattr(sys.stdin, "reconfigure"):
        sys.stdin.reconfigure(encoding="utf-8")
        sys.stdout.reconfigure(encoding="utf-8")
    sys.exit(run())


if __name__ == "__main__":
    main()
