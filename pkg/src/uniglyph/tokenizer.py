"""Greedy longest-match segmentation of IPA or ISO 15919 text into phonemes.

A phone sequence is a list whose items are phoneme ids (keyboard characters)
or :data:`SEPARATOR` for a word break. Matching is on exact code points; no
Unicode normalization is applied, so callers must pre-normalize their input.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

from .registry import AmbiguousLookup, PhonemeRegistry

SEPARATOR = " "


class Mode(str, enum.Enum):
    STRICT = "strict"
    LOSSY = "lossy"


class Scheme(str, enum.Enum):
    IPA = "ipa"
    ISO15919 = "iso15919"
    ASCII = "ascii"


@dataclass(frozen=True)
class TransliterationOptions:
    mode: Mode = Mode.STRICT
    source_scheme: Scheme = Scheme.IPA

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "source_scheme", Scheme(self.source_scheme))

    @property
    def strict(self) -> bool:
        return self.mode is Mode.STRICT


class TransliterationError(ValueError):
    """Strict-mode failure at a given position of the source text.

    ``offset`` is the code point index, ``byte_offset`` the UTF-8 byte offset.
    """

    def __init__(self, message, text, offset, symbol):
        self.offset = offset
        self.byte_offset = len(text[:offset].encode("utf-8"))
        self.symbol = symbol
        super().__init__(f"{message} {symbol!r} at offset {offset} (byte {self.byte_offset})")


class UnmatchedInput(TransliterationError):
    def __init__(self, text, offset):
        super().__init__("no phoneme matches", text, offset, text[offset])


class AmbiguousMapping(TransliterationError):
    def __init__(self, text, offset, symbol, candidates):
        self.candidates = tuple(candidates)
        ids = ",".join(p.keyboard_char for p in self.candidates)
        super().__init__(f"ambiguous mapping (phonemes {ids}) for", text, offset, symbol)


@dataclass(frozen=True)
class SkippedInput:
    """A lossy-mode warning: code point ``char`` at ``offset`` was dropped."""

    offset: int
    byte_offset: int
    char: str

    def __str__(self):
        return f"skipped unmapped {self.char!r} (U+{ord(self.char):04X}) at offset {self.offset}"


@dataclass
class Segmentation:
    """Result of tokenizing: phones plus the source span each phone came from."""

    phones: list[str] = field(default_factory=list)
    spans: list[tuple[int, int]] = field(default_factory=list)
    warnings: list[SkippedInput] = field(default_factory=list)

    def __iter__(self):
        return iter(self.phones)

    def __len__(self):
        return len(self.phones)


class LongestMatcher:
    """Greedy left-to-right matcher over a fixed key set.

    ``resolve(key, strict)`` maps a matched key to a phoneme; it may raise
    :class:`AmbiguousLookup` in strict mode.
    """

    def __init__(self, keys, resolve: Callable):
        self.keys = frozenset(k for k in keys if k)
        self.resolve = resolve
        self.max_len = max((len(k) for k in self.keys), default=0)

    def match_at(self, text: str, pos: int) -> Optional[str]:
        for n in range(min(self.max_len, len(text) - pos), 0, -1):
            cand = text[pos:pos + n]
            if cand in self.keys:
                return cand
        return None

    def segment(self, text: str, strict: bool = True) -> Segmentation:
        out = Segmentation()
        pos = 0
        size = len(text)
        while pos < size:
            ch = text[pos]
            if ch.isspace():
                end = pos + 1
                while end < size and text[end].isspace():
                    end += 1
                if out.phones and out.phones[-1] == SEPARATOR:
                    # skipped input between two whitespace runs; widen the span
                    out.spans[-1] = (out.spans[-1][0], end)
                else:
                    out.phones.append(SEPARATOR)
                    out.spans.append((pos, end))
                pos = end
                continue
            key = self.match_at(text, pos)
            if key is None:
                if strict:
                    raise UnmatchedInput(text, pos)
                out.warnings.append(SkippedInput(pos, len(text[:pos].encode("utf-8")), ch))
                pos += 1
                continue
            try:
                phoneme = self.resolve(key, strict)
            except AmbiguousLookup as exc:
                raise AmbiguousMapping(text, pos, key, exc.candidates) from None
            out.phones.append(phoneme.keyboard_char)
            out.spans.append((pos, pos + len(key)))
            pos += len(key)
        return out


def iso_matcher(reg: PhonemeRegistry) -> LongestMatcher:
    return LongestMatcher(reg.by_iso, lambda key, strict: reg.lookup_by_iso(key, strict=strict))


def ipa_matcher(reg: PhonemeRegistry) -> LongestMatcher:
    return LongestMatcher(reg.by_ipa_variant, lambda key, strict: reg.lookup_by_ipa(key, strict=strict))


def _options(opts, scheme):
    if opts is None:
        return TransliterationOptions(source_scheme=scheme)
    if opts.source_scheme is not scheme:
        raise ValueError(f"options select {opts.source_scheme.value!r}, expected {scheme.value!r}")
    return opts


def tokenize_iso(reg: PhonemeRegistry, text: str,
                 opts: Optional[TransliterationOptions] = None) -> Segmentation:
    """Segment ISO 15919 text. Duplicated ISO cells resolve to the earliest row
    in lossy mode and raise :class:`AmbiguousMapping` in strict mode."""
    opts = _options(opts, Scheme.ISO15919)
    return iso_matcher(reg).segment(text, strict=opts.strict)


def tokenize_ipa(reg: PhonemeRegistry, text: str,
                 opts: Optional[TransliterationOptions] = None) -> Segmentation:
    opts = _options(opts, Scheme.IPA)
    return ipa_matcher(reg).segment(text, strict=opts.strict)


def tokenize(reg: PhonemeRegistry, text: str, opts: TransliterationOptions) -> Segmentation:
    if opts.source_scheme is Scheme.ISO15919:
        return tokenize_iso(reg, text, opts)
    if opts.source_scheme is Scheme.IPA:
        return tokenize_ipa(reg, text, opts)
    raise ValueError(f"cannot tokenize source scheme {opts.source_scheme.value!r}")
