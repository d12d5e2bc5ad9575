"""UniGlyph tokens and the ASCII wire format.

Wire grammar (bit-exact)::

    stream    := item*
    item      := token | " "
    token     := base length? pitch?  |  "@" number "." number
    base      := <keyboard character of a registered phoneme>
    length    := "_" | "_." | "-" | "--" | "-" count      (count 2..999)
    pitch     := "Z" | "Y" | "X" | "U" | "V" | "W"        ("Q" accepted on input)

Normal pitch is never emitted; ``Q`` is read as normal pitch and dropped.
Numbers never carry leading zeros.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .registry import EXTENSION_SIGIL, PhonemeRegistry, build_builtin_registry
from .tokenizer import SEPARATOR, TransliterationOptions, tokenize

PROLONG_MIN = 2
PROLONG_MAX = 999


class LengthKind(enum.Enum):
    UNMARKED = "unmarked"
    SHORT = "short"
    VERY_SHORT = "very_short"
    LONG = "long"
    VERY_LONG = "very_long"
    PROLONG = "prolong"


@dataclass(frozen=True)
class LengthMark:
    kind: LengthKind = LengthKind.UNMARKED
    count: Optional[int] = None

    def __post_init__(self):
        if self.kind is LengthKind.PROLONG:
            if (not isinstance(self.count, int) or isinstance(self.count, bool)
                    or not PROLONG_MIN <= self.count <= PROLONG_MAX):
                raise ValueError(
                    f"prolong count must be an integer in {PROLONG_MIN}..{PROLONG_MAX}, "
                    f"got {self.count!r}")
        elif self.count is not None:
            raise ValueError(f"{self.kind.value} length takes no count")

    @classmethod
    def prolong(cls, n: int) -> "LengthMark":
        return cls(LengthKind.PROLONG, n)

    @property
    def wire(self) -> str:
        if self.kind is LengthKind.PROLONG:
            return f"-{self.count}"
        return _LENGTH_WIRE[self.kind]

    def __repr__(self):
        if self.kind is LengthKind.PROLONG:
            return f"LengthMark.prolong({self.count})"
        return f"LengthMark.{self.kind.name}"


_LENGTH_WIRE = {
    LengthKind.UNMARKED: "",
    LengthKind.SHORT: "_",
    LengthKind.VERY_SHORT: "_.",
    LengthKind.LONG: "-",
    LengthKind.VERY_LONG: "--",
}

LengthMark.UNMARKED = LengthMark(LengthKind.UNMARKED)
LengthMark.SHORT = LengthMark(LengthKind.SHORT)
LengthMark.VERY_SHORT = LengthMark(LengthKind.VERY_SHORT)
LengthMark.LONG = LengthMark(LengthKind.LONG)
LengthMark.VERY_LONG = LengthMark(LengthKind.VERY_LONG)


class Pitch(enum.Enum):
    """The seven pitch levels; values are the keyboard characters."""

    VERY_VERY_HIGH = "Z"
    VERY_HIGH = "Y"
    HIGH = "X"
    NORMAL = "Q"
    LOW = "U"
    VERY_LOW = "V"
    VERY_VERY_LOW = "W"

    @property
    def level(self) -> int:
        """Steps above (+) or below (-) normal pitch."""
        return 3 - list(Pitch).index(self)

    @property
    def wire(self) -> str:
        return "" if self is Pitch.NORMAL else self.value


@dataclass(frozen=True)
class SpeciesRef:
    species_number: int
    call_number: int

    def __post_init__(self):
        for name in ("species_number", "call_number"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class Token:
    base: Union[str, SpeciesRef]
    length: LengthMark = LengthMark.UNMARKED
    pitch: Pitch = Pitch.NORMAL

    def __post_init__(self):
        if isinstance(self.base, SpeciesRef):
            if self.length != LengthMark.UNMARKED or self.pitch is not Pitch.NORMAL:
                raise ValueError("species tokens carry no length or pitch markers")
        elif not (isinstance(self.base, str) and len(self.base) == 1):
            raise ValueError(f"token base must be a keyboard character or SpeciesRef, got {self.base!r}")

    @property
    def is_species(self) -> bool:
        return isinstance(self.base, SpeciesRef)


Item = Union[Token, str]


class WireFormatError(ValueError):
    """Malformed wire-format input; ``offset`` indexes the offending character."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


class IpaConversionError(ValueError):
    pass


def encode(phones: Sequence[str]) -> list[Item]:
    """Phone sequence to tokens: unmarked length, normal pitch, separators kept."""
    return [SEPARATOR if p == SEPARATOR else Token(p) for p in phones]


def emit_token(tok: Token) -> str:
    if tok.is_species:
        return f"{EXTENSION_SIGIL}{tok.base.species_number}.{tok.base.call_number}"
    return tok.base + tok.length.wire + tok.pitch.wire


def emit_ascii(tokens: Sequence[Item]) -> str:
    return "".join(SEPARATOR if t == SEPARATOR else emit_token(t) for t in tokens)


_PITCH_BY_CHAR = {p.value: p for p in Pitch}


def parse_ascii(s: str, reg: Optional[PhonemeRegistry] = None) -> list[Item]:
    """Parse wire-format text into tokens; the inverse of :func:`emit_ascii`.

    Runs of spaces are read as a single separator. Raises
    :class:`WireFormatError` with the offset of the first offending character.
    """
    if reg is None:
        reg = build_builtin_registry()
    keys = reg.by_keyboard
    out: list[Item] = []
    i = 0
    n = len(s)
    while i < n:
        ch = s[i]
        if ch == " ":
            if not out or out[-1] != SEPARATOR:
                out.append(SEPARATOR)
            i += 1
        elif ch == EXTENSION_SIGIL:
            tok, i = _parse_species(s, i)
            out.append(tok)
        elif ch in keys:
            tok, i = _parse_marked(s, i + 1, ch)
            out.append(tok)
        elif ch in "_-" or ch in _PITCH_BY_CHAR:
            raise WireFormatError(f"marker {ch!r} without preceding base character", i)
        elif ch.isdigit():
            raise WireFormatError(f"digit {ch!r} without preceding '-'", i)
        elif ch == ".":
            raise WireFormatError("'.' without preceding '_'", i)
        else:
            raise WireFormatError(f"unknown character {ch!r}", i)
    return out


def _read_number(s, i):
    j = i
    while j < len(s) and "0" <= s[j] <= "9":
        j += 1
    return s[i:j], j


def _parse_marked(s, i, base):
    length = LengthMark.UNMARKED
    if i < len(s) and s[i] == "_":
        i += 1
        if i < len(s) and s[i] == ".":
            length = LengthMark.VERY_SHORT
            i += 1
        else:
            length = LengthMark.SHORT
    elif i < len(s) and s[i] == "-":
        start = i
        i += 1
        if i < len(s) and s[i] == "-":
            length = LengthMark.VERY_LONG
            i += 1
        elif i < len(s) and "0" <= s[i] <= "9":
            digits, i = _read_number(s, i)
            if digits[0] == "0" or not PROLONG_MIN <= int(digits) <= PROLONG_MAX:
                raise WireFormatError(
                    f"prolong count {digits!r} out of range {PROLONG_MIN}..{PROLONG_MAX}", start + 1)
            length = LengthMark.prolong(int(digits))
        else:
            length = LengthMark.LONG
    pitch = Pitch.NORMAL
    if i < len(s) and s[i] in _PITCH_BY_CHAR:
        pitch = _PITCH_BY_CHAR[s[i]]
        i += 1
    return Token(base, length, pitch), i


def _parse_species(s, i):
    start = i
    species, j = _read_number(s, i + 1)
    if not species or j >= len(s) or s[j] != ".":
        raise WireFormatError("malformed species reference, expected '@<number>.<number>'", start)
    call, k = _read_number(s, j + 1)
    if not call:
        raise WireFormatError("malformed species reference, missing call number", start)
    for digits in (species, call):
        if digits[0] == "0":
            raise WireFormatError(f"species reference numbers must be positive without leading zeros, got {digits!r}", start)
    if k < len(s) and (s[k] in "_-." or s[k] in _PITCH_BY_CHAR):
        raise WireFormatError(f"marker {s[k]!r} not allowed on a species token", k)
    return Token(SpeciesRef(int(species), int(call))), k


# --- IPA back-conversion ------------------------------------------------------

COMBINING_BREVE = "̆"
LENGTH_MARK_IPA = "ː"

_LENGTH_IPA = {
    LengthKind.UNMARKED: "",
    LengthKind.SHORT: COMBINING_BREVE,
    LengthKind.VERY_SHORT: COMBINING_BREVE * 2,
    LengthKind.LONG: LENGTH_MARK_IPA,
    LengthKind.VERY_LONG: LENGTH_MARK_IPA * 2,
}


def pitch_annotation(pitch: Pitch) -> str:
    if pitch is Pitch.NORMAL:
        return ""
    return f"{{p{pitch.level:+d}}}"


def tokens_to_ipa(reg: PhonemeRegistry, tokens: Sequence[Item]) -> str:
    """Render tokens as IPA using each phoneme's canonical symbol.

    Pitch has no IPA counterpart here and is written as ``{p+k}``/``{p-k}``.
    """
    parts = []
    for t in tokens:
        if t == SEPARATOR:
            parts.append(" ")
            continue
        if t.is_species:
            raise IpaConversionError(
                f"species token @{t.base.species_number}.{t.base.call_number} has no IPA form")
        ph = reg.lookup_by_keyboard(t.base)
        if ph is None:
            raise IpaConversionError(f"unknown phoneme {t.base!r}")
        if t.length.kind is LengthKind.PROLONG:
            length = LENGTH_MARK_IPA * t.length.count
        else:
            length = _LENGTH_IPA[t.length.kind]
        parts.append(ph.canonical_ipa + length + pitch_annotation(t.pitch))
    return "".join(parts)


def transliterate(reg: PhonemeRegistry, text: str, opts: TransliterationOptions) -> str:
    """IPA or ISO 15919 text to wire format."""
    return emit_ascii(encode(tokenize(reg, text, opts).phones))
