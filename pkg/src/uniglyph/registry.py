"""Phoneme inventory, species codes, lookup indexes and the registry file format.

A :class:`PhonemeRegistry` is an immutable value. ``register_phoneme`` and
``register_species`` return a new registry and leave the original untouched.
"""
from __future__ import annotations

import string
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from importlib import resources
from typing import Optional

from .segments import SegmentPattern

VOWEL = "vowel"
CONSONANT = "consonant"

PITCH_CHARS = frozenset("ZYXQUVW")
LENGTH_CHARS = frozenset("_.-" + string.digits)
EXTENSION_SIGIL = "@"
SEPARATOR_CHARS = frozenset(" \n")
RESERVED_CHARS = PITCH_CHARS | LENGTH_CHARS | {EXTENSION_SIGIL} | SEPARATOR_CHARS

HEADER = "#uniglyph-registry v1"
_PHONEME_COLUMNS = 8
_SPECIES_COLUMNS = 3


class RegistryError(ValueError):
    """Invalid phoneme/species definition or malformed registry document."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AmbiguousLookup(LookupError):
    """Raised in strict mode when a key names more than one phoneme."""

    def __init__(self, key, candidates):
        self.key = key
        self.candidates = tuple(candidates)
        ids = ", ".join(p.keyboard_char for p in self.candidates)
        super().__init__(f"{key!r} is ambiguous between phonemes {ids}")


@dataclass(frozen=True)
class Phoneme:
    """One row of the consonant or vowel inventory.

    ``continuous`` is ``None`` for vowels. The keyboard character doubles as
    the phoneme id.
    """

    keyboard_char: str
    category: str
    continuous: Optional[bool]
    iso15919: str
    ipa_variants: tuple[str, ...]
    origin: str
    pattern: SegmentPattern = field(default_factory=SegmentPattern)

    def __post_init__(self):
        if not isinstance(self.ipa_variants, tuple):
            object.__setattr__(self, "ipa_variants", tuple(self.ipa_variants))
        self.validate()

    @property
    def id(self) -> str:
        return self.keyboard_char

    @property
    def canonical_ipa(self) -> str:
        return self.ipa_variants[0]

    @property
    def is_vowel(self) -> bool:
        return self.category == VOWEL

    def validate(self):
        ch = self.keyboard_char
        if not isinstance(ch, str) or len(ch) != 1:
            raise RegistryError(f"keyboard character must be a single character, got {ch!r}")
        if ch in RESERVED_CHARS:
            raise RegistryError(f"keyboard character {ch!r} is reserved")
        if not (ch.isascii() and ch.isprintable()):
            raise RegistryError(f"keyboard character {ch!r} is not printable ASCII")
        if self.category not in (VOWEL, CONSONANT):
            raise RegistryError(f"unknown category {self.category!r}")
        if self.category == VOWEL and self.continuous is not None:
            raise RegistryError(f"vowel {ch!r} cannot carry a continuity flag")
        if self.category == CONSONANT and not isinstance(self.continuous, bool):
            raise RegistryError(f"consonant {ch!r} needs a continuity flag")
        if not self.ipa_variants:
            raise RegistryError(f"phoneme {ch!r} has no IPA variants")
        for v in self.ipa_variants:
            if not v or "," in v or _has_control(v):
                raise RegistryError(f"phoneme {ch!r} has invalid IPA variant {v!r}")
        for name in ("iso15919", "origin"):
            if _has_control(getattr(self, name)):
                raise RegistryError(f"phoneme {ch!r}: {name} contains control characters")


@dataclass(frozen=True)
class SpeciesCode:
    species_number: int
    label: str

    def __post_init__(self):
        if isinstance(self.species_number, bool) or not isinstance(self.species_number, int):
            raise RegistryError(f"species number must be an integer, got {self.species_number!r}")
        if self.species_number < 1:
            raise RegistryError(f"species number must be >= 1, got {self.species_number}")
        if _has_control(self.label):
            raise RegistryError("species label contains control characters")


def _has_control(s: str) -> bool:
    return any(c in "\t\n\r" for c in s)


@dataclass(frozen=True)
class PhonemeRegistry:
    phonemes: tuple[Phoneme, ...] = ()
    species: tuple[SpeciesCode, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "phonemes", tuple(self.phonemes))
        object.__setattr__(self, "species", tuple(self.species))
        seen = set()
        for p in self.phonemes:
            if p.keyboard_char in seen:
                raise RegistryError(f"duplicate keyboard character {p.keyboard_char!r}")
            seen.add(p.keyboard_char)
        numbers = set()
        for s in self.species:
            if s.species_number in numbers:
                raise RegistryError(f"duplicate species number {s.species_number}")
            numbers.add(s.species_number)

    def __len__(self):
        return len(self.phonemes)

    def __iter__(self):
        return iter(self.phonemes)

    def __contains__(self, keyboard_char):
        return keyboard_char in self.by_keyboard

    @cached_property
    def by_keyboard(self) -> dict[str, Phoneme]:
        return {p.keyboard_char: p for p in self.phonemes}

    @cached_property
    def by_canonical_ipa(self) -> dict[str, tuple[Phoneme, ...]]:
        return _group((p.canonical_ipa, p) for p in self.phonemes)

    @cached_property
    def by_ipa_variant(self) -> dict[str, tuple[Phoneme, ...]]:
        # a row repeating a variant is listed once
        return _group((v, p) for p in self.phonemes for v in dict.fromkeys(p.ipa_variants))

    @cached_property
    def by_iso(self) -> dict[str, tuple[Phoneme, ...]]:
        return _group((p.iso15919, p) for p in self.phonemes if p.iso15919)

    @cached_property
    def species_by_number(self) -> dict[int, SpeciesCode]:
        return {s.species_number: s for s in self.species}

    @property
    def consonants(self) -> list[Phoneme]:
        return [p for p in self.phonemes if p.category == CONSONANT]

    @property
    def vowels(self) -> list[Phoneme]:
        return [p for p in self.phonemes if p.category == VOWEL]

    def lookup_by_keyboard(self, ch: str) -> Optional[Phoneme]:
        return self.by_keyboard.get(ch)

    def lookup_by_ipa(self, sym: str, strict: bool = False) -> Optional[Phoneme]:
        """Resolve an IPA symbol to a phoneme.

        A row whose canonical (first) IPA is ``sym`` beats rows that merely
        list ``sym`` as a variant; otherwise the earliest listing row wins.
        If several rows share ``sym`` as canonical, the earliest wins unless
        ``strict`` is set, in which case :class:`AmbiguousLookup` is raised.
        """
        canonical = self.by_canonical_ipa.get(sym)
        if canonical:
            if strict and len(canonical) > 1:
                raise AmbiguousLookup(sym, canonical)
            return canonical[0]
        listed = self.by_ipa_variant.get(sym)
        return listed[0] if listed else None

    def lookup_by_iso(self, s: str, strict: bool = False) -> Optional[Phoneme]:
        """Earliest row wins on duplicated ISO cells; strict mode raises instead."""
        rows = self.by_iso.get(s)
        if not rows:
            return None
        if strict and len(rows) > 1:
            raise AmbiguousLookup(s, rows)
        return rows[0]

    def lookup_species(self, number: int) -> Optional[SpeciesCode]:
        return self.species_by_number.get(number)

    def register_phoneme(self, phoneme: Phoneme) -> "PhonemeRegistry":
        phoneme.validate()
        if phoneme.keyboard_char in self.by_keyboard:
            raise RegistryError(f"duplicate keyboard character {phoneme.keyboard_char!r}")
        return PhonemeRegistry(self.phonemes + (phoneme,), self.species)

    def register_species(self, number: int, label: str) -> "PhonemeRegistry":
        code = SpeciesCode(number, label)
        if number in self.species_by_number:
            raise RegistryError(f"duplicate species number {number}")
        return PhonemeRegistry(self.phonemes, self.species + (code,))

    def merge(self, other: "PhonemeRegistry") -> "PhonemeRegistry":
        """Overlay ``other``'s phonemes and species onto this registry.

        Entries structurally identical to ones already present are skipped, so
        overlaying a full dump of the builtin inventory is harmless.
        """
        reg = self
        for p in other.phonemes:
            if reg.by_keyboard.get(p.keyboard_char) != p:
                reg = reg.register_phoneme(p)
        for s in other.species:
            if reg.species_by_number.get(s.species_number) != s:
                reg = reg.register_species(s.species_number, s.label)
        return reg


def _group(pairs):
    out = {}
    for key, value in pairs:
        out.setdefault(key, []).append(value)
    return {k: tuple(v) for k, v in out.items()}


# --- registry documents -----------------------------------------------------

_CATEGORY_CODES = {"V": VOWEL, "C": CONSONANT}
_CONTINUITY_CODES = {"Y": True, "N": False, "-": None}


def dump_registry(reg: PhonemeRegistry) -> str:
    lines = [HEADER]
    for p in reg.phonemes:
        cat = "V" if p.category == VOWEL else "C"
        cont = "-" if p.continuous is None else ("Y" if p.continuous else "N")
        lines.append("\t".join(
            ["P", p.keyboard_char, cat, cont, p.iso15919, ",".join(p.ipa_variants),
             p.origin, p.pattern.letters]))
    for s in reg.species:
        lines.append(f"S\t{s.species_number}\t{s.label}")
    return "\n".join(lines) + "\n"


def load_registry(text: str) -> PhonemeRegistry:
    """Parse a registry document.

    Raises :class:`RegistryError` naming the offending line for malformed
    lines, wrong column counts and invariant violations.
    """
    phonemes = []
    species = []
    keys = {}
    numbers = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if line.startswith("#"):
            if line.startswith("#uniglyph-registry") and line.strip() != HEADER:
                raise RegistryError(f"unsupported registry header {line.strip()!r}", lineno)
            continue
        cols = line.split("\t")
        kind = cols[0]
        if kind == "P":
            if len(cols) != _PHONEME_COLUMNS:
                raise RegistryError(
                    f"malformed phoneme line: expected {_PHONEME_COLUMNS} columns, got {len(cols)}",
                    lineno)
            p = _parse_phoneme(cols, lineno)
            if p.keyboard_char in keys:
                raise RegistryError(
                    f"duplicate keyboard character {p.keyboard_char!r} "
                    f"(first defined on line {keys[p.keyboard_char]})", lineno)
            keys[p.keyboard_char] = lineno
            phonemes.append(p)
        elif kind == "S":
            if len(cols) != _SPECIES_COLUMNS:
                raise RegistryError(
                    f"malformed species line: expected {_SPECIES_COLUMNS} columns, got {len(cols)}",
                    lineno)
            num = cols[1]
            if not (num.isascii() and num.isdigit()):
                raise RegistryError(f"species number {num!r} is not a decimal integer", lineno)
            try:
                code = SpeciesCode(int(num), cols[2])
            except RegistryError as exc:
                raise RegistryError(str(exc), lineno) from None
            if code.species_number in numbers:
                raise RegistryError(f"duplicate species number {code.species_number}", lineno)
            numbers[code.species_number] = lineno
            species.append(code)
        else:
            raise RegistryError(f"malformed line: unknown record type {kind!r}", lineno)
    return PhonemeRegistry(tuple(phonemes), tuple(species))


def _parse_phoneme(cols, lineno) -> Phoneme:
    _, key, cat, cont, iso, ipa, origin, segs = cols
    if cat not in _CATEGORY_CODES:
        raise RegistryError(f"unknown category code {cat!r} (expected V or C)", lineno)
    if cont not in _CONTINUITY_CODES:
        raise RegistryError(f"unknown continuity code {cont!r} (expected Y, N or -)", lineno)
    try:
        pattern = SegmentPattern.from_letters(segs)
        return Phoneme(
            keyboard_char=key,
            category=_CATEGORY_CODES[cat],
            continuous=_CONTINUITY_CODES[cont],
            iso15919=iso,
            ipa_variants=tuple(ipa.split(",")) if ipa else (),
            origin=origin,
            pattern=pattern,
        )
    except ValueError as exc:
        raise RegistryError(str(exc), lineno) from None


def read_registry(path) -> PhonemeRegistry:
    with open(path, encoding="utf-8") as fh:
        return load_registry(fh.read())


@lru_cache(maxsize=None)
def build_builtin_registry() -> PhonemeRegistry:
    """The 36-phoneme inventory (29 consonants, 7 vowels) shipped with the package."""
    text = resources.files("uniglyph").joinpath("data/builtin.tsv").read_text(encoding="utf-8")
    return load_registry(text)

