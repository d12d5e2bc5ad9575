"""
Extending the inventory
=======================

New phonemes get an unused keyboard character and a glyph; species codes
are numbered and written ``@species.call``.
"""

from uniglyph import (Phoneme, SegmentPattern, TransliterationOptions, build_builtin_registry,
                      dump_registry, load_registry, parse_ascii, render_terminal, transliterate,
                      validate_patterns)

reg = build_builtin_registry()

glottal = Phoneme("G", "consonant", False, "", ("ʔ",), "Arabic", SegmentPattern.from_letters("ABDE"))
reg = reg.register_phoneme(glottal).register_species(12, "bottlenose dolphin")
print(len(reg), "phonemes,", len(reg.species), "species")
print(validate_patterns(reg) or "glyphs ok")

print(transliterate(reg, "ʔʌʔʌ", TransliterationOptions(source_scheme="ipa")))
print(render_terminal(reg, parse_ascii("GaG @12.3", reg)))

# reserved characters are refused
try:
    reg.register_phoneme(Phoneme("Q", "vowel", None, "", ("ɯ",), "x", SegmentPattern(1)))
except ValueError as exc:
    print("refused:", exc)

# registries serialize to a tab-separated text file and load back unchanged
text = dump_registry(reg)
print(text.splitlines()[-2:])
assert load_registry(text) == reg
