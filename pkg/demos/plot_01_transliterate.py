"""
Transliterating ISO 15919 and IPA text
======================================

Text goes through three steps: longest-match tokenizing against the
phoneme inventory, encoding into tokens, and emitting the ASCII wire format.
"""

from uniglyph import (TransliterationOptions, build_builtin_registry, encode, emit_ascii,
                      tokenize_iso, transliterate)

reg = build_builtin_registry()

# ISO 15919 input. "n" and "l" each appear in several rows; lossy mode picks
# the earliest row, strict mode refuses.
lossy = TransliterationOptions(mode="lossy", source_scheme="iso15919")
for word in ["nila", "kamala", "zha"]:
    print(f"{word:>8} -> {transliterate(reg, word, lossy)}")

# The same thing one step at a time. ``spans`` tells which source
# characters produced each phoneme.
seg = tokenize_iso(reg, "zhakam", lossy)
print(seg.phones, seg.spans)
print(emit_ascii(encode(seg.phones)))

# IPA input
ipa = TransliterationOptions(mode="strict", source_scheme="ipa")
print(transliterate(reg, "mʌk ɲʌ", ipa))

# strict mode reports where it got stuck
try:
    transliterate(reg, "mʌʘ", ipa)
except ValueError as exc:
    print("error:", exc)
