"""
Length and pitch markers on the wire
====================================

Every token is ``base [length] [pitch]``. Normal pitch is written as nothing;
``Q`` is also accepted on input.
"""

from uniglyph import LengthMark, Pitch, Token, build_builtin_registry, emit_ascii, parse_ascii, tokens_to_ipa

reg = build_builtin_registry()

lengths = [LengthMark.UNMARKED, LengthMark.SHORT, LengthMark.VERY_SHORT,
           LengthMark.LONG, LengthMark.VERY_LONG, LengthMark.prolong(5)]
for length in lengths:
    tok = Token("a", length)
    print(f"{length!r:28} {emit_ascii([tok]):6} {tokens_to_ipa(reg, [tok])}")

for pitch in Pitch:
    tok = Token("m", pitch=pitch)
    print(f"{pitch.name:15} level {pitch.level:+d}  wire {emit_ascii([tok])!r}")

# Tokens concatenate without delimiters and still parse back uniquely.
stream = parse_ascii("m-Xa_.Vk--@12.47 mQ")
for item in stream:
    print(item)
print(emit_ascii(stream))  # the Q is dropped
