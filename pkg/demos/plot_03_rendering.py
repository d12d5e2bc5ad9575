"""
Seven-segment rendering
=======================

Segment G (the middle bar) is lit exactly for continuous consonants.
"""

from pathlib import Path

from uniglyph import build_builtin_registry, parse_ascii, render_svg, render_terminal, validate_patterns

reg = build_builtin_registry()

print("continuous:    ", " ".join(p.keyboard_char for p in reg.consonants if p.continuous))
print("non-continuous:", " ".join(p.keyboard_char for p in reg.consonants if not p.continuous))
print(render_terminal(reg, parse_ascii("myS kqp")))
print()

# markers are drawn as extra columns after the glyph
print(render_terminal(reg, parse_ascii("a-X yela m-3V")))

# the builtin assignment satisfies the glyph rules
assert validate_patterns(reg) == []

out = Path("yela.svg")
out.write_text(render_svg(reg, parse_ascii("yela")), encoding="utf-8")
print("wrote", out)
