"""Seven-segment rendering of token streams (terminal art and SVG)."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .codec import Item, Token, emit_token
from .registry import CONSONANT, PhonemeRegistry
from .segments import ALL_SEGMENTS, SEGMENT_LETTERS, SegmentPattern
from .tokenizer import SEPARATOR

__all__ = [
    "SegmentPattern", "SPECIES_PATTERN", "Geometry", "RenderError",
    "glyph_pattern", "marker_text", "validate_patterns", "render_terminal", "render_svg",
]

# Auxiliary glyph for species tokens; no phoneme may use it.
SPECIES_PATTERN = ALL_SEGMENTS
CONTINUITY_SEGMENT = "G"


class RenderError(ValueError):
    pass


def glyph_pattern(reg: PhonemeRegistry, token: Token) -> SegmentPattern:
    if token.is_species:
        return SPECIES_PATTERN
    ph = reg.lookup_by_keyboard(token.base)
    if ph is None:
        raise RenderError(f"unknown phoneme {token.base!r}")
    return ph.pattern


def marker_text(token: Token) -> str:
    """Characters drawn after the glyph: the wire suffix, or the species number."""
    # drop the base character (or the '@' sigil)
    return emit_token(token)[1:]


def validate_patterns(reg: PhonemeRegistry) -> list[str]:
    """Check glyph rules and return one message per violation.

    Rules: every mask is non-empty, all masks (plus the species glyph) are
    distinct, and a consonant lights segment G exactly when it is continuous.
    """
    problems = []
    for p in reg.phonemes:
        if not p.pattern:
            problems.append(f"{p.keyboard_char}: empty segment pattern")
        if p.category == CONSONANT and p.pattern.lit(CONTINUITY_SEGMENT) != p.continuous:
            want = "lit" if p.continuous else "unlit"
            problems.append(
                f"{p.keyboard_char}: continuity violation, segment G must be {want} "
                f"for a {'continuous' if p.continuous else 'non-continuous'} consonant")
        if p.pattern == SPECIES_PATTERN:
            problems.append(f"{p.keyboard_char}: pattern {p.pattern} is reserved for species tokens")
    for a, b in combinations(reg.phonemes, 2):
        if a.pattern == b.pattern:
            problems.append(
                f"{a.keyboard_char}, {b.keyboard_char}: injectivity violation, "
                f"both use pattern {a.pattern.letters or '(empty)'}")
    return problems


# --- terminal -------------------------------------------------------------------

def _glyph_rows(pat: SegmentPattern) -> list[str]:
    on = pat.lit
    return [
        " " + ("_" if on("A") else " ") + " ",
        ("|" if on("F") else " ") + ("_" if on("G") else " ") + ("|" if on("B") else " "),
        ("|" if on("E") else " ") + ("_" if on("D") else " ") + ("|" if on("C") else " "),
    ]


def render_terminal(reg: PhonemeRegistry, tokens: Sequence[Item]) -> str:
    """Three rows of ASCII art; cells are separated by one blank column.

    Marker characters follow their glyph as one column each on the middle row.
    A word separator is three blank columns.
    """
    cells = []
    for t in tokens:
        if t == SEPARATOR:
            cells.append(["   "] * 3)
            continue
        rows = _glyph_rows(glyph_pattern(reg, t))
        marks = marker_text(t)
        cells.append([rows[0] + " " * len(marks), rows[1] + marks, rows[2] + " " * len(marks)])
    if not cells:
        return ""
    return "\n".join(" ".join(c[r] for c in cells) for r in range(3))


# --- SVG ------------------------------------------------------------------------

@dataclass(frozen=True)
class Geometry:
    cell_width: float = 10
    cell_height: float = 18
    stroke: float = 2
    pitch: float = 14

    def __post_init__(self):
        for name in ("cell_width", "cell_height", "stroke", "pitch"):
            if not getattr(self, name) > 0:
                raise RenderError(f"geometry {name} must be positive, got {getattr(self, name)!r}")
        if 2 * self.stroke > self.cell_width or 3 * self.stroke > self.cell_height:
            raise RenderError("segment stroke too thick for the cell")
        if self.pitch < self.cell_width:
            raise RenderError("glyph pitch smaller than the cell width")

    def segment_rect(self, segment: str) -> tuple[float, float, float, float]:
        """(x, y, width, height) of a segment inside a cell at the origin."""
        w, h, t = self.cell_width, self.cell_height, self.stroke
        half = h / 2
        return {
            "A": (0, 0, w, t),
            "B": (w - t, 0, t, half),
            "C": (w - t, half, t, half),
            "D": (0, h - t, w, t),
            "E": (0, half, t, half),
            "F": (0, 0, t, half),
            "G": (0, half - t / 2, w, t),
        }[segment]


def _num(v: float) -> str:
    return f"{v:g}"


def render_svg(reg: PhonemeRegistry, tokens: Sequence[Item],
               geometry: Optional[Geometry] = None) -> str:
    """SVG document with one ``rect`` per lit segment.

    Every item, separators included, takes one glyph pitch of width. Marker
    suffixes are ``text`` elements at the right edge of their cell.
    """
    g = geometry or Geometry()
    width = len(tokens) * g.pitch
    height = g.cell_height
    body = []
    for i, t in enumerate(tokens):
        if t == SEPARATOR:
            continue
        x0 = i * g.pitch
        pat = glyph_pattern(reg, t)
        for seg in SEGMENT_LETTERS:
            if pat.lit(seg):
                x, y, w, h = g.segment_rect(seg)
                body.append(
                    f'  <rect class="seg seg-{seg}" x="{_num(x0 + x)}" y="{_num(y)}" '
                    f'width="{_num(w)}" height="{_num(h)}"/>')
        marks = marker_text(t)
        if marks:
            size = max(g.pitch - g.cell_width, 1)
            body.append(
                f'  <text class="marker" x="{_num(x0 + g.cell_width)}" y="{_num(size)}" '
                f'font-size="{_num(size)}">{escape(marks)}</text>')
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"
