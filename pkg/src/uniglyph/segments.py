"""Seven-segment masks.

Segments are lettered the usual way::

     A
    F B
     G
    E C
     D

A pattern is stored as a 7-bit integer, bit 0 = A through bit 6 = G.
"""
from __future__ import annotations

from dataclasses import dataclass

SEGMENT_LETTERS = "ABCDEFG"


@dataclass(frozen=True, order=True)
class SegmentPattern:
    mask: int = 0

    def __post_init__(self):
        if not 0 <= self.mask < 1 << 7:
            raise ValueError(f"segment mask out of range: {self.mask!r}")

    @classmethod
    def from_letters(cls, letters: str) -> "SegmentPattern":
        """Build a pattern from segment letters, e.g. ``"ABG"``."""
        mask = 0
        for ch in letters:
            idx = SEGMENT_LETTERS.find(ch)
            if idx < 0:
                raise ValueError(f"unknown segment letter {ch!r} in {letters!r}")
            bit = 1 << idx
            if mask & bit:
                raise ValueError(f"segment {ch!r} repeated in {letters!r}")
            mask |= bit
        return cls(mask)

    @property
    def letters(self) -> str:
        return "".join(s for i, s in enumerate(SEGMENT_LETTERS) if self.mask >> i & 1)

    def lit(self, segment: str) -> bool:
        return bool(self.mask >> SEGMENT_LETTERS.index(segment) & 1)

    def __contains__(self, segment: str) -> bool:
        return self.lit(segment)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __str__(self) -> str:
        return self.letters


ALL_SEGMENTS = SegmentPattern((1 << 7) - 1)
