"""Hand transcription of the published consonant and vowel tables.

Kept independent of ``uniglyph/data/builtin.tsv`` so the two can be
checked against each other. Rows: (keyboard, origin, ISO, IPA variants,
continuous), continuity is None for vowels.
"""

CONSONANTS = [
    ("k", "Tamil", "k", ("k", "g", "x", "γ", "h", "ŋ"), False),
    ("A", "Tamil", "ŋ", ("ŋ",), True),
    ("c", "Tamil", "c", ("ʃ", "ʄ", "ʃ", "s", "ʒ"), False),
    ("E", "Tamil", "ñ", ("ɲ",), True),
    ("x", "Tamil", "ṭ", ("ʈ", "ɖ", "ʈ"), False),
    ("C", "Tamil", "ṇ", ("ɳ",), True),
    ("q", "Tamil", "t", ("ʈ", "ɖ", "ɖ"), False),
    ("y", "Tamil", "n", ("n",), True),
    ("p", "Tamil", "p", ("p", "b", "β"), False),
    ("m", "Tamil", "m", ("m",), True),
    ("s", "Tamil", "r", ("r",), True),
    ("l", "Tamil", "l", ("l",), True),
    ("r", "Tamil", "v", ("v",), False),
    ("w", "Tamil", "l", ("ɭ",), True),
    ("I", "Tamil", "l", ("ɭ",), True),
    ("N", "Tamil", "t", ("t", "d"), False),
    ("S", "Tamil", "n", ("n",), True),
    ("j", "Tamil Grantha", "j", ("ɟʒ",), False),
    ("H", "Tamil Grantha", "ś", ("e", "ʃ"), True),
    ("v", "Tamil Grantha", "ś", ("ʃ",), True),
    ("O", "Tamil Grantha", "s", ("s",), True),
    ("T", "Tamil Grantha", "h", ("h",), False),
    ("g", "Devanagari", "g", ("g",), False),
    ("R", "Devanagari", "ḍ", ("ɖ",), False),
    ("d", "Devanagari", "d", ("ð",), False),
    ("b", "Devanagari", "b", ("b",), False),
    ("z", "Devanagari", "z", ("z",), True),
    ("D", "Devanagari", "zh", ("ʒ",), True),
    ("f", "Devanagari", "f", ("f",), True),
]

VOWELS = [
    ("i", "Russian", "", ("i",), None),
    ("n", "English", "", ("ɛ",), None),
    ("a", "Tamil", "a", ("ʌ",), None),
    ("e", "Tamil", "i", ("i",), None),
    ("t", "Tamil", "e", ("e",), None),
    ("u", "Tamil", "u", ("u", "ʊ"), None),
    ("o", "Tamil", "o", ("o",), None),
]

ALL_ROWS = CONSONANTS + VOWELS

# (name, keyboard character) in table order
PITCHES = [
    ("very very high", "Z"),
    ("very high", "Y"),
    ("high", "X"),
    ("normal", "Q"),
    ("low", "U"),
    ("very low", "V"),
    ("very very low", "W"),
]
