"""UniGlyph: transliterate IPA / ISO 15919 into a seven-segment script."""
from .codec import (LengthKind, LengthMark, Pitch, SpeciesRef, Token, WireFormatError, emit_ascii,
                    encode, parse_ascii, tokens_to_ipa, transliterate)
from .registry import (AmbiguousLookup, Phoneme, PhonemeRegistry, RegistryError, SpeciesCode,
                       build_builtin_registry, dump_registry, load_registry)
from .renderer import Geometry, glyph_pattern, render_svg, render_terminal, validate_patterns
from .segments import SegmentPattern
from .tokenizer import (SEPARATOR, Mode, Scheme, TransliterationError, TransliterationOptions,
                        tokenize_ipa, tokenize_iso)

__version__ = "0.1.0"
