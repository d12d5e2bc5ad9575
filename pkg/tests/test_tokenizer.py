import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uniglyph.registry import build_builtin_registry
from uniglyph.tokenizer import (SEPARATOR, AmbiguousMapping, Mode, Scheme, TransliterationOptions,
                                UnmatchedInput, ipa_matcher, tokenize, tokenize_ipa, tokenize_iso)

from oracles import min_token_segmentation

REG = build_builtin_registry()
ISO_STRICT = TransliterationOptions(Mode.STRICT, Scheme.ISO15919)
ISO_LOSSY = TransliterationOptions(Mode.LOSSY, Scheme.ISO15919)
IPA_STRICT = TransliterationOptions(Mode.STRICT, Scheme.IPA)
IPA_LOSSY = TransliterationOptions(Mode.LOSSY, Scheme.IPA)


def test_iso_longest_match():
    assert tokenize_iso(REG, "zha", ISO_STRICT).phones == ["D", "a"]
    assert tokenize_iso(REG, "za", ISO_STRICT).phones == ["z", "a"]


def test_iso_kamala_lossy():
    seg = tokenize_iso(REG, "kamala", ISO_LOSSY)
    assert seg.phones == ["k", "a", "m", "a", "l", "a"]
    assert seg.warnings == []


def test_iso_duplicate_strict():
    with pytest.raises(AmbiguousMapping) as info:
        tokenize_iso(REG, "kamala", ISO_STRICT)
    assert info.value.offset == 4
    assert info.value.symbol == "l"


def test_empty():
    assert tokenize_iso(REG, "", ISO_STRICT).phones == []
    assert tokenize_ipa(REG, "", IPA_STRICT).phones == []


def test_ipa_examples():
    assert tokenize_ipa(REG, "mʌk", IPA_STRICT).phones == ["m", "a", "k"]
    assert tokenize_ipa(REG, "ɲ", IPA_STRICT).phones == ["E"]
    assert tokenize_ipa(REG, "ɟʒʌ", IPA_STRICT).phones == ["j", "a"]


def test_ipa_combining_mark_strict():
    with pytest.raises(UnmatchedInput) as info:
        tokenize_ipa(REG, "ḿa", IPA_STRICT)
    assert info.value.offset == 1
    assert info.value.byte_offset == 1
    assert info.value.symbol == "́"


def test_byte_offset_counts_utf8():
    with pytest.raises(UnmatchedInput) as info:
        tokenize_ipa(REG, "ɲɲ!", IPA_STRICT)
    assert info.value.offset == 2
    assert info.value.byte_offset == 4


def test_ipa_duplicate_i_strict():
    with pytest.raises(AmbiguousMapping):
        tokenize_ipa(REG, "i", IPA_STRICT)
    assert tokenize_ipa(REG, "i", IPA_LOSSY).phones == ["i"]


def test_lossy_skips_and_warns():
    seg = tokenize_iso(REG, "ka1ma!", ISO_LOSSY)
    assert seg.phones == ["k", "a", "m", "a"]
    assert [(w.offset, w.char) for w in seg.warnings] == [(2, "1"), (5, "!")]


def test_whitespace_runs():
    seg = tokenize_iso(REG, "ka \t\n ma", ISO_STRICT)
    assert seg.phones == ["k", "a", SEPARATOR, "m", "a"]
    assert seg.spans[2] == (2, 6)


def test_no_adjacent_separators_after_skip():
    seg = tokenize_iso(REG, "ka ! ma", ISO_LOSSY)
    assert seg.phones == ["k", "a", SEPARATOR, "m", "a"]


def test_scheme_mismatch_rejected():
    with pytest.raises(ValueError):
        tokenize_iso(REG, "ka", IPA_STRICT)
    with pytest.raises(ValueError):
        tokenize(REG, "ka", TransliterationOptions(source_scheme=Scheme.ASCII))


def test_options_accept_strings():
    opts = TransliterationOptions("lossy", "iso15919")
    assert opts.mode is Mode.LOSSY and opts.source_scheme is Scheme.ISO15919
    with pytest.raises(ValueError):
        TransliterationOptions("sloppy", "ipa")


ISO_KEYS = sorted(REG.by_iso)
IPA_KEYS = sorted(REG.by_ipa_variant)


@st.composite
def key_texts(draw, keys):
    parts = draw(st.lists(st.one_of(st.sampled_from(keys), st.sampled_from([" ", "  ", "\t"])), max_size=12))
    return "".join(parts)


@settings(max_examples=300, deadline=None)
@given(key_texts(ISO_KEYS))
def test_iso_coverage_and_lossy_superset(text):
    seg = tokenize_iso(REG, text, ISO_LOSSY)
    assert "".join(text[a:b] for a, b in seg.spans) == text
    assert seg.warnings == []
    for phone, (a, b) in zip(seg.phones, seg.spans):
        if phone == SEPARATOR:
            assert text[a:b].isspace()
        else:
            assert REG.lookup_by_keyboard(phone).iso15919 == text[a:b]
    for x, y in zip(seg.phones, seg.phones[1:]):
        assert not (x == y == SEPARATOR)


@settings(max_examples=300, deadline=None)
@given(key_texts(IPA_KEYS))
def test_ipa_coverage(text):
    seg = tokenize_ipa(REG, text, IPA_LOSSY)
    assert "".join(text[a:b] for a, b in seg.spans) == text
    for phone, (a, b) in zip(seg.phones, seg.spans):
        if phone != SEPARATOR:
            assert text[a:b] in REG.lookup_by_keyboard(phone).ipa_variants


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet=st.sampled_from(sorted(set("".join(IPA_KEYS)) | set(" !x1"))), max_size=10))
def test_strict_success_implies_lossy_identical(text):
    try:
        strict = tokenize_ipa(REG, text, IPA_STRICT)
    except (UnmatchedInput, AmbiguousMapping):
        return
    lossy = tokenize_ipa(REG, text, IPA_LOSSY)
    assert lossy.phones == strict.phones
    assert lossy.warnings == []
    assert "".join(text[a:b] for a, b in strict.spans) == text


def test_deterministic():
    text = "zhakamala nila"
    assert tokenize_iso(REG, text, ISO_LOSSY).phones == tokenize_iso(REG, text, ISO_LOSSY).phones


def test_ipa_greedy_matches_oracle():
    # length <= 3 over every code point used by an IPA variant
    keys = set(IPA_KEYS)
    alphabet = sorted(set("".join(keys)))
    matcher = ipa_matcher(REG)
    for n in range(1, 4):
        for combo in itertools.product(alphabet, repeat=n):
            text = "".join(combo)
            expected = min_token_segmentation(text, keys)
            got = matcher.segment(text, strict=False)
            if expected is None:
                assert got.warnings, text
            else:
                assert [text[a:b] for a, b in got.spans] == list(expected)


def test_oracles_agree_with_each_other():
    from oracles import all_segmentations
    keys = {"a", "b", "ab", "ba"}
    assert sorted(all_segmentations("aba", keys)) == [("a", "b", "a"), ("a", "ba"), ("ab", "a")]
    with pytest.raises(ValueError):
        min_token_segmentation("aba", keys)
    assert min_token_segmentation("abab", keys) == ("ab", "ab")
    assert min_token_segmentation("c", keys) is None
