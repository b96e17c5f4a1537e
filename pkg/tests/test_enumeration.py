import pytest

from gesselwalks import (
    CapExceededError,
    GesselWord,
    count_complete_words,
    is_complete,
    is_gessel_word,
    iter_complete_words,
    marker_position_triangle,
    profile_triangle_row,
    triangle_rows,
)
from gesselwalks.enumeration import complete_word_objects

GESSEL_D2 = [1, 2, 11, 85, 782, 8004]


def test_counts_match_known_d2():
    for n, want in enumerate(GESSEL_D2):
        assert count_complete_words(2, n) == want


def test_counts_d1_are_catalan():
    # d=1 complete words are balanced parenthesis strings
    assert [count_complete_words(1, n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_iterated_words_are_valid_complete_and_sorted():
    seen = list(iter_complete_words(2, 3))
    assert len(seen) == 85
    assert seen == sorted(seen)
    assert len(set(seen)) == 85
    for codes in seen:
        assert is_gessel_word(codes, d=2)
        assert is_complete(codes, d=2)


def test_word_objects():
    objs = list(complete_word_objects(2, 2))
    assert len(objs) == 11
    assert all(isinstance(w, GesselWord) for w in objs)


def test_marker_cap_filters_letter_one_pairs():
    # words with at most one 1/1-bar pair
    capped = list(iter_complete_words(2, 3, marker_cap=1))
    full = [w for w in iter_complete_words(2, 3)
            if sum(1 for c in w if c == 1) <= 1]
    assert capped == full


def test_cap_raises():
    with pytest.raises(CapExceededError):
        count_complete_words(2, 9, max_length=14)
    with pytest.raises(CapExceededError):
        next(iter_complete_words(2, 8))


def test_profile_triangle_rows():
    assert profile_triangle_row(0) == (1,)
    assert profile_triangle_row(1) == (1, 1)
    assert profile_triangle_row(2) == (2, 7, 2)
    assert profile_triangle_row(3) == (5, 37, 38, 5)
    assert profile_triangle_row(4) == (14, 177, 390, 187, 14)


def test_profile_row_sums_to_total():
    for n in range(5):
        assert sum(profile_triangle_row(n)) == GESSEL_D2[n]


def test_marker_position_triangle_layout():
    tri = marker_position_triangle(3)
    assert triangle_rows(tri, 3) == [
        [2],
        [2, 2],
        [2, 3, 2],
        [2, 3, 3, 2],
        [2, 4, 3, 4, 2],
    ]


def test_marker_position_triangle_total_is_single_pair_count():
    for n in range(1, 5):
        tri = marker_position_triangle(n)
        assert sum(tri.values()) == profile_triangle_row(n)[n - 1]


def test_invalid_dimension():
    with pytest.raises(ValueError):
        count_complete_words(0, 1)
