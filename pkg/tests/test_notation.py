"""Cycle-notation parsing and printing for vertices of ``K_{n,n}``."""

import re

import pytest
from hypothesis import given, strategies as st

from bipartite_tsg.notation import (
    DuplicateToken,
    NotationError,
    UnbalancedParenthesis,
    UnknownToken,
    parse_cycles,
    print_cycles,
    token_of,
)
from bipartite_tsg.perms import Perm


# ------------------------------------------------------------------- tokens


def test_token_of_covers_both_parts():
    assert token_of(0, 3) == "v1"
    assert token_of(2, 3) == "v3"
    assert token_of(3, 3) == "w1"
    assert token_of(5, 3) == "w3"


@pytest.mark.parametrize("index", [-1, 6, 100])
def test_token_of_rejects_out_of_range_indices(index):
    with pytest.raises(ValueError):
        token_of(index, 3)


# ------------------------------------------------------------------ parsing


def test_parse_simple_cycles():
    perm = parse_cycles("(v1 v2 v3)(w1 w2)", 3)
    assert perm == Perm.from_cycles(6, [(0, 1, 2), (3, 4)])


def test_empty_and_whitespace_texts_are_the_identity():
    assert parse_cycles("", 4).is_identity()
    assert parse_cycles("   \t\n ", 4).is_identity()


def test_singleton_cycles_are_allowed_and_fix_the_vertex():
    assert parse_cycles("(v1)", 3).is_identity()
    assert parse_cycles("(v2)(w3)", 3).is_identity()


def test_unmentioned_vertices_are_fixed():
    perm = parse_cycles("(w1 w2)", 4)
    assert perm(0) == 0 and perm(3) == 3
    assert perm(4) == 5 and perm(5) == 4


def test_part_swapping_text():
    perm = parse_cycles("(v1 w1)(v2 w2)", 2)
    assert perm == Perm.from_cycles(4, [(0, 2), (1, 3)])


def test_parse_is_whitespace_insensitive_between_cycles():
    a = parse_cycles("(v1 v2)(w1 w2)", 2)
    b = parse_cycles("  ( v1   v2 )\n( w1\tw2 )  ", 2)
    assert a == b


# ----------------------------------------------------------------- printing


def test_print_normal_form_sorts_cycles_and_starts_at_least_vertex():
    perm = Perm.from_cycles(6, [(4, 3), (2, 1)])
    assert print_cycles(perm, 3) == "(v2 v3)(w1 w2)"


def test_identity_prints_as_the_empty_string():
    assert print_cycles(Perm.identity(8), 4) == ""


def test_print_rejects_degree_mismatch():
    with pytest.raises(ValueError):
        print_cycles(Perm.identity(6), 4)


def test_print_omits_fixed_vertices():
    perm = Perm.from_cycles(8, [(0, 1)])
    assert print_cycles(perm, 4) == "(v1 v2)"


@given(
    st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.tuples(st.just(n), st.permutations(list(range(2 * n))))
    )
)
def test_round_trip_parse_of_print_is_identity(case):
    n, images = case
    perm = Perm(tuple(images))
    assert parse_cycles(print_cycles(perm, n), n) == perm


@given(
    st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.tuples(st.just(n), st.permutations(list(range(2 * n))))
    )
)
def test_printed_text_is_in_normal_form(case):
    n, images = case
    perm = Perm(tuple(images))
    text = print_cycles(perm, n)
    # reprinting the parse reproduces the text exactly (normal form is
    # canonical), and no singleton cycles appear
    assert print_cycles(parse_cycles(text, n), n) == text
    assert all(len(body.split()) >= 2 for body in re.findall(r"\(([^)]*)\)", text))


# ------------------------------------------------------------------- errors


def test_unknown_token_shape():
    with pytest.raises(UnknownToken) as exc:
        parse_cycles("(v1 x2)", 3)
    assert exc.value.position == 4
    assert "(at position 4)" in str(exc.value)


def test_unknown_token_beyond_part_size():
    with pytest.raises(UnknownToken) as exc:
        parse_cycles("(v9)", 3)
    assert exc.value.position == 1


def test_unknown_token_rejects_uppercase():
    with pytest.raises(UnknownToken):
        parse_cycles("(V1)", 3)


def test_unknown_token_rejects_zero_index():
    with pytest.raises(UnknownToken):
        parse_cycles("(v0)", 3)


def test_unexpected_character():
    with pytest.raises(UnknownToken) as exc:
        parse_cycles("(v1 $)", 3)
    assert exc.value.position == 4


def test_duplicate_across_cycles():
    with pytest.raises(DuplicateToken) as exc:
        parse_cycles("(v1 v2)(v1 w1)", 3)
    assert exc.value.position == 8


def test_duplicate_within_a_cycle():
    with pytest.raises(DuplicateToken) as exc:
        parse_cycles("(v1 v1)", 3)
    assert exc.value.position == 4


def test_nested_parenthesis():
    with pytest.raises(UnbalancedParenthesis) as exc:
        parse_cycles("((v1 v2)", 3)
    assert exc.value.position == 1


def test_stray_closing_parenthesis():
    with pytest.raises(UnbalancedParenthesis) as exc:
        parse_cycles(")", 3)
    assert exc.value.position == 0


def test_unclosed_cycle_points_at_end_of_text():
    with pytest.raises(UnbalancedParenthesis) as exc:
        parse_cycles("(v1", 3)
    assert exc.value.position == 3


def test_token_outside_any_cycle():
    with pytest.raises(UnbalancedParenthesis) as exc:
        parse_cycles("v1 v2", 3)
    assert exc.value.position == 0


def test_nonpositive_part_size_rejected():
    with pytest.raises(ValueError):
        parse_cycles("", 0)


def test_error_hierarchy():
    for cls in (DuplicateToken, UnknownToken, UnbalancedParenthesis):
        assert issubclass(cls, NotationError)
    assert issubclass(NotationError, ValueError)
