import pytest
from hypothesis import given
from hypothesis import strategies as st

from pegball.perm import ParseError
from pegball.peg import (Decoration, ExceptionalKind, PegPermutation,
                         clean_compact_proper_patterns,
                         enumerate_clean_compact, exceptional, format_peg,
                         is_clean_compact, is_compact, min_inflation,
                         oriented_prefix_reversal, oriented_reversal,
                         parse_peg, peg_of, peg_pattern_contains,
                         proper_patterns, strips)

pegs = st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.permutations(tuple(range(1, n + 1))),
        st.lists(st.sampled_from("+-."), min_size=n, max_size=n)))


def _peg(base, decs):
    return PegPermutation(tuple(base), tuple(decs))


def test_parse_and_format():
    pp = parse_peg("3+ 4. 1- 5- 2+")
    assert pp.base == (3, 4, 1, 5, 2)
    assert format_peg(pp) == "3+ 4. 1- 5- 2+"
    assert parse_peg("2+ 1•") == parse_peg("2+ 1.")
    assert parse_peg("") == PegPermutation((), ())
    assert format_peg(PegPermutation((), ())) == ""


@pytest.mark.parametrize("text", ["1x", "2+ 2-", "0+", "2+", "1+ 3-"])
def test_parse_peg_rejects(text):
    with pytest.raises(ParseError):
        parse_peg(text)


@given(pegs)
def test_peg_text_round_trip(args):
    pp = _peg(*args)
    assert parse_peg(format_peg(pp)) == pp


def test_strips_split_on_direction_and_decoration():
    # 2+ 3+ is an ascending strip; 1. alone; 5- 4- descending.
    got = strips(parse_peg("2+ 3+ 1. 5- 4-"))
    assert [(i, j) for i, j, _ in got] == [(1, 2), (3, 3), (4, 5)]
    # a + inside a descending run blocks linking
    assert len(strips(parse_peg("2+ 1+"))) == 2
    # bullets link in either direction
    assert len(strips(parse_peg("1. 2."))) == 1
    assert len(strips(parse_peg("2. 1."))) == 1


def test_clean_compact_and_compact():
    assert is_clean_compact(parse_peg("2. 4. 1. 3."))
    assert not is_clean_compact(parse_peg("1. 3. 2."))
    assert not is_clean_compact(parse_peg("1+ 2+"))
    assert is_clean_compact(parse_peg("1- 2-"))
    assert is_compact(parse_peg("3. 4. 1- 5- 2+"))
    assert not is_compact(parse_peg("3+ 4. 1- 5- 2+"))


def test_peg_of_collapses_strips():
    assert format_peg(peg_of((4, 5, 6, 1, 2, 3))) == "2+ 1+"
    assert format_peg(peg_of((5, 6, 4, 1, 2, 3))) == "3+ 2. 1+"
    assert format_peg(peg_of((2, 1, 5, 3, 4))) == "1- 3. 2+"
    assert format_peg(peg_of((1, 2, 3))) == "1+"
    assert format_peg(peg_of((3, 1, 2))) == "2. 1+"
    assert format_peg(peg_of((2, 4, 1, 3))) == "2. 4. 1. 3."


@given(st.permutations(tuple(range(1, 8))))
def test_peg_of_is_clean_compact(p):
    assert is_clean_compact(peg_of(tuple(p)))


def test_oriented_reversal_flips_signs_not_bullets():
    assert format_peg(oriented_reversal(parse_peg("2. 1-"), 1, 2)) == "1+ 2."
    assert format_peg(oriented_reversal(parse_peg("3+ 1- 2."), 2, 2)) == "3+ 1+ 2."
    assert format_peg(oriented_prefix_reversal(parse_peg("3+ 1- 2."), 2)) == "1+ 3- 2."


def test_peg_pattern_contains_weakening_direction():
    # a bullet in the pattern matches any decoration in the host
    assert peg_pattern_contains(parse_peg("3. 1. 2."), parse_peg("3. 1- 2."))
    # a sign in the pattern requires the same sign in the host
    assert not peg_pattern_contains(parse_peg("3. 1- 2."), parse_peg("3. 1. 2."))
    assert not peg_pattern_contains(parse_peg("1+"), parse_peg("1-"))
    assert peg_pattern_contains(parse_peg("1."), parse_peg("1-"))
    # subsequence embedding on the base
    assert peg_pattern_contains(parse_peg("2+ 1."), parse_peg("3+ 1. 2."))
    assert not peg_pattern_contains(parse_peg("2+ 1."), parse_peg("1. 2+"))


def test_proper_patterns_of_2plus_1dot():
    got = sorted(format_peg(q) for q in proper_patterns(parse_peg("2+ 1.")))
    assert got == ["", "1+", "1.", "2. 1."]


def test_clean_compact_proper_patterns_filter():
    pp = parse_peg("2+ 1.")
    cc = clean_compact_proper_patterns(pp)
    assert cc == {q for q in proper_patterns(pp) if is_clean_compact(q)}
    # the all-bullet pegs on 2413/3142 have no clean compact pattern one
    # shorter (each deletion creates a strip; bullets cannot weaken further)
    for text in ("2. 4. 1. 3.", "3. 1. 4. 2."):
        pats = clean_compact_proper_patterns(parse_peg(text))
        assert not any(len(q) == 3 for q in pats)


def test_exceptional_forms():
    forms = {
        (ExceptionalKind.THETA_EVEN, 2): "2. 1+",
        (ExceptionalKind.LAMBDA_EVEN, 2): "2+ 1.",
        (ExceptionalKind.THETA_ODD, 3): "3. 1- 2.",
        (ExceptionalKind.LAMBDA_ODD, 3): "2- 3. 1.",
        (ExceptionalKind.THETA_EVEN, 4): "4. 2. 1+ 3.",
        (ExceptionalKind.LAMBDA_EVEN, 4): "3+ 2. 4. 1.",
        (ExceptionalKind.THETA_ODD, 5): "5. 3. 1- 2. 4.",
        (ExceptionalKind.LAMBDA_ODD, 5): "3- 4. 2. 5. 1.",
    }
    for (kind, n), text in forms.items():
        assert format_peg(exceptional(kind, n)) == text
        assert is_clean_compact(exceptional(kind, n))


@pytest.mark.parametrize("kind,n", [
    (ExceptionalKind.THETA_EVEN, 3), (ExceptionalKind.THETA_ODD, 4),
    (ExceptionalKind.THETA_EVEN, 0), (ExceptionalKind.LAMBDA_ODD, 1),
])
def test_exceptional_rejects_bad_parity(kind, n):
    with pytest.raises(ValueError):
        exceptional(kind, n)


def test_min_inflation():
    assert min_inflation(parse_peg("2+ 1+")) == (3, 4, 1, 2)
    assert min_inflation(parse_peg("3. 1- 2.")) == (4, 2, 1, 3)
    assert min_inflation(parse_peg("1.")) == (1,)


def test_enumerate_clean_compact_counts():
    assert [sum(1 for _ in enumerate_clean_compact(n)) for n in (1, 2, 3, 4)] \
        == [3, 10, 82, 936]


def test_enumerate_clean_compact_is_exhaustive_at_2():
    got = set(enumerate_clean_compact(2))
    assert len(got) == 10
    assert all(is_clean_compact(pp) and len(pp) == 2 for pp in got)
    assert parse_peg("1+ 2+") not in got
    assert parse_peg("1- 2-") in got


def test_decoration_parsing():
    assert Decoration.from_char("+") is Decoration.PLUS
    assert Decoration.from_char("•") is Decoration.DOT
    with pytest.raises(ParseError):
        Decoration.from_char("?")
