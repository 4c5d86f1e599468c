import pytest
from hypothesis import given
from hypothesis import strategies as st

from cp2trisect.errors import LabelParseError, MalformedSimplexError
from cp2trisect.labels import (
    Label,
    derived,
    format_simplex,
    make_simplex,
    original,
    parse_compact,
    parse_label,
)

# bracket notation only has room for single digits
originals = st.integers(min_value=1, max_value=9).map(original)
labels = st.recursive(
    originals,
    lambda inner: st.lists(inner, min_size=2, max_size=4, unique=True).map(derived),
    max_leaves=8,
)


@given(labels)
def test_str_parse_round_trip(lab):
    assert parse_label(str(lab)) == lab


@given(st.lists(labels, min_size=2, max_size=4, unique=True))
def test_derived_ignores_child_order(kids):
    assert derived(kids) == derived(list(reversed(kids)))


@given(labels, labels)
def test_order_is_total(a, b):
    assert (a < b) + (b < a) + (a == b) == 1


def test_originals_sort_before_derived():
    assert original(9) < derived((1, 2))
    assert sorted([derived((1, 4)), original(3), derived((1, 4, 7))]) == [
        original(3),
        derived((1, 4)),
        derived((1, 4, 7)),
    ]


def test_nested_label():
    lab = parse_label("[[23][89]]")
    assert lab.arity == 2
    assert lab.leaves() == {original(i) for i in (2, 3, 8, 9)}
    assert sum(lab.weights().values()) == pytest.approx(1.0)


def test_compact_notation():
    assert parse_compact("[14][147]26") == [derived((1, 4)), derived((1, 4, 7)), original(2), original(6)]
    assert [x.id for x in parse_compact("14726")] == [1, 4, 7, 2, 6]


@pytest.mark.parametrize("bad", ["", "0", "[1]", "[11]", "[12", "x", "[12]3"])
def test_bad_labels(bad):
    with pytest.raises(LabelParseError):
        parse_label(bad)


def test_label_is_immutable():
    with pytest.raises(AttributeError):
        original(1).id = 2
    with pytest.raises(ValueError):
        Label(0)


def test_make_simplex_sorts_and_rejects_repeats():
    s = make_simplex([7, "[14]", 1])
    assert format_simplex(s) == "1 7 [14]"
    with pytest.raises(MalformedSimplexError):
        make_simplex([1, 1])
    with pytest.raises(MalformedSimplexError):
        make_simplex([])


def test_wide_original_cannot_be_bracketed():
    assert str(original(12)) == "12"
    with pytest.raises(ValueError):
        str(derived((1, 12)))
