import pytest
from hypothesis import given
from hypothesis import strategies as st

from bowditch.farey import INF, Region, primitive_word, regions_to_depth
from bowditch.words import (
    IDENTITY,
    NotPrimitive,
    Word,
    apply_endomorphism,
    canonical_class,
    canonical_form,
    cyclic_length,
    cyclic_reduce,
    is_primitive,
    reduce,
    slope,
)
from whitehead import is_primitive_whitehead

raw = st.text(alphabet="abAB", max_size=16)
words = raw.map(Word)


def test_reduce_cancels_inverse_pairs():
    assert reduce("aAb") == Word("b")
    assert reduce("") == IDENTITY
    assert reduce("abA").letters == "abA"


def test_reduce_rejects_foreign_letters():
    with pytest.raises(ValueError):
        Word("abc")


def test_cyclic_reduce_examples():
    assert cyclic_reduce(Word("abA")) == Word("b")
    assert cyclic_reduce(Word("ab")) == Word("ab")
    assert cyclic_reduce(Word("Baab")) == Word("aa")


def test_cyclic_length_examples():
    assert cyclic_length(Word("abA")) == 1
    assert cyclic_length(Word("aab")) == 3
    assert cyclic_length(IDENTITY) == 0


def test_slope_examples():
    assert slope(Word("a")) == INF
    assert slope(Word("b")) == Region(0, 1)
    assert slope(Word("aB")) == Region(-1, 1)
    assert slope(Word("abab")) is None
    assert slope(Word("abAB")) is None


def test_canonical_class_examples():
    assert canonical_class(Word("baB")).slope == INF
    with pytest.raises(NotPrimitive):
        canonical_class(Word("abab"))
    assert canonical_class(Word("aab")).slope == Region(2, 1)
    with pytest.raises(ValueError):
        canonical_class(IDENTITY)


def test_commutator_is_not_primitive():
    assert not is_primitive(Word("abAB"))


def test_apply_endomorphism_examples():
    a, b = Word("a"), Word("b")
    assert apply_endomorphism((a, b), Word("ab")) == Word("ab")
    assert apply_endomorphism((a, Word("ab")), Word("b")) == Word("ab")
    assert apply_endomorphism((a, IDENTITY), Word("ab")) == Word("a")


def test_word_algebra():
    w = Word("abAAb")
    assert (w * w.inverse()).is_identity()
    assert w**0 == IDENTITY
    assert w**-2 == (w.inverse()) ** 2


@given(raw)
def test_reduce_idempotent(s):
    w = reduce(s)
    assert reduce(w.letters) == w
    assert cyclic_reduce(cyclic_reduce(w)) == cyclic_reduce(w)


@given(words, words)
def test_cyclic_length_conjugation_invariant(w, c):
    c = Word(c.letters[:8])
    assert cyclic_length(c * w * c.inverse()) == cyclic_length(w)
    assert cyclic_length(w.inverse()) == cyclic_length(w)


@given(raw, raw)
def test_exponent_sums_additive(u, v):
    su, sv = Word(u).exponent_sums(), Word(v).exponent_sums()
    assert Word(u + v).exponent_sums() == (su[0] + sv[0], su[1] + sv[1])


@given(words, words)
def test_canonical_form_is_a_class_invariant(w, c):
    c = Word(c.letters[:8])
    assert canonical_form(c * w * c.inverse()) == canonical_form(w)
    assert canonical_form(w.inverse()) == canonical_form(w)


def test_round_trip_to_depth_12():
    for x in regions_to_depth(12):
        assert canonical_class(primitive_word(x)).slope == x


@given(st.text(alphabet="abAB", min_size=1, max_size=9))
def test_primitivity_agrees_with_whitehead(s):
    w = Word(s)
    if w.is_identity():
        return
    assert is_primitive(w) == is_primitive_whitehead(w)
