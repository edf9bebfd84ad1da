"""Reduced words in the free group on a and b.

Words are spelled over the ASCII alphabet ``a b A B`` where ``A`` is the
inverse of ``a`` and ``B`` the inverse of ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

ALPHABET = "abAB"
_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
# total order a < b < A < B used for canonical forms
_RANK = str.maketrans({"a": "0", "b": "1", "A": "2", "B": "3"})


class NotPrimitive(ValueError):
    pass


def _reduce_str(letters: Iterable[str]) -> str:
    stack: list[str] = []
    for ch in letters:
        if ch not in _INVERSE:
            raise ValueError(f"bad letter {ch!r}")
        if stack and stack[-1] == _INVERSE[ch]:
            stack.pop()
        else:
            stack.append(ch)
    return "".join(stack)


class Word:
    """A freely reduced word. Immutable and hashable."""

    __slots__ = ("letters",)

    def __init__(self, letters: str | Iterable[str] = ""):
        object.__setattr__(self, "letters", _reduce_str(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def _trusted(cls, letters: str) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    def __str__(self) -> str:
        return self.letters

    def __repr__(self) -> str:
        return f"Word({self.letters!r})"

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(("Word", self.letters))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def inverse(self) -> "Word":
        return Word._trusted("".join(_INVERSE[c] for c in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sums(self) -> tuple[int, int]:
        s = self.letters
        return s.count("a") - s.count("A"), s.count("b") - s.count("B")


IDENTITY = Word()


def reduce(letters: str | Iterable[str]) -> Word:
    return Word(letters)


def cyclic_reduce(w: Word) -> Word:
    s = w.letters
    i, j = 0, len(s) - 1
    while i < j and s[j] == _INVERSE[s[i]]:
        i += 1
        j -= 1
    return Word._trusted(s[i : j + 1])


def conjugator_split(w: Word) -> tuple[Word, Word]:
    """Return (c, r) with w = c r c^-1 and r cyclically reduced."""
    s = w.letters
    i, j = 0, len(s) - 1
    while i < j and s[j] == _INVERSE[s[i]]:
        i += 1
        j -= 1
    return Word._trusted(s[:i]), Word._trusted(s[i : j + 1])


def cyclic_length(w: Word) -> int:
    return len(cyclic_reduce(w))


def slope(w: Word):
    """Region of the exponent-sum ratio #a/#b, or None if not a primitive vector."""
    from .farey import Region

    ea, eb = w.exponent_sums()
    if ea == 0 and eb == 0:
        return None
    if gcd(abs(ea), abs(eb)) != 1:
        return None
    return Region.from_vector(ea, eb)


def _rotations(s: str):
    for i in range(len(s)):
        yield s[i:] + s[:i]


def canonical_form(w: Word) -> Word:
    """Least rotation of the cyclic reduction of w or of its inverse."""
    r = cyclic_reduce(w)
    if not r.letters:
        return r
    best = min(
        (rot for s in (r.letters, r.inverse().letters) for rot in _rotations(s)),
        key=lambda x: x.translate(_RANK),
    )
    return Word._trusted(best)


@dataclass(frozen=True)
class PrimitiveClass:
    canonical: Word
    slope: object  # farey.Region

    def __str__(self) -> str:
        return f"{self.canonical} [{self.slope}]"


def canonical_class(w: Word) -> PrimitiveClass:
    """Conjugacy-inversion class of a primitive word; raises NotPrimitive otherwise."""
    from .farey import primitive_word

    if w.is_identity():
        raise ValueError("identity has no primitive class")
    region = slope(w)
    if region is None:
        raise NotPrimitive(str(w))
    form = canonical_form(w)
    if form != canonical_form(primitive_word(region)):
        raise NotPrimitive(str(w))
    return PrimitiveClass(form, region)


def is_primitive(w: Word) -> bool:
    try:
        canonical_class(w)
    except (NotPrimitive, ValueError):
        return False
    return True


def apply_endomorphism(images: tuple[Word, Word], w: Word) -> Word:
    ua, ub = images
    table = {"a": ua.letters, "A": ua.inverse().letters, "b": ub.letters, "B": ub.inverse().letters}
    return Word("".join(table[c] for c in w.letters))
