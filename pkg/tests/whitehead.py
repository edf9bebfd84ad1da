"""Whitehead reduction in rank two, kept as a second, unrelated primitivity test."""

from bowditch.words import ALPHABET, Word, cyclic_reduce


def _whitehead_moves():
    # rank two: fix x^{+-1}, send the other generator y to yx, x^-1 y or x^-1 y x
    moves = []
    for x in ALPHABET:
        xi = Word(x).inverse().letters
        y = "b" if x in "aA" else "a"
        for image in (y + x, xi + y, xi + y + x):
            table = {x: x, xi: xi, y: image, Word(y).inverse().letters: Word(image).inverse().letters}
            moves.append(table)
    return moves


_MOVES = _whitehead_moves()


def is_primitive_whitehead(w: Word) -> bool:
    """Whitehead's algorithm: a cyclic word is primitive iff greedy length reduction reaches 1."""
    w = cyclic_reduce(w)
    while len(w) > 1:
        for table in _MOVES:
            image = cyclic_reduce(Word("".join(table[c] for c in w.letters)))
            if len(image) < len(w):
                w = image
                break
        else:
            return False
    return len(w) == 1


