"""Words in the two meridian generators, and the 2-bridge relator words.

A word is a plain string over the alphabet "aAbB", uppercase marking the
inverse of a generator (so "abAB" is a b a⁻¹ b⁻¹).  The empty string is
the identity and prints as "1".  Since the alphabet is exactly two
generators, ``str.swapcase`` is formal inversion of a letter.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .slopes import ONE, ZERO, Slope

ALPHABET = "aAbB"

#: Letter comparison order a < a⁻¹ < b < b⁻¹ used for canonical rotations.
_ORDER = str.maketrans("aAbB", "\x00\x01\x02\x03")

_REDUCIBLE_PAIRS = ("aA", "Aa", "bB", "Bb")


class RelatorMethod(enum.Enum):
    """The two closed-form generators of the relator word."""

    RILEY = "RILEY"
    CEIL = "CEIL"


def letter(generator: str, exponent: int) -> str:
    """One of the four letters, e.g. letter("b", -1) == "B"."""
    if generator not in ("a", "b") or exponent not in (1, -1):
        raise ValueError(f"no letter for ({generator!r}, {exponent})")
    return generator if exponent == 1 else generator.upper()


def invert_letter(ch: str) -> str:
    return ch.swapcase()


def generator_of(ch: str) -> str:
    return ch.lower()


def exponent_of(ch: str) -> int:
    return 1 if ch.islower() else -1


def inverse_word(w: str) -> str:
    return w[::-1].swapcase()


def is_reduced(w: str) -> bool:
    return not any(pair in w for pair in _REDUCIBLE_PAIRS)


def is_cyclically_reduced(w: str) -> bool:
    if not is_reduced(w):
        return False
    return len(w) < 2 or w[0] != w[-1].swapcase()


def is_alternating(w: str) -> bool:
    """No a^{±2} or b^{±2}: the generators strictly alternate."""
    g = w.lower()
    return "aa" not in g and "bb" not in g


def is_cyclically_alternating(w: str) -> bool:
    return is_alternating(w) and (len(w) < 2 or w[0].lower() != w[-1].lower())


def free_reduce(w: str) -> str:
    """Delete adjacent inverse pairs until none remain.

    >>> free_reduce("abBa")
    'aa'
    """
    out: list[str] = []
    push = out.append
    for ch in w:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            push(ch)
    return "".join(out)


def canonical_rotation(w: str) -> str:
    """The rotation of w that is least in the order a < a⁻¹ < b < b⁻¹."""
    n = len(w)
    if n < 2:
        return w
    t = w.translate(_ORDER)
    dd = t + t
    best = min(dd[i:i + n] for i in range(n))
    return (w + w)[dd.index(best):][:n]


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word up to rotation, stored canonically.

    Two cyclic words are equal iff one representative is a rotation of
    the other; the stored representative is the least rotation under the
    letter order a < a⁻¹ < b < b⁻¹.
    """

    letters: str

    def __post_init__(self):
        w = self.letters
        if not is_cyclically_reduced(w):
            raise ValueError(f"not cyclically reduced: {w!r}")
        object.__setattr__(self, "letters", canonical_rotation(w))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return f"({self.letters or '1'})"

    def rotations(self) -> Iterator[str]:
        w = self.letters
        dd = w + w
        for i in range(max(1, len(w))):
            yield dd[i:i + len(w)]

    def inverse(self) -> "CyclicWord":
        return CyclicWord(inverse_word(self.letters))


def cyclic_reduce(w: str) -> CyclicWord:
    """Freely reduce, then cancel wrap-around inverse pairs.

    >>> str(cyclic_reduce("Babb"))
    '(ab)'
    """
    v = free_reduce(w)
    while len(v) >= 2 and v[0] == v[-1].swapcase():
        v = v[1:-1]
    return CyclicWord(v)


def cyclic_equal(w1: str, w2: str, allow_inverse: bool = False) -> bool:
    """Whether w2 is a rotation of w1 (or of w1⁻¹ when allowed)."""
    if len(w1) != len(w2):
        return False
    if not w1:
        return True
    if w2 in w1 + w1:
        return True
    if allow_inverse:
        inv = inverse_word(w1)
        return w2 in inv + inv
    return False


def _positive_pair(r: Slope) -> tuple[int, int]:
    if r.is_infinite or r <= ZERO:
        raise ValueError(f"positive rational slope required, got {r}")
    return r.num, r.den


def half_relator(r: Slope) -> str:
    """Word read off the open segment from (0,0) to (p,q), 0 < q/p <= 1.

    The segment of slope q/p crosses the vertical lattice lines
    x = 1, ..., p-1; the i-th crossing contributes b or a (i odd/even)
    with sign (-1)^⌊iq/p⌋.  Empty when p = 1.

    >>> half_relator(Slope(4, 7))
    'bABabA'
    """
    q, p = _positive_pair(r)
    if q > p:
        raise ValueError(f"half relator needs a slope in (0,1], got {r}")
    out = []
    for i in range(1, p):
        gen = "b" if i & 1 else "a"
        out.append(gen.upper() if (i * q) // p & 1 else gen)
    return "".join(out)


def _relator_riley(q: int, p: int) -> str:
    hat = half_relator(Slope(q, p))
    if p % 2:
        middle = "b" if q % 2 == 0 else "B"
    else:
        middle = "A"
    return "a" + hat + middle + inverse_word(hat)


def _relator_ceiling(q: int, p: int) -> str:
    # Letter i (0-based) is a/b as i is even/odd, negated when ⌊iq/p⌋ is odd.
    out = []
    for i in range(2 * p):
        gen = "b" if i & 1 else "a"
        out.append(gen.upper() if (i * q) // p & 1 else gen)
    return "".join(out)


def relator(r: Slope, method: RelatorMethod = RelatorMethod.CEIL) -> str:
    """The relator word of slope r: the single relator presenting the
    2-bridge link group of slope r on the upper meridian pair.

    Defined for r in (0,1] (an alternating, cyclically reduced word of
    length 2p) plus the degenerate slopes: relator(0) = "ab" and
    relator(∞) = "" (the empty word).

    >>> relator(Slope(4, 7))
    'abABabAbaBAbaB'
    """
    if r.is_infinite:
        return ""
    if r == ZERO:
        return "ab"
    q, p = _positive_pair(r)
    if r > ONE:
        raise ValueError(f"relator is generated only for slopes in (0,1], got {r}")
    if method is RelatorMethod.RILEY:
        return _relator_riley(q, p)
    if method is RelatorMethod.CEIL:
        return _relator_ceiling(q, p)
    raise ValueError(f"unknown relator method {method!r}")


def relator_by_line_walk(r: Slope) -> str:
    """Relator word read directly off the lattice line walk.

    Walks the segment of slope q/p from x = 0 to x = 2p, emitting a letter
    at each vertical lattice line and toggling the sign at each horizontal
    one.  Uses only comparisons and additions, making it an independent
    cross-check of the closed-form generators.  Accepts any positive
    rational slope.
    """
    q, p = _positive_pair(r)
    out = []
    crossed = 0  # horizontal lattice lines y = 1.. passed so far
    negative = False
    bound = 0  # (crossed + 1) * p, kept incrementally
    height = 0  # i * q
    for i in range(2 * p):
        while bound + p <= height:
            bound += p
            crossed += 1
            negative = not negative
        if i & 1:
            out.append("B" if negative else "b")
        else:
            out.append("A" if negative else "a")
        height += q
    return "".join(out)


_AUTOMORPHISM_NAMES = {
    ("a", "b"), ("A", "B"), ("b", "a"), ("B", "A"),
    ("a", "B"), ("A", "b"), ("B", "a"), ("b", "A"),
}


def apply_automorphism(w: str, image_of_a: str, image_of_b: str) -> str:
    """Apply the free-group automorphism a ↦ image_of_a, b ↦ image_of_b.

    Only the eight letter-to-letter automorphisms are allowed (images must
    be single letters on distinct generators); these are the symmetries of
    the upper tangle together with the half-twist.  Substitution is
    letterwise, followed by free reduction.
    """
    if (image_of_a, image_of_b) not in _AUTOMORPHISM_NAMES:
        raise ValueError(
            f"({image_of_a!r}, {image_of_b!r}) does not define one of the "
            "eight letter automorphisms")
    table = str.maketrans({
        "a": image_of_a,
        "A": image_of_a.swapcase(),
        "b": image_of_b,
        "B": image_of_b.swapcase(),
    })
    return free_reduce(w.translate(table))


def format_word(w: str) -> str:
    """External text form: letter tokens, with the empty word printed as 1."""
    return w or "1"


def parse_word(text: str) -> str:
    t = text.strip()
    if t == "1":
        return ""
    if set(t) - set(ALPHABET):
        raise ValueError(f"malformed word {text!r}")
    return t
