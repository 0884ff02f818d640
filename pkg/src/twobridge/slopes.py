"""Exact slopes (rationals together with infinity) and continued fractions.

A *slope* is an element of Q ∪ {∞}: it indexes the essential simple loops
on the 4-punctured sphere and the rational tangles they bound.  ∞ is the
slope 1/0.  Everything here is exact integer arithmetic; there is no
floating point anywhere in this package.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

#: Hard bound on every stored integer (numerators, denominators, matrix
#: entries).  Python integers never wrap, so this is purely a loud sanity
#: limit: a value this large means a computation has run away.
INT_BOUND = 2**63 - 1


def _guard(*values: int) -> None:
    for v in values:
        if v > INT_BOUND or v < -INT_BOUND:
            raise OverflowError(f"integer {v} exceeds the 64-bit working bound")


class Slope:
    """A reduced rational number q/p, or the slope ∞ stored as 1/0.

    Immutable, hashable and totally ordered, with ∞ greater than every
    rational.  Denominators are never negative; -1/0 normalizes to 1/0.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is not a slope")
            num = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(num, den)
            if g != 1:
                num //= g
                den //= g
        _guard(num, den)
        self.num = num
        self.den = den

    # fractions.Fraction-compatible field names, so floor_star & friends
    # accept Slope, Fraction and int alike.
    @property
    def numerator(self) -> int:
        return self.num

    @property
    def denominator(self) -> int:
        return self.den

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __add__(self, n: int) -> "Slope":
        if not isinstance(n, int):
            return NotImplemented
        return Slope(self.num + n * self.den, self.den)

    def __sub__(self, n: int) -> "Slope":
        if not isinstance(n, int):
            return NotImplemented
        return Slope(self.num - n * self.den, self.den)

    def __neg__(self) -> "Slope":
        return Slope(-self.num, self.den)

    @staticmethod
    def _coerce(other) -> "Slope":
        if isinstance(other, Slope):
            return other
        if isinstance(other, int):
            return Slope(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # Cross multiplication is sign-safe because denominators are >= 0,
    # and puts ∞ = 1/0 above every rational.
    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den < other.num * self.den

    def __le__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den > other.num * self.den

    def __ge__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den >= other.num * self.den

    def __str__(self) -> str:
        return "inf" if self.den == 0 else f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Slope({self.num}, {self.den})"


ZERO = Slope(0)
ONE = Slope(1)
INFINITY = Slope(1, 0)


def parse_slope(text: str) -> Slope:
    """Parse "q/p", a bare integer, or "inf" (optional leading minus)."""
    t = text.strip().replace("−", "-")
    if t.lstrip("+-") == "inf":
        return INFINITY
    try:
        if "/" in t:
            a, b = t.split("/", 1)
            return Slope(int(a), int(b))
        return Slope(int(t))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed slope {text!r}") from exc


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical expansion [m1,...,mk] of a positive rational.

    The value is 1/(m1 + 1/(m2 + ... + 1/mk)).  For a slope in (0,1] all
    terms are positive and the last is >= 2 unless k = 1; for a slope > 1
    the leading term is 0 and the rest expand its reciprocal.
    """

    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        tail = terms
        if terms and terms[0] == 0:
            tail = terms[1:]
            if tail == (1,):
                raise ValueError("[0,1] is not canonical (it denotes 1)")
        if not tail or any(m < 1 for m in tail):
            raise ValueError(f"non-canonical continued fraction {list(terms)}")
        if len(tail) > 1 and tail[-1] < 2:
            raise ValueError(f"non-canonical continued fraction {list(terms)}")

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def value(self) -> Slope:
        return cf_value(self.terms)

    def __str__(self) -> str:
        return "[" + ",".join(str(m) for m in self.terms) + "]"


@lru_cache(maxsize=None)
def cf_expand(r: Slope) -> ContinuedFraction:
    """Canonical continued fraction of a positive rational slope.

    >>> str(cf_expand(Slope(5, 17)))
    '[3,2,2]'
    """
    if r.is_infinite or r <= ZERO:
        raise ValueError(f"no canonical expansion for {r}")
    q, p = r.num, r.den
    terms = []
    if q > p:  # slope > 1: expand the reciprocal behind a leading 0
        terms.append(0)
        q, p = p, q
    while True:
        if q == 1:
            terms.append(p)
            return ContinuedFraction(tuple(terms))
        m, c = divmod(p, q)
        terms.append(m)
        p, q = q, c


def cf_value(terms: Sequence[int]) -> Slope:
    """Exact value of [m1,...,mk]; the empty sequence evaluates to 0.

    Accepts non-canonical term lists (e.g. a trailing 1) and evaluates
    them projectively, so intermediate ∞ is handled.
    """
    if any(m < 0 for m in terms):
        raise ValueError(f"negative continued fraction term in {list(terms)}")
    num, den = 0, 1  # value of the empty tail
    for m in reversed(terms):
        num, den = den, m * den + num  # prepend: 1 / (m + num/den)
        _guard(num, den)
    return Slope(num, den)


def schubert_equivalent(r: Slope, r2: Slope) -> bool:
    """Whether q/p and q'/p' present the same 2-bridge link.

    True iff p = p' and q ≡ ±q' (mod p) or q·q' ≡ ±1 (mod p); ∞ is
    equivalent only to ∞.
    """
    if r.is_infinite or r2.is_infinite:
        return r.is_infinite and r2.is_infinite
    if r.den != r2.den:
        return False
    p = r.den
    q, q2 = r.num, r2.num
    return (q - q2) % p == 0 or (q + q2) % p == 0 \
        or (q * q2 - 1) % p == 0 or (q * q2 + 1) % p == 0


@lru_cache(maxsize=None)
def fundamental_endpoints(r: Slope) -> tuple[Slope, Slope]:
    """Endpoints r1 < r < r2 of the gap around r in its fundamental domain.

    For r = [m1,...,mk] in (0,1) these are the values of [m1,...,m_{k-1}]
    and [m1,...,m_{k-1},mk - 1], ordered by the parity of k; r is their
    mediant.  For r = 1/p the left endpoint degenerates to 0.
    """
    if not (ZERO < r < ONE):
        raise ValueError(f"fundamental endpoints need 0 < r < 1, got {r}")
    terms = cf_expand(r).terms
    parent = cf_value(terms[:-1])
    sibling = cf_value(terms[:-1] + (terms[-1] - 1,))
    if len(terms) % 2:
        r1, r2 = parent, sibling
    else:
        r1, r2 = sibling, parent
    if not (r1 < r < r2):
        raise AssertionError(f"endpoint ordering failed for {r}")
    return r1, r2


def in_fundamental_intervals(s: Slope, r: Slope) -> bool:
    """Whether s lies in I1 ∪ I2 = [0, r1] ∪ [r2, 1] for the given r."""
    r1, r2 = fundamental_endpoints(r)
    if s.is_infinite:
        return False
    return (ZERO <= s <= r1) or (r2 <= s <= ONE)


def mediant(a: Slope, b: Slope) -> Slope:
    return Slope(a.num + b.num, a.den + b.den)


class ParityClass(enum.Enum):
    """Orbit class of a slope among the triangle vertices 0, 1, ∞.

    Every automorphism of the Farey tessellation reduces to the identity
    mod 2, so the pair (p mod 2, q mod 2) of q/p is a complete invariant
    for the full edge-reflection group.
    """

    ZERO = "ZERO"
    ONE = "ONE"
    INFINITY = "INFINITY"


_PARITY_TABLE = {
    (1, 0): ParityClass.ZERO,
    (1, 1): ParityClass.ONE,
    (0, 1): ParityClass.INFINITY,
}

_PARITY_VERTEX = {
    ParityClass.ZERO: ZERO,
    ParityClass.ONE: ONE,
    ParityClass.INFINITY: INFINITY,
}


def slope_parity_class(s: Slope) -> ParityClass:
    """Class of s = q/p under the full reflection group of the tessellation."""
    return _PARITY_TABLE[(s.den % 2, s.num % 2)]


def parity_vertex(cls: ParityClass) -> Slope:
    """The vertex 0, 1 or ∞ representing a parity class."""
    return _PARITY_VERTEX[cls]


def farey_interval(max_den: int, include_ends: bool = True) -> list[Slope]:
    """All slopes q/p with 0 <= q/p <= 1 and p <= max_den, sorted."""
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    out = []
    for p in range(1, max_den + 1):
        for q in range(0, p + 1):
            if math.gcd(q, p) == 1:
                out.append(Slope(q, p))
    if not include_ends:
        out = [s for s in out if ZERO < s < ONE]
    out.sort()
    return out
