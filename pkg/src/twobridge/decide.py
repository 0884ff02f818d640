"""The headline decision procedures for 2-bridge link groups.

``is_null_homotopic(s, r)`` decides whether the simple loop of slope s on
the bridge sphere bounds in the complement of the link of slope r: this
holds exactly when s lies in the Γ̂_r-orbit of {r, ∞}, which the orbit
reduction machinery decides exactly.  ``has_umpp_epimorphism`` decides
whether an epimorphism between the corresponding link groups exists that
preserves the upper meridian pair: exactly when s or s+1 lies in that
orbit.  (Nothing here is claimed about unrestricted epimorphisms.)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .reflections import ReductionTrace, classify_orbit, reduce_to_fundamental
from .slopes import INFINITY, Slope, cf_expand, farey_interval


class Route(enum.Enum):
    """Which branch of the decision applied."""

    GENERIC = "GENERIC"
    R_INTEGER = "R_INTEGER"
    R_INFINITY = "R_INFINITY"


_ROUTES = {"generic": Route.GENERIC, "integer": Route.R_INTEGER,
           "infinity": Route.R_INFINITY}


class ScanMode(enum.Enum):
    NULLHOMOTOPY = "null"
    EPIMORPHISM = "epi"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a null-homotopy decision, with its certificate."""

    s: Slope
    r: Slope
    answer: bool
    canonical_representative: Slope
    trace: ReductionTrace
    route: Route

    def to_json_obj(self) -> dict:
        return {
            "s": str(self.s),
            "r": str(self.r),
            "answer": self.answer,
            "representative": str(self.canonical_representative),
            "route": self.route.value,
            "trace": self.trace.to_json_obj(),
        }


def is_null_homotopic(s: Slope, r: Slope) -> Verdict:
    """Decide whether the loop of slope s bounds in the complement of the
    link of slope r, i.e. whether s ∈ Γ̂_r · {r, ∞}."""
    cls = classify_orbit(s, r)
    return Verdict(
        s=s,
        r=r,
        answer=cls.member,
        canonical_representative=cls.representative,
        trace=cls.trace,
        route=_ROUTES[cls.kind],
    )


def has_umpp_epimorphism(s: Slope, r: Slope) -> bool:
    """Whether an upper-meridian-pair-preserving epimorphism exists from
    the link group of slope s onto the link group of slope r: exactly
    when s or s+1 lies in the Γ̂_r-orbit of {r, ∞}."""
    if classify_orbit(s, r).member:
        return True
    return classify_orbit(s + 1, r).member


def homotopy_representative(s: Slope, r: Slope) -> Slope:
    """The unique slope in I1 ∪ I2 ∪ {∞, r} whose loop is freely homotopic
    to the loop of slope s in the complement of the link of slope r
    (0 < r < 1)."""
    return reduce_to_fundamental(s, r).result


def connection_criterion(s: Slope, r: Slope) -> bool:
    """Continued-fraction test for s = [l1..lt] against r = [m1..mk]:
    t >= k, the first k-1 terms agree, and lk >= mk or (lk = mk - 1 with
    t > k).  For s in (0,1] this holds exactly when r1 < s < r2."""
    ls = cf_expand(s).terms
    ms = cf_expand(r).terms
    k, t = len(ms), len(ls)
    if t < k or ls[:k - 1] != ms[:k - 1]:
        return False
    lk, mk = ls[k - 1], ms[k - 1]
    return lk >= mk or (lk == mk - 1 and t > k)


def scan(r: Slope, max_den: int, mode: ScanMode = ScanMode.NULLHOMOTOPY) -> list[Slope]:
    """All s with 0 <= s <= 1 and denominator <= max_den, plus ∞, that
    satisfy the chosen predicate against r; sorted ascending (∞ last)."""
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    candidates = farey_interval(max_den) + [INFINITY]
    if mode is ScanMode.NULLHOMOTOPY:
        return [s for s in candidates if classify_orbit(s, r).member]
    return [s for s in candidates if has_umpp_epimorphism(s, r)]
