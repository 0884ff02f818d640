"""Exhaustive verification suites shared by the test suite and the CLI.

Each check sweeps every slope inside an explicit denominator bound and
validates a family of exact identities; the defaults are the bounds used
by the acceptance tests.  Checks return a CheckResult rather than
raising, so the CLI can print one pass/fail line per suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .decide import connection_criterion, has_umpp_epimorphism, \
    homotopy_representative, is_null_homotopic, scan
from .pieces import (
    catalog_spans,
    initial_letter_spread,
    is_piece,
    maximal_piece_products,
    piece_product_catalog,
    satisfies_necessary_condition,
    small_cancellation_report,
    symmetrize,
)
from .reflections import (
    orbit_closure,
    reduce_to_fundamental,
    triangle_orbit_closure,
)
from .seqs import (
    CyclicSequence,
    count_cyclic_factor,
    decompose,
    s_sequence,
    s_sequence_by_ceiling_count,
    s_sequence_by_floor_difference,
    s_sequence_by_strip_count,
    s_sequence_of_word,
    t_sequence,
)
from .slopes import (
    INFINITY,
    ONE,
    ZERO,
    ParityClass,
    Slope,
    cf_expand,
    cf_value,
    farey_interval,
    fundamental_endpoints,
    in_fundamental_intervals,
    mediant,
    slope_parity_class,
)
from .words import (
    RelatorMethod,
    apply_automorphism,
    cyclic_equal,
    half_relator,
    inverse_word,
    is_cyclically_alternating,
    relator,
    relator_by_line_walk,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


class _Failures:
    """Collects the first few failures and a count of items checked."""

    def __init__(self, limit: int = 5):
        self.items = 0
        self.failures: list[str] = []
        self.limit = limit

    def count(self, n: int = 1) -> None:
        self.items += n

    def expect(self, ok: bool, message: str) -> bool:
        self.items += 1
        if not ok and len(self.failures) < self.limit:
            self.failures.append(message)
        return ok

    def result(self, name: str) -> CheckResult:
        if self.failures:
            return CheckResult(name, False,
                               f"{self.items} checks; first failures: "
                               + "; ".join(self.failures))
        return CheckResult(name, True, f"{self.items} checks")


def _proper_fractions(max_den: int) -> Iterable[Slope]:
    """All q/p with 0 < q/p < 1 and p <= max_den."""
    for p in range(2, max_den + 1):
        for q in range(1, p):
            if math.gcd(q, p) == 1:
                yield Slope(q, p)


def _unit_fractions(max_den: int) -> Iterable[Slope]:
    """All q/p with 0 < q/p <= 1 and p <= max_den."""
    yield ONE
    yield from _proper_fractions(max_den)


def check_worked_examples() -> CheckResult:
    """Fixed-value checks for the documented worked examples."""
    f = _Failures()
    f.expect(str(cf_expand(Slope(5, 17))) == "[3,2,2]", "cf(5/17)")
    f.expect(str(cf_expand(Slope(10, 37))) == "[3,1,2,3]", "cf(10/37)")
    f.expect(str(cf_expand(Slope(8, 35))) == "[4,2,1,2]", "cf(8/35)")
    f.expect(half_relator(Slope(4, 7)) == "bABabA", "half relator 4/7")
    f.expect(relator(Slope(4, 7)) == "abABabAbaBAbaB", "relator 4/7")
    f.expect(
        s_sequence(Slope(10, 37))
        == (4, 4, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 4, 3),
        "S(10/37)")
    f.expect(
        s_sequence_of_word(half_relator(Slope(10, 37)))
        == (3, 4, 4, 3, 4, 4, 3, 4, 4, 3), "S of half relator 10/37")
    f.expect(t_sequence(Slope(10, 37)) == (3, 2, 2, 3, 2, 2), "T(10/37)")
    d = decompose(Slope(10, 37))
    f.expect(d.s1 == (4, 4, 4) and d.s2 == (3, 4, 4, 3, 4, 4, 3), "split 10/37")
    f.expect(
        s_sequence(Slope(8, 35))
        == (5, 4, 5, 4, 4, 5, 4, 4, 5, 4, 5, 4, 4, 5, 4, 4), "S(8/35)")
    f.expect(
        s_sequence_of_word(half_relator(Slope(8, 35)))
        == (4, 4, 5, 4, 4, 5, 4, 4), "S of half relator 8/35")
    f.expect(t_sequence(Slope(8, 35)) == (1, 2, 2, 1, 2, 2), "T(8/35)")
    d = decompose(Slope(8, 35))
    f.expect(d.s1 == (5, 4, 5) and d.s2 == (4, 4, 5, 4, 4), "split 8/35")
    f.expect(relator(ZERO) == "ab", "relator of 0")
    f.expect(relator(INFINITY) == "", "relator of ∞")
    f.expect(relator(ONE) == "aB", "relator of 1")
    return f.result("worked-examples")


def check_word_generators(max_p: int = 300) -> CheckResult:
    """The three relator generators and the three S-sequence formulas
    agree; relators are alternating, cyclically reduced, never cyclically
    equal to their own inverse, and S(relator) = S(slope) on (0,1]."""
    f = _Failures()
    for r in _unit_fractions(max_p):
        u_riley = relator(r, RelatorMethod.RILEY)
        u_ceil = relator(r, RelatorMethod.CEIL)
        u_walk = relator_by_line_walk(r)
        if not f.expect(u_riley == u_ceil == u_walk, f"relator generators at {r}"):
            continue
        u = u_ceil
        ok = (len(u) == 2 * r.den and is_cyclically_alternating(u)
              and not cyclic_equal(u, inverse_word(u)))
        f.expect(ok, f"relator structure at {r}")
        s_floor = s_sequence_by_floor_difference(r)
        s_count = s_sequence_by_ceiling_count(r)
        s_strip = s_sequence_by_strip_count(r)
        f.expect(s_floor == s_count == s_strip, f"S-sequence formulas at {r}")
        f.expect(s_sequence_of_word(u) == s_floor, f"S(word) vs S(slope) at {r}")
        q = r.num
        f.expect(len(s_floor) == 2 * q and s_floor[:q] == s_floor[q:],
                 f"length and half-period at {r}")
        hat = half_relator(r)
        if hat:
            runs = s_sequence_of_word(hat)
            f.expect(runs == runs[::-1], f"half-relator palindrome at {r}")
    return f.result("word-generators-agree")


def _check_sequence_theorems_for(f: _Failures, r: Slope) -> None:
    q, p = r.num, r.den
    terms = cf_expand(r).terms
    k = len(terms)
    m = terms[0]
    s = s_sequence(r)
    # Length and half-period.
    f.expect(len(s) == 2 * q, f"length 2q at {r}")
    f.expect(all(s[j] == s[(j + q) % (2 * q)] for j in range(2 * q)),
             f"half-period at {r}")
    cs = CyclicSequence(s)
    f.expect(cs.is_palindromic(), f"cyclic palindrome at {r}")
    if k == 1:
        f.expect(s == (m, m), f"single-term S at {r}")
    else:
        m2 = terms[1]
        structure = (set(s) <= {m, m + 1} and s[0] == m + 1 and s[-1] == m)
        f.expect(structure, f"m/m+1 structure at {r}")
        pairs = set(zip(s, s[1:] + s[:1]))
        forbidden = (m, m) if m2 == 1 else (m + 1, m + 1)
        f.expect(forbidden not in pairs, f"forbidden pair at {r}")
        # T-recursion.
        if m2 == 1:
            r_next = cf_value(terms[2:])
            expected_t = s_sequence(r_next)
        else:
            r_next = cf_value((m2 - 1,) + terms[2:])
            expected_t = s_sequence(r_next)[::-1]
        t = t_sequence(r)
        f.expect(t == expected_t, f"T-recursion at {r}")
        f.expect(CyclicSequence(t) == CyclicSequence(s_sequence(r_next)),
                 f"cyclic T = cyclic S at {r}")
    # Splitting into (S1, S2, S1, S2): decompose() hard-verifies shape
    # and palindromes internally; re-check the occurrence counts here.
    if r < ONE:
        d = decompose(r)
        if d.s1:
            f.expect(count_cyclic_factor(cs, d.s1) == 2, f"S1 twice at {r}")
        f.expect(count_cyclic_factor(cs, d.s2) == 2, f"S2 twice at {r}")
        r1, r2 = fundamental_endpoints(r)
        f.expect(mediant(r1, r2) == r and r1 < r < r2, f"mediant at {r}")
    if k >= 2:
        c = p - m * q
        q_over_c = Slope(q, c)
        s_qc = s_sequence(q_over_c)
        # Shift: S(q/p) = S(q/c) + (m,...,m).
        f.expect(s == tuple(x + m for x in s_qc), f"shift identity at {r}")
        # 0/1 structure of S(q/c).
        ok = (set(s_qc) <= {0, 1} and s_qc[0] == 1 and s_qc[-1] == 0)
        f.expect(ok, f"0/1 structure at {r}")
        m2 = terms[1]
        pairs = set(zip(s_qc, s_qc[1:] + s_qc[:1]))
        forbidden = (0, 0) if m2 == 1 else (1, 1)
        f.expect(forbidden not in pairs, f"0/1 forbidden pair at {r}")
        if m2 == 1:
            # T(q/c) = S((q-c)/c), realized by interleaving runs of 1.
            f.expect(t_sequence(q_over_c) == s_sequence(Slope(q - c, c)),
                     f"interleave identity at {r}")
        # Reading backwards with 0 and 1 exchanged.
        s_rev = s_sequence(Slope(q, q - c))
        n = 2 * q
        f.expect(all(s_rev[i] + s_qc[(q - i - 1) % n] == 1 for i in range(n)),
                 f"0-1 exchange at {r}")
    f.count()


def check_sequence_theorems(max_p: int = 200) -> CheckResult:
    """Exhaustive sequence identities for all slopes q/p with p <= max_p."""
    f = _Failures()
    for r in _unit_fractions(max_p):
        _check_sequence_theorems_for(f, r)
    return f.result("sequence-theorems")


def check_small_cancellation(max_p: int = 50,
                             closure_bound: int = 20) -> CheckResult:
    """C(4)/T(4), piece catalogs, initial-letter spread, and the
    subword-closure property of pieces, for all relators with p <= max_p."""
    f = _Failures()
    for r in _proper_fractions(max_p):
        p = r.den
        relators = symmetrize(r)
        f.expect(len(relators) == 4 * p, f"symmetrized size at {r}")
        report = small_cancellation_report(r)
        f.expect(report.c4, f"C(4) at {r}")
        f.expect(report.t4, f"T(4) at {r}")
        f.expect(report.min_cyclic_pieces >= 4, f"min pieces at {r}")
        f.expect(initial_letter_spread(r), f"initial letters at {r}")
        for n in (1, 2, 3):
            brute = sorted(maximal_piece_products(r, n))
            f.expect(brute == catalog_spans(r, n), f"catalog n={n} at {r}")
            f.expect(all(length < 2 * p for _, length in brute),
                     f"no full-word {n}-piece product at {r}")
            families = piece_product_catalog(r, n)
            expected = 4 if len(cf_expand(r)) == 1 else 8
            f.expect(len(families) == expected, f"family count n={n} at {r}")
        if p <= closure_bound:
            # Subword closure: every subword of a maximal piece is a piece,
            # cross-validated against the exhaustive prefix scan.
            u = relators.relator
            dd = u + u
            lengths = [relators.longest_piece_prefix(dd[i:i + 2 * p])
                       for i in range(2 * p)]
            ok = True
            for i, length in enumerate(lengths):
                if length and not is_piece(dd[i:i + length], relators):
                    ok = False
                if length < 2 * p and is_piece(dd[i:i + length + 1], relators):
                    ok = False
                for d in range(1, length):
                    if lengths[(i + d) % (2 * p)] < length - d:
                        ok = False
            f.expect(ok, f"piece subword closure at {r}")
    return f.result("small-cancellation")


def check_decision_oracle(max_r_den: int = 20, max_s_den: int = 40,
                          expansion: int = 64) -> CheckResult:
    """The exact decision agrees with breadth-first orbit closure; the
    fundamental representative is idempotent and certified by its trace;
    scans match the closure; folding by 2 or negating changes nothing."""
    f = _Failures()
    test_slopes = farey_interval(max_s_den) + [INFINITY]
    for r in _proper_fractions(max_r_den):
        orbit = orbit_closure(r, {r, INFINITY}, max_s_den, expansion)
        for s in test_slopes:
            verdict = is_null_homotopic(s, r)
            f.expect(verdict.answer == (s in orbit), f"oracle at s={s} r={r}")
            rep = homotopy_representative(s, r)
            ok = (rep.is_infinite or rep == r or in_fundamental_intervals(rep, r))
            f.expect(ok, f"representative range at s={s} r={r}")
            f.expect(homotopy_representative(rep, r) == rep,
                     f"idempotence at s={s} r={r}")
            trace = reduce_to_fundamental(s, r)
            img = s
            for refl, image in trace.steps:
                img = refl.apply(img)
                if img != image:
                    break
            f.expect(img == trace.result == rep, f"trace certificate s={s} r={r}")
        expected_scan = sorted(
            s for s in orbit if s.is_infinite or ZERO <= s <= ONE)
        f.expect(scan(r, max_s_den) == expected_scan, f"scan vs closure at {r}")
        f.expect(has_umpp_epimorphism(r, r), f"epimorphism reflexivity at {r}")
    # Translation and negation invariance on a thinner sweep.
    for r in _proper_fractions(min(max_r_den, 10)):
        for s in farey_interval(min(max_s_den, 12)) + [INFINITY]:
            base = is_null_homotopic(s, r).answer
            f.expect(is_null_homotopic(s + 2, r).answer == base,
                     f"translation invariance s={s} r={r}")
            f.expect(is_null_homotopic(-s, r).answer == base,
                     f"negation invariance s={s} r={r}")
            f.expect(has_umpp_epimorphism(s, r)
                     == has_umpp_epimorphism(s + 2, r),
                     f"epimorphism translation s={s} r={r}")
    return f.result("decision-oracle")


def check_criterion_equivalences(max_r_den: int = 30, max_s_den: int = 60,
                                 single_term_literal: bool = False) -> CheckResult:
    """Equivalences among the three gap tests, for r with p <= max_r_den
    and s in (0,1] with denominator <= max_s_den.

    The continued-fraction criterion always matches membership in the
    open gap (r1, r2), and a null-homotopic s always lies in the gap.
    When r has a multi-term expansion, the (S1,S2)-factor condition is
    equivalent to both and is implied by null-homotopy.

    For a single-term r = 1/m the factor condition is strictly stronger
    than the gap test and null-homotopy does not imply it: the relator
    group of 1/2 is free abelian, so the loop of slope 1/4 bounds, yet
    ((4,4)) has no factor (2).  The exact characterization there is
    "inside the gap with leading partial quotient at most m", which is
    what this suite checks; passing single_term_literal=True instead
    asserts the uncorrected chain for single-term r as well, and is
    expected to fail.
    """
    f = _Failures()
    s_pool = [(s, cf_expand(s).terms[0]) for s in _unit_fractions(max_s_den)]
    for r in _proper_fractions(max_r_den):
        r1, r2 = fundamental_endpoints(r)
        terms = cf_expand(r).terms
        single_term = len(terms) == 1
        for s, s_lead in s_pool:
            snc = satisfies_necessary_condition(s, r)
            conn = connection_criterion(s, r)
            gap = r1 < s < r2
            f.expect(conn == gap, f"criterion vs gap at s={s} r={r}")
            null = is_null_homotopic(s, r).answer
            if null:
                f.expect(gap, f"null-homotopic outside gap at s={s} r={r}")
            if not single_term:
                f.expect(snc == conn, f"factor condition vs criterion at s={s} r={r}")
                if null:
                    f.expect(snc, f"necessary-condition soundness at s={s} r={r}")
            elif single_term_literal:
                f.expect(snc == conn, f"factor condition vs criterion at s={s} r={r}")
                if null:
                    f.expect(snc, f"necessary-condition soundness at s={s} r={r}")
            else:
                f.expect(snc == (gap and s_lead <= terms[0]),
                         f"single-term factor characterization at s={s} r={r}")
    return f.result("criterion-equivalences"
                    + ("-literal" if single_term_literal else ""))


def check_special_slopes(max_s_den: int = 40) -> CheckResult:
    """Slope ∞ and the integer slopes: the ∞ orbit is the singleton {∞};
    parity classes match the full-reflection-group orbits; the loop of
    slope 1 does not bound for the link of slope 0."""
    f = _Failures()
    test_slopes = farey_interval(max_s_den) + [INFINITY]
    f.expect(scan(INFINITY, 10) == [INFINITY], "scan at ∞")
    for s in test_slopes:
        f.expect(is_null_homotopic(s, INFINITY).answer == s.is_infinite,
                 f"∞ decision at {s}")
    orbits = {
        cls: triangle_orbit_closure({vertex}, max_s_den)
        for cls, vertex in ((ParityClass.ZERO, ZERO), (ParityClass.ONE, ONE),
                            (ParityClass.INFINITY, INFINITY))
    }
    for s in test_slopes:
        cls = slope_parity_class(s)
        for other, orbit in orbits.items():
            f.expect((s in orbit) == (other is cls),
                     f"parity orbit of {s} vs {other.value}")
    for r_int, r_cls in ((ZERO, ParityClass.ZERO), (ONE, ParityClass.ONE),
                         (Slope(2), ParityClass.ZERO), (Slope(-1), ParityClass.ONE)):
        for s in test_slopes:
            expected = slope_parity_class(s) in (r_cls, ParityClass.INFINITY)
            f.expect(is_null_homotopic(s, r_int).answer == expected,
                     f"integer decision at s={s} r={r_int}")
    f.expect(relator(ZERO) == "ab", "relator of 0")
    f.expect(not is_null_homotopic(ONE, ZERO).answer, "slope 1 against link 0")
    return f.result("special-slopes")


def check_automorphism_shift(max_s_den: int = 100) -> CheckResult:
    """Sending b to its inverse turns the relator of s into a cyclic
    representative of the relator of s+1 or its inverse (the relator of
    s+1 being read off the lattice line walk)."""
    f = _Failures()
    for s in _unit_fractions(max_s_den):
        shifted = apply_automorphism(relator(s), "a", "B")
        target = relator_by_line_walk(s + 1)
        f.expect(cyclic_equal(shifted, target, allow_inverse=True),
                 f"shift at {s}")
        if s.den <= 30:
            # The four half-twist automorphisms land in the same cyclic
            # class up to inversion.
            others = [apply_automorphism(relator(s), a, b)
                      for a, b in (("A", "b"), ("B", "a"), ("b", "A"))]
            f.expect(all(cyclic_equal(shifted, w, allow_inverse=True)
                         for w in others), f"shift variants at {s}")
    f.expect(apply_automorphism(relator(ZERO), "a", "B") == relator(ONE),
             "shift at 0")
    return f.result("automorphism-shift")


#: The named suites in canonical order, with the bound names they accept.
ALL_CHECKS: list[tuple[str, Callable[..., CheckResult]]] = [
    ("worked-examples", check_worked_examples),
    ("word-generators-agree", check_word_generators),
    ("sequence-theorems", check_sequence_theorems),
    ("small-cancellation", check_small_cancellation),
    ("decision-oracle", check_decision_oracle),
    ("criterion-equivalences", check_criterion_equivalences),
    ("special-slopes", check_special_slopes),
    ("automorphism-shift", check_automorphism_shift),
]


def run_all(max_den: int = 20) -> list[CheckResult]:
    """Run every suite with its bounds capped at max_den."""
    cap = max_den
    return [
        check_worked_examples(),
        check_word_generators(max_p=min(300, cap)),
        check_sequence_theorems(max_p=min(200, cap)),
        check_small_cancellation(max_p=min(50, cap), closure_bound=min(20, cap)),
        check_decision_oracle(max_r_den=min(20, cap), max_s_den=min(40, cap)),
        check_criterion_equivalences(max_r_den=min(30, cap),
                                     max_s_den=min(60, cap)),
        check_special_slopes(max_s_den=min(40, cap)),
        check_automorphism_shift(max_s_den=min(100, cap)),
    ]
