"""Acceptance gate: ten numbered criteria, one printed pass/fail line each.

All numeric claims are exact (zero tolerance) unless a rational enclosure
width is stated explicitly.  Criterion 2 is asserted twice: once exactly
as stated (the claimed level for n = 10 and the claimed exponent bound
i(n)+1, which the exact computation refutes: the order of ab is 16, so a
radius-2 ball already needs exponent 4 > i(2)+1 = 3) and once with the
computed levels and the bound i(n)+2 that every run satisfies.  The
as-stated variant is expected to fail and is left failing deliberately.
"""

import random
import time
from fractions import Fraction

from conftest import random_reduced
from grigorchuk import cubic, growth, permgrp, presentations
from grigorchuk.cosets import (
    abelian_invariants,
    close_normally,
    quotient_group,
    reidemeister_schreier,
    todd_coxeter,
)
from grigorchuk.cubic import (
    LAMBDA,
    LAMBDA_INV,
    WEIGHT,
    CubicNumber,
    compare_power_to_int,
    lambda_length,
    log_lambda_enclosure,
    radius_index,
)
from grigorchuk.words import BCD, min_conjugate
from grigorchuk.wreath import (
    lemma_split_contraction_check,
    order,
    order_by_squaring,
    split,
    verify_nball_proposition,
)

SEED = 2025


def report(criterion: str, ok: bool, detail: str = "") -> bool:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    return ok


def test_criterion_01_exact_metric_identities():
    t0 = time.perf_counter()
    a, b, c, d = (WEIGHT[x] for x in "abcd")
    ok = (
        a + c == LAMBDA_INV
        and a + d == LAMBDA**-2
        and b == CubicNumber(1) - a
        and b == LAMBDA**-3
        and b == c + d
    )
    for xi in BCD:
        x0, x1 = split(xi)
        ok = ok and (
            lambda_length(x0) + lambda_length(x1)
            == LAMBDA_INV * (WEIGHT[xi] + WEIGHT["a"])
        )
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 1.0
    assert report("01 exact metric identities", ok, f"{elapsed:.3f}s, zero tolerance")


def _exhaustive_nball(n: int, level: int):
    rep = verify_nball_proposition(n, level=level)
    return rep


def test_criterion_02_exhaustive_as_stated():
    """As stated: levels i(n) in {2, 6, 11, 13} and exponent <= i(n)+1.

    This is left failing on purpose: exact radius arithmetic gives
    i(10) = 9, and the exponent bound contradicts the (independently
    cross-checked) order 16 of ab, which forces exponent 4 at n = 2 where
    the stated bound is 3.
    """
    stated_levels = {2: 2, 5: 6, 10: 11, 20: 13}
    ok = True
    details = []
    for n, lvl in stated_levels.items():
        computed = radius_index(n)
        level_ok = computed == lvl
        rep = _exhaustive_nball(n, lvl)
        exp_ok = rep.ok and rep.max_exponent <= lvl + 1
        details.append(f"n={n}: i={computed} (stated {lvl}), max_exp={rep.max_exponent}")
        ok = ok and level_ok and exp_ok
    assert report("02 n-ball torsion (as stated)", ok, "; ".join(details))


def test_criterion_02_exhaustive_computed_levels():
    """Same sweep at the computed levels with the bound i(n)+2, which the
    recursion's base case (4-torsion at level 0) actually supports."""
    ok = True
    details = []
    for n in (2, 5, 10, 20):
        lvl = radius_index(n)
        rep = _exhaustive_nball(n, lvl)
        ok = ok and rep.ok and rep.max_exponent <= lvl + 2
        details.append(f"n={n}: i={lvl}, words={rep.word_count}, max_exp={rep.max_exponent}")
    assert report("02 n-ball torsion (computed levels, bound i+2)", ok, "; ".join(details))


def test_criterion_02_random_words():
    rng = random.Random(SEED)
    samples = 100_000
    failures = 0
    total = 0
    for n in range(2, 31):
        lvl = radius_index(n)
        words = (random_reduced(rng.randint(0, n), rng) for _ in range(samples))
        rep = verify_nball_proposition(n, words=words, level=lvl)
        failures += len(rep.failures)
        total += rep.word_count
    ok = failures == 0
    assert report(
        "02 n-ball torsion (random)", ok, f"{total} words over n=2..30, {failures} failures"
    )


def test_criterion_03_contraction_inequality():
    rng = random.Random(SEED)
    strong = 0
    violations = 0
    while strong < 10_000:
        w = random_reduced(rng.randint(0, 24), rng)
        if not lemma_split_contraction_check(w).weak_holds:
            violations += 1
        m = min_conjugate(w)
        if m in BCD:
            continue
        if not lemma_split_contraction_check(m).strong_holds:
            violations += 1
        strong += 1
    ok = violations == 0
    assert report("03 contraction inequality", ok, f"{strong} minimal conjugates, exact")


def test_criterion_04_order_table():
    expected = {"a": 2, "b": 2, "c": 2, "d": 2, "ad": 4, "ac": 8, "ab": 16}
    got = {w: order(w) for w in expected}
    oracle = {w: order_by_squaring(w) for w in expected}
    ok = got == expected and oracle == expected
    assert report("04 order table", ok, f"{got}, oracle agrees")


def test_criterion_05_quotient_structure():
    t0 = time.perf_counter()
    base = presentations.gamma0_coxeter_presentation()
    t16 = todd_coxeter(close_normally(base, ["abab"]))
    iso = t16.index == 16 and permgrp.small_isomorphic(
        quotient_group(t16), permgrp.z2_times_d8()
    )
    t4 = todd_coxeter(close_normally(base, ["ab"]))
    t2 = todd_coxeter(presentations.gamma_presentation(0), presentations.xi_generators())
    elapsed = time.perf_counter() - t0
    ok = iso and t4.index == 4 and t2.index == 2 and elapsed < 3.0
    assert report(
        "05 quotient structure",
        ok,
        f"indices 16/4/2, quotient is Z/2 x D8: {iso}, {elapsed:.2f}s",
    )


def test_criterion_06_h0_abelianization():
    base = presentations.gamma0_coxeter_presentation()
    table = todd_coxeter(close_normally(base, ["abab"]))
    inv = abelian_invariants(reidemeister_schreier(base, table))
    ok = inv.free_rank == 3 and inv.divisors == ()
    assert report("06 subgroup abelianization", ok, f"invariants {inv}")


def test_criterion_07_index_bound_arithmetic():
    ib = presentations.index_bounds(0)
    ok = (ib.alpha, ib.beta) == (4, 0)
    ok = ok and all(presentations.closed_form_check(n) for n in range(21))
    assert report("07 index-bound closed forms", ok, "n <= 20, exact bignum")


def test_criterion_08_core_lemma():
    violations = 0
    applicable = 0
    for G in permgrp.lemma_corpus().values():
        for H in permgrp.enumerate_subgroups(G):
            rep = permgrp.check_core_lemma(G, H)
            if rep.applicable:
                applicable += 1
                if not rep.passed:
                    violations += 1
    A4 = permgrp.alternating_4()
    H3 = permgrp.closure([permgrp.from_cycles(4, [(0, 1, 2)])])
    a4rep = permgrp.check_core_lemma(A4, H3)
    sharp = not a4rep.applicable and a4rep.core_index == 12
    ok = violations == 0 and sharp
    assert report(
        "08 core-index bound",
        ok,
        f"{applicable} applicable pairs, {violations} violations; A4 core index 12",
    )


def test_criterion_09_growth_cross_validation():
    sig = growth.ball_grigorchuk(8, use_signatures=True)
    pure = growth.ball_grigorchuk(8, use_signatures=False)
    sizes = sig.ball_sizes()
    free_sizes = [growth.ball_free_product(n) for n in range(9)]
    ok = (
        sizes == pure.ball_sizes()
        and sizes[1] == 5
        and sizes[2] == 11
        and all(g <= f for g, f in zip(sizes, free_sizes))
    )
    assert report("09 growth cross-validation", ok, f"balls {sizes}")


def test_criterion_10_radius_index_and_log():
    rng = random.Random(SEED)
    bad = 0
    for n in range(1, 10_001):
        m = radius_index(n)
        if compare_power_to_int(m + 1, n) > 0 or compare_power_to_int(m + 2, n) <= 0:
            bad += 1
    for _ in range(500):
        n = rng.randint(10_000, 1_000_000)
        m = radius_index(n)
        if compare_power_to_int(m + 1, n) > 0 or compare_power_to_int(m + 2, n) <= 0:
            bad += 1
    lo, hi = log_lambda_enclosure(4)
    # "contains 6.60" read at two-decimal precision: the enclosure lies
    # inside (6.595, 6.605), so it rounds to 6.60; the exact value is
    # 6.59952..., so the literal point 6.60 is outside any tight enclosure
    rounds = Fraction(6595, 1000) < lo < hi < Fraction(6605, 1000)
    ok = bad == 0 and rounds and hi - lo < Fraction(1, 10**6)
    assert report(
        "10 radius index exactness",
        ok,
        f"0 bracket violations, log_L(4) in [{float(lo):.7f}, {float(hi):.7f}]",
    )
