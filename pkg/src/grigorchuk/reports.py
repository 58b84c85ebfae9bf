"""The check-all verification suite: every desk-scale claim as a
machine-readable report.

Each check carries an ``anchor``: the mathematical statement being
verified, so reports are auditable on their own.  Statuses are ``pass``,
``fail``, ``inapplicable`` or ``skipped``; the suite's aggregate exit
status is the worst individual one.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import cubic, growth, permgrp, presentations, wreath
from .cosets import (
    abelian_invariants,
    close_normally,
    quotient_group,
    reidemeister_schreier,
    todd_coxeter,
)
from .cubic import CubicNumber, LAMBDA, LAMBDA_INV, WEIGHT, lambda_length
from .words import BCD, LETTERS, reduce_word
from .wreath import lemma_split_contraction_check, order, split


@dataclass
class CheckConfig:
    nball_radii: tuple[int, ...] = (2, 5, 10, 20)
    nball_random_max: int = 0  # extra random sweep up to this radius (0 = off)
    nball_random_samples: int = 100_000
    lemma_samples: int = 10_000
    radius_exhaustive: int = 10_000
    radius_random: int = 200
    radius_max: int = 1_000_000
    growth_maxn: int = 8
    coset_cap: int = 1_000_000
    seed: int = 0

    @staticmethod
    def from_file(path) -> "CheckConfig":
        cfg = CheckConfig()
        with open(path) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected 'key = value'")
                key, _, value = line.partition("=")
                key = key.strip()
                value = value.strip()
                if key == "nball_radii":
                    cfg.nball_radii = tuple(int(x) for x in value.split(",") if x)
                elif hasattr(cfg, key):
                    setattr(cfg, key, int(value))
                else:
                    raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        return cfg


@dataclass
class CheckReport:
    check_id: str
    anchor: str
    status: str  # pass | fail | inapplicable | skipped
    witnesses: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "status": self.status,
            "witnesses": self.witnesses,
            "wall_time": round(self.wall_time, 4),
        }


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def random_reduced_word(length: int, rng: random.Random) -> str:
    out: list[str] = []
    for _ in range(length):
        last = out[-1] if out else ""
        if last == "a":
            out.append(rng.choice(BCD))
        elif last:
            out.append("a")
        else:
            out.append(rng.choice(LETTERS))
    return "".join(out)


# -- individual checks ------------------------------------------------------


def check_weight_identities(cfg: CheckConfig) -> CheckReport:
    a, b, c, d = (WEIGHT[x] for x in "abcd")
    identities = {
        "|a|+|c| = 1/L": a + c == LAMBDA_INV,
        "|a|+|d| = 1/L^2": a + d == LAMBDA**-2,
        "|b| = 1-|a|": b == CubicNumber(1) - a,
        "|b| = 1/L^3": b == LAMBDA**-3,
        "|b| = |c|+|d|": b == c + d,
        "2L^3 = L^2+L+1": 2 * LAMBDA**3 == LAMBDA**2 + LAMBDA + 1,
    }
    return CheckReport(
        "weight-identities",
        "exact identities among the generator weights in Q(L)",
        _status(all(identities.values())),
        {k: bool(v) for k, v in identities.items()},
    )


def check_splitting_identity(cfg: CheckConfig) -> CheckReport:
    wit = {}
    ok = True
    for xi in BCD:
        x0, x1 = split(xi)
        lhs = lambda_length(x0) + lambda_length(x1)
        rhs = LAMBDA_INV * (WEIGHT[xi] + WEIGHT["a"])
        wit[xi] = lhs == rhs
        ok = ok and wit[xi]
    return CheckReport(
        "splitting-length-identity",
        "|x0|+|x1| = (|x|+|a|)/L for each inactive generator's splitting",
        _status(ok),
        wit,
    )


def check_lemma_ineq(cfg: CheckConfig) -> CheckReport:
    rng = random.Random(cfg.seed)
    strong_checked = weak_checked = 0
    violations = []
    from .words import min_conjugate

    while strong_checked < cfg.lemma_samples:
        w = random_reduced_word(rng.randint(0, 24), rng)
        rep = lemma_split_contraction_check(w)
        if not rep.weak_holds:
            violations.append(("weak", w))
        weak_checked += 1
        m = min_conjugate(w)
        if m in BCD:
            continue
        mrep = lemma_split_contraction_check(m)
        if not mrep.strong_holds:
            violations.append(("strong", m))
        strong_checked += 1
    return CheckReport(
        "lemma-contraction",
        "splitting contracts weighted length: |x0|+|x1| <= |x|/L for minimal "
        "conjugates outside {b,c,d}; <= (|x|+|a|)/L always",
        _status(not violations),
        {
            "strong_checked": strong_checked,
            "weak_checked": weak_checked,
            "violations": violations[:10],
        },
    )


def check_order_table(cfg: CheckConfig) -> CheckReport:
    expected = {"a": 2, "b": 2, "c": 2, "d": 2, "ad": 4, "ac": 8, "ab": 16}
    got = {w: order(w) for w in expected}
    oracle = {w: wreath.order_by_squaring(w) for w in expected}
    ok = got == expected and oracle == expected
    return CheckReport(
        "order-table",
        "orders in the limit group: generators 2, ad 4, ac 8, ab 16",
        _status(ok),
        {"computed": got, "squaring_oracle": oracle},
    )


def check_nball(cfg: CheckConfig) -> list[CheckReport]:
    reports = []
    if not cfg.nball_radii:
        return [
            CheckReport(
                "nball-torsion",
                "every word of length <= n certifies as 2-power torsion at "
                "level i(n)",
                "skipped",
                {"reason": "empty radius set"},
            )
        ]
    for n in cfg.nball_radii:
        t0 = time.perf_counter()
        rep = wreath.verify_nball_proposition(n)
        bound = rep.level + 2
        ok = rep.ok and rep.max_exponent <= bound
        reports.append(
            CheckReport(
                f"nball-torsion-{n}",
                f"every word of length <= {n} certifies as 2-power torsion "
                f"at level i({n}) = {rep.level}, exponent <= i+2",
                _status(ok),
                rep.to_dict(),
                time.perf_counter() - t0,
            )
        )
    if cfg.nball_random_max > 2:
        t0 = time.perf_counter()
        rng = random.Random(cfg.seed)
        failures = 0
        max_exp = 0
        count = 0
        for n in range(2, cfg.nball_random_max + 1):
            level = cubic.radius_index(n)
            words = (
                random_reduced_word(rng.randint(0, n), rng)
                for _ in range(cfg.nball_random_samples)
            )
            rep = wreath.verify_nball_proposition(n, words=words, level=level)
            failures += len(rep.failures)
            max_exp = max(max_exp, rep.max_exponent)
            count += rep.word_count
        reports.append(
            CheckReport(
                f"nball-torsion-random-{cfg.nball_random_max}",
                "random words up to the configured radius all certify",
                _status(failures == 0),
                {"count": count, "failures": failures, "max_exponent": max_exp},
                time.perf_counter() - t0,
            )
        )
    return reports


def check_cosets(cfg: CheckConfig) -> list[CheckReport]:
    g0c = presentations.gamma0_coxeter_presentation()
    out = []

    t0 = time.perf_counter()
    t = todd_coxeter(close_normally(g0c, ["ab"]), cap=cfg.coset_cap)
    out.append(
        CheckReport(
            "coset-index-4",
            "the normal closure of ab has index 4 in the level-0 group",
            _status(t.status == "complete" and t.index == 4 and t.verify()),
            {"index": t.index, "status": t.status},
            time.perf_counter() - t0,
        )
    )

    t0 = time.perf_counter()
    t16 = todd_coxeter(close_normally(g0c, ["abab"]), cap=cfg.coset_cap)
    iso = False
    if t16.status == "complete" and t16.index == 16:
        iso = permgrp.small_isomorphic(quotient_group(t16), permgrp.z2_times_d8())
    out.append(
        CheckReport(
            "coset-index-16-iso",
            "the normal closure of (ab)^2 has index 16 with quotient Z/2 x D8",
            _status(t16.status == "complete" and t16.index == 16 and iso),
            {"index": t16.index, "isomorphic": iso},
            time.perf_counter() - t0,
        )
    )

    t0 = time.perf_counter()
    txi = todd_coxeter(presentations.gamma_presentation(0), presentations.xi_generators(), cap=cfg.coset_cap)
    out.append(
        CheckReport(
            "coset-xi-index-2",
            "the parity kernel has index 2 at level 0",
            _status(txi.status == "complete" and txi.index == 2 and txi.verify()),
            {"index": txi.index},
            time.perf_counter() - t0,
        )
    )

    t0 = time.perf_counter()
    rs = reidemeister_schreier(g0c, t16) if t16.status == "complete" else None
    inv = abelian_invariants(rs) if rs else None
    ok = inv is not None and inv.divisors == () and inv.free_rank == 3
    out.append(
        CheckReport(
            "h0-abelianization",
            "the normal closure of (ab)^2 abelianizes to Z^3",
            _status(ok),
            {"invariants": str(inv)},
            time.perf_counter() - t0,
        )
    )

    t0 = time.perf_counter()
    inv1 = abelian_invariants(presentations.gamma_presentation(-1))
    inv0 = abelian_invariants(presentations.gamma_presentation(0))
    ok = (
        inv1.divisors == (2, 2, 2)
        and inv1.free_rank == 0
        and inv0.divisors == (2, 2, 2)
        and inv0.free_rank == 0
    )
    out.append(
        CheckReport(
            "abelianization-223",
            "the free product and the level-0 group abelianize to (Z/2)^3",
            _status(ok),
            {"free_product": str(inv1), "level_0": str(inv0)},
            time.perf_counter() - t0,
        )
    )
    return out


def check_index_bounds(cfg: CheckConfig) -> CheckReport:
    ok = all(presentations.closed_form_check(n) for n in range(21))
    ib0 = presentations.index_bounds(0)
    ib1 = presentations.index_bounds(1)
    return CheckReport(
        "index-bounds-closed-form",
        "alpha/beta recursions equal (13*4^n-1)/3 and (13*4^n-15*2^n+2)/3",
        _status(ok and (ib0.alpha, ib0.beta) == (4, 0) and (ib1.alpha, ib1.beta) == (17, 8)),
        {"n1": (ib1.alpha, ib1.beta)},
    )


def check_core_lemma_corpus(cfg: CheckConfig) -> list[CheckReport]:
    t0 = time.perf_counter()
    violations = []
    applicable = 0
    for name, G in permgrp.lemma_corpus().items():
        for H in permgrp.enumerate_subgroups(G):
            rep = permgrp.check_core_lemma(G, H)
            if rep.applicable:
                applicable += 1
                if not rep.passed:
                    violations.append((name, rep.index_h, rep.core_index))
    corpus_report = CheckReport(
        "core-lemma-corpus",
        "for proper 2-power-index subgroups normalized by an index-<=2 "
        "subgroup, the core has index 2^b with b <= 2a-1",
        _status(not violations),
        {"applicable_pairs": applicable, "violations": violations},
        time.perf_counter() - t0,
    )

    t0 = time.perf_counter()
    A4 = permgrp.alternating_4()
    H = permgrp.closure([permgrp.from_cycles(4, [(0, 1, 2)])])
    rep = permgrp.check_core_lemma(A4, H)
    sharp = CheckReport(
        "core-lemma-a4-sharpness",
        "in A4 an index-4 subgroup has normalizer of index 3 (hypothesis "
        "fails) and core of index 12, not a 2-power",
        _status(not rep.applicable and rep.core_index == 12),
        {"applicable": rep.applicable, "core_index": rep.core_index, "reason": rep.reason},
        time.perf_counter() - t0,
    )
    return [corpus_report, sharp]


def check_growth_cross(cfg: CheckConfig) -> CheckReport:
    t0 = time.perf_counter()
    sig = growth.ball_grigorchuk(cfg.growth_maxn, use_signatures=True)
    pure = growth.ball_grigorchuk(cfg.growth_maxn, use_signatures=False)
    free_counts = [growth.ball_free_product(n) for n in range(cfg.growth_maxn + 1)]
    sizes = sig.ball_sizes()
    ok = (
        sizes == pure.ball_sizes()
        and sizes[:3] == [1, 5, 11]
        and all(g <= f for g, f in zip(sizes, free_counts))
    )
    return CheckReport(
        "growth-cross-pipeline",
        "signature-bucketed and pure word-problem ball counts agree and are "
        "bounded by the free-product counts",
        _status(ok),
        {"ball_sizes": sizes, "free_sizes": free_counts},
        time.perf_counter() - t0,
    )


def check_radius_index(cfg: CheckConfig) -> CheckReport:
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)
    bad = []
    prev = None

    def good(n):
        m = cubic.radius_index(n)
        if cubic.compare_power_to_int(m + 1, n) > 0 or cubic.compare_power_to_int(m + 2, n) <= 0:
            return None
        return m

    for n in range(2, cfg.radius_exhaustive + 1):
        m = good(n)
        if m is None or (prev is not None and m < prev):
            bad.append(n)
        prev = m
    for _ in range(cfg.radius_random):
        n = rng.randint(cfg.radius_exhaustive, cfg.radius_max)
        if good(n) is None:
            bad.append(n)
    lo, hi = cubic.log_lambda_enclosure(4)
    rounded_660 = lo >= Fraction(6595, 1000) and hi <= Fraction(6605, 1000)
    return CheckReport(
        "radius-index-exact",
        "L^(i(n)+1) <= n < L^(i(n)+2) exactly, i nondecreasing; the "
        "enclosure of log_L(4) rounds to 6.60",
        _status(not bad and rounded_660),
        {
            "violations": bad[:10],
            "log_lambda_4": [float(lo), float(hi)],
            "rounds_to_6.60": rounded_660,
        },
        time.perf_counter() - t0,
    )


_CHECK_BUILDERS = [
    check_weight_identities,
    check_splitting_identity,
    check_lemma_ineq,
    check_order_table,
    check_nball,
    check_cosets,
    check_index_bounds,
    check_core_lemma_corpus,
    check_growth_cross,
    check_radius_index,
]


def check_all(cfg: CheckConfig | None = None) -> list[CheckReport]:
    cfg = cfg or CheckConfig()
    reports: list[CheckReport] = []
    for builder in _CHECK_BUILDERS:
        t0 = time.perf_counter()
        result = builder(cfg)
        elapsed = time.perf_counter() - t0
        if isinstance(result, list):
            reports.extend(result)
        else:
            if not result.wall_time:
                result.wall_time = elapsed
            reports.append(result)
    reports.sort(key=lambda r: r.check_id)
    return reports


def worst_status(reports) -> str:
    order_ = {"pass": 0, "skipped": 0, "inapplicable": 0, "fail": 1}
    return "fail" if any(order_[r.status] for r in reports) else "pass"
