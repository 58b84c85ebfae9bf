"""Ball enumeration and growth/entropy statistics.

Two groups are covered: the limit group itself (breadth-first search over
the Cayley graph, equality decided by the word problem) and the ambient
free product (closed-form alternation recurrence), which bounds it from
above.  Entropy estimates log(|B_n|)/n are reported as rational
enclosures, never as floats posing as exact values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded
from .words import LETTERS, invert, multiply
from .wreath import is_trivial, level_action

SIGNATURE_DEPTH = 8


def free_sphere_sizes(n: int) -> list[int]:
    """Sphere sizes of the free product: a(k+1) = b(k), b(k+1) = 3 a(k)
    with a = #geodesics ending in a and b = #ending in {b, c, d}."""
    if n < 0:
        raise ValueError("radius must be >= 0")
    out = [1]
    a, b = 0, 0
    for k in range(1, n + 1):
        if k == 1:
            a, b = 1, 3
        else:
            a, b = b, 3 * a
        out.append(a + b)
    return out


def ball_free_product(n: int) -> int:
    return sum(free_sphere_sizes(n))


@dataclass
class GrowthRow:
    radius: int
    ball: int
    sphere: int
    entropy_enclosure: tuple[Fraction, Fraction]  # encloses log(ball)/radius


@dataclass
class GrowthTable:
    group: str
    rows: list[GrowthRow]
    representatives: list[list[str]]  # new shortlex geodesics per radius
    complete: bool = True

    def ball_sizes(self) -> list[int]:
        return [r.ball for r in self.rows]


def _entropy_enclosure(ball: int, n: int) -> tuple[Fraction, Fraction]:
    if n == 0:
        return Fraction(0), Fraction(0)
    lo, hi = _log_enclosure(ball)
    return lo / n, hi / n


def _log_enclosure(n: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure of ln(n), via interval arithmetic."""
    from mpmath import iv

    old = iv.prec
    try:
        iv.prec = 80
        r = iv.log(iv.mpf(n))
        a, b = float(r.a), float(r.b)
    finally:
        iv.prec = old
    slack = Fraction(1, 10**9)
    return Fraction(a) - slack, Fraction(b) + slack


class _SignatureEquality:
    """Bucket candidates by their depth-8 tree action, confirm exactly.

    Signatures alone never decide equality; they only shrink the set of
    exact word-problem comparisons."""

    def __init__(self, depth: int = SIGNATURE_DEPTH):
        self.depth = depth
        self.buckets: dict[tuple[int, ...], list[str]] = {}

    def probe(self, w: str) -> bool:
        """True if w is new; records it if so."""
        sig = level_action(w, self.depth)
        bucket = self.buckets.setdefault(sig, [])
        for rep in bucket:
            if is_trivial(multiply(invert(rep), w)):
                return False
        bucket.append(w)
        return True


class _PureEquality:
    """Exact word-problem comparisons against all known representatives,
    pre-filtered only by the elementary-abelian image (an exact invariant)."""

    def __init__(self):
        self.classes: dict[tuple[int, int, int], list[str]] = {}

    @staticmethod
    def _abelian_image(w: str) -> tuple[int, int, int]:
        # image in the (Z/2)^3 abelianization with basis (a, b, d); c = b + d
        na = w.count("a") & 1
        nb = (w.count("b") + w.count("c")) & 1
        nd = (w.count("d") + w.count("c")) & 1
        return na, nb, nd

    def probe(self, w: str) -> bool:
        bucket = self.classes.setdefault(self._abelian_image(w), [])
        for rep in bucket:
            if is_trivial(multiply(invert(rep), w)):
                return False
        bucket.append(w)
        return True


def ball_grigorchuk(
    maxn: int,
    use_signatures: bool = True,
    budget: int | None = None,
) -> GrowthTable:
    """Ball sizes of the limit group up to radius ``maxn`` by BFS.

    Representatives are first-found shortlex geodesics; every new element
    at depth k has free normal form of length exactly k, because shorter
    normal forms are found at their own (smaller) depth.
    """
    eq = _SignatureEquality() if use_signatures else _PureEquality()
    eq.probe("")
    table = GrowthTable(group="grig", rows=[], representatives=[])
    table.rows.append(GrowthRow(0, 1, 1, _entropy_enclosure(1, 0)))
    table.representatives.append([""])
    sphere = [""]
    total = 1
    for k in range(1, maxn + 1):
        new: list[str] = []
        for rep in sphere:
            for g in LETTERS:
                w = multiply(rep, g)
                if budget is not None and total + len(new) >= budget:
                    table.complete = False
                    table.representatives.append(new)
                    total += len(new)
                    table.rows.append(
                        GrowthRow(k, total, len(new), _entropy_enclosure(total, k))
                    )
                    return table
                if eq.probe(w):
                    new.append(w)
        new.sort()
        total += len(new)
        table.representatives.append(new)
        table.rows.append(GrowthRow(k, total, len(new), _entropy_enclosure(total, k)))
        sphere = new
    return table


def growth_table_free(maxn: int) -> GrowthTable:
    spheres = free_sphere_sizes(maxn)
    table = GrowthTable(group="free", rows=[], representatives=[])
    total = 0
    for k, s in enumerate(spheres):
        total += s
        table.rows.append(GrowthRow(k, total, s, _entropy_enclosure(total, k)))
    return table


def entropy_series(maxn: int, group: str = "grig") -> list[tuple[Fraction, Fraction]]:
    """Per-radius estimates of log(|B_n|)/n for the chosen group."""
    if group == "free":
        table = growth_table_free(maxn)
    elif group == "grig":
        table = ball_grigorchuk(maxn)
    else:
        raise ValueError(f"unknown group {group!r}")
    return [row.entropy_enclosure for row in table.rows[1:]]
