"""Finite presentations: the substitution, the truncation relators u_n / v_n,
presentation builders, and the 2-power index-bound arithmetic.

Presentation files are line-oriented text::

    gens: a b c d
    rel: adadadad

Relators over single-letter involution alphabets are compact strings; signed
generators (as produced by subgroup rewriting) are space-separated tokens
``x3`` / ``x3^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import reduce_word

# a relator is a tuple of (generator, +1|-1) pairs
Relator = tuple[tuple[str, int], ...]

_SIGMA = {"a": "aca", "b": "d", "c": "b", "d": "c"}


def sigma(w: str) -> str:
    """Image of a word under the substitution a -> aca, b -> d, c -> b,
    d -> c, in reduced normal form.  The substitution kills the defining
    relators, so it is an endomorphism of the free product."""
    return reduce_word("".join(_SIGMA[ch] for ch in w))


U0 = reduce_word("ad" * 4)
V0 = reduce_word("adacac" * 4)


def relator_u(n: int) -> str:
    if n < 0:
        raise ValueError("n must be >= 0")
    w = U0
    for _ in range(n):
        w = sigma(w)
    return w


def relator_v(n: int) -> str:
    if n < 0:
        raise ValueError("n must be >= 0")
    w = V0
    for _ in range(n):
        w = sigma(w)
    return w


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Relator, ...]

    @staticmethod
    def from_strings(generators, relator_words) -> "Presentation":
        gens = tuple(generators)
        rels = tuple(relator_from_string(w) for w in relator_words)
        p = Presentation(gens, rels)
        p.validate()
        return p

    def validate(self) -> None:
        gens = set(self.generators)
        for rel in self.relators:
            if not rel:
                raise ValueError("empty relator")
            for g, e in rel:
                if g not in gens:
                    raise ValueError(f"relator uses undeclared generator {g!r}")
                if e not in (1, -1):
                    raise ValueError(f"bad exponent {e}")

    def relator_strings(self) -> list[str]:
        return [relator_to_string(r) for r in self.relators]

    def to_text(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += ["rel: " + s for s in self.relator_strings()]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "Presentation":
        gens: tuple[str, ...] | None = None
        rels = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("gens:"):
                gens = tuple(line[5:].split())
            elif line.startswith("rel:"):
                rels.append(relator_from_string(line[4:].strip()))
            else:
                raise ValueError(f"line {lineno}: expected 'gens:' or 'rel:'")
        if gens is None:
            raise ValueError("missing 'gens:' line")
        p = Presentation(gens, tuple(rels))
        p.validate()
        return p


def relator_from_string(s: str) -> Relator:
    if " " in s:
        out = []
        for tok in s.split():
            if tok.endswith("^-1"):
                out.append((tok[:-3], -1))
            else:
                out.append((tok, 1))
        return tuple(out)
    return tuple((ch, 1) for ch in s)


def relator_to_string(rel: Relator) -> str:
    if all(e == 1 and len(g) == 1 for g, e in rel):
        return "".join(g for g, _ in rel)
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in rel)


_BASE_RELATORS = ["aa", "bb", "cc", "dd", "bcd"]


def gamma_presentation(n: int) -> Presentation:
    """Presentation of the level-n approximant on generators a, b, c, d:
    the base free-product relators plus u_0..u_n and v_0..v_(n-1);
    n = -1 gives the free product itself."""
    if n < -1:
        raise ValueError("n must be >= -1")
    rels = list(_BASE_RELATORS)
    rels += [relator_u(i) for i in range(n + 1)]
    rels += [relator_v(i) for i in range(n)]
    return Presentation.from_strings("abcd", rels)


def gamma0_coxeter_presentation() -> Presentation:
    """The level-0 group as a 3-generator Coxeter group (c eliminated as bd)."""
    return Presentation.from_strings("abd", ["aa", "bb", "dd", "bdbd", "adadadad"])


def xi_generators() -> list[str]:
    """Generators of the index-2 parity kernel of the level-0 group."""
    return ["b", "c", "d", "aba", "aca", "ada"]


@dataclass(frozen=True)
class IndexBounds:
    n: int
    alpha: int
    beta: int


def index_bounds(n: int) -> IndexBounds:
    """Recursion alpha(k) = 4*alpha(k-1) + 1, beta(k) = 2*alpha(k-1) +
    2*beta(k-1) from alpha(0) = 4, beta(0) = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    alpha, beta = 4, 0
    for _ in range(n):
        alpha, beta = 4 * alpha + 1, 2 * alpha + 2 * beta
    return IndexBounds(n, alpha, beta)


def closed_form_alpha(n: int) -> int:
    num = 13 * 4**n - 1
    assert num % 3 == 0
    return num // 3


def closed_form_beta(n: int) -> int:
    num = 13 * 4**n - 15 * 2**n + 2
    assert num % 3 == 0
    return num // 3


def closed_form_check(n: int) -> bool:
    ib = index_bounds(n)
    return ib.alpha == closed_form_alpha(n) and ib.beta == closed_form_beta(n)
