"""Todd-Coxeter coset enumeration (HLT with coincidence handling),
Reidemeister-Schreier subgroup presentations, and abelian invariants.

Cosets are numbered from 0 (the subgroup itself); normal closures are
enumerated by adding the closing words as relators over the trivial
subgroup, whose coset action is then the regular representation of the
quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceeded
from .permgrp import PermGroup, closure as perm_closure
from .presentations import Presentation, Relator, relator_from_string
from .snf import smith_normal_form

DEFAULT_COSET_CAP = 1_000_000


@dataclass
class CosetTable:
    """Completed (or overflowed) coset table.

    ``rows[c][2*g]`` is the coset reached from ``c`` by generator ``g``,
    ``rows[c][2*g+1]`` the one reached by its inverse.  For involutory
    generators the two columns coincide.
    """

    presentation: Presentation
    subgroup_words: tuple[Relator, ...]
    rows: list[list[int]]
    status: str  # "complete" | "overflowed"
    live_count: int

    @property
    def index(self) -> int:
        return len(self.rows)

    def step(self, coset: int, gen_index: int, exponent: int) -> int:
        return self.rows[coset][2 * gen_index + (0 if exponent == 1 else 1)]

    def trace(self, coset: int, word: Relator) -> int:
        g_index = {g: i for i, g in enumerate(self.presentation.generators)}
        for g, e in word:
            coset = self.step(coset, g_index[g], e)
        return coset

    def verify(self) -> bool:
        """Re-trace every relator at every coset and every subgroup word at 0."""
        for rel in self.presentation.relators:
            for c in range(len(self.rows)):
                if self.trace(c, rel) != c:
                    return False
        return all(self.trace(0, w) == 0 for w in self.subgroup_words)


class _Enumerator:
    def __init__(self, presentation: Presentation, subgroup_words, cap: int):
        self.pres = presentation
        self.gens = presentation.generators
        self.ngens = len(self.gens)
        self.gidx = {g: i for i, g in enumerate(self.gens)}
        self.sub_words = tuple(subgroup_words)
        self.cap = cap
        self.table: list[list[int | None]] = []
        self.rep: list[int] = []
        self.dead = 0
        self._new_coset()

    # -- union-find over cosets ----------------------------------------

    def find(self, c: int) -> int:
        while self.rep[c] != c:
            self.rep[c] = self.rep[self.rep[c]]
            c = self.rep[c]
        return c

    def _new_coset(self) -> int:
        if len(self.table) - self.dead >= self.cap:
            raise CapExceeded(
                f"coset cap {self.cap} exceeded", partial=len(self.table) - self.dead
            )
        self.table.append([None] * (2 * self.ngens))
        self.rep.append(len(self.table) - 1)
        return len(self.table) - 1

    def _col(self, g: str, e: int) -> int:
        return 2 * self.gidx[g] + (0 if e == 1 else 1)

    def _inv_col(self, col: int) -> int:
        return col ^ 1

    def get(self, c: int, col: int):
        v = self.table[c][col]
        return None if v is None else self.find(v)

    def set_edge(self, c: int, col: int, d: int) -> None:
        """Record c . col = d (and the inverse edge), merging on conflict."""
        pending = [(c, col, d)]
        while pending:
            c, col, d = pending.pop()
            c, d = self.find(c), self.find(d)
            for x, xcol, y in ((c, col, d), (d, self._inv_col(col), c)):
                cur = self.get(x, xcol)
                if cur is None:
                    self.table[x][xcol] = y
                elif cur != y:
                    self.coincide(cur, y)

    def coincide(self, a: int, b: int) -> None:
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            # b dies; transplant its edges onto a
            self.rep[b] = a
            self.dead += 1
            for col, target in enumerate(self.table[b]):
                if target is None:
                    continue
                target = self.find(target)
                cur = self.get(a, col)
                if cur is None:
                    self.table[a][col] = target
                    back = self.get(target, self._inv_col(col))
                    if back is None:
                        self.table[target][self._inv_col(col)] = a
                    elif back != a:
                        queue.append((back, a))
                elif cur != target:
                    queue.append((cur, target))
            self.table[b] = [None] * (2 * self.ngens)

    # -- scanning -------------------------------------------------------

    def scan_and_fill(self, start: int, word: Relator) -> None:
        """Trace ``word`` from start, defining cosets as needed; the trace
        must close back at start."""
        cols = [self._col(g, e) for g, e in word]
        c = self.find(start)
        start = c
        for i, col in enumerate(cols):
            nxt = self.get(c, col)
            if nxt is None:
                if i == len(cols) - 1:
                    self.set_edge(c, col, self.find(start))
                    return
                nxt = self._new_coset()
                self.set_edge(c, col, nxt)
                nxt = self.find(nxt)
            c = nxt
            start = self.find(start)
        if c != start:
            self.coincide(c, start)

    def run(self) -> CosetTable:
        try:
            while True:
                before = (len(self.table), self.dead)
                for w in self.sub_words:
                    self.scan_and_fill(self.find(0), w)
                alpha = 0
                while alpha < len(self.table):
                    if self.find(alpha) == alpha:
                        for rel in self.pres.relators:
                            self.scan_and_fill(alpha, rel)
                            if self.find(alpha) != alpha:
                                break
                    alpha += 1
                if (len(self.table), self.dead) == before:
                    break
            status = "complete"
        except CapExceeded:
            status = "overflowed"
        return self._freeze(status)

    def _freeze(self, status: str) -> CosetTable:
        live = [c for c in range(len(self.table)) if self.find(c) == c]
        renum = {c: i for i, c in enumerate(live)}
        rows = []
        for c in live:
            row = []
            for col in range(2 * self.ngens):
                v = self.get(c, col)
                row.append(-1 if v is None else renum[v])
            rows.append(row)
        return CosetTable(
            presentation=self.pres,
            subgroup_words=self.sub_words,
            rows=rows,
            status=status,
            live_count=len(live),
        )


def todd_coxeter(
    presentation: Presentation,
    subgroup_words=(),
    cap: int = DEFAULT_COSET_CAP,
) -> CosetTable:
    """HLT coset enumeration of the subgroup generated by ``subgroup_words``.

    Words may be strings over single-letter generators or pre-parsed
    signed relators.
    """
    words = tuple(
        w if isinstance(w, tuple) else relator_from_string(w) for w in subgroup_words
    )
    return _Enumerator(presentation, words, cap).run()


def close_normally(presentation: Presentation, words) -> Presentation:
    """Presentation of the quotient by the normal closure of ``words``."""
    extra = tuple(w if isinstance(w, tuple) else relator_from_string(w) for w in words)
    return Presentation(presentation.generators, presentation.relators + extra)


def quotient_group(table: CosetTable) -> PermGroup:
    """Permutation group of the generator action on cosets; for a
    trivial-subgroup enumeration this is the regular representation, so
    its order equals the coset count."""
    if table.status != "complete":
        raise ValueError("coset table is not complete")
    n = table.index
    perms = []
    for gi in range(len(table.presentation.generators)):
        perms.append(tuple(table.rows[c][2 * gi] for c in range(n)))
    return perm_closure(perms, degree=n, cap=max(2 * n, 16))


# ---------------------------------------------------------------------------
# Reidemeister-Schreier


def _schreier_tree(table: CosetTable) -> dict[int, tuple[int, int]]:
    """BFS spanning tree: coset -> (parent coset, column used from parent)."""
    tree: dict[int, tuple[int, int]] = {}
    seen = {0}
    frontier = [0]
    ncols = 2 * len(table.presentation.generators)
    while frontier:
        nxt = []
        for c in frontier:
            for col in range(ncols):
                d = table.rows[c][col]
                if d >= 0 and d not in seen:
                    seen.add(d)
                    tree[d] = (c, col)
                    nxt.append(d)
        frontier = nxt
    return tree


def reidemeister_schreier(presentation: Presentation, table: CosetTable) -> Presentation:
    """Presentation of the subgroup at coset 0, on Schreier generators.

    Uses the breadth-first (lexicographic) Schreier transversal; relators
    are the rewrites of every defining relator at every coset, freely
    cancelled.  Generators occurring exactly once overall are removed with
    their relator; unused generators are kept (they are free factors).
    """
    if table.status != "complete":
        raise ValueError("coset table is not complete")
    tree = _schreier_tree(table)
    tree_edges = set()
    for d, (c, col) in tree.items():
        tree_edges.add((c, col))
        tree_edges.add((d, col ^ 1))

    # one Schreier generator per non-tree forward edge (coset, generator)
    gen_name: dict[tuple[int, int], str] = {}
    for c in range(table.index):
        for gi in range(len(presentation.generators)):
            col = 2 * gi
            if (c, col) not in tree_edges:
                gen_name[(c, col)] = f"x{len(gen_name)}"

    def rewrite(start: int, word: Relator) -> list[tuple[str, int]]:
        out: list[tuple[str, int]] = []
        c = start
        for g, e in word:
            gi = presentation.generators.index(g)
            col = 2 * gi + (0 if e == 1 else 1)
            d = table.rows[c][col]
            if (c, col) not in tree_edges:
                if e == 1:
                    out.append((gen_name[(c, col)], 1))
                else:
                    # the inverse step crosses the forward edge (d, 2*gi)
                    out.append((gen_name[(d, 2 * gi)], -1))
            c = d
        assert c == start
        # free cancellation
        stack: list[tuple[str, int]] = []
        for item in out:
            if stack and stack[-1] == (item[0], -item[1]):
                stack.pop()
            else:
                stack.append(item)
        return stack

    relators = []
    for c in range(table.index):
        for rel in presentation.relators:
            r = rewrite(c, rel)
            if r:
                relators.append(tuple(r))

    generators = sorted(gen_name.values(), key=lambda s: int(s[1:]))
    return _simplify_single_occurrences(Presentation(tuple(generators), tuple(relators)))


def _simplify_single_occurrences(p: Presentation) -> Presentation:
    """Drop generators whose total occurrence count is one, together with
    the relator containing them (a Tietze move); repeat to a fixpoint."""
    gens = list(p.generators)
    rels = [list(r) for r in p.relators]
    while True:
        counts: dict[str, int] = {g: 0 for g in gens}
        where: dict[str, int] = {}
        for i, rel in enumerate(rels):
            for g, _ in rel:
                counts[g] += 1
                where[g] = i
        victim = next((g for g in gens if counts[g] == 1), None)
        if victim is None:
            break
        rels.pop(where[victim])
        gens.remove(victim)
    return Presentation(tuple(gens), tuple(tuple(r) for r in rels))


# ---------------------------------------------------------------------------
# abelian invariants


@dataclass(frozen=True)
class AbelianInvariants:
    divisors: tuple[int, ...]  # elementary divisors > 1, in a divisor chain
    free_rank: int

    def __str__(self):
        parts = [f"Z/{d}" for d in self.divisors] + ["Z"] * self.free_rank
        return " x ".join(parts) if parts else "trivial"


def relation_matrix(p: Presentation) -> list[list[int]]:
    rows = []
    for rel in p.relators:
        row = [0] * len(p.generators)
        for g, e in rel:
            row[p.generators.index(g)] += e
        rows.append(row)
    return rows


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    """Elementary divisors and free rank from the Smith normal form of the
    exponent-sum relation matrix."""
    if not p.relators:
        return AbelianInvariants((), len(p.generators))
    D, _, _ = smith_normal_form(relation_matrix(p))
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    rank = sum(1 for d in diag if d != 0)
    divisors = tuple(d for d in diag if d > 1)
    return AbelianInvariants(divisors, len(p.generators) - rank)
