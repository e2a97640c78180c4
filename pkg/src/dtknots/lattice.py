"""
Brute-force decision of isometric embeddings of a definite integral form
into the diagonal lattice (Z^d, +-Id).

The search places one domain vector at a time.  Codomain columns already
used by earlier vectors are enumerated coordinate by coordinate, pruned by
exact inner products and a Cauchy-Schwarz bound on what is left; columns
not yet used by anything are interchangeable up to sign, so a new vector
only ever fills them with a nonincreasing tail of positive entries.
This is exhaustive: a ``None`` answer means no embedding exists.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterator, Optional

from .bridge import DoubleTwist, canonicalize, determinant
from .invariants import GramForm, goeritz_pair, tridiagonal

DEFAULT_NODE_BUDGET = 10**8
MAX_RANK = 14
MAX_DIAGONAL = 200


class OracleBudgetExceeded(RuntimeError):
    """The search gave up; this is not a proof that no embedding exists."""


@dataclass(frozen=True)
class EmbeddingWitness:
    rows: tuple
    sign: int = 1

    def gram(self) -> tuple:
        return tuple(
            tuple(self.sign * sum(a * b for a, b in zip(u, v)) for v in self.rows)
            for u in self.rows
        )

    def reproduces(self, target: GramForm) -> bool:
        return self.gram() == target.entries


@dataclass(frozen=True)
class PathGraphSpec:
    """Weighted path: k vertices of weight -2, one of -3, ell of -2."""

    k: int
    ell: int

    def form(self) -> GramForm:
        if self.k < 1 or self.ell < 0 or self.ell % 2:
            raise ValueError("need k >= 1 and ell even >= 0")
        diag = [-2] * self.k + [-3] + [-2] * self.ell
        return GramForm(tuple(map(tuple, tridiagonal(diag, 1))), -1)

    @property
    def codomain_rank(self) -> int:
        return self.k + self.ell + 2


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget):
        self.nodes = 0
        self.budget = budget

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise OracleBudgetExceeded(f"node budget {self.budget} exceeded")


@lru_cache(maxsize=None)
def _tails(budget: int, slots: int, cap: int) -> tuple:
    """Nonincreasing positive sequences, entries <= cap, squares summing to budget."""
    if budget == 0:
        return ((),)
    if slots == 0:
        return ()
    out = []
    for v in range(min(cap, isqrt(budget)), 0, -1):
        if v * v * slots < budget:
            break
        for rest in _tails(budget - v * v, slots - 1, v):
            out.append((v,) + rest)
    return tuple(out)


def _value_order(lim: int):
    yield 0
    for a in range(1, lim + 1):
        yield a
        yield -a


def _row_order(g) -> list:
    r = len(g)
    placed = []
    left = set(range(r))
    while left:
        def key(i):
            links = sum(1 for j in placed if g[i][j] != 0)
            deg = sum(1 for j in range(r) if j != i and g[i][j] != 0)
            return (-links, g[i][i], -deg, i)
        i = min(left, key=key)
        placed.append(i)
        left.remove(i)
    return placed


def _candidates(norm, targets, prev, t, d, counter) -> Iterator[list]:
    """All admissible vectors for the next domain element.

    ``prev`` are earlier image vectors, supported on columns [0, t).
    """
    k = len(prev)
    # suffix[j][c]: squared norm of prev[j] on columns >= c
    suffix = []
    for row in prev:
        s = [0] * (t + 1)
        for c in range(t - 1, -1, -1):
            s[c] = s[c + 1] + row[c] * row[c]
        suffix.append(s)
    touching = [[j for j in range(k) if prev[j][c]] for c in range(t)]
    vec = [0] * t
    partial = [0] * k

    def rec(c, budget):
        if c == t:
            if partial != targets:
                return
            for tail in _tails(budget, d - t, budget):
                yield vec + list(tail) + [0] * (d - t - len(tail))
            return
        for v in _value_order(isqrt(budget)):
            counter.tick()
            rest = budget - v * v
            for j in touching[c]:
                partial[j] += prev[j][c] * v
            ok = True
            for j in range(k):
                gap = targets[j] - partial[j]
                if gap and gap * gap > rest * suffix[j][c + 1]:
                    ok = False
                    break
            if ok:
                vec[c] = v
                yield from rec(c + 1, rest)
            for j in touching[c]:
                partial[j] -= prev[j][c] * v
        vec[c] = 0

    yield from rec(0, norm)


def _validate(target: GramForm, codomain_rank: int, max_rank: int):
    if target.rank > max_rank:
        raise ValueError(f"rank {target.rank} exceeds the oracle limit {max_rank}")
    if codomain_rank < target.rank:
        raise ValueError("codomain rank must be at least the rank of the target")
    if any(abs(target[i, i]) > MAX_DIAGONAL for i in range(target.rank)):
        raise ValueError(f"diagonal entries must be at most {MAX_DIAGONAL} in size")
    if not target.is_definite():
        raise ValueError("target form is not definite with the declared sign")


def iter_embeddings(
    target: GramForm,
    codomain_rank: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_rank: int = MAX_RANK,
) -> Iterator[EmbeddingWitness]:
    """Every embedding up to signed permutations of the codomain basis."""
    _validate(target, codomain_rank, max_rank)
    sign = target.sign
    g = target.entries if sign > 0 else target.negated().entries
    order = _row_order(g)
    counter = _Counter(node_budget)
    d = codomain_rank
    images = []
    used = [0]

    def place(idx):
        if idx == len(order):
            rows = [None] * len(order)
            for pos, i in enumerate(order):
                rows[i] = tuple(images[pos])
            w = EmbeddingWitness(tuple(rows), sign)
            assert w.reproduces(target), "oracle produced an invalid witness"
            yield w
            return
        i = order[idx]
        targets = [g[i][j] for j in order[:idx]]
        t = used[0]
        prev = [row[:t] for row in images]
        for cand in _candidates(g[i][i], targets, prev, t, d, counter):
            images.append(cand)
            new_t = max(t, max((c + 1 for c in range(d) if cand[c]), default=0))
            used[0] = new_t
            yield from place(idx + 1)
            used[0] = t
            images.pop()

    yield from place(0)


def embed_gram(
    target: GramForm,
    codomain_rank: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_rank: int = MAX_RANK,
) -> Optional[EmbeddingWitness]:
    """A witness embedding ``target`` into (Z^codomain_rank, sign*Id), or None."""
    return next(iter_embeddings(target, codomain_rank, node_budget, max_rank), None)


def jk_form(k, case: int, epsilon: int) -> tuple:
    """The form and codomain rank tested by the given obstruction case.

    Cases 1-3 embed G_eps + [eps det] at equal rank (case 1 uses the
    positive form, case 2 the negative one); case 4 embeds G_eps alone into
    two extra dimensions.
    """
    m, n = (k.m, k.n) if isinstance(k, DoubleTwist) else k
    if case not in (1, 2, 3, 4) or epsilon not in (1, -1):
        raise ValueError("case must be 1..4 and epsilon +-1")
    if (case == 1 and epsilon != 1) or (case == 2 and epsilon != -1):
        raise ValueError(f"case {case} fixes epsilon = {1 if case == 1 else -1}")
    g = goeritz_pair(m, n, epsilon)
    if case == 4:
        return g, g.rank + 2
    return g.direct_sum(epsilon * determinant((m, n))), g.rank + 1


def jk_embedding_exists(k, case: int, epsilon: int, node_budget: int = DEFAULT_NODE_BUDGET,
                        max_rank: int = MAX_RANK) -> bool:
    form, rank = jk_form(k, case, epsilon)
    return embed_gram(form, rank, node_budget, max_rank) is not None


def scaled_charge_monotonicity_check(g: GramForm, ell: int, j: int,
                                     node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Embedding of g + [eps ell] implies one of g + [eps ell j^2], same rank."""
    eps = g.sign
    base = g.direct_sum(eps * ell)
    if embed_gram(base, base.rank, node_budget) is None:
        return True
    scaled = g.direct_sum(eps * ell * j * j)
    return embed_gram(scaled, scaled.rank, node_budget) is not None


def is_normalized_chain(rows) -> bool:
    """Rows equal f_i - f_{i+1} after a signed permutation of the codomain."""
    supports = []
    for r in rows:
        nz = [c for c, v in enumerate(r) if v]
        if len(nz) != 2 or any(abs(r[c]) != 1 for c in nz):
            return False
        supports.append(set(nz))
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            shared = supports[a] & supports[b]
            if b == a + 1:
                if len(shared) != 1:
                    return False
                c = shared.pop()
                if rows[a][c] * rows[b][c] != -1:
                    return False
            elif shared:
                return False
    return True
