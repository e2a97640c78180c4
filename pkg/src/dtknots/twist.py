"""
Twist knots C(m, 2) with gamma_4 = 2 from residue gaps of two binary forms.

    variant A:  x^2 + x + 2y^2          families C(4j + 4tk, 2)
    variant B:  x^2 + x + 2y^2 + 2y     families C(1 + 4j + 4tk, 2)

If 2j is not a value of the form mod t, every member of the family fails
the Diophantine condition(s) that give the lower bound 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

VARIANTS = ("A", "B")
MAX_MODULUS = 10**6


@dataclass(frozen=True)
class TwistFamilyResult:
    t: int
    variant: str
    j_set: tuple

    def members(self, j: int, count: int) -> list:
        """First ``count`` values of m in the family for this j."""
        base = 4 * j if self.variant == "A" else 1 + 4 * j
        return [base + 4 * self.t * k for k in range(count)]


def _check_variant(variant: str):
    if variant not in VARIANTS:
        raise ValueError(f"variant must be 'A' or 'B', got {variant!r}")


@lru_cache(maxsize=4096)
def _value_mask(t: int, variant: str) -> np.ndarray:
    r = np.arange(t, dtype=np.int64)
    xs = np.unique((r * r + r) % t)
    ys = (2 * r * r) % t if variant == "A" else (2 * r * r + 2 * r) % t
    ys = np.unique(ys)
    mask = np.zeros(t, dtype=bool)
    mask[(xs[:, None] + ys[None, :]).ravel() % t] = True
    mask.setflags(write=False)
    return mask


def value_set(t: int, variant: str) -> frozenset:
    """Residues mod t attained by the variant's form."""
    _check_variant(variant)
    if not 1 <= t <= MAX_MODULUS:
        raise ValueError(f"t must lie in [1, {MAX_MODULUS}]")
    return frozenset(np.flatnonzero(_value_mask(t, variant)).tolist())


def j_set(t: int, variant: str) -> tuple:
    """All j with 1 < j < t and 2j mod t missed by the form."""
    _check_variant(variant)
    if t < 3:
        raise ValueError("t must be at least 3")
    mask = _value_mask(t, variant)
    j = np.arange(2, t)
    return tuple(j[~mask[(2 * j) % t]].tolist())


def primitive_t_search(t_max: int, variant: Optional[str] = None) -> list:
    """Primitive t <= t_max with a nonempty j-set.

    Primitivity is judged within each variant: t is dropped when a smaller
    t of the same variant divides it.  Results come sorted by variant then t.
    """
    if not 1 <= t_max <= 10**5:
        raise ValueError("t_max must lie in [1, 10^5]")
    variants = VARIANTS if variant is None else (variant,)
    out = []
    for v in variants:
        _check_variant(v)
        found = []
        for t in range(3, t_max + 1):
            if any(t % s == 0 for s in found):
                continue
            js = j_set(t, v)
            if js:
                found.append(t)
                out.append(TwistFamilyResult(t, v, js))
    return out


@lru_cache(maxsize=None)
def _stored_results() -> tuple:
    return tuple(primitive_t_search(1000))


def twist_gamma2_member(m: int) -> Optional[TwistFamilyResult]:
    """The (t, j, variant) certificate placing C(m, 2) in a family, if any.

    Returns a result whose j_set holds the single matching j.  Families are
    tried by t, then j, variant A before B.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    hits = []
    for res in _stored_results():
        for j in res.j_set:
            base = 4 * j if res.variant == "A" else 1 + 4 * j
            if m >= base and (m - base) % (4 * res.t) == 0:
                hits.append((res.t, j, res.variant))
    if not hits:
        return None
    t, j, v = min(hits)
    return TwistFamilyResult(t, v, (j,))
