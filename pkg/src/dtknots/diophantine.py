"""
Exact solvers for the Diophantine conditions that decide lattice
embeddings of Goeritz forms.

    r = s*x**2 + 2*x + y**2 (+ z**2)           solve_quad
    |a|**2 = m, |b|**2 = N, a.b = -1 in Z^3    solve_triple_system

Conditions (a)-(d) are the "no solution" forms used by the obstruction
dispatcher.  Modular certificates enumerate residues exhaustively.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import isqrt
from typing import Optional

from .bridge import _check


@dataclass(frozen=True)
class QuadSolution:
    x: int
    squares: tuple

    def evaluate(self, s: int) -> int:
        return s * self.x**2 + 2 * self.x + sum(y * y for y in self.squares)


@dataclass(frozen=True)
class TripleSystemSolution:
    row1: tuple
    row2: tuple


def is_square(v: int) -> bool:
    return v >= 0 and isqrt(v) ** 2 == v


def factorize(v: int) -> dict:
    """Trial-division factorization of a positive integer."""
    if v < 1:
        raise ValueError("factorize needs a positive integer")
    out = {}
    d = 2
    while d * d <= v:
        while v % d == 0:
            out[d] = out.get(d, 0) + 1
            v //= d
        d += 1 if d == 2 else 2
    if v > 1:
        out[v] = out.get(v, 0) + 1
    return out


def is_sum_of_two_squares(v: int) -> bool:
    if v < 0:
        return False
    if v == 0:
        return True
    return all(e % 2 == 0 for p, e in factorize(v).items() if p % 4 == 3)


def two_squares(v: int) -> Optional[tuple]:
    """Some (y, z) with y**2 + z**2 = v and 0 <= y <= z, or None."""
    if not is_sum_of_two_squares(v):
        return None
    for y in range(isqrt(v // 2) + 1):
        if is_square(v - y * y):
            return (y, isqrt(v - y * y))
    raise AssertionError(f"{v} passed the factor test but has no representation")


def x_search_bound(r: int, s: int) -> int:
    """Largest |x| with s*x**2 - 2|x| <= r."""
    return (1 + isqrt(1 + s * r)) // s


def solve_quad(r: int, s: int, extra_squares: int = 1) -> Optional[QuadSolution]:
    """Solve r = s*x**2 + 2*x + (sum of 1 or 2 squares).

    Candidates are tried in the order x = 0, 1, -1, 2, -2, ...
    """
    if r < 1 or s < 1:
        raise ValueError("solve_quad needs r, s >= 1")
    if extra_squares not in (1, 2):
        raise ValueError("extra_squares must be 1 or 2")
    _check(s * r)
    bound = x_search_bound(r, s)
    for a in range(bound + 1):
        for x in ((0,) if a == 0 else (a, -a)):
            rest = r - s * x * x - 2 * x
            if rest < 0:
                continue
            if extra_squares == 1:
                if is_square(rest):
                    return QuadSolution(x, (isqrt(rest),))
            else:
                yz = two_squares(rest)
                if yz is not None:
                    return QuadSolution(x, yz)
    return None


def condition_a(m: int, n: int) -> bool:
    """No integer solution of m = n x^2 + 2x + y^2."""
    return solve_quad(m, n, 1) is None


def condition_b(m: int, n: int) -> bool:
    """No integer solution of n = m x^2 + 2x + y^2."""
    return solve_quad(n, m, 1) is None


@lru_cache(maxsize=None)
def three_square_classes(v: int) -> tuple:
    """Sorted triples a >= b >= c >= 0 with a^2 + b^2 + c^2 = v."""
    out = []
    for a in range(isqrt(v), -1, -1):
        ra = v - a * a
        for b in range(min(a, isqrt(ra)), -1, -1):
            rb = ra - b * b
            c = isqrt(rb)
            if c * c == rb and c <= b:
                out.append((a, b, c))
    return tuple(out)


@lru_cache(maxsize=None)
def three_square_vectors(v: int) -> tuple:
    """Every integer vector of Z^3 with squared norm v."""
    vecs = set()
    for cls in three_square_classes(v):
        for perm in set(permutations(cls)):
            for signs in product((1, -1), repeat=3):
                vecs.add(tuple(s * x for s, x in zip(signs, perm)))
    return tuple(sorted(vecs))


def solve_triple_system(m: int, n_abs: int) -> Optional[TripleSystemSolution]:
    """Vectors a, b in Z^3 with |a|^2 = m, |b|^2 = n_abs, a.b = -1.

    Signed permutations act on both rows at once, so the first row only
    needs one representative per class.
    """
    if m < 1 or n_abs < 1:
        raise ValueError("norms must be positive")
    seconds = three_square_vectors(n_abs)
    for row1 in three_square_classes(m):
        for row2 in seconds:
            if row1[0] * row2[0] + row1[1] * row2[1] + row1[2] * row2[2] == -1:
                return TripleSystemSolution(row1, row2)
    return None


def condition_c(m: int, n_abs: int) -> bool:
    """No solution of the three-squares inner product system."""
    return solve_triple_system(m, abs(n_abs)) is None


def condition_d(m: int, n: int) -> bool:
    return m != 4 and n != -4 and (m, n) != (5, -2)


# each form is a sum of two univariate polynomials in separate variables
FORMS = {
    "x^2+(x+1)^2+z^2": (lambda x: x * x + (x + 1) ** 2, lambda z: z * z),
    "x^2+(3x+1)^2+y^2": (lambda x: x * x + (3 * x + 1) ** 2, lambda y: y * y),
    "x^2+x+2y^2": (lambda x: x * x + x, lambda y: 2 * y * y),
    "x^2+x+2y^2+2y": (lambda x: x * x + x, lambda y: 2 * y * y + 2 * y),
}


def form_values(form: str, modulus: int) -> set:
    """Residues mod modulus attained by the form."""
    if form not in FORMS:
        raise KeyError(f"unknown form {form!r}")
    f, g = FORMS[form]
    a = {f(v) % modulus for v in range(modulus)}
    b = {g(v) % modulus for v in range(modulus)}
    return {(u + w) % modulus for u in a for w in b}


def modular_unsolvable(form: str, target: int, modulus: int) -> bool:
    """True iff form = target has no solution modulo modulus."""
    if form not in FORMS:
        raise KeyError(f"unknown form {form!r}")
    if not 1 <= modulus <= 10**6:
        raise ValueError("modulus must lie in [1, 10^6]")
    f, g = FORMS[form]
    a = {f(v) % modulus for v in range(modulus)}
    b = {g(v) % modulus for v in range(modulus)}
    t = target % modulus
    return not any((t - u) % modulus in b for u in a)
