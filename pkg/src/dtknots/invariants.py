"""
Classical invariants of double twist knots C(m, n), m > 0 and n even:
signature, Arf invariant, sigma + 4 Arf (mod 8), crosscap number and the
definite Goeritz forms of the alternating diagrams.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bridge import DoubleTwist, canonicalize


@dataclass(frozen=True)
class GramForm:
    """Symmetric integer matrix together with its claimed definiteness."""

    entries: tuple
    sign: int = 1

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        r = len(rows)
        if any(len(row) != r for row in rows):
            raise ValueError("Gram matrix must be square")
        for i in range(r):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list:
        return [list(row) for row in self.entries]

    def negated(self) -> "GramForm":
        return GramForm(tuple(tuple(-x for x in row) for row in self.entries), -self.sign)

    def direct_sum(self, other) -> "GramForm":
        """Block sum with another form, or with the 1x1 form [other]."""
        if isinstance(other, int):
            other = GramForm(((other,),), self.sign)
        a, b = self.rank, other.rank
        rows = [list(row) + [0] * b for row in self.entries]
        rows += [[0] * a + list(row) for row in other.entries]
        return GramForm(tuple(map(tuple, rows)), self.sign)

    def determinant(self) -> int:
        return bareiss_determinant(self.tolist())

    def leading_minors(self) -> list:
        rows = self.tolist()
        return [bareiss_determinant([r[:k] for r in rows[:k]]) for k in range(1, self.rank + 1)]

    def is_definite(self) -> bool:
        """Sylvester's criterion for the declared sign."""
        for k, d in enumerate(self.leading_minors(), start=1):
            if d == 0 or (d > 0) != (self.sign > 0 or k % 2 == 0):
                return False
        return True


def bareiss_determinant(rows) -> int:
    """Exact determinant by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def tridiagonal(diagonal, off: int = -1) -> list:
    r = len(diagonal)
    rows = [[0] * r for _ in range(r)]
    for i, d in enumerate(diagonal):
        rows[i][i] = d
        if i + 1 < r:
            rows[i][i + 1] = rows[i + 1][i] = off
    return rows


def _params(k) -> tuple:
    c = canonicalize(k)
    if c.unknot or c.torus:
        raise ValueError(f"{c} is not a nontrivial double twist knot with m > 1")
    return c.m, c.n


def _raw(k) -> tuple:
    # signature and Arf follow the given parameterization; the +-2 cells of
    # sigma + 4 Arf flip under mirror image, so no canonicalization here
    m, n = (k.m, k.n) if isinstance(k, DoubleTwist) else k
    if m <= 0 or n == 0 or n % 2:
        raise ValueError(f"need m > 0 and n even nonzero, got ({m},{n})")
    return m, n


def signature(k) -> int:
    m, n = _raw(k)
    if n > 0:
        return n if m % 2 else 0
    return n + 2 if m % 2 else 2


def arf(k) -> int:
    m, n = _raw(k)
    if m % 2 == 0:
        return (m * n // 4) % 2
    return (n * (2 * m + n) // 8) % 2


def normalize_mod8(v: int) -> int:
    """Residue of an even integer mod 8 in {0, 2, 4, -2}."""
    r = v % 8
    return -2 if r == 6 else r


def sigma_plus_4arf_mod8(k) -> int:
    return normalize_mod8(signature(k) + 4 * arf(k))


def crosscap3(k) -> int:
    c = canonicalize(k)
    if c.unknot:
        return 0
    if c.torus:
        return 1
    m, n = c.m, c.n
    if m % 2 or m == 2 or abs(n) == 2:
        return 2
    return 3


@dataclass(frozen=True)
class InvariantSheet:
    signature: int
    arf: int
    sigma4arf_mod8: int
    crosscap3: int


def invariant_sheet(k) -> InvariantSheet:
    c = canonicalize(k)
    if c.unknot:
        return InvariantSheet(0, 0, 0, 0)
    return InvariantSheet(signature(c), arf(c), sigma_plus_4arf_mod8(c), crosscap3(c))


def goeritz_pair(m: int, n: int, sign: int) -> GramForm:
    """Goeritz form of the alternating diagram for the raw pair (m, n).

    No canonicalization happens here, so the flype-degenerate case n = -2 is
    available (it is the path with the -3 vertex at the end).
    """
    if m < 2 or n == 0 or n % 2:
        raise ValueError(f"Goeritz forms need m > 1 and n even nonzero, got ({m},{n})")
    if n > 0:
        if sign > 0:
            rows = tridiagonal([2] * (n - 1) + [m + 1], -1)
        else:
            rows = tridiagonal([-2] * (m - 1) + [-(n + 1)], 1)
        return GramForm(tuple(map(tuple, rows)), sign)
    a = -n
    if sign > 0:
        return GramForm(((m, -1), (-1, a)), 1)
    diag = [-2] * (m - 2) + [-3] + [-2] * (a - 2)
    return GramForm(tuple(map(tuple, tridiagonal(diag, 1))), -1)


def goeritz(k, sign: int) -> GramForm:
    """Definite Goeritz form G+/G- (n > 0) or its analogue for n < 0."""
    if isinstance(k, DoubleTwist) and canonicalize(k).pair != k.pair:
        raise ValueError(f"{k} is not canonical")
    if not isinstance(k, DoubleTwist) and canonicalize(k).pair != tuple(k):
        raise ValueError(f"C{tuple(k)} is not canonical")
    m, n = _params(k)
    return goeritz_pair(m, n, sign)


# reference (sigma + 4 Arf) mod 8 table indexed by (m mod 4, n mod 4, n > 0)
SIGMA4ARF_TABLE = {
    (0, 0, True): 0, (0, 2, True): 0, (0, 0, False): 2, (0, 2, False): 2,
    (1, 0, True): 0, (1, 2, True): -2, (1, 0, False): 2, (1, 2, False): 0,
    (2, 0, True): 0, (2, 2, True): 4, (2, 0, False): 2, (2, 2, False): -2,
    (3, 0, True): 0, (3, 2, True): 2, (3, 0, False): 2, (3, 2, False): 4,
}
