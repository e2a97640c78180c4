"""Per-knot genus reports and the grid tables built from them."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

from .bridge import canonicalize, classifying_fraction, determinant, orbit_representative
from .invariants import arf, crosscap3, sigma_plus_4arf_mod8, signature
from .obstructions import lower_bound
from .surgery import upper_bound

RANGE_SYMBOLS = {(1, 2): "12", (2, 3): "23", (1, 3): "*"}
DUPLICATE = "."
MAX_TABLE_BOUND = 300


@dataclass(frozen=True)
class GenusReport:
    input: tuple
    canonical: tuple
    fraction: str
    determinant: int
    signature: Optional[int]
    arf: Optional[int]
    sigma4arf_mod8: Optional[int]
    crosscap3: int
    lower: int
    upper: int
    value: Optional[int]
    evidence: tuple
    my_flag: bool
    duplicate_of: Optional[tuple] = None

    @property
    def symbol(self) -> str:
        if self.duplicate_of is not None:
            return DUPLICATE
        if self.value is not None:
            return str(self.value)
        return RANGE_SYMBOLS[(self.lower, self.upper)]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["input"] = list(self.input)
        d["canonical"] = list(self.canonical)
        d["evidence"] = [list(e) for e in self.evidence]
        d["duplicate_of"] = list(self.duplicate_of) if self.duplicate_of else None
        d["symbol"] = self.symbol
        return d

    def to_text(self) -> str:
        lines = [f"{k}: {v}" for k, v in self.to_dict().items() if k != "evidence"]
        lines.append("evidence:")
        lines += [f"  [{rule}] {detail}" for rule, detail in self.evidence]
        return "\n".join(lines)


def genus_report(m: int, n: int) -> GenusReport:
    c = canonicalize((m, n))
    lo, up = lower_bound(c), upper_bound(c)
    if lo.bound > up.bound:
        raise AssertionError(f"lower bound {lo.bound} exceeds upper bound {up.bound} for {c}")
    value = lo.bound if lo.bound == up.bound else None
    evidence = lo.evidence + up.evidence
    if value == 3 and m % 2 == 0 and n % 2 == 0:
        evidence += (("genus-one", f"C({m},{n}) has both parameters even, so Seifert genus 1 and "
                                   "gamma_4 <= 2 g_4 + 1 = 3; consistent with the value 3"),)
    # the unknot and torus knots have no definite Goeritz pair
    nontrivial = not (c.unknot or c.torus)
    return GenusReport(
        input=(m, n),
        canonical=c.pair,
        fraction=str(classifying_fraction(*c.pair)),
        determinant=determinant(c),
        signature=signature(c) if nontrivial else None,
        arf=arf(c) if nontrivial else None,
        sigma4arf_mod8=sigma_plus_4arf_mod8(c) if nontrivial else None,
        crosscap3=crosscap3(c),
        lower=lo.bound,
        upper=up.bound,
        value=value,
        evidence=evidence,
        my_flag=lo.my_flag,
    )


def table_cells(m_max: int, n_min: int, n_max: int) -> list:
    """Grid cells in output order: positive n block, then negative, row-major."""
    for v in (m_max, n_min, n_max):
        if abs(v) > MAX_TABLE_BOUND:
            raise ValueError(f"table bounds must be at most {MAX_TABLE_BOUND} in size")
    if m_max < 1 or n_min > n_max:
        raise ValueError("need m_max >= 1 and n_min <= n_max")
    evens = [n for n in range(n_min, n_max + 1) if n % 2 == 0 and n != 0]
    cells = []
    for block in ([n for n in evens if n > 0], [n for n in evens if n < 0]):
        cells += [(m, n) for m in range(1, m_max + 1) for n in block]
    return cells


def _report_pair(cell):
    return genus_report(*cell)


def build_table(m_max: int, n_min: int, n_max: int, workers: int = 1) -> list:
    """Reports for every cell, duplicates marked by first occurrence."""
    cells = table_cells(m_max, n_min, n_max)
    if workers <= 1:
        reports = [genus_report(m, n) for m, n in cells]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_report_pair, cells, chunksize=max(1, len(cells) // (4 * workers))))
    seen = {}
    out = []
    for cell, rep in zip(cells, reports):
        key = orbit_representative(classifying_fraction(*rep.canonical))
        if key in seen:
            rep = GenusReport(**{**rep.__dict__, "duplicate_of": seen[key]})
        else:
            seen[key] = cell
        out.append(rep)
    return out


def render_csv(reports: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "n", "symbol", "lower", "upper", "duplicate_of"])
    for r in reports:
        dup = "" if r.duplicate_of is None else f"({r.duplicate_of[0]},{r.duplicate_of[1]})"
        w.writerow([r.input[0], r.input[1], r.symbol, r.lower, r.upper, dup])
    return buf.getvalue()


def render_json(reports: list) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=1) + "\n"


def render_md(reports: list) -> str:
    parts = []
    for positive in (True, False):
        block = [r for r in reports if (r.input[1] > 0) == positive]
        if not block:
            continue
        ns = sorted({r.input[1] for r in block})
        ms = sorted({r.input[0] for r in block})
        sym = {r.input: r.symbol for r in block}
        parts.append("| m \\ n | " + " | ".join(map(str, ns)) + " |")
        parts.append("|---" * (len(ns) + 1) + "|")
        for m in ms:
            parts.append(f"| {m} | " + " | ".join(sym[(m, n)] for n in ns) + " |")
        parts.append("")
    return "\n".join(parts)


RENDERERS = {"csv": render_csv, "json": render_json, "md": render_md}
