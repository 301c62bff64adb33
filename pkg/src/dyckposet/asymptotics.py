"""Ingredients of the conjectured growth rate of d_n(P) and an exact-ratio report.

For a pattern of semilength x starting with a U steps and ending with b D
steps the conjectured asymptotic is alpha * C_a * C_b / k! * n^k with
k = 2x - 2 - a - b, where alpha counts saturated chains from P up to U^x D^x
in the Dyck lattice (one cover = one DU -> UD flip).  Nothing here decides
whether the conjecture holds; the report only lays exact numbers side by side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Optional

from .paths import DyckWord, check_cap
from .patterns import count_avoiders_brute
from .sequences import catalan, d_formula, detect_family


class AlphaMismatchError(RuntimeError):
    """The hook-length count and the flip-chain count disagree."""


def leading_runs(p: DyckWord) -> tuple[int, int]:
    """Lengths of the leading U run and the trailing D run."""
    if p.semilength == 0:
        raise ValueError("leading_runs needs a nonempty pattern")
    s = p.steps
    return len(s) - len(s.lstrip("U")), len(s) - len(s.rstrip("D"))


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        if any(x <= 0 for x in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def cell_count(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > c) for c in range(self.parts[0])))


def complement_shape(p: DyckWord) -> Partition:
    """Ferrers shape of the region between ``p`` and U^x D^x.

    Row j has one cell per U step lying after the j-th D step.
    """
    parts = []
    ups_after = p.steps.count("U")
    for c in p.steps:
        if c == "U":
            ups_after -= 1
        elif ups_after:
            parts.append(ups_after)
    return Partition(tuple(parts))


def syt_count(shape: Partition) -> int:
    """Standard Young tableaux of ``shape`` by the hook-length formula."""
    cols = shape.conjugate().parts
    hooks = prod(
        (row - j - 1) + (cols[j] - i - 1) + 1
        for i, row in enumerate(shape.parts)
        for j in range(row)
    )
    return factorial(shape.cell_count) // hooks


@lru_cache(maxsize=None)
def _flip_chains(steps: str) -> int:
    total = 0
    i = steps.find("DU")
    while i != -1:
        total += _flip_chains(steps[:i] + "UD" + steps[i + 2:])
        i = steps.find("DU", i + 1)
    return total if total else 1


def dyck_lattice_chain_count(p: DyckWord) -> int:
    """Maximal DU -> UD flip sequences from ``p`` to U^x D^x."""
    return _flip_chains(p.steps)


def alpha(p: DyckWord, checked: bool = True) -> int:
    value = syt_count(complement_shape(p))
    if checked:
        other = dyck_lattice_chain_count(p)
        if other != value:
            raise AlphaMismatchError(
                f"{p.steps}: hook-length count {value} != flip-chain count {other}"
            )
    return value


@dataclass(frozen=True)
class ReportRow:
    n: int
    d_n: int
    n_pow: int
    ratio: Optional[Fraction]
    engine: str


@dataclass(frozen=True)
class ConjectureReport:
    pattern: DyckWord
    x: int
    a: int
    b: int
    k_exp: int
    alpha: int
    predicted_constant: Optional[Fraction]
    rows: tuple[ReportRow, ...] = field(default=())

    @property
    def degenerate(self) -> bool:
        # only U^x D^x gives k < 0; its d_n is eventually zero
        return self.k_exp < 0

    @property
    def trailing_ratio(self) -> Optional[Fraction]:
        return self.rows[-1].ratio if self.rows else None

    @property
    def agrees_exactly(self) -> bool:
        return self.trailing_ratio is not None and self.trailing_ratio == self.predicted_constant

    @property
    def difference_estimate(self) -> Optional[Fraction]:
        """k-th forward difference of the last k+1 values of d_n, over k!.

        Exact leading coefficient whenever d_n is a degree-k polynomial over
        those rows.
        """
        if self.degenerate or len(self.rows) < self.k_exp + 1:
            return None
        tail = [r.d_n for r in self.rows[-(self.k_exp + 1):]]
        for _ in range(self.k_exp):
            tail = [b - a for a, b in zip(tail, tail[1:])]
        return Fraction(tail[0], factorial(self.k_exp))

    @property
    def divergent(self) -> bool:
        """Trailing ratio differs from the predicted constant."""
        return not self.degenerate and not self.agrees_exactly

    def csv_rows(self) -> list[list[str]]:
        out = [["n", "d_n", "n^k", "ratio_num", "ratio_den", "engine"]]
        for r in self.rows:
            num, den = ("", "") if r.ratio is None else (str(r.ratio.numerator), str(r.ratio.denominator))
            out.append([str(r.n), str(r.d_n), str(r.n_pow), num, den, r.engine])
        return out

    def to_json(self) -> dict:
        def frac(f: Optional[Fraction]):
            return None if f is None else {"num": str(f.numerator), "den": str(f.denominator)}

        return {
            "pattern": self.pattern.steps,
            "x": str(self.x),
            "a": str(self.a),
            "b": str(self.b),
            "k": str(self.k_exp),
            "alpha": str(self.alpha),
            "predicted_constant": frac(self.predicted_constant),
            "trailing_ratio": frac(self.trailing_ratio),
            "agrees_exactly": self.agrees_exactly,
            "difference_estimate": frac(self.difference_estimate),
            "divergent": self.divergent,
            "degenerate": self.degenerate,
            "rows": [
                {"n": str(r.n), "d_n": str(r.d_n), "n^k": str(r.n_pow),
                 "ratio": frac(r.ratio), "engine": r.engine}
                for r in self.rows
            ],
        }


def conjecture_report(p: DyckWord, n_max: int, n_min: int = 1,
                      cap: int | None = None) -> ConjectureReport:
    """Exact d_n and d_n / n^k for n_min <= n <= n_max next to the predicted constant.

    Patterns from one of the four closed-form families skip enumeration, so
    their n_max is not bound by the generation cap.
    """
    x = p.semilength
    a, b = leading_runs(p)
    k_exp = 2 * x - 2 - a - b
    assert k_exp >= 0 or (a == x and b == x), (p, k_exp)
    al = alpha(p)
    predicted = None if k_exp < 0 else Fraction(al * catalan(a) * catalan(b), factorial(k_exp))

    fam = detect_family(p)
    if fam is None:
        check_cap(n_max, cap)
    rows = []
    for n in range(max(n_min, 0), n_max + 1):
        if fam is not None:
            res = d_formula(fam, n, cap)
            value, engine = res.value, res.engine
        else:
            value, engine = count_avoiders_brute(n, p, cap), "brute"
        if k_exp < 0:
            n_pow, ratio = 0, None
        else:
            n_pow = n ** k_exp
            ratio = Fraction(value, n_pow) if n_pow else None
        rows.append(ReportRow(n, value, n_pow, ratio, engine))
    return ConjectureReport(p, x, a, b, k_exp, al, predicted, tuple(rows))
