"""Catalan, Narayana and ballot numbers, plus closed-form avoidance counts for
four pattern families, cross-checked against exhaustive enumeration.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from math import comb
from typing import Optional

from .paths import DyckWord
from .patterns import count_avoiders_brute


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan index must be nonnegative, got {n}")
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """Dyck words of semilength ``n`` with exactly ``k`` peaks."""
    if n < 0 or k < 0:
        raise ValueError(f"narayana needs n, k >= 0, got ({n}, {k})")
    if n == 0 or k == 0:
        return int(n == 0 and k == 0)
    return comb(n, k) * comb(n, k - 1) // n


def binomial(n: int, k: int) -> int:
    """C(n, k) with the zero convention outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


class BallotTable:
    """Ballot numbers b(i, j) for 0 <= j <= i <= cap, built by the row recurrence
    b(i+1, j) = b(i, 0) + ... + b(i, j).

    Growing the table appends rows; rows already built are never rewritten.
    """

    def __init__(self, cap: int = 32):
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()
        self.extend(cap)

    @property
    def cap(self) -> int:
        return len(self._rows) - 1

    def extend(self, cap: int) -> None:
        with self._lock:
            while len(self._rows) <= cap:
                prev = self._rows[-1]
                row, acc = [], 0
                for j in range(len(prev) + 1):
                    acc += prev[j] if j < len(prev) else 0
                    row.append(acc)
                self._rows.append(tuple(row))

    def row(self, i: int) -> tuple[int, ...]:
        if i > self.cap:
            self.extend(i)
        return self._rows[i]

    def __call__(self, i: int, j: int) -> int:
        if i < 0 or j < 0 or j > i:
            return 0
        return self.row(i)[j]


_BALLOT = BallotTable()


def ballot(i: int, j: int) -> int:
    """Dyck prefixes with ``i`` up steps and ``j`` down steps; zero unless 0 <= j <= i."""
    return _BALLOT(i, j)


class Family(str, enum.Enum):
    STAIRCASE = "staircase"  # (UD)^k
    HILL = "hill"            # U^(k-1) D U D^(k-1)
    PYRAMID = "pyramid"      # U^k D^k
    PLATEAU = "plateau"      # U^(k-1) D^(k-1) U D


@dataclass(frozen=True)
class PatternFamily:
    family: Family
    k: int

    def __post_init__(self):
        low = 2 if self.family is Family.HILL else 1
        if self.k < low:
            raise ValueError(f"{self.family.value} needs k >= {low}, got {self.k}")

    def realize(self) -> DyckWord:
        k = self.k
        steps = {
            Family.STAIRCASE: "UD" * k,
            Family.HILL: "U" * (k - 1) + "DU" + "D" * (k - 1),
            Family.PYRAMID: "U" * k + "D" * k,
            Family.PLATEAU: "U" * (k - 1) + "D" * (k - 1) + "UD",
        }[self.family]
        word = DyckWord(steps)
        assert word.semilength == k, (self, word)
        return word

    def __str__(self) -> str:
        return f"{self.family.value}:{self.k}"


def detect_family(p: DyckWord) -> Optional[PatternFamily]:
    """The first family (in declaration order) that ``p`` realizes, if any."""
    k = p.semilength
    for fam in Family:
        try:
            candidate = PatternFamily(fam, k)
        except ValueError:
            continue
        if candidate.realize() == p:
            return candidate
    return None


def skew_diagonal_sum(k: int, n: int) -> int:
    """Sum over j >= 1 of b(k-j, n-k+j)^2."""
    return sum(ballot(k - j, n - k + j) ** 2 for j in range(1, k + 1))


def plateau_closed_form(k: int, n: int) -> int:
    """Avoiders of U^(k-1) D^(k-1) U D; valid for n >= 2k-3."""
    total = binomial(n - 1, k - 2) * catalan(k - 1)
    for s in range(2, k - 1):
        inner = sum(
            ballot(k - 3 - i, s - 2 - i) * binomial(n - k - s + 3 + 2 * i, i)
            for i in range(s - 1)
        )
        total -= ballot(k - 2, s) * inner
    return total


def plateau_polynomial(k: int, n: int) -> int:
    """Low-k polynomial specializations of :func:`plateau_closed_form`."""
    if k == 3:
        return 2 * n - 2
    if k == 4:
        num, den = 5 * n**2 - 15 * n + 6, 2
    elif k == 5:
        num, den = 14 * n**3 - 84 * n**2 + 124 * n - 84, 6
    else:
        raise ValueError(f"no polynomial specialization for k={k}")
    value, rest = divmod(num, den)
    assert rest == 0, (k, n)
    return value


def plateau_threshold(k: int) -> int:
    # n = 0 is excluded: for k = 1 the closed form reads C(-1, -1)
    return max(2 * k - 3, 1)


@dataclass(frozen=True)
class FormulaResult:
    value: int
    engine: str  # "formula" or "brute"


def _hill(k: int, n: int) -> int:
    if n < k:
        return catalan(n)
    if n == k:
        return catalan(n) - 1
    if n >= 2 * k - 3:
        value = catalan(k - 1) ** 2
        if __debug__ and n <= 2 * k - 2:
            assert skew_diagonal_sum(k, n) == value, (k, n)
        return value
    return skew_diagonal_sum(k, n)


def d_formula(fam: PatternFamily, n: int, cap: int | None = None) -> FormulaResult:
    """d_n of the family's pattern from its closed form.

    The plateau family has no closed form below n = 2k-3; there the exhaustive
    count is returned with ``engine="brute"``.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    k = fam.k
    if fam.family is Family.STAIRCASE:
        return FormulaResult(sum(narayana(n, i) for i in range(k)), "formula")
    if fam.family is Family.HILL:
        return FormulaResult(_hill(k, n), "formula")
    if fam.family is Family.PYRAMID:
        value = 0 if n >= 2 * k - 1 else skew_diagonal_sum(k, n)
        return FormulaResult(value, "formula")
    if n >= plateau_threshold(k):
        return FormulaResult(plateau_closed_form(k, n), "formula")
    return FormulaResult(count_avoiders_brute(n, fam.realize(), cap), "brute")


@dataclass(frozen=True)
class CrosscheckRow:
    n: int
    formula: int
    brute: int
    engine: str
    match: bool
    skew_sum: Optional[int] = None  # raw skew-diagonal value, hill/pyramid only


@dataclass(frozen=True)
class CrosscheckReport:
    family: PatternFamily
    rows: tuple[CrosscheckRow, ...]

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)

    def csv_rows(self) -> list[list[str]]:
        out = [["n", "formula", "brute", "engine", "match", "skew_sum"]]
        for r in self.rows:
            out.append([
                str(r.n), str(r.formula), str(r.brute), r.engine,
                "true" if r.match else "false",
                "" if r.skew_sum is None else str(r.skew_sum),
            ])
        return out


def crosscheck(fam: PatternFamily, n_max: int, cap: int | None = None) -> CrosscheckReport:
    pattern = fam.realize()
    with_skew = fam.family in (Family.HILL, Family.PYRAMID)
    rows = []
    for n in range(n_max + 1):
        result = d_formula(fam, n, cap)
        brute = count_avoiders_brute(n, pattern, cap)
        rows.append(CrosscheckRow(
            n=n,
            formula=result.value,
            brute=brute,
            engine=result.engine,
            match=result.value == brute,
            skew_sum=skew_diagonal_sum(fam.k, n) if with_skew else None,
        ))
    return CrosscheckReport(fam, tuple(rows))
