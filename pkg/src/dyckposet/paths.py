"""Dyck words: parsing, factor decomposition, window statistics and generation."""

from __future__ import annotations

import enum
import functools
import os
from dataclasses import dataclass
from typing import Iterator

DEFAULT_CAP = 20
CAP_ENV_VAR = "DYCKPOSET_CAP"


class Step(str, enum.Enum):
    U = "U"
    D = "D"


class ParseReason(str, enum.Enum):
    INVALID_CHARACTER = "invalid character"
    MIXED_ALPHABET = "mixed alphabet"
    BELOW_BASELINE = "prefix dips below baseline"
    UNBALANCED = "unbalanced word"


class DyckParseError(ValueError):
    """Raised by :func:`parse`; ``position`` is 1-based."""

    def __init__(self, reason: ParseReason, position: int, text: str):
        self.reason = reason
        self.position = position
        self.text = text
        super().__init__(f"{reason.value} at position {position} in {text!r}")


class CapExceededError(ValueError):
    pass


def default_cap() -> int:
    value = os.environ.get(CAP_ENV_VAR)
    return int(value) if value else DEFAULT_CAP


def check_cap(n: int, cap: int | None = None) -> None:
    if n < 0:
        raise ValueError(f"semilength must be nonnegative, got {n}")
    limit = default_cap() if cap is None else cap
    if n > limit:
        raise CapExceededError(
            f"semilength {n} exceeds generation cap {limit} "
            f"(raise it with --cap or {CAP_ENV_VAR})"
        )


def _is_dyck(steps: str) -> bool:
    height = 0
    for c in steps:
        height += 1 if c == "U" else -1
        if height < 0:
            return False
    return height == 0


_ORDER = str.maketrans("UD", "01")


def word_key(steps: str) -> tuple[int, str]:
    """Sort key: by length, then lexicographically with U before D."""
    return len(steps), steps.translate(_ORDER)


@functools.total_ordering
@dataclass(frozen=True)
class DyckWord:
    """An immutable Dyck word stored as a string over ``'U'``/``'D'``.

    Words sort by semilength, then lexicographically with U before D, which is
    the order :func:`generate_all` yields them in.
    """

    steps: str = ""

    def __post_init__(self):
        if not isinstance(self.steps, str) or set(self.steps) - {"U", "D"}:
            raise ValueError(f"steps must be a string over 'U'/'D': {self.steps!r}")
        if not _is_dyck(self.steps):
            raise ValueError(f"not a Dyck word: {self.steps!r}")

    @classmethod
    def _trusted(cls, steps: str) -> DyckWord:
        # skips validation; only for words produced by this package
        obj = object.__new__(cls)
        object.__setattr__(obj, "steps", steps)
        return obj

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    rank = semilength

    def __lt__(self, other: DyckWord) -> bool:
        if not isinstance(other, DyckWord):
            return NotImplemented
        return word_key(self.steps) < word_key(other.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return (Step(c) for c in self.steps)

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"DyckWord({self.steps!r})"

    def heights(self) -> list[int]:
        """Heights after each step, starting with 0 for the origin."""
        out = [0]
        for c in self.steps:
            out.append(out[-1] + (1 if c == "U" else -1))
        return out

    def __add__(self, other: DyckWord) -> DyckWord:
        return DyckWord._trusted(self.steps + other.steps)


EMPTY = DyckWord._trusted("")

_ALPHABETS = {
    "U": ("U", "ud"), "D": ("D", "ud"), "u": ("U", "ud"), "d": ("D", "ud"),
    "(": ("U", "()"), ")": ("D", "()"),
    "1": ("U", "10"), "0": ("D", "10"),
}


def parse(text: str) -> DyckWord:
    """Parse a Dyck word written with U/D, parentheses or 1/0.

    Surrounding whitespace is ignored; a single word must not mix alphabets.
    """
    text = text.strip()
    alphabet = None
    height = 0
    out = []
    for pos, ch in enumerate(text, start=1):
        if ch not in _ALPHABETS:
            raise DyckParseError(ParseReason.INVALID_CHARACTER, pos, text)
        step, family = _ALPHABETS[ch]
        if alphabet is None:
            alphabet = family
        elif family != alphabet:
            raise DyckParseError(ParseReason.MIXED_ALPHABET, pos, text)
        height += 1 if step == "U" else -1
        if height < 0:
            raise DyckParseError(ParseReason.BELOW_BASELINE, pos, text)
        out.append(step)
    if height != 0:
        raise DyckParseError(ParseReason.UNBALANCED, len(text), text)
    return DyckWord._trusted("".join(out))


def render(word: DyckWord, alphabet: str = "UD") -> str:
    """Render in ``"UD"`` (canonical), ``"()"`` or ``"10"``."""
    if alphabet == "UD":
        return word.steps
    if len(alphabet) != 2:
        raise ValueError(f"alphabet must have two symbols: {alphabet!r}")
    return word.steps.translate(str.maketrans("UD", alphabet))


@dataclass(frozen=True)
class Factor:
    word: DyckWord
    semilength: int
    ascent_count: int


@dataclass(frozen=True)
class FactorDecomposition:
    factors: tuple[Factor, ...]

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def semilengths(self) -> tuple[int, ...]:
        return tuple(f.semilength for f in self.factors)

    @property
    def ascent_counts(self) -> tuple[int, ...]:
        return tuple(f.ascent_count for f in self.factors)


def _ascents(steps: str) -> int:
    return steps.count("UD")


def factorize(q: DyckWord) -> FactorDecomposition:
    """Split ``q`` at its returns to the baseline."""
    factors = []
    start = 0
    height = 0
    for i, c in enumerate(q.steps):
        height += 1 if c == "U" else -1
        if height == 0:
            piece = q.steps[start:i + 1]
            factors.append(Factor(DyckWord._trusted(piece), len(piece) // 2, _ascents(piece)))
            start = i + 1
    return FactorDecomposition(tuple(factors))


@dataclass(frozen=True)
class PathStatistics:
    peak_count: int
    udu_count: int
    dud_count: int
    ascent_count_total: int


def _window_count(steps: str, window: str) -> int:
    # overlapping occurrences; str.count would skip them
    w = len(window)
    return sum(1 for i in range(len(steps) - w + 1) if steps[i:i + w] == window)


def statistics(q: DyckWord) -> PathStatistics:
    peaks = _window_count(q.steps, "UD")
    return PathStatistics(
        peak_count=peaks,
        udu_count=_window_count(q.steps, "UDU"),
        dud_count=_window_count(q.steps, "DUD"),
        ascent_count_total=peaks,
    )


def generate_words(n: int, prefix: str = "", cap: int | None = None) -> Iterator[str]:
    """Yield the raw step strings of all Dyck words of semilength ``n`` that
    start with ``prefix``, in lexicographic order (U < D)."""
    check_cap(n, cap)
    height = 0
    for c in prefix:
        height += 1 if c == "U" else -1
        if c not in "UD" or height < 0:
            return iter(())
    ups = prefix.count("U")
    if ups > n:
        return iter(())
    return _extend(prefix, n - ups, height)


def _extend(prefix: str, ups_left: int, height: int) -> Iterator[str]:
    # iterative DFS; U is pushed last so it is explored first
    stack = [(prefix, ups_left, height)]
    while stack:
        s, u, h = stack.pop()
        if u == 0:
            yield s + "D" * h
            continue
        if h > 0:
            stack.append((s + "D", u, h - 1))
        stack.append((s + "U", u - 1, h + 1))


def generate_all(n: int, cap: int | None = None) -> Iterator[DyckWord]:
    """Lazily yield every Dyck word of semilength ``n`` once, lexicographically."""
    trusted = DyckWord._trusted
    return (trusted(s) for s in generate_words(n, cap=cap))
