"""Pattern containment (scattered subsequence) and brute-force avoidance counts."""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterator

from .paths import DyckWord, generate_words


def contains(q: DyckWord, p: DyckWord) -> bool:
    """True iff ``p`` occurs in ``q`` as a scattered subsequence (``p <= q``)."""
    if len(p.steps) > len(q.steps):
        return False
    it = iter(q.steps)
    return all(c in it for c in p.steps)


def count_occurrences(q: DyckWord, p: DyckWord) -> int:
    """Number of index subsets of ``q`` whose induced subsequence equals ``p``."""
    m = len(p.steps)
    ways = [1] + [0] * m
    for c in q.steps:
        # descending j so each step of q is used at most once per occurrence
        for j in range(m, 0, -1):
            if p.steps[j - 1] == c:
                ways[j] += ways[j - 1]
    return ways[m]


@lru_cache(maxsize=256)
def _matcher(pattern: str):
    # [^c]*c per symbol is the greedy leftmost embedding, so no backtracking occurs
    return re.compile("".join(f"[^{c}]*{c}" for c in pattern)).match


def avoiding_words(n: int, p: DyckWord, cap: int | None = None) -> Iterator[str]:
    match = _matcher(p.steps)
    return (s for s in generate_words(n, cap=cap) if not match(s))


def avoiders(n: int, p: DyckWord, cap: int | None = None) -> Iterator[DyckWord]:
    """Stream the Dyck words of semilength ``n`` avoiding ``p``, in generation order."""
    trusted = DyckWord._trusted
    return (trusted(s) for s in avoiding_words(n, p, cap))


def count_avoiders_brute(n: int, p: DyckWord, cap: int | None = None) -> int:
    """d_n(p) by exhaustive scan of the semilength-``n`` level."""
    return sum(1 for _ in avoiding_words(n, p, cap))
