"""Cover relation, intervals, Möbius function and saturated chains of the
Dyck pattern poset (words ordered by scattered-subsequence containment)."""

from __future__ import annotations

from dataclasses import dataclass

from .paths import DyckWord, _is_dyck, factorize, generate_all, statistics, word_key
from .patterns import contains


class NotComparableError(ValueError):
    pass


def covered_count(q: DyckWord) -> int:
    """Number of words covered by ``q``, from its factor ascents and UDU/DUD windows."""
    if q.semilength == 0:
        raise ValueError("the empty word covers nothing")
    ascents = factorize(q).ascent_counts
    st = statistics(q)
    twice = sum(a * a for a in ascents) + sum(ascents) ** 2
    return twice // 2 - st.udu_count - st.dud_count


def covering_count(q: DyckWord) -> int:
    """Number of words covering ``q``, from its factor semilengths."""
    sizes = factorize(q).semilengths
    total = sum(sizes)
    # sum_{i<j} f_i f_j = (total^2 - sum f_i^2) / 2
    squares = sum(f * f for f in sizes)
    return 1 + squares + (total * total - squares) // 2


def covered_set(q: DyckWord) -> list[DyckWord]:
    """All distinct Dyck words obtained by deleting one U and one D from ``q``, sorted."""
    s = q.steps
    ups = [i for i, c in enumerate(s) if c == "U"]
    downs = [i for i, c in enumerate(s) if c == "D"]
    found = set()
    for i in ups:
        for j in downs:
            a, b = (i, j) if i < j else (j, i)
            w = s[:a] + s[a + 1:b] + s[b + 1:]
            if w not in found and _is_dyck(w):
                found.add(w)
    return [DyckWord._trusted(w) for w in sorted(found, key=word_key)]


def covering_set(q: DyckWord) -> list[DyckWord]:
    """All distinct Dyck words obtained by inserting one U and one D into ``q``, sorted."""
    s = q.steps
    size = len(s)
    found = set()
    for i in range(size + 1):
        with_u = s[:i] + "U" + s[i:]
        with_d = s[:i] + "D" + s[i:]
        # second insertion at or after the first keeps every placement reachable once
        for j in range(i + 1, size + 2):
            for w in (with_u[:j] + "D" + with_u[j:], with_d[:j] + "U" + with_d[j:]):
                if w not in found and _is_dyck(w):
                    found.add(w)
    return [DyckWord._trusted(w) for w in sorted(found, key=word_key)]


def covers(q: DyckWord, p: DyckWord) -> bool:
    """True iff ``q`` covers ``p``; rank is semilength so no intermediate check is needed."""
    return p.semilength + 1 == q.semilength and contains(q, p)


@dataclass(frozen=True)
class HasseInterval:
    bottom: DyckWord
    top: DyckWord
    layers: tuple[tuple[DyckWord, ...], ...]
    cover_edges: tuple[tuple[DyckWord, DyckWord], ...]

    @property
    def nodes(self) -> list[DyckWord]:
        return [w for layer in self.layers for w in layer]

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def __contains__(self, w: DyckWord) -> bool:
        r = w.semilength - self.bottom.semilength
        return 0 <= r < len(self.layers) and w in self.layers[r]

    def lower_covers(self) -> dict[DyckWord, list[DyckWord]]:
        down: dict[DyckWord, list[DyckWord]] = {w: [] for w in self.nodes}
        for lo, hi in self.cover_edges:
            down[hi].append(lo)
        return down


def _require_le(bottom: DyckWord, top: DyckWord) -> None:
    if not contains(top, bottom):
        raise NotComparableError(f"{bottom.steps or '(empty)'} is not below {top.steps or '(empty)'}")


def interval(bottom: DyckWord, top: DyckWord, cap: int | None = None) -> HasseInterval:
    """The closed interval [bottom, top], filtered level by level from full generation."""
    _require_le(bottom, top)
    layers = []
    for n in range(bottom.semilength, top.semilength + 1):
        if n == bottom.semilength:
            layer = (bottom,)
        elif n == top.semilength:
            layer = (top,)
        else:
            layer = tuple(w for w in generate_all(n, cap)
                          if contains(top, w) and contains(w, bottom))
        layers.append(layer)
    edges = []
    for lower, upper in zip(layers, layers[1:]):
        for hi in upper:
            edges.extend((lo, hi) for lo in lower if contains(hi, lo))
    return HasseInterval(bottom, top, tuple(layers), tuple(edges))


def mobius_values(iv: HasseInterval) -> dict[DyckWord, int]:
    """mu(bottom, r) for every r in the interval.

    Levels are filled bottom-up, so each value is written once from values
    already fixed below it.
    """
    memo: dict[DyckWord, int] = {iv.bottom: 1}
    below: list[DyckWord] = [iv.bottom]
    for layer in iv.layers[1:]:
        for z in layer:
            memo[z] = -sum(memo[r] for r in below if contains(z, r))
        below.extend(layer)
    return memo


def mobius(bottom: DyckWord, top: DyckWord, cap: int | None = None) -> int:
    return mobius_values(interval(bottom, top, cap))[top]


def chain_counts(iv: HasseInterval) -> dict[DyckWord, int]:
    """Number of saturated chains from the bottom to each node."""
    counts = {iv.bottom: 1}
    down = iv.lower_covers()
    for layer in iv.layers[1:]:
        for w in layer:
            counts[w] = sum(counts[lo] for lo in down[w])
    return counts


def saturated_chain_count(bottom: DyckWord, top: DyckWord, cap: int | None = None) -> int:
    return chain_counts(interval(bottom, top, cap))[top]


def to_dot(iv: HasseInterval, name: str = "interval") -> str:
    """Graphviz description with one rank per semilength, edges pointing upward."""

    def label(w: DyckWord) -> str:
        return f'"{w.steps or "ε"}"'

    lines = [f"digraph {name} {{", "\trankdir=BT;", "\tnode [shape=box, fontname=monospace];"]
    for layer in iv.layers:
        lines.append("\t{ rank=same; " + " ".join(label(w) + ";" for w in layer) + " }")
    for lo, hi in iv.cover_edges:
        lines.append(f"\t{label(lo)} -> {label(hi)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(iv: HasseInterval, extra: dict | None = None) -> dict:
    """Plain-data form of an interval; all counts are decimal strings."""
    data = {
        "bottom": iv.bottom.steps,
        "top": iv.top.steps,
        "node_count": str(len(iv)),
        "edge_count": str(len(iv.cover_edges)),
        "layers": [
            {"semilength": str(iv.bottom.semilength + r), "nodes": [w.steps for w in layer]}
            for r, layer in enumerate(iv.layers)
        ],
        "edges": [[lo.steps, hi.steps] for lo, hi in iv.cover_edges],
    }
    if extra:
        data.update(extra)
    return data
