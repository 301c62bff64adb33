"""Slow, independent reference implementations used to freeze expected values.

None of these call into the library code paths they are used to check.
"""

from functools import lru_cache
from itertools import combinations, permutations, product


def is_dyck(s):
    h = 0
    for c in s:
        h += 1 if c == "U" else -1
        if h < 0:
            return False
    return h == 0


@lru_cache(maxsize=None)
def dyck_strings(n):
    """All Dyck words of semilength n by filtering {U,D}^(2n)."""
    # product("UD") already runs in U-before-D lexicographic order
    return tuple("".join(t) for t in product("UD", repeat=2 * n) if is_dyck("".join(t)))



def occurrences(q, p):
    """Count index subsets of q spelling p by listing them all."""
    return sum(1 for idx in combinations(range(len(q)), len(p)) if "".join(q[i] for i in idx) == p)


def is_subsequence(q, p):
    if not p:
        return True
    if not q:
        return False
    if q[0] == p[0]:
        return is_subsequence(q[1:], p[1:])
    return is_subsequence(q[1:], p)


def covered_by(q):
    """Words one rank below q that q contains."""
    n = len(q) // 2
    return [w for w in dyck_strings(n - 1) if is_subsequence(q, w)] if n else []


def covering(q):
    n = len(q) // 2
    return [w for w in dyck_strings(n + 1) if is_subsequence(w, q)]


def avoid_count(n, p):
    return sum(1 for w in dyck_strings(n) if not is_subsequence(w, p))


def peaks(s):
    return sum(1 for i in range(len(s) - 1) if s[i:i + 2] == "UD")


def ballot_count(i, j):
    """Dyck prefixes with i U and j D steps, by enumeration of arrangements."""
    if j > i or j < 0:
        return 0
    total = 0
    for ups in combinations(range(i + j), i):
        s = ["D"] * (i + j)
        for u in ups:
            s[u] = "U"
        h, ok = 0, True
        for c in s:
            h += 1 if c == "U" else -1
            if h < 0:
                ok = False
                break
        total += ok
    return total


def syt_by_fillings(shape):
    """Standard fillings counted over all permutations of 1..cells."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for perm in permutations(range(1, len(cells) + 1)):
        t = dict(zip(cells, perm))
        if all((i, j + 1) not in t or t[i, j] < t[i, j + 1] for i, j in cells) and all(
            (i + 1, j) not in t or t[i, j] < t[i + 1, j] for i, j in cells
        ):
            count += 1
    return count


def flip_chains(s):
    """Explicitly list every maximal DU->UD flip sequence and count them."""
    chains = [[s]]
    done = []
    while chains:
        chain = chains.pop()
        last = chain[-1]
        nexts = [last[:i] + "UD" + last[i + 2:] for i in range(len(last) - 1) if last[i:i + 2] == "DU"]
        if not nexts:
            done.append(chain)
        for w in nexts:
            chains.append(chain + [w])
    return len(done)


def area(s):
    h, total = 0, 0
    for c in s:
        h += 1 if c == "U" else -1
        total += h
    return total


def interval_nodes(bottom, top):
    nb, nt = len(bottom) // 2, len(top) // 2
    return [w for m in range(nb, nt + 1) for w in dyck_strings(m)
            if is_subsequence(top, w) and is_subsequence(w, bottom)]


def mobius(bottom, top):
    """mu by the defining recursion over the interval, no memo sharing with the library."""
    nodes = interval_nodes(bottom, top)

    @lru_cache(maxsize=None)
    def mu(z):
        if z == bottom:
            return 1
        return -sum(mu(r) for r in nodes if r != z and is_subsequence(z, r) and len(r) < len(z))

    return mu(top)


def maximal_chains(bottom, top):
    """Enumerate rank-by-rank chains from bottom to top explicitly."""
    if bottom == top:
        return 1
    nodes = interval_nodes(bottom, top)
    chains = [[bottom]]
    count = 0
    while chains:
        c = chains.pop()
        last = c[-1]
        if last == top:
            count += 1
            continue
        for w in nodes:
            if len(w) == len(last) + 2 and is_subsequence(w, last):
                chains.append(c + [w])
    return count
