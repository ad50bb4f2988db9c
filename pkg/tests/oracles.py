"""Independent reference implementations used to cross-check the package.

Nothing here shares code with src/: determinants are expanded by
cofactors, the minimum FAS is a plain sweep over all permutations, and
digraph enumeration is a direct bitmask loop.  Slow on purpose.
"""

from itertools import permutations

from klights import Digraph


def det_cofactor(rows):
    """Determinant by first-row cofactor expansion (exponential, exact)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [
            [rows[i][c] for c in range(n) if c != j]
            for i in range(1, n)
        ]
        total += (-1) ** j * rows[0][j] * det_cofactor(minor)
    return total


def sweep_min_fas(d):
    """Minimum backward-arc count over every permutation of the vertices."""
    best = len(d.arcs)
    for perm in permutations(range(d.n)):
        pos = {v: i for i, v in enumerate(perm)}
        back = sum(1 for u, v in d.arcs if pos[v] < pos[u])
        best = min(best, back)
    return best


def all_digraphs(n):
    """Every simple digraph on n vertices, one per arc-subset bitmask."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for mask in range(1 << len(pairs)):
        arcs = frozenset(p for b, p in enumerate(pairs) if mask >> b & 1)
        yield Digraph(n, arcs)


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
