"""Feedback arc sets, their shapes, and closed-form winnability tests.

Given an ordering of the vertices, the feedback arcs are the ones that
point backward.  For strongly connected tournaments, when some
minimum-size feedback arc set induces a directed path or a directed
star, winnability has a closed form: a gcd with a Fibonacci number for
paths, a gcd with the number of feedback intervals for stars.  This
module computes those shapes exactly and builds the two families of
integer matrices whose determinants certify the formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd

from .digraph import Arc, Digraph, arc_induced_subgraph, check_ordering
from .errors import CapacityError, InputError
from .modalg import IntMatrix

MIN_FAS_MAX_N = 20
ALL_MIN_FAS_MAX_N = 8


@dataclass(frozen=True)
class FeedbackArcSet:
    """The backward arcs of one specific vertex ordering."""

    ordering: tuple[int, ...]
    arcs: frozenset[Arc]

    @property
    def size(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.arcs))


@dataclass(frozen=True)
class FeedbackInterval:
    """A maximal run of same-kind feedback vertices, consecutive in the ordering."""

    vertices: tuple[int, ...]
    kind: str  # "head", "tail" or "center"


@dataclass(frozen=True)
class ArcInducedClass:
    """Shape of the subgraph induced by a feedback arc set.

    ``kind`` is one of "empty", "path", "star", "other".  For a path,
    ``path_arcs`` holds the arc count; for a star, ``star_in`` and
    ``star_out`` count the center's in- and out-arcs and ``intervals``
    the feedback-interval count of the witnessing ordering.
    """

    kind: str
    path_arcs: int | None = None
    star_in: int | None = None
    star_out: int | None = None
    intervals: int | None = None

    def describe(self) -> str:
        if self.kind == "empty":
            return "empty"
        if self.kind == "path":
            return f"directed path, m={self.path_arcs}"
        if self.kind == "star":
            return (
                f"directed star ({self.star_in} in, {self.star_out} out), "
                f"m={self.intervals}"
            )
        return "other"

    def short(self) -> str:
        if self.kind == "path":
            return f"path:{self.path_arcs}"
        if self.kind == "star":
            return f"star:{self.intervals}"
        return self.kind


def feedback_arcs_of_ordering(d: Digraph, ordering: tuple[int, ...]) -> FeedbackArcSet:
    """The arcs of d that point backward with respect to the ordering."""
    perm = check_ordering(d, ordering)
    pos = {v: i for i, v in enumerate(perm)}
    back = frozenset(a for a in d.arcs if pos[a[1]] < pos[a[0]])
    return FeedbackArcSet(perm, back)


def min_fas_size(d: Digraph) -> int:
    """Smallest feedback arc set size over all orderings, exactly.

    Subset dynamic program: placing v last among a set S turns the arcs
    from v into S into backward arcs, so
    f(S) = min over v in S of f(S minus v) + |out(v) within S minus v|.
    """
    if d.n > MIN_FAS_MAX_N:
        raise CapacityError(f"minimum FAS supports n <= {MIN_FAS_MAX_N}, got {d.n}")
    n = d.n
    out_mask = [0] * n
    for u, v in d.arcs:
        out_mask[u] |= 1 << v
    f = [0] * (1 << n)
    for s in range(1, 1 << n):
        best = None
        rest = s
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            prev = s & ~(1 << v)
            cost = f[prev] + (out_mask[v] & prev).bit_count()
            if best is None or cost < best:
                best = cost
        f[s] = best
    return f[(1 << n) - 1]


def min_fas_witness(d: Digraph) -> FeedbackArcSet:
    """One ordering achieving the minimum feedback arc set size.

    Reconstructed from the subset table of :func:`min_fas_size`, so it
    shares that function's capacity; ties go to the smallest vertex,
    making the witness deterministic.
    """
    if d.n > MIN_FAS_MAX_N:
        raise CapacityError(f"minimum FAS supports n <= {MIN_FAS_MAX_N}, got {d.n}")
    n = d.n
    out_mask = [0] * n
    for u, v in d.arcs:
        out_mask[u] |= 1 << v
    f = [0] * (1 << n)
    for s in range(1, 1 << n):
        best = None
        rest = s
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            prev = s & ~(1 << v)
            cost = f[prev] + (out_mask[v] & prev).bit_count()
            if best is None or cost < best:
                best = cost
        f[s] = best
    order_rev = []
    s = (1 << n) - 1
    while s:
        pick = None
        pick_cost = None
        for v in range(n):
            if not s >> v & 1:
                continue
            prev = s & ~(1 << v)
            cost = f[prev] + (out_mask[v] & prev).bit_count()
            if pick_cost is None or cost < pick_cost:
                pick, pick_cost = v, cost
        order_rev.append(pick)
        s &= ~(1 << pick)
    ordering = tuple(reversed(order_rev))
    return feedback_arcs_of_ordering(d, ordering)


def all_minimum_fas(d: Digraph) -> list[FeedbackArcSet]:
    """Every minimum-size feedback arc set, one witnessing ordering each.

    Sweeps all n! orderings, keeps the arc sets of minimum size, and
    deduplicates; the witness kept for each arc set is the
    lexicographically first ordering that produces it.  Output is
    sorted by arc set, so the result is fully deterministic.
    """
    if d.n > ALL_MIN_FAS_MAX_N:
        raise CapacityError(f"FAS enumeration supports n <= {ALL_MIN_FAS_MAX_N}, got {d.n}")
    best = None
    found: dict[frozenset[Arc], tuple[int, ...]] = {}
    pos = [0] * d.n
    for perm in permutations(range(d.n)):
        for i, v in enumerate(perm):
            pos[v] = i
        back = frozenset(a for a in d.arcs if pos[a[1]] < pos[a[0]])
        size = len(back)
        if best is None or size < best:
            best = size
            found = {back: perm}
        elif size == best and back not in found:
            found[back] = perm
    return [
        FeedbackArcSet(found[arcs], arcs)
        for arcs in sorted(found, key=lambda s: tuple(sorted(s)))
    ]


def check_min_fas_gap(fas: FeedbackArcSet) -> bool:
    """True iff every backward arc spans at least two positions.

    For minimum feedback arc sets this always holds: an arc between
    adjacent positions could be removed from the set by swapping them.
    """
    pos = {v: i for i, v in enumerate(fas.ordering)}
    return all(pos[u] - pos[v] >= 2 for u, v in fas.arcs)


def feedback_intervals(
    ordering: tuple[int, ...], arcs: frozenset[Arc]
) -> tuple[FeedbackInterval, ...]:
    """Maximal same-kind runs of feedback vertices, consecutive in the ordering.

    A vertex is a head or tail feedback vertex as it heads or tails some
    backward arc.  A vertex playing both roles, or one incident to every
    backward arc of a multi-arc set (a star center), counts as "center"
    and contributes a single interval of its own.
    """
    heads = {v for _, v in arcs}
    tails = {u for u, _ in arcs}

    def kind_of(v: int) -> str | None:
        h, t = v in heads, v in tails
        if not (h or t):
            return None
        if h and t:
            return "center"
        if len(arcs) >= 2 and all(v in a for a in arcs):
            return "center"
        return "head" if h else "tail"

    intervals: list[FeedbackInterval] = []
    run: list[int] = []
    run_kind: str | None = None
    for v in ordering:
        k = kind_of(v)
        if k is not None and k == run_kind:
            run.append(v)
            continue
        if run:
            intervals.append(FeedbackInterval(tuple(run), run_kind))
        run = [v] if k is not None else []
        run_kind = k
    if run:
        intervals.append(FeedbackInterval(tuple(run), run_kind))
    return tuple(intervals)


def classify_arc_induced(d: Digraph, fas: FeedbackArcSet) -> ArcInducedClass:
    """Shape of the subgraph induced by the feedback arcs.

    A single arc is reported as a path with one arc rather than a star;
    the two winnability predictions coincide there, so nothing is lost.
    """
    if not fas.arcs:
        return ArcInducedClass("empty")
    sub, _ = arc_induced_subgraph(d, fas.arcs)
    if _is_directed_path(sub):
        return ArcInducedClass("path", path_arcs=len(sub.arcs))
    center = _star_center(sub)
    if center is not None:
        return ArcInducedClass(
            "star",
            star_in=len(sub.in_lists[center]),
            star_out=len(sub.out_lists[center]),
            intervals=len(feedback_intervals(fas.ordering, fas.arcs)),
        )
    return ArcInducedClass("other")


def _is_directed_path(d: Digraph) -> bool:
    if d.n == 0 or len(d.arcs) != d.n - 1:
        return False
    starts = []
    for v in range(d.n):
        if len(d.out_lists[v]) > 1 or len(d.in_lists[v]) > 1:
            return False
        if not d.in_lists[v]:
            starts.append(v)
    if len(starts) != 1:
        return False
    v, steps = starts[0], 0
    while d.out_lists[v]:
        v = d.out_lists[v][0]
        steps += 1
    return steps == d.n - 1


def _star_center(d: Digraph) -> int | None:
    if d.n != len(d.arcs) + 1:
        return None
    for c in range(d.n):
        if len(d.out_lists[c]) + len(d.in_lists[c]) == len(d.arcs):
            if all(c in a for a in d.arcs):
                return c
    return None


def fibonacci_mod(n: int, k: int) -> int:
    """The n-th Fibonacci number modulo k (F_0 = 0, F_1 = 1)."""
    if n < 0:
        raise InputError(f"index must be >= 0, got {n}")
    if k < 2:
        raise InputError(f"modulus must be >= 2, got {k}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, (a + b) % k
    return a


def predict_k_aw_path(m: int, k: int) -> bool:
    """Winnability of a strong tournament whose minimum FAS induces a path.

    With m backward arcs on the path, every labeling is winnable exactly
    when k shares no factor with the Fibonacci number F_{m+2}.  Working
    modulo k is enough: gcd(k, F mod k) = gcd(k, F).
    """
    if m < 1:
        raise InputError(f"path arc count must be >= 1, got {m}")
    if k < 2:
        raise InputError(f"k must be >= 2, got {k}")
    return gcd(k, fibonacci_mod(m + 2, k)) == 1


def predict_k_aw_star(m: int, k: int) -> bool:
    """Winnability of a strong tournament whose minimum FAS induces a star.

    Here m is the feedback-interval count of the witnessing ordering
    (head runs, tail runs, and the center); every labeling is winnable
    exactly when gcd(k, m) = 1.
    """
    if m < 2:
        raise InputError(f"interval count must be >= 2, got {m}")
    if k < 2:
        raise InputError(f"k must be >= 2, got {k}")
    return gcd(k, m) == 1


def build_path_matrix(m: int) -> IntMatrix:
    """The m x m banded matrix whose determinant is F_{m+2}.

    Ones on the diagonal (the last entry is 2) and superdiagonal, minus
    ones on the subdiagonal.
    """
    if m < 1:
        raise InputError(f"size must be >= 1, got {m}")
    rows = []
    for i in range(m):
        row = [0] * m
        row[i] = 2 if i == m - 1 else 1
        if i > 0:
            row[i - 1] = -1
        if i < m - 1:
            row[i + 1] = 1
        rows.append(row)
    return IntMatrix.from_rows(rows)


def build_star_matrix(head_interval_sizes: list[int], s: int) -> IntMatrix:
    """The star-shape system matrix; its determinant is r + s + 1.

    One lower-triangular all-ones block per head interval (r blocks,
    sized by ``head_interval_sizes``), a final column of ones, and a
    final row of minus ones whose corner entry is s + 1, where s counts
    the tail intervals.
    """
    if not head_interval_sizes:
        raise InputError("need at least one head interval")
    if any(b < 1 for b in head_interval_sizes):
        raise InputError(f"interval sizes must be >= 1: {head_interval_sizes}")
    if s < 0:
        raise InputError(f"tail interval count must be >= 0, got {s}")
    total = sum(head_interval_sizes)
    dim = total + 1
    rows = [[0] * dim for _ in range(dim)]
    offset = 0
    for b in head_interval_sizes:
        for i in range(b):
            for j in range(i + 1):
                rows[offset + i][offset + j] = 1
        offset += b
    for i in range(total):
        rows[i][dim - 1] = 1
    rows[dim - 1] = [-1] * total + [s + 1]
    return IntMatrix.from_rows(rows)
