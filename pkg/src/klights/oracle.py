"""Ground-truth engines: brute force, exhaustive enumeration, and the census.

Everything the rest of the package computes cleverly is recomputed here
the dumb way, within small budgets, so that the two can be compared.
The census sweeps every labeled tournament of a given size and checks
each structural theorem (acyclic, component reduction, path shape, star
shape) against the linear-algebra verdict, reporting any disagreement.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, product
from math import gcd

from .digraph import (
    Digraph,
    acyclic_ordering,
    induced_subgraph,
    is_strongly_connected,
    strong_components,
)
from .errors import CapacityError, InputError
from .feedback import (
    all_minimum_fas,
    classify_arc_induced,
    min_fas_size,
    predict_k_aw_path,
    predict_k_aw_star,
)
from .game import Labeling, ToggleVector, apply_toggles, neighborhood_matrix
from .modalg import det_int

BRUTE_FORCE_BUDGET = 10**7
CENSUS_MAX_N = 6
CENSUS_MAX_K = 30
TOURNAMENT_MAX_N = 6
# Below this many toggle vectors the census re-verifies winnability by
# exhaustion instead of trusting the determinant.
ORACLE_RECHECK_BUDGET = 1000


def brute_force_solve(d: Digraph, labeling: Labeling) -> ToggleVector | None:
    """Exhaustive search for a winning toggle vector.

    Pressing a vertex k times is a no-op, so the move space is the k^n
    toggle vectors; they are tried in lexicographic order and the first
    winner is returned.  None means the labeling is unwinnable.
    """
    k = labeling.modulus
    if len(labeling.values) != d.n:
        raise InputError(f"labeling length {len(labeling.values)} does not match n={d.n}")
    if k**d.n > BRUTE_FORCE_BUDGET:
        raise CapacityError(f"toggle space k^n = {k}^{d.n} exceeds {BRUTE_FORCE_BUDGET}")
    zero = (0,) * d.n
    for cand in product(range(k), repeat=d.n):
        toggles = ToggleVector(cand, k)
        if apply_toggles(d, labeling, toggles).values == zero:
            return toggles
    return None


def brute_force_is_k_aw(d: Digraph, k: int) -> bool:
    """Exhaustive winnability-for-every-labeling check.

    The toggle map is linear, so it is onto the labeling space exactly
    when its image has full size k^n; counting the image avoids the
    k^n * k^n labeling-by-labeling sweep.
    """
    if k < 2:
        raise InputError(f"k must be >= 2, got {k}")
    if k**d.n > BRUTE_FORCE_BUDGET:
        raise CapacityError(f"toggle space k^n = {k}^{d.n} exceeds {BRUTE_FORCE_BUDGET}")
    support = [(v,) + d.out_lists[v] for v in range(d.n)]
    image = set()
    for cand in product(range(k), repeat=d.n):
        acc = [0] * d.n
        for v, t in enumerate(cand):
            if t:
                for w in support[v]:
                    acc[w] += t
        image.add(tuple(x % k for x in acc))
    return len(image) == k**d.n


def enumerate_tournaments(n: int) -> Iterator[Digraph]:
    """All labeled tournaments on n vertices, one per orientation bitmask.

    Bit b of the mask orients the b-th pair (u, v), pairs in
    lexicographic order: 0 keeps (u, v) with u < v, 1 reverses it.
    Masks ascend, so the stream order is deterministic and the index of
    a tournament in the stream is its mask.
    """
    if n < 0:
        raise InputError(f"vertex count must be >= 0, got {n}")
    if n > TOURNAMENT_MAX_N:
        raise CapacityError(f"tournament enumeration supports n <= {TOURNAMENT_MAX_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        arcs = [
            (v, u) if mask >> b & 1 else (u, v)
            for b, (u, v) in enumerate(pairs)
        ]
        yield Digraph(n, frozenset(arcs))


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """A digraph where each ordered non-loop pair appears with probability p.

    Pairs are sampled in a fixed order, so a fixed seed always yields
    the same digraph.
    """
    if n < 0:
        raise InputError(f"vertex count must be >= 0, got {n}")
    if not 0 <= p <= 1:
        raise InputError(f"arc probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    ]
    return Digraph(n, frozenset(arcs))


@dataclass(frozen=True, slots=True)
class CensusRecord:
    """One (tournament, k) row of the census table."""

    graph: int  # orientation bitmask
    n: int
    k: int
    aw: bool  # linear-algebra verdict
    fas_size: int
    shape: str  # distinct witness shapes, "|"-joined
    predicted: str  # "-", "0", "1", or "0|1" when witnesses conflict
    oracle: str  # brute-force verdict where affordable, else the aw verdict
    agree: bool

    def to_line(self) -> str:
        return "\t".join(
            (
                str(self.graph),
                str(self.n),
                str(self.k),
                str(int(self.aw)),
                str(self.fas_size),
                self.shape,
                self.predicted,
                self.oracle,
                str(int(self.agree)),
            )
        )


@dataclass(frozen=True)
class CensusReport:
    """Full census output: one record per (tournament, k), plus totals."""

    n: int
    k_max: int
    records: tuple[CensusRecord, ...]
    graphs: int
    strong_graphs: int
    path_shape_graphs: int
    star_shape_graphs: int

    @property
    def disagreements(self) -> int:
        return sum(not r.agree for r in self.records)

    def to_text(self) -> str:
        lines = ["# graph\tn\tk\taw\tfas\tshape\tpred\toracle\tagree"]
        lines.extend(r.to_line() for r in self.records)
        lines.append(f"= n {self.n}")
        lines.append(f"= k_max {self.k_max}")
        lines.append(f"= graphs {self.graphs}")
        lines.append(f"= records {len(self.records)}")
        lines.append(f"= strong {self.strong_graphs}")
        lines.append(f"= path_shape {self.path_shape_graphs}")
        lines.append(f"= star_shape {self.star_shape_graphs}")
        lines.append(f"= disagreements {self.disagreements}")
        return "\n".join(lines) + "\n"


def run_theorem_census(n_max: int, k_max: int) -> CensusReport:
    """Check every structural theorem on every labeled tournament of one size.

    For each tournament on exactly n_max vertices and each k in
    2..k_max, the record compares the determinant-based verdict against:
    the per-strong-component verdict; the acyclic guarantee (both on the
    tournament when it is acyclic and on the acyclic digraph left after
    deleting a minimum feedback arc set); the path and star predictors
    on every minimum-FAS witness of matching shape (strong tournaments
    only); and plain exhaustion where the toggle space is small.  A
    passing run has zero disagreements.
    """
    if not 1 <= n_max <= CENSUS_MAX_N:
        raise CapacityError(f"census supports 1 <= n <= {CENSUS_MAX_N}, got {n_max}")
    if not 2 <= k_max <= CENSUS_MAX_K:
        raise CapacityError(f"census supports 2 <= k_max <= {CENSUS_MAX_K}, got {k_max}")

    records: list[CensusRecord] = []
    graphs = strong_graphs = path_graphs = star_graphs = 0
    for mask, t in enumerate(enumerate_tournaments(n_max)):
        graphs += 1
        det = det_int(neighborhood_matrix(t))
        comp_dets = []
        for comp in strong_components(t):
            sub, _ = induced_subgraph(t, comp)
            comp_dets.append(det_int(neighborhood_matrix(sub)))
        strong = is_strongly_connected(t)
        acyclic = acyclic_ordering(t) is not None
        fas_size = min_fas_size(t)
        witnesses = all_minimum_fas(t)
        if witnesses[0].size != fas_size:
            raise AssertionError(
                f"FAS size mismatch on mask {mask}: DP {fas_size}, sweep {witnesses[0].size}"
            )
        shapes = [classify_arc_induced(t, w) for w in witnesses]
        shape_str = "|".join(sorted({s.short() for s in shapes}))
        forward = Digraph(t.n, t.arcs - witnesses[0].arcs)
        forward_det = det_int(neighborhood_matrix(forward))
        predictors: list[tuple[str, int]] = []
        if strong:
            for s in shapes:
                if s.kind == "path":
                    predictors.append(("path", s.path_arcs))
                elif s.kind == "star":
                    predictors.append(("star", s.intervals))
        if any(kind == "path" for kind, _ in predictors):
            path_graphs += 1
        if any(kind == "star" for kind, _ in predictors):
            star_graphs += 1
        if strong:
            strong_graphs += 1

        for k in range(2, k_max + 1):
            aw = gcd(det, k) == 1
            ok = gcd(forward_det, k) == 1
            ok = ok and (all(gcd(c, k) == 1 for c in comp_dets) == aw)
            if acyclic:
                ok = ok and aw
            predicted_values = sorted(
                {
                    predict_k_aw_path(m, k) if kind == "path" else predict_k_aw_star(m, k)
                    for kind, m in predictors
                }
            )
            ok = ok and all(v == aw for v in predicted_values)
            predicted = (
                "-"
                if not predicted_values
                else "|".join(str(int(v)) for v in predicted_values)
            )
            if k**t.n <= ORACLE_RECHECK_BUDGET:
                oracle_aw = brute_force_is_k_aw(t, k)
                ok = ok and oracle_aw == aw
                oracle = str(int(oracle_aw))
            else:
                oracle = str(int(aw))
            records.append(
                CensusRecord(
                    graph=mask,
                    n=n_max,
                    k=k,
                    aw=aw,
                    fas_size=fas_size,
                    shape=shape_str,
                    predicted=predicted,
                    oracle=oracle,
                    agree=ok,
                )
            )
    return CensusReport(
        n=n_max,
        k_max=k_max,
        records=tuple(records),
        graphs=graphs,
        strong_graphs=strong_graphs,
        path_shape_graphs=path_graphs,
        star_shape_graphs=star_graphs,
    )
