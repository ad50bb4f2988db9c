"""Feedback arc sets and the two closed-form winnability criteria.

For a strongly connected tournament, look at a minimum feedback arc
set: the fewest arcs pointing backward under any vertex ordering.  When
those backward arcs form a directed path with m arcs, the tournament is
k-AW exactly when gcd(k, F_{m+2}) = 1 (Fibonacci!).  When they form a
directed star, count the feedback intervals m: the answer is
gcd(k, m) = 1.

Run with: python3 demos/03_feedback_shapes.py
"""

from math import gcd

from klights import (
    all_minimum_fas,
    build_path_matrix,
    classify_arc_induced,
    det_int,
    enumerate_tournaments,
    feedback_intervals,
    is_k_aw,
    is_strongly_connected,
    from_arcs,
    min_fas_size,
    predict_k_aw_path,
    predict_k_aw_star,
)

# --- minimum feedback arc sets, by example ---

c3 = from_arcs(3, [(0, 1), (1, 2), (2, 0)])
print("triangle min FAS size:", min_fas_size(c3))
for fas in all_minimum_fas(c3):
    shape = classify_arc_induced(c3, fas)
    print(f"  ordering {fas.ordering} -> backward {sorted(fas.arcs)} ({shape.describe()})")
print()

# --- the Fibonacci connection ---
#
# The path criterion comes from a banded matrix whose determinant walks
# the Fibonacci sequence.

print("m  det(A_m)  F_(m+2)")
fib_a, fib_b = 1, 1
for m in range(1, 11):
    fib_a, fib_b = fib_b, fib_a + fib_b
    d = det_int(build_path_matrix(m))
    print(f"{m:<2} {d:<9} {fib_b}")
print()

# --- predictions vs. ground truth over whole tournament families ---

for n in (3, 4, 5):
    strong = path_like = star_like = checked = 0
    for t in enumerate_tournaments(n):
        if not is_strongly_connected(t):
            continue
        strong += 1
        for fas in all_minimum_fas(t):
            shape = classify_arc_induced(t, fas)
            if shape.kind == "path":
                path_like += 1
                predict, arg = predict_k_aw_path, shape.path_arcs
            elif shape.kind == "star":
                star_like += 1
                predict, arg = predict_k_aw_star, shape.intervals
            else:
                continue
            for k in range(2, 31):
                assert is_k_aw(t, k) == predict(arg, k)
                checked += 1
    print(f"n={n}: {strong} strong tournaments, "
          f"{path_like} path witnesses, {star_like} star witnesses, "
          f"{checked} predictions all correct")
print()

# --- what the star's interval count looks like ---
#
# Take sigma = 0..5 with backward arcs 5->0 and 5->2.  Vertex 5 is the
# star center; 0 and 2 are heads of backward arcs, separated in the
# ordering, so they form two head intervals.  m = 3 intervals in all,
# and the star criterion says: winnable for every k coprime to 3.

runs = feedback_intervals((0, 1, 2, 3, 4, 5), frozenset({(5, 0), (5, 2)}))
for run in runs:
    print(f"  interval {run.vertices} kind={run.kind}")
print("interval count m =", len(runs))
print("k=2..9 predictions:", [gcd(k, len(runs)) == 1 for k in range(2, 10)])
