import random

import pytest

from klights import (
    CapacityError,
    Digraph,
    Labeling,
    apply_toggles,
    brute_force_is_k_aw,
    brute_force_solve,
    enumerate_tournaments,
    from_arcs,
    is_k_aw,
    is_tournament,
    random_digraph,
    run_theorem_census,
    solve_labeling,
)

from oracles import all_digraphs

C3 = from_arcs(3, [(0, 1), (1, 2), (2, 0)])


class TestBruteForceSolve:
    def test_c3_mod3(self):
        assert brute_force_solve(C3, Labeling((1, 1, 1), 3)).values == (1, 1, 1)

    def test_zero_labeling(self):
        d = random_digraph(4, 0.5, seed=3)
        assert brute_force_solve(d, Labeling((0, 0, 0, 0), 3)).values == (0, 0, 0, 0)

    def test_c3_mod2_none(self):
        assert brute_force_solve(C3, Labeling((1, 0, 0), 2)) is None

    def test_lexicographically_smallest(self):
        """With several winning vectors, the lexicographically first comes back."""
        two_cycle = from_arcs(2, [(0, 1), (1, 0)])
        x = brute_force_solve(two_cycle, Labeling((1, 1), 2))
        # (0,1) and (1,0) both win
        assert x.values == (0, 1)

    def test_budget(self):
        d = Digraph(9, frozenset())
        with pytest.raises(CapacityError):
            brute_force_solve(d, Labeling((0,) * 9, 8))

    def test_agrees_with_solver(self):
        rng = random.Random(21)
        for _ in range(120):
            n = rng.randint(0, 4)
            d = random_digraph(n, rng.random(), seed=rng.randrange(10**6))
            k = rng.randint(2, 5)
            if k**n > 10**4:
                continue
            lam = Labeling(tuple(rng.randrange(k) for _ in range(n)), k)
            slow = brute_force_solve(d, lam)
            fast = solve_labeling(d, lam)
            assert (slow is None) == (fast is None)
            if slow is not None:
                assert apply_toggles(d, lam, slow).values == (0,) * n
                assert apply_toggles(d, lam, fast).values == (0,) * n


class TestBruteForceAlwaysWinnable:
    def test_c3(self):
        assert not brute_force_is_k_aw(C3, 2)
        assert brute_force_is_k_aw(C3, 3)

    def test_single_vertex(self):
        d = from_arcs(1, [])
        for k in range(2, 7):
            assert brute_force_is_k_aw(d, k)

    def test_agrees_with_determinant(self):
        for d in all_digraphs(3):
            for k in (2, 3, 4, 5):
                assert brute_force_is_k_aw(d, k) == is_k_aw(d, k)


class TestEnumerateTournaments:
    def test_counts(self):
        assert sum(1 for _ in enumerate_tournaments(2)) == 2
        assert sum(1 for _ in enumerate_tournaments(3)) == 8
        assert sum(1 for _ in enumerate_tournaments(4)) == 64

    def test_all_are_tournaments_and_distinct(self):
        seen = set()
        for t in enumerate_tournaments(4):
            assert is_tournament(t)
            assert t.arcs not in seen
            seen.add(t.arcs)

    def test_mask_zero_is_all_forward(self):
        first = next(iter(enumerate_tournaments(3)))
        assert first.arcs == {(0, 1), (0, 2), (1, 2)}

    def test_capacity(self):
        with pytest.raises(CapacityError):
            next(enumerate_tournaments(7))


class TestRandomDigraph:
    def test_extreme_probabilities(self):
        assert random_digraph(4, 0.0, seed=1).arcs == frozenset()
        assert len(random_digraph(4, 1.0, seed=1).arcs) == 12

    def test_reproducible(self):
        assert random_digraph(6, 0.37, seed=123) == random_digraph(6, 0.37, seed=123)

    def test_bad_probability(self):
        from klights import InputError

        with pytest.raises(InputError):
            random_digraph(3, 1.5, seed=0)


class TestCensus:
    def test_three_vertices(self):
        report = run_theorem_census(3, 10)
        assert report.graphs == 8
        assert report.strong_graphs == 2
        assert report.path_shape_graphs == 2
        assert report.star_shape_graphs == 0
        assert len(report.records) == 8 * 9
        assert report.disagreements == 0
        # the two cyclic orientations are k-AW exactly for odd k
        for r in report.records:
            if r.fas_size == 1:
                assert r.shape == "path:1"
                assert r.aw == (r.k % 2 == 1)

    def test_four_vertices(self):
        report = run_theorem_census(4, 10)
        assert report.disagreements == 0
        assert report.graphs == 64

    def test_single_vertex(self):
        report = run_theorem_census(1, 5)
        assert report.graphs == 1
        assert all(r.aw for r in report.records)
        assert report.disagreements == 0

    def test_report_text_shape(self):
        report = run_theorem_census(2, 3)
        text = report.to_text()
        lines = text.splitlines()
        assert lines[0].startswith("# graph")
        assert lines[-1] == "= disagreements 0"
        record_lines = [l for l in lines if not l.startswith(("#", "="))]
        assert len(record_lines) == len(report.records)
        first = record_lines[0].split("\t")
        assert first[0] == "0" and first[1] == "2" and first[2] == "2"

    def test_capacity(self):
        with pytest.raises(CapacityError):
            run_theorem_census(7, 10)
        with pytest.raises(CapacityError):
            run_theorem_census(3, 31)
