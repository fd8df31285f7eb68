import numpy as np
import pytest

from udc import (
    CoverSolution,
    Disk,
    Norm,
    Point,
    StripConfig,
    centers_on_lines,
    covers,
    default_width,
    solve_linf,
    solve_single_shift,
    solve_smoothed,
    verify_cover,
)
from udc.generate import disk_fill
from udc.strips import strip_indices

from conftest import SQRT3

NORMS = [Norm.l2(), Norm.linf(), Norm.lp(1), Norm.lp(3)]


def test_default_width():
    assert default_width(Norm.linf()) == 2
    assert default_width(Norm.l2()) == SQRT3
    assert default_width(Norm.lp(2)) == SQRT3
    assert default_width(Norm.lp(1)) == pytest.approx(1.0)
    assert default_width(Norm.lp(1e7)) == 2
    # boundary half-length is 1/2 at the default width
    for p in (1, 1.5, 3, 10):
        w = default_width(Norm.lp(p))
        assert (1 - (w / 2) ** p) ** (1 / p) == pytest.approx(0.5)


def test_solve_linf_examples():
    assert solve_linf([]).count == 0
    r = solve_linf([(1, 1)])
    assert r.solution.centers.tolist() == [[1, 0]]
    sq = [(x, y) for x in np.linspace(0.5, 2.5, 8) for y in np.linspace(0, 2, 8)]
    r = solve_linf(sq)
    assert r.count == 2
    assert r.solution.per_strip_counts() == {0: 1, 1: 1}


def test_single_shift_observation_fills(backend):
    cfg = StripConfig(SQRT3, -SQRT3 / 2)
    five = solve_single_shift(Norm.l2(), disk_fill((0.1, 0.0)), cfg, backend=backend)
    assert five.count == 5
    assert five.solution.per_strip_counts() == {-1: 1, 0: 2, 1: 2}
    four = solve_single_shift(Norm.l2(), disk_fill((SQRT3 / 2, 0.0)), cfg, backend=backend)
    assert four.count == 4
    assert solve_single_shift(Norm.l2(), [], cfg).count == 0


def test_smoothed_examples(rng):
    r = solve_smoothed(Norm.l2(), [])
    assert r.count == 0 and [c for _, c in r.per_shift_counts] == [0] * 6
    r = solve_smoothed(Norm.l2(), disk_fill((0.1, 0.0)))
    assert r.count == 4
    pts = rng.uniform(0, 30, (200, 2))
    r = solve_smoothed(Norm.l2(), pts)
    counts = [c for _, c in r.per_shift_counts]
    assert r.count == min(counts)
    j = counts.index(min(counts))
    assert r.chosen_shift == r.per_shift_counts[j][0] == j * SQRT3 / 6
    with pytest.raises(ValueError):
        solve_smoothed(Norm.l2(), pts, num_shifts=0)


def test_smoothed_dominates_each_shift(rng):
    for norm in NORMS:
        pts = rng.uniform(0, 12, (150, 2))
        r = solve_smoothed(norm, pts)
        w = default_width(norm)
        for j, (a, c) in enumerate(r.per_shift_counts):
            single = solve_single_shift(norm, pts, StripConfig(w, j * w / 6))
            assert single.count == c
            assert r.count <= c


def test_smoothed_thread_independent(rng):
    pts = rng.uniform(0, 40, (3000, 2))
    a = solve_smoothed(Norm.l2(), pts, threads=1)
    b = solve_smoothed(Norm.l2(), pts, threads=8)
    assert a.per_shift_counts == b.per_shift_counts
    assert np.array_equal(a.solution.centers, b.solution.centers)


@pytest.mark.parametrize("norm", NORMS, ids=str)
def test_coverage_and_centers(norm, rng):
    for _ in range(20):
        pts = rng.uniform(0, 20, (int(rng.integers(1, 120)), 2))
        for r in (solve_single_shift(norm, pts), solve_smoothed(norm, pts)):
            assert verify_cover(r.solution, pts, 1e-9)
            assert centers_on_lines(r.solution)


def test_period_invariance(rng):
    norm = Norm.l2()
    w = default_width(norm)
    for _ in range(10):
        pts = rng.uniform(0, 15, (100, 2))
        k, dy = int(rng.integers(-5, 6)), float(rng.uniform(-50, 50))
        moved = pts + np.array([k * w, dy])
        a = solve_smoothed(norm, pts, width=w)
        b = solve_smoothed(norm, moved, width=w)
        # translation by whole strips can flip boundary-adjacent points by an ulp; compare counts
        assert [c for _, c in a.per_shift_counts] == [c for _, c in b.per_shift_counts]


def test_linf_strip_independence(rng):
    cfg = StripConfig(2.0, 0.0)
    for _ in range(30):
        pts = rng.uniform(0, 20, (80, 2))
        r = solve_linf(pts, cfg)
        owner = strip_indices(cfg, pts[:, 0])
        for d, k in zip(r.solution.disks, r.solution.strip_ids):
            for p in pts[owner != k]:
                assert not covers(d, p, 1e-9)


def test_verify_cover_examples():
    empty = CoverSolution(Norm.l2(), np.empty((0, 2)))
    assert verify_cover(empty, [])
    one = CoverSolution(Norm.l2(), [(0.0, 0.0)])
    res = verify_cover(one, [(0.5, 0), (2, 0), (3, 0)])
    assert not res and res.witness == Point(2, 0) and res.index == 1
    assert not verify_cover(empty, [(1, 1)])


def test_cover_solution_container():
    sol = CoverSolution(Norm.l2(), [(1.0, 2.0), (3.0, 4.0)])
    assert sol.count == 2
    assert sol.disks == [Disk(Point(1, 2), Norm.l2()), Disk(Point(3, 4), Norm.l2())]
    assert sol.per_strip_counts() == {}
