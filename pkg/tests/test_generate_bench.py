import math

import numpy as np
import pytest

from udc import Norm, StripConfig, solve_single_shift
from udc.bench import CSV_HEADER, compare_backends, median_times, run_bench
from udc.generate import disk_fill, gen_instance

from conftest import SQRT3


def test_gen_examples():
    assert len(gen_instance("uniform", 0, 5)) == 0
    pts = gen_instance("clusters", 500, 7, centers=[(0.1, 0.0)])
    assert pts.shape == (500, 2)
    assert np.all(np.hypot(pts[:, 0] - 0.1, pts[:, 1]) <= 1.0)
    r = solve_single_shift(Norm.l2(), pts, StripConfig(SQRT3, -SQRT3 / 2))
    assert r.count <= 5
    with pytest.raises(ValueError):
        gen_instance("spiral", 3, 1)
    with pytest.raises(ValueError):
        gen_instance("uniform", -1, 1)


def test_gen_deterministic_and_boxed():
    a = gen_instance("uniform", 100, 11, box=(-3, 2, 5, 4))
    b = gen_instance("uniform", 100, 11, box=(-3, 2, 5, 4))
    assert np.array_equal(a, b)
    assert a[:, 0].min() >= -3 and a[:, 0].max() < 5 and a[:, 1].min() >= 2 and a[:, 1].max() < 4
    assert not np.array_equal(a, gen_instance("uniform", 100, 12, box=(-3, 2, 5, 4)))


def test_gen_pcg64_stream():
    # documented derivation: PCG64(seed).random((n, 2)), rows scaled into the box
    u = np.random.Generator(np.random.PCG64(3)).random((4, 2))
    assert np.array_equal(gen_instance("uniform", 4, 3, box=(0, 0, 1, 1)), u)


def test_random_clusters_round_robin():
    pts = gen_instance("clusters", 9, 2, k=3, box=(0, 0, 50, 50))
    centers = np.random.Generator(np.random.PCG64(2)).random((3, 2)) * 50
    for i, p in enumerate(pts):
        assert math.dist(p, centers[i % 3]) <= 1


def test_disk_fill():
    pts = disk_fill((0.0, 0.0))
    assert len(pts) == sum(1 for i in range(-50, 51) for j in range(-50, 51) if i * i + j * j <= 2500)
    assert [1.0, 0.0] in pts.tolist()
    with pytest.raises(ValueError):
        disk_fill((0, 0), 0.03)


def test_run_bench():
    recs = run_bench([1000], "smooth", Norm.l2(), repeats=1, seed=4)
    assert len(recs) == 1 and recs[0].disk_count > 0
    again = run_bench([1000], "smooth", Norm.l2(), repeats=1, seed=4)
    assert again[0].disk_count == recs[0].disk_count
    fields = recs[0].csv().split(",")
    assert fields[:5] == ["1000", "smooth", "l2", "4", str(recs[0].disk_count)]
    assert CSV_HEADER == "n,algorithm,norm,seed,count,millis"
    with pytest.raises(ValueError):
        run_bench([2000, 1000], "smooth", Norm.l2())
    assert set(median_times(run_bench([10, 20], "linf", Norm.linf(), 3))) == {10, 20}


def test_compare_backends_agree():
    rows = compare_backends([2000, 4000], repeats=1)
    by_n = {}
    for n, name, secs, count in rows:
        by_n.setdefault(n, set()).add(count)
    assert all(len(c) == 1 for c in by_n.values())
