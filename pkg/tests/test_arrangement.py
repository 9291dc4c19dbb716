import math
import random

import pytest

from conftest import crossing_free, rotate_segments
from polydissect import (
    DEFAULT_TOL,
    AmbiguousClustering,
    NumericalDegeneracy,
    Point2,
    PolygonSpec,
    Segment,
    base_segments,
    count_vertices,
    counts,
    split_all,
    split_all_fast,
)


def seg(x0, y0, x1, y1):
    return Segment(Point2(x0, y0), Point2(x1, y1))


@pytest.mark.parametrize("splitter", [split_all, split_all_fast])
class TestSplitting:
    def test_square_stays_whole(self, splitter):
        split = splitter(base_segments(PolygonSpec(2)))
        assert len(split) == 4

    def test_hexagon_with_diameters(self, splitter):
        split = splitter(base_segments(PolygonSpec(3)))
        assert len(split) == 12

    def test_two_crossing_diagonals(self, splitter):
        split = splitter([seg(0, 0, 1, 1), seg(0, 1, 1, 0)])
        assert len(split) == 4
        center = Point2(0.5, 0.5)
        for s in split:
            assert min(s.p0.dist(center), s.p1.dist(center)) < 1e-12

    def test_endpoint_touch_cuts_only_the_touched_segment(self, splitter):
        # vertical reaches the horizontal's interior with its endpoint
        split = splitter([seg(0, 0, 1, 0), seg(0.5, 0, 0.5, 1)])
        horizontals = [s for s in split if abs(s.p0.y - s.p1.y) < 1e-12]
        verticals = [s for s in split if abs(s.p0.x - s.p1.x) < 1e-12]
        assert len(horizontals) == 2
        assert len(verticals) == 1

    def test_degenerate_fragment_raises(self, splitter):
        # the crossing sits 8e-11 from an endpoint: below fuzz once scaled
        a = seg(0.0, 0.0, 0.2, 0.0)
        b = seg(8e-11, -0.1, 8e-11, 0.1)
        with pytest.raises(NumericalDegeneracy):
            splitter([a, b])

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_output_is_crossing_free(self, splitter, n):
        split = splitter(base_segments(PolygonSpec(n)))
        assert crossing_free(split, DEFAULT_TOL)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_fragments_cover_each_base_segment(self, splitter, n):
        base = base_segments(PolygonSpec(n))
        split = splitter(base)
        sums = [0.0] * len(base)
        for frag in split:
            owners = [i for i, b in enumerate(base) if _on_segment(frag, b)]
            assert len(owners) == 1
            sums[owners[0]] += frag.length()
        for b, total in zip(base, sums):
            assert total == pytest.approx(b.length(), abs=1e-8)


def _on_segment(frag, base):
    bx, by = base.p0.x, base.p0.y
    dx, dy = base.p1.x - bx, base.p1.y - by
    ln2 = dx * dx + dy * dy
    for p in (frag.p0, frag.p1):
        if abs((p.x - bx) * dy - (p.y - by) * dx) / math.sqrt(ln2) > 1e-9:
            return False
        t = ((p.x - bx) * dx + (p.y - by) * dy) / ln2
        if not -1e-9 <= t <= 1 + 1e-9:
            return False
    return True


class TestCountVertices:
    def test_hexagon_has_six_corners_and_a_center(self):
        split = split_all(base_segments(PolygonSpec(3)))
        assert count_vertices(split) == 7

    def test_square(self):
        split = split_all(base_segments(PolygonSpec(2)))
        assert count_vertices(split) == 4

    def test_octagon(self):
        # V = E - F + 1 = 48 - 25 + 1
        split = split_all(base_segments(PolygonSpec(4)))
        assert count_vertices(split) == 24

    def test_nearby_clusters_raise(self):
        # two parallel segments 2e-10 apart: distinct clusters, centroids
        # within the 3*fuzz guard band
        split = [seg(0, 0, 1, 0), seg(0, 2e-10, 1, 2e-10)]
        with pytest.raises(AmbiguousClustering):
            count_vertices(split)

    def test_independent_of_segment_order(self):
        split = split_all(base_segments(PolygonSpec(5)))
        rng = random.Random(3)
        for _ in range(5):
            shuffled = split[:]
            rng.shuffle(shuffled)
            assert count_vertices(shuffled) == 31


class TestCounts:
    def test_octagon_summary(self):
        s = counts(PolygonSpec(4))
        assert (s.V, s.E, s.F) == (24, 48, 25)
        assert (s.per_ray, s.central) == (3, 1)

    def test_icosagon_summary(self):
        s = counts(PolygonSpec(10))
        assert (s.E, s.F) == (2500, 1281)
        assert s.per_ray == 64
        assert s.central == 1

    def test_twentysixgon_summary(self):
        s = counts(PolygonSpec(13))
        assert (s.E, s.V, s.F) == (5980, 2679, 3302)

    def test_slow_path_gives_the_same_counts(self):
        for n in (2, 3, 4, 5, 6, 7):
            fast = counts(PolygonSpec(n), fast=True)
            slow = counts(PolygonSpec(n), fast=False)
            assert (fast.V, fast.E, fast.F) == (slow.V, slow.E, slow.F)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_divisibility(self, n):
        s = counts(PolygonSpec(n))
        N = 2 * n
        assert s.E % N == 0
        assert s.F % N == (1 if n % 2 == 0 else 0)
        assert s.V % N == (1 if n % 2 == 1 else 0)
        assert s.F == 1 + s.E - s.V
        assert s.F == N * s.per_ray + s.central

    def test_shuffle_invariance(self):
        rng = random.Random(11)
        spec = PolygonSpec(6)
        base = base_segments(spec)
        reference = counts(spec)
        for _ in range(5):
            shuffled = base[:]
            rng.shuffle(shuffled)
            split = split_all_fast(shuffled)
            v = count_vertices(split)
            assert (v, len(split)) == (reference.V, reference.E)

    def test_rotation_invariance(self):
        spec = PolygonSpec(6)
        base = base_segments(spec)
        reference = counts(spec)
        rotated = rotate_segments(base, math.pi / 6)
        split = split_all_fast(rotated)
        assert len(split) == reference.E
        assert count_vertices(split) == reference.V


@pytest.mark.parametrize("n", [2, 5, 8])
def test_all_produced_points_stay_in_the_unit_disk(n):
    for s in split_all_fast(base_segments(PolygonSpec(n))):
        for p in (s.p0, s.p1):
            assert abs(p.x) <= 1 + 1e-9
            assert abs(p.y) <= 1 + 1e-9
