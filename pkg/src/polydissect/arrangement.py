"""Segment splitting and Euler counting for the dissected polygon.

``split_all`` is the reference algorithm: a working set is rescanned for
every base segment, crossings cut both sides, endpoint touches cut only
the touched side, and the incoming segment joins the set as its fragments.
``split_all_fast`` produces the same fragment multiset by intersecting the
base segments pairwise (vectorized) and cutting each one once; it exists
because the working-set rescan is quadratic in the fragment count.

Vertices are counted by snapping the fragment endpoints to a grid of
pitch ``point_fuzzy`` and clustering across neighboring cells with
union-find, which is deterministic and independent of segment order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousClustering, NumericalDegeneracy, SymmetryViolation
from .geom import DEFAULT_TOL, Point2, Segment, Tolerance, merge_params, split_at_params
from .polygon import PolygonSpec, base_segments

# Both are plain segment lists; a SplitSegmentSet additionally satisfies the
# crossing-free invariant (no Interior x Interior intersection remains).
SegmentSet = list[Segment]
SplitSegmentSet = list[Segment]


@dataclass(frozen=True)
class CountSummary:
    """Vertex/edge/face counts plus the rotational decomposition of F."""

    n: int
    V: int
    E: int
    F: int
    per_ray: int
    central: int

    @property
    def N(self) -> int:
        return 2 * self.n


def _cut_tuple(wx0, wy0, wx1, wy1, u, fuzz):
    """Split a working-set entry at parameter u into its two fragments."""
    cx = u * wx1 + (1.0 - u) * wx0
    cy = u * wy1 + (1.0 - u) * wy0
    l0 = math.hypot(cx - wx0, cy - wy0)
    l1 = math.hypot(wx1 - cx, wy1 - cy)
    if l0 < fuzz or l1 < fuzz:
        raise NumericalDegeneracy(
            f"fragment shorter than fuzz {fuzz:g} near ({cx:.12g}, {cy:.12g})")
    return (wx0, wy0, cx, cy, l0), (cx, cy, wx1, wy1, l1)


def _split_tuple(x0, y0, x1, y1, params, fuzz):
    """Cut one segment (as coordinates) at merged interior parameters."""
    merged = merge_params(params + [0.0, 1.0], fuzz)
    pts = [(t * x1 + (1.0 - t) * x0, t * y1 + (1.0 - t) * y0) for t in merged]
    out = []
    for (ax, ay), (bx, by) in zip(pts, pts[1:]):
        ln = math.hypot(bx - ax, by - ay)
        if ln < fuzz:
            raise NumericalDegeneracy(
                f"fragment shorter than fuzz {fuzz:g} near ({ax:.12g}, {ay:.12g})")
        out.append((ax, ay, bx, by, ln))
    return out


def _parallel_overlap(sx0, sy0, sdx, sdy, slen, wx0, wy0, wx1, wy1, fuzz):
    """True if a parallel pair is collinear with overlapping extents."""
    d0 = abs((wx0 - sx0) * sdy - (wy0 - sy0) * sdx) / slen
    d1 = abs((wx1 - sx0) * sdy - (wy1 - sy0) * sdx) / slen
    if d0 > fuzz or d1 > fuzz:
        return False
    inv = 1.0 / (slen * slen)
    t0 = ((wx0 - sx0) * sdx + (wy0 - sy0) * sdy) * inv
    t1 = ((wx1 - sx0) * sdx + (wy1 - sy0) * sdy) * inv
    lo, hi = min(t0, t1), max(t0, t1)
    return min(hi, 1.0) - max(lo, 0.0) > fuzz


def split_all(base: SegmentSet, tol: Tolerance = DEFAULT_TOL) -> SplitSegmentSet:
    """Fragment every base segment at every crossing or touch.

    Working-set rescan: each base segment is intersected against all
    fragments accumulated so far. An interior-interior hit cuts both
    sides; a hit at a fragment endpoint cuts only the side whose interior
    was met. The base set must not contain collinear overlapping segments.
    """
    fuzz = tol.point_fuzzy
    working: list[tuple] = []
    for seg in base:
        sx0, sy0 = seg.p0
        sx1, sy1 = seg.p1
        sdx = sx1 - sx0
        sdy = sy1 - sy0
        slen = math.hypot(sdx, sdy)
        if not working:
            working.append((sx0, sy0, sx1, sy1, slen))
            continue

        cut_params: list[float] = []
        removed: set[int] = set()
        chaff: list[tuple] = []
        for idx, (wx0, wy0, wx1, wy1, wlen) in enumerate(working):
            a01 = wx0 - wx1
            a11 = wy0 - wy1
            det = sdx * a11 - a01 * sdy
            if abs(det) < fuzz * slen * wlen:
                assert not _parallel_overlap(
                    sx0, sy0, sdx, sdy, slen, wx0, wy0, wx1, wy1, fuzz), \
                    "collinear overlapping segments in the base set"
                continue
            rhs0 = wx0 - sx0
            rhs1 = wy0 - sy0
            t = (rhs0 * a11 - a01 * rhs1) / det
            u = (sdx * rhs1 - rhs0 * sdy) / det
            if fuzz < t < 1.0 - fuzz:
                if fuzz < u < 1.0 - fuzz:
                    # true crossing: cut the working entry now, the incoming later
                    cut_params.append(t)
                    chaff.extend(_cut_tuple(wx0, wy0, wx1, wy1, u, fuzz))
                    removed.add(idx)
                elif abs(u) < fuzz or abs(u - 1.0) < fuzz:
                    # fragment endpoint touches the incoming interior
                    cut_params.append(t)
            elif abs(t) < fuzz or abs(t - 1.0) < fuzz:
                if fuzz < u < 1.0 - fuzz:
                    # incoming endpoint touches the fragment interior
                    chaff.extend(_cut_tuple(wx0, wy0, wx1, wy1, u, fuzz))
                    removed.add(idx)

        if removed:
            working = [w for i, w in enumerate(working) if i not in removed]
        working.extend(chaff)
        if cut_params:
            working.extend(_split_tuple(sx0, sy0, sx1, sy1, cut_params, fuzz))
        else:
            working.append((sx0, sy0, sx1, sy1, slen))

    return [Segment(Point2(x0, y0), Point2(x1, y1)) for x0, y0, x1, y1, _ in working]


def _checked_fragments(seg: Segment, params: list[float], tol: Tolerance) -> list[Segment]:
    try:
        frags = split_at_params(seg, params, tol)
    except ValueError as exc:
        raise NumericalDegeneracy(f"fragment of {seg} shorter than fuzz") from exc
    for f in frags:
        if f.length() < tol.point_fuzzy:
            raise NumericalDegeneracy(f"fragment {f} shorter than fuzz {tol.point_fuzzy:g}")
    return frags


def split_all_fast(base: SegmentSet, tol: Tolerance = DEFAULT_TOL) -> SplitSegmentSet:
    """Same fragment multiset as split_all, via pairwise base intersections.

    Every cut on a fragment corresponds to a cut on its base segment, so
    it suffices to solve all base-segment pairs (in blocks, vectorized)
    and split each base segment once at its accumulated parameters.
    """
    m = len(base)
    if m < 2:
        return list(base)
    fuzz = tol.point_fuzzy

    x0 = np.fromiter((s.p0.x for s in base), dtype=float, count=m)
    y0 = np.fromiter((s.p0.y for s in base), dtype=float, count=m)
    x1 = np.fromiter((s.p1.x for s in base), dtype=float, count=m)
    y1 = np.fromiter((s.p1.y for s in base), dtype=float, count=m)
    dx = x1 - x0
    dy = y1 - y0
    seglen = np.hypot(dx, dy)

    cuts: list[list[float]] = [[] for _ in range(m)]
    cols = np.arange(m)
    block = max(1, 1_000_000 // m)
    for lo in range(0, m, block):
        hi = min(m, lo + block)
        rdx = dx[lo:hi, None]
        rdy = dy[lo:hi, None]
        det = rdy * dx[None, :] - rdx * dy[None, :]
        live = (cols[None, :] > cols[lo:hi, None]) \
            & (np.abs(det) >= fuzz * (seglen[lo:hi, None] * seglen[None, :]))
        rhsx = x0[None, :] - x0[lo:hi, None]
        rhsy = y0[None, :] - y0[lo:hi, None]
        with np.errstate(divide="ignore", invalid="ignore"):
            t = (dx[None, :] * rhsy - rhsx * dy[None, :]) / det
            u = (rdx * rhsy - rhsx * rdy) / det
        t_int = (t > fuzz) & (t < 1.0 - fuzz)
        u_int = (u > fuzz) & (u < 1.0 - fuzz)
        t_end = (np.abs(t) < fuzz) | (np.abs(t - 1.0) < fuzz)
        u_end = (np.abs(u) < fuzz) | (np.abs(u - 1.0) < fuzz)

        rr, cc = np.nonzero(live & t_int & (u_int | u_end))
        for i, tv in zip((rr + lo).tolist(), t[rr, cc].tolist()):
            cuts[i].append(tv)
        rr, cc = np.nonzero(live & u_int & (t_int | t_end))
        for j, uv in zip(cc.tolist(), u[rr, cc].tolist()):
            cuts[j].append(uv)

    out: SplitSegmentSet = []
    for seg, params in zip(base, cuts):
        if params:
            out.extend(_checked_fragments(seg, params, tol))
        else:
            out.append(seg)
    return out


def cluster_endpoints(
    split: SplitSegmentSet, tol: Tolerance = DEFAULT_TOL,
) -> tuple[np.ndarray, list[Point2]]:
    """Group the 2E fragment endpoints into vertex clusters.

    Returns a label per endpoint (p0 then p1 of each segment, in order)
    and the cluster centroids. Exactly equal points are collapsed first;
    the rest are clustered with union-find over the distance <= fuzz
    relation, searched within a 3x3 neighborhood of fuzz-pitch grid cells.
    Raises AmbiguousClustering when two centroids come closer than 3*fuzz.
    """
    m = len(split)
    flat = np.fromiter(
        (c for s in split for c in (s.p0.x, s.p0.y, s.p1.x, s.p1.y)),
        dtype=float, count=4 * m)
    xs = flat[0::2]
    ys = flat[1::2]
    uniq, inverse = np.unique(xs + 1j * ys, return_inverse=True)
    nu = len(uniq)
    fuzz = tol.point_fuzzy

    ux = uniq.real.tolist()
    uy = uniq.imag.tolist()
    gx = np.floor(uniq.real / fuzz).astype(np.int64).tolist()
    gy = np.floor(uniq.imag / fuzz).astype(np.int64).tolist()
    cells: dict[tuple[int, int], list[int]] = {}
    for i in range(nu):
        cells.setdefault((gx[i], gy[i]), []).append(i)

    parent = list(range(nu))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    limit2 = fuzz * fuzz
    for (cx, cy), members in cells.items():
        k = len(members)
        for a in range(k):
            i = members[a]
            xi = ux[i]
            yi = uy[i]
            for b in range(a + 1, k):
                j = members[b]
                ddx = xi - ux[j]
                ddy = yi - uy[j]
                if ddx * ddx + ddy * ddy <= limit2:
                    parent[find(i)] = find(j)
        for ox, oy in ((1, 0), (1, 1), (0, 1), (-1, 1)):
            other = cells.get((cx + ox, cy + oy))
            if not other:
                continue
            for i in members:
                xi = ux[i]
                yi = uy[i]
                for j in other:
                    ddx = xi - ux[j]
                    ddy = yi - uy[j]
                    if ddx * ddx + ddy * ddy <= limit2:
                        parent[find(i)] = find(j)

    # number clusters in the canonical order of the sorted unique points
    cluster_id: dict[int, int] = {}
    labels_u = np.empty(nu, dtype=np.int64)
    for i in range(nu):
        root = find(i)
        cid = cluster_id.get(root)
        if cid is None:
            cid = len(cluster_id)
            cluster_id[root] = cid
        labels_u[i] = cid
    labels = labels_u[inverse]

    nv = len(cluster_id)
    counts_per = np.bincount(labels, minlength=nv)
    cxs = np.bincount(labels, weights=xs, minlength=nv) / counts_per
    cys = np.bincount(labels, weights=ys, minlength=nv) / counts_per
    _check_cluster_separation(cxs, cys, fuzz)
    centroids = [Point2(a, b) for a, b in zip(cxs.tolist(), cys.tolist())]
    return labels, centroids


def _check_cluster_separation(cxs: np.ndarray, cys: np.ndarray, fuzz: float) -> None:
    """Fail if two distinct vertex clusters sit closer than 3*fuzz."""
    pitch = 3.0 * fuzz
    limit2 = pitch * pitch
    xs = cxs.tolist()
    ys = cys.tolist()
    cells: dict[tuple[int, int], list[int]] = {}
    for i in range(len(xs)):
        cells.setdefault((math.floor(xs[i] / pitch), math.floor(ys[i] / pitch)), []).append(i)

    def check(i: int, j: int) -> None:
        ddx = xs[i] - xs[j]
        ddy = ys[i] - ys[j]
        if ddx * ddx + ddy * ddy < limit2:
            raise AmbiguousClustering(
                f"vertex clusters {i} and {j} are {math.sqrt(ddx * ddx + ddy * ddy):.3e}"
                f" apart, closer than 3*fuzz = {pitch:g}")

    for (cx, cy), members in cells.items():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                check(members[a], members[b])
        for ox, oy in ((1, 0), (1, 1), (0, 1), (-1, 1)):
            other = cells.get((cx + ox, cy + oy))
            if other:
                for i in members:
                    for j in other:
                        check(i, j)


def count_vertices(split: SplitSegmentSet, tol: Tolerance = DEFAULT_TOL) -> int:
    """Number of distinct vertices among the fragment endpoints."""
    _, centroids = cluster_endpoints(split, tol)
    return len(centroids)


def counts(spec: PolygonSpec, tol: Tolerance = DEFAULT_TOL, fast: bool = True) -> CountSummary:
    """Count V, E and F for the dissected polygon via Euler's formula.

    F = 1 + E - V counts only the faces inside the polygon. The face total
    must decompose as N*per_ray + central (central = 1 for even n);
    otherwise SymmetryViolation is raised.
    """
    base = base_segments(spec)
    split = split_all_fast(base, tol) if fast else split_all(base, tol)
    e = len(split)
    v = count_vertices(split, tol)
    f = 1 + e - v
    central = 1 if spec.n % 2 == 0 else 0
    if (f - central) % spec.N != 0:
        raise SymmetryViolation(
            f"face count {f} minus central {central} is not a multiple of N={spec.N}")
    return CountSummary(n=spec.n, V=v, E=e, F=f,
                        per_ray=(f - central) // spec.N, central=central)
