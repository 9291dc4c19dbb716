import math

from polydissect import ParamClass, Point2, Segment, classify_param, intersect


def crossing_free(split, tol):
    """Exhaustive pairwise check: no Interior x Interior hit remains."""
    for i, a in enumerate(split):
        for b in split[i + 1:]:
            hit = intersect(a, b, tol)
            if hit is None:
                continue
            if (classify_param(hit.t, tol) is ParamClass.INTERIOR
                    and classify_param(hit.u, tol) is ParamClass.INTERIOR):
                return False
    return True


def rotate_segments(segments, angle):
    """Rigidly rotate a segment list about the origin."""
    c = math.cos(angle)
    s = math.sin(angle)

    def rot(p):
        return Point2(c * p.x - s * p.y, s * p.x + c * p.y)

    return [Segment(rot(seg.p0), rot(seg.p1)) for seg in segments]
