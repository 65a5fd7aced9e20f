"""Geometric phases on abstract unit spheres.

Solid angles of closed paths (wave-vector sphere or Poincare sphere),
spin-redirection phase, Pancharatnam cycle phase, and the model wave-vector
cycle of a q-plate.

Sign conventions: a path circulating counterclockwise (right-hand rule
about its mean direction, viewed from outside the sphere) has positive
solid angle, and positive helicity acquires spin-redirection phase equal
to minus the solid angle.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (DegenerateSegment, OpenPath,
                     OrthogonalConsecutiveStates, ZeroState)
from .polarization import JonesVector, stokes_of

POINT_NORM_TOL = 1e-12
CLOSURE_TOL = 1e-9


@dataclass(frozen=True)
class SpherePath:
    """Ordered unit 3-vectors on a sphere, optionally closed.

    Closed paths must repeat the first point at the end (within 1e-9) and
    may not contain antipodal consecutive points, so every geodesic
    segment is well defined.
    """

    points: np.ndarray
    closed: bool = True

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 3:
            raise ValueError("need at least 3 points of dimension 3")
        norms = np.linalg.norm(pts, axis=1)
        if np.max(np.abs(norms - 1.0)) > POINT_NORM_TOL:
            raise ValueError("all path points must be unit vectors")
        if self.closed:
            if np.linalg.norm(pts[0] - pts[-1]) > CLOSURE_TOL:
                raise OpenPath("closed path must end at its starting point")
            dots = np.sum(pts[:-1] * pts[1:], axis=1)
            if np.min(dots) <= -1.0 + 1e-12:
                raise DegenerateSegment(
                    "consecutive points are antipodal; geodesic undefined")
        object.__setattr__(self, "points", pts)

    def reversed(self):
        return SpherePath(self.points[::-1].copy(), self.closed)


def _triangle_excess(a, b, c):
    """Signed spherical excess of the geodesic triangle (a, b, c)."""
    num = float(a @ np.cross(b, c))
    den = 1.0 + float(a @ b) + float(b @ c) + float(c @ a)
    return 2.0 * math.atan2(num, den)


def _fan_apex(pts):
    mean = pts[:-1].mean(axis=0)
    n = np.linalg.norm(mean)
    if n > 1e-3:
        return mean / n
    # Great-circle-like path: the mean vanishes, so take the circulation
    # normal instead; its sign keeps the traversal direction unambiguous.
    normal = np.cross(pts[:-1], pts[1:]).sum(axis=0)
    n = np.linalg.norm(normal)
    if n == 0.0:
        raise DegenerateSegment("path has no resolvable orientation")
    return normal / n


def solid_angle(path):
    """Oriented solid angle enclosed by a closed sphere path [steradian].

    Computed as the sum of signed spherical excesses of geodesic triangles
    fanned from the path's mean direction (or its circulation normal when
    the mean degenerates, which disambiguates great circles).  Multi-turn
    paths accumulate 4 pi per wrap.
    """
    if not path.closed:
        raise OpenPath("solid angle requires a closed path")
    pts = path.points
    apex = _fan_apex(pts)
    total = 0.0
    for k in range(len(pts) - 1):
        total += _triangle_excess(apex, pts[k], pts[k + 1])
    return total


def srp_phase(path, helicity):
    """Spin-redirection phase: -helicity times the enclosed solid angle.

    Opposite circular polarizations acquire equal and opposite phases
    (geometric circular birefringence).
    """
    if helicity not in (1, -1, 1.0, -1.0):
        raise ValueError(f"helicity must be +1 or -1, got {helicity}")
    return -float(helicity) * solid_angle(path)


def qplate_k_path(q, turns=1.0, points_per_turn=256):
    """Model wave-vector-space cycle of a q-plate.

    The q = 1 half-wave plate maps to a single great circle (solid angle
    2 pi).  Other charges traverse the great circle q * turns times; the
    construction for q != 1 is an extrapolation of the q = 1 picture and
    requires an integer, nonzero total winding so the path closes.
    """
    winding = q * turns
    w = round(winding)
    if abs(winding - w) > 1e-9 or w == 0:
        raise DegenerateSegment(
            f"q * turns = {winding:g} must be a nonzero integer for a "
            "closed wave-vector cycle")
    m = points_per_turn * abs(w)
    theta = 2.0 * math.pi * w * np.arange(m + 1) / m
    pts = np.stack([np.cos(theta), np.sin(theta), np.zeros(m + 1)], axis=1)
    return SpherePath(pts, closed=True)


def poincare_point(v):
    """Map a Jones vector to its normalized Stokes vector on the sphere."""
    s = stokes_of(v)
    if s.s0 <= 0.0:
        raise ZeroState("Poincare point undefined for the zero state")
    return np.array([s.s1, s.s2, s.s3]) / s.s0


def jones_from_poincare(point):
    """Unit Jones state whose Poincare image is the given unit 3-vector.

    Inverse of poincare_point up to global phase (the fiber the sphere
    cannot see).
    """
    s1, s2, s3 = (float(c) for c in point)
    half = 0.5 * math.acos(max(-1.0, min(1.0, s1)))
    phi = math.atan2(s3, s2)
    return JonesVector(math.cos(half), math.sin(half) * cmath.exp(1j * phi))


def pancharatnam_cycle_phase(states):
    """Total Pancharatnam phase around a closed cycle of states.

    Sum of arg<s_k|s_{k+1}> over the cycle, wrapped to (-pi, pi].  The
    first and last states must coincide and consecutive states must be
    nonorthogonal.  For geodesic polygons the result equals half the
    oriented Poincare-sphere solid angle of the cycle (mod 2 pi).
    """
    if len(states) < 3:
        raise ValueError("cycle needs at least 3 states")
    first, last = states[0], states[-1]
    if (abs(first.ex - last.ex) > CLOSURE_TOL
            or abs(first.ey - last.ey) > CLOSURE_TOL):
        raise OpenPath("cycle must return to its starting state")
    total = 0.0
    for a, b in zip(states[:-1], states[1:]):
        ip = a.inner(b)
        if abs(ip) <= 1e-12 * a.norm() * b.norm():
            raise OrthogonalConsecutiveStates(
                "consecutive states in the cycle are orthogonal")
        total += cmath.phase(ip)
    return (total + math.pi) % (2.0 * math.pi) - math.pi


def _slerp(a, b, t):
    dot = np.clip(a @ b, -1.0, 1.0)
    ang = math.acos(dot)
    if ang < 1e-15:
        return np.outer(np.ones_like(t), a)
    return (np.outer(np.sin((1.0 - t) * ang), a)
            + np.outer(np.sin(t * ang), b)) / math.sin(ang)


def geodesic_path(vertices, samples_per_edge=64):
    """Closed path through `vertices` along great-circle arcs."""
    verts = [np.asarray(v, dtype=float) for v in vertices]
    verts = [v / np.linalg.norm(v) for v in verts]
    if np.linalg.norm(verts[0] - verts[-1]) > CLOSURE_TOL:
        verts.append(verts[0])
    t = np.arange(samples_per_edge) / samples_per_edge
    segs = [_slerp(a, b, t) for a, b in zip(verts[:-1], verts[1:])]
    segs.append(verts[-1][None, :])
    return SpherePath(np.vstack(segs), closed=True)


def circle_path(polar_angle, n_points=256, direction=1):
    """Closed small circle at the given polar angle from +z."""
    theta = 2.0 * math.pi * direction * np.arange(n_points + 1) / n_points
    st, ct = math.sin(polar_angle), math.cos(polar_angle)
    pts = np.stack([st * np.cos(theta), st * np.sin(theta),
                    np.full(n_points + 1, ct)], axis=1)
    return SpherePath(pts, closed=True)
