"""The three Hopf maps S^3 -> S^2 and their fibers.

Naming follows common usage: the classic map is the chart-then-inverse-
stereographic pipeline with the pole on the k-axis; the quaternion map is
g -> g i g*; the Bloch map is the physicist's state-to-sphere projection
(a, b) -> stereo3_inv(conj(a/b)).
"""

from __future__ import annotations

import cmath
import enum
import math

import numpy as np

from .errors import NotUnit, ZeroVector
from .quat import (
    EPS_NORM,
    ComplexPair,
    Quaternion,
    conjugate,
    embed_pure,
    from_complex_pair,
    multiply,
    require_unit,
    to_complex_pair,
)
from .sphere import INFINITY, ExtendedComplex, chart, ext_conjugate, project, stereo3_inv


class HopfVariant(enum.Enum):
    CLASSIC = "classic"
    QUAT = "quat"
    BLOCH = "bloch"


def conjugate_action(g: Quaternion, p) -> np.ndarray:
    """Rotate p in R^3 by the unit quaternion g: p -> g p g*."""
    require_unit(g)
    q = multiply(multiply(g, embed_pure(p)), conjugate(g))
    # scalar part vanishes identically for pure p; drop rounding residue
    return np.array([q.x1, q.x2, q.x3])


def quat_hopf(g: Quaternion) -> np.ndarray:
    """The quaternion Hopf map g -> g i g*, basepoint (1, 0, 0)."""
    return conjugate_action(g, (1.0, 0.0, 0.0))


def bloch(v: ComplexPair) -> np.ndarray:
    """The Bloch projection (a, b) -> stereo3_inv(conj(a/b)).

    Scale invariant, hence defined on all of C^2 minus the origin.
    """
    if abs(v.z) <= EPS_NORM and abs(v.w) <= EPS_NORM:
        raise ZeroVector("Bloch projection of the zero vector")
    if v.w == 0:
        u: ExtendedComplex = INFINITY
    else:
        ratio = v.z / v.w
        u = INFINITY if not cmath.isfinite(ratio) else ExtendedComplex(ratio)
    return stereo3_inv(ext_conjugate(u))


def hopf_classic(v: ComplexPair) -> np.ndarray:
    """The original Hopf map: stereo3_inv . chart . project on unit vectors."""
    if abs(v.norm() - 1.0) > EPS_NORM:
        raise NotUnit(f"vector norm {v.norm()!r} is not 1")
    return stereo3_inv(chart(project(v)))


def reverse(p) -> np.ndarray:
    """The reflection (x, y, z) -> (z, y, x)."""
    x, y, z = np.asarray(p, dtype=np.float64)
    return np.array([z, y, x])


def _spherical_half_angles(p) -> tuple[float, float]:
    """Colatitude theta and azimuth phi of a unit point; phi = 0 at poles."""
    x, y, z = p
    theta = math.acos(max(-1.0, min(1.0, float(z))))
    phi = math.atan2(float(y), float(x))
    return theta, phi


def lift_bloch(p) -> ComplexPair:
    """Canonical unit preimage of p under the Bloch map.

    Uses the spherical-coordinate section (cos theta/2, e^{i phi} sin theta/2);
    at the south pole phi is fixed to 0, giving (0, 1).
    """
    p = _require_sphere(p)
    theta, phi = _spherical_half_angles(p)
    return ComplexPair(
        complex(math.cos(theta / 2.0)),
        cmath.exp(1j * phi) * math.sin(theta / 2.0),
    )


def lift_classic(p) -> ComplexPair:
    """Canonical unit preimage of p under the classic map.

    The classic map omits the Bloch map's conjugation, so the section is
    the Bloch one with the azimuth phase conjugated.
    """
    p = _require_sphere(p)
    theta, phi = _spherical_half_angles(p)
    return ComplexPair(
        complex(math.cos(theta / 2.0)),
        cmath.exp(-1j * phi) * math.sin(theta / 2.0),
    )


def lift_quat_hopf(p) -> Quaternion:
    """Canonical unit preimage of p under g -> g i g*.

    Constructed as the rotation carrying (1,0,0) to p about the axis
    i x p.  The degenerate bases are pinned: (1,0,0) -> 1, (-1,0,0) -> j.
    """
    p = _require_sphere(p)
    x, y, z = (float(c) for c in p)
    axis = np.array([0.0, -z, y])  # (1,0,0) cross p
    s = float(np.linalg.norm(axis))
    if s <= EPS_NORM:
        return Quaternion(1.0, 0.0, 0.0, 0.0) if x > 0 else Quaternion(0.0, 0.0, 1.0, 0.0)
    axis /= s
    angle = math.acos(max(-1.0, min(1.0, x)))
    c, sn = math.cos(angle / 2.0), math.sin(angle / 2.0)
    return Quaternion(c, sn * axis[0], sn * axis[1], sn * axis[2])


def _require_sphere(p) -> np.ndarray:
    p = np.asarray(p, dtype=np.float64)
    if abs(float(np.dot(p, p)) - 1.0) > 2 * EPS_NORM:
        raise NotUnit(f"point {p.tolist()} is not on the unit sphere")
    return p


def fiber_sample(variant: HopfVariant, base, count: int) -> list[ComplexPair]:
    """Sample `count` points of the fiber over `base`, evenly in phase.

    The fiber is the isotropy orbit of the canonical lift: right quaternion
    multiplication by cos t + i sin t for the quaternion map, complex scalar
    multiplication by e^{it} for the Bloch and classic maps.  count = 1
    returns exactly the canonical lift.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    base = _require_sphere(base)
    out: list[ComplexPair] = []
    if variant is HopfVariant.QUAT:
        lift = lift_quat_hopf(base)
        for m in range(count):
            t = 2.0 * math.pi * m / count
            phase = Quaternion(math.cos(t), math.sin(t), 0.0, 0.0)
            out.append(to_complex_pair(multiply(lift, phase)))
    else:
        lift = lift_bloch(base) if variant is HopfVariant.BLOCH else lift_classic(base)
        for m in range(count):
            t = 2.0 * math.pi * m / count
            out.append(lift.scale(cmath.exp(1j * t)))
    return out


def apply_variant(variant: HopfVariant, v: ComplexPair) -> np.ndarray:
    """Evaluate the selected Hopf map on a C^2 point."""
    if variant is HopfVariant.QUAT:
        return quat_hopf(from_complex_pair(v))
    if variant is HopfVariant.BLOCH:
        return bloch(v)
    return hopf_classic(v)
