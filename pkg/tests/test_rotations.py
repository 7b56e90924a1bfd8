import cmath
import math

import numpy as np
import pytest

from hopfrot import (
    AxisAngle,
    ComplexPair,
    NotUnit,
    Quaternion,
    ZeroVector,
    act_on_vector,
    axis_angle,
    convert_convention,
    gb,
    gq,
    lift_bloch,
    lift_quat_hopf,
    matvec_as_quat,
    multiply,
    reconcile,
    rotate,
    rotate_via_bloch,
    rotate_via_quat_hopf,
    su2_from_quat,
    to_axis_angle,
)
from hopfrot.quat import I, ONE
from hopfrot.su2 import IDENTITY

from oracles import rodrigues

RNG = np.random.default_rng(23)
S = 1 / math.sqrt(2)


def random_axis_angle(rng):
    n = rng.standard_normal(3)
    n /= np.linalg.norm(n)
    return axis_angle(rng.uniform(0, 2 * math.pi), n)


def random_sphere(rng):
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_unit_quat(rng):
    v = rng.standard_normal(4)
    v /= np.linalg.norm(v)
    return Quaternion(*v)


def test_axis_angle_rejects_bad_axis():
    with pytest.raises(NotUnit):
        AxisAngle(1.0, (0.0, 0.0, 2.0))


def test_gq_examples():
    assert gq(axis_angle(0, (0, 1, 0))) == ONE
    q = gq(axis_angle(math.pi, (1, 0, 0)))
    assert q.x0 == pytest.approx(0, abs=1e-15) and q.x1 == pytest.approx(1)
    q = gq(axis_angle(math.pi / 2, (0, 0, 1)))
    assert q.x0 == pytest.approx(S) and q.x3 == pytest.approx(S)


def test_gb_examples():
    assert gb(axis_angle(0, (0, 1, 0))) == IDENTITY
    m = gb(axis_angle(math.pi, (0, 0, 1)))
    assert m.z == pytest.approx(-1j) and abs(m.w) <= 1e-15
    m = gb(axis_angle(math.pi, (0, 1, 0)))
    assert abs(m.z) <= 1e-15 and m.w == pytest.approx(-1)


def test_rotate_examples():
    aa = axis_angle(math.pi / 2, (0, 0, 1))
    np.testing.assert_allclose(rotate(aa, (1, 0, 0)), [0, 1, 0], atol=1e-15)
    aa = axis_angle(1.234, (0, 1, 0))
    np.testing.assert_allclose(rotate(aa, (0, 1, 0)), [0, 1, 0], atol=1e-15)
    aa = axis_angle(2 * math.pi, (1, 0, 0))
    np.testing.assert_allclose(rotate(aa, (0.2, -1.0, 0.5)), [0.2, -1.0, 0.5], atol=1e-12)


def test_rotate_matches_rodrigues():
    for _ in range(1000):
        aa = random_axis_angle(RNG)
        p = 3.0 * RNG.standard_normal(3)
        np.testing.assert_allclose(
            rotate(aa, p), rodrigues(aa.theta, aa.axis, p), atol=1e-9
        )


def test_rotation_composition_same_axis():
    for _ in range(200):
        n = random_sphere(RNG)
        t1, t2 = RNG.uniform(0, 2 * math.pi, 2)
        p = random_sphere(RNG)
        once = rotate(axis_angle(t2, n), rotate(axis_angle(t1, n), p))
        both = rotate(axis_angle(t1 + t2, n), p)
        np.testing.assert_allclose(once, both, atol=1e-9)


def test_double_cover():
    for _ in range(100):
        aa = random_axis_angle(RNG)
        flipped = axis_angle(aa.theta + 2 * math.pi, aa.axis)
        q1, q2 = gq(aa), gq(flipped)
        np.testing.assert_allclose(
            [q2.x0, q2.x1, q2.x2, q2.x3],
            [-q1.x0, -q1.x1, -q1.x2, -q1.x3],
            atol=1e-12,
        )
        p = random_sphere(RNG)
        np.testing.assert_allclose(rotate(aa, p), rotate(flipped, p), atol=1e-12)


def test_rotate_via_quat_hopf():
    np.testing.assert_allclose(
        rotate_via_quat_hopf(axis_angle(0, (0, 0, 1)), ONE), [1, 0, 0]
    )
    np.testing.assert_allclose(
        rotate_via_quat_hopf(axis_angle(math.pi, (0, 0, 1)), ONE), [-1, 0, 0], atol=1e-15
    )
    for _ in range(200):
        aa = random_axis_angle(RNG)
        p = random_sphere(RNG)
        hq = lift_quat_hopf(p)
        t = RNG.uniform(0, 2 * math.pi)
        spun = multiply(hq, Quaternion(math.cos(t), math.sin(t), 0, 0))
        np.testing.assert_allclose(rotate_via_quat_hopf(aa, hq), rotate(aa, p), atol=1e-9)
        np.testing.assert_allclose(
            rotate_via_quat_hopf(aa, spun), rotate_via_quat_hopf(aa, hq), atol=1e-9
        )


def test_rotate_via_bloch():
    np.testing.assert_allclose(
        rotate_via_bloch(axis_angle(0, (0, 0, 1)), ComplexPair(1, 0)), [0, 0, 1]
    )
    np.testing.assert_allclose(
        rotate_via_bloch(axis_angle(math.pi, (0, 1, 0)), ComplexPair(1, 0)),
        [0, 0, -1],
        atol=1e-15,
    )
    for _ in range(200):
        aa = random_axis_angle(RNG)
        p = random_sphere(RNG)
        hb = lift_bloch(p)
        lam = complex(*RNG.standard_normal(2))
        if abs(lam) < 1e-3:
            continue
        np.testing.assert_allclose(rotate_via_bloch(aa, hb), rotate(aa, p), atol=1e-9)
        np.testing.assert_allclose(
            rotate_via_bloch(aa, hb.scale(lam)), rotate_via_bloch(aa, hb), atol=1e-9
        )


def test_matvec_as_quat_is_matrix_action():
    assert matvec_as_quat(IDENTITY, ComplexPair(0.2 + 1j, -3 + 0.1j)) == ComplexPair(
        0.2 + 1j, -3 + 0.1j
    )
    for _ in range(500):
        g = su2_from_quat(random_unit_quat(RNG))
        h = ComplexPair(complex(*RNG.standard_normal(2)), complex(*RNG.standard_normal(2)))
        a = act_on_vector(g, h)
        b = matvec_as_quat(g, h)
        assert abs(a.z - b.z) <= 1e-12 and abs(a.w - b.w) <= 1e-12


def test_convert_convention_relation():
    q, m = convert_convention(axis_angle(0, (1, 0, 0)))
    assert q == ONE and m == IDENTITY
    for _ in range(500):
        aa = random_axis_angle(RNG)
        m = gb(aa)
        n1, n2, n3 = aa.axis
        mirrored = su2_from_quat(gq(axis_angle(-aa.theta, (n3, n2, n1))))
        assert abs(m.z - mirrored.z) <= 1e-12
        assert abs(m.w - mirrored.w) <= 1e-12


def test_convert_convention_half_turn():
    m = gb(axis_angle(math.pi, (0, 0, 1)))
    q = gq(axis_angle(-math.pi, (1, 0, 0)))
    assert q.x1 == pytest.approx(-1)
    mirrored = su2_from_quat(q)
    assert abs(m.z - mirrored.z) <= 1e-15 and abs(m.w - mirrored.w) <= 1e-15


def test_reconcile():
    aa = axis_angle(math.pi / 2, (0, 0, 1))
    a, b = reconcile(aa, np.array([1.0, 0, 0]), 0.0, 1.0)
    np.testing.assert_allclose(a, [0, 1, 0], atol=1e-15)
    np.testing.assert_allclose(b, [0, 1, 0], atol=1e-15)
    for _ in range(300):
        aa = random_axis_angle(RNG)
        p = random_sphere(RNG)
        fq = RNG.uniform(0, 2 * math.pi)
        fb = cmath.exp(complex(RNG.uniform(-2, 2), RNG.uniform(0, 2 * math.pi)))
        a, b = reconcile(aa, p, fq, fb)
        np.testing.assert_allclose(a, b, atol=1e-9)
        np.testing.assert_allclose(a, rotate(aa, p), atol=1e-9)


def test_reconcile_identity_rotation():
    p = random_sphere(RNG)
    a, b = reconcile(axis_angle(0, (0, 1, 0)), p, 1.0, 2.0 - 1.0j)
    np.testing.assert_allclose(a, p, atol=1e-9)
    np.testing.assert_allclose(b, p, atol=1e-9)


def test_reconcile_zero_fiber_rejected():
    with pytest.raises(ZeroVector):
        reconcile(axis_angle(1.0, (1, 0, 0)), np.array([0.0, 0, 1]), 0.0, 0.0)


def test_to_axis_angle_round_trip():
    for _ in range(300):
        aa = random_axis_angle(RNG)
        q = gq(aa)
        back = gq(to_axis_angle(q))
        np.testing.assert_allclose(
            [back.x0, back.x1, back.x2, back.x3],
            [q.x0, q.x1, q.x2, q.x3],
            atol=1e-12,
        )
    assert to_axis_angle(ONE).theta == 0.0
