from fractions import Fraction
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial.transform import Rotation

from causalew.biquaternion import (
    E1, E2, E3, I, ONE, Biquaternion, GaugeRotation, Idempotent, LorentzFactor, boost,
    boost_from_velocity, chiral_decompose, chiral_reconstruct, conj_complex, conj_quat,
    conjugations, four_velocity, hermitian, is_null, k_vector, minquat, minquat_components,
    null_interval, rotation, scalar_part, velocity_factor, weiss_rotate,
)

PAULI = [np.array([[0, 1], [1, 0]], complex), np.array([[0, -1j], [1j, 0]]),
         np.array([[1, 0], [0, -1]], complex)]


def as_matrix(b):
    """Complexified quaternions are M2(C): e_k -> -i sigma_k, complex unit -> i."""
    c = [complex(b.re[k]) + 1j * complex(b.im[k]) for k in range(4)]
    return c[0] * np.eye(2) + sum(-1j * c[k + 1] * PAULI[k] for k in range(3))


def rand_bq(rng):
    v = rng.normal(size=8)
    return Biquaternion(tuple(v[:4]), tuple(v[4:]))


def lorentz_matrix(u):
    """Pure boost matrix taking (1, 0, 0, 0) to the contravariant four-velocity u."""
    g = u[0]
    b = u[1:] / g
    L = np.eye(4)
    L[0, 0] = g
    L[0, 1:] = L[1:, 0] = g * b
    bb = b @ b
    if bb > 0:
        L[1:, 1:] += (g - 1) * np.outer(b, b) / bb
    return L


finite = st.floats(-3, 3, allow_nan=False)
bq = st.builds(lambda *v: Biquaternion(tuple(v[:4]), tuple(v[4:])), *[finite] * 8)


def test_basis_products():
    assert E1 * E2 == E3 and E2 * E3 == E1 and E3 * E1 == E2
    assert E1 * E1 == -ONE


@given(bq, bq)
@settings(max_examples=60, deadline=None)
def test_product_matches_matrix_representation(a, b):
    assert np.allclose(as_matrix(a * b), as_matrix(a) @ as_matrix(b), atol=1e-9)


@given(bq, bq, bq)
@settings(max_examples=40, deadline=None)
def test_associative_and_conjugation_reverses(a, b, c):
    assert ((a * b) * c).allclose(a * (b * c), 1e-8)
    assert conj_quat(a * b).allclose(conj_quat(b) * conj_quat(a), 1e-9)
    assert hermitian(a * b).allclose(hermitian(b) * hermitian(a), 1e-9)
    assert abs(complex(scalar_part(a * b)) - complex(scalar_part(b * a))) < 1e-9
    assert abs(complex(scalar_part(a * b * c)) - complex(scalar_part(b * c * a))) < 1e-8


def test_conjugations_examples():
    q, c, h = conjugations(ONE + E1)
    assert q == ONE - E1
    assert hermitian(I) == -I
    assert hermitian(E1) == -E1
    X = minquat(1.5, 0.2, -0.3, 0.4)
    assert hermitian(X).allclose(-X)
    for f in (conj_quat, conj_complex, hermitian):
        x = Biquaternion((1, 2, 3, 4), (5, 6, 7, 8))
        assert f(f(x)) == x


def test_exact_rationals():
    s = Idempotent((Fraction(0), Fraction(0), Fraction(1)))
    assert s.sigma * s.sigma == s.sigma
    assert s.sigma * s.sigma_bar == Biquaternion((0, 0, 0, 0))
    assert scalar_part(s.sigma) == Fraction(1, 2)
    assert isinstance(scalar_part(s.sigma), Fraction)
    assert hermitian(s.sigma) == s.sigma
    nu = Biquaternion((0, 0, 0, 1), (1, 0, 0, 0))   # i + e3
    assert nu * conj_quat(nu) == Biquaternion((0, 0, 0, 0))


def test_scalar_part_examples():
    assert scalar_part(ONE + E1) == 1


@pytest.mark.parametrize("nu", [(0.6, 0.0, 0.8), (1 / math.sqrt(3),) * 3, (0.0, -1.0, 0.0)])
def test_idempotent_float(nu):
    s = Idempotent(nu)
    assert s.check(1e-14)
    assert hermitian(s.sigma).allclose(s.sigma, 1e-15)


def test_is_null_examples():
    assert is_null(I + E3)
    assert not is_null(I)
    assert is_null(null_interval(2.0, LorentzFactor(), math.pi / 2, 0.0))


def test_null_interval_examples():
    assert null_interval(1.0, LorentzFactor(), 0.0, 0.3).allclose(I + E3)
    assert null_interval(0.0, boost(0.4, (1, 2, 3)), 1.0, 2.0).allclose(Biquaternion((0, 0, 0, 0)))
    with pytest.raises(ValueError):
        null_interval(-1.0, LorentzFactor(), 0, 0)


@pytest.mark.parametrize("rapidity,axis,theta,phi", [
    (0.5, (0, 0, 1), 0.0, 0.0), (0.3, (1, 0, 0), 1.1, 0.4), (1.2, (1, -2, 0.5), 2.0, 5.0)])
def test_boost_matches_lorentz_matrix(rapidity, axis, theta, phi):
    L = boost(rapidity, axis)
    xi = 1.7
    R = null_interval(xi, L, theta, phi)
    n = np.asarray(axis, float) / np.linalg.norm(axis)
    u = np.concatenate([[math.cosh(rapidity)], math.sinh(rapidity) * n])
    nu = [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
    expected = xi * lorentz_matrix(u) @ np.array([1.0] + nu)
    assert np.allclose(np.array(minquat_components(R), float), expected, atol=1e-12)


def test_lorentz_action_preserves_norm():
    rng = np.random.default_rng(3)
    for _ in range(200):
        L = LorentzFactor(boost(rng.uniform(0, 2), rng.normal(size=3)).boost,
                          rotation(rng.uniform(0, 6), rng.normal(size=3)))
        assert (L.value * conj_quat(L.value)).allclose(ONE, 1e-12)
        X = minquat(*rng.normal(size=4))
        Y = L.apply(X)
        assert abs(Y.re[0]) < 1e-12 and max(abs(v) for v in Y.im[1:]) < 1e-12
        n0 = complex(scalar_part(X * conj_quat(X)))
        n1 = complex(scalar_part(Y * conj_quat(Y)))
        assert abs(n1 - n0) <= 1e-12 * max(1.0, abs(n0)) * 10


def test_velocity_factor_conventions():
    assert velocity_factor(LorentzFactor()).allclose(ONE)
    assert four_velocity(LorentzFactor()).allclose(I)
    u = np.array([1.25, 0.75, 0.0, 0.0])
    L = boost_from_velocity(u)
    assert np.allclose(np.array(minquat_components(four_velocity(L)), float), u)
    # real part of B B+ is gamma
    assert abs(complex(scalar_part(velocity_factor(L))) - 1.25) < 1e-14


def test_k_vector():
    s = Idempotent((0.0, 0.0, 1.0))
    assert k_vector(LorentzFactor(), s).allclose(I + E3)
    rng = np.random.default_rng(5)
    for _ in range(50):
        b = boost(rng.uniform(0, 2), rng.normal(size=3))
        v = rng.normal(size=3)
        assert is_null(k_vector(b, Idempotent(tuple(v / np.linalg.norm(v)))))
    b = boost(0.3, (1, 0, 0))
    K = k_vector(b, Idempotent((1.0, 0.0, 0.0)))
    R = null_interval(2.5, b, math.pi / 2, 0.0)
    assert K.allclose(R / 2.5, 1e-14)
    with pytest.raises(ValueError):
        k_vector(LorentzFactor(boost(0.2).boost, rotation(0.3)), s)


def test_chiral_examples():
    s = Idempotent((0.0, 0.6, 0.8))
    qL, qR = chiral_decompose(s.sigma, s)
    assert qL.allclose(ONE) and qR.allclose(Biquaternion((0, 0, 0, 0)))
    qL, qR = chiral_decompose(ONE, s)
    assert qL.allclose(ONE) and qR.allclose(ONE)


def _chiral_linear_solve(b, s, left):
    """Solve b = s QL + sbar QR (or QL s + QR sbar) for real QL, QR as an 8x8 system."""
    cols = []
    for k in range(8):
        q = np.zeros(4)
        q[k % 4] = 1.0
        Q = Biquaternion(tuple(q))
        side = s.sigma if k < 4 else s.sigma_bar
        cols.append((Q * side if left else side * Q).to_array())
    A = np.array(cols).T
    sol = np.linalg.solve(A, b.to_array())
    return sol[:4], sol[4:]


@pytest.mark.parametrize("left", [False, True])
def test_chiral_decompose_vs_linear_solve(left):
    rng = np.random.default_rng(11)
    for _ in range(100):
        b = rand_bq(rng)
        v = rng.normal(size=3)
        s = Idempotent(tuple(v / np.linalg.norm(v)))
        qL, qR = chiral_decompose(b, s, left_factor=left)
        oL, oR = _chiral_linear_solve(b, s, left)
        assert np.allclose(qL.re, oL, atol=1e-11) and np.allclose(qR.re, oR, atol=1e-11)
        assert qL.im == (0, 0, 0, 0) or np.allclose(qL.im, 0)


def test_chiral_roundtrip_1000():
    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(1000):
        b = rand_bq(rng)
        v = rng.normal(size=3)
        s = Idempotent(tuple(v / np.linalg.norm(v)))
        back = chiral_reconstruct(*chiral_decompose(b, s), s)
        worst = max(worst, (back - b).max_abs() / b.max_abs())
    assert worst <= 1e-12


def test_chiral_exact():
    s = Idempotent((Fraction(3, 5), Fraction(0), Fraction(4, 5)))
    b = Biquaternion((Fraction(1), Fraction(-2), Fraction(1, 3), Fraction(5)),
                     (Fraction(7), Fraction(0), Fraction(2), Fraction(-1, 2)))
    for left in (False, True):
        assert chiral_reconstruct(*chiral_decompose(b, s, left), s, left) == b


def test_chiral_rejects_bad_idempotent():
    with pytest.raises(ValueError):
        chiral_decompose(ONE, Idempotent((1.0, 1.0, 0.0)))


def test_weiss_rotate():
    s0 = Idempotent((0.0, 0.0, 1.0))
    assert np.allclose(weiss_rotate(GaugeRotation((1.0, 0, 0, 0)), s0).nu, s0.nu)
    w = GaugeRotation((0.0, 1.0, 0.0, 0.0))  # pi about e1
    assert np.allclose(weiss_rotate(w, s0).nu, (0, 0, -1), atol=1e-15)
    rng = np.random.default_rng(2)
    for _ in range(100):
        w1, w2 = GaugeRotation.random(rng), GaugeRotation.random(rng)
        v = rng.normal(size=3)
        s = Idempotent(tuple(v / np.linalg.norm(v)))
        a = weiss_rotate(w2, weiss_rotate(w1, s))
        b = weiss_rotate(w2 * w1, s)
        assert np.allclose(a.nu, b.nu, atol=1e-13)
        assert abs(np.linalg.norm(a.nu) - 1) < 1e-13
        a.check(1e-13)
        # rotation-matrix oracle (scipy uses scalar-last quaternions)
        q = w1.q
        R = Rotation.from_quat([q[1], q[2], q[3], q[0]])
        assert np.allclose(weiss_rotate(w1, s).nu, R.apply(s.nu), atol=1e-13)


def test_gauge_rotation_unit_norm():
    with pytest.raises(ValueError):
        GaugeRotation((1.0, 1.0, 0.0, 0.0))


def test_serialization_order():
    b = Biquaternion((1, 2, 3, 4), (5, 6, 7, 8))
    assert list(b.to_array()) == [1, 5, 2, 6, 3, 7, 4, 8]
    assert Biquaternion.from_array(b.to_array()) == b
