"""Biquaternion algebra.

A biquaternion is stored as ``P + i Q`` with ``P`` and ``Q`` real
quaternions on the basis ``{1, e1, e2, e3}`` (``e1 e2 = e3`` cyclically,
``ei**2 = -1``).  Keeping the real and imaginary parts apart means the
arithmetic never leaves the scalar type it was given: ints and
``Fraction`` stay exact, floats stay floats, and numpy arrays broadcast so
that a single ``Biquaternion`` can hold a whole grid of values.

Four-vectors are carried as *Minquats* ``i x0 + x``: imaginary scalar
part, real vector part.  With that convention ``X * conj(X)`` equals
``-(x0)**2 + |x|**2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

__all__ = [
    "Biquaternion",
    "ONE", "E1", "E2", "E3", "I",
    "multiply", "conjugations", "conj_quat", "conj_complex", "hermitian",
    "scalar_part", "norm", "is_null",
    "minquat", "minquat_components",
    "LorentzFactor", "boost", "rotation", "boost_from_velocity",
    "Idempotent", "GaugeRotation", "direction",
    "null_interval", "k_vector", "chiral_decompose", "chiral_reconstruct",
    "weiss_rotate", "velocity_factor", "four_velocity",
]


def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def _qadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _qsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _qneg(a):
    return tuple(-x for x in a)


def _qconj(a):
    return (a[0], -a[1], -a[2], -a[3])


def _is_scalar(v):
    return isinstance(v, (int, float, complex, Fraction, np.number)) or (
        isinstance(v, np.ndarray) and v.ndim == 0)


def _split(v):
    """Real and imaginary part of a scalar, keeping Fractions exact."""
    if isinstance(v, (complex, np.complexfloating)) or (
            isinstance(v, np.ndarray) and np.iscomplexobj(v)):
        return np.real(v), np.imag(v)
    return v, 0


@dataclass(frozen=True, eq=False)
class Biquaternion:
    re: tuple
    im: tuple = (0, 0, 0, 0)

    def __post_init__(self):
        if len(self.re) != 4 or len(self.im) != 4:
            raise ValueError("a biquaternion needs four real and four imaginary components")
        object.__setattr__(self, "re", tuple(self.re))
        object.__setattr__(self, "im", tuple(self.im))

    @classmethod
    def from_complex(cls, w=0, x=0, y=0, z=0):
        parts = [_split(c) for c in (w, x, y, z)]
        return cls(tuple(p[0] for p in parts), tuple(p[1] for p in parts))

    @classmethod
    def from_array(cls, values):
        """Inverse of :meth:`to_array` (8 reals, interleaved re/im)."""
        v = list(values)
        if len(v) != 8:
            raise ValueError("expected 8 reals")
        return cls(tuple(v[0::2]), tuple(v[1::2]))

    @classmethod
    def scalar(cls, c):
        return cls.from_complex(c)

    @property
    def coefficients(self):
        """The four complex coefficients (w, x, y, z)."""
        return tuple(r + 1j * i for r, i in zip(self.re, self.im))

    @property
    def w(self):
        return self.re[0] + 1j * self.im[0]

    def vector(self):
        return self.coefficients[1:]

    def to_array(self):
        """Serialization order: [Re w, Im w, Re x, Im x, Re y, Im y, Re z, Im z]."""
        out = []
        for r, i in zip(self.re, self.im):
            out += [float(r), float(i)]
        return out

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Biquaternion(_qadd(self.re, other.re), _qadd(self.im, other.im))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Biquaternion(_qsub(self.re, other.re), _qsub(self.im, other.im))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Biquaternion(_qneg(self.re), _qneg(self.im))

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, np.ndarray):
            r, i = _split(other)
            return Biquaternion(
                tuple(r * a - i * b for a, b in zip(self.re, self.im)),
                tuple(r * b + i * a for a, b in zip(self.re, self.im)),
            )
        if not isinstance(other, Biquaternion):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        # scalars commute with every biquaternion
        return self.__mul__(other)

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        r, i = _split(other)
        if i == 0:
            if isinstance(r, int):
                r = Fraction(r)
            return Biquaternion(tuple(a / r for a in self.re), tuple(b / r for b in self.im))
        return self * (1 / complex(other))

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return all(a == b for a, b in zip(self.re + self.im, other.re + other.im))

    __hash__ = None

    def __repr__(self):
        names = ("", "e1", "e2", "e3")
        parts = []
        for n, c in zip(names, self.coefficients):
            if c != 0:
                parts.append(f"{c}{'*' + n if n else ''}")
        return "Biquaternion(" + (" + ".join(parts) if parts else "0") + ")"

    def conj(self):
        return conj_quat(self)

    def allclose(self, other, atol=1e-12):
        other = _coerce(other)
        d = self - other
        return all(np.all(np.abs(np.asarray(v, dtype=float)) <= atol) for v in d.re + d.im)

    def max_abs(self):
        return max(float(np.max(np.abs(np.asarray(v, dtype=float)))) for v in self.re + self.im)


def _coerce(v):
    if isinstance(v, Biquaternion):
        return v
    if _is_scalar(v) or isinstance(v, np.ndarray):
        r, i = _split(v)
        return Biquaternion((r, 0, 0, 0), (i, 0, 0, 0))
    return NotImplemented


ONE = Biquaternion((1, 0, 0, 0))
E1 = Biquaternion((0, 1, 0, 0))
E2 = Biquaternion((0, 0, 1, 0))
E3 = Biquaternion((0, 0, 0, 1))
I = Biquaternion((0, 0, 0, 0), (1, 0, 0, 0))


def multiply(a: Biquaternion, b: Biquaternion) -> Biquaternion:
    """Hamilton product over complex coefficients."""
    re = _qsub(_qmul(a.re, b.re), _qmul(a.im, b.im))
    im = _qadd(_qmul(a.re, b.im), _qmul(a.im, b.re))
    return Biquaternion(re, im)


def conj_quat(b: Biquaternion) -> Biquaternion:
    return Biquaternion(_qconj(b.re), _qconj(b.im))


def conj_complex(b: Biquaternion) -> Biquaternion:
    return Biquaternion(b.re, _qneg(b.im))


def hermitian(b: Biquaternion) -> Biquaternion:
    """B+ : quaternion conjugate followed by complex conjugate."""
    return Biquaternion(_qconj(b.re), _qneg(_qconj(b.im)))


def conjugations(b: Biquaternion):
    """Return (quaternion, complex, hermitian) conjugates of ``b``."""
    return conj_quat(b), conj_complex(b), hermitian(b)


def scalar_part(b: Biquaternion):
    """S[b] = (b + conj(b))/2.

    Exact rational input with a vanishing imaginary part returns the exact
    rational; everything else returns a complex value.
    """
    r, i = b.re[0], b.im[0]
    if isinstance(r, (int, Fraction)) and isinstance(i, (int, Fraction)) and i == 0:
        return r
    return r + 1j * i


def norm(b: Biquaternion):
    """Quaternion norm N(b) = b * conj(b), a (complex) scalar."""
    return scalar_part(b * conj_quat(b))


def is_null(x: Biquaternion, tol: float = 1e-12) -> bool:
    """True iff |X conj(X)| <= tol (1 + ||X||^2), ||.|| the coefficient 2-norm."""
    if tol < 0:
        raise ValueError("tol must be non-negative")
    n = x * conj_quat(x)
    size = sum(float(v) ** 2 for v in x.re + x.im)
    resid = max(abs(complex(float(r), float(i))) for r, i in zip(n.re, n.im))
    return resid <= tol * (1.0 + size)


def minquat(x0, x1, x2, x3) -> Biquaternion:
    """The Minquat i*x0 + (x1, x2, x3)."""
    return Biquaternion((0, x1, x2, x3), (x0, 0, 0, 0))


def minquat_components(x: Biquaternion):
    """Contravariant components (x0, x1, x2, x3) of a Minquat.

    Raises ValueError if ``x`` is not of the form i*x0 + real vector.
    """
    stray = [x.re[0]] + list(x.im[1:])
    if any(np.any(np.abs(np.asarray(v, dtype=float)) > 1e-9 * (1 + x.max_abs())) for v in stray):
        raise ValueError(f"not a Minquat: {x!r}")
    return x.im[0], x.re[1], x.re[2], x.re[3]


# --- Lorentz factors ------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LorentzFactor:
    """L = boost * rotation, acting on Minquats as X -> L X L+."""
    boost: Biquaternion = ONE
    rot: Biquaternion = ONE

    @property
    def value(self) -> Biquaternion:
        return self.boost * self.rot

    def apply(self, x: Biquaternion) -> Biquaternion:
        L = self.value
        return L * x * hermitian(L)

    def __mul__(self, other):
        # composition of two boosts is in general not a pure boost; only the
        # product value is meaningful, stored as a boost with trivial rotation
        return LorentzFactor(self.value * other.value, ONE)


def boost(rapidity, axis=(0.0, 0.0, 1.0)) -> LorentzFactor:
    """Pure boost taking the rest four-velocity to velocity tanh(rapidity) along ``axis``."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    c, s = math.cosh(rapidity / 2), math.sinh(rapidity / 2)
    b = Biquaternion((c, 0.0, 0.0, 0.0), (0.0, -s * n[0], -s * n[1], -s * n[2]))
    return LorentzFactor(b, ONE)


def rotation(angle, axis=(0.0, 0.0, 1.0)) -> Biquaternion:
    """Unit real quaternion rotating vectors by ``angle`` about ``axis`` (via R x conj(R))."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    c, s = math.cos(angle / 2), math.sin(angle / 2)
    return Biquaternion((c, s * n[0], s * n[1], s * n[2]))


def boost_from_velocity(u) -> LorentzFactor:
    """Boost whose action maps the rest four-velocity onto ``u`` (contravariant, u0 > 0)."""
    u = np.asarray(u, dtype=float)
    speed = np.linalg.norm(u[1:])
    if speed == 0.0:
        return LorentzFactor()
    return boost(math.asinh(speed), u[1:] / speed)


def velocity_factor(L: LorentzFactor) -> Biquaternion:
    """The real-normalised velocity factor L L+ = B B+ (rest value 1)."""
    v = L.value
    return v * hermitian(v)


def four_velocity(L: LorentzFactor) -> Biquaternion:
    """The Minquat four-velocity i * L L+ (rest value i)."""
    return I * velocity_factor(L)


# --- idempotents and internal rotations ----------------------------------

def direction(theta, phi):
    """Unit vector (sin t cos p, sin t sin p, cos t)."""
    return (math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta))


@dataclass(frozen=True, eq=False)
class Idempotent:
    nu: tuple  # real unit 3-vector

    @classmethod
    def from_angles(cls, theta, phi):
        return cls(direction(theta, phi))

    @property
    def sigma(self) -> Biquaternion:
        half = Fraction(1, 2) if all(isinstance(c, (int, Fraction)) for c in self.nu) else 0.5
        return Biquaternion((half, 0, 0, 0), (0,) + tuple(half * c for c in self.nu))

    @property
    def sigma_bar(self) -> Biquaternion:
        return conj_quat(self.sigma)

    def check(self, tol=1e-12):
        s, sb = self.sigma, self.sigma_bar
        zero = Biquaternion((0, 0, 0, 0))
        ok = ((s * s).allclose(s, tol) and (s * sb).allclose(zero, tol)
              and (sb * s).allclose(zero, tol) and (s + sb).allclose(ONE, tol))
        if not ok:
            raise ValueError(f"not an idempotent: nu = {self.nu}")
        return True


@dataclass(frozen=True, eq=False)
class GaugeRotation:
    """Unit real quaternion W (an SU(2) element) used as an internal rotation."""
    q: tuple

    def __post_init__(self):
        n2 = sum(float(c) ** 2 for c in self.q)
        if abs(n2 - 1.0) > 1e-12:
            raise ValueError("gauge rotation must have unit norm")

    @property
    def value(self) -> Biquaternion:
        return Biquaternion(tuple(self.q))

    @classmethod
    def random(cls, rng):
        v = rng.normal(size=4)
        return cls(tuple(v / np.linalg.norm(v)))

    def __mul__(self, other):
        return GaugeRotation(_qmul(self.q, other.q))


def null_interval(xi, L: LorentzFactor, theta, phi) -> Biquaternion:
    """R = xi * L (i + nu(theta, phi)) L+."""
    if xi < 0:
        raise ValueError("xi must be non-negative")
    nu = direction(theta, phi)
    core = Biquaternion((0.0,) + nu, (1.0, 0.0, 0.0, 0.0))
    return L.apply(core) * xi


def k_vector(b: LorentzFactor, sigma: Idempotent) -> Biquaternion:
    """K = 2i B conj(sigma) B+ for a pure boost B."""
    if not b.rot.allclose(ONE):
        raise ValueError("k_vector expects a boost with trivial rotation")
    B = b.boost
    return I * B * sigma.sigma_bar * hermitian(B) * 2


def _check_real(q: Biquaternion, what):
    if q.im != (0, 0, 0, 0):
        raise AssertionError(f"{what} is not real")


def chiral_decompose(b: Biquaternion, sigma: Idempotent, left_factor=False):
    """Split ``b`` into real quaternions (Q_L, Q_R).

    Right-factor form (default): b = sigma Q_L + conj(sigma) Q_R.
    Left-factor form: b = Q_L sigma + Q_R conj(sigma).
    """
    sigma.check()
    nu = Biquaternion((0,) + tuple(sigma.nu))
    P = Biquaternion(b.re)
    Q = Biquaternion(b.im)
    # sigma A + conj(sigma) B = (A + B)/2 + i nu (A - B)/2, nu^-1 = -nu
    twist = Q * nu if left_factor else nu * Q
    qL, qR = P - twist, P + twist
    return qL, qR


def chiral_reconstruct(qL, qR, sigma: Idempotent, left_factor=False) -> Biquaternion:
    s, sb = sigma.sigma, sigma.sigma_bar
    if left_factor:
        return qL * s + qR * sb
    return s * qL + sb * qR


def weiss_rotate(w: GaugeRotation, sigma0: Idempotent) -> Idempotent:
    """nu = W nu0 conj(W), equivalently sigma = W sigma0 conj(W)."""
    W = w.value
    v = W * Biquaternion((0,) + tuple(sigma0.nu)) * conj_quat(W)
    return Idempotent(tuple(v.re[1:]))
