"""Analytic worldlines and retarded-coordinate numerics.

Four-vectors here are plain numpy arrays of contravariant components
``(t, x, y, z)`` with ``c = 1``.  Scalar invariants (``xi``, ``kappa``,
``chi``) are signature independent and positive-``xi``:

    xi    = U0 R0 - U.R        (retarded distance)
    kappa = A0 K0 - A.K        (acceleration invariant)
    chi   = J0 K0 - J.K        (biacceleration invariant, J = d^3 Z / d tau^3)

Lower-index components depend on the metric signature.  ``signature=-1``
is ``(-,+,+,+)`` (the default, ``U.U = -1``); ``signature=+1`` is
``(+,-,-,-)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import math

import numpy as np

from .biquaternion import minquat, minquat_components, Biquaternion

__all__ = [
    "Worldline", "RetardedFrame", "NoConvergenceError", "OnWorldlineError",
    "StepTooLargeError", "metric", "dot", "lower", "as_fourvector",
    "retarded_time", "retarded_frame", "numeric_gradient", "validate_rule_table",
    "uniform_retarded_distance", "relative_deviation",
]


class NoConvergenceError(RuntimeError):
    pass


class OnWorldlineError(ValueError):
    pass


class StepTooLargeError(ValueError):
    pass


def metric(signature=-1):
    return signature * np.diag([1.0, -1.0, -1.0, -1.0])


def dot(a, b, signature=-1):
    a = np.asarray(a)
    b = np.asarray(b)
    return signature * (a[..., 0] * b[..., 0] - np.sum(a[..., 1:] * b[..., 1:], axis=-1))


def lower(v, signature=-1):
    v = np.asarray(v, dtype=float)
    return v * (signature * np.array([1.0, -1.0, -1.0, -1.0]))


def as_fourvector(x):
    """Accept a Minquat or a length-4 sequence; return contravariant components."""
    if isinstance(x, Biquaternion):
        return np.array([float(c) for c in minquat_components(x)])
    x = np.asarray(x, dtype=float)
    if x.shape != (4,):
        raise ValueError("a four-vector needs 4 components")
    return x


def _as_minquat(v):
    return minquat(*[float(c) for c in v])


@dataclass(frozen=True)
class Worldline:
    """A timelike worldline with closed-form proper-time derivatives.

    kinds and parameters:
      rest       position (3,)
      uniform    beta (3,), position (3,) at tau = 0
      hyperbolic g, axis (3,)         Z(0) at origin, at rest
      circular   radius, omega         lab angular rate, orbit in the x-y plane
    """
    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("rest", "uniform", "hyperbolic", "circular"):
            raise ValueError(f"unknown worldline kind {self.kind!r}")
        if self.kind == "uniform" and np.linalg.norm(self._vec("beta")) >= 1:
            raise ValueError("|beta| must be < 1")
        if self.kind == "circular" and abs(self.params.get("radius", 1.0) * self.params.get("omega", 0.5)) >= 1:
            raise ValueError("circular orbit speed must be < 1")

    @classmethod
    def rest(cls, position=(0.0, 0.0, 0.0)):
        return cls("rest", {"position": tuple(position)})

    @classmethod
    def uniform(cls, beta, position=(0.0, 0.0, 0.0)):
        return cls("uniform", {"beta": tuple(beta), "position": tuple(position)})

    @classmethod
    def hyperbolic(cls, g=1.0, axis=(0.0, 0.0, 1.0)):
        return cls("hyperbolic", {"g": float(g), "axis": tuple(axis)})

    @classmethod
    def circular(cls, radius=1.0, omega=0.5):
        return cls("circular", {"radius": float(radius), "omega": float(omega)})

    @classmethod
    def from_config(cls, block):
        """Build from a flat mapping, e.g. ``{"kind": "uniform", "beta": "0.6 0 0"}``."""
        block = dict(block)
        kind = block.pop("kind")

        def parse(v):
            if isinstance(v, str):
                parts = v.replace(",", " ").split()
                return tuple(float(p) for p in parts) if len(parts) > 1 else float(parts[0])
            return v
        return cls(kind, {k: parse(v) for k, v in block.items()})

    def _vec(self, name, default=(0.0, 0.0, 0.0)):
        return np.asarray(self.params.get(name, default), dtype=float)

    def derivatives(self, tau):
        """(Z, U, A, J): position and first three proper-time derivatives."""
        tau = float(tau)
        k = self.kind
        if k == "rest":
            p = self._vec("position")
            Z = np.concatenate([[tau], p])
            U = np.array([1.0, 0, 0, 0])
            return Z, U, np.zeros(4), np.zeros(4)
        if k == "uniform":
            b = self._vec("beta")
            gam = 1.0 / math.sqrt(1.0 - b @ b)
            U = gam * np.concatenate([[1.0], b])
            Z = np.concatenate([[0.0], self._vec("position")]) + tau * U
            return Z, U, np.zeros(4), np.zeros(4)
        if k == "hyperbolic":
            g = self.params.get("g", 1.0)
            n = self._vec("axis", (0.0, 0.0, 1.0))
            n = n / np.linalg.norm(n)
            ch, sh = math.cosh(g * tau), math.sinh(g * tau)
            Z = np.concatenate([[sh / g], (ch - 1.0) / g * n])
            U = np.concatenate([[ch], sh * n])
            A = g * np.concatenate([[sh], ch * n])
            J = g * g * U
            return Z, U, A, J
        a = self.params.get("radius", 1.0)
        w = self.params.get("omega", 0.5)
        gam = 1.0 / math.sqrt(1.0 - (a * w) ** 2)
        t = gam * tau
        c, s = math.cos(w * t), math.sin(w * t)
        Z = np.array([t, a * c, a * s, 0.0])
        U = gam * np.array([1.0, -a * w * s, a * w * c, 0.0])
        A = gam ** 2 * np.array([0.0, -a * w * w * c, -a * w * w * s, 0.0])
        J = gam ** 3 * np.array([0.0, a * w ** 3 * s, -a * w ** 3 * c, 0.0])
        return Z, U, A, J

    def position(self, tau):
        return self.derivatives(tau)[0]

    def minquats(self, tau):
        """Z, Zdot, Zddot, Zdddot as Minquats."""
        return tuple(_as_minquat(v) for v in self.derivatives(tau))


@dataclass(frozen=True)
class RetardedFrame:
    tau_r: float
    xi: float
    K: np.ndarray       # contravariant, null, U0 K0 - U.K = 1
    kappa: float
    chi: float
    R: np.ndarray
    U: np.ndarray
    A: np.ndarray
    J: np.ndarray

    @property
    def K_minquat(self):
        return _as_minquat(self.K)

    def bindings(self, signature=-1):
        """Numeric values for the symbolic atoms, lower-index components."""
        return {
            "xi": self.xi, "kappa": self.kappa, "chi": self.chi,
            "K": lower(self.K, signature), "U": lower(self.U, signature),
            "A": lower(self.A, signature), "J": lower(self.J, signature),
            "R": lower(self.R, signature), "g": metric(signature),
        }


def _light_cone_gap(w, x, tau):
    Z, U, _, _ = w.derivatives(tau)
    d = x[1:] - Z[1:]
    r = math.sqrt(d @ d)
    h = (x[0] - Z[0]) - r
    dh = -U[0] + (d @ U[1:]) / r if r > 0 else -U[0]
    return h, dh


def _bracket(w, x, max_iter):
    h0, _ = _light_cone_gap(w, x, 0.0)
    stride = max(abs(h0), float(np.linalg.norm(x[1:] - w.position(0.0)[1:])), 1e-3)
    tau_lo = tau_hi = 0.0
    h_lo = h_hi = h0
    for _ in range(max_iter):
        if h0 > 0 and h_hi > 0:
            tau_lo, h_lo = tau_hi, h_hi
            tau_hi += stride
            h_hi, _ = _light_cone_gap(w, x, tau_hi)
        elif h0 <= 0 and h_lo <= 0:
            tau_hi, h_hi = tau_lo, h_lo
            tau_lo -= stride
            h_lo, _ = _light_cone_gap(w, x, tau_lo)
        else:
            return tau_lo, h_lo, tau_hi
        stride *= 2
    raise NoConvergenceError("could not bracket the retarded time")


def retarded_time(w: Worldline, x, max_iter=200, scale_tol=1e-12):
    """Proper time of the retarded point of ``x`` on ``w``.

    The gap h(tau) = (t - z0) - |x - z| is strictly decreasing along a
    timelike worldline, so the past root is unique.  Starting from tau = 0
    it is bracketed by strides that begin at the field-point distance and
    double, then refined by Newton steps that fall back to bisection
    whenever they leave the bracket.
    """
    x = as_fourvector(x)
    size = 1.0 + float(x @ x)
    try:
        with np.errstate(over="raise", invalid="raise"):
            tau_lo, h_lo, tau_hi = _bracket(w, x, max_iter)
    except (OverflowError, FloatingPointError):
        raise NoConvergenceError("no past light-cone intersection (point beyond the horizon?)")
    if h_lo == 0:
        return tau_lo
    tau = 0.5 * (tau_lo + tau_hi)
    for _ in range(max_iter):
        h, dh = _light_cone_gap(w, x, tau)
        if h == 0:
            break
        if h > 0:
            tau_lo = tau
        else:
            tau_hi = tau
        step = tau - h / dh if dh != 0 else 0.5 * (tau_lo + tau_hi)
        if not (tau_lo < step < tau_hi):
            step = 0.5 * (tau_lo + tau_hi)
        if abs(step - tau) <= 2e-16 * max(1.0, abs(tau)) or tau_hi - tau_lo <= 4e-16 * max(1.0, abs(tau)):
            tau = step
            break
        tau = step
    else:
        raise NoConvergenceError("retarded time did not converge")
    R = x - w.position(tau)
    if abs(dot(R, R)) > scale_tol * size:
        raise NoConvergenceError(f"light-cone residual {abs(dot(R, R)):.3g} too large")
    return tau


def retarded_frame(w: Worldline, x) -> RetardedFrame:
    x = as_fourvector(x)
    tau = retarded_time(w, x)
    Z, U, A, J = w.derivatives(tau)
    R = x - Z
    xi = float(dot(U, R, signature=1))
    if not xi > 1e-300 or xi < 1e-14 * (1 + np.abs(x).max()):
        raise OnWorldlineError("field point lies on the worldline")
    K = R / xi
    kappa = float(dot(A, K, signature=1))
    chi = float(dot(J, K, signature=1))
    return RetardedFrame(tau, xi, K, kappa, chi, R, U, A, J)


_QUANTITIES = ("tau", "xi", "kappa", "K", "R", "U", "A")


def _quantity(name, w, x, signature):
    f = retarded_frame(w, x)
    if name == "tau":
        return np.array(f.tau_r)
    if name in ("xi", "kappa", "chi"):
        return np.array(getattr(f, name))
    if name in ("K", "R", "U", "A", "J"):
        return lower(getattr(f, name), signature)
    if name == "x":
        return np.asarray(x, dtype=float)
    raise ValueError(f"unknown retarded quantity {name!r}")


def _fd4(f, x, mu, h):
    e = np.zeros(4)
    e[mu] = h
    return (-f(x + 2 * e) + 8 * f(x + e) - 8 * f(x - e) + f(x - 2 * e)) / (12 * h)


def numeric_gradient(quantity, w: Worldline, x, h=None, signature=-1, tol=1e-7):
    """Fourth-order central-difference four-gradient d_mu Q of a retarded quantity.

    ``quantity`` is one of ``tau, xi, kappa, K, R, U, A`` or ``x`` (the
    coordinate functions x^nu, for self-checks).  Vector quantities are
    differentiated in their lower-index components; the result has shape
    (4,) for scalars and (4, 4) indexed [mu, nu] for vectors.

    The truncation error is estimated from the step-h and step-2h results
    (Richardson, factor 15 for a fourth-order stencil); if it exceeds
    ``tol`` relative to the gradient size a StepTooLargeError is raised.
    """
    x = as_fourvector(x)
    if h is None:
        h = 1e-3 * max(retarded_frame(w, x).xi, 1e-3)
    if h <= 0:
        raise ValueError("h must be positive")
    f = lambda p: _quantity(quantity, w, p, signature)
    fine = np.array([_fd4(f, x, mu, h) for mu in range(4)])
    coarse = np.array([_fd4(f, x, mu, 2 * h) for mu in range(4)])
    trunc = np.max(np.abs(fine - coarse)) / 15.0
    if trunc > tol * max(float(np.max(np.abs(fine))), 1e-6):
        raise StepTooLargeError(f"truncation estimate {trunc:.3g} exceeds tolerance at h={h}")
    return fine


def relative_deviation(a, b, floor=1e-8):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    denom = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))), floor)
    return float(np.max(np.abs(a - b))) / denom


def validate_rule_table(w: Worldline, sample_points, table=None, tol=1e-5,
                        worldline_name=None, h=None):
    """Compare every gradient rule of ``table`` with numeric gradients.

    Returns JSON-ready records ``{rule, worldline, point, deviation, pass}``.
    Failures are report entries, never exceptions.
    """
    from .symbolic import RuleTable, evaluate_numeric

    table = table if table is not None else RuleTable()
    name = worldline_name or w.kind
    records = []
    for p in sample_points:
        p = as_fourvector(p)
        frame = retarded_frame(w, p)
        for rule in table.validated_rules():
            expr = table.gradient_expr(rule)
            symbolic = evaluate_numeric(expr, frame, {}, signature=table.signature)
            try:
                numeric = numeric_gradient(rule, w, p, h=h, signature=table.signature)
                dev = relative_deviation(symbolic, numeric)
            except StepTooLargeError:
                dev = float("inf")
            records.append({
                "rule": rule, "worldline": name, "point": [float(v) for v in p],
                "deviation": dev, "pass": bool(dev <= tol),
            })
    return records


def uniform_retarded_distance(w: Worldline, x):
    """Three-dimensional form |x - z| gamma (1 - n.beta) of xi for uniform motion.

    The retarded lab time solves the light-cone quadratic in closed form,
    independently of ``retarded_time``.
    """
    if w.kind not in ("uniform", "rest"):
        raise ValueError("closed form needs a uniform-velocity worldline")
    x = as_fourvector(x)
    b = w._vec("beta") if w.kind == "uniform" else np.zeros(3)
    d = x[1:] - w._vec("position")
    T = x[0]
    a = 1.0 - b @ b
    half_b = T - d @ b
    c = T * T - d @ d
    disc = half_b * half_b - a * c
    if disc < 0:
        raise NoConvergenceError("no real light-cone intersection")
    t = (half_b - math.sqrt(disc)) / a
    rho = d - b * t
    r = math.sqrt(rho @ rho)
    if r == 0:
        raise OnWorldlineError("field point lies on the worldline")
    return r * (1.0 - (rho / r) @ b) / math.sqrt(a)
