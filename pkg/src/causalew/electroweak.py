"""Contact propagators, transition amplitudes, chirality and gauge checks.

Units are natural (hbar c = 1, energies in GeV) so that e^2 equals the
fine-structure constant and the weak contact constant is
``G_W = 3 alpha / M_W^2`` in GeV^-2.  ``hbarc`` is only used to express
the Compton length ``hbarc / M_W`` in femtometres.

States are arbitrary biquaternions; amplitudes are ``i S[Df+ conj(Pi) Di]``
with ``S`` the complex scalar part.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import math

import numpy as np

from .biquaternion import (
    Biquaternion, GaugeRotation, I, Idempotent, LorentzFactor, chiral_decompose,
    conj_quat, hermitian, is_null, scalar_part, weiss_rotate,
)

__all__ = [
    "CouplingConstants", "Propagator", "SpinState", "TransitionAmplitude",
    "propagator_em", "propagator_weak", "amplitude", "verify_chirality",
    "verify_gauge_covariance", "mass_estimate", "fermi_constant", "random_state",
    "random_idempotent", "em_sigma_independence",
]

DEFAULT_ALPHA = 1.0 / 137.036
DEFAULT_GF = 1.166e-5          # GeV^-2
DEFAULT_HBARC = 0.1973269804   # GeV fm


def mass_estimate(c: "CouplingConstants", coefficient=3.0) -> float:
    """Boson mass (GeV) for which coefficient * alpha / M^2 = G_F / sqrt(2)."""
    if c.G_F_over_hbarc3 <= 0:
        raise ValueError("G_F must be positive")
    return math.sqrt(coefficient * c.alpha * math.sqrt(2.0) / c.G_F_over_hbarc3)


def fermi_constant(M_W, alpha=DEFAULT_ALPHA, coefficient=3.0) -> float:
    """Inverse of ``mass_estimate``: G_F / (hbar c)^3 in GeV^-2."""
    return coefficient * math.sqrt(2.0) * alpha / M_W ** 2


@dataclass(frozen=True)
class CouplingConstants:
    alpha: float = DEFAULT_ALPHA
    G_F_over_hbarc3: float = DEFAULT_GF
    hbarc: float = DEFAULT_HBARC
    M_W: float = None  # GeV; derived from G_F when omitted

    def __post_init__(self):
        if self.M_W is None:
            object.__setattr__(self, "M_W", mass_estimate(self))

    @classmethod
    def from_config(cls, block):
        kw = {k: float(block[k]) for k in ("alpha", "G_F_over_hbarc3", "hbarc", "M_W") if k in block}
        return cls(**kw)

    @property
    def e2(self):
        return self.alpha

    @property
    def G_W(self):
        return 3.0 * self.alpha / self.M_W ** 2

    @property
    def lam(self):
        """Compton length hbarc / M_W in fm."""
        return self.hbarc / self.M_W


@dataclass(frozen=True, eq=False)
class Propagator:
    value: Biquaternion
    kind: str            # "EM" or "Weak"
    boost: LorentzFactor
    q2: float = None
    sigma: Idempotent = None


@dataclass(frozen=True, eq=False)
class SpinState:
    D: Biquaternion
    gauge: tuple = ()    # GaugeRotations applied so far, innermost first

    def rotated(self, w: GaugeRotation):
        """Compensating transformation D -> W D.

        For a final state this is the same map: D+ -> D+ conj(W) because W is real.
        """
        return SpinState(w.value * self.D, self.gauge + (w,))

    @property
    def dagger(self):
        return hermitian(self.D)


@dataclass(frozen=True)
class TransitionAmplitude:
    value: complex
    channel: str
    frame: dict = field(default_factory=dict)


def _velocity_factor(boost: LorentzFactor, form):
    B = boost.value
    BB = B * hermitian(B)
    if form == "hermitian":
        return BB
    if form == "minquat":
        return I * BB
    raise ValueError(f"unknown velocity form {form!r}")


def propagator_em(q2, boost: LorentzFactor = None, c: CouplingConstants = None,
                  velocity_form="hermitian") -> Propagator:
    """i (e^2/q^2) times the velocity factor.

    ``velocity_form='hermitian'`` uses B B+ (rest value 1); ``'minquat'``
    uses the four-velocity i B B+ instead.
    """
    if q2 is None or q2 <= 0:
        raise ZeroDivisionError("EM propagator needs q^2 > 0")
    boost = boost or LorentzFactor()
    c = c or CouplingConstants()
    value = I * _velocity_factor(boost, velocity_form) * (c.e2 / q2)
    return Propagator(value, "EM", boost, q2=q2)


def propagator_weak(sigma: Idempotent, boost: LorentzFactor = None,
                    c: CouplingConstants = None) -> Propagator:
    """i G_W B conj(sigma) B+, the momentum-independent contact form."""
    sigma.check()
    boost = boost or LorentzFactor()
    c = c or CouplingConstants()
    B = boost.value
    value = I * B * sigma.sigma_bar * hermitian(B) * c.G_W
    return Propagator(value, "Weak", boost, sigma=sigma)


def amplitude(df: SpinState, prop: Propagator, di: SpinState) -> TransitionAmplitude:
    """T = i S[Df+ conj(Pi) Di], energy-conserving factors omitted."""
    body = df.dagger * conj_quat(prop.value) * di.D
    val = scalar_part(I * body)
    frame = {"boost_trivial": prop.boost.value.allclose(Biquaternion((1, 0, 0, 0)))}
    if prop.sigma is not None:
        frame["nu"] = tuple(float(x) for x in prop.sigma.nu)
    return TransitionAmplitude(complex(val), prop.kind, frame)


def _amp_from_dagger(df_dagger, prop, di):
    return complex(scalar_part(I * (df_dagger * conj_quat(prop.value) * di)))


# --- random sampling ------------------------------------------------------

def random_state(rng) -> Biquaternion:
    v = rng.normal(size=8)
    return Biquaternion(tuple(v[:4]), tuple(v[4:]))


def random_idempotent(rng) -> Idempotent:
    v = rng.normal(size=3)
    return Idempotent(tuple(v / np.linalg.norm(v)))


def _norm8(b: Biquaternion):
    return float(np.linalg.norm(np.asarray(b.re + b.im, dtype=float)))


def _streams(trials, seed):
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(trials)]


def verify_chirality(trials=1000, seed=0, tol=1e-12, mirror=False):
    """S[Df+ sigma Di] against S[Df,L+ Di,L] for random states and idempotents.

    The left parts come from the right-factor decomposition of Di and the
    left-factor decomposition of Df+.  ``mirror=True`` swaps sigma for
    conj(sigma) and compares with the right-handed parts.  Deviations are
    relative to |Df| |Di| (Euclidean norms of the eight components).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    devs = []
    for rng in _streams(trials, seed):
        sig = random_idempotent(rng)
        Di, Df = random_state(rng), random_state(rng)
        Dfd = hermitian(Df)
        qiL, qiR = chiral_decompose(Di, sig)
        qfL, qfR = chiral_decompose(Dfd, sig, left_factor=True)
        if mirror:
            lhs = scalar_part(Dfd * sig.sigma_bar * Di)
            rhs = scalar_part(qfR * sig.sigma_bar * sig.sigma_bar * qiR)
        else:
            lhs = scalar_part(Dfd * sig.sigma * Di)
            rhs = scalar_part(qfL * sig.sigma * sig.sigma * qiL)
        devs.append(abs(complex(lhs) - complex(rhs)) / (_norm8(Df) * _norm8(Di)))
    devs = np.array(devs)
    return {"check": "chirality-mirror" if mirror else "chirality", "trials": trials, "seed": seed,
            "max_deviation": float(devs.max()), "mean_deviation": float(devs.mean()),
            "tolerance": tol, "failures": int(np.sum(devs > tol)), "pass": bool(np.all(devs <= tol))}


def verify_gauge_covariance(trials=1000, seed=0, tol=1e-12, control_threshold=1e-3,
                            c: CouplingConstants = None):
    """Weak amplitudes under sigma -> W sigma0 conj(W) with and without compensation.

    Compensated: Di -> W Di0 and Df+ -> Df0+ conj(W); must reproduce the
    sigma0 amplitude.  Uncompensated: only sigma rotates; the mean deviation
    must exceed ``control_threshold``.  Deviations are relative to
    G_W |Df| |Di|.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    c = c or CouplingConstants()
    cov, ctrl = [], []
    for rng in _streams(trials, seed):
        sig0 = random_idempotent(rng)
        Di0, Df0 = random_state(rng), random_state(rng)
        w = GaugeRotation.random(rng)
        W = w.value
        sig = weiss_rotate(w, sig0)
        T0 = _amp_from_dagger(hermitian(Df0), propagator_weak(sig0, c=c), Di0)
        prop = propagator_weak(sig, c=c)
        T_comp = _amp_from_dagger(hermitian(Df0) * conj_quat(W), prop, W * Di0)
        T_bare = _amp_from_dagger(hermitian(Df0), prop, Di0)
        scale = c.G_W * _norm8(Df0) * _norm8(Di0)
        cov.append(abs(T_comp - T0) / scale)
        ctrl.append(abs(T_bare - T0) / scale)
    cov, ctrl = np.array(cov), np.array(ctrl)
    return {"check": "gauge-covariance", "trials": trials, "seed": seed,
            "max_deviation": float(cov.max()), "mean_deviation": float(cov.mean()),
            "tolerance": tol, "failures": int(np.sum(cov > tol)),
            "control_mean_deviation": float(ctrl.mean()), "control_max_deviation": float(ctrl.max()),
            "control_threshold": control_threshold,
            "pass": bool(np.all(cov <= tol) and ctrl.mean() > control_threshold)}


def em_sigma_independence(trials=100, seed=0, tol=1e-12, q2=1.0, c: CouplingConstants = None):
    """EM amplitude equals -(e^2/q^2) S[Df+ Di] whatever idempotent is drawn alongside."""
    c = c or CouplingConstants()
    devs = []
    for rng in _streams(trials, seed):
        random_idempotent(rng)  # drawn and ignored: the EM channel has no chirality selection
        Di, Df = random_state(rng), random_state(rng)
        T = amplitude(SpinState(Df), propagator_em(q2, c=c), SpinState(Di)).value
        ref = -(c.e2 / q2) * complex(scalar_part(hermitian(Df) * Di))
        devs.append(abs(T - ref) / (c.e2 / q2 * _norm8(Df) * _norm8(Di)))
    return {"check": "em-sigma-independence", "trials": trials, "max_deviation": float(max(devs)),
            "tolerance": tol, "pass": bool(max(devs) <= tol)}


def weak_is_null(prop: Propagator, tol=1e-12):
    """The weak propagator value has vanishing biquaternion norm."""
    return is_null(prop.value, tol)
