"""Biquaternion frames: four-vectors, boosts and the retarded null interval.

A four-vector x is stored as the biquaternion i x0 + x1 e1 + x2 e2 + x3 e3.
A Lorentz factor L acts as X -> L X L+, and the unit null vector of the
retarded frame is K = 2i B conj(sigma) B+ for a boost B and idempotent sigma.
"""
import math

import numpy as np

from causalew.biquaternion import (
    Idempotent, boost, four_velocity, is_null, k_vector, minquat_components, null_interval,
)
from causalew.worldline import Worldline, retarded_frame

# %% A null interval at rest and after a boost along e1
rest = null_interval(2.0, boost(0.0), math.pi / 2, 0.0)
moving = null_interval(2.0, boost(0.5, (1, 0, 0)), math.pi / 2, 0.0)
print("rest frame interval  :", np.round(np.array(minquat_components(rest), float), 6))
print("boosted interval     :", np.round(np.array(minquat_components(moving), float), 6))
print("both null            :", is_null(rest), is_null(moving))

# %% The boost moves the four-velocity off (1, 0, 0, 0)
L = boost(0.5, (1, 0, 0))
print("four-velocity        :", np.round(np.array(minquat_components(four_velocity(L)), float), 6))
print("cosh(0.5)            :", round(math.cosh(0.5), 6))

# %% K from the idempotent agrees with R / xi
sigma = Idempotent((1.0, 0.0, 0.0))
K = k_vector(L, sigma)
print("K from idempotent    :", np.round(np.array(minquat_components(K), float), 6))
print("R / xi               :", np.round(np.array(minquat_components(moving), float) / 2.0, 6))

# %% Retarded frame of a hyperbolic worldline seen from an event
w = Worldline.hyperbolic(1.0)
f = retarded_frame(w, (3.0, 0.5, 0.0, 1.0))
print(f"retarded proper time tau = {f.tau_r:.6f}, xi = {f.xi:.6f}, kappa = {f.kappa:.6f}")
