"""Pairing the delta shell with test functions as the mollifier width shrinks.

The shell term is smeared with a compact mollifier of width eps.  Against
a bump T the pairing vanishes like eps^2.  Against T / xi^2 it tends to
(3/2) e T(0) U, where U is the four-velocity.  Richardson extrapolation
over a geometric eps sweep gives the limits.  The radial Fourier transforms
of 1/xi and delta/xi^2 are checked the same way.
"""
import numpy as np

from causalew import genfun
from causalew.worldline import Worldline

T = genfun.TestFunction("bump", radius=1.0)
eps = genfun.eps_sweep(0.1, 6)

# %% Rest frame and a hyperbolic worldline
for w, tau in ((Worldline.rest(), 0.0), (Worldline.hyperbolic(1.0), 0.3)):
    zero, finite = genfun.check_shell_pairings(w, [tau], T, eps)
    print(f"{w.kind:10s} <shell, T>      -> {np.round(zero['extrapolated'], 12)} "
          f"(order {zero['observed_order']:.3f})")
    print(f"{'':10s} <shell, T/xi^2> -> {np.round(finite['extrapolated'], 9)} "
          f"expected {np.round(finite['expected'], 9)}")

# %% Coulomb generating function: d_r Phi_a - phi_a vanishes as a -> 0
for r in genfun.coulomb_generating_check(eps, T):
    print(f"{r['check']:20s} extrapolated {r['extrapolated']}")

# %% Fourier transforms at a few momenta
for r in genfun.fourier_checks([0.5, 1.0, 2.0, 5.0]):
    print(f"{r['check']:20s} q={r['parameters']['q']:<4g} value {r['extrapolated']:.12g} "
          f"expected {r['expected']:.12g}")
