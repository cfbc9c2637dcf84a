"""Boson mass from the Fermi constant in the contact limit.

Matching the weak contact constant 3 alpha / M^2 to G_F / sqrt(2) fixes M.
Natural units: energies in GeV, e^2 = alpha.
"""
from causalew import electroweak as ew

c = ew.CouplingConstants()
print(f"alpha          = {c.alpha:.9f}")
print(f"G_F            = {c.G_F_over_hbarc3:.4e} GeV^-2")
print(f"M_W            = {c.M_W:.3f} GeV")
print(f"Compton length = {c.lam:.6f} fm")
print(f"coefficient 3/2 variant: {ew.mass_estimate(c, 1.5):.3f} GeV")

# sensitivity to the Fermi constant
for gf in (1.16e-5, 1.166e-5, 1.17e-5):
    m = ew.mass_estimate(ew.CouplingConstants(G_F_over_hbarc3=gf))
    print(f"G_F = {gf:.4e}  ->  M = {m:.3f} GeV")
