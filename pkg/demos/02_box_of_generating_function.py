"""Symbolic d'Alembertian of the Lienard-Wiechert generating function.

The generating function (1/2) e R_mu Ups(xi) is differentiated with the
causal gradient rules.  The box contains a Coulomb-like term and a shell of
delta and delta' terms on the light cone.  Under association the delta'
terms fold into delta terms, which leaves the shell coefficient (3 - 4 xi kappa)/2.
"""
from causalew.symbolic import (
    RuleTable, assoc_simplify, dalembertian, generating_function, reference_lienard_wiechert,
)

# %% The rule table (signature -1: U.U = -1)
for atom, grad in RuleTable().describe().items():
    print(f"d_mu {atom:6s} = {grad}")

# %% Box of the generating function, exact rational coefficients
box = dalembertian(generating_function())
print("\nbox =", box)

# %% Three simplification modes
for mode in ("strict", "associative", "schwartz"):
    shell = assoc_simplify(box, mode) - reference_lienard_wiechert()
    print(f"{mode:12s} shell term: {shell}")
