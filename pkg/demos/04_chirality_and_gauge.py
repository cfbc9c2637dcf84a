"""Weak amplitudes select left-handed parts and are covariant under internal rotations.

The weak contact propagator carries conj(sigma), so the amplitude contains
S[Df+ sigma Di].  Splitting the states into chiral parts shows that only
the left parts contribute.  Rotating sigma by an internal rotation W
changes the amplitude unless the states are rotated along with it.
"""
from causalew import electroweak as ew

chir = ew.verify_chirality(1000, seed=1)
print(f"chirality: {chir['trials']} trials, max relative deviation {chir['max_deviation']:.2e}")

mirror = ew.verify_chirality(1000, seed=2, mirror=True)
print(f"mirror   : max relative deviation {mirror['max_deviation']:.2e}")

gauge = ew.verify_gauge_covariance(1000, seed=3)
print(f"gauge    : compensated max {gauge['max_deviation']:.2e}, "
      f"uncompensated mean {gauge['control_mean_deviation']:.3f}")
