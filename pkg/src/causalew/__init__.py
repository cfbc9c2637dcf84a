"""Biquaternion retarded potentials, generalized-function numerics and
contact-interaction amplitudes."""

__version__ = "0.1.0"

from . import biquaternion, worldline, symbolic, genfun, electroweak  # noqa: E402,F401
