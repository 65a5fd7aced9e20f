"""Physical constants in Gaussian (CGS) units."""

import math

# Planck constant [erg s]
H_PLANCK = 6.62607015e-27

# Reduced Planck constant [erg s]
HBAR = H_PLANCK / (2.0 * math.pi)

# Speed of light [cm/s]
C_LIGHT = 2.99792458e10
