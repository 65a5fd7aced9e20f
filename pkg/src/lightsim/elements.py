"""Spatially- and time-varying retarder elements.

A q-plate is a half-wave (or general-retardance) element whose fast-axis
angle varies with azimuth as alpha = q*phi + alpha0; applying it point by
point with Jones calculus converts circular polarization handedness while
imprinting an azimuthal phase exp(+-2i q phi).  The element is modeled as a
zero-thickness phase mask and alpha has no radial dependence.
"""

import math
from dataclasses import dataclass

import numpy as np

from .beams import VectorField
from .errors import DimensionMismatch, UndersampledRotation
from .polarization import JonesVector, apply, waveplate

MIN_SAMPLES_PER_PERIOD = 64


@dataclass(frozen=True)
class QPlateSpec:
    """q-plate geometry: axis pattern charge q, offset alpha0, retardance."""

    q: float
    alpha0: float = 0.0
    delta: float = math.pi

    def __post_init__(self):
        two_q = 2.0 * self.q
        if abs(two_q - round(two_q)) > 1e-12:
            raise ValueError(
                f"2q must be an integer (axis pattern single-valued mod pi), "
                f"got q={self.q}")


@dataclass(frozen=True)
class PatternedRetarder:
    """Retarder with a free fast-axis angle map (radians) and retardance."""

    alpha_map: np.ndarray
    delta: float


def qplate_matrix(spec, phi):
    """Jones matrix of the q-plate at azimuth phi."""
    return waveplate(spec.delta, spec.q * phi + spec.alpha0)


def _apply_retarder_map(alpha, delta, f):
    """Vectorized per-pixel waveplate with axis-angle map `alpha`."""
    ch = math.cos(delta / 2.0)
    sh = math.sin(delta / 2.0)
    c2 = np.cos(2.0 * alpha)
    s2 = np.sin(2.0 * alpha)
    m00 = ch - 1j * sh * c2
    m01 = -1j * sh * s2
    m11 = ch + 1j * sh * c2
    ex = m00 * f.ex + m01 * f.ey
    ey = m01 * f.ex + m11 * f.ey
    return VectorField(f.grid, ex, ey)


def apply_qplate(spec, f):
    """Apply the q-plate to every pixel of a vector field (unitary)."""
    _, phi = f.grid.polar()
    return _apply_retarder_map(spec.q * phi + spec.alpha0, spec.delta, f)


def apply_patterned(p, f):
    """Apply a patterned retarder; the map must match the field grid."""
    if p.alpha_map.shape != f.ex.shape:
        raise DimensionMismatch(
            f"alpha_map shape {p.alpha_map.shape} does not match field shape "
            f"{f.ex.shape}")
    return _apply_retarder_map(p.alpha_map, p.delta, f)


def _check_sampling(omega, times):
    times = np.asarray(times, dtype=float)
    if times.size < 2:
        raise UndersampledRotation("need at least two sample times")
    dt = np.diff(times)
    if np.max(np.abs(dt - dt[0])) > 1e-9 * abs(dt[0]):
        raise UndersampledRotation("sample times must be uniform")
    if omega != 0.0:
        period = 2.0 * math.pi / abs(omega)
        if period / dt[0] < MIN_SAMPLES_PER_PERIOD:
            raise UndersampledRotation(
                f"{period / dt[0]:.1f} samples per rotation period; need >= "
                f"{MIN_SAMPLES_PER_PERIOD}")
    return times


def rotating_waveplate_series(delta, omega, input_state, times):
    """Output states of a waveplate spinning at omega, sampled at `times`."""
    times = _check_sampling(omega, times)
    return [apply(waveplate(delta, omega * t), input_state) for t in times]


def rotating_qplate_series(spec, omega, f, times):
    """Vector-field outputs of a q-plate whose offset alpha0 advances as
    alpha0 + omega * t."""
    times = _check_sampling(omega, times)
    out = []
    for t in times:
        spec_t = QPlateSpec(spec.q, spec.alpha0 + omega * t, spec.delta)
        out.append(apply_qplate(spec_t, f))
    return out


def qplate_alpha0_decomposition(spec, f):
    """Decompose the q-plate output by its alpha0 dependence.

    The waveplate matrix is linear in {1, e^{2i alpha}, e^{-2i alpha}}, so
    the output for any offset a0 is

        out(a0) = f_c + e^{+2i a0} f_plus + e^{-2i a0} f_minus

    with the three component fields computed here once.  Used to evaluate
    long rotating-q-plate time series without reapplying the element.
    """
    _, phi = f.grid.polar()
    ch = math.cos(spec.delta / 2.0)
    sh = math.sin(spec.delta / 2.0)
    f_c = VectorField(f.grid, ch * f.ex, ch * f.ey)
    # [[cos2a, sin2a], [sin2a, -cos2a]] = e^{2ia}/2 [[1,-i],[-i,-1]]
    #                                   + e^{-2ia}/2 [[1,i],[i,-1]]
    e2 = np.exp(2j * (spec.q * phi + spec.alpha0))
    half = -1j * sh / 2.0
    f_plus = VectorField(f.grid,
                         half * e2 * (f.ex - 1j * f.ey),
                         half * e2 * (-1j * f.ex - f.ey))
    e2c = np.conj(e2)
    f_minus = VectorField(f.grid,
                          half * e2c * (f.ex + 1j * f.ey),
                          half * e2c * (1j * f.ex - f.ey))
    return f_c, f_plus, f_minus
