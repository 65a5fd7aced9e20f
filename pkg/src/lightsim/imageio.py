"""Binary image and CSV writers for scenario outputs.

Intensity and phase maps go to 16-bit big-endian portable graymaps (P5);
Stokes composites to 8-bit portable pixmaps (P6) with (s1, s2, s3) mapped
affinely from [-1, 1] onto the RGB channels.  CSV files use a header row,
'.' decimal separator, 17-significant-digit scientific notation and LF
line endings.
"""

import math

import numpy as np


def _write_pnm(path, magic, maxval, payload, shape):
    h, w = shape
    header = f"{magic}\n{w} {h}\n{maxval}\n".encode("ascii")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(payload)


def write_intensity_pgm(path, intensity):
    """16-bit P5 graymap of a nonnegative map, scaled to its own peak."""
    arr = np.asarray(intensity, dtype=float)
    peak = float(arr.max())
    scaled = arr / peak if peak > 0.0 else arr
    data = np.round(scaled * 65535.0).astype(">u2")
    _write_pnm(path, "P5", 65535, data.tobytes(), arr.shape)


def write_phase_pgm(path, phase):
    """16-bit P5 graymap of a phase map, (-pi, pi] mapped linearly."""
    arr = np.asarray(phase, dtype=float)
    frac = (arr + math.pi) / (2.0 * math.pi)  # (-pi, pi] -> (0, 1]
    data = np.round(np.clip(frac, 0.0, 1.0) * 65535.0).astype(">u2")
    _write_pnm(path, "P5", 65535, data.tobytes(), arr.shape)


def write_stokes_ppm(path, sf):
    """8-bit P6 pixmap with normalized (s1, s2, s3) as RGB."""
    s0 = np.where(sf.s0 > 0.0, sf.s0, 1.0)
    rgb = np.stack([sf.s1 / s0, sf.s2 / s0, sf.s3 / s0], axis=-1)
    data = np.round((np.clip(rgb, -1.0, 1.0) + 1.0) * 127.5).astype(np.uint8)
    _write_pnm(path, "P6", 255, data.tobytes(), data.shape[:2])


def format_number(x):
    """Scientific notation with 17 significant digits."""
    return f"{float(x):.16e}"


def write_csv(path, header, rows):
    """CSV with LF line endings; numeric cells formatted scientifically."""
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for cell in row:
            if isinstance(cell, bool) or isinstance(cell, str):
                cells.append(str(cell))
            elif isinstance(cell, (int, np.integer)):
                cells.append(str(int(cell)))
            else:
                cells.append(format_number(cell))
        lines.append(",".join(cells))
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
