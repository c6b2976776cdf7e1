"""
Free-space dyadic Green's function and the radiative rates built from it.

Natural units (hbar = eps0 = c = 1), so k = omega.
"""
import math

import numpy as np


def green_dyadic(R, omega):
    """Free-space dyadic Green's function G(R; omega).

    G = -(k e^{ikR} / 4 pi) [P/(kR) + i Q/(kR)**2 - Q/(kR)**3]
    with P = I - RR/R**2 and Q = I - 3 RR/R**2.

    Parameters
    ----------
    R : array_like, shape (3,)
        Displacement between source and field point. Must be non-zero; use
        :func:`im_green_coincident` for the R -> 0+ limit.
    omega : float
        Angular frequency, > 0.

    Returns
    -------
    ndarray, shape (3, 3), complex
    """
    R = np.asarray(R, dtype=float)
    r = np.linalg.norm(R)
    if r == 0:
        raise ValueError("green_dyadic is singular at R = 0; use im_green_coincident")
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega}")
    k = omega
    x = k * r
    rr = np.outer(R, R) / r**2
    eye = np.eye(3)
    P = eye - rr
    Q = eye - 3.0 * rr
    return -(k * np.exp(1j * x) / (4.0 * math.pi)) * (P / x + 1j * Q / x**2 - Q / x**3)


def im_green_coincident(omega):
    """Finite R -> 0+ limit of u.Im G(R; omega).u for any unit vector u.

    The limit is isotropic and equals -k/(6 pi); the sign is negative so that
    decay rates built from it come out positive. Accepts scalars or arrays.
    """
    if not np.all(np.asarray(omega) > 0):
        raise ValueError(f"omega must be positive, got {omega}")
    return -omega / (6.0 * math.pi)


def decay_rate(omega, dipole_sq):
    """Spontaneous emission rate -2 omega**2 |mu|**2 Im G(0+; omega).

    Equal to dipole_sq * omega**3 / (3 pi) in free space.
    """
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega}")
    if not dipole_sq > 0:
        raise ValueError(f"dipole_sq must be positive, got {dipole_sq}")
    return -2.0 * omega**2 * dipole_sq * im_green_coincident(omega)


def dipole_sq_for_rate(omega, rate):
    """Inverse of :func:`decay_rate`: |mu|**2 giving ``rate`` at ``omega``."""
    return 3.0 * math.pi * rate / omega**3
