"""Independent numerical oracle: spectral quadrature on T^n, S^2, and SU(2).

Basis functions are evaluated from their own recurrences (a normalised
associated-Legendre recurrence for the 2-sphere, Jacobi polynomials for the
SU(2) matrix entries), sharing nothing with the exact coupling-coefficient
path, so a disagreement flags a real defect rather than noise.

Grids are exact, not approximate, for band-limited integrands: uniform
rules on the periodic angles and Gauss-Legendre in the polar variable.  A
grid of band B integrates any product of up to three basis functions whose
degrees sum to at most 2B (degree = max|m| on the torus, l on the 2-sphere,
2j on SU(2)).  SU(2) is charted on (alpha, gamma) in [0, 4 pi)^2 - a 2:1
cover of the group - which makes every half-integer frequency periodic;
integrands are genuine group functions, so the doubled cover and the
normalised weights leave integrals unchanged.

All measures are normalised to total mass 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import eval_jacobi

from .modes import Geometry, ModeLabel, Sphere2Geometry, Sphere3Geometry, TorusGeometry


@dataclass
class QuadratureGrid:
    """Tensor quadrature nodes with weights summing to one."""

    geometry: Geometry
    band: int
    axes: tuple[np.ndarray, ...]  # coordinate values per tensor axis
    periods: tuple[float | None, ...]  # period per axis, None for Gauss axes
    weights: np.ndarray  # full tensor, shape = lengths of axes

    @property
    def shape(self) -> tuple[int, ...]:
        return self.weights.shape

    @property
    def nodes(self) -> np.ndarray:
        """Flattened (N, ndim) coordinate tuples, matching weights.ravel()."""
        mesh = np.meshgrid(*self.axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)

    def integrate(self, values: np.ndarray) -> complex:
        return complex(np.sum(self.weights * values))


def make_grid(geometry: Geometry, band: int) -> QuadratureGrid:
    """Spectral grid for the manifold, exact through combined degree 2*band."""
    if band < 1:
        raise ValueError("band limit must be >= 1")
    if isinstance(geometry, TorusGeometry):
        n_pts = 2 * band + 1
        phi = 2 * np.pi * np.arange(n_pts) / n_pts
        axes = tuple(phi for _ in range(geometry.n))
        periods = tuple(2 * np.pi for _ in range(geometry.n))
        weights = np.full((n_pts,) * geometry.n, n_pts ** (-float(geometry.n)))
        return QuadratureGrid(geometry, band, axes, periods, weights)
    if isinstance(geometry, Sphere2Geometry):
        n_z = band + 1
        n_phi = 2 * band + 1
        z, wz = leggauss(n_z)
        phi = 2 * np.pi * np.arange(n_phi) / n_phi
        weights = (wz / 2.0)[:, None] * np.full((1, n_phi), 1.0 / n_phi)
        return QuadratureGrid(geometry, band, (z, phi), (None, 2 * np.pi), weights)
    if isinstance(geometry, Sphere3Geometry):
        n_z = band + 1
        n_ang = 4 * band + 4
        z, wz = leggauss(n_z)
        alpha = 4 * np.pi * np.arange(n_ang) / n_ang
        gamma = 4 * np.pi * np.arange(n_ang) / n_ang
        weights = np.full((n_ang, 1, n_ang), 1.0 / (n_ang * n_ang)) * (wz / 2.0)[
            None, :, None
        ]
        return QuadratureGrid(
            geometry, band, (alpha, z, gamma), (4 * np.pi, None, 4 * np.pi), weights
        )
    raise TypeError(f"unsupported geometry {geometry!r}")


# -- basis evaluation ----------------------------------------------------------


def _normalized_legendre(l: int, m: int, z: np.ndarray) -> np.ndarray:
    """Orthonormal associated Legendre part of Y_lm for m >= 0.

    Stable three-term recurrence on fully normalised functions, with the
    Condon-Shortley sign carried in the diagonal seed.
    """
    pmm = np.full_like(z, 1.0 / np.sqrt(4.0 * np.pi))
    if m > 0:
        sine = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
        for k in range(1, m + 1):
            pmm = -np.sqrt((2 * k + 1) / (2.0 * k)) * sine * pmm
    if l == m:
        return pmm
    pm1 = np.sqrt(2 * m + 3.0) * z * pmm
    if l == m + 1:
        return pm1
    for ll in range(m + 2, l + 1):
        a = np.sqrt((4.0 * ll * ll - 1.0) / (ll * ll - m * m))
        b = np.sqrt(((ll - 1.0) ** 2 - m * m) / (4.0 * (ll - 1.0) ** 2 - 1.0))
        pmm, pm1 = pm1, a * (z * pm1 - b * pmm)
    return pm1


def _wigner_little_d(tj: int, tm: int, tmp: int, z: np.ndarray) -> np.ndarray:
    """d^j_{m m'}(beta) on z = cos(beta) via the Jacobi-polynomial form."""
    mu = abs(tm - tmp) // 2
    nu = abs(tm + tmp) // 2
    s = (tj - max(abs(tm), abs(tmp))) // 2
    xi = 1.0 if tmp >= tm else (-1.0) ** (((tm - tmp) // 2) % 2)
    norm = np.sqrt(
        factorial(s) * factorial(s + mu + nu) / (factorial(s + mu) * factorial(s + nu))
    )
    half = np.clip((1.0 - z) / 2.0, 0.0, None)
    other = np.clip((1.0 + z) / 2.0, 0.0, None)
    return xi * norm * half ** (mu / 2.0) * other ** (nu / 2.0) * eval_jacobi(s, mu, nu, z)


def mode_values(grid: QuadratureGrid, label: ModeLabel) -> np.ndarray:
    """Basis function sampled on the grid (complex array of grid shape)."""
    geo = grid.geometry
    geo.validate(label)
    if isinstance(geo, TorusGeometry):
        out = np.ones(grid.shape, dtype=complex)
        for axis, m in enumerate(label):
            shape = [1] * geo.n
            shape[axis] = -1
            out = out * np.exp(1j * m * grid.axes[axis]).reshape(shape)
        return out
    if isinstance(geo, Sphere2Geometry):
        l, m = label
        z, phi = grid.axes
        plm = _normalized_legendre(l, abs(m), z)
        azim = np.exp(1j * m * phi)
        sign = (-1.0) ** (abs(m) % 2) if m < 0 else 1.0
        return np.sqrt(4.0 * np.pi) * sign * plm[:, None] * azim[None, :]
    if isinstance(geo, Sphere3Geometry):
        tj, tm, tmp = label
        alpha, z, gamma = grid.axes
        dpart = _wigner_little_d(tj, tm, tmp, z)
        left = np.exp(-0.5j * tm * alpha)
        right = np.exp(-0.5j * tmp * gamma)
        return np.sqrt(tj + 1.0) * left[:, None, None] * dpart[None, :, None] * right[None, None, :]
    raise TypeError(f"unsupported geometry {geo!r}")


# -- band bookkeeping ----------------------------------------------------------


def _combined_degree(geometry: Geometry, labels) -> int:
    return sum(geometry.degree(label) for label in labels)


def _require_band(grid: QuadratureGrid, labels) -> None:
    need = _combined_degree(grid.geometry, labels)
    if need > 2 * grid.band:
        raise ValueError(
            f"band limit insufficient: combined degree {need} exceeds 2*band={2 * grid.band}"
        )


# -- oracle integrals ----------------------------------------------------------


def numeric_orthonormality(grid: QuadratureGrid, I: ModeLabel, J: ModeLabel) -> complex:
    """<rho_I, rho_J> under the Hermitean product; delta_IJ for a sane basis."""
    _require_band(grid, (I, J))
    return grid.integrate(mode_values(grid, I) * np.conj(mode_values(grid, J)))


def numeric_product_coefficient(
    grid: QuadratureGrid, I: ModeLabel, J: ModeLabel, K: ModeLabel
) -> complex:
    """c_IJ^K recomputed as the integral of rho_I rho_J conj(rho_K)."""
    _require_band(grid, (I, J, K))
    vals = mode_values(grid, I) * mode_values(grid, J) * np.conj(mode_values(grid, K))
    return grid.integrate(vals)


def numeric_conjugation_pairing(grid: QuadratureGrid, I: ModeLabel, J: ModeLabel) -> complex:
    """eta_IJ recomputed as the unconjugated pair integral of rho_I rho_J."""
    _require_band(grid, (I, J))
    return grid.integrate(mode_values(grid, I) * mode_values(grid, J))


def _operator_axis(grid: QuadratureGrid, j: int) -> tuple[int, float]:
    """Tensor axis and spectral multiplier sign for the j-th invariant operator."""
    geo = grid.geometry
    if not 1 <= j <= geo.r:
        raise ValueError(f"operator index {j} out of range 1..{geo.r}")
    if isinstance(geo, TorusGeometry):
        return j - 1, 1.0  # D_j = -i d/dphi_j
    if isinstance(geo, Sphere2Geometry):
        return 1, 1.0  # D = -i d/dphi
    # SU(2): D_1 = +i d/dalpha, D_2 = +i d/dgamma, so the multiplier flips sign
    return (0, -1.0) if j == 1 else (2, -1.0)


def apply_invariant_operator(grid: QuadratureGrid, j: int, values: np.ndarray) -> np.ndarray:
    """Spectral differentiation of sampled values along the operator's angle."""
    axis, sign = _operator_axis(grid, j)
    period = grid.periods[axis]
    n = values.shape[axis]
    freqs = np.fft.fftfreq(n, d=1.0 / n)  # integer wavenumbers on the axis
    mult = sign * (2.0 * np.pi / period) * freqs
    shape = [1] * values.ndim
    shape[axis] = n
    spectrum = np.fft.fft(values, axis=axis)
    return np.fft.ifft(spectrum * mult.reshape(shape), axis=axis)


def numeric_eigencheck(grid: QuadratureGrid, j: int, I: ModeLabel) -> float:
    """Rayleigh quotient <rho_I, D_j rho_I> / <rho_I, rho_I>."""
    _require_band(grid, (I, I))
    vals = mode_values(grid, I)
    dvals = apply_invariant_operator(grid, j, vals)
    num = grid.integrate(np.conj(vals) * dvals)
    den = grid.integrate(np.conj(vals) * vals)
    return float((num / den).real)


def numeric_cocycle_pairing(
    grid: QuadratureGrid, j: int, I: ModeLabel, J: ModeLabel
) -> complex:
    """Cocycle mode factor recomputed as the integral of (D_j rho_I) rho_J."""
    _require_band(grid, (I, J))
    dvals = apply_invariant_operator(grid, j, mode_values(grid, I))
    return grid.integrate(dvals * mode_values(grid, J))
