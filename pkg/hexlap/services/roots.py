"""Real roots of the cubic (k = 1) and quintic (k >= 2) spectral-step polynomials.

For an eigenvalue sigma of the previous level, every root lambda is an eigenvalue of
a symmetric matrix with spectrum in [0, 2], so all roots are real and lie in [0, 2].
Roots are isolated by sign changes on a uniform grid, then refined by vectorised
bisection and a guarded Newton step. Whole levels are solved at once: one polynomial
per row of a coefficient matrix.
"""
import logging

import numpy as np
import numpy.typing as npt
from numpy.polynomial import Polynomial

from ..config import get_settings
from ..errors import RootBracketingError
from ..models.spectrum import RootSet

logger = logging.getLogger(__name__)

LOWER, UPPER = 0.0, 2.0
MAX_BISECTIONS = 200
# Grid values evaluated per block while bracketing.
BLOCK_VALUES = 2_000_000

FloatArray = npt.NDArray[np.float64]


def step_degree(k: int) -> int:
    return 3 if k == 1 else 5


def _cubic_coefficients(s: FloatArray) -> FloatArray:
    """4x^3 - (10 + 2s)x^2 + (5 + 4s)x - s."""
    return np.stack([-s, 5 + 4 * s, -(10 + 2 * s), np.full_like(s, 4.0)], axis=-1)


def _quintic_coefficients(s: FloatArray, k: int) -> FloatArray:
    return np.stack(
        [
            -s * (k + 5),
            25 * k + 5 + 40 * s,
            -(100 * k + 40 + 84 * s),
            140 * k + 84 + 64 * s,
            -(80 * k + 64 + 16 * s),
            np.full_like(s, 16 * k + 16),
        ],
        axis=-1,
    )


def step_coefficients(sigmas: npt.ArrayLike, k: int) -> FloatArray:
    """Ascending coefficients of the step polynomial, one row per sigma."""
    s = np.asarray(sigmas, dtype=float)
    return _cubic_coefficients(s) if k == 1 else _quintic_coefficients(s, k)


def cubic_polynomial(sigma: float) -> Polynomial:
    return Polynomial(_cubic_coefficients(np.asarray(sigma, dtype=float)))


def quintic_polynomial(sigma: float, k: int) -> Polynomial:
    return Polynomial(_quintic_coefficients(np.asarray(sigma, dtype=float), k))


def _evaluate(coefficients: FloatArray, x: FloatArray) -> FloatArray:
    """Horner's rule row by row; ``x`` is (rows, points) or (1, points)."""
    acc = coefficients[:, -1:]
    for j in range(coefficients.shape[1] - 2, -1, -1):
        acc = acc * x + coefficients[:, j : j + 1]
    return acc


def _bracket(
    coefficients: FloatArray, expected: int, points: int
) -> tuple[FloatArray, FloatArray, npt.NDArray[np.bool_]]:
    grid = np.linspace(LOWER, UPPER, points)
    rows = len(coefficients)
    lo = np.zeros((rows, expected))
    hi = np.zeros((rows, expected))
    found = np.zeros(rows, dtype=bool)

    block = max(1, BLOCK_VALUES // points)
    for start in range(0, rows, block):
        values = _evaluate(coefficients[start : start + block], grid[None, :])
        change = values[:, :-1] * values[:, 1:] < 0.0
        good = change.sum(axis=1) == expected
        cells = np.nonzero(change[good])[1].reshape(-1, expected)
        index = start + np.flatnonzero(good)
        lo[index], hi[index] = grid[cells], grid[cells + 1]
        found[index] = True
    return lo, hi, found


def _refine(coefficients: FloatArray, lo: FloatArray, hi: FloatArray, tol: float) -> FloatArray:
    f_lo = _evaluate(coefficients, lo)
    for _ in range(MAX_BISECTIONS):
        if lo.size == 0 or np.max(hi - lo) < tol:
            break
        mid = 0.5 * (lo + hi)
        f_mid = _evaluate(coefficients, mid)
        same_side = np.sign(f_mid) == np.sign(f_lo)
        lo = np.where(same_side, mid, lo)
        f_lo = np.where(same_side, f_mid, f_lo)
        hi = np.where(same_side, hi, mid)

    roots = 0.5 * (lo + hi)
    degree = coefficients.shape[1] - 1
    derivative = coefficients[:, 1:] * np.arange(1, degree + 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        polished = roots - _evaluate(coefficients, roots) / _evaluate(derivative, roots)
    keep = (
        np.isfinite(polished)
        & (polished >= lo - tol)
        & (polished <= hi + tol)
        & (np.abs(_evaluate(coefficients, polished)) <= np.abs(_evaluate(coefficients, roots)))
    )
    return np.where(keep, polished, roots)


def real_roots(coefficients: FloatArray, expected: int, sigmas: npt.ArrayLike) -> FloatArray:
    """The ``expected`` real roots in [0, 2] of every row, ascending along each row."""
    settings = get_settings()
    coefficients = np.atleast_2d(coefficients)
    sigmas = np.atleast_1d(np.asarray(sigmas, dtype=float))
    rows = len(coefficients)
    lo = np.zeros((rows, expected))
    hi = np.zeros((rows, expected))
    pending = np.arange(rows)

    for points in (settings.ROOT_GRID_POINTS, settings.ROOT_FALLBACK_GRID_POINTS):
        if pending.size == 0:
            break
        block_lo, block_hi, found = _bracket(coefficients[pending], expected, points)
        lo[pending[found]], hi[pending[found]] = block_lo[found], block_hi[found]
        if not found.all():
            logger.debug(
                f"{int((~found).sum())} of {pending.size} polynomials not bracketed "
                f"on {points} points"
            )
        pending = pending[~found]

    if pending.size:
        sigma = float(sigmas[pending[0]])
        raise RootBracketingError(
            f"Could not bracket {expected} real roots in [0, 2] for sigma={sigma!r}; "
            "sigma is probably not a normalized Laplacian eigenvalue"
        )
    return np.sort(_refine(coefficients, lo, hi, settings.ROOT_TOLERANCE), axis=1)


def step_roots(sigmas: npt.ArrayLike, k: int) -> FloatArray:
    """Roots of the step polynomial for every sigma; shape (len(sigmas), 3 or 5)."""
    sigmas = np.atleast_1d(np.asarray(sigmas, dtype=float))
    return real_roots(step_coefficients(sigmas, k), step_degree(k), sigmas)


def cubic_roots(sigma: float) -> RootSet:
    return RootSet(sigma=sigma, roots=tuple(step_roots([sigma], 1)[0].tolist()))


def quintic_roots(sigma: float, k: int) -> RootSet:
    coefficients = _quintic_coefficients(np.array([sigma], dtype=float), k)
    roots = real_roots(coefficients, 5, [sigma])[0]
    return RootSet(sigma=sigma, roots=tuple(roots.tolist()))
