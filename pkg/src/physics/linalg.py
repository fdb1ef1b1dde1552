"""Small dense complex matrix helpers (2×2 and 3×3).

Matrices are plain ``numpy`` arrays of ``complex128``; every function returns a new array and
never mutates its arguments.
"""

from __future__ import annotations

import numpy as np
import numpy.typing as npt
from scipy import linalg

from src.config import HERMITIAN_TOL
from src.errors import NonHermitianInput

CMat = npt.NDArray[np.complex128]

_SIZES = (2, 3)


def as_cmat(a: npt.ArrayLike) -> CMat:
    """Coerce to a square complex128 array of size 2 or 3."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in _SIZES:
        raise ValueError(f"Expected a 2×2 or 3×3 matrix, got shape {m.shape}")
    return m


def identity(n: int) -> CMat:
    return np.eye(n, dtype=np.complex128)


def multiply(a: CMat, b: CMat) -> CMat:
    """Matrix product ``a @ b``.

    Time ordering is right-to-left: ``multiply(later, earlier)``.

    Raises:
        ValueError: If the dimensions differ.
    """
    if a.shape != b.shape:
        raise ValueError(f"Dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


def chain(mats: list[CMat]) -> CMat:
    """Compose propagators given in application order (first applied first)."""
    if not mats:
        raise ValueError("Cannot compose an empty list of propagators")
    out = mats[0]
    for m in mats[1:]:
        out = multiply(m, out)
    return out


def adjoint(a: CMat) -> CMat:
    return np.conj(a).T.copy()


def is_hermitian(h: CMat, tol: float = HERMITIAN_TOL) -> bool:
    """Hermiticity test relative to the largest entry modulus."""
    scale = max(float(np.max(np.abs(h))), 1.0)
    return bool(np.max(np.abs(h - adjoint(h))) <= tol * scale)


def expm_skew_hermitian(h: CMat, t: float) -> CMat:
    """Return ``exp(-i·h·t)`` for Hermitian ``h`` via eigen-decomposition.

    Raises:
        NonHermitianInput: If ``h`` is not Hermitian within tolerance.
    """
    h = as_cmat(h)
    if not is_hermitian(h):
        raise NonHermitianInput(f"Generator is not Hermitian: {h!r}")
    # symmetrize away the sub-tolerance residue before handing to eigh
    w, v = linalg.eigh(0.5 * (h + adjoint(h)))
    return (v * np.exp(-1j * w * t)) @ adjoint(v)


def frobenius_dist(a: CMat, b: CMat) -> float:
    if a.shape != b.shape:
        raise ValueError(f"Dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b, "fro"))


def unitarity_defect(u: CMat) -> float:
    """‖U†U − I‖_F."""
    return frobenius_dist(adjoint(u) @ u, identity(u.shape[0]))


def is_unitary(u: CMat, tol: float) -> bool:
    return unitarity_defect(u) < tol


def polar_unitary(a: CMat) -> CMat:
    """Nearest unitary to ``a`` (unitary factor of the polar decomposition)."""
    w, _, vh = np.linalg.svd(a)
    return w @ vh


def qubit_block(u: CMat) -> CMat:
    """Rows/columns 0 and 1 of a three-state propagator."""
    return u[:2, :2].copy()
