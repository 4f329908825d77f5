# -*- coding: utf-8 -*-
"""
Dense linear algebra
====================

Small dense complex matrices (at most 16 x 16, typically 4 x 4). Matrices are
``numpy.ndarray`` of dtype ``complex128``; Hermitian eigendecompositions are
computed by cyclic Jacobi rotations.
"""
import logging
from typing import NamedTuple

import numpy as np

from .meta import QubithermError

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-10
CONVERGENCE_TOL = 1e-14
MAX_SWEEPS = 100
MAX_DIM = 16
EXPONENT_GUARD = 700
PSD_TOL = 1e-12


class NotHermitian(QubithermError, ValueError):
    """ Raised when a matrix expected to be Hermitian is not. """

    pass


class NoConvergence(QubithermError, ArithmeticError):
    """ Raised when the Jacobi eigensolver exceeds its sweep budget. """

    pass


class Overflow(QubithermError, OverflowError):
    """ Raised when a matrix exponential would overflow double precision. """

    pass


class NotPSD(QubithermError, ValueError):
    """ Raised when a matrix expected to be positive semi-definite is not. """

    pass


class HermitianEigenDecomposition(NamedTuple):
    """
    Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.
    Column ``k`` of ``eigenvectors`` is paired with ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self):
        """ Matrix :math:`V \\Lambda V^\\dagger`. """
        V = self.eigenvectors
        return (V * self.eigenvalues) @ V.conj().T

    def apply(self, func):
        """ Matrix function :math:`V f(\\Lambda) V^\\dagger`, Hermitized. """
        V = self.eigenvectors
        result = (V * func(self.eigenvalues)) @ V.conj().T
        return hermitize(result)


def as_matrix(m):
    """
    Cast ``m`` to a square, finite, complex matrix.

    Raises
    ------
    ValueError
        if ``m`` is not square or contains NaN / Inf.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError(f"Expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("Matrix entries must be finite")
    return m


def dagger(m):
    """ Conjugate transpose. """
    return np.conj(np.transpose(m))


def hermitize(m):
    """ Hermitian part of ``m``, :math:`(m + m^\\dagger)/2`. """
    return (m + dagger(m)) / 2


def hermiticity_error(m):
    """ Largest entry of :math:`|m - m^\\dagger|`. """
    return float(np.max(np.abs(m - dagger(m))))


def is_hermitian(m, tol=HERMITIAN_TOL):
    return hermiticity_error(as_matrix(m)) <= tol


def kron(a, b):
    """
    Kronecker product of two matrices.

    Entry ``(i * dim(b) + k, j * dim(b) + l)`` of the result is ``a[i, j] * b[k, l]``.

    Parameters
    ----------
    a, b : array_like, shape (N, N) and (M, M)

    Returns
    -------
    out : `~numpy.ndarray`, shape (N*M, N*M)
    """
    return np.kron(as_matrix(a), as_matrix(b))


def _jacobi_rotation(A, p, q):
    """
    Unitary ``G`` such that ``(G^dagger A G)[p, q] = 0``. The phase of ``A[p, q]``
    is absorbed into column ``q`` so that the remaining rotation is real.
    """
    apq = A[p, q]
    g = abs(apq)
    phase = apq / g

    theta = (A[q, q].real - A[p, p].real) / (2 * g)
    t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta ** 2 + 1))
    c = 1 / np.sqrt(t ** 2 + 1)
    s = t * c

    G = np.eye(A.shape[0], dtype=complex)
    G[p, p] = c
    G[p, q] = s
    G[q, p] = -s * np.conj(phase)
    G[q, q] = c * np.conj(phase)
    return G


def hermitian_eigen(m):
    """
    Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    m : array_like, shape (N, N)
        Hermitian matrix, N <= 16.

    Returns
    -------
    decomp : HermitianEigenDecomposition
        Eigenvalues in ascending order (ties keep their diagonal order) and
        orthonormal eigenvectors as columns.

    Raises
    ------
    NotHermitian
        if :math:`\\max |m - m^\\dagger| > 10^{-10}`.
    NoConvergence
        if the off-diagonal norm does not vanish within 100 sweeps.
    """
    A = as_matrix(m)
    n = A.shape[0]
    if n > MAX_DIM:
        raise ValueError(f"Matrices larger than {MAX_DIM}x{MAX_DIM} are not supported")

    error = hermiticity_error(A)
    if error > HERMITIAN_TOL:
        raise NotHermitian(f"Matrix deviates from Hermiticity by {error:.3e}")

    A = hermitize(A)
    V = np.eye(n, dtype=complex)
    threshold = CONVERGENCE_TOL * np.linalg.norm(A)

    for sweep in range(MAX_SWEEPS + 1):
        off_norm = np.linalg.norm(A - np.diag(np.diag(A)))
        if off_norm <= threshold:
            break
        if sweep == MAX_SWEEPS:
            raise NoConvergence(
                f"Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps "
                f"(off-diagonal norm {off_norm:.3e})"
            )

        for p in range(n - 1):
            for q in range(p + 1, n):
                if A[p, q] == 0:
                    continue
                G = _jacobi_rotation(A, p, q)
                A = dagger(G) @ A @ G
                A[p, q] = A[q, p] = 0
                V = V @ G

    logger.debug(f"Jacobi eigensolver converged after {sweep} sweeps")

    eigenvalues = np.real(np.diag(A))
    order = np.argsort(eigenvalues, kind="stable")
    return HermitianEigenDecomposition(
        eigenvalues=eigenvalues[order], eigenvectors=V[:, order]
    )


def matexp_hermitian(m, scale):
    """
    Matrix exponential :math:`\\exp(s \\cdot m)` of a Hermitian matrix.

    Parameters
    ----------
    m : array_like, shape (N, N)
        Hermitian matrix.
    scale : float
        Real factor :math:`s` multiplying ``m`` in the exponent.

    Returns
    -------
    out : `~numpy.ndarray`, shape (N, N)
        Hermitian positive-definite matrix.

    Raises
    ------
    Overflow
        if the largest exponent :math:`s \\lambda` exceeds 700.
    """
    decomp = hermitian_eigen(m)
    exponents = scale * decomp.eigenvalues
    if np.max(exponents) > EXPONENT_GUARD:
        raise Overflow(
            f"Exponent {np.max(exponents):.3e} exceeds the guard of {EXPONENT_GUARD}"
        )
    return decomp.apply(lambda eigvals: np.exp(scale * eigvals))


def psd_sqrt(m):
    """
    Principal square root of a positive semi-definite Hermitian matrix.
    Eigenvalues in :math:`[-10^{-12}, 0)` are treated as rounding noise and clamped to zero.

    Raises
    ------
    NotPSD
        if any eigenvalue is smaller than :math:`-10^{-12}`.
    """
    decomp = hermitian_eigen(m)
    smallest = decomp.eigenvalues[0]
    if smallest < -PSD_TOL:
        raise NotPSD(f"Matrix has a negative eigenvalue {smallest:.3e}")
    return decomp.apply(lambda eigvals: np.sqrt(np.clip(eigvals, 0, None)))
