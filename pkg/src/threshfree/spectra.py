"""Freeness predicates and an independent dense eigensolver.

The oracle never looks at the cotree recurrences: it builds the adjacency
matrix from the creation sequence and runs cyclic Jacobi, then certifies
the result with a residual bound.
"""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from fractions import Fraction

import numba
import numpy as np

from .cotree import Cotree, build_adjacency, cotree_to_binary, poset_leq
from .diagonalize import count_triple, inertia_closed_form, left_closed_form
from .numeric import ScalarLike, as_scalar, format_scalar

log = logging.getLogger(__name__)

ORACLE_MAX_N = 500


@dataclass(frozen=True)
class Interval:
    """``(0, N]`` on the right side of the spectrum or ``[M, -1)`` on the left."""

    side: str
    value: Fraction

    @classmethod
    def right(cls, N: ScalarLike) -> "Interval":
        N = as_scalar(N)
        if N <= 0:
            raise ValueError("right interval needs N > 0")
        return cls("right", N)

    @classmethod
    def left(cls, M: ScalarLike) -> "Interval":
        M = as_scalar(M)
        if M >= -1:
            raise ValueError("left interval needs M < -1")
        return cls("left", M)

    def is_free(self, c: Cotree) -> bool:
        if self.side == "right":
            return is_right_free(c, self.value)
        return is_left_free(c, self.value)

    def __str__(self) -> str:
        v = format_scalar(self.value)
        return f"(0, {v}]" if self.side == "right" else f"[{v}, -1)"

    def to_json(self) -> dict:
        return {"side": self.side, "value": format_scalar(self.value)}


def is_right_free(c: Cotree, N: ScalarLike) -> bool:
    """No eigenvalue in ``(0, N]``: the count above ``N`` equals the count above 0."""
    N = as_scalar(N)
    if N <= 0:
        raise ValueError("N must be positive")
    return count_triple(c, N).greater == inertia_closed_form(c).greater


def is_left_free(c: Cotree, M: ScalarLike) -> bool:
    """No eigenvalue in ``[M, -1)``."""
    M = as_scalar(M)
    if M >= -1:
        raise ValueError("M must be below -1")
    counts = count_triple(c, M)
    return counts.equal == 0 and counts.greater == left_closed_form(c)


def check_family_extension(base: Cotree, ext: Cotree, interval: Interval) -> bool:
    """Freeness of ``ext``, which must dominate an already-free ``base``.

    A ``False`` result contradicts interlacing and is logged as an error.
    """
    if not poset_leq(base, ext):
        raise ValueError(f"{ext} does not dominate {base}")
    if not interval.is_free(base):
        raise ValueError(f"{base} is not {interval}-eigenvalue free")
    free = interval.is_free(ext)
    if not free:
        log.error("interlacing violated: %s is %s-free but its extension %s is not", base, interval, ext)
    return free


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray  # ascending
    error_bound: np.ndarray  # per entry
    sweeps: int

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def counts(self, a: ScalarLike, margin: float = 0.0) -> tuple[int, int, int]:
        """(greater, equal, less) relative to ``a``; "equal" means within ``margin``."""
        a = as_scalar(a)
        ref = a.numerator / a.denominator
        diff = self.eigenvalues - ref
        equal = int(np.count_nonzero(np.abs(diff) <= margin))
        greater = int(np.count_nonzero(diff > margin))
        return greater, equal, len(diff) - greater - equal

    def near(self, a: ScalarLike, margin: float) -> bool:
        a = as_scalar(a)
        ref = a.numerator / a.denominator
        return bool(np.any(np.abs(self.eigenvalues - ref) <= margin))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for lam in self.eigenvalues:
            w.writerow([f"{float(lam):.12g}"])
        return buf.getvalue()


@numba.njit(cache=True)
def _cyclic_jacobi(A, V, tol, max_sweeps):
    n = A.shape[0]
    sweeps = 0
    for sweep in range(1, max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += A[i, j] * A[i, j]
        off = np.sqrt(2.0 * off)
        if off < tol:
            return sweeps, off
        sweeps = sweep
        # skip small entries early on; later sweeps rotate everything
        threshold = 0.2 * off / (n * n) if sweep < 4 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= threshold or apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                A[p, p] -= t * apq
                A[q, q] += t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                for k in range(n):
                    if k != p and k != q:
                        akp = A[k, p]
                        akq = A[k, q]
                        A[k, p] = akp - s * (akq + tau * akp)
                        A[p, k] = A[k, p]
                        A[k, q] = akq + s * (akp - tau * akq)
                        A[q, k] = A[k, q]
                for k in range(n):
                    vkp = V[k, p]
                    vkq = V[k, q]
                    V[k, p] = vkp - s * (vkq + tau * vkp)
                    V[k, q] = vkq + s * (vkp - tau * vkq)
    off = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            off += A[i, j] * A[i, j]
    return sweeps, np.sqrt(2.0 * off)


def _certified_bound(A, vals, V):
    """Radius that provably contains the matching eigenvalue of ``A`` around each entry of ``vals``.

    For symmetric ``A`` and any full-rank ``V``, the eigenvalues of ``A`` can
    be matched with ``vals`` so that each pair differs by at most
    ``||AV - V diag(vals)||_2 / sigma_min(V)``.  Both norms are bounded via
    Frobenius norms, padded for the rounding in computing them.
    """
    n = A.shape[0]
    eps = np.finfo(np.float64).eps
    gamma = (n + 2) * eps / (1 - (n + 2) * eps)
    absV = np.abs(V)
    R = A @ V - V * vals
    r_err = gamma * (np.abs(A) @ absV + absV * np.abs(vals))
    r_norm = np.sqrt(np.sum((np.abs(R) + r_err) ** 2))
    G = V.T @ V - np.eye(n)
    g_err = gamma * (absV.T @ absV + 1.0)
    g_norm = np.sqrt(np.sum((np.abs(G) + g_err) ** 2))
    if g_norm >= 1:
        raise RuntimeError("eigenvector basis too far from orthonormal to certify")
    bound = r_norm / np.sqrt(1 - g_norm)
    return float(bound * (1 + 4 * eps))


def jacobi_eigenvalues(matrix, tol: float = 1e-12, max_sweeps: int = 60):
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi.

    Returns ``(eigenvalues, error_bound, sweeps)`` with the eigenvalues sorted
    ascending and a certified per-entry error bound.
    """
    A0 = np.array(matrix, dtype=np.float64)
    n = A0.shape[0]
    if A0.ndim != 2 or A0.shape != (n, n):
        raise ValueError("matrix must be square")
    if n == 0:
        return np.zeros(0), np.zeros(0), 0
    if not np.array_equal(A0, A0.T):
        raise ValueError("matrix must be symmetric")
    A = A0.copy()
    V = np.eye(n)
    # below n * eps * ||A|| the off-diagonal part is rounding noise
    tol = max(tol, n * np.finfo(np.float64).eps * float(np.sqrt(np.sum(A0 * A0))))
    sweeps, off = _cyclic_jacobi(A, V, tol, max_sweeps)
    if off >= tol:
        raise RuntimeError(f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {off:.3g})")
    vals = np.diag(A).copy()
    bound = _certified_bound(A0, vals, V)
    order = np.argsort(vals, kind="stable")
    return vals[order], np.full(n, bound), sweeps


def oracle_spectrum(c: Cotree, max_n: int = ORACLE_MAX_N) -> Spectrum:
    """Dense spectrum of the graph, computed from its creation sequence."""
    if c.n > max_n:
        raise ValueError(f"{c} has {c.n} vertices, above the oracle cap of {max_n}")
    adj = build_adjacency(cotree_to_binary(c))
    vals, bound, sweeps = jacobi_eigenvalues(adj)
    return Spectrum(vals, bound, sweeps)
