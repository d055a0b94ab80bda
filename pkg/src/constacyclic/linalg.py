"""Dense linear algebra over F_p on int64 numpy arrays.

Entries stay below 2**16, so products fit in int64 without overflow.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import CapExceeded
from .gf_prime import inv_mod


def as_matrix(rows, ncols: int, p: int) -> np.ndarray:
    a = np.array(rows, dtype=np.int64).reshape(-1, ncols)
    return a % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = (a[r] * inv_mod(lead, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            a[others] = (a[others] - np.outer(col[others], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], tuple(pivots)


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, ncols: int, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : a @ x == 0}``."""
    if a.size == 0:
        return np.eye(ncols, dtype=np.int64)
    r, pivots = rref(a.reshape(-1, ncols), p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-r[row, f]) % p
    return basis


def in_span(basis: np.ndarray, vectors: np.ndarray, p: int) -> bool:
    """True iff every row of ``vectors`` lies in the row span of ``basis``.

    ``basis`` must already be in RREF.
    """
    vectors = np.atleast_2d(vectors) % p
    if vectors.size == 0:
        return True
    if basis.shape[0] == 0:
        return not vectors.any()
    return rank(np.vstack([basis, vectors]), p) == basis.shape[0]


def span_elements(basis: np.ndarray, p: int, cap: int) -> np.ndarray:
    """All p**dim vectors in the span of ``basis`` (rows), as an array."""
    dim, n = basis.shape
    if p**dim > cap:
        raise CapExceeded(f"span has {p}^{dim} elements, cap is {cap}")
    if dim == 0:
        return np.zeros((1, n), dtype=np.int64)
    coeffs = np.array(list(itertools.product(range(p), repeat=dim)), dtype=np.int64)
    return (coeffs @ basis) % p


def all_vectors(n: int, p: int) -> np.ndarray:
    """All of F_p^n in lexicographic order (first coordinate slowest)."""
    return np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64).reshape(-1, n)


def count_subspaces(n: int, p: int) -> int:
    """Number of subspaces of F_p^n (sum of Gaussian binomials)."""
    total = 0
    for r in range(n + 1):
        num = den = 1
        for i in range(r):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


def all_subspaces(n: int, p: int):
    """Yield every subspace of F_p^n once, as an RREF basis array."""
    for r in range(n + 1):
        for pivots in itertools.combinations(range(n), r):
            slots = [
                (i, c)
                for i, pc in enumerate(pivots)
                for c in range(pc + 1, n)
                if c not in pivots
            ]
            for values in itertools.product(range(p), repeat=len(slots)):
                b = np.zeros((r, n), dtype=np.int64)
                for i, pc in enumerate(pivots):
                    b[i, pc] = 1
                for (i, c), v in zip(slots, values):
                    b[i, c] = v
                yield b
