"""Gray map R^m -> F_p^{Nm}, its inverse at k = 2, and the Nechaev permutation.

For a = a_0 + a_1 u + ... + a_k u^k the component functionals are, in order,
-a_k, then a_j for each odd j < k, then 2a_0 + a_k. At k = 2 this is
(-a_2, a_1, 2a_0 + a_2) and the map is a bijection. Words are laid out
block-major: component t of coordinate i lands at position t*m + i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .codes import ConstaCodeR, LinearCodeFp
from .errors import ContextMismatch, ParameterError, PreconditionError
from .ring_r import RingContext, RingElem


@dataclass(frozen=True)
class GrayLayout:
    ctx: RingContext
    functionals: tuple  # rows of length k+1 over F_p

    @property
    def n_components(self) -> int:
        return len(self.functionals)

    def matrix(self) -> np.ndarray:
        return np.array(self.functionals, dtype=np.int64)


@lru_cache(maxsize=None)
def gray_layout(ctx: RingContext) -> GrayLayout:
    k, p = ctx.k, ctx.p
    rows = []
    r = [0] * (k + 1)
    r[k] = p - 1
    rows.append(tuple(r))
    for j in range(1, k, 2):
        r = [0] * (k + 1)
        r[j] = 1
        rows.append(tuple(r))
    r = [0] * (k + 1)
    r[0] = 2 % p
    r[k] = (r[k] + 1) % p
    rows.append(tuple(r))
    return GrayLayout(ctx, tuple(rows))


@lru_cache(maxsize=None)
def gray_matrix(ctx: RingContext, m: int) -> np.ndarray:
    """Matrix G with G @ expand(v) == gray_map(v) for v in R^m."""
    lay = gray_layout(ctx)
    n_comp, b = lay.n_components, ctx.size
    g = np.zeros((n_comp * m, b * m), dtype=np.int64)
    for t, func in enumerate(lay.functionals):
        for i in range(m):
            g[t * m + i, i * b:(i + 1) * b] = func
    return g


def gray_map(v, layout: GrayLayout | None = None) -> tuple:
    """Blockwise Gray image of a word over R (a single RingElem counts as m = 1)."""
    if isinstance(v, RingElem):
        v = (v,)
    v = tuple(v)
    ctx = v[0].ctx
    lay = layout or gray_layout(ctx)
    if lay.ctx != ctx:
        raise ContextMismatch(f"layout for {lay.ctx}, word over {ctx}")
    p, m = ctx.p, len(v)
    out = [0] * (lay.n_components * m)
    for t, func in enumerate(lay.functionals):
        for i, x in enumerate(v):
            out[t * m + i] = sum(f * a for f, a in zip(func, x.coeffs)) % p
    return tuple(out)


def gray_inverse(w, ctx: RingContext) -> RingElem:
    """Inverse of the k = 2 Gray map on one coordinate: (w1, w2, w3) -> a_0 + a_1 u + a_2 u^2."""
    if ctx.k != 2:
        raise PreconditionError(f"the Gray map is only invertible at k = 2 (got k = {ctx.k})")
    w1, w2, w3 = (int(x) for x in w)
    return RingElem.from_coeffs(((w3 + w1) * ctx.inv2, w2, -w1), ctx)


def gray_inverse_word(w, ctx: RingContext) -> tuple:
    """Inverse of the blocked extension at k = 2."""
    w = list(w)
    if len(w) % 3:
        raise ParameterError("word length must be a multiple of 3")
    m = len(w) // 3
    return tuple(gray_inverse((w[i], w[m + i], w[2 * m + i]), ctx) for i in range(m))


def gray_image(code: ConstaCodeR) -> LinearCodeFp:
    """Phi(L) as a linear code over F_p (Phi is F_p-linear)."""
    g = gray_matrix(code.ctx, code.m)
    rows = (code.basis @ g.T) % code.p
    return LinearCodeFp(rows, g.shape[0], code.p)


def kernel_witness(ctx: RingContext):
    """A nonzero ring element with zero Gray image, or None when Phi is injective."""
    from . import linalg

    ns = linalg.nullspace(gray_layout(ctx).matrix(), ctx.size, ctx.p)
    if ns.shape[0] == 0:
        return None
    return RingElem.from_coeffs(ns[0], ctx)


# -- permutations ----------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., n-1} given by its image array."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ParameterError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_transpositions(cls, n: int, pairs) -> Permutation:
        img = list(range(n))
        for a, b in pairs:
            img[a], img[b] = img[b], img[a]
        return cls(tuple(img))

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: Permutation) -> Permutation:
        """self after other."""
        return Permutation(tuple(self.images[other.images[i]] for i in range(len(self))))

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_involution(self) -> bool:
        return self.compose(self) == Permutation.identity(len(self))

    def apply(self, w) -> tuple:
        """(d_{w(0)}, d_{w(1)}, ...)."""
        if len(w) != len(self):
            raise ParameterError(f"length {len(w)} does not match permutation of {len(self)}")
        return tuple(w[j] for j in self.images)

    def extend(self, n: int) -> Permutation:
        """Act as the identity on positions len(self) .. n-1."""
        return Permutation(self.images + tuple(range(len(self), n)))


def nechaev_psi(m: int) -> Permutation:
    """psi = (1, m+1)(3, m+3)...(m-2, 2m-2) on {0, ..., 2m-1}, m odd."""
    if m < 1 or m % 2 == 0:
        raise PreconditionError(f"the Nechaev permutation needs odd m, got {m}")
    pairs = [(j, m + j) for j in range(1, m - 1, 2)]
    return Permutation.from_transpositions(2 * m, pairs)


def nechaev_rho_perm(m: int) -> Permutation:
    """psi on the first 2m positions of F_p^{3m}, identity on the last m."""
    return nechaev_psi(m).extend(3 * m)


def nechaev_rho(w, m: int) -> tuple:
    w = tuple(w)
    if len(w) != 3 * m:
        raise ParameterError(f"expected a word of length {3 * m}, got {len(w)}")
    return nechaev_rho_perm(m).apply(w)


def permutation_matrix(perm: Permutation) -> np.ndarray:
    n = len(perm)
    mat = np.zeros((n, n), dtype=np.int64)
    mat[np.arange(n), perm.images] = 1
    return mat


def permute_code(code: LinearCodeFp, perm: Permutation) -> LinearCodeFp:
    if len(perm) != code.m:
        raise ParameterError(f"permutation of {len(perm)} points, code length {code.m}")
    idx = list(perm.images)
    rows = code.basis[:, idx] if code.dim else code.basis
    return LinearCodeFp(rows, code.m, code.p, code.unit)
