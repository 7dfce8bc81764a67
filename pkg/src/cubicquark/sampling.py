"""Seeded samplers for group elements on both backends."""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .matrices import FLOAT, GroupMatrix
from .scalars import ONE, ZERO, CycloScalar, random_scalar, zeta_power

_EXPM_TOL = 1e-14


def expm(a: np.ndarray) -> np.ndarray:
    """Matrix exponential by truncated Taylor series with scaling and squaring."""
    a = np.asarray(a, dtype=np.complex128)
    norm = float(np.max(np.sum(np.abs(a), axis=1))) if a.size else 0.0
    squarings = max(0, math.ceil(math.log2(norm)) + 1) if norm > 0.5 else 0
    x = a / (2.0**squarings)
    result = np.eye(a.shape[0], dtype=np.complex128)
    term = result.copy()
    for k in range(1, 40):
        term = term @ x / k
        result = result + term
        if np.max(np.abs(term)) < _EXPM_TOL * 1e-3:
            break
    for _ in range(squarings):
        result = result @ result
    return result


def sub_seed(seed: int, index: int) -> int:
    """Per-sample seed; independent of evaluation order."""
    return (seed ^ index) & 0xFFFFFFFFFFFFFFFF


def _uniform_complex(rng, shape, bound: float = 1.0):
    return rng.uniform(-bound, bound, shape) + 1j * rng.uniform(-bound, bound, shape)


def sample_sl2c(seed: int) -> GroupMatrix:
    """exp of a random traceless complex 2x2 matrix with entries in [-1, 1] + i[-1, 1]."""
    rng = np.random.default_rng(seed)
    a, b, c = _uniform_complex(rng, 3)
    return GroupMatrix(expm(np.array([[a, b], [c, -a]])), FLOAT)


def sample_su3(seed: int) -> GroupMatrix:
    """exp(iH) for a random traceless Hermitian H with entries of modulus below 1."""
    rng = np.random.default_rng(seed)
    d1, d2 = rng.uniform(-0.5, 0.5, 2)
    off = _uniform_complex(rng, 3, bound=0.7)
    h = np.array([
        [d1, off[0], off[1]],
        [np.conj(off[0]), d2, off[2]],
        [np.conj(off[1]), np.conj(off[2]), -d1 - d2],
    ])
    return GroupMatrix(expm(1j * h), FLOAT)


def sample_gl2(seed: int) -> GroupMatrix:
    """Random invertible complex 2x2 with entries in [-1, 1] + i[-1, 1]."""
    rng = np.random.default_rng(seed)
    while True:
        m = _uniform_complex(rng, (2, 2))
        if abs(np.linalg.det(m)) > 1e-3:
            return GroupMatrix(m, FLOAT)


# -- exact samplers ----------------------------------------------------------

def random_exact_matrix(seed: int, n: int = 2, bound: int = 3) -> GroupMatrix:
    """Random invertible n x n matrix over Q(zeta_12) with small integer coordinates."""
    rng = np.random.default_rng(seed)
    while True:
        m = GroupMatrix([[random_scalar(rng, bound) for _ in range(n)] for _ in range(n)])
        if not m.det().is_zero():
            return m


def random_exact_sl2(seed: int, bound: int = 3) -> GroupMatrix:
    """Random exact 2x2 matrix of determinant 1."""
    rng = np.random.default_rng(seed)
    while True:
        a, b, c = (random_scalar(rng, bound) for _ in range(3))
        if not a.is_zero():
            d = (ONE + b * c) / a
            return GroupMatrix([[a, b], [c, d]])


def _pythagorean_rotation(rng, n: int) -> GroupMatrix:
    p, q = [(3, 4), (5, 12), (8, 15), (7, 24)][int(rng.integers(4))]
    h = math.isqrt(p * p + q * q)
    cos, sin = Fraction(p, h), Fraction(q, h)
    a, b = sorted(rng.choice(n, size=2, replace=False).tolist())
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    rows[a][a] = CycloScalar(cos)
    rows[b][b] = CycloScalar(cos)
    rows[a][b] = CycloScalar(-sin)
    rows[b][a] = CycloScalar(sin)
    return GroupMatrix(rows)


def random_exact_unitary(seed: int, n: int = 3, rotations: int = 2) -> GroupMatrix:
    """Exact unitary: phase-permutation matrix times rational rotations.

    The determinant is forced to be a cube root of unity.
    """
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n).tolist()
    exps = [int(rng.integers(12)) for _ in range(n)]
    inversions = sum(1 for x in range(n) for y in range(x + 1, n) if perm[x] > perm[y])
    total = sum(exps) + 6 * inversions
    exps[-1] -= total % 4  # det = zeta^(multiple of 4), i.e. a cube root of unity
    rows = [[ZERO] * n for _ in range(n)]
    for r, c in enumerate(perm):
        rows[r][c] = zeta_power(exps[r])
    m = GroupMatrix(rows)
    for _ in range(rotations):
        m = m @ _pythagorean_rotation(rng, n)
    return m


def phase_permutation(perm, exps) -> GroupMatrix:
    """Matrix with entry zeta**exps[r] at (r, perm[r])."""
    n = len(perm)
    rows = [[ZERO] * n for _ in range(n)]
    for r, c in enumerate(perm):
        rows[r][c] = zeta_power(exps[r])
    return GroupMatrix(rows)
