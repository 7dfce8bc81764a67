"""Independent reference computations used by the tests.

Nothing here calls into the code paths it is used to check.
"""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from cubicquark.scalars import ONE, ZERO, J, J2

# -- field inverse by the extended Euclidean algorithm over Q[x] --------------

PHI12 = [Fraction(1), Fraction(0), Fraction(-1), Fraction(0), Fraction(1)]  # 1 - x^2 + x^4, low degree first


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for m, x in enumerate(a):
        for n, y in enumerate(b):
            out[m + n] += x * y
    return _trim(out)


def _divmod(a, b):
    a = _trim(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        a = _sub(a, [Fraction(0)] * shift + [c * x for x in b])
    return _trim(q), a


def euclid_inverse(coords):
    """Inverse of sum coords[k] x^k modulo the 12th cyclotomic polynomial."""
    r0, r1 = PHI12, _trim([Fraction(c) for c in coords])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1))
    if not r1:
        raise ZeroDivisionError
    inv = [c / r1[0] for c in s1]
    _, rem = _divmod(inv, PHI12)
    return tuple(rem + [Fraction(0)] * (4 - len(rem)))


# -- stepwise rewriting with randomly ordered local rules ---------------------

def _block_bounds(w, p):
    g = w[p].grade
    lo = p
    while lo > 0 and w[lo - 1].grade == g:
        lo -= 1
    hi = p
    while hi + 1 < len(w) and w[hi + 1].grade == g:
        hi += 1
    return lo, hi


def _applicable(w):
    moves = []
    for p in range(len(w)):
        if p + 1 < len(w) and w[p].grade == 2 and w[p + 1].grade == 1:
            moves.append(("swap", p))
        if p + 3 < len(w) and len({w[p + k].grade for k in range(4)}) == 1:
            moves.append(("zero", p))
        if p + 2 < len(w) and w[p] == w[p + 1] == w[p + 2]:
            moves.append(("zero", p))
        lo, hi = _block_bounds(w, p)
        if p == lo and hi - lo == 2:
            idx = tuple(g.index for g in w[lo:hi + 1])
            if idx != min(idx, idx[1:] + idx[:1], idx[2:] + idx[:2]):
                moves.append(("rotate", p))
    return moves


def stepwise_reduce(w, rng: random.Random):
    """Rewrite with one randomly chosen applicable rule at a time.

    Rules, each an identity of the algebra:
      y x -> (-j^2) x y             (grade-2 symbol before grade-1 symbol)
      a b c -> j b c a              (maximal grade-1 triple, rotate left)
      a b c -> j^2 b c a            (maximal grade-2 triple)
      four same-grade neighbours, or a a a  -> 0
    Returns (coefficient, word) or None.
    """
    w = list(w)
    coeff = ONE
    while True:
        moves = _applicable(w)
        if not moves:
            return coeff, tuple(w)
        kind, p = rng.choice(moves)
        if kind == "zero":
            return None
        if kind == "swap":
            w[p], w[p + 1] = w[p + 1], w[p]
            coeff = coeff * (-J2)
        else:
            coeff = coeff * (J if w[p].grade == 1 else J2)
            w[p:p + 3] = w[p + 1:p + 3] + w[p:p + 1]


# -- Lorentz and SU(3) references --------------------------------------------

SIGMA = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def lorentz_from_sl2(lam: np.ndarray) -> np.ndarray:
    """Lambda[mu, nu] with D L^T D sigma^mu D conj(L) D = sum_nu Lambda[mu, nu] sigma^nu.

    D = diag(1, -1); the coefficients come from tr(sigma^a sigma^b) = 2 delta.
    """
    d = np.diag([1.0, -1.0])
    out = np.empty((4, 4), dtype=complex)
    for mu in range(4):
        m = d @ lam.T @ d @ SIGMA[mu] @ d @ lam.conj() @ d
        for nu in range(4):
            out[mu, nu] = 0.5 * np.trace(SIGMA[nu] @ m)
    return out


def gell_mann_float():
    l = np.zeros((8, 3, 3), dtype=complex)
    l[0][0, 1] = l[0][1, 0] = 1
    l[1][0, 1], l[1][1, 0] = -1j, 1j
    l[2][0, 0], l[2][1, 1] = 1, -1
    l[3][0, 2] = l[3][2, 0] = 1
    l[4][0, 2], l[4][2, 0] = -1j, 1j
    l[5][1, 2] = l[5][2, 1] = 1
    l[6][1, 2], l[6][2, 1] = -1j, 1j
    l[7] = np.diag([1, 1, -2]) / np.sqrt(3)
    return l


def standard_adjoint(u: np.ndarray) -> np.ndarray:
    """Ad(U)[a, b] = 1/2 tr(lambda_a U lambda_b U^dagger)."""
    l = gell_mann_float()
    return np.array([[0.5 * np.trace(l[a] @ u @ l[b] @ u.conj().T) for b in range(8)] for a in range(8)])


def brute_force_transform(components: dict, n: int, u):
    """T[(label, (d, e, f))] by the full sum over all n^3 primed triples."""
    labels = sorted({lab for lab, _ in components})
    out = {}
    rng = range(1, n + 1)
    for lab in labels:
        for d in rng:
            for e in rng:
                for f in rng:
                    acc = None
                    for a in rng:
                        for b in rng:
                            for c in rng:
                                v = components.get((lab, (a, b, c)))
                                if v is not None:
                                    term = v * u[a - 1][d - 1] * u[b - 1][e - 1] * u[c - 1][f - 1]
                                    acc = term if acc is None else acc + term
                    out[(lab, (d, e, f))] = ZERO if acc is None else acc
    return out
