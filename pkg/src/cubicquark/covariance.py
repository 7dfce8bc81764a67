"""Covariance equations for the cubic forms and the representations they induce.

Every tensor transformation here is a brute-force index contraction over
the lower indices, ``T^label_{def} = sum t^label_{a'b'c'} U[a',d] U[b',e] U[c',f]``,
followed by projection back onto the form's own labels.  The closed forms
(e.g. the spinor map) are checked against those contractions rather than
trusted.
"""
from __future__ import annotations

from itertools import product

import numpy as np

from .errors import CheckFailure, DomainError, SingularMatrixError
from .forms import CyclicTensor3, epsilon, make_K, make_nine_forms, make_pi, make_pi_bar, make_rho, make_rho_bar
from .matrices import EXACT, FLOAT, GroupMatrix, solve
from .report import make_report
from .sampling import sample_su3, sub_seed
from .scalars import J, J2, ONE, ZERO, CycloScalar

CUBE_ROOTS = (ONE, J, J2)
DEFAULT_TOL = 1e-9


def _zero(backend: str):
    return ZERO if backend == EXACT else 0j


def _value(v: CycloScalar, backend: str):
    return v if backend == EXACT else v.to_float()


def transform_three_form(t: CyclicTensor3, u: GroupMatrix) -> dict:
    """All components of the transformed form, keyed by (label, (d, e, f))."""
    if u.dim != t.n:
        raise DomainError(f"need a {t.n}x{t.n} matrix, got {u.dim}x{u.dim}")
    m = u.data
    z = _zero(u.backend)
    out = {}
    rng = range(1, t.n + 1)
    for lab in t.labels:
        supp = [(idx, _value(t.component(lab, *idx), u.backend)) for idx in t.support(lab)]
        for d, e, f in product(rng, repeat=3):
            acc = z
            for (a, b, c), v in supp:
                acc = acc + v * m[a - 1, d - 1] * m[b - 1, e - 1] * m[c - 1, f - 1]
            out[(lab, (d, e, f))] = acc
    return out


def project_onto_form(t: CyclicTensor3, transformed: dict, backend: str):
    """Coefficients S[label', label] of the transformed form in the span of t, plus the residual.

    Uses the orthogonality of the labels' disjoint supports:
    S[p, q] = <T^p, t^q> / <t^q, t^q>.  The residual is the max-norm of what
    the projection fails to reconstruct, over every index triple.
    """
    labels = t.labels
    k = len(labels)
    norms = [t.pairing(q, t, q) for q in labels]
    s = np.empty((k, k), dtype=object if backend == EXACT else np.complex128)
    for p_i, p in enumerate(labels):
        for q_i, q in enumerate(labels):
            acc = _zero(backend)
            for idx in t.support(q):
                acc = acc + transformed[(p, idx)] * _value(t.component(q, *idx).conj(), backend)
            s[p_i, q_i] = acc / norms[q_i] if backend == EXACT else acc / norms[q_i].to_float()
    residual = 0.0
    rng = range(1, t.n + 1)
    for p_i, p in enumerate(labels):
        for idx in product(rng, repeat=3):
            recon = _zero(backend)
            for q_i, q in enumerate(labels):
                c = t.component(q, *idx)
                if not c.is_zero():
                    recon = recon + s[p_i, q_i] * _value(c, backend)
            residual = max(residual, abs(transformed[(p, idx)] - recon))
    return GroupMatrix(s, backend), residual


def dense_form(t: CyclicTensor3) -> np.ndarray:
    """Float array of shape (labels, n, n, n)."""
    arr = np.zeros((len(t.labels), t.n, t.n, t.n), dtype=np.complex128)
    for k, lab in enumerate(t.labels):
        for a, b, c in t.support(lab):
            arr[k, a - 1, b - 1, c - 1] = t.component(lab, a, b, c).to_float()
    return arr


def _form_covariance_float(t: CyclicTensor3, u: GroupMatrix):
    k = dense_form(t)
    transformed = np.einsum("labc,ad,be,cf->ldef", k, u.data, u.data, u.data)
    flat_k = k.reshape(len(t.labels), -1)
    flat_t = transformed.reshape(len(t.labels), -1)
    norms = np.sum(np.abs(flat_k) ** 2, axis=1)
    s = (flat_t @ flat_k.conj().T) / norms
    residual = float(np.max(np.abs(flat_t - s @ flat_k)))
    return GroupMatrix(s, FLOAT), residual


def form_covariance(t: CyclicTensor3, u: GroupMatrix):
    """Solve M t = t o (u x u x u) for M by contraction and projection; return (M, residual)."""
    if u.dim != t.n:
        raise DomainError(f"need a {t.n}x{t.n} matrix, got {u.dim}x{u.dim}")
    if not u.exact:
        return _form_covariance_float(t, u)
    return project_onto_form(t, transform_three_form(t, u), u.backend)


# -- SL(2, C) ------------------------------------------------------------------

def _require_invertible(u: GroupMatrix):
    d = u.det()
    if u.exact:
        if d.is_zero():
            raise SingularMatrixError("U is singular")
    elif abs(d) <= 1e-14 * max(u.max_abs(), 1e-300) ** u.dim:
        raise SingularMatrixError("U is numerically singular")
    return d


def rho_covariance_residual(u: GroupMatrix, lam: GroupMatrix, rho: CyclicTensor3 = None) -> float:
    """max |sum_b lam[a', b] rho^b_{ABC} - (U x U x U) rho^{a'}_{ABC}| over all a' and triples."""
    rho = rho or make_rho()
    transformed = transform_three_form(rho, u)
    residual = 0.0
    for a_i, a in enumerate(rho.labels):
        for idx in product((1, 2), repeat=3):
            lhs = _zero(u.backend)
            for b_i, b in enumerate(rho.labels):
                c = rho.component(b, *idx)
                if not c.is_zero():
                    lhs = lhs + lam[a_i, b_i] * _value(c, u.backend)
            residual = max(residual, abs(lhs - transformed[(a, idx)]))
    return residual


def lambda_from_U(u: GroupMatrix, check: bool = True, tol: float = DEFAULT_TOL) -> GroupMatrix:
    """Spinor matrix induced by a quark basis change U on the rho-forms.

    Closed form: Lambda = det(U) * [[U11, -U12], [-U21, U22]].  With
    ``check`` the result is confirmed against the full contraction.
    """
    if u.dim != 2:
        raise DomainError("lambda_from_U needs a 2x2 matrix")
    d = _require_invertible(u)
    m = u.data
    lam = GroupMatrix([[m[0, 0], -m[0, 1]], [-m[1, 0], m[1, 1]]], u.backend).scale(d)
    if check:
        res = rho_covariance_residual(u, lam)
        if (u.exact and res != 0.0) or res > tol:
            raise CheckFailure(f"rho covariance residual {res:.3e}")
    return lam


def _det_is_one(m: GroupMatrix, tol: float = 1e-12) -> bool:
    d = m.det()
    return d == ONE if m.exact else abs(d - 1) <= tol


def spinor_cover(lam: GroupMatrix, phase_k: int = 0) -> GroupMatrix:
    """Quark matrix U with lambda_from_U(U) = lam, for lam in SL(2, C).

    U = j^(1+k) * [[L11, -L12], [-L21, L22]]; det U = j^(2+2k), which is j^2
    for the default branch.
    """
    if lam.dim != 2:
        raise DomainError("spinor_cover needs a 2x2 matrix")
    if phase_k not in (0, 1, 2):
        raise DomainError("phase_k must be 0, 1 or 2")
    if not _det_is_one(lam):
        raise DomainError("spinor_cover needs det = 1")
    m = lam.data
    return GroupMatrix([[m[0, 0], -m[0, 1]], [-m[1, 0], m[1, 1]]], lam.backend).scale(J ** (1 + phase_k))


def cover_phase(u1: GroupMatrix, u2: GroupMatrix, u12: GroupMatrix, tol: float = DEFAULT_TOL):
    """The omega in {1, j, j^2} with u1 @ u2 = omega * u12, and the residual for it."""
    prod = u1 @ u2
    best = None
    for omega in CUBE_ROOTS:
        res = prod.distance(u12.scale(omega))
        if best is None or res < best[1]:
            best = (omega, res)
    return best


def conjugate_cover(u: GroupMatrix) -> GroupMatrix:
    """Ubar, the entrywise complex conjugate; it acts on the conjugate forms."""
    return u.conj()


def rho_bar_covariance_residual(u: GroupMatrix) -> float:
    """Residual of the conjugate covariance equation with Ubar and conj(Lambda(U))."""
    ubar = conjugate_cover(u)
    lam_bar = lambda_from_U(u, check=False).conj()
    rho_bar = make_rho_bar()
    return rho_covariance_residual(ubar, lam_bar, rho_bar)


def _pi_basis(backend: str):
    pis = [p.matrix if backend == EXACT else p.matrix.to_float() for p in make_pi()]
    basis = GroupMatrix(np.array([[pm[a, b] for pm in pis] for a in range(2) for b in range(2)]), backend)
    return pis, basis


def vector_rep(u: GroupMatrix) -> GroupMatrix:
    """4x4 matrix Lambda[mu', nu] with U^T pi^mu' Ubar = sum_nu Lambda[mu', nu] pi^nu."""
    if u.dim != 2:
        raise DomainError("vector_rep needs a 2x2 matrix")
    pis, basis = _pi_basis(u.backend)
    ubar = conjugate_cover(u)
    rhs = []
    for pm in pis:
        t = u.T @ pm @ ubar
        rhs.append([t[a, b] for a in range(2) for b in range(2)])
    try:
        coeffs = solve(basis, np.array(rhs, dtype=object if u.exact else np.complex128).T)
    except SingularMatrixError as exc:  # pragma: no cover - the pi basis is independent
        raise AssertionError("pi matrices failed to form a basis") from exc
    return GroupMatrix(np.asarray(coeffs).T.copy(), u.backend)


def minkowski_metric(variant: str = "pairing") -> GroupMatrix:
    """g^{mu nu} from the two-forms with spinor indices raised by epsilon.

    ``"pairing"``: 1/2 pi^mu_{A Bdot} pibar^{nu Bdot A}  (gives diag(1, -1, -1, -1));
    ``"printed"``: 1/2 pi^mu_{A Bdot} pi^{nu A Bdot}     (gives -j times that).
    """
    eps = epsilon().data
    pis = [p.matrix.data for p in make_pi()]
    if variant == "pairing":
        others = [p.matrix.data for p in make_pi_bar()]
    elif variant == "printed":
        others = pis
    else:
        raise DomainError(f"unknown metric variant {variant!r}")
    rows = []
    for mu in range(4):
        row = []
        for nu in range(4):
            acc = ZERO
            for a, b, c, d in product(range(2), repeat=4):
                e = eps[a, c] * eps[b, d]
                if e.is_zero():
                    continue
                if variant == "pairing":
                    # pibar^{nu Bdot A} = eps^{Bdot Ddot} eps^{A C} pibar^nu_{Ddot C}
                    acc = acc + pis[mu][a, b] * e * others[nu][d, c]
                else:
                    acc = acc + pis[mu][a, b] * e * others[nu][c, d]
            row.append(acc / 2)
        rows.append(row)
    return GroupMatrix(rows)


def metric_discrepancy() -> CycloScalar:
    """Scalar c with printed-variant metric = c * pairing-variant metric."""
    g = minkowski_metric("pairing")
    gp = minkowski_metric("printed")
    c = gp[0, 0] / g[0, 0]
    if gp != g.scale(c):
        raise AssertionError("printed contraction is not proportional to the metric")
    return c


def lorentz_defect(lam4: GroupMatrix) -> float:
    """max-norm of Lambda^T g Lambda - g."""
    g = minkowski_metric()
    if not lam4.exact:
        g = g.to_float()
    return (lam4.T @ g @ lam4 - g).max_abs()


# -- SU(3) -------------------------------------------------------------------

def _det_cube_root(u: GroupMatrix, tol: float = 1e-10) -> bool:
    d = u.det()
    if u.exact:
        return d in CUBE_ROOTS
    return min(abs(d - r.to_float()) for r in CUBE_ROOTS) <= tol


def su3_adjoint(u: GroupMatrix, k_forms: CyclicTensor3 = None):
    """8x8 matrix S with S K = K o (U x U x U), and the closure residual.

    S is read off by orthogonal projection onto the eight K-forms; the
    residual measures how far the transformed forms leave their span.
    """
    if u.dim != 3:
        raise DomainError("su3_adjoint needs a 3x3 matrix")
    if not _det_cube_root(u):
        raise DomainError("det U must be 1, j or j^2")
    return form_covariance(k_forms or make_K(), u)


def pairing_defect(s: GroupMatrix) -> float:
    """max-norm of S S^dagger - 1; zero when S preserves the K pairing."""
    return (s @ s.H - GroupMatrix.identity(s.dim, s.backend)).max_abs()


def su3_homomorphism_check(samples: int = 100, seed: int = 42, tol: float = DEFAULT_TOL):
    """S(U1 U2) = S(U1) S(U2) and S(U) unitary on sampled SU(3) pairs."""
    hom = unit = 0.0
    for k in range(samples):
        u1 = sample_su3(sub_seed(seed, 2 * k))
        u2 = sample_su3(sub_seed(seed, 2 * k + 1))
        s1, _ = su3_adjoint(u1)
        s2, _ = su3_adjoint(u2)
        s12, _ = su3_adjoint(u1 @ u2)
        hom = max(hom, s12.distance(s1 @ s2))
        unit = max(unit, pairing_defect(s1), pairing_defect(s2))
    residual = max(hom, unit)
    return make_report("su3-adjoint/homomorphism", residual <= tol, residual, samples, seed,
                       homomorphism=hom, pairing=unit, tolerance=tol)


def _is_unitary(u: GroupMatrix, tol: float) -> bool:
    d = (u @ u.H - GroupMatrix.identity(u.dim, u.backend))
    return d.is_zero() if u.exact else d.max_abs() <= tol


def stabilizer_probe(u: GroupMatrix, threshold: float = 0.1, tol: float = DEFAULT_TOL, name: str = "su3-stabilizer"):
    """Closure residual of the K-span under U.

    A non-unitary U is expected to push the forms out of their span
    (residual above ``threshold``); a unitary U must keep the residual at
    zero.  The report also carries the pairing defect of the projected S.
    """
    if u.dim != 3:
        raise DomainError("stabilizer_probe needs a 3x3 matrix")
    if not _det_is_one(u, 1e-12):
        raise DomainError("stabilizer_probe needs det U = 1")
    s, residual = su3_adjoint(u)
    unitary = _is_unitary(u, tol)
    if unitary:
        ok = residual == 0.0 if u.exact else residual <= tol
    else:
        ok = residual > threshold
    return make_report(name, ok, residual, 1, 0, unitary=unitary, expected="zero residual" if unitary
                       else f"residual > {threshold}", pairing_defect=pairing_defect(s))


def _nine_basis(backend: str):
    forms = [f.matrix if backend == EXACT else f.matrix.to_float() for f in make_nine_forms()]
    basis = GroupMatrix(np.array([[fm[a, b] for fm in forms] for a in range(3) for b in range(3)]), backend)
    return forms, basis


def nine_form_rep(u: GroupMatrix, check: bool = True, tol: float = DEFAULT_TOL) -> GroupMatrix:
    """9x9 matrix R of X -> U X U^dagger in the basis P^i = j^2 i lambda^i.

    Column i holds the coordinates of U P^i U^dagger.  With ``check`` the result
    is compared with M^-1 (U kron conj U) M, M the basis-change matrix.
    """
    if u.dim != 3:
        raise DomainError("nine_form_rep needs a 3x3 matrix")
    forms, basis = _nine_basis(u.backend)
    uh = u.H
    cols = []
    for fm in forms:
        img = u @ fm @ uh
        cols.append([img[a, b] for a in range(3) for b in range(3)])
    rhs = np.array(cols, dtype=object if u.exact else np.complex128).T
    rep = GroupMatrix(np.asarray(solve(basis, rhs)), u.backend)
    if check:
        via_kron = basis.inverse() @ u.kron(u.conj()) @ basis
        res = rep.distance(via_kron)
        if (u.exact and res != 0.0) or res > tol:
            raise CheckFailure(f"nine-form representation disagrees with U x conj(U): {res:.3e}")
    return rep
