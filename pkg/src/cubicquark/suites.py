"""Verification suites run by the ``verify`` command.

Each suite takes a :class:`RunConfig` and returns CheckReports in a fixed
order.  Samples are drawn with ``sub_seed(seed, k)`` so a report depends only
on the configuration.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

import numpy as np

from . import algebra
from .algebra import AlgebraElement, Generator, anticommutation_witness, enumerate_basis, normal_form
from .covariance import (
    conjugate_cover, cover_phase, lambda_from_U, lorentz_defect, metric_discrepancy,
    minkowski_metric, nine_form_rep, rho_bar_covariance_residual, rho_covariance_residual,
    spinor_cover, stabilizer_probe, su3_adjoint, su3_homomorphism_check, pairing_defect, vector_rep,
)
from .forms import pi_symmetry_factor
from .matrices import EXACT, FLOAT, GroupMatrix
from .report import make_report
from .sampling import (
    phase_permutation, random_exact_matrix, random_exact_sl2, random_exact_unitary,
    sample_gl2, sample_sl2c, sample_su3, sub_seed,
)
from .scalars import J, J2, ONE

SUITE_NAMES = (
    "dims", "quartic", "rho-covariance", "cover", "vector-rep", "metric",
    "su3-adjoint", "su3-stabilizer", "nine-form", "anticommutation",
)
BACKENDS = (EXACT, FLOAT)
SU3_RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class RunConfig:
    suite: str = "all"
    backend: Optional[str] = None  # None runs both backends
    samples: int = 100
    seed: int = 42
    tolerance: float = 1e-9
    json_path: Optional[str] = None

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITE_NAMES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.backend not in (None, EXACT, FLOAT):
            raise ValueError(f"unknown backend {self.backend!r}")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")

    def wants(self, backend: str) -> bool:
        return self.backend is None or self.backend == backend


# -- algebra suites ----------------------------------------------------------

def suite_dims(cfg: RunConfig) -> list:
    reports = []
    for family, n in (("theta", 2), ("q", 3), ("theta", 4)):
        expected = algebra.dimension_formula(n)
        counts = tuple(len(enumerate_basis(family, n, L)) for L in (1, 2, 3))
        bar = tuple(len(enumerate_basis(family + "Bar", n, L)) for L in (1, 2, 3))
        diff = sum(abs(a - b) for a, b in zip(counts, expected)) + sum(abs(a - b) for a, b in zip(bar, expected))
        reports.append(make_report(f"dims/{family}/N={n}", diff == 0, diff, samples=3,
                                   counts=list(counts), conjugate_counts=list(bar), formula=list(expected),
                                   total=sum(counts)))
    for family, n in (("theta", 2), ("q", 3)):
        mixed = [w for w in enumerate_basis((family, family + "Bar"), n, 2) if algebra.grade(w) == 0]
        reports.append(make_report(f"dims/{family}/N={n}/quark-antiquark", len(mixed) == n * n,
                                   abs(len(mixed) - n * n), count=len(mixed), expected=n * n))
    flavored = len(list(product(range(2), range(3))))
    reports.append(make_report("dims/flavored-generators", flavored == 6, abs(flavored - 6), count=flavored))
    return reports


def suite_quartic(cfg: RunConfig) -> list:
    reports = []
    for family, n in (("theta", 2), ("thetaBar", 2), ("q", 3), ("qBar", 3)):
        words = list(product([Generator(family, k) for k in range(1, n + 1)], repeat=4))
        survivors = sum(1 for w in words if normal_form(w) is not None)
        reports.append(make_report(f"quartic/{family}/N={n}", survivors == 0, survivors,
                                   samples=len(words), words=len(words), nonzero=survivors))
    return reports


def suite_anticommutation(cfg: RunConfig) -> list:
    reports = []
    for family, n in (("theta", 2), ("q", 3)):
        us = enumerate_basis(family, n, 3)
        vs = enumerate_basis(family + "Bar", n, 3)
        bad = 0
        for u, v in product(us, vs):
            x, y = AlgebraElement.from_word(u), AlgebraElement.from_word(v)
            if x * y != -(y * x) or (x * y).is_zero():
                bad += 1
        reports.append(make_report(f"anticommutation/{family}/N={n}", bad == 0, bad,
                                   samples=len(us) * len(vs), pairs=len(us) * len(vs), failures=bad))
    witness = anticommutation_witness(2)
    single = anticommutation_witness(2, 1, 1)
    double = anticommutation_witness(2, 2, 1)
    ok = witness == -ONE and single == -J and double == J2
    reports.append(make_report("anticommutation/witness", ok, 0.0 if ok else 1.0, samples=3,
                               nine_exchanges=str(witness), one_exchange=str(single), two_exchanges=str(double)))
    return reports


# -- Lorentz suites ----------------------------------------------------------

def suite_rho_covariance(cfg: RunConfig) -> list:
    reports = []
    for backend in BACKENDS:
        if not cfg.wants(backend):
            continue
        closed = det_res = conj_res = 0.0
        for k in range(cfg.samples):
            s = sub_seed(cfg.seed, k)
            u = random_exact_matrix(s) if backend == EXACT else sample_gl2(s)
            lam = lambda_from_U(u, check=False)
            closed = max(closed, rho_covariance_residual(u, lam))
            d = u.det()
            det_res = max(det_res, abs(lam.det() - d**3) / max(1.0, abs(d) ** 3))
            conj_res = max(conj_res, rho_bar_covariance_residual(u))
        tol = 0.0 if backend == EXACT else cfg.tolerance
        for name, res in (("closed-form", closed), ("det", det_res), ("conjugate", conj_res)):
            reports.append(make_report(f"rho-covariance/{name}/{backend}", res <= tol, res,
                                       cfg.samples, cfg.seed, tolerance=tol))
    return reports


def suite_cover(cfg: RunConfig) -> list:
    reports = []
    for backend in BACKENDS:
        if not cfg.wants(backend):
            continue
        tol = 0.0 if backend == EXACT else cfg.tolerance
        det_res = trip = hom = 0.0
        phases = set()
        for k in range(cfg.samples):
            if backend == EXACT:
                l1 = random_exact_sl2(sub_seed(cfg.seed, 2 * k))
                l2 = random_exact_sl2(sub_seed(cfg.seed, 2 * k + 1))
                j2 = J2
            else:
                l1 = sample_sl2c(sub_seed(cfg.seed, 2 * k))
                l2 = sample_sl2c(sub_seed(cfg.seed, 2 * k + 1))
                j2 = J2.to_float()
            u1, u2 = spinor_cover(l1), spinor_cover(l2)
            det_res = max(det_res, abs(u1.det() - j2))
            trip = max(trip, lambda_from_U(u1, check=False).distance(l1))
            l12 = l1 @ l2
            if backend == FLOAT:
                # renormalize the float product back onto det = 1
                l12 = l12.scale(1 / complex(l12.det()) ** 0.5)
            omega, res = cover_phase(u1, u2, spinor_cover(l12), tol)
            phases.add(str(omega))
            hom = max(hom, res)
        ubar = conjugate_cover(spinor_cover(GroupMatrix.identity(2, backend)))
        ubar_det = abs(ubar.det() - (J if backend == EXACT else J.to_float()))
        reports.append(make_report(f"cover/det/{backend}", det_res <= tol, det_res, cfg.samples, cfg.seed))
        reports.append(make_report(f"cover/round-trip/{backend}", trip <= tol, trip, cfg.samples, cfg.seed))
        reports.append(make_report(f"cover/homomorphism-up-to-phase/{backend}", hom <= tol, hom,
                                   cfg.samples, cfg.seed, phases=sorted(phases)))
        reports.append(make_report(f"cover/conjugate-det/{backend}", ubar_det <= tol, ubar_det))
    return reports


def suite_vector_rep(cfg: RunConfig) -> list:
    reports = []
    if cfg.wants(EXACT):
        unreal = 0
        defect = 0.0
        for k in range(cfg.samples):
            v = vector_rep(spinor_cover(random_exact_sl2(sub_seed(cfg.seed, k))))
            unreal += not v.is_real()
            defect = max(defect, lorentz_defect(v))
        ident = vector_rep(GroupMatrix.diag([J, J]))
        reports.append(make_report("vector-rep/real/exact", unreal == 0, unreal, cfg.samples, cfg.seed))
        reports.append(make_report("vector-rep/metric/exact", defect == 0.0, defect, cfg.samples, cfg.seed))
        reports.append(make_report("vector-rep/phase-identity/exact", ident == GroupMatrix.identity(4),
                                   ident.distance(GroupMatrix.identity(4))))
    if cfg.wants(FLOAT):
        imag = defect = 0.0
        for k in range(cfg.samples):
            v = vector_rep(spinor_cover(sample_sl2c(sub_seed(cfg.seed, k))))
            imag = max(imag, float(np.max(np.abs(v.data.imag))))
            defect = max(defect, lorentz_defect(v))
        tol = cfg.tolerance
        boost = vector_rep(spinor_cover(GroupMatrix.diag([math.exp(0.5), math.exp(-0.5)], FLOAT)))
        expected = np.eye(4)
        expected[0, 0] = expected[3, 3] = math.cosh(1.0)
        expected[0, 3] = expected[3, 0] = math.sinh(1.0)
        boost_res = float(np.max(np.abs(boost.data - expected)))
        reports.append(make_report("vector-rep/real/float", imag <= tol, imag, cfg.samples, cfg.seed))
        reports.append(make_report("vector-rep/metric/float", defect <= tol, defect, cfg.samples, cfg.seed))
        reports.append(make_report("vector-rep/z-boost/float", boost_res <= 1e-10, boost_res,
                                   lambda00=float(boost.data[0, 0].real)))
    return reports


def suite_metric(cfg: RunConfig) -> list:
    g = minkowski_metric()
    target = GroupMatrix.diag([1, -1, -1, -1])
    factor = metric_discrepancy()
    sym = pi_symmetry_factor()
    return [
        make_report("metric/pairing", g == target, g.distance(target), entries=[str(g[k, k]) for k in range(4)]),
        make_report("metric/symmetric", g == g.T, g.distance(g.T)),
        # the printed contraction is documented, not required to equal g
        make_report("metric/printed-variant-factor", factor == -J, abs(factor + J),
                    factor=str(factor), note="printed pi-pi contraction equals factor * diag(1,-1,-1,-1)"),
        make_report("metric/pi-symmetry-factor", sym == -J, abs(sym + J), factor=str(sym),
                    mixed_rule_prediction=str(-J2)),
    ]


# -- SU(3) suites ------------------------------------------------------------

def _cyclic_permutation() -> GroupMatrix:
    # U maps e1 -> e2 -> e3 -> e1
    return GroupMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


def suite_su3_adjoint(cfg: RunConfig) -> list:
    reports = []
    tol = cfg.tolerance
    if cfg.wants(FLOAT):
        closure = phase = trace = 0.0
        jf = J.to_float()
        for k in range(cfg.samples):
            u = sample_su3(sub_seed(cfg.seed, k))
            s, res = su3_adjoint(u)
            closure = max(closure, res)
            s_j, _ = su3_adjoint(u.scale(jf))
            phase = max(phase, s_j.distance(s))
            trace = max(trace, abs(s.trace() - (abs(u.trace()) ** 2 - 1)))
        reports.append(make_report("su3-adjoint/closure/float", closure <= SU3_RESIDUAL_TOL, closure,
                                   cfg.samples, cfg.seed, tolerance=SU3_RESIDUAL_TOL))
        hom = su3_homomorphism_check(cfg.samples, cfg.seed, tol)
        hom.name = "su3-adjoint/homomorphism-pairing/float"
        reports.append(hom)
        reports.append(make_report("su3-adjoint/phase-insensitive/float", phase <= tol, phase, cfg.samples, cfg.seed))
        reports.append(make_report("su3-adjoint/character/float", trace <= tol, trace, cfg.samples, cfg.seed))
    if cfg.wants(EXACT):
        mats = [GroupMatrix.identity(3), GroupMatrix.diag([J, J, J]), _cyclic_permutation(),
                phase_permutation([1, 0, 2], [0, 6, 0]), GroupMatrix.diag([J, J2, ONE])]
        n_random = min(cfg.samples, 10)
        mats += [random_exact_unitary(sub_seed(cfg.seed, k), rotations=k % 2) for k in range(n_random)]
        closure = 0.0
        unit = 0.0
        for u in mats:
            s, res = su3_adjoint(u)
            closure = max(closure, res)
            unit = max(unit, pairing_defect(s))
        s_id, _ = su3_adjoint(GroupMatrix.diag([J, J, J]))
        reports.append(make_report("su3-adjoint/closure/exact", closure == 0.0, closure, len(mats), cfg.seed))
        reports.append(make_report("su3-adjoint/pairing/exact", unit == 0.0, unit, len(mats), cfg.seed))
        reports.append(make_report("su3-adjoint/phase-identity/exact", s_id == GroupMatrix.identity(8),
                                   s_id.distance(GroupMatrix.identity(8))))
    return reports


def suite_su3_stabilizer(cfg: RunConfig) -> list:
    reports = []
    if cfg.wants(EXACT):
        reports.append(stabilizer_probe(GroupMatrix.diag([2, Fraction(1, 2), 1]), name="su3-stabilizer/non-unitary/exact"))
        reports.append(stabilizer_probe(GroupMatrix.diag([J, J2, ONE]), name="su3-stabilizer/phase/exact"))
        reports.append(stabilizer_probe(GroupMatrix.identity(3), name="su3-stabilizer/identity/exact"))
    if cfg.wants(FLOAT):
        reports.append(stabilizer_probe(GroupMatrix.diag([2, 0.5, 1], FLOAT), name="su3-stabilizer/non-unitary/float"))
    return reports


def suite_nine_form(cfg: RunConfig) -> list:
    reports = []
    tol = cfg.tolerance
    if cfg.wants(EXACT):
        ident = nine_form_rep(GroupMatrix.identity(3))
        reports.append(make_report("nine-form/identity/exact", ident == GroupMatrix.identity(9),
                                   ident.distance(GroupMatrix.identity(9))))
        worst = 0.0
        n_random = min(cfg.samples, 10)
        for k in range(n_random):
            u = random_exact_unitary(sub_seed(cfg.seed, k))
            r = nine_form_rep(u)
            worst = max(worst, abs(r.trace() - u.trace() * u.trace().conj()))
        reports.append(make_report("nine-form/character/exact", worst == 0.0, worst, n_random, cfg.seed))
    if cfg.wants(FLOAT):
        worst = 0.0
        for k in range(cfg.samples):
            u = sample_su3(sub_seed(cfg.seed, k))
            r = nine_form_rep(u, tol=tol)
            worst = max(worst, abs(r.trace() - abs(u.trace()) ** 2))
        reports.append(make_report("nine-form/character/float", worst <= tol, worst, cfg.samples, cfg.seed))
    return reports


SUITES = {
    "dims": suite_dims,
    "quartic": suite_quartic,
    "rho-covariance": suite_rho_covariance,
    "cover": suite_cover,
    "vector-rep": suite_vector_rep,
    "metric": suite_metric,
    "su3-adjoint": suite_su3_adjoint,
    "su3-stabilizer": suite_su3_stabilizer,
    "nine-form": suite_nine_form,
    "anticommutation": suite_anticommutation,
}


def run_suites(cfg: RunConfig) -> list:
    names = SUITE_NAMES if cfg.suite == "all" else (cfg.suite,)
    reports = []
    for name in names:
        reports.extend(SUITES[name](cfg))
    return reports
