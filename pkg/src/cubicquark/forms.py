"""Invariant tensors: cyclic three-forms, phase-dressed Pauli two-forms, metrics.

Index conventions: generator indices are 1-based everywhere, matching the
usual ``rho^1_{121}`` notation.  Two-form matrices are 0-based numpy-style.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .algebra import AlgebraElement
from .errors import DomainError
from .matrices import GroupMatrix
from .scalars import I, J, J2, ONE, SQRT3, ZERO, CycloScalar, parse_scalar

RHO_LABELS = ("1", "2")
K_LABELS = ("3+", "3-", "2+", "2-", "1+", "1-", "7", "8")


def rotate(t: tuple, k: int = 1) -> tuple:
    """k left rotations: (A, B, C) -> (B, C, A) for k = 1."""
    k %= 3
    return t[k:] + t[:k]


@dataclass(frozen=True)
class CyclicTensor3:
    """Rank-3 tensor ``t^label_{abc}`` with a cyclic phase ``omega``.

    Stored components satisfy ``t(a, b, c) = omega * t(b, c, a)``.
    """

    n: int
    labels: tuple
    components: dict = field(hash=False)
    omega: CycloScalar = J

    def component(self, label: str, a: int, b: int, c: int) -> CycloScalar:
        return self.components.get((label, (a, b, c)), ZERO)

    def support(self, label: str) -> list:
        return sorted(idx for (lab, idx) in self.components if lab == label)

    def entries(self):
        """(label, indices, value) for every nonzero component, in label then index order."""
        order = {lab: k for k, lab in enumerate(self.labels)}
        return sorted(((lab, idx, v) for (lab, idx), v in self.components.items()),
                      key=lambda e: (order[e[0]], e[1]))

    def conj(self) -> "CyclicTensor3":
        return CyclicTensor3(self.n, self.labels,
                             {k: v.conj() for k, v in self.components.items()}, self.omega.conj())

    def pairing(self, label: str, other: "CyclicTensor3", other_label: str) -> CycloScalar:
        """sum_{abc} t^label_{abc} * conj(u^other_{abc})."""
        total = ZERO
        for (lab, idx), v in self.components.items():
            if lab == label:
                total = total + v * other.component(other_label, *idx).conj()
        return total


def _cyclic_class(base: tuple, omega: CycloScalar) -> dict:
    # t(base) = 1 and t(ABC) = omega * t(BCA) fixes the other two rotations
    inv = omega.inverse()
    return {base: ONE, rotate(base, 1): inv, rotate(base, 2): inv * inv}


def _build(n: int, labels: tuple, bases: tuple, omega: CycloScalar) -> CyclicTensor3:
    comps = {}
    for lab, base in zip(labels, bases):
        for idx, v in _cyclic_class(base, omega).items():
            comps[(lab, idx)] = v
    return CyclicTensor3(n, labels, comps, omega)


def make_rho(omega: CycloScalar = J) -> CyclicTensor3:
    """The two cyclic three-forms on two generators.

    With the default ``omega = j`` this is ``rho^1: 121 -> 1, 211 -> j^2, 112 -> j``
    and ``rho^2: 212 -> 1, 122 -> j^2, 221 -> j``.  ``omega = j^2`` gives the
    other phase convention (``rho^1_{112} = j^2``, ``rho^1_{211} = j``).
    """
    if omega not in (J, J2):
        raise DomainError("omega must be j or j^2")
    return _build(2, RHO_LABELS, ((1, 2, 1), (2, 1, 2)), omega)


def make_rho_bar(omega: CycloScalar = J) -> CyclicTensor3:
    """Componentwise conjugate of :func:`make_rho` (cyclic phase conj(omega))."""
    return make_rho(omega).conj()


_K_BASES = ((1, 2, 1), (2, 1, 2), (3, 1, 3), (1, 3, 1), (2, 3, 2), (3, 2, 3), (1, 2, 3), (1, 3, 2))

# Alternative K^7 and K^8 whose phases follow omega = j,
# unlike the other six (omega = j^2).
_K_PRINTED_7_8 = {
    "7": {(1, 2, 3): ONE, (2, 3, 1): J2, (3, 1, 2): J},
    "8": {(1, 3, 2): ONE, (3, 2, 1): J2, (2, 1, 3): J},
}


def make_K(printed: bool = False) -> CyclicTensor3:
    """The eight cyclic three-forms on three generators, omega = j^2.

    ``printed=True`` swaps in K^7, K^8 with the opposite phases, which break the
    common cyclic phase (see :func:`check_cyclic_consistency`); it exists for
    comparison runs only.
    """
    t = _build(3, K_LABELS, _K_BASES, J2)
    if printed:
        comps = {k: v for k, v in t.components.items() if k[0] not in ("7", "8")}
        for lab, vals in _K_PRINTED_7_8.items():
            for idx, v in vals.items():
                comps[(lab, idx)] = v
        t = CyclicTensor3(3, K_LABELS, comps, J2)
    return t


def check_cyclic_consistency(t: CyclicTensor3) -> Optional[CycloScalar]:
    """Common phase ``omega`` with ``t(abc) = omega t(bca)`` for all components, or None."""
    found = None
    for (lab, idx), v in t.components.items():
        if v.is_zero():
            continue
        w = t.component(lab, *rotate(idx))
        if w.is_zero():
            return None
        ratio = v / w
        if found is None:
            found = ratio
        elif ratio != found:
            return None
    if found not in (J, J2):
        return None
    return found


def apply_three_form(t: CyclicTensor3, e: AlgebraElement) -> dict:
    """Evaluate the three-form on a cubic element, one value per label.

    For each canonical word ``w`` the form is summed over the cyclic class of
    ``w``, each rotation weighted by the inverse of the phase relating it to
    ``w`` in the algebra.  When ``t`` is compatible with the relations this
    is three times ``t`` on ``w``; with the opposite phase convention every
    class sums to zero.
    """
    out = {lab: ZERO for lab in t.labels}
    for w, coeff in e.terms.items():
        if len(w) != 3 or len({g.grade for g in w}) != 1:
            raise DomainError("three-forms apply to length-3 single-grade words")
        # word(w) = step * word(rotate(w)), so word(rotate^k w) = step^-k word(w)
        step = J if w[0].grade == 1 else J2
        idx = tuple(g.index for g in w)
        if max(idx) > t.n:
            raise DomainError(f"index out of range for a tensor on {t.n} generators")
        for lab in t.labels:
            acc = ZERO
            weight = ONE
            for k in range(3):
                acc = acc + t.component(lab, *rotate(idx, k)) * weight
                weight = weight * step
            out[lab] = out[lab] + coeff * acc
    return out


def tensor_to_json(t: CyclicTensor3) -> str:
    rows = [{"label": lab, "indices": list(idx), "value": str(v)} for lab, idx, v in t.entries()]
    return json.dumps({"n": t.n, "omega": str(t.omega), "labels": list(t.labels), "components": rows},
                      indent=1, sort_keys=True)


def tensor_from_json(text: str) -> CyclicTensor3:
    doc = json.loads(text)
    comps = {(r["label"], tuple(r["indices"])): parse_scalar(r["value"]) for r in doc["components"]}
    return CyclicTensor3(doc["n"], tuple(doc["labels"]), comps, parse_scalar(doc["omega"]))


# -- two-forms ---------------------------------------------------------------

def pauli() -> list[GroupMatrix]:
    """sigma^0 = identity, sigma^1..3 the Pauli matrices, exact."""
    return [
        GroupMatrix([[1, 0], [0, 1]]),
        GroupMatrix([[0, 1], [1, 0]]),
        GroupMatrix([[ZERO, -I], [I, ZERO]]),
        GroupMatrix([[1, 0], [0, -1]]),
    ]


@dataclass(frozen=True)
class TwoForm:
    mu: int
    matrix: GroupMatrix = field(compare=False)


def make_pi() -> list[TwoForm]:
    """pi^mu_{A Bdot} = j^2 i sigma^mu_{A Bdot}; matrix rows A, columns Bdot."""
    c = J2 * I
    return [TwoForm(mu, s.scale(c)) for mu, s in enumerate(pauli())]


def make_pi_bar() -> list[TwoForm]:
    """pibar^mu_{Bdot A} = -j i sigma^mu_{A Bdot}; matrix rows Bdot, columns A.

    The sigma entry is taken at (A, Bdot), so the stored matrix is the
    transpose of -j i sigma^mu.
    """
    c = -J * I
    return [TwoForm(mu, s.T.scale(c)) for mu, s in enumerate(pauli())]


def pi_symmetry_factor() -> CycloScalar:
    """The scalar c with pi^mu_{A Bdot} = c * pibar^mu_{Bdot A} for every mu.

    The mixed commutation rule alone would predict c = -j^2; the
    phase-dressed Pauli realization gives c = -j.
    """
    pis, bars = make_pi(), make_pi_bar()
    found = None
    for p, pb in zip(pis, bars):
        for a in range(2):
            for b in range(2):
                x, y = p.matrix[a, b], pb.matrix[b, a]
                if x.is_zero() and y.is_zero():
                    continue
                ratio = x / y
                if found is None:
                    found = ratio
                elif ratio != found:
                    raise AssertionError("pi and pibar are not proportional")
    return found


def epsilon(dotted: bool = False) -> GroupMatrix:
    """Spinorial metric eps^{12} = -eps^{21} = 1 (same values for dotted indices)."""
    return GroupMatrix([[0, 1], [-1, 0]])


def gell_mann() -> list[GroupMatrix]:
    """lambda^0 = identity followed by the eight Gell-Mann matrices, exact."""
    z = ZERO
    inv_sqrt3 = SQRT3 / 3
    return [
        GroupMatrix.identity(3),
        GroupMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
        GroupMatrix([[z, -I, z], [I, z, z], [z, z, z]]),
        GroupMatrix([[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
        GroupMatrix([[0, 0, 1], [0, 0, 0], [1, 0, 0]]),
        GroupMatrix([[z, z, -I], [z, z, z], [I, z, z]]),
        GroupMatrix([[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
        GroupMatrix([[z, z, z], [z, z, -I], [z, I, z]]),
        GroupMatrix.diag([inv_sqrt3, inv_sqrt3, inv_sqrt3 * -2]),
    ]


def make_nine_forms() -> list[TwoForm]:
    """P^i = j^2 i lambda^i, i = 0..8."""
    c = J2 * I
    return [TwoForm(k, m.scale(c)) for k, m in enumerate(gell_mann())]
