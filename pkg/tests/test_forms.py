import json
from itertools import product
from pathlib import Path

import numpy as np
import pytest

from cubicquark.algebra import AlgebraElement, Generator
from cubicquark.errors import DomainError
from cubicquark.forms import (
    K_LABELS, CyclicTensor3, apply_three_form, check_cyclic_consistency, epsilon, gell_mann, make_K, make_nine_forms,
    make_pi, make_pi_bar, make_rho, make_rho_bar, pauli, pi_symmetry_factor, tensor_from_json, tensor_to_json,
)
from cubicquark.scalars import I, J, J2, ONE, ZERO, CycloScalar

GOLDEN = Path(__file__).parent / "golden"


def el(family, *idx, c=ONE):
    return AlgebraElement.from_word(tuple(Generator(family, k) for k in idx), c)


def oracle_pairing(t, a, u, b):
    n = t.n
    return sum((complex(t.component(a, *i)) * complex(u.component(b, *i)).conjugate()
                for i in product(range(1, n + 1), repeat=3)), 0j)


def test_rho_components():
    rho = make_rho()
    assert rho.component("1", 1, 2, 1) == ONE
    assert rho.component("1", 2, 1, 1) == J2
    assert rho.component("1", 1, 1, 2) == J
    assert rho.component("2", 2, 1, 2) == ONE
    assert rho.component("2", 1, 2, 2) == J2
    assert rho.component("2", 2, 2, 1) == J
    assert rho.component("1", 1, 1, 1) == ZERO
    assert len(rho.components) == 6


def test_rho_other_convention():
    rho = make_rho(J2)
    assert rho.component("1", 1, 1, 2) == J2
    assert rho.component("1", 2, 1, 1) == J
    with pytest.raises(DomainError):
        make_rho(ONE)


def test_rho_bar_is_conjugate():
    rb = make_rho_bar()
    assert rb.component("1", 1, 1, 2) == J2
    assert rb.component("2", 1, 2, 2) == J
    assert check_cyclic_consistency(rb) == J2


def test_rho_pairing_is_diagonal():
    rho = make_rho()
    for a in ("1", "2"):
        for b in ("1", "2"):
            expected = 3 if a == b else 0
            assert rho.pairing(a, rho, b) == CycloScalar(expected)
            assert abs(oracle_pairing(rho, a, rho, b) - expected) < 1e-12


def test_K_entries():
    k = make_K()
    assert k.component("3+", 1, 2, 1) == ONE
    assert k.component("3+", 2, 1, 1) == J
    assert k.component("3+", 1, 1, 2) == J2
    assert k.component("7", 2, 3, 1) == J
    assert k.component("7", 3, 1, 2) == J2
    assert k.component("8", 3, 2, 1) == J
    assert k.component("8", 2, 1, 3) == J2


def test_K_printed_entries():
    k = make_K(printed=True)
    assert k.component("7", 2, 3, 1) == J2
    assert k.component("8", 2, 1, 3) == J
    assert k.component("3+", 2, 1, 1) == J


def test_K_pairing_is_three_times_identity():
    k = make_K()
    for a in K_LABELS:
        for b in K_LABELS:
            expected = 3 if a == b else 0
            assert k.pairing(a, k, b) == CycloScalar(expected)
            assert abs(oracle_pairing(k, a, k, b) - expected) < 1e-12


def test_K_supports_are_disjoint_classes():
    k = make_K()
    seen = set()
    for lab in K_LABELS:
        sup = set(k.support(lab))
        assert len(sup) == 3
        assert not sup & seen
        seen |= sup
    assert len(seen) == 24  # every index triple except the three diagonal ones


def test_cyclic_consistency():
    assert check_cyclic_consistency(make_rho()) == J
    assert check_cyclic_consistency(make_rho(J2)) == J2
    assert check_cyclic_consistency(make_K()) == J2
    assert check_cyclic_consistency(make_K(printed=True)) is None
    lone = CyclicTensor3(2, ("1",), {("1", (1, 2, 1)): ONE}, J)
    assert check_cyclic_consistency(lone) is None


def test_apply_three_form_examples():
    rho = make_rho()
    assert apply_three_form(rho, el("theta", 1, 2, 1)) == {"1": CycloScalar(3), "2": ZERO}
    assert apply_three_form(rho, el("theta", 2, 1, 2)) == {"1": ZERO, "2": CycloScalar(3)}


def test_apply_three_form_opposite_convention_vanishes():
    rho = make_rho(J2)
    assert apply_three_form(rho, el("theta", 1, 2, 1)) == {"1": ZERO, "2": ZERO}


def test_apply_three_form_is_linear():
    rho = make_rho()
    x = el("theta", 1, 2, 1, c=J) + el("theta", 2, 2, 1, c=CycloScalar(2))
    out = apply_three_form(rho, x)
    assert out["1"] == J * 3
    assert out["2"] == CycloScalar(2) * 3 * J


def test_apply_three_form_on_antiquark_words():
    rb = make_rho_bar()
    assert apply_three_form(rb, el("thetaBar", 1, 2, 1))["1"] == CycloScalar(3)


def test_apply_three_form_domain_errors():
    rho = make_rho()
    with pytest.raises(DomainError):
        apply_three_form(rho, el("theta", 1, 2))
    with pytest.raises(DomainError):
        apply_three_form(rho, el("q", 1, 3, 1))


def test_json_round_trip():
    for t in (make_rho(), make_rho_bar(), make_K(), make_K(printed=True)):
        back = tensor_from_json(tensor_to_json(t))
        assert back == t
        assert back.components == t.components


def test_json_golden():
    assert tensor_from_json((GOLDEN / "rho.json").read_text()).components == make_rho().components
    doc = json.loads(tensor_to_json(make_rho()))
    assert set(doc) == {"n", "omega", "labels", "components"}


def test_pi_examples():
    pi, pib = make_pi(), make_pi_bar()
    assert pi[1].matrix[0, 1] == J2 * I
    assert pi[0].matrix[0, 0] == J2 * I
    assert pib[3].matrix[1, 1] == J * I
    assert pib[2].matrix[1, 0] == -J * I * -I  # sigma^2 at (A=1, Bdot=2) is -i


def test_pi_symmetry_factor():
    assert pi_symmetry_factor() == -J
    assert pi_symmetry_factor() != -J2


def test_pauli_algebra():
    s = pauli()
    for a in range(1, 4):
        assert s[a] @ s[a] == s[0]
    assert s[1] @ s[2] == s[3].scale(I)


def test_epsilon():
    e = epsilon()
    assert e[0, 1] == ONE and e[1, 0] == -ONE
    assert epsilon(dotted=True) == e


def test_gell_mann_orthogonality():
    lam = gell_mann()
    for a in range(9):
        for b in range(9):
            tr = (lam[a] @ lam[b]).trace()
            expected = (3 if a == 0 else 2) if a == b else 0
            assert tr == CycloScalar(expected)
    for a in range(1, 9):
        assert lam[a].H == lam[a]
        assert lam[a].trace() == ZERO


def test_nine_forms_scale():
    for p, lam in zip(make_nine_forms(), gell_mann()):
        assert p.matrix == lam.scale(J2 * I)
    m = np.array([[complex(x) for x in row] for row in make_nine_forms()[8].matrix.data])
    assert np.allclose(np.diag(m), complex(J2 * I) * np.array([1, 1, -2]) / np.sqrt(3))
