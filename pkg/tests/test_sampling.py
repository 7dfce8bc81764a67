import numpy as np
import pytest

from cubicquark.matrices import GroupMatrix
from cubicquark.sampling import (
    expm, phase_permutation, random_exact_matrix, random_exact_sl2, random_exact_unitary, sample_gl2, sample_sl2c,
    sample_su3, sub_seed,
)
from cubicquark.scalars import J, J2, ONE


def test_samplers_are_deterministic():
    for f in (sample_sl2c, sample_su3, sample_gl2):
        assert np.array_equal(f(123).data, f(123).data)
        assert not np.array_equal(f(123).data, f(124).data)
    assert random_exact_sl2(5) == random_exact_sl2(5)
    assert random_exact_unitary(5) == random_exact_unitary(5)


def test_sub_seed():
    assert sub_seed(42, 0) == 42
    assert len({sub_seed(42, k) for k in range(100)}) == 100
    assert 0 <= sub_seed(2**64 - 1, 3) < 2**64


@pytest.mark.parametrize("seed", range(20))
def test_sl2c_has_unit_determinant(seed):
    assert abs(sample_sl2c(seed).det() - 1) < 1e-12


@pytest.mark.parametrize("seed", range(20))
def test_su3_is_special_unitary(seed):
    u = sample_su3(seed).data
    assert np.max(np.abs(u @ u.conj().T - np.eye(3))) < 1e-12
    assert abs(np.linalg.det(u) - 1) < 1e-12


def test_exact_samplers():
    for seed in range(10):
        assert random_exact_sl2(seed).det() == ONE
        u = random_exact_unitary(seed, rotations=seed % 3)
        assert u @ u.H == GroupMatrix.identity(3)
        assert u.det() in (ONE, J, J2)
        assert random_exact_matrix(seed, n=3).dim == 3


def test_phase_permutation():
    p = phase_permutation((1, 2, 0), (0, 0, 0))
    assert p @ p @ p == GroupMatrix.identity(3)
    assert p.det() == ONE


def test_expm_basic():
    assert np.allclose(expm(np.zeros((2, 2))), np.eye(2))
    assert np.allclose(expm(np.diag([1.0, -2.0])), np.diag(np.exp([1.0, -2.0])), atol=1e-14)
    rot = expm(np.array([[0, -np.pi / 2], [np.pi / 2, 0]]))
    assert np.allclose(rot, [[0, -1], [1, 0]], atol=1e-14)


def test_expm_against_scipy():
    linalg = pytest.importorskip("scipy.linalg")
    rng = np.random.default_rng(0)
    for scale in (0.1, 1.0, 5.0):
        a = scale * (rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
        ref = linalg.expm(a)
        assert np.max(np.abs(expm(a) - ref)) <= 1e-12 * max(1.0, np.max(np.abs(ref)))
