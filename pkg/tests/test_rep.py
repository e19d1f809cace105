"""Matrix representation, inversion and the Jacobi eigenvalue solver."""

import numpy as np
import pytest

from cl13.algebra import (
    E,
    E0,
    CliffordElement,
    exp_element,
    random_element,
)
from cl13.rep import (
    NotHermitianError,
    SingularElementError,
    gamma_rep,
    hermitian_eigenvalues,
    inverse,
    rep_inverse,
    rep_rank,
)
from cl13.subspaces import fixed_idempotent, sample


def test_rep_of_unit_and_e0():
    assert np.allclose(gamma_rep(E), np.eye(4))
    m0 = gamma_rep(E0)
    assert np.allclose(m0, np.diag([1, 1, -1, -1]))
    assert np.allclose(m0 @ m0, np.eye(4))


def test_rep_adjointness_pattern():
    # rep(e0) self-adjoint, rep(ek) skew-adjoint.
    for a in range(4):
        m = gamma_rep(CliffordElement.from_blade(f"e{a}"))
        if a == 0:
            assert np.allclose(m.conj().T, m)
        else:
            assert np.allclose(m.conj().T, -m)


def test_rep_homomorphism_random(rng):
    worst = 0.0
    for _ in range(200):
        u = random_element(rng)
        v = random_element(rng)
        worst = max(
            worst,
            float(np.max(np.abs(gamma_rep(u * v) - gamma_rep(u) @ gamma_rep(v)))),
            float(np.max(np.abs(gamma_rep(u).conj().T - gamma_rep(u.herm_conj())))),
        )
    assert worst <= 1e-12


def test_rep_inverse_roundtrip(rng):
    for _ in range(20):
        u = random_element(rng)
        assert rep_inverse(gamma_rep(u)).equals(u, 1e-12)
    with pytest.raises(ValueError):
        rep_inverse(np.eye(3))


def test_rep_rank_of_idempotents():
    # Oracle: numpy matrix_rank on the representation.
    for label, expected in zip(("t1", "t2", "t3", "t4"), (1, 2, 3, 4)):
        t = fixed_idempotent(label).element
        assert rep_rank(t) == expected
        assert np.linalg.matrix_rank(gamma_rep(t), tol=1e-9) == expected


def test_inverse():
    assert inverse(E).equals(E, 1e-13)
    v = sample("sp_cl", seed=9, scale=0.7)
    w = exp_element(v)
    assert inverse(w).equals(exp_element(v * -1), 1e-11)
    assert (inverse(w) * w).equals(E, 1e-11)
    with pytest.raises(SingularElementError):
        inverse(fixed_idempotent("t2").element)


def test_hermitian_eigenvalues_fixed_cases():
    assert np.allclose(hermitian_eigenvalues(E), [1, 1, 1, 1])
    assert np.allclose(hermitian_eigenvalues(E0), [-1, -1, 1, 1])
    t1 = fixed_idempotent("t1").element
    assert np.allclose(hermitian_eigenvalues(t1), [0, 0, 0, 1], atol=1e-12)
    t2 = fixed_idempotent("t2").element
    assert np.allclose(hermitian_eigenvalues(t2), [0, 0, 1, 1], atol=1e-12)


def test_jacobi_matches_numpy_oracle(rng):
    for _ in range(50):
        u = random_element(rng)
        h = (u + u.herm_conj()) * 0.5
        ours = hermitian_eigenvalues(h)
        theirs = np.sort(np.linalg.eigvalsh(gamma_rep(h)))
        assert np.allclose(ours, theirs, atol=1e-10)


def test_not_hermitian_rejected():
    with pytest.raises(NotHermitianError):
        hermitian_eigenvalues(CliffordElement.from_blade("e1"))
