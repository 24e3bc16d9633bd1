import math

import numpy as np
import pytest

from splitoct import clifford as cl


def test_alpha_index_range():
    with pytest.raises(ValueError):
        cl.alpha(8)
    with pytest.raises(ValueError):
        cl.gamma(-1)


def test_alpha1_is_i_identity():
    a = cl.alpha(1)
    assert np.array_equal(a.im, np.eye(8, dtype=np.int64))
    assert not a.re.any()


def test_alpha0_diagonal():
    a = cl.alpha(0)
    assert np.array_equal(np.diag(a.re), np.array([-1, 1, 1, 1, -1, -1, -1, 1]))
    assert not a.im.any()


def test_alpha_eight_nonzeros_each():
    for mu in range(8):
        a = cl.alpha(mu)
        assert np.count_nonzero(a.re) + np.count_nonzero(a.im) == 8


def test_gamma_squares():
    ident = cl.GMat.eye(16)
    for mu in range(4):
        assert cl.gamma(mu) @ cl.gamma(mu) == ident
    for nu in range(4, 8):
        assert cl.gamma(nu) @ cl.gamma(nu) == -ident


def test_gamma_block_structure():
    g = cl.gamma(1)
    assert not g.re[0:8, 0:8].any() and not g.im[0:8, 0:8].any()
    assert not g.re[8:16, 8:16].any() and not g.im[8:16, 8:16].any()


def test_gamma01_anticommute():
    g0, g1 = cl.gamma(0), cl.gamma(1)
    assert (g0 @ g1 + g1 @ g0).is_zero()


def test_clifford_sweep():
    rep = cl.verify_clifford()
    assert rep.passed
    assert rep.cases == 64


def test_b_matrix_properties():
    B = cl.b_matrix()
    assert B.is_real()
    assert B @ B == cl.GMat.eye(16)
    for mu in range(8):
        assert cl.gamma(mu).T == B @ cl.gamma(mu) @ B


def test_b_entries_are_signs():
    B = cl.b_matrix()
    assert set(np.unique(B.re)) <= {-1, 0, 1}


class TestVectorMatrix:
    def test_basis_vector(self):
        x = np.zeros(8)
        x[0] = 1
        assert np.array_equal(cl.vector_to_matrix(x), cl.gamma(0).to_complex())

    def test_zero(self):
        assert not cl.vector_to_matrix(np.zeros(8)).any()

    def test_quadratic_form_identity(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            x = rng.integers(-9, 10, size=8)
            X = cl.vector_to_matrix_exact(x)
            q = int(sum(cl.METRIC[m] * int(x[m]) ** 2 for m in range(8)))
            assert X @ X == cl.GMat.eye(16).scale(q)

    def test_roundtrip(self):
        x = np.array([3.0, -1.0, 0.0, 2.0, 0.5, 0.0, -7.0, 1.25])
        back = cl.matrix_to_vector(cl.vector_to_matrix(x))
        assert np.allclose(back, x, atol=1e-12)

    def test_gamma0_plus_2gamma7(self):
        X = cl.gamma(0) + cl.gamma(7).scale(2)
        assert cl.matrix_to_vector(X) == tuple(
            [1, 0, 0, 0, 0, 0, 0, 2])

    def test_identity_is_not_grade1(self):
        with pytest.raises(cl.NotGrade1Error):
            cl.matrix_to_vector(np.eye(16, dtype=np.complex128))


class TestRotor:
    def test_theta_zero_is_identity(self):
        r = cl.rotor(4, 5, 0.0)
        assert np.allclose(r.matrix(), np.eye(16))

    def test_rejects_equal_indices(self):
        with pytest.raises(ValueError):
            cl.rotor(3, 3, 1.0)

    def test_inverse_is_swapped_plane(self):
        r = cl.rotor(2, 6, 0.7)
        assert np.allclose(r.matrix() @ r.inverse().matrix(), np.eye(16), atol=1e-14)

    def test_matrix_at_minus_theta_inverts(self):
        r = cl.rotor(1, 2, 0.9)
        rm = cl.rotor(1, 2, -0.9)
        assert np.allclose(r.matrix() @ rm.matrix(), np.eye(16), atol=1e-14)

    def test_group_law_same_plane(self):
        a, b = 0.6, -1.3
        lhs = cl.rotor(0, 4, a).matrix() @ cl.rotor(0, 4, b).matrix()
        rhs = cl.rotor(0, 4, a + b).matrix()
        assert np.max(np.abs(lhs - rhs)) < 1e-12

    def test_boost_plane_is_noncompact(self):
        assert not cl.rotor(0, 4, 1.0).compact
        assert cl.rotor(4, 5, 1.0).compact


class TestRotateVector:
    def test_compact_plane_45(self):
        theta = 0.8
        x = np.zeros(8)
        x[4] = 1.0
        out = cl.rotate_vector(x, cl.rotor(4, 5, theta))
        want = np.zeros(8)
        want[4] = math.cos(theta)
        want[5] = -math.sin(theta)
        assert np.allclose(out, want, atol=1e-13)

    def test_boost_plane_04(self):
        theta = 1.0
        x = np.zeros(8)
        x[0] = 1.0
        out = cl.rotate_vector(x, cl.rotor(0, 4, theta))
        assert abs(out[0] - math.cosh(theta)) < 1e-13
        assert abs(out[4] - math.sinh(theta)) < 1e-13

    def test_zero_vector(self):
        out = cl.rotate_vector(np.zeros(8), cl.rotor(2, 3, 1.1))
        assert np.allclose(out, 0.0)

    def test_norm_preserved(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            mu, nu = rng.choice(8, size=2, replace=False)
            theta = float(rng.uniform(-3, 3))
            x = rng.integers(-9, 10, size=8).astype(float)
            out = cl.rotate_vector(x, cl.rotor(int(mu), int(nu), theta))
            assert abs(cl.quadratic_form(out) - cl.quadratic_form(x)) < 1e-10


class TestRotateSpinor:
    def test_theta_zero(self):
        eta = np.arange(16.0)
        assert np.allclose(cl.rotate_spinor(eta, cl.rotor(0, 1, 0.0)), eta)

    def test_infinitesimal_L01_phi_and_psi(self):
        h = 1e-7
        eta = np.zeros(16)
        eta[1] = 1.0   # phi_1
        out = cl.rotate_spinor(eta, cl.rotor(0, 1, h))
        assert abs(out[0] - 0.5 * h) < 1e-10     # phi_0' = phi_0 + theta/2 phi_1
        eta = np.zeros(16)
        eta[11] = 1.0  # psi_3
        out = cl.rotate_spinor(eta, cl.rotor(0, 1, h))
        assert abs(out[10] - 0.5 * h) < 1e-10    # psi_2' = psi_2 + theta/2 psi_3

    def test_chirality_blocks_never_mix(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            mu, nu = rng.choice(8, size=2, replace=False)
            r = cl.rotor(int(mu), int(nu), float(rng.uniform(-3, 3)))
            phi_only = cl.embed_phi(rng.normal(size=8))
            out = cl.rotate_spinor(phi_only, r)
            assert np.array_equal(out[8:16], np.zeros(8))
            psi_only = cl.embed_psi(rng.normal(size=8))
            out = cl.rotate_spinor(psi_only, r)
            assert np.array_equal(out[0:8], np.zeros(8))

    def test_double_cover(self):
        eta = np.arange(1.0, 17.0)
        r2 = cl.rotor(1, 2, 2 * math.pi)
        r4 = cl.rotor(1, 2, 4 * math.pi)
        assert np.allclose(cl.rotate_spinor(eta, r2), -eta, atol=1e-12)
        assert np.allclose(cl.rotate_spinor(eta, r4), eta, atol=1e-12)


class TestSpinorInvariant:
    def test_zero(self):
        assert cl.spinor_invariant(np.zeros(16)) == 0

    def test_chiral_additivity(self):
        rng = np.random.default_rng(9)
        phi = rng.integers(-9, 10, size=8)
        psi = rng.integers(-9, 10, size=8)
        total = cl.spinor_invariant(cl.embed_phi(phi) + cl.embed_psi(psi))
        assert total == (cl.spinor_invariant(cl.embed_phi(phi))
                         + cl.spinor_invariant(cl.embed_psi(psi)))

    def test_exact_on_integers(self):
        eta = np.array([1, 2, 3, 4, 5, 6, 7, 8, 1, 1, 1, 1, 2, 2, 2, 2])
        got = cl.spinor_invariant(eta)
        assert isinstance(got, int)
        # split diagonal reference value
        want = (1 + 4 + 9 + 16 - 25 - 36 - 49 - 64) + (4 - 16)
        assert got == want

    def test_preserved_under_rotor(self):
        rng = np.random.default_rng(13)
        eta = rng.integers(-9, 10, size=16).astype(float)
        for _ in range(20):
            mu, nu = rng.choice(8, size=2, replace=False)
            r = cl.rotor(int(mu), int(nu), float(rng.uniform(-3, 3)))
            before = cl.spinor_invariant(eta)
            after = cl.spinor_invariant(cl.rotate_spinor(eta, r))
            assert abs(float(before) - float(after)) < 1e-10


class TestTrilinearMatrix:
    def test_zero_arguments(self):
        assert cl.trilinear_matrix([0] * 8, [1] * 8, [1] * 8) == 0
        assert cl.trilinear_matrix([1] * 8, [0] * 8, [1] * 8) == 0

    def test_linearity_in_x_exact(self):
        rng = np.random.default_rng(17)
        phi = [int(v) for v in rng.integers(-9, 10, size=8)]
        psi = [int(v) for v in rng.integers(-9, 10, size=8)]
        x = [int(v) for v in rng.integers(-9, 10, size=8)]
        y = [int(v) for v in rng.integers(-9, 10, size=8)]
        xy = [a + b for a, b in zip(x, y)]
        assert (cl.trilinear_matrix(phi, xy, psi)
                == cl.trilinear_matrix(phi, x, psi) + cl.trilinear_matrix(phi, y, psi))

    def test_chirality_violation_rejected(self):
        bad = np.ones(16)
        with pytest.raises(cl.ChiralityError):
            cl.trilinear_matrix(bad, np.ones(8), np.ones(8))
        with pytest.raises(cl.ChiralityError):
            cl.trilinear_matrix(np.ones(8), np.ones(8), bad)

    def test_accepts_pure_chiral_16(self):
        phi16 = cl.embed_phi([1, 0, 0, 0, 0, 0, 0, 0])
        psi16 = cl.embed_psi([1, 0, 0, 0, 0, 0, 0, 0])
        x = [1, 0, 0, 0, 0, 0, 0, 0]
        assert cl.trilinear_matrix(phi16, x, psi16) == -1

    def test_real_valued_on_random_floats(self):
        rng = np.random.default_rng(23)
        v = cl.trilinear_matrix(rng.normal(size=8), rng.normal(size=8),
                                rng.normal(size=8))
        assert isinstance(v, float)
