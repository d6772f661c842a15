from fractions import Fraction

import pytest

from uqfm import matalg as M, pbw
from uqfm.matalg import OpMat, leg1, leg2, tensor_place
from uqfm.realize import numeric_rep_realization, rep_realization, symbolic
from uqfm.reps import make_rep
from uqfm.scalar import ALPHA, Q

QM = Q - 1 / Q
g = symbolic("SL2")
G = symbolic("GL2")


def test_r0_is_diagonal():
    assert M.builtin("R0") == OpMat.diag([1, 1 / Q, 1 / Q, 1])


def test_equitable_k_minus():
    K = M.builtin("Ke_m")
    assert K[0, 1] == 0 and K[1, 0] == g.Z


def test_u_matrix_frozen():
    expected = OpMat([[0, 0, 0, 0], [0, -Q, 1, 0], [0, 1, -1 / Q, 0], [0, 0, 0, 0]])
    assert M.u_matrix() == expected
    assert M.u_matrix() == M.perm_matrix() * M.r_matrix() - OpMat.identity(4, 1) * Q


def test_unknown_builtin():
    with pytest.raises(M.UnknownName):
        M.builtin("K_nope")


def test_tensor_place_shapes():
    K = M.kc_plus(g)
    assert tensor_place(K, [1], 2) == leg1(K)
    assert tensor_place(M.r_matrix(), [1, 2], 3).n == 8
    with pytest.raises(M.BadLegs):
        tensor_place(K, [2, 1], 3)


def test_permutation_swaps_rows():
    PR = M.perm_matrix() * M.r_matrix()
    R = M.r_matrix()
    assert PR.entries[1] == R.entries[2] and PR.entries[2] == R.entries[1]


def test_fm_examples():
    R, R0 = M.r_matrix(), M.r0_matrix()
    assert M.fm_residual(R, R0, M.kc_plus(g), M.kc_minus(g)).is_zero()
    one = OpMat.identity(2, g.one)
    assert M.fm_residual(R, R0, one, one).is_zero()


def test_fm_mutation_witness():
    R, R0 = M.r_matrix(), M.r0_matrix()
    K = M.kc_plus(g)
    bad = OpMat([[Q * g.K, K[0, 1]], [K[1, 0], K[1, 1]]])
    res = M.fm_residual(R, R0, bad, M.kc_minus(g))
    assert not res.is_zero()
    assert res.first_nonzero() is not None


def test_frt_examples():
    R = M.r_matrix()
    assert M.frt_residual(R, M.l_plus(G), M.l_plus(G)).is_zero()
    assert M.frt_residual(R, M.l_plus(G), M.l_minus(G)).is_zero()
    assert M.frt_residual(M.r21_inv_matrix(), M.l_minus(G), M.l_plus(G)).is_zero()


def test_printed_inverses():
    assert M.verify_inverse(M.kc_plus(g), M.kc_plus_inv(g))
    assert M.verify_inverse(M.ke_plus(g), M.ke_plus_inv(g))
    ident = OpMat.identity(2, 1)
    assert M.verify_inverse(ident, ident)
    with pytest.raises(M.SizeMismatch):
        M.verify_inverse(ident, OpMat.identity(4, 1))


def test_quantum_determinants():
    assert M.qdet("qdet1", M.u_matrix(), M.l_plus(G)) == -(Q + 1 / Q) * (G.K1 * G.K2)
    assert M.qdet("qdet2", M.u_matrix(), M.l_plus(G), M.l_minus(G)) == -QM**2 * pbw.omega2c(G)
    fm = M.qdet("qdetFM", M.u_matrix(), M.r0_matrix(), M.kc_plus(g), M.kc_minus(g))
    assert fm == -QM**2 / Q * pbw.omega_c(g)
    with pytest.raises(M.BadOperands):
        M.qdet("qdet7")


def test_quantum_trace():
    target = QM**2 * pbw.omega_c(g)
    kc_m_alt_inv = OpMat([[g.K, 0], [QM / Q * g.E, g.Ki]])
    assert M.verify_inverse(M.kc_minus_alt(g), kc_m_alt_inv)
    assert M.qtrace(M.kc_plus_alt(g), kc_m_alt_inv) == target
    ke_m_alt_inv = OpMat([[g.X, -g.one], [g.one - g.Z * g.X, g.Z]])
    assert M.verify_inverse(M.ke_minus_alt(g), ke_m_alt_inv)
    assert M.qtrace(M.ke_plus_alt(g), ke_m_alt_inv) == pbw.omega_e(g)
    ident = OpMat.identity(2, 1)
    assert M.qtrace(ident, ident) == Q + 1 / Q


def test_printed_alternative_entry_fails_mixed_relation():
    R, R0i = M.r_matrix(), M.r0_inv_matrix()
    assert not M.fm_residual(R, R0i, M.kc_plus_alt(g), M.kc_minus_alt_printed(g)).is_zero()
    assert M.fm_residual(R, R0i, M.kc_plus_alt(g), M.kc_minus_alt(g)).is_zero()


def test_hecke():
    assert all(v.is_zero() for v in M.hecke_residuals().values())
    U1 = M.u_matrix(Fraction(1))
    assert U1 * U1 == U1 * -2


def test_dressed_k_operators():
    Kp = M.k_plus_alpha_dressed(G)
    assert Kp[1, 0] == ALPHA * G.one
    assert Kp == M.k_plus_alpha(G)
    assert M.k_minus_alpha_dressed(G) == M.k_minus_alpha(G)


@pytest.mark.parametrize("a,b", [("k_plus_alpha", "k_plus_alpha"), ("k_minus_alpha", "k_minus_alpha"),
                                 ("k_plus_alpha", "k_minus_alpha")])
def test_generic_alpha_freidel_maillet(a, b):
    Ka, Kb = getattr(M, a)(G), getattr(M, b)(G)
    assert M.fm_residual(M.r_matrix(), M.r0_matrix(), Ka, Kb).is_zero()


def test_symmetric_rmkkpp_and_printed_variant():
    R21i, R0 = M.r21_inv_matrix(), M.r0_matrix()
    for kp, km in ((M.kc_plus(g), M.kc_minus(g)), (M.ke_plus(g), M.ke_minus(g))):
        for k in (kp, km):
            assert (R21i * leg1(k) * R0 * leg2(k) - leg2(k) * R0 * leg1(k) * R21i).is_zero()
        assert not (R21i * leg1(kp) * R0 * leg2(kp) - leg2(kp) * R0 * leg1(km) * R21i).is_zero()


def test_intertwiner_matrix_for_e():
    d = M.dtilde(g, "E")
    assert d == OpMat([[Q**2 * g.E, g.K], [0, g.E / Q**2]])


@pytest.mark.parametrize("family", ["chevalley", "equitable", "borel"])
def test_intertwiners_symbolic(family):
    assert all(v.is_zero() for v in M.intertwine_residual(family, g).values())


@pytest.mark.parametrize("family,flavor", [("chevalley", "chevalley"), ("equitable", "equitable_ycol"),
                                           ("borel", "equitable_ycol")])
def test_intertwiners_in_representations(family, flavor):
    for s in (1, 2):
        r = rep_realization(make_rep(s, flavor))
        assert all(v.is_zero() for v in M.intertwine_residual(family, r).values())
    r = numeric_rep_realization(2, flavor)
    assert all(v.is_zero() for v in M.intertwine_residual(family, r).values())
