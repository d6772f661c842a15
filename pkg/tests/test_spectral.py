from fractions import Fraction

import pytest

from uqfm import pbw, spectral as S
from uqfm.matalg import OpMat
from uqfm.realize import numeric_rep_realization, rep_realization, specialization_realization, symbolic
from uqfm.reps import make_rep
from uqfm.scalar import EM, EP, KM, KP, LaurentUV, P, Q, is_zero

QM = Q - 1 / Q
NORM = Q**2 * QM**2
A = symbolic("ALG_A")
g = symbolic("SL2")


def _all_zero(d):
    return all(is_zero(v) for v in (d.values() if isinstance(d, dict) else [d]))


def test_r_matrix_entries():
    R = S.r_matrix_u()
    assert R[0, 0] == LaurentUV.u(1, Q) - LaurentUV.u(-1, 1 / Q)
    assert R[1, 2] == LaurentUV.const(QM)
    assert R[0, 1] == 0


def test_r_matrix_at_u_one_is_scaled_flip():
    from uqfm.matalg import perm_matrix

    assert S.evaluate_u(S.r_matrix_u(), 1) == perm_matrix() * QM


def test_ybe_and_symmetries():
    assert S.ybe_residual().is_zero()
    assert _all_zero(S.r_symmetry_residuals())
    assert S.ybe_residual(Fraction(25, 49)).is_zero()


def test_kg_entries():
    K = S.kg(A)
    assert K[0, 0] == LaurentUV.u(1, Q) * A.W0 - LaurentUV.u(-1) * (EP * A.one)
    assert K[1, 0] == LaurentUV.const(A.Zt1) + LaurentUV.u(2, KM * Q / QM) * A.one


def test_lemma41_residual_vanishes():
    res = S.lemma41_check(extract=False)
    assert res["residual"].is_zero() and res["nonzero"] == 0


def test_lemma41_extracted_relations_span():
    res = S.lemma41_check()
    assert (res["rank_extracted"], res["rank_relations"], res["rank_union"]) == (6, 6, 6)


def test_lemma41_mutation_detected():
    assert not S.lemma41_check(S.mutated_alg_a(), extract=False)["residual"].is_zero()


@pytest.mark.parametrize("s", [1, 2])
def test_lemma41_in_numeric_models(s):
    from uqfm.realize import oracle_realizations

    for h in oracle_realizations("alg_a", (s,), point={"p": Fraction(5, 7)}):
        assert S.re_residual(S.kg(h), h.q).is_zero(), h.name


def test_gamma_expansion_with_normalization():
    G = S.gamma_u(S.kg(A))
    E = S.gamma_expansion(A)
    assert (G * NORM - E).is_zero()
    assert not (G - E).is_zero()


def test_gamma_top_coefficient():
    E = S.gamma_expansion(A)
    assert E.terms[(4, 0)] == -KP * KM * Q**6 * A.one
    assert E.terms[(-2, 0)] == QM**2 * EP * EM * A.one


def test_gamma_coefficients_are_central():
    assert _all_zero(S.gamma_centrality(A))
    assert _all_zero(S.gamma_k_commutators(A))


def test_gamma_under_chevalley_specialization():
    expected = (LaurentUV.u(2, Q**4 * QM**2) * g.one - LaurentUV.const(QM**4 * Q**2 * pbw.omega_c(g))
                + LaurentUV.u(-2, QM**2) * g.one)
    assert (S.gamma_u(S.kc_u(g)) * NORM - expected).is_zero()


@pytest.mark.parametrize("target,g0,g1", [
    ("phi_c", QM**2 * g.one, QM**2 * pbw.omega_c(g)),
    ("phi_e", QM**2 * g.one, pbw.omega_e(g)),
    ("phi_c'", QM**2 * pbw.omega_c(g), g.one / QM**2),
])
def test_table_one(target, g0, g1):
    h = specialization_realization(target, g)
    assert h.element(pbw.gamma0(A)) == g0
    assert h.element(pbw.gamma1(A)) == g1


def test_specialized_kg():
    assert S.specialize_kg("phi_c") == S.kc_u(g)
    assert S.specialize_kg("phi_e") == S.ke_u(g)
    assert S.specialize_kg("r_phi_e") == S.kbx_u(g)
    assert S.kbx_u(g) == S.kbx_u_explicit(g)


@pytest.mark.parametrize("builder", [S.kc_u, S.ke_u, S.kbx_u])
def test_spectral_reflection_equation(builder):
    assert S.re_residual(builder(g)).is_zero()


@pytest.mark.parametrize("builder,flavor", [(S.kc_u, "chevalley"), (S.ke_u, "equitable_ycol"),
                                            (S.kbx_u, "equitable_ycol")])
def test_spectral_reflection_equation_in_models(builder, flavor):
    r = rep_realization(make_rep(2, flavor))
    assert S.re_residual(builder(r), r.q).is_zero()
    n = numeric_rep_realization(1, flavor)
    assert S.re_residual(builder(n), n.q).is_zero()


def test_reflection_equation_detects_perturbation():
    K = S.kc_u(g)
    bad = OpMat([[K[0, 0] + LaurentUV.u(1) * g.one, K[0, 1]], [K[1, 0], K[1, 1]]])
    assert not S.re_residual(bad).is_zero()


def test_dressing():
    r = S.dressing_residuals()
    for key in ("K0.RE", "dressed.RE", "isoK.normalized", "lax.YBA1", "lax.YBA2", "lax.YBA3"):
        assert r[key].is_zero(), key
    assert not r["isoK.literal"].is_zero()


def test_lax_determinant():
    assert (S.lax_qdet() - S.lax_qdet_expected()).is_zero()
    assert not (S.lax_qdet() - S.lax_qdet_printed()).is_zero()


def test_lax_determinant_top_term():
    assert S.lax_qdet().terms[(2, 0)] == Q * symbolic("SL2H").one


@pytest.mark.parametrize("which", ["chevalley", "equitable"])
def test_decomposition(which):
    r = S.decomposition_residuals(which)
    for key in ("simil.inverse", "REns", "remaining", "R-R21inv"):
        assert r[key].is_zero(), key
    assert not r["simil.literal"].is_zero()


def test_chevalley_decomposition_needs_gauge():
    r = S.decomposition_residuals("chevalley")
    assert not r["Kns.literal"].is_zero()
    assert r["Kns.gauged"].is_zero()
    assert S.decomposition_residuals("equitable")["Kns.literal"].is_zero()


def test_fractional_exponent_rejected():
    K = OpMat([[g.one, g.E], [g.F, g.one]])
    with pytest.raises(S.FractionalExponent):
        S.m_conjugate(K, power=Fraction(1, 2))


def test_gauge_exponents_are_integral():
    K = OpMat([[g.one, g.E], [g.F, g.one]])
    M = S.m_conjugate(K)
    assert M[0, 1] == LaurentUV.u(1) * g.E
    assert M[1, 0] == LaurentUV.u(-1) * g.F


def test_simil_is_involutive_on_diagonal():
    D = OpMat.diag([LaurentUV.const(P)] * 4)
    assert S.simil(D) == D
