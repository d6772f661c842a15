import json

import pytest

from uqfm import matalg as M, pbw, spectral as S
from uqfm.matalg import OpMat
from uqfm.printed import constant_kmatrices, rep_half, spectral_kmatrices
from uqfm.realize import kdemi_realization, rep_realization
from uqfm.reps import (
    FlavorMismatch, Matrix, check_fm3, export_matrix, import_matrix, kop_to_kmatrix, make_rep, rep_eval,
)
from uqfm.scalar import LaurentUV, P, Q, qnum

QM = Q - 1 / Q


def as_opmat(m):
    return OpMat(m.rows)


def test_spin_half_chevalley():
    rep = make_rep(1, "chevalley")
    expected = rep_half()["chevalley"]
    for name in ("K", "E", "F"):
        assert as_opmat(rep[name]) == expected[name]


def test_spin_half_equitable():
    rep = make_rep(1, "equitable_ycol")
    assert as_opmat(rep["Y"]) == OpMat([[1 / Q, 0], [QM, Q]])


def test_trivial_module():
    for flavor, names in (("chevalley", ("K", "Ki")), ("equitable_ycol", ("X", "Y", "Z"))):
        rep = make_rep(0, flavor)
        for name in names:
            assert rep[name] == Matrix.identity(1)


def test_chevalley_entry_formulas():
    n = 3
    rep = make_rep(n)
    for i in range(1, n + 1):
        assert rep["E"][i - 1, i] == qnum(n - i + 1)
        assert rep["F"][i, i - 1] == qnum(i)
    for i in range(n + 1):
        assert rep["K"][i, i] == Q ** (n - 2 * i)


def test_flavor_mismatch():
    with pytest.raises(FlavorMismatch):
        make_rep(1, "equitable_ycol")["E"]


def test_eval_examples():
    g = rep_realization(make_rep(1))
    one = pbw.SL2.one()
    assert rep_eval(one, make_rep(1)) == Matrix.identity(2)
    EF = g.E * g.F - g.F * g.E
    assert EF == Matrix.diag([1, -1])
    assert EF == (g.K - g.Ki) * (1 / QM)


@pytest.mark.parametrize("twoS", range(5))
def test_casimirs_are_scalars(twoS):
    value = (Q ** (twoS + 1) + Q ** -(twoS + 1)) / QM**2
    from uqfm.realize import symbolic

    oc = pbw.omega_c(symbolic("SL2"))
    assert rep_eval(oc, make_rep(twoS)) == Matrix.identity(twoS + 1) * value
    ge = rep_realization(make_rep(twoS, "equitable_ycol"))
    assert pbw.omega_e(ge) == Matrix.identity(twoS + 1) * (value * QM**2)


@pytest.mark.parametrize("twoS", range(5))
@pytest.mark.parametrize("flavor", ["chevalley", "equitable_ycol"])
def test_relations_hold(twoS, flavor):
    g = rep_realization(make_rep(twoS, flavor))
    rels = pbw.equitable_relations(g) if flavor == "equitable_ycol" else pbw.sl2h_relations(g)
    assert all(v.is_zero() for v in rels.values())


def test_constant_kmatrices_match_display():
    for (name, s), mat in constant_kmatrices().items():
        assert M.named_scalar_matrix(name, s) == mat, (name, s)


def test_unipotent_spin_zero():
    u = OpMat([[1, 0], [1, 1]])
    for name in ("Ke_p", "Ke_m", "K_X", "K_B"):
        assert M.named_scalar_matrix(name, 0) == u


def test_chevalley_k_matrices_from_r():
    assert M.named_scalar_matrix("Kc_p", 1) == M.r0_matrix() * M.r_matrix()
    assert M.named_scalar_matrix("Kc_m", 1) == M.r0_matrix() * M.r21_inv_matrix() * Q


def test_r_from_l_operators():
    rep = make_rep(1)
    h = kdemi_realization(rep_realization(rep))
    assert kop_to_kmatrix(M.l_plus(h), rep) * P == M.r_matrix()
    assert kop_to_kmatrix(M.l_minus(h), rep) * (1 / P) == M.r21_inv_matrix()


@pytest.mark.parametrize("name", ["Kc_p", "Kc_m", "Ke_p", "Ke_m", "K_B", "K_X"])
@pytest.mark.parametrize("twoS", [0, 1, 2])
def test_constant_three_space_equation(name, twoS):
    assert check_fm3(M.named_scalar_matrix(name, twoS), False).is_zero()


def test_three_space_equation_detects_perturbation():
    K = M.named_scalar_matrix("K_B", 1)
    rows = [list(r) for r in K.entries]
    rows[0][0] = rows[0][0] + 1
    assert not check_fm3(OpMat(rows), False).is_zero()


def test_spectral_kmatrices_match_display():
    for (name, s), mat in spectral_kmatrices().items():
        assert S.spectral_kmatrix(name, s) == mat, (name, s)


def test_equitable_spectral_entry():
    K = S.spectral_kmatrix("Ke(u)", 1)
    assert K[2, 0] == LaurentUV.u(2, Q) - 1 / Q


@pytest.mark.parametrize("name", S.SPECTRAL_OBJECTS)
@pytest.mark.parametrize("twoS", [0, 1, 2])
def test_spectral_three_space_equation(name, twoS):
    assert check_fm3(S.spectral_kmatrix(name, twoS), True).is_zero()


def test_size_mismatch():
    from uqfm.reps import SizeMismatch

    with pytest.raises(SizeMismatch):
        check_fm3(OpMat.identity(3, 1), False)


@pytest.mark.parametrize("name,twoS", [("R0", 0), ("Ke_p", 1), ("K_BX(u)", 1), ("R(u/v)", 0), ("Kc_m", 2)])
def test_export_round_trip(tmp_path, name, twoS):
    path = tmp_path / "m.json"
    doc = export_matrix(name, twoS, path)
    back = import_matrix(path)
    assert back == M.named_scalar_matrix(name, twoS)
    assert json.loads(path.read_text()) == json.loads(json.dumps(doc))


def test_export_kbx_matches_display(tmp_path):
    path = tmp_path / "kbx.json"
    export_matrix("K_BX(u)", 1, path)
    assert import_matrix(path) == spectral_kmatrices()[("K_BX(u)", 1)]


def test_export_unknown_name(tmp_path):
    with pytest.raises(M.UnknownName):
        export_matrix("nope", 1, tmp_path / "x.json")
