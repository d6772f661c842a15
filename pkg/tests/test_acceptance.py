"""One test per acceptance criterion; each prints a single ``criterion N: PASS|FAIL`` line."""
import io
import json
import random
from fractions import Fraction

import pytest

from uqfm import matalg as M, pbw, spectral as S
from uqfm.checks import REGISTRY
from uqfm.cli import main
from uqfm.realize import numeric_rep_realization, rep_realization, symbolic
from uqfm.reps import make_rep
from uqfm.scalar import Q, ratq_eval

QM = Q - 1 / Q


def _verify(*argv):
    out = io.StringIO()
    code = main(["verify", "--format", "json", "--no-timing", *argv], out)
    return code, {c["check_id"]: c for c in json.loads(out.getvalue())["checks"]}


@pytest.fixture(scope="module")
def report():
    code, checks = _verify("--suite", "all")
    _, wide = _verify("--suite", "reps", "--spin", "0", "1", "2", "3", "4")
    return code, checks, wide


@pytest.fixture
def criterion(capsys):
    def run(number, title, body):
        try:
            body()
        except Exception as exc:
            with capsys.disabled():
                print(f"\ncriterion {number}: FAIL  {title}  ({type(exc).__name__}: {exc})")
            raise
        with capsys.disabled():
            print(f"\ncriterion {number}: PASS  {title}")

    return run


def _passed(checks, prefixes):
    chosen = [c for cid, c in checks.items() if cid.startswith(tuple(prefixes))]
    assert chosen, prefixes
    bad = [(c["check_id"], c["status"], c["residual_summary"]) for c in chosen if c["status"] != "PASS"]
    assert not bad, bad
    return len(chosen)


def test_criterion_1_presentations(report, criterion):
    _, checks, _ = report

    def body():
        _passed(checks, ["pbw.gl2.relations", "pbw.sl2.relations", "pbw.sl2h.relations", "pbw.alg_a.relations",
                         "pbw.assoc.", "pbw.overlaps"])
        for p in ("gl2", "sl2", "sl2h", "alg_a"):
            assert checks[f"pbw.assoc.{p}"]["residual_summary"] == "100 random triples"
        for pid, rel in (("GL2", pbw.gl2_relations), ("SL2", pbw.sl2_relations), ("SL2H", pbw.sl2h_relations),
                         ("ALG_A", pbw.alg_a_relations_residuals)):
            assert all(v.is_zero() for v in rel(symbolic(pid)).values()), pid

    criterion(1, "relations normalize to zero; associativity on 100 triples per presentation", body)


def test_criterion_2_frt(report, criterion):
    _, checks, _ = report

    def body():
        _passed(checks, ["frt.frt1", "frt.frt2", "frt.frt3", "frt.frt4", "frt.invrtt", "hecke.square", "hecke.tl"])
        U = M.u_matrix()
        assert U * U == U * -(Q + 1 / Q)

    criterion(2, "FRT exchange relations, inverse relations and Hecke checks", body)


def test_criterion_3_determinants_and_centers(report, criterion):
    _, checks, _ = report

    def body():
        _passed(checks, ["frt.qdet1", "frt.qdet2", "fm.sl2.chevalley.qdetfm", "fm.sl2.qtrace", "center."])
        G, g = symbolic("GL2"), symbolic("SL2")
        assert M.qdet("qdet1", M.u_matrix(), M.l_plus(G)) == -(Q + 1 / Q) * (G.K1 * G.K2)
        assert M.qdet("qdet2", M.u_matrix(), M.l_plus(G), M.l_minus(G)) == -QM**2 * pbw.omega2c(G)
        fm = M.qdet("qdetFM", M.u_matrix(), M.r0_matrix(), M.kc_plus(g), M.kc_minus(g))
        assert fm == -QM**2 / Q * pbw.omega_c(g)

    criterion(3, "quantum determinants, quantum trace and centrality", body)


def test_criterion_4_freidel_maillet(report, criterion):
    _, checks, _ = report

    def body():
        n = _passed(checks, ["fm.gl2.", "fm.sl2."])
        mutations = [cid for cid in checks if cid.startswith("fm.") and cid.endswith("mutation")]
        assert len(mutations) >= 5 and n >= 40
        g = symbolic("SL2")
        K = M.kc_plus(g)
        bad = M.OpMat([[Q * g.K, K[0, 1]], [K[1, 0], K[1, 1]]])
        assert not M.fm_residual(M.r_matrix(), M.r0_matrix(), bad, M.kc_minus(g)).is_zero()

    criterion(4, "Freidel-Maillet families exact; every mutation leaves a nonzero residual", body)


def test_criterion_5_hopf(report, criterion):
    _, checks, _ = report

    def body():
        _passed(checks, ["hopf.", "maps.isomorphisms"])
        from uqfm.realize import counit_realization

        eps = counit_realization()
        assert (M.kc_plus(eps) - M.k0_alpha(symbolic("SL2"), 0)).is_zero()
        assert (M.ke_plus(eps) - M.k0_alpha(symbolic("SL2"), 1)).is_zero()

    criterion(5, "Hopf axioms, coproducts and counits of K-operators", body)


def test_criterion_6_intertwiners(report, criterion):
    _, checks, _ = report

    def body():
        _passed(checks, ["intertwine."])
        for family in ("chevalley", "equitable", "borel"):
            assert all(v.is_zero() for v in M.intertwine_residual(family, symbolic("SL2")).values())

    criterion(6, "intertwiner images and exchange with the opposite coproduct", body)


def test_criterion_7_representations(report, criterion):
    _, checks, wide = report

    def body():
        _passed(checks, ["reps.", "constk.", "frt.rfroml"])
        _passed(wide, ["reps.relations"])
        assert M.named_scalar_matrix("Kc_p", 1) == M.r0_matrix() * M.r_matrix()
        assert M.named_scalar_matrix("Kc_m", 1) == M.r0_matrix() * M.r21_inv_matrix() * Q

    criterion(7, "representations for 2s = 0..4 and constant K-matrices", body)


def test_criterion_8_spectral(report, criterion):
    _, checks, _ = report

    def body():
        _passed(checks, ["spectral.", "pbw.alg_a.table1"])
        A = symbolic("ALG_A")
        assert (S.gamma_u(S.kg(A)) * (Q**2 * QM**2) - S.gamma_expansion(A)).is_zero()

    criterion(8, "spectral suite exact (Gamma expansion under the q^2(q-q^-1)^2 normalization)", body)


def test_criterion_9_oracle_consistency(report, criterion):
    code, checks, _ = report

    def body():
        assert code == 0
        assert all(c["status"] == "PASS" for c in checks.values())
        point = {"p": Fraction(5, 7)}
        rng = random.Random(9)
        for s in (0, 1, 2):
            exact, numeric = rep_realization(make_rep(s)), numeric_rep_realization(s, point=point)
            for _ in range(5):
                x, y = (pbw.random_element(pbw.SL2, rng, 2, 2) for _ in range(2))
                sym = exact.element(x * y)
                num = numeric.element(x) * numeric.element(y)
                evaluated = [[ratq_eval(e, point) for e in row] for row in sym.rows]
                assert evaluated == [list(row) for row in num.rows]
        assert len(REGISTRY) == len(checks)

    criterion(9, "symbolic, representation and rational-point pipelines agree", body)


def test_criterion_10_lax_determinant(report, criterion):
    _, checks, _ = report

    def body():
        _passed(checks, ["spectral.lax_qdet"])
        assert (S.lax_qdet() - S.lax_qdet_expected()).is_zero()
        assert not (S.lax_qdet() - S.lax_qdet_printed()).is_zero()

    criterion(10, "lax quantum determinant matches qu^2 + q^-1 u^-2 - (q-q^-1)^2 Omega_c", body)
