"""Spectral-parameter R-matrix, Lax operators and K-operators over the algebra A and U_q(sl2).

Operator entries are ``LaurentUV`` polynomials in u (and v) whose
coefficients live in the ring of a realization, so one builder serves the
symbolic algebra, representations and rational points alike.
"""
from __future__ import annotations

from fractions import Fraction

from .matalg import OpMat, perm_matrix, r0_matrix, r21_inv_matrix, r_matrix, tensor_place
from .scalar import ONE, P, Q, LaurentUV, as_ratq, is_scalar, is_zero, laurent_shift


class FractionalExponent(ValueError):
    pass


def _u(power=1, coeff=1):
    return LaurentUV.u(power, coeff)


def _uv(a, b, coeff=1):
    return LaurentUV({(a, b): coeff})


# R-matrices -----------------------------------------------------------------------------

def r_matrix_u(q=Q) -> OpMat:
    """R(u) with Laurent entries in u."""
    qm = q - 1 / q
    d = _u(1, q) - _u(-1, 1 / q)
    m = _u(1) - _u(-1)
    c = LaurentUV.const(qm)
    return OpMat([[d, 0, 0, 0], [0, m, c, 0], [0, c, m, 0], [0, 0, 0, d]])


def r_matrix_uv(q=Q) -> OpMat:
    """R(u/v) written directly in the two variables."""
    qm = q - 1 / q
    d = _uv(1, -1, q) - _uv(-1, 1, 1 / q)
    m = _uv(1, -1) - _uv(-1, 1)
    c = LaurentUV.const(qm)
    return OpMat([[d, 0, 0, 0], [0, m, c, 0], [0, c, m, 0], [0, 0, 0, d]])


def to_v(M: OpMat) -> OpMat:
    """Rename u to v in every entry (entries must not contain v)."""
    def swap(e):
        if isinstance(e, LaurentUV):
            if any(b for _, b in e.terms):
                raise ValueError("entry already depends on v")
            return LaurentUV({(0, a): c for (a, _), c in e.terms.items()})
        return e

    return M.map(swap)


def shift_u(M: OpMat, factor) -> OpMat:
    """u -> factor * u entrywise."""
    return M.map(lambda e: laurent_shift(e, "u", factor) if isinstance(e, LaurentUV) else e)


def evaluate_u(M: OpMat, u) -> OpMat:
    """Substitute a nonzero scalar (or monomial) for u in Laurent entries that do not involve v."""
    u = as_ratq(u)

    def ev(e):
        if not isinstance(e, LaurentUV):
            return e
        total = 0
        for (a, b), c in e.terms.items():
            if b:
                raise ValueError("entry depends on v")
            term = c * (u ** a)
            total = term if (isinstance(total, int) and total == 0) else total + term
        return total

    return M.map(ev)


def ybe_residual(q=Q) -> OpMat:
    dims = (2, 2, 2)
    R12 = tensor_place(r_matrix_uv(q), [1, 2], dims)
    R13 = tensor_place(r_matrix_u(q), [1, 3], dims)
    R23 = tensor_place(to_v(r_matrix_u(q)), [2, 3], dims)
    return R12 * R13 * R23 - R23 * R13 * R12


def r_symmetry_residuals(q=Q) -> dict:
    """R(1) = (q - 1/q) P and P R(u) P = R(u)."""
    R = r_matrix_u(q)
    Pm = perm_matrix()
    at_one = evaluate_u(R, 1)
    return {
        "R(1)-(q-1/q)P": at_one - Pm * (q - 1 / q),
        "PRP-R": Pm * R * Pm - R,
    }


# Lax operators ------------------------------------------------------------------------

def lax_operator(g) -> OpMat:
    """L(u) over a realization providing E, F, Kh, Khi."""
    qm = g.q - 1 / g.q
    return OpMat([
        [_u(1) * g.Kh - _u(-1) * g.Khi, LaurentUV.const(qm * (g.F * g.Kh))],
        [LaurentUV.const(qm * (g.Khi * g.E)), _u(1) * g.Khi - _u(-1) * g.Kh],
    ])


def lax_zero(g) -> OpMat:
    """L_0(u) = diag(u K^(1/2), u K^(-1/2))."""
    return OpMat([[_u(1) * g.Kh, 0], [0, _u(1) * g.Khi]])


def exchange_residual(A: OpMat, B: OpMat, R: OpMat) -> OpMat:
    """R A_1(u) B_2(v) - B_2(v) A_1(u) R, for A, B written in u."""
    A1 = tensor_place(A, [1], 2)
    B2 = tensor_place(to_v(B), [2], 2)
    return R * A1 * B2 - B2 * A1 * R


def yba_residuals(g, q=None) -> dict:
    q = g.q if q is None else q
    L, L0 = lax_operator(g), lax_zero(g)
    Ruv = r_matrix_uv(q)
    one = g.one
    return {
        "YBA00": g.Kh * g.Khi - one,
        "YBA00'": g.Khi * g.Kh - one,
        "YBA1": exchange_residual(L, L, Ruv),
        "YBA2": exchange_residual(L0, L0, Ruv),
        "YBA3": exchange_residual(L0, L, r0_matrix(q)),
    }


def _p_minus(q):
    return (OpMat.identity(4) - perm_matrix()) * Fraction(1, 2)


def lax_qdet(g=None):
    """tr_12(P^- L_1(u) L_2(uq)) as a Laurent polynomial in u."""
    from .realize import symbolic

    g = g or symbolic("SL2H")
    q = g.q
    L = lax_operator(g)
    L1 = tensor_place(L, [1], 2)
    L2 = tensor_place(shift_u(L, q), [2], 2)
    return (_p_minus(q) * L1 * L2).trace()


def lax_qdet_expected(g=None):
    from .pbw import omega_c
    from .realize import symbolic

    g = g or symbolic("SL2H")
    q = g.q
    return _u(2, q) * g.one + _u(-2, 1 / q) * g.one - (q - 1 / q) ** 2 * omega_c(g)


def lax_qdet_printed(g=None):
    """The variant qu^2 + q^-1 u^2 - (q-1/q)^2 Omega_c."""
    from .pbw import omega_c
    from .realize import symbolic

    g = g or symbolic("SL2H")
    q = g.q
    return _u(2, q + 1 / q) * g.one - (q - 1 / q) ** 2 * omega_c(g)


# spectral Freidel-Maillet equation -----------------------------------------------------

def re_residual(K: OpMat, q=Q) -> OpMat:
    """R(u/v) K_1(u) R0 K_2(v) - K_2(v) R0 K_1(u) R(u/v) for K written in u."""
    R = r_matrix_uv(q)
    R0 = r0_matrix(q)
    K1 = tensor_place(K, [1], 2)
    K2 = tensor_place(to_v(K), [2], 2)
    return R * K1 * R0 * K2 - K2 * R0 * K1 * R


def kg(g) -> OpMat:
    """The K-operator over A (generic structure constants taken from ``g``)."""
    q = g.q
    qm = q - 1 / q
    one = g.one
    return OpMat([
        [_u(1, q) * g.W0 - _u(-1) * (g.ep * one), LaurentUV.const(g.Z1) + _u(2) * (g.kp * q / qm * one)],
        [LaurentUV.const(g.Zt1) + _u(2) * (g.km * q / qm * one), _u(1, q) * g.W1 - _u(-1) * (g.em * one)],
    ])


def kc_u(g) -> OpMat:
    q = g.q
    qm = q - 1 / q
    one = g.one
    return OpMat([
        [_u(1, q) * g.K - _u(-1) * one, LaurentUV.const(qm * (g.F * g.K))],
        [LaurentUV.const(qm * (g.Ki * g.E)), _u(1, q) * g.Ki - _u(-1) * one],
    ])


def ke_u(g) -> OpMat:
    q = g.q
    one = g.one
    return OpMat([
        [_u(1, q) * g.X - _u(-1) * one, LaurentUV.const((g.Y * g.X - one) * (1 / q))],
        [_u(2, q) * one - g.Z, _u(1, q) * g.Y - _u(-1) * one],
    ])


def kbx_u(g) -> OpMat:
    from .realize import rotate_realization

    return ke_u(rotate_realization(g))


def kbx_u_explicit(g) -> OpMat:
    q = g.q
    one = g.one
    return OpMat([
        [_u(1, q) * g.Y - _u(-1) * one, LaurentUV.const((g.Z * g.Y - one) * (1 / q))],
        [_u(2, q) * one - g.X, _u(1, q) * g.Z - _u(-1) * one],
    ])


def specialize_kg(target: str, base=None) -> OpMat:
    from .realize import specialization_realization, symbolic

    base = base or symbolic("SL2")
    return kg(specialization_realization(target, base))


# Lemma 4.1: relations extracted from the spectral equation ------------------------------

def _coefficients(M: OpMat):
    """All nonzero (entry, u-power, v-power) -> coefficient."""
    out = {}
    for i, row in enumerate(M.entries):
        for j, e in enumerate(row):
            if isinstance(e, LaurentUV):
                for k, c in e.terms.items():
                    if not is_zero(c):
                        out[(i, j, k[0], k[1])] = c
            elif not is_zero(e):
                out[(i, j, 0, 0)] = e
    return out


def _row_reduce(vectors):
    """Rank of a list of sparse vectors (dicts) over the coefficient field."""
    pivots = {}
    rank = 0
    for vec in vectors:
        v = {k: c for k, c in vec.items() if not is_zero(c)}
        while v:
            key = min(v)
            if key in pivots:
                pv = pivots[key]
                f = v[key] / pv[key]
                for k, c in pv.items():
                    nv = v.get(k, 0) - f * c
                    if is_zero(nv):
                        v.pop(k, None)
                    else:
                        v[k] = nv
            else:
                pivots[key] = v
                rank += 1
                break
    return rank


def _as_vector(x):
    """Free-algebra element as a coordinate dict (monomial -> coefficient)."""
    if is_scalar(x):
        return {(): as_ratq(x)} if not is_zero(x) else {}
    return dict(x.terms)


def lemma41_check(pres=None, extract: bool = True) -> dict:
    """Residual of the spectral equation for K_g over A, plus the extracted relation span.

    Returns ``{"residual": OpMat, "nonzero": int, "rank_extracted": int,
    "rank_relations": int, "rank_union": int}``.
    """
    from .pbw import ALG_A, FREE_A, alg_a_relations_residuals
    from .realize import symbolic, symbolic_for

    g = symbolic("ALG_A") if pres is None else symbolic_for(pres)
    res = re_residual(kg(g), g.q)
    out = {"residual": res, "nonzero": len(_coefficients(res))}
    if extract:
        free = symbolic("FREE_A")
        coeffs = _coefficients(re_residual(kg(free), free.q))
        extracted = [_as_vector(c) for c in coeffs.values()]
        rels = [_as_vector(v) for v in alg_a_relations_residuals(free).values()]
        out["rank_extracted"] = _row_reduce(extracted)
        out["rank_relations"] = _row_reduce(rels)
        out["rank_union"] = _row_reduce(extracted + rels)
    return out


def mutated_alg_a():
    """A with the sign of k+ eps+ flipped in the q-commutator [W0, Z1]_q."""
    from .pbw import make_alg_a

    W0, Z1 = 0, 2
    from .scalar import EP, KP

    override = {(Z1, W0): [(Q**2, ((W0, 1), (Z1, 1))), (-Q * KP * EP, ())]}
    return make_alg_a(override, label="ALG_A[mutated wg2]")


# Sklyanin determinant -------------------------------------------------------------------

def gamma_u(K: OpMat, q=Q):
    """tr_12(P^- K_1(u) R0 K_2(uq))."""
    if K.n != 2:
        from .matalg import BadOperands

        raise BadOperands("Gamma(u) needs a 2x2 spectral K-operator")
    K1 = tensor_place(K, [1], 2)
    K2 = tensor_place(shift_u(K, q), [2], 2)
    return (_p_minus(q) * K1 * r0_matrix(q) * K2).trace()


def gamma_expansion(g):
    """u^2 q^4 G0 - (q-1/q)^2 q^2 G1 - k+ k- u^4 q^6 + (q-1/q)^2 eps+ eps- u^-2."""
    from .pbw import gamma0, gamma1

    q = g.q
    qm = q - 1 / q
    one = g.one
    return (_u(2, q**4) * gamma0(g) - LaurentUV.const(qm**2 * q**2 * gamma1(g))
            - _u(4, g.kp * g.km * q**6) * one + _u(-2, qm**2 * g.ep * g.em) * one)


def gamma_centrality(g, letters=("W0", "W1", "Z1", "Zt1")) -> dict:
    """Commutators of the Gamma(u) coefficients with the generators."""
    G = gamma_u(kg(g), g.q)
    out = {}
    for (a, b), c in sorted(G.terms.items()):
        for x in letters:
            gx = getattr(g, x)
            out[f"u^{a}.{x}"] = c * gx - gx * c
    return out


def gamma_k_commutators(g) -> dict:
    """[Gamma(u), K(v)_ij] for the K-operator over ``g``; each is Laurent in (u, v)."""
    G = gamma_u(kg(g), g.q)
    Kv = to_v(kg(g))
    out = {}
    for i in range(2):
        for j in range(2):
            e = Kv.entries[i][j]
            out[f"K{i + 1}{j + 1}"] = G * e - e * G
    return out


# dressing -------------------------------------------------------------------------------

def k0_ec(g) -> OpMat:
    q = g.q
    one = g.one
    return OpMat([[_u(-1) * one, 0], [LaurentUV.const(one * (1 / q)), _u(-1) * one]])


def dressed_lax_k0(g) -> OpMat:
    """L_0(u) K_0(u) L(u) in a realization with K^(1/2)."""
    return lax_zero(g) * k0_ec(g) * lax_operator(g)


def dressing_residuals(g=None) -> dict:
    """(i) K_0 solves the spectral equation; (ii) the Lax exchange relations; (iii) the dressed
    K-operator against the phi-image of K_e(u).

    (iii) is recorded both literally and with the normalization under which the two agree:
    u -> u q^(1/2) together with the constant gauge diag(1, q^(1/2)) . . diag(q^(1/2), 1).
    """
    from .realize import symbolic

    g = g or symbolic("SL2H")
    q, p = g.q, g.p
    out = {"K0.RE": re_residual(k0_ec(g), q)}
    out.update({f"lax.{k}": v for k, v in yba_residuals(g).items()})
    dressed = dressed_lax_k0(g)
    target = ke_u(g)
    out["isoK.literal"] = dressed - target
    shifted = shift_u(dressed, p)
    left = OpMat.diag([ONE, p])
    right = OpMat.diag([p, ONE])
    out["isoK.normalized"] = left * shifted * right - target
    out["dressed.RE"] = re_residual(dressed, q)
    return out


# decomposition ------------------------------------------------------------------------

_HALF = (Fraction(1, 2), Fraction(-1, 2))


def _integral(x: Fraction) -> int:
    if x.denominator != 1:
        raise FractionalExponent(f"exponent {x} is not an integer")
    return int(x)


def m_conjugate(K: OpMat, power: int = 1, q_gauge=None) -> OpMat:
    """M(u)^power K M(u)^-power by entry scaling; ``q_gauge`` = c conjugates by diag(c^(1/2), c^(-1/2)).

    ``q_gauge`` is given as the pair (c_1, c_2) of the diagonal gauge.
    """
    rows = []
    for i in range(2):
        row = []
        for j in range(2):
            e = K.entries[i][j]
            k = _HALF[i] - _HALF[j]
            a = _integral(k * power) if not is_zero(e) else 0
            if is_zero(e):
                row.append(0)
                continue
            f = _u(a)
            if q_gauge is not None:
                f = f * (q_gauge[i] / q_gauge[j])
            row.append(f * e if isinstance(e, LaurentUV) else f * LaurentUV.const(e))
        rows.append(row)
    return OpMat(rows)


def r_ns(q=Q) -> OpMat:
    """R^ns(u/v) = (u/v) R - (v/u) R21^-1."""
    return r_matrix(q) * _uv(1, -1) - r21_inv_matrix(q) * _uv(-1, 1)


def simil(R: OpMat, sign: int = 1) -> OpMat:
    """Conjugate a 4x4 Laurent matrix by (M(u)_1 M(v)_2)^sign via entry scaling."""
    rows = []
    for r in range(4):
        a, b = divmod(r, 2)
        row = []
        for c in range(4):
            e = R.entries[r][c]
            if is_zero(e):
                row.append(0)
                continue
            cc, d = divmod(c, 2)
            eu = _integral(sign * (_HALF[a] - _HALF[cc]))
            ev = _integral(sign * (_HALF[b] - _HALF[d]))
            row.append(_uv(eu, ev) * e)
        rows.append(row)
    return OpMat(rows)


def re_ns_residual(Kns: OpMat, q=Q) -> OpMat:
    R = r_ns(q)
    R0 = r0_matrix(q)
    K1 = tensor_place(Kns, [1], 2)
    K2 = tensor_place(to_v(Kns), [2], 2)
    return R * K1 * R0 * K2 - K2 * R0 * K1 * R


def decomposition_residuals(which: str, g=None) -> dict:
    from . import matalg as M
    from .realize import symbolic

    g = g or symbolic("SL2")
    q, p = g.q, g.p
    if which == "chevalley":
        K, Kp, Km = kc_u(g), M.kc_plus(g), M.kc_minus(g)
    elif which == "equitable":
        K, Kp, Km = ke_u(g), M.ke_plus(g), M.ke_minus(g)
    else:
        raise M.UnknownName(which)
    decomposed = Kp * _u(1, q) - Km * _u(-1)
    out = {}
    out["Kns.literal"] = m_conjugate(K) - decomposed
    # constant gauge diag(q^(-1/2), q^(1/2)) (equivalently M(u/q) in place of M(u))
    out["Kns.gauged"] = m_conjugate(K, q_gauge=(1 / p, p)) - decomposed
    out["simil.literal"] = simil(r_ns(q), 1) - r_matrix_uv(q)
    out["simil.inverse"] = simil(r_ns(q), -1) - r_matrix_uv(q)
    out["REns"] = re_ns_residual(decomposed, q)
    R, R0, R21i = M.r_matrix(q), M.r0_matrix(q), M.r21_inv_matrix(q)
    Kp1, Km1, Kp2, Km2 = M.leg1(Kp), M.leg1(Km), M.leg2(Kp), M.leg2(Km)
    out["remaining"] = (R * Km1 * R0 * Kp2 - Kp2 * R0 * Km1 * R) - (R21i * Kp1 * R0 * Km2 - Km2 * R0 * Kp1 * R21i)
    out["R-R21inv"] = R - R21i - M.perm_matrix() * (q - 1 / q)
    return out


# K-matrices with spectral parameter -----------------------------------------------------

SPECTRAL_OBJECTS = ("Kc(u)", "Ke(u)", "K_BX(u)")


def spectral_kmatrix(name: str, twoS: int, point=None) -> OpMat:
    """Block-layout K-matrix of a spectral K-operator in the spin-s representation.

    Chevalley objects use the Chevalley basis, equitable ones the [y]_col basis.
    """
    from .realize import rep_realization
    from .reps import blocks_to_opmat, make_rep

    flavor = "chevalley" if name == "Kc(u)" else "equitable_ycol"
    rep = make_rep(twoS, flavor)
    if point is not None:
        rep = rep.evaluated(point)
    g = rep_realization(rep)
    builders = {"Kc(u)": kc_u, "Ke(u)": ke_u, "K_BX(u)": kbx_u}
    K = builders[name](g)
    blocks = [[_laurent_block(K.entries[i][j], rep.dim, g.one) for j in range(2)] for i in range(2)]
    return blocks_to_opmat(blocks, rep.dim)


def _laurent_block(e, d, one):
    if isinstance(e, LaurentUV):
        return e
    if is_zero(e):
        return LaurentUV.const(one * 0)
    return LaurentUV.const(e)


def fm_scal_u_residual(name: str, twoS: int, q=Q, point=None) -> OpMat:
    from .reps import check_fm3

    return check_fm3(spectral_kmatrix(name, twoS, point), spectral=True, q=q)
