"""Matrices with noncommutative entries and the constant R/L/K operators.

Operator builders take a realization ``g`` (see :mod:`uqfm.realize`) and read
generators and the deformation parameter from it, so one builder serves the
symbolic algebra, representation matrices and numeric evaluation alike.
"""
from __future__ import annotations

from math import prod

from .scalar import Q, is_scalar, is_zero


class UnknownName(KeyError):
    pass


class BadLegs(ValueError):
    pass


class BadOperands(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


class OpMat:
    """Square matrix whose entries are ring elements (factor order is kept)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = [list(r) for r in entries]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def identity(cls, n: int, one=1) -> "OpMat":
        return cls([[one if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values) -> "OpMat":
        values = list(values)
        return cls([[values[i] if i == j else 0 for j in range(len(values))] for i in range(len(values))])

    def _check(self, other: "OpMat"):
        if self.n != other.n:
            raise SizeMismatch(f"{self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, OpMat):
            other = OpMat.identity(self.n, other)
        self._check(other)
        return OpMat([[_add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    __radd__ = __add__

    def __neg__(self):
        return OpMat([[0 if is_zero(a) else -a for a in r] for r in self.entries])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, OpMat):
            return OpMat([[0 if is_zero(a) else a * other for a in r] for r in self.entries])
        self._check(other)
        n = self.n
        out = []
        for i in range(n):
            ri = self.entries[i]
            row = []
            for j in range(n):
                s = 0
                for k in range(n):
                    a = ri[k]
                    if is_zero(a):
                        continue
                    b = other.entries[k][j]
                    if is_zero(b):
                        continue
                    s = _add(s, a * b)
                row.append(s)
            out.append(row)
        return OpMat(out)

    def __rmul__(self, other):
        return OpMat([[0 if is_zero(a) else other * a for a in r] for r in self.entries])

    def __truediv__(self, other):
        if isinstance(other, OpMat):
            return NotImplemented
        return self * (1 / other)

    def __pow__(self, k: int):
        out = OpMat.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return all(is_zero(a) for r in self.entries for a in r)

    def __eq__(self, other):
        if isinstance(other, OpMat):
            return self.n == other.n and (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def map(self, f) -> "OpMat":
        return OpMat([[f(a) for a in r] for r in self.entries])

    def trace(self):
        s = 0
        for i in range(self.n):
            s = _add(s, self.entries[i][i])
        return s

    def first_nonzero(self):
        for i, r in enumerate(self.entries):
            for j, a in enumerate(r):
                if not is_zero(a):
                    return (i, j), a
        return None

    def nonzero_count(self) -> int:
        return sum(1 for r in self.entries for a in r if not is_zero(a))

    def __repr__(self):
        return "OpMat[" + "; ".join(", ".join(str(a) for a in r) for r in self.entries) + "]"


def _add(a, b):
    if is_zero(a):
        return b
    if is_zero(b):
        return a
    s = a + b
    return 0 if is_zero(s) else s


def mat_mul(a: OpMat, b: OpMat) -> OpMat:
    return a * b


def tensor_place(A: OpMat, legs, dims) -> OpMat:
    """Embed ``A`` acting on ``legs`` (1-based, increasing) into the product of spaces of sizes ``dims``.

    ``dims`` may be an integer total leg count, meaning every leg is 2-dimensional.
    """
    if isinstance(dims, int):
        dims = (2,) * dims
    dims = tuple(dims)
    legs = list(legs)
    if any(b <= a for a, b in zip(legs, legs[1:])) or not legs or legs[0] < 1 or legs[-1] > len(dims):
        raise BadLegs(f"legs {legs} for {len(dims)} spaces")
    sub = [dims[l - 1] for l in legs]
    if prod(sub) != A.n:
        raise SizeMismatch(f"operator of size {A.n} on legs of dims {sub}")
    N = prod(dims)
    strides = [prod(dims[k + 1:]) for k in range(len(dims))]
    sub_strides = [prod(sub[k + 1:]) for k in range(len(sub))]
    others = [k for k in range(len(dims)) if k + 1 not in legs]
    leg_idx = [l - 1 for l in legs]

    def split(I):
        return [(I // strides[k]) % dims[k] for k in range(len(dims))]

    rows = [[0] * N for _ in range(N)]
    for I in range(N):
        mi = split(I)
        a = sum(mi[k] * s for k, s in zip(leg_idx, sub_strides))
        for b in range(A.n):
            x = A.entries[a][b]
            if is_zero(x):
                continue
            mj = list(mi)
            for k, s, d in zip(leg_idx, sub_strides, sub):
                mj[k] = (b // s) % d
            J = sum(m * strides[k] for k, m in enumerate(mj))
            rows[I][J] = x
    del others
    return OpMat(rows)


place = tensor_place


def leg1(A: OpMat) -> OpMat:
    return tensor_place(A, [1], 2)


def leg2(A: OpMat) -> OpMat:
    return tensor_place(A, [2], 2)


# scalar matrices ----------------------------------------------------------------

def _qm(q):
    return q - 1 / q


def r_matrix(q=Q) -> OpMat:
    return OpMat([[q, 0, 0, 0], [0, 1, _qm(q), 0], [0, 0, 1, 0], [0, 0, 0, q]])


def r21_matrix(q=Q) -> OpMat:
    return OpMat([[q, 0, 0, 0], [0, 1, 0, 0], [0, _qm(q), 1, 0], [0, 0, 0, q]])


def r_inv_matrix(q=Q) -> OpMat:
    return OpMat([[1 / q, 0, 0, 0], [0, 1, -_qm(q), 0], [0, 0, 1, 0], [0, 0, 0, 1 / q]])


def r21_inv_matrix(q=Q) -> OpMat:
    return OpMat([[1 / q, 0, 0, 0], [0, 1, 0, 0], [0, -_qm(q), 1, 0], [0, 0, 0, 1 / q]])


def r0_matrix(q=Q) -> OpMat:
    return OpMat.diag([1, 1 / q, 1 / q, 1])


def r0_inv_matrix(q=Q) -> OpMat:
    return OpMat.diag([1, q, q, 1])


def perm_matrix(d: int = 2) -> OpMat:
    N = d * d
    rows = [[0] * N for _ in range(N)]
    for i in range(d):
        for j in range(d):
            rows[i * d + j][j * d + i] = 1
    return OpMat(rows)


def u_matrix(q=Q) -> OpMat:
    return perm_matrix() * r_matrix(q) - OpMat.identity(4, q)


def d_matrix(q=Q) -> OpMat:
    return OpMat.diag([q, 1 / q])


def p_minus(q=Q) -> OpMat:
    from fractions import Fraction

    return (OpMat.identity(4) - perm_matrix()) * Fraction(1, 2)


# L-operators (GL2 generators) ---------------------------------------------------

def l_plus(g) -> OpMat:
    return OpMat([[g.K1, _qm(g.q) * (g.K1 * g.F)], [0, g.K2]])


def l_minus(g) -> OpMat:
    return OpMat([[g.K1i, 0], [-_qm(g.q) * (g.E * g.K1i), g.K2i]])


def l_plus_inv(g) -> OpMat:
    return OpMat([[g.K1i, -_qm(g.q) * (g.F * g.K2i)], [0, g.K2i]])


def l_minus_inv(g) -> OpMat:
    return OpMat([[g.K1, 0], [_qm(g.q) * (g.K2 * g.E), g.K2]])


def l0_plus(g) -> OpMat:
    return OpMat.diag([g.K1, g.K2])


def l0_minus_bar(g) -> OpMat:
    return OpMat.diag([g.K2i, g.K1i])


def k0_alpha(g, alpha=None) -> OpMat:
    a = g.alpha if alpha is None else alpha
    return OpMat([[1, 0], [a, 1]])


def k_plus_alpha(g) -> OpMat:
    """Explicit entries of the dressed K^{+,alpha}."""
    q, a = g.q, g.alpha
    k = g.K1 * g.K2i
    return OpMat([[k, _qm(q) * (k * g.F)], [a * g.one, g.K2 * g.K1i + a * _qm(q) * g.F]])


def k_minus_alpha(g) -> OpMat:
    q, a = g.q, g.alpha
    k = g.K2 * g.K1i
    return OpMat([[1, 0], [a * k - q * _qm(q) * (k * g.E), 1]])


def k_plus_alpha_dressed(g) -> OpMat:
    return l0_minus_bar(g) * k0_alpha(g) * l_plus(g)


def k_minus_alpha_dressed(g) -> OpMat:
    return l0_plus(g) * k0_alpha(g) * l_minus(g)


# K-operators of the Chevalley and equitable presentations ------------------------

def kc_plus(g) -> OpMat:
    return OpMat([[g.K, _qm(g.q) * (g.K * g.F)], [0, g.Ki]])


def kc_minus(g) -> OpMat:
    q = g.q
    return OpMat([[1, 0], [-q * _qm(q) * (g.Ki * g.E), 1]])


def ke_plus(g) -> OpMat:
    return OpMat([[g.X, g.X * g.Y - 1], [1, g.Y]])


def ke_minus(g) -> OpMat:
    return OpMat([[1, 0], [g.Z, 1]])


def kc_plus_inv(g) -> OpMat:
    return OpMat([[g.Ki, -_qm(g.q) * (g.F * g.K)], [0, g.K]])


def kc_minus_inv(g) -> OpMat:
    q = g.q
    return OpMat([[1, 0], [_qm(q) / q * (g.E * g.Ki), 1]])


def ke_plus_inv(g) -> OpMat:
    return OpMat([[g.Y, 1 - g.Y * g.X], [-1, g.X]])


def ke_minus_inv(g) -> OpMat:
    return OpMat([[1, 0], [-g.Z, 1]])


def k_borel(g) -> OpMat:
    return OpMat([[g.Y, g.Y * g.Z - 1], [1, g.Z]])


def k_x(g) -> OpMat:
    return OpMat([[1, 0], [g.X, 1]])


def kc_plus_alt(g) -> OpMat:
    return OpMat([[1, _qm(g.q) * g.F], [0, 1]])


def kc_minus_alt(g) -> OpMat:
    """Alternative Chevalley K-minus; lower-left entry -q(q-1/q)E (see kc_minus_alt_printed)."""
    q = g.q
    return OpMat([[g.Ki, 0], [-q * _qm(q) * g.E, g.K]])


def kc_minus_alt_printed(g) -> OpMat:
    """Variant with lower-left -q(q-1/q)KE; it fails the mixed exchange relation."""
    q = g.q
    return OpMat([[g.Ki, 0], [-q * _qm(q) * (g.K * g.E), g.K]])


def ke_plus_alt(g) -> OpMat:
    return OpMat([[1, g.Y], [0, 1]])


def ke_minus_alt(g) -> OpMat:
    return OpMat([[g.Z, 1], [g.X * g.Z - 1, g.X]])


def rotated(builder, g):
    """The builder applied with the letters rotated X -> Y -> Z -> X."""
    from .realize import rotate_realization

    return builder(rotate_realization(g))


BUILDERS = {
    "R": lambda g: r_matrix(g.q),
    "R21": lambda g: r21_matrix(g.q),
    "Rinv": lambda g: r_inv_matrix(g.q),
    "R21inv": lambda g: r21_inv_matrix(g.q),
    "R0": lambda g: r0_matrix(g.q),
    "R0inv": lambda g: r0_inv_matrix(g.q),
    "P": lambda g: perm_matrix(),
    "U": lambda g: u_matrix(g.q),
    "D": lambda g: d_matrix(g.q),
    "Lp": l_plus,
    "Lm": l_minus,
    "Lp_inv": l_plus_inv,
    "Lm_inv": l_minus_inv,
    "L0p": l0_plus,
    "L0m_bar": l0_minus_bar,
    "K0alpha": k0_alpha,
    "Kp_alpha": k_plus_alpha,
    "Km_alpha": k_minus_alpha,
    "Kc_p": kc_plus,
    "Kc_m": kc_minus,
    "Ke_p": ke_plus,
    "Ke_m": ke_minus,
    "Kc_p_inv": kc_plus_inv,
    "Kc_m_inv": kc_minus_inv,
    "Ke_p_inv": ke_plus_inv,
    "Ke_m_inv": ke_minus_inv,
    "K_B": k_borel,
    "K_X": k_x,
    "Kc_p_alt": kc_plus_alt,
    "Kc_m_alt": kc_minus_alt,
    "Kc_m_alt_printed": kc_minus_alt_printed,
    "Ke_p_alt": ke_plus_alt,
    "Ke_m_alt": ke_minus_alt,
}

HOME = {
    "Lp": "GL2", "Lm": "GL2", "Lp_inv": "GL2", "Lm_inv": "GL2", "L0p": "GL2", "L0m_bar": "GL2",
    "K0alpha": "GL2", "Kp_alpha": "GL2", "Km_alpha": "GL2",
}


def builtin(name: str, g=None) -> OpMat:
    from .realize import symbolic

    try:
        builder = BUILDERS[name]
    except KeyError:
        raise UnknownName(name) from None
    if g is None:
        g = symbolic(HOME.get(name, "SL2"))
    return builder(g)


# residuals ----------------------------------------------------------------------

def fm_residual(R: OpMat, R0: OpMat, Ka: OpMat, Kb: OpMat) -> OpMat:
    Ka1, Kb2 = leg1(Ka), leg2(Kb)
    return R * Ka1 * R0 * Kb2 - Kb2 * R0 * Ka1 * R


def frt_residual(R: OpMat, La: OpMat, Lb: OpMat) -> OpMat:
    La1, Lb2 = leg1(La), leg2(Lb)
    return R * La1 * Lb2 - Lb2 * La1 * R


def inverse_residuals(K: OpMat, Kinv: OpMat, one=1):
    ident = OpMat.identity(K.n, one)
    return K * Kinv - ident, Kinv * K - ident


def verify_inverse(K: OpMat, Kinv: OpMat) -> bool:
    if K.n != Kinv.n:
        raise SizeMismatch(f"{K.n} vs {Kinv.n}")
    a, b = inverse_residuals(K, Kinv)
    return a.is_zero() and b.is_zero()


def tr12(M: OpMat):
    return M.trace()


def qdet(kind: str, *args):
    """Quantum determinants; operands are operator matrices (or a realization for the defaults)."""
    if kind == "qdet1":
        U, L = args
        return tr12(U * leg1(L) * leg2(L))
    if kind == "qdet2":
        U, Lp, Lm = args
        return tr12(U * leg1(Lp) * leg2(Lm))
    if kind == "qdetFM":
        U, R0, Kp, Km = args
        return tr12(U * leg1(Kp) * R0 * leg2(Km))
    if kind == "lax":
        from .spectral import lax_qdet

        return lax_qdet(*args)
    if kind == "sklyanin":
        from .spectral import gamma_u

        return gamma_u(*args)
    raise BadOperands(f"unknown determinant kind {kind!r}")


def qtrace(Kp: OpMat, KmInv: OpMat, q=Q):
    if Kp.n != 2 or KmInv.n != 2:
        raise SizeMismatch("quantum trace needs 2x2 operators")
    return (d_matrix(q) * Kp * KmInv).trace()


def hecke_residuals(q=Q) -> dict:
    U = u_matrix(q)
    U12 = tensor_place(U, [1, 2], 3)
    U23 = tensor_place(U, [2, 3], 3)
    return {
        "U^2+(q+1/q)U": U * U + U * (q + 1 / q),
        "U12U23U12-U12": U12 * U23 * U12 - U12,
        "U23U12U23-U23": U23 * U12 * U23 - U23,
    }


def hecke_check(q=Q) -> dict:
    return {k: v.is_zero() for k, v in hecke_residuals(q).items()}


# intertwiner maps -------------------------------------------------------------------

def dtilde(g, name: str) -> OpMat:
    """(rho_{1/2} (x) id) of the map delta-tilde on a generator, entries in the realization ``g``."""
    q = g.q
    qm = _qm(q)
    table = {
        "K": lambda: OpMat([[q * g.K, 0], [0, g.K / q]]),
        "Ki": lambda: OpMat([[g.Ki / q, 0], [0, q * g.Ki]]),
        "E": lambda: OpMat([[q**2 * g.E, g.K], [0, g.E / q**2]]),
        "F": lambda: OpMat([[g.F / q, 0], [g.Ki * g.Ki, q * g.F]]),
        "X": lambda: OpMat([[q * g.X, 0], [qm * g.one, g.X / q]]),
        "Xi": lambda: OpMat([[g.Xi / q, 0], [-qm * (g.Xi * g.Xi), q * g.Xi]]),
        "Y": lambda: OpMat([[g.Y / q, 0], [0, q * g.Y]]),
        "Z": lambda: OpMat([[q * g.Z, (1 / q - q) * g.one], [0, g.Z / q]]),
    }
    try:
        return table[name]()
    except KeyError:
        raise UnknownName(name) from None


def dprime_borel(g, name: str) -> OpMat:
    q = g.q
    if name == "Y":
        return OpMat([[q * g.Y, 0], [0, g.Y / q]])
    if name == "Z":
        return OpMat([[g.Z / q, 0], [_qm(q) * g.one, q * g.Z]])
    raise UnknownName(name)


def dtilde_borel(g, name: str) -> OpMat:
    q = g.q
    if name == "Y":
        return OpMat([[q * g.Y, 0], [_qm(q) * g.one, g.Y / q]])
    if name == "Z":
        return OpMat([[g.Z / q, 0], [0, q * g.Z]])
    raise UnknownName(name)


def delta_prime_rho(g, name: str, rho=None) -> OpMat:
    """(rho_{1/2} (x) id) Delta'(x) as a 2x2 matrix over the realization ``g``."""
    from .maps import coproduct_images
    from .realize import OpMatLeg, rep_realization
    from .reps import make_rep

    if rho is None:
        rho = rep_realization(make_rep(1, "chevalley"))
    first = OpMatLeg.scalar_leg(rho)
    second = OpMatLeg.algebra_leg(g)
    # Delta'(x) = sum b (x) a for Delta(x) = sum a (x) b: rho acts on b
    return coproduct_images(second, first)[name]


def intertwine_residual(family: str, g) -> dict:
    """Residuals of dtilde(x) K - K Delta'(x) (and of the relations satisfied by the dtilde images)."""
    from .pbw import equitable_relations, sl2_relations
    from .realize import matrix_realization

    out = {}
    if family == "chevalley":
        ks = {"Kc_p": kc_plus(g), "Kc_m": kc_minus(g)}
        letters = ("K", "Ki", "E", "F")
    elif family == "equitable":
        ks = {"Ke_p": ke_plus(g), "Ke_m": ke_minus(g)}
        letters = ("X", "Xi", "Y", "Z")
    elif family == "borel":
        K = k_borel(g)
        for x in ("Y", "Z"):
            out[f"K_B.{x}"] = dtilde_borel(g, x) * K - K * dprime_borel(g, x)
        q = g.q
        for label, f in (("dtilde_B", dtilde_borel), ("dprime_B", dprime_borel)):
            Y, Z = f(g, "Y"), f(g, "Z")
            out[f"{label}.rel"] = (Y * Z * q - Z * Y / q) / (q - 1 / q) - OpMat.identity(2, g.one)
        return out
    else:
        raise UnknownName(family)
    images = {x: dtilde(g, x) for x in letters}
    for kname, K in ks.items():
        for x in letters:
            out[f"{kname}.{x}"] = images[x] * K - K * delta_prime_rho(g, x, rho=_rho_for(g))
    r = matrix_realization(images, g)
    rels = sl2_relations(r) if family == "chevalley" else equitable_relations(r)
    for k, v in rels.items():
        out[f"dtilde.{k}"] = v
    return out


def _rho_for(g):
    from .realize import rep_realization
    from .reps import make_rep

    rho = make_rep(1, "chevalley")
    if getattr(g, "point", None):
        rho = rho.evaluated(g.point)
    return rep_realization(rho)


# named scalar matrices for export -------------------------------------------------------

def named_scalar_matrix(name: str, twoS: int) -> OpMat:
    """Scalar (or Laurent) matrix of a named object; K-operators in the spin-twoS representation."""
    from . import spectral
    from .realize import rep_realization
    from .reps import blocks_to_opmat, kop_to_kmatrix, make_rep

    consts = {
        "R": r_matrix, "R0": r0_matrix, "R21": r21_matrix, "R21inv": r21_inv_matrix,
        "Rinv": r_inv_matrix, "U": u_matrix, "D": d_matrix,
    }
    if name in consts:
        return consts[name]()
    if name == "P":
        return perm_matrix()
    if name in ("R(u/v)", "Ruv"):
        return spectral.r_matrix_uv()
    if name in ("R(u)", "Ru"):
        return spectral.r_matrix_u()
    if name in spectral.SPECTRAL_OBJECTS:
        return spectral.spectral_kmatrix(name, twoS)
    ops = {
        "Kc_p": (kc_plus, "chevalley"), "Kc_m": (kc_minus, "chevalley"),
        "Ke_p": (ke_plus, "equitable_ycol"), "Ke_m": (ke_minus, "equitable_ycol"),
        "K_B": (k_borel, "equitable_ycol"), "K_X": (k_x, "equitable_ycol"),
    }
    if name not in ops:
        raise UnknownName(name)
    builder, flavor = ops[name]
    rep = make_rep(twoS, flavor)
    return kop_to_kmatrix(builder(rep_realization(rep)), rep)


EXPORTABLE = ("R", "R0", "R21", "R21inv", "Rinv", "P", "U", "D", "R(u/v)", "R(u)",
              "Kc_p", "Kc_m", "Ke_p", "Ke_m", "K_B", "K_X", "Kc(u)", "Ke(u)", "K_BX(u)")
