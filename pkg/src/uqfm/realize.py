"""Realizations: concrete rings in which the generators are given values.

A realization exposes the deformation parameter ``q``, the unit ``one``,
structure constants (``alpha``, ``kp``, ``km``, ``ep``, ``em``) and generator
values by attribute (``g.E``, ``g.Ki``, ``g.Kh``, ``g.K1``, ``g.X``, ``g.W0``, ...).
Identities are written once as functions of a realization and evaluated in
the symbolic algebra, in representations and at rational points.
"""
from __future__ import annotations

from fractions import Fraction

from .pbw import FREE_A, GL2, SL2, SL2H, AlgElem, PresId, presentation
from .reps import FlavorMismatch, Matrix, Rep, kron
from .scalar import ALPHA, EM, EP, KM, KP, P, Q, RatQ, as_ratq, is_scalar, ratq_eval

SCALAR_NAMES = ("alpha", "kp", "km", "ep", "em")
SYMBOLIC_SCALARS = {"alpha": ALPHA, "kp": KP, "km": KM, "ep": EP, "em": EM}

# generic rational point for numeric cross-checks; p = q^(1/2)
NUMERIC_POINT = {
    "p": Fraction(5, 7), "alpha": Fraction(2, 3), "kp": Fraction(3, 5),
    "km": Fraction(-2, 7), "ep": Fraction(5, 4), "em": Fraction(-3, 8),
}


class Realization:
    def __init__(self, name: str, gens=None, q=Q, one=1, scalars=None, coeff=None, lazy=None,
                 point=None, p=None):
        self.name = name
        self._gens = dict(gens or {})
        self._lazy = lazy
        self.q = q
        self.p = p
        self.one = one
        self.scalars = dict(SYMBOLIC_SCALARS if scalars is None else scalars)
        self._coeff = coeff
        self.point = point

    def __getattr__(self, attr):
        if attr.startswith("_"):
            raise AttributeError(attr)
        gens = self.__dict__["_gens"]
        if attr in gens:
            return gens[attr]
        scalars = self.__dict__["scalars"]
        if attr in scalars:
            return scalars[attr]
        lazy = self.__dict__["_lazy"]
        if lazy is not None:
            value = lazy(attr)
            if value is not None:
                gens[attr] = value
                return value
        raise FlavorMismatch(f"{attr} has no value in realization {self.name}")

    def has(self, attr: str) -> bool:
        try:
            getattr(self, attr)
            return True
        except FlavorMismatch:
            return False

    def coeff(self, c):
        return c if self._coeff is None else self._coeff(c)

    def power(self, name: str, exp: int, doubled: bool = False):
        if doubled:
            if exp % 2 == 0:
                base, k = (name, exp // 2) if exp > 0 else (name + "i", -exp // 2)
            else:
                base, k = (name + "h", exp) if exp > 0 else (name + "hi", -exp)
        else:
            base, k = (name, exp) if exp > 0 else (name + "i", -exp)
        g = getattr(self, base)
        out = g
        for _ in range(k - 1):
            out = out * g
        return out

    def element(self, x):
        """Image of an algebra element (or scalar) in this realization."""
        if is_scalar(x):
            return self.coeff(as_ratq(x)) * self.one
        if not isinstance(x, AlgElem):
            raise TypeError(f"cannot realize {type(x).__name__}")
        pres = x.pres
        total = 0
        for mono, c in x.sorted_terms():
            cc = self.coeff(c)
            if not mono:
                term = cc * self.one
            else:
                prod = None
                for i, e in mono:
                    f = self.power(pres.letters[i], e, i in pres.doubled)
                    prod = f if prod is None else prod * f
                term = cc * prod
            total = term if (isinstance(total, int) and total == 0) else total + term
        return total if not (isinstance(total, int) and total == 0) else 0 * self.one

    def __repr__(self):
        return f"<Realization {self.name}>"


# symbolic -----------------------------------------------------------------------------

_SYMBOLIC = {}


def symbolic(pid) -> Realization:
    """Generators of a presentation as normal-form elements (cached per presentation)."""
    pres = presentation(pid)
    g = _SYMBOLIC.get(id(pres))
    if g is None:
        g = _SYMBOLIC[id(pres)] = symbolic_for(pres)
    return g


def symbolic_for(pres) -> Realization:
    gen = pres.gen
    qm = Q - 1 / Q
    if pres.pid in (PresId.SL2, PresId.SL2H):
        gens = {"E": gen("E"), "F": gen("F"), "K": gen("K"), "Ki": gen("K", -1)}
        if pres.pid is PresId.SL2H:
            gens["Kh"] = gen("K", Fraction(1, 2))
            gens["Khi"] = gen("K", Fraction(-1, 2))
        gens["X"], gens["Xi"] = gens["K"], gens["Ki"]
        gens["Y"] = gens["Ki"] + qm * gens["F"]
        gens["Z"] = gens["Ki"] - Q * qm * (gens["Ki"] * gens["E"])
    elif pres.pid is PresId.GL2:
        gens = {"E": gen("E"), "F": gen("F"), "K1": gen("K1"), "K1i": gen("K1", -1),
                "K2": gen("K2"), "K2i": gen("K2", -1)}
        gens["K"] = gens["K1"] * gens["K2i"]
        gens["Ki"] = gens["K1i"] * gens["K2"]
    else:
        gens = {name: gen(name) for name in pres.letters}
    return Realization(f"symbolic[{pres.label}]", gens, q=Q, p=P, one=pres.one())


def phi_images(g) -> dict:
    """Images of the equitable letters under the isomorphism to the Chevalley presentation."""
    qm = g.q - 1 / g.q
    return {"X": g.K, "Xi": g.Ki, "Y": g.Ki + qm * g.F, "Z": g.Ki - g.q * qm * (g.Ki * g.E)}


# representations ---------------------------------------------------------------------

def rep_realization(rep: Rep) -> Realization:
    gens = dict(rep.gens)
    dim = rep.dim
    if rep.point is None:
        q, p, coeff, scalars = Q, P, None, None
    else:
        point = rep.point
        q = ratq_eval(Q, point)
        p = Fraction(point["p"])

        def coeff(c, point=point):
            return ratq_eval(as_ratq(c), point)

        scalars = {k: Fraction(point[k]) for k in SCALAR_NAMES if k in point}
    if rep.flavor == "chevalley":
        # GL2 acts through K1 = q K^(1/2), K2 = q K^(-1/2)
        t = q
        gens["K1"] = gens["Kh"] * t
        gens["K1i"] = gens["Khi"] * (1 / t)
        gens["K2"] = gens["Khi"] * t
        gens["K2i"] = gens["Kh"] * (1 / t)
    one = Matrix.identity(dim, 1)
    return Realization(f"rep[{rep.flavor},2s={rep.twoS}{',numeric' if rep.point else ''}]", gens,
                       q=q, p=p, one=one, scalars=scalars, coeff=coeff, point=rep.point)


def numeric_rep_realization(twoS: int, flavor: str = "chevalley", point=None) -> Realization:
    from .reps import make_rep

    return rep_realization(make_rep(twoS, flavor).evaluated(point or NUMERIC_POINT))


def counit_realization() -> Realization:
    ones = {n: 1 for n in ("K", "Ki", "Kh", "Khi", "K1", "K1i", "K2", "K2i", "X", "Xi", "Y", "Z")}
    ones.update({"E": 0, "F": 0})
    return Realization("counit", ones, q=Q, p=P, one=1)


def matrix_realization(images: dict, g) -> Realization:
    """Generators realized by 2x2 operator matrices over ``g``."""
    from .matalg import OpMat

    return Realization(f"matrices[{g.name}]", images, q=g.q, p=g.p, one=OpMat.identity(2, 1),
                       scalars=g.scalars, coeff=g._coeff, point=g.point)


class OpMatLeg:
    """Legs of End(C^2) (x) algebra written as 2x2 operator matrices."""

    @staticmethod
    def scalar_leg(rho: Realization) -> Realization:
        from .matalg import OpMat

        def lazy(name):
            m = getattr(rho, name)
            return OpMat(m.rows)

        return Realization(f"aux[{rho.name}]", {}, q=rho.q, p=rho.p, one=OpMat.identity(2, 1),
                           scalars=rho.scalars, lazy=lazy, point=rho.point)

    @staticmethod
    def algebra_leg(g: Realization) -> Realization:
        from .matalg import OpMat

        def lazy(name):
            x = getattr(g, name)
            return OpMat.diag([x, x])

        return Realization(f"quantum[{g.name}]", {}, q=g.q, p=g.p, one=OpMat.identity(2, 1),
                           scalars=g.scalars, lazy=lazy, point=g.point)


def kron_leg(reals, i: int) -> Realization:
    """Generators of factor ``i`` (0-based) acting on a Kronecker product of representations."""
    dims = [r.one.shape[0] for r in reals]
    base = reals[i]

    def lazy(name):
        m = getattr(base, name)
        if is_scalar(m):
            m = Matrix.identity(dims[i], 1) * m
        out = None
        for k, d in enumerate(dims):
            f = m if k == i else Matrix.identity(d, 1)
            out = f if out is None else kron(out, f)
        return out

    total = 1
    for d in dims:
        total *= d
    return Realization(f"kron[{i}]", {}, q=base.q, p=base.p, one=Matrix.identity(total, 1),
                       scalars=base.scalars, coeff=base._coeff, lazy=lazy, point=base.point)


def kdemi_realization(g: Realization) -> Realization:
    """GL2 letters through K1 -> K^(1/2), K2 -> K^(-1/2) over a realization with Kh."""
    table = {"K1": "Kh", "K1i": "Khi", "K2": "Khi", "K2i": "Kh"}

    def lazy(name):
        return getattr(g, table.get(name, name))

    return Realization(f"kdemi({g.name})", {}, q=g.q, p=g.p, one=g.one, scalars=g.scalars,
                       coeff=g._coeff, lazy=lazy, point=g.point)


def rotate_realization(g: Realization) -> Realization:
    """Letters rotated X -> Y -> Z -> X (the rotation r)."""
    rot = {"X": "Y", "Y": "Z", "Z": "X"}

    def lazy(name):
        if name in rot:
            return getattr(g, rot[name])
        if name == "Xi":
            raise FlavorMismatch("the rotation has no image for X^-1")
        return getattr(g, name)

    return Realization(f"r({g.name})", {}, q=g.q, p=g.p, one=g.one, scalars=g.scalars,
                       coeff=g._coeff, lazy=lazy, point=g.point)


# specializations of the algebra A ------------------------------------------------------

TARGETS = ("phi_c", "phi_e", "phi_c'", "r_phi_e", "rr_phi_e")


class UnknownTarget(KeyError):
    pass


def table1_constants(target: str, q=Q) -> dict:
    qm = q - 1 / q
    if target == "phi_c":
        return {"ep": 1, "em": 1, "kp": 0, "km": 0}
    if target in ("phi_e", "r_phi_e", "rr_phi_e"):
        return {"ep": 1, "em": 1, "kp": 0, "km": qm}
    if target == "phi_c'":
        return {"ep": 0, "em": 0, "kp": 1, "km": 1}
    raise UnknownTarget(target)


def table1_images(target: str, g) -> dict:
    q = g.q
    qm = q - 1 / q
    if target == "phi_c":
        return {"W0": g.K, "W1": g.Ki, "Z1": qm * (g.F * g.K), "Zt1": qm * (g.Ki * g.E)}
    if target in ("phi_e", "r_phi_e", "rr_phi_e"):
        h = g
        if target != "phi_e":
            h = rotate_realization(g)
            if target == "rr_phi_e":
                h = rotate_realization(h)
        return {"W0": h.X, "W1": h.Y, "Z1": (h.Y * h.X - 1) * (1 / q), "Zt1": -h.Z}
    if target == "phi_c'":
        return {"W0": g.E, "W1": g.F, "Z1": -(1 / qm) * g.K, "Zt1": -(1 / qm) * g.Ki}
    raise UnknownTarget(target)


def specialization_realization(target: str, base: Realization) -> Realization:
    """Realization of A obtained by composing a Table 1 map with ``base``."""
    images = table1_images(target, base)
    consts_sym = table1_constants(target, Q)
    consts = {k: base.coeff(as_ratq(v)) for k, v in consts_sym.items()}
    scalars = dict(base.scalars)
    scalars.update(consts)
    subs = {k: as_ratq(v) for k, v in consts_sym.items()}
    cache = {}

    def coeff(c):
        key = c
        hit = cache.get(key)
        if hit is None:
            hit = base.coeff(c.subs(subs) if isinstance(c, RatQ) and c.variables() & set(subs) else c)
            cache[key] = hit
        return hit

    return Realization(f"{target}[{base.name}]", images, q=base.q, p=base.p, one=base.one,
                       scalars=scalars, coeff=coeff, point=base.point)


# oracle families ------------------------------------------------------------------------

def oracle_realizations(kind: str, spins=(0, 1, 2), numeric: bool = True, point=None):
    """Realizations used to cross-check an identity of the given kind.

    kinds: ``sl2`` (E, F, K, Kh and phi-images), ``equitable`` (X, Y, Z only),
    ``gl2``, ``alg_a`` (through Table 1 targets).
    """
    from .reps import make_rep

    out = []
    point = point or NUMERIC_POINT
    for s in spins:
        if kind in ("sl2", "gl2", "sl2h"):
            out.append(rep_realization(make_rep(s, "chevalley")))
        elif kind == "equitable":
            out.append(rep_realization(make_rep(s, "chevalley")))
            out.append(rep_realization(make_rep(s, "equitable_ycol")))
        elif kind == "alg_a":
            for t in ("phi_c", "phi_c'"):
                out.append(specialization_realization(t, rep_realization(make_rep(s, "chevalley"))))
            out.append(specialization_realization("phi_e", rep_realization(make_rep(s, "equitable_ycol"))))
    if numeric:
        for s in [s for s in spins if s > 0][:2] or list(spins)[:1]:
            if kind in ("sl2", "gl2", "sl2h"):
                out.append(numeric_rep_realization(s, "chevalley", point))
            elif kind == "equitable":
                out.append(numeric_rep_realization(s, "equitable_ycol", point))
            elif kind == "alg_a":
                out.append(specialization_realization("phi_c'", numeric_rep_realization(s, "chevalley", point)))
                out.append(specialization_realization("phi_e", numeric_rep_realization(s, "equitable_ycol", point)))
    return out


__all__ = [
    "Realization", "symbolic", "symbolic_for", "rep_realization", "numeric_rep_realization",
    "counit_realization", "matrix_realization", "kdemi_realization", "OpMatLeg", "kron_leg", "rotate_realization",
    "specialization_realization", "table1_images", "table1_constants", "oracle_realizations",
    "NUMERIC_POINT", "TARGETS", "UnknownTarget", "phi_images", "SL2", "SL2H", "GL2", "FREE_A",
]
