"""Noncommutative elements in PBW normal form.

Every presentation is an ordered alphabet plus straightening rules for the
inverted adjacent pairs.  A monomial is a tuple of ``(letter, exponent)``
pairs; it is in normal form when its letters strictly increase.  Products of
normal monomials are straightened by rewriting the last letter of the left
factor against each incoming letter, memoised per presentation.

Letter orders:

* GL2    F < K1 < K2 < E   (K1, K2 invertible)
* SL2    F < K < E         (K exponent stored doubled, even only)
* SL2H   F < K < E         (K exponent stored doubled, K^(1/2) allowed)
* ALG_A  W0 < W1 < Z1 < Zt1
* FREE_A same letters as ALG_A with no rules (free algebra)
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .scalar import (
    EM, EP, KM, KP, ONE, P, Q, QMQ, ZERO, RatQ, as_ratq, is_scalar, render,
)


class PresentationMismatch(TypeError):
    pass


class RewriteBudgetExceeded(RuntimeError):
    pass


class IllegalLetter(ValueError):
    pass


class UnknownName(KeyError):
    pass


class PresId(enum.Enum):
    GL2 = "GL2"
    SL2 = "SL2"
    SL2H = "SL2H"
    ALG_A = "ALG_A"
    FREE_A = "FREE_A"


REWRITE_BUDGET = 10**6


class Presentation:
    def __init__(self, pid: PresId, letters, invertible=(), rules=None, doubled=(), even_only=False,
                 label=None):
        self.pid = pid
        self.letters = tuple(letters)
        self.index = {name: i for i, name in enumerate(self.letters)}
        self.invertible = frozenset(self.index[x] for x in invertible)
        self.doubled = frozenset(self.index[x] for x in doubled)
        self.even_only = even_only
        self.rules = dict(rules or {})
        self.label = label or pid.value
        self._letter_cache = {}
        self._mono_cache = {}
        self._steps = 0

    def __repr__(self):
        return f"<Presentation {self.label}>"

    # monomial algebra -------------------------------------------------------
    def check_exponent(self, letter: int, exp: int):
        if exp < 0 and letter not in self.invertible:
            raise IllegalLetter(f"{self.letters[letter]} is not invertible in {self.label}")
        if letter in self.doubled and self.even_only and exp % 2:
            raise IllegalLetter(f"half powers of {self.letters[letter]} are not in {self.label}")

    def mul_letter(self, mono: tuple, x: int, e: int) -> dict:
        key = (mono, x, e)
        hit = self._letter_cache.get(key)
        if hit is not None:
            return hit
        if not mono:
            out = {((x, e),): ONE}
        else:
            y, f = mono[-1]
            rule = self.rules.get((y, x))
            if y == x:
                merged = mono[:-1] + ((x, f + e),) if f + e else mono[:-1]
                out = {merged: ONE}
            elif rule is None:
                out = {mono + ((x, e),): ONE}
            else:
                self._steps += 1
                if self._steps > REWRITE_BUDGET:
                    raise RewriteBudgetExceeded(f"{self.label}: more than {REWRITE_BUDGET} rewrites")
                out = {}
                prefix = mono[:-1]
                for c, word in rule(f, e):
                    for m, cm in self.mul_mono(prefix, word).items():
                        _acc(out, m, c * cm)
        self._letter_cache[key] = out
        return out

    def mul_mono(self, m1: tuple, m2: tuple) -> dict:
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        current = {m1: ONE}
        for x, e in m2:
            if not e:
                continue
            nxt = {}
            for m, c in current.items():
                for m_new, c_new in self.mul_letter(m, x, e).items():
                    _acc(nxt, m_new, c * c_new)
            current = nxt
        self._mono_cache[key] = current
        return current

    def multiply(self, a: dict, b: dict) -> dict:
        self._steps = 0
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                for m, c in self.mul_mono(m1, m2).items():
                    _acc(out, m, c1 * c2 * c)
        return out

    # constructors -----------------------------------------------------------
    def gen(self, name: str, exp: int = 1) -> "AlgElem":
        if name not in self.index:
            raise IllegalLetter(f"letter {name!r} is foreign to {self.label}")
        i = self.index[name]
        if i in self.doubled:
            exp = 2 * exp if isinstance(exp, int) else _doubled(exp)
        self.check_exponent(i, exp)
        return AlgElem(self, {((i, exp),): ONE})

    def one(self) -> "AlgElem":
        return AlgElem(self, {(): ONE})

    def zero(self) -> "AlgElem":
        return AlgElem(self, {})

    def render_mono(self, mono: tuple) -> str:
        if not mono:
            return "1"
        parts = []
        for i, e in mono:
            name = self.letters[i]
            if i in self.doubled:
                e = Fraction(e, 2)
                e = int(e) if e.denominator == 1 else e
            if e == 1:
                parts.append(name)
            elif isinstance(e, Fraction):
                parts.append(f"{name}^({e})")
            else:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


def _doubled(exp) -> int:
    twice = Fraction(exp) * 2
    if twice.denominator != 1:
        raise IllegalLetter(f"exponent {exp} is not a half integer")
    return int(twice)


def _acc(d: dict, key, c):
    if key in d:
        s = d[key] + c
        if s.is_zero():
            del d[key]
        else:
            d[key] = s
    elif not c.is_zero():
        d[key] = c


def _word(*pairs) -> tuple:
    return tuple((x, e) for x, e in pairs if e)


# rule tables ------------------------------------------------------------------

def _chevalley_rules():
    F, K, E = 0, 1, 2
    h = 1 / QMQ

    def kf(d, a):  # K^(d/2) F^a = q^(-d a) F^a K^(d/2)
        return [(P ** (-2 * d * a), _word((F, a), (K, d)))]

    def ek(b, d):  # E^b K^(d/2) = q^(-d b) K^(d/2) E^b
        return [(P ** (-2 * d * b), _word((K, d), (E, b)))]

    def ef(b, a):  # E F = F E + (K - K^-1)/(q - q^-1)
        return [
            (ONE, _word((E, b - 1), (F, 1), (E, 1), (F, a - 1))),
            (h, _word((E, b - 1), (K, 2), (F, a - 1))),
            (-h, _word((E, b - 1), (K, -2), (F, a - 1))),
        ]

    return {(K, F): kf, (E, K): ek, (E, F): ef}


def _gl2_rules():
    F, K1, K2, E = 0, 1, 2, 3
    h = 1 / QMQ
    return {
        (K1, F): lambda b, a: [(Q ** (-a * b), _word((F, a), (K1, b)))],
        (K2, F): lambda c, a: [(Q ** (a * c), _word((F, a), (K2, c)))],
        (K2, K1): lambda c, b: [(ONE, _word((K1, b), (K2, c)))],
        (E, K1): lambda d, b: [(Q ** (-b * d), _word((K1, b), (E, d)))],
        (E, K2): lambda d, c: [(Q ** (c * d), _word((K2, c), (E, d)))],
        (E, F): lambda d, a: [
            (ONE, _word((E, d - 1), (F, 1), (E, 1), (F, a - 1))),
            (h, _word((E, d - 1), (K1, 1), (K2, -1), (F, a - 1))),
            (-h, _word((E, d - 1), (K1, -1), (K2, 1), (F, a - 1))),
        ],
    }


def _single_step(y: int, x: int, replacement):
    """Extend a rule for ``y x`` to ``y^f x^e`` by peeling one letter each side."""

    def rule(f, e):
        return [(c, _word((y, f - 1), *w, (x, e - 1))) for c, w in replacement]

    return rule


def alg_a_relations(kp=KP, km=KM, ep=EP, em=EM, overrides=None) -> dict:
    """Straightening data ``(y, x) -> [(c, word)]`` for yx, y > x, read off the defining relations."""
    W0, W1, Z1, Zt1 = 0, 1, 2, 3
    q = Q
    table = {
        (W1, W0): [(ONE, ((W0, 1), (W1, 1))), (-kp, ((Zt1, 1),)), (km, ((Z1, 1),))],
        (Z1, W0): [(q**2, ((W0, 1), (Z1, 1))), (q * kp * ep, ())],
        (Zt1, W0): [(q**-2, ((W0, 1), (Zt1, 1))), (-(km * ep) / q, ())],
        (Zt1, W1): [(q**2, ((W1, 1), (Zt1, 1))), (q * km * em, ())],
        (Z1, W1): [(q**-2, ((W1, 1), (Z1, 1))), (-(kp * em) / q, ())],
        (Zt1, Z1): [(ONE, ((Z1, 1), (Zt1, 1))), (-QMQ * ep, ((W1, 1),)), (QMQ * em, ((W0, 1),))],
    }
    if overrides:
        table.update(overrides)
    return table


def make_alg_a(overrides=None, label="ALG_A") -> Presentation:
    table = alg_a_relations(overrides=overrides)
    rules = {pair: _single_step(*pair, [(c, tuple(w)) for c, w in repl]) for pair, repl in table.items()}
    return Presentation(PresId.ALG_A, ("W0", "W1", "Z1", "Zt1"), rules=rules, label=label)


GL2 = Presentation(PresId.GL2, ("F", "K1", "K2", "E"), invertible=("K1", "K2"), rules=_gl2_rules())
SL2 = Presentation(PresId.SL2, ("F", "K", "E"), invertible=("K",), rules=_chevalley_rules(),
                   doubled=("K",), even_only=True)
SL2H = Presentation(PresId.SL2H, ("F", "K", "E"), invertible=("K",), rules=_chevalley_rules(),
                    doubled=("K",))
ALG_A = make_alg_a()
FREE_A = Presentation(PresId.FREE_A, ("W0", "W1", "Z1", "Zt1"))

PRESENTATIONS = {p.pid: p for p in (GL2, SL2, SL2H, ALG_A, FREE_A)}


def presentation(name) -> Presentation:
    if isinstance(name, Presentation):
        return name
    if isinstance(name, str):
        name = PresId(name.upper())
    return PRESENTATIONS[name]


# elements -----------------------------------------------------------------------

class AlgElem:
    """Linear combination of normal monomials with coefficient-field coefficients."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms=None):
        self.pres = pres
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    def _same(self, other: "AlgElem"):
        if other.pres is not self.pres:
            raise PresentationMismatch(f"{self.pres.label} vs {other.pres.label}")

    def __add__(self, other):
        if is_scalar(other):
            other = self.pres.one() * other
        elif not isinstance(other, AlgElem):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return AlgElem(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.pres, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not (is_scalar(other) or isinstance(other, AlgElem)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            c = as_ratq(other)
            return AlgElem(self.pres, {m: v * c for m, v in self.terms.items()})
        if not isinstance(other, AlgElem):
            return NotImplemented
        self._same(other)
        return AlgElem(self.pres, self.pres.multiply(self.terms, other.terms))

    def __rmul__(self, other):
        if is_scalar(other):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (1 / as_ratq(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) == 1:
                (mono, c), = self.terms.items()
                if len(mono) == 1 and mono[0][0] in self.pres.invertible:
                    i, e = mono[0]
                    return AlgElem(self.pres, {((i, -e * -n),): c ** n})
            raise ValueError("only invertible monomials have negative powers")
        out = self.pres.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, AlgElem) or is_scalar(other):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def coefficient(self, mono=()) -> RatQ:
        return self.terms.get(mono, ZERO)

    def scalar_part(self) -> RatQ:
        return self.coefficient(())

    def is_scalar(self) -> bool:
        return all(not m for m in self.terms)

    def map_coeffs(self, f) -> "AlgElem":
        return AlgElem(self.pres, {m: as_ratq(f(c)) for m, c in self.terms.items()})

    def degree(self) -> int:
        return max((sum(abs(e) for _, e in m) for m in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mc[0])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            word = self.pres.render_mono(mono)
            if word == "1":
                parts.append(f"({render(c)})")
            elif c.is_one():
                parts.append(word)
            else:
                parts.append(f"({render(c)})*{word}")
        return " + ".join(parts)

    __repr__ = __str__


def nf_mul(a: AlgElem, b: AlgElem) -> AlgElem:
    if a.pres is not b.pres:
        raise PresentationMismatch(f"{a.pres.label} vs {b.pres.label}")
    return a * b


def commutator(a: AlgElem, b: AlgElem) -> AlgElem:
    return nf_mul(a, b) - nf_mul(b, a)


def q_comm(a: AlgElem, b: AlgElem) -> AlgElem:
    return Q * nf_mul(a, b) - nf_mul(b, a) / Q


# free words and literal syntax -------------------------------------------------

@dataclass(frozen=True)
class FreeWord:
    pres: Presentation
    letters: tuple = ()  # (name, exponent) pairs, exponents may be Fractions for K in SL2H


def nf_word(w: FreeWord) -> AlgElem:
    out = w.pres.one()
    for name, exp in w.letters:
        out = out * w.pres.gen(name, exp)
    return out


_TOKEN = re.compile(r"\s*([+\-])?\s*([^+\-]+(?:[+\-]\d+\)?[^+\-]*)*)")
_FACTOR = re.compile(r"^([A-Za-z][A-Za-z0-9]*)(?:\^\(?(-?\d+(?:/\d+)?)\)?)?$")


def _split_terms(text: str):
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and text[i - 1] not in "^*(":
            terms.append(text[start:i])
            start = i
    terms.append(text[start:])
    return [t for t in (s.strip() for s in terms) if t]


def parse_element(text: str, pres) -> AlgElem:
    """Parse ``F^2*K^-1*E - 3*q^2*K^(1/2)`` style literals."""
    pres = presentation(pres)
    total = pres.zero()
    for term in _split_terms(text.replace(" ", "")):
        sign = 1
        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        value = pres.one() * sign
        for factor in term.split("*"):
            if re.fullmatch(r"\d+(/\d+)?", factor):
                value = value * Fraction(factor)
                continue
            m = _FACTOR.match(factor)
            if not m:
                raise IllegalLetter(f"cannot parse factor {factor!r}")
            name, exp = m.group(1), Fraction(m.group(2) or 1)
            if name in ("q", "p"):
                if exp.denominator != 1 and name == "q" and (2 * exp).denominator == 1:
                    value = value * P ** int(2 * exp)
                elif exp.denominator == 1:
                    value = value * (Q if name == "q" else P) ** int(exp)
                else:
                    raise IllegalLetter(f"bad scalar power {factor!r}")
                continue
            if name == "Kh" and pres.pid in (PresId.SL2H,):
                name, exp = "K", exp / 2
            if name not in pres.index:
                raise IllegalLetter(f"letter {name!r} is foreign to {pres.label}")
            if exp.denominator != 1 and pres.index[name] not in pres.doubled:
                raise IllegalLetter(f"fractional power of {name}")
            value = value * pres.gen(name, exp if exp.denominator != 1 else int(exp))
        total = total + value
    return total


# central elements -----------------------------------------------------------------

def omega1c(g):
    return g.K1 * g.K2


def omega2c(g, form: str = "EF"):
    q = g.q
    c = (q - 1 / q) ** -1 * (q - 1 / q) ** -1
    if form == "EF":
        return (g.K1 * g.K2i / q + q * g.K1i * g.K2) * c + g.E * g.F
    return (q * g.K1 * g.K2i + g.K1i * g.K2 / q) * c + g.F * g.E


def omega_c(g, form: str = "EF"):
    q = g.q
    c = (q - 1 / q) ** -2
    if form == "EF":
        return (g.K / q + q * g.Ki) * c + g.E * g.F
    return (q * g.K + g.Ki / q) * c + g.F * g.E


def omega_e(g):
    q = g.q
    return q * g.X + g.Y / q + q * g.Z - q * (g.X * g.Y * g.Z)


def gamma0(g):
    q = g.q
    return ((q - 1 / q) ** 2 * (g.W0 * g.W1 + g.W1 * g.W0)
            - (q**2 - q**-2) * (g.kp * g.Zt1 + g.km * g.Z1)) * Fraction(1, 2)


def gamma1(g):
    q = g.q
    return (g.Z1 * g.Zt1 + g.Zt1 * g.Z1 + (q + 1 / q) * (g.ep * g.W1 + g.em * g.W0)) * Fraction(1, 2)


CENTRAL = {
    "Omega1c": (omega1c, PresId.GL2),
    "Omega2c": (omega2c, PresId.GL2),
    "OmegaC": (omega_c, PresId.SL2),
    "OmegaE": (omega_e, PresId.SL2),
    "Gamma0": (gamma0, PresId.ALG_A),
    "Gamma1": (gamma1, PresId.ALG_A),
}


def central_element(name: str) -> AlgElem:
    from .realize import symbolic

    try:
        builder, pid = CENTRAL[name]
    except KeyError:
        raise UnknownName(name) from None
    return builder(symbolic(pid))


# defining relations, as (label, lhs - rhs) builders over a realization -------------

def gl2_relations(g):
    q = g.q
    E, F, K1, K1i, K2, K2i = g.E, g.F, g.K1, g.K1i, g.K2, g.K2i
    one = g.one
    return {
        "eqgl1.K1": K1 * K1i - one,
        "eqgl1.K1'": K1i * K1 - one,
        "eqgl1.K2": K2 * K2i - one,
        "eqgl1.K2'": K2i * K2 - one,
        "eqgl2": K1 * K2 - K2 * K1,
        "eqgl3.E": K1 * E * K1i - q * E,
        "eqgl3.F": K1 * F * K1i - F / q,
        "eqgl4.E": K2 * E * K2i - E / q,
        "eqgl4.F": K2 * F * K2i - q * F,
        "eqgl5": E * F - F * E - (K1 * K2i - K1i * K2) * (1 / (q - 1 / q)),
    }


def sl2_relations(g):
    q = g.q
    E, F, K, Ki = g.E, g.F, g.K, g.Ki
    return {
        "eq1": K * Ki - g.one,
        "eq1'": Ki * K - g.one,
        "eq3.E": K * E * Ki - q**2 * E,
        "eq3.F": K * F * Ki - F / q**2,
        "eq4": E * F - F * E - (K - Ki) * (1 / (q - 1 / q)),
    }


def sl2h_relations(g):
    """Defining relations of the K^(1/2) extension (GL2 relations with K1 = K^(1/2), K2 = K^(-1/2))."""
    q = g.q
    E, F, Kh, Khi = g.E, g.F, g.Kh, g.Khi
    return {
        "Kdemi.inv": Kh * Khi - g.one,
        "Kdemi.inv'": Khi * Kh - g.one,
        "Kdemi.E": Kh * E * Khi - q * E,
        "Kdemi.F": Kh * F * Khi - F / q,
        "Kdemi.EF": E * F - F * E - (Kh * Kh - Khi * Khi) * (1 / (q - 1 / q)),
    }


def equitable_relations(g, letters=("X", "Y", "Z")):
    """(eq:e1) and the three cyclic q-commutator relations, optionally in rotated letters."""
    q = g.q
    X, Y, Z = (getattr(g, n) for n in letters)
    c = 1 / (q - 1 / q)
    out = {
        "e4.XY": (q * X * Y - Y * X / q) * c - g.one,
        "e4.YZ": (q * Y * Z - Z * Y / q) * c - g.one,
        "e4.ZX": (q * Z * X - X * Z / q) * c - g.one,
    }
    if letters[0] == "X":
        out["e1"] = g.X * g.Xi - g.one
        out["e1'"] = g.Xi * g.X - g.one
    return out


def alg_a_relations_residuals(g):
    """(wg1)-(adwg) as ``lhs - rhs`` over a realization."""
    q = g.q
    W0, W1, Z1, Zt1 = g.W0, g.W1, g.Z1, g.Zt1
    one = g.one

    def qc(a, b):
        return q * a * b - b * a / q

    return {
        "wg1": W0 * W1 - W1 * W0 - (g.kp * Zt1 - g.km * Z1),
        "wg2a": qc(W0, Z1) + g.kp * g.ep * one,
        "wg2b": qc(Zt1, W0) + g.km * g.ep * one,
        "wg3a": qc(W1, Zt1) + g.km * g.em * one,
        "wg3b": qc(Z1, W1) + g.kp * g.em * one,
        "adwg": Z1 * Zt1 - Zt1 * Z1 - (q - 1 / q) * (g.ep * W1 - g.em * W0),
    }


def random_element(pres: Presentation, rng, max_degree: int = 3, max_terms: int = 3) -> AlgElem:
    """Random element whose monomials are products of at most ``max_degree`` generators."""
    letters = []
    for name, i in pres.index.items():
        letters.append((name, 1))
        if i in pres.invertible:
            letters.append((name, -1))
        if i in pres.doubled and not pres.even_only:
            letters.append((name, Fraction(1, 2)))
    out = pres.zero()
    for _ in range(rng.randint(1, max_terms)):
        word = [rng.choice(letters) for _ in range(rng.randint(0, max_degree))]
        coeff = Fraction(rng.randint(-3, 3) or 1) * Q ** rng.randint(-2, 2)
        out = out + coeff * nf_word(FreeWord(pres, tuple(word)))
    return out


def adwg_certificates(g):
    """k+ adwg and k- adwg written as two-sided combinations of the other relations.

    Both residuals vanish in the free algebra, so the last relation is redundant
    whenever k+ or k- is invertible.
    """
    q = g.q
    r = alg_a_relations_residuals(g)
    W0, W1, Z1, Zt1 = g.W0, g.W1, g.Z1, g.Zt1
    plus = (q * (W0 * r["wg3b"]) + r["wg1"] * Z1 - q * (r["wg2a"] * W1) - r["wg3b"] * W0 / q
            + W1 * r["wg2a"] / q - Z1 * r["wg1"])
    minus = (r["wg1"] * Zt1 - Zt1 * r["wg1"] + q * (r["wg3a"] * W0) - W0 * r["wg3a"] / q
             + r["wg2b"] * W1 / q - q * (W1 * r["wg2b"]))
    return {"k+": g.kp * r["adwg"] - plus, "k-": g.km * r["adwg"] - minus}


def overlap_residuals(pres) -> dict:
    """(zy)x - z(yx) on every descending letter triple; all zero for a confluent system."""
    out = {}
    n = len(pres.letters)
    for z in range(n):
        for y in range(z):
            for x in range(y):
                a, b, c = (pres.gen(pres.letters[i]) for i in (z, y, x))
                out[f"{pres.letters[z]}{pres.letters[y]}{pres.letters[x]}"] = (a * b) * c - a * (b * c)
    return out
