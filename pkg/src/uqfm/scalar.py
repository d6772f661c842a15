"""Exact coefficient field and Laurent polynomials in the spectral variables.

The coefficient field is the field of rational functions in the base
indeterminate ``p`` (with ``q = p**2``) and the structure constants
``k+, k-, e+, e-, alpha``.  Polynomial arithmetic and gcds are delegated to
FLINT's sparse multivariate integer polynomials; this module only keeps the
fraction canonical.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import flint

VARIABLES = ("p", "kp", "km", "ep", "em", "alpha")
DISPLAY = {"p": "q", "kp": "k+", "km": "k-", "ep": "e+", "em": "e-", "alpha": "alpha"}
_ALIASES = {"k+": "kp", "k-": "km", "e+": "ep", "e-": "em", "q^(1/2)": "p"}
_INDEX = {name: i for i, name in enumerate(VARIABLES)}

_CTX = flint.fmpz_mpoly_ctx.get(VARIABLES, "lex")
_GENS = dict(zip(VARIABLES, _CTX.gens()))
_POLY_ONE = _CTX.constant(1)
_POLY_ZERO = _CTX.constant(0)


class DivisionByZero(ZeroDivisionError):
    pass


class DenominatorVanishes(ZeroDivisionError):
    pass


class NotAMonomial(ValueError):
    pass


def _var_index(name: str) -> int:
    name = _ALIASES.get(name, name)
    try:
        return _INDEX[name]
    except KeyError:
        raise KeyError(f"unknown scalar variable {name!r}") from None


class RatQ:
    """Canonical fraction ``num/den`` of integer polynomials.

    ``gcd(num, den) == 1`` and the leading coefficient of ``den`` is positive,
    so structural equality is value equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        if isinstance(num, RatQ):
            num, den0 = num.num, num.den
            den = den0 if den is None else den0 * _as_poly(den)
        else:
            if isinstance(num, Fraction):
                den = num.denominator if den is None else den * num.denominator
                num = num.numerator
            num = _as_poly(num)
            den = _POLY_ONE if den is None else _as_poly(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den) -> "RatQ":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def var(cls, name: str) -> "RatQ":
        return cls._raw(_CTX.gens()[_var_index(name)], _POLY_ONE)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.is_one() and other.den.is_one():
            return RatQ._raw(self.num + other.num, _POLY_ONE)
        if self.den == other.den:
            return RatQ._raw(*_canonical(self.num + other.num, self.den))
        g = self.den.gcd(other.den)
        if g.is_one():
            num = self.num * other.den + other.num * self.den
            return RatQ._raw(num, self.den * other.den)
        a = self.den / g
        b = other.den / g
        num = self.num * b + other.num * a
        return RatQ._raw(*_canonical(num, a * other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatQ._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return RatQ._raw(self.num * other.num, _POLY_ONE)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = (self.num / g1) * (other.num / g2)
        den = (self.den / g2) * (other.den / g1)
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatQ._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatQ":
        if self.num.is_zero():
            raise DivisionByZero("division by zero in the coefficient field")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatQ._raw(num, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RatQ._raw(self.num**n, self.den**n)

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.num.to_dict().items()), tuple(self.den.to_dict().items())))
        return self._hash

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    # inspection -------------------------------------------------------------
    def variables(self) -> set[str]:
        used = set()
        for poly in (self.num, self.den):
            for mono in poly.monoms():
                used.update(VARIABLES[i] for i, e in enumerate(mono) if e)
        return used

    def is_monomial(self) -> bool:
        return len(self.num.monoms()) == 1 and len(self.den.monoms()) == 1

    def subs(self, mapping: dict) -> "RatQ":
        """Substitute variables by coefficient-field values."""
        mapping = {_ALIASES.get(k, k): v for k, v in mapping.items()}
        values = [_coerce(mapping[v]) if v in mapping else RatQ.var(v) for v in VARIABLES]
        return _poly_subs(self.num, values) / _poly_subs(self.den, values)

    def __repr__(self):
        return f"RatQ({render(self)!r})"

    def __str__(self):
        return render(self)


def _as_poly(x):
    if isinstance(x, flint.fmpz_mpoly):
        return x
    if isinstance(x, int):
        return _CTX.constant(x)
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _canonical(num, den):
    if num.is_zero():
        return _POLY_ZERO, _POLY_ONE
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
        if den.leading_coefficient() < 0:
            num, den = -num, -den
    return num, den


_SMALL = {}


def _coerce(x):
    if isinstance(x, RatQ):
        return x
    if isinstance(x, int):
        r = _SMALL.get(x)
        if r is None:
            r = RatQ._raw(_CTX.constant(x), _POLY_ONE)
            if -64 <= x <= 64:
                _SMALL[x] = r
        return r
    if isinstance(x, Fraction):
        return RatQ(x)
    return NotImplemented


def as_ratq(x) -> RatQ:
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError(f"not a coefficient: {x!r}")
    return r


def _poly_subs(poly, values):
    total = ZERO
    for mono, c in poly.terms():
        term = as_ratq(int(c))
        for v, e in zip(values, mono):
            if e:
                term = term * v ** int(e)
        total = total + term
    return total


ZERO = RatQ._raw(_POLY_ZERO, _POLY_ONE)
ONE = RatQ._raw(_POLY_ONE, _POLY_ONE)
P = RatQ.var("p")
Q = P * P
KP, KM, EP, EM, ALPHA = (RatQ.var(v) for v in ("kp", "km", "ep", "em", "alpha"))
QMQ = Q - Q.inverse()  # q - q^{-1}


def qnum(n: int) -> RatQ:
    """The q-number [n]_q = (q^n - q^-n)/(q - q^-1)."""
    return (Q**n - Q**-n) / QMQ


def ratq_arith(op: str, x, y) -> RatQ:
    x, y = as_ratq(x), as_ratq(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y.is_zero():
            raise DivisionByZero("div by zero")
        return x / y
    raise ValueError(f"unknown op {op!r}")


def _poly_eval(poly, point) -> Fraction:
    total = Fraction(0)
    for mono, c in poly.terms():
        term = Fraction(int(c))
        for v, e in zip(point, mono):
            if e:
                term *= v ** int(e)
        total += term
    return total


def ratq_eval(x, assignment: dict) -> Fraction:
    """Exact substitution of rational values for every variable used by ``x``."""
    x = as_ratq(x)
    assignment = {_ALIASES.get(k, k): Fraction(v) for k, v in assignment.items()}
    if "q" in assignment and "p" not in assignment:
        raise KeyError("assign the half power p = q^(1/2), not q")
    missing = x.variables() - set(assignment)
    if missing:
        raise KeyError(f"unassigned variables: {sorted(missing)}")
    point = [assignment.get(v, Fraction(0)) for v in VARIABLES]
    den = _poly_eval(x.den, point)
    if den == 0:
        raise DenominatorVanishes(f"denominator of {x} vanishes at {assignment}")
    return _poly_eval(x.num, point) / den


# rendering ----------------------------------------------------------------

def _render_mono(mono) -> str:
    parts = []
    for name, e in zip(VARIABLES, mono):
        if not e:
            continue
        if name == "p":
            qe = str(e // 2) if e % 2 == 0 else f"({e}/2)"
            parts.append("q" if qe == "1" else f"q^{qe}")
        else:
            label = DISPLAY[name]
            parts.append(label if e == 1 else f"{label}^{e}")
    return "*".join(parts)


def render_poly(poly) -> str:
    if poly.is_zero():
        return "0"
    out = []
    for mono, c in poly.terms():
        c = int(c)
        m = _render_mono(mono)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = m if (m and a == 1) else (f"{a}*{m}" if m else str(a))
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def render(x) -> str:
    x = as_ratq(x)
    num = render_poly(x.num)
    if x.den.is_one():
        return num
    if len(x.num.monoms()) > 1:
        num = f"({num})"
    den = render_poly(x.den)
    if len(x.den.monoms()) > 1 or "*" in den:
        den = f"({den})"
    return f"{num}/{den}"


def poly_to_terms(poly) -> list:
    return [[str(int(c)), [int(e) for e in mono]] for mono, c in poly.terms()]


def poly_from_terms(terms) -> "flint.fmpz_mpoly":
    return _CTX.from_dict({tuple(mono): int(c) for c, mono in terms})


def ratq_to_json(x) -> dict:
    x = as_ratq(x)
    return {"num": poly_to_terms(x.num), "den": poly_to_terms(x.den)}


def ratq_from_json(d: dict) -> RatQ:
    return RatQ(poly_from_terms(d["num"]), poly_from_terms(d["den"]))


# zero test shared by every element type -------------------------------------

def is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


SCALAR_TYPES = (int, Fraction, RatQ)


def is_scalar(x) -> bool:
    return isinstance(x, SCALAR_TYPES)


# Laurent polynomials in u, v --------------------------------------------------

class LaurentUV:
    """Finite sum of ``c * u**a * v**b`` with coefficients in any ring.

    Coefficient order is preserved in products, so noncommutative
    coefficients are fine.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if not is_zero(c):
                    self.terms[(int(k[0]), int(k[1]))] = c

    @classmethod
    def u(cls, power: int = 1, coeff=1) -> "LaurentUV":
        return cls({(power, 0): coeff})

    @classmethod
    def v(cls, power: int = 1, coeff=1) -> "LaurentUV":
        return cls({(0, power): coeff})

    @classmethod
    def const(cls, c) -> "LaurentUV":
        return cls({(0, 0): c})

    def _lift(self, other):
        if isinstance(other, LaurentUV):
            return other
        return LaurentUV({(0, 0): other})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return LaurentUV(out)

    def __radd__(self, other):
        return self._lift(other) + self

    def __neg__(self):
        return LaurentUV({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentUV):
            return LaurentUV({k: c * other for k, c in self.terms.items()})
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                prod = c1 * c2
                out[k] = out[k] + prod if k in out else prod
        return LaurentUV(out)

    def __rmul__(self, other):
        return LaurentUV({k: other * c for k, c in self.terms.items()})

    def __pow__(self, n: int):
        if len(self.terms) == 1 and n < 0:
            (a, b), c = next(iter(self.terms.items()))
            return LaurentUV({(a * n, b * n): as_ratq(c) ** n})
        if n < 0:
            raise ValueError("only monomials have Laurent inverses")
        out = LaurentUV.const(1)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, LaurentUV) or is_scalar(other):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def coefficient(self, a: int = 0, b: int = 0):
        return self.terms.get((a, b), 0)

    def map_coeffs(self, f) -> "LaurentUV":
        return LaurentUV({k: f(c) for k, c in self.terms.items()})

    def substitute_v(self, v_power_of_u: int = 1, factor=1) -> "LaurentUV":
        """Replace ``v`` by ``factor * u**v_power_of_u``."""
        out = LaurentUV()
        for (a, b), c in self.terms.items():
            out = out + LaurentUV({(a + v_power_of_u * b, 0): as_ratq(factor) ** b * c})
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            mono = "*".join(x for x in (_upow("u", a), _upow("v", b)) if x)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _upow(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def laurent_shift(f: LaurentUV, var: str, factor) -> LaurentUV:
    """Substitute ``var -> factor * var``; ``factor`` must be an invertible monomial."""
    factor = as_ratq(factor)
    if not factor.is_monomial():
        raise NotAMonomial(f"shift factor {factor} is not a monomial")
    if var not in ("u", "v"):
        raise ValueError(f"unknown spectral variable {var!r}")
    idx = 0 if var == "u" else 1
    return LaurentUV({k: factor ** k[idx] * c for k, c in f.terms.items()})


def random_ratq(rng, variables=("p", "kp", "alpha"), max_degree: int = 2, max_terms: int = 3) -> RatQ:
    """Small random rational function; ``rng`` is a ``random.Random``."""

    def poly():
        out = ZERO
        for _ in range(rng.randint(1, max_terms)):
            term = RatQ(rng.choice([c for c in range(-4, 5) if c]))
            for v in variables:
                term = term * RatQ.var(v) ** rng.randint(0, max_degree)
            out = out + term
        return out

    den = poly()
    while den.is_zero():
        den = poly()
    return poly() / den
