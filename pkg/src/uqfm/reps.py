"""Finite-dimensional representations and exact scalar matrices."""
from __future__ import annotations

import json
from fractions import Fraction

from .scalar import (
    ONE, P, Q, RatQ, as_ratq, is_scalar, is_zero, qnum, ratq_eval, ratq_from_json,
    ratq_to_json, render,
)


class FlavorMismatch(TypeError):
    pass


class SizeMismatch(ValueError):
    pass


class Matrix:
    """Dense matrix over an exact commutative field (RatQ or Fraction entries)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]

    @property
    def shape(self):
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @classmethod
    def identity(cls, n: int, one=ONE) -> "Matrix":
        return cls([[one if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diag(cls, values) -> "Matrix":
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _scalar_matrix(self, c) -> "Matrix":
        n, m = self.shape
        if n != m:
            raise SizeMismatch("scalar shift of a non-square matrix")
        return Matrix.diag([c] * n)

    def __add__(self, other):
        if is_scalar(other):
            other = self._scalar_matrix(other)
        elif not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise SizeMismatch(f"{self.shape} + {other.shape}")
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    __radd__ = __add__

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        if not (is_scalar(other) or isinstance(other, Matrix)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            return Matrix([[a * other for a in r] for r in self.rows])
        if not isinstance(other, Matrix):
            return NotImplemented
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise SizeMismatch(f"{self.shape} * {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                s = 0
                for a, b in zip(r, col):
                    if not (is_zero(a) or is_zero(b)):
                        s = s + a * b
                row.append(s)
            out.append(row)
        return Matrix(out)

    def __rmul__(self, other):
        if is_scalar(other):
            return Matrix([[other * a for a in r] for r in self.rows])
        return NotImplemented

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (1 / as_ratq(other) if isinstance(other, RatQ) else Fraction(1) / other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.diag_inverse() ** (-n)
        out = Matrix.identity(self.shape[0])
        for _ in range(n):
            out = out * self
        return out

    def diag_inverse(self) -> "Matrix":
        n = self.shape[0]
        if any(not is_zero(self.rows[i][j]) for i in range(n) for j in range(n) if i != j):
            raise ValueError("only diagonal matrices are inverted here")
        return Matrix.diag([1 / as_ratq(self.rows[i][i]) if isinstance(self.rows[i][i], (int, RatQ))
                            else 1 / self.rows[i][i] for i in range(n)])

    def is_zero(self) -> bool:
        return all(is_zero(a) for r in self.rows for a in r)

    def __eq__(self, other):
        if isinstance(other, Matrix) or is_scalar(other):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def map(self, f) -> "Matrix":
        return Matrix([[f(a) for a in r] for r in self.rows])

    def is_scalar_multiple_of_identity(self) -> bool:
        n, m = self.shape
        if n != m:
            return False
        c = self.rows[0][0]
        return (self - self._scalar_matrix(c)).is_zero()

    def first_nonzero(self):
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if not is_zero(a):
                    return (i, j), a
        return None

    def __repr__(self):
        return "Matrix(" + "; ".join(", ".join(_render(a) for a in r) for r in self.rows) + ")"


def _render(a) -> str:
    if isinstance(a, Fraction):
        return str(a)
    return render(a) if is_scalar(a) else str(a)


def kron(a: Matrix, b: Matrix) -> Matrix:
    na, ma = a.shape
    nb, mb = b.shape
    rows = [[0] * (ma * mb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(ma):
            x = a.rows[i][j]
            if is_zero(x):
                continue
            for k in range(nb):
                for l in range(mb):
                    y = b.rows[k][l]
                    if not is_zero(y):
                        rows[i * nb + k][j * mb + l] = x * y
    return Matrix(rows)


# representations --------------------------------------------------------------

FLAVORS = ("chevalley", "equitable_ycol")


class Rep:
    """Generator matrices on V^(s), ``dim = twoS + 1``."""

    def __init__(self, twoS: int, flavor: str, gens: dict, point=None):
        self.twoS = twoS
        self.flavor = flavor
        self.gens = gens
        self.point = point

    @property
    def dim(self) -> int:
        return self.twoS + 1

    def __getitem__(self, name):
        try:
            return self.gens[name]
        except KeyError:
            raise FlavorMismatch(f"{name} has no image in the {self.flavor} representation") from None

    def evaluated(self, assignment: dict) -> "Rep":
        """The same representation with every entry evaluated at a rational point."""
        gens = {k: m.map(lambda a: ratq_eval(as_ratq(a), assignment)) for k, m in self.gens.items()}
        return Rep(self.twoS, self.flavor, gens, point=dict(assignment))


def _qpow(n: int) -> RatQ:
    return Q**n


def make_rep(twoS: int, flavor: str = "chevalley") -> Rep:
    if twoS < 0:
        raise ValueError("twoS must be nonnegative")
    n = twoS
    d = n + 1
    if flavor == "chevalley":
        K = Matrix.diag([_qpow(n - 2 * i) for i in range(d)])
        Ki = Matrix.diag([_qpow(2 * i - n) for i in range(d)])
        Kh = Matrix.diag([P ** (n - 2 * i) for i in range(d)])
        Khi = Matrix.diag([P ** (2 * i - n) for i in range(d)])
        E = Matrix.zeros(d)
        F = Matrix.zeros(d)
        for i in range(1, d):
            E.rows[i - 1][i] = qnum(n - i + 1)
            F.rows[i][i - 1] = qnum(i)
        gens = {"E": E, "F": F, "K": K, "Ki": Ki, "Kh": Kh, "Khi": Khi}
        qm = Q - 1 / Q
        gens["X"], gens["Xi"] = K, Ki
        gens["Y"] = Ki + F * qm
        gens["Z"] = Ki - (Ki * E) * (Q * qm)
        return Rep(twoS, flavor, gens)
    if flavor == "equitable_ycol":
        X = Matrix.diag([_qpow(n - 2 * i) for i in range(d)])
        Xi = Matrix.diag([_qpow(2 * i - n) for i in range(d)])
        Y = Matrix.diag([_qpow(2 * i - n) for i in range(d)])
        Z = Matrix.diag([_qpow(2 * i - n) for i in range(d)])
        for i in range(1, d):
            Y.rows[i][i - 1] = _qpow(n) - _qpow(2 * i - 2 - n)
            Z.rows[i - 1][i] = _qpow(-n) - _qpow(2 * i - n)
        return Rep(twoS, flavor, {"X": X, "Xi": Xi, "Y": Y, "Z": Z})
    raise ValueError(f"unknown flavor {flavor!r}")


def rep_eval(x, rep: Rep) -> Matrix:
    """Image of an algebra element under a representation."""
    from .realize import rep_realization

    return rep_realization(rep).element(x)


eval_rep = rep_eval


def kop_to_kmatrix(K, rep: Rep) -> Matrix:
    """Block matrix with block (i, j) the image of K_ij; auxiliary index outermost.

    ``K`` may be an operator matrix over the algebra or one already evaluated
    entrywise; Laurent entries give a matrix of Laurent polynomials.
    """
    from .matalg import OpMat
    from .scalar import LaurentUV

    d = rep.dim
    n = K.n if isinstance(K, OpMat) else len(K)
    entries = K.entries if isinstance(K, OpMat) else K
    ident = Matrix.identity(d)

    def image(x):
        if isinstance(x, Matrix):
            return x
        if is_scalar(x):
            return ident * x
        return rep_eval(x, rep)

    blocks = []
    for i in range(n):
        row = []
        for j in range(n):
            x = entries[i][j]
            if isinstance(x, LaurentUV):
                row.append(x.map_coeffs(image))
            else:
                row.append(image(x))
        blocks.append(row)
    return blocks_to_opmat(blocks, d)


def blocks_to_opmat(blocks, d: int):
    """Flatten a block array of matrices (or Laurent polynomials of matrices) into an OpMat."""
    from .matalg import OpMat
    from .scalar import LaurentUV

    n = len(blocks)
    N = n * d
    rows = [[0] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            b = blocks[i][j]
            for a in range(d):
                for c in range(d):
                    if isinstance(b, LaurentUV):
                        rows[i * d + a][j * d + c] = LaurentUV({k: m.rows[a][c] for k, m in b.terms.items()})
                    else:
                        rows[i * d + a][j * d + c] = b.rows[a][c]
    return OpMat(rows)


def check_fm3(kmat, spectral: bool, q=Q, aux_dim: int = 2):
    """Residual of the three-space Freidel-Maillet equation for a K-matrix on C^2 (x) V.

    Legs are (aux1, aux2, V); R and R0 act on the two auxiliary legs.
    """
    from . import matalg
    from .spectral import r_matrix_uv

    N = kmat.n
    if N % aux_dim:
        raise SizeMismatch(f"K-matrix of size {N} is not 2*dim")
    d = N // aux_dim
    dims = (aux_dim, aux_dim, d)
    R = r_matrix_uv(q) if spectral else matalg.r_matrix(q)
    R0 = matalg.r0_matrix(q)
    if spectral:
        from .scalar import LaurentUV

        Ku = kmat
        Kv = kmat.map(lambda e: _u_to_v(e) if isinstance(e, LaurentUV) else e)
    else:
        Ku = Kv = kmat
    R12 = matalg.tensor_place(R, [1, 2], dims)
    R012 = matalg.tensor_place(R0, [1, 2], dims)
    K13 = matalg.tensor_place(Ku, [1, 3], dims)
    K23 = matalg.tensor_place(Kv, [2, 3], dims)
    return R12 * K13 * R012 * K23 - K23 * R012 * K13 * R12


def _u_to_v(e):
    from .scalar import LaurentUV

    return LaurentUV({(b, a): c for (a, b), c in e.terms.items()})


# JSON export -----------------------------------------------------------------------

def _laurent_terms(x):
    from .scalar import LaurentUV

    if isinstance(x, LaurentUV):
        items = sorted(x.terms.items())
    else:
        items = [((0, 0), x)] if not is_zero(x) else []
    out = []
    for (a, b), c in items:
        out.append({"u": a, "v": b, "coeff": ratq_to_json(as_ratq(c))})
    return out


def matrix_to_json(name: str, twoS: int, mat) -> dict:
    from .matalg import OpMat

    rows = mat.entries if isinstance(mat, OpMat) else mat.rows
    return {
        "name": name,
        "twoS": twoS,
        "dim": len(rows),
        "variables": ["p", "u", "v"],
        "entries": [[_laurent_terms(x) for x in r] for r in rows],
    }


def matrix_from_json(doc: dict):
    from .matalg import OpMat
    from .scalar import LaurentUV

    rows = []
    for r in doc["entries"]:
        row = []
        for terms in r:
            lau = LaurentUV({(t["u"], t["v"]): ratq_from_json(t["coeff"]) for t in terms})
            if set(lau.terms) <= {(0, 0)}:
                row.append(lau.terms.get((0, 0), 0))
            else:
                row.append(lau)
        rows.append(row)
    return OpMat(rows)


def export_matrix(name: str, twoS: int, path=None, fmt: str = "json") -> dict:
    from .matalg import named_scalar_matrix

    if fmt != "json":
        raise ValueError(f"unsupported format {fmt!r}")
    mat = named_scalar_matrix(name, twoS)
    doc = matrix_to_json(name, twoS, mat)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
            fh.write("\n")
    return doc


def import_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return matrix_from_json(json.load(fh))
