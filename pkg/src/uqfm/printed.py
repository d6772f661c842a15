"""Reference matrices as displayed in closed form, used as frozen oracles."""
from __future__ import annotations

from .matalg import OpMat
from .scalar import Q, LaurentUV


def _u(power=1, coeff=1):
    return LaurentUV.u(power, coeff)


def rep_half(q=Q) -> dict:
    """Spin-1/2 generator matrices in both bases."""
    qm = q - 1 / q
    return {
        "chevalley": {
            "K": OpMat([[q, 0], [0, 1 / q]]),
            "E": OpMat([[0, 1], [0, 0]]),
            "F": OpMat([[0, 0], [1, 0]]),
        },
        "equitable_ycol": {
            "X": OpMat([[q, 0], [0, 1 / q]]),
            "Y": OpMat([[1 / q, 0], [qm, q]]),
            "Z": OpMat([[1 / q, 1 / q - q], [0, q]]),
        },
    }


def constant_kmatrices(q=Q) -> dict:
    """(name, twoS) -> block-layout K-matrix."""
    qm = q - 1 / q
    unipotent = OpMat([[1, 0], [1, 1]])
    return {
        ("Ke_p", 0): unipotent, ("Ke_m", 0): unipotent, ("K_X", 0): unipotent, ("K_B", 0): unipotent,
        ("Ke_p", 1): OpMat([[q, 0, 0, 0], [0, 1 / q, qm / q, 0], [1, 0, 1 / q, 0], [0, 1, qm, q]]),
        ("Ke_m", 1): OpMat([[1, 0, 0, 0], [0, 1, 0, 0], [1 / q, -qm, 1, 0], [0, q, 0, 1]]),
        ("K_B", 1): OpMat([
            [1 / q, 0, q**-2 - 1, q**-2 - 1],
            [qm, q, 1 - q**-2, 1 - q**-2],
            [1, 0, 1 / q, 1 / q - q],
            [0, 1, 0, q],
        ]),
        ("K_X", 1): OpMat([[1, 0, 0, 0], [0, 1, 0, 0], [q, 0, 1, 0], [0, 1 / q, 0, 1]]),
    }


def spectral_kmatrices(q=Q) -> dict:
    qm = q - 1 / q
    diag0 = _u(1, q) - _u(-1)
    d2 = _u(1, q**2) - _u(-1)
    d1 = _u(1) - _u(-1)
    return {
        ("Ke(u)", 0): OpMat([[diag0, 0], [_u(2, q) - 1, diag0]]),
        ("K_BX(u)", 0): OpMat([[diag0, 0], [_u(2, q) - 1, diag0]]),
        ("Kc(u)", 1): OpMat([
            [d2, 0, 0, 0],
            [0, d1, LaurentUV.const(q * qm), 0],
            [0, LaurentUV.const(qm / q), d1, 0],
            [0, 0, 0, d2],
        ]),
        ("Ke(u)", 1): OpMat([
            [d2, 0, 0, 0],
            [0, d1, LaurentUV.const(qm), 0],
            [_u(2, q) - 1 / q, LaurentUV.const(qm), d1, 0],
            [0, _u(2, q) - q, _u(1, q * qm), d2],
        ]),
        ("K_BX(u)", 1): OpMat([
            [d1, 0, LaurentUV.const(1 / q - q), LaurentUV.const(1 / q - q)],
            [_u(1, q**2 - 1), d2, LaurentUV.const(qm), LaurentUV.const(qm)],
            [_u(2, q) - q, 0, d1, _u(1, 1 - q**2)],
            [0, _u(2, q) - 1 / q, 0, d2],
        ]),
    }
