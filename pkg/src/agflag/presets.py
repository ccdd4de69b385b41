"""Named curve families, each wired through the generic Kummer model."""
from __future__ import annotations

from typing import Sequence

from .curve import KummerCurve, make_curve
from .field import make_field, prime_power


def _monomials(q_field, exponents: Sequence[int]) -> list[int]:
    coeffs = [0] * (max(exponents) + 1)
    for e in exponents:
        coeffs[e] = 1
    return coeffs


def hermitian(q: int) -> KummerCurve:
    """y^(q+1) = x^q + x over GF(q^2)."""
    p, e = prime_power(q)
    F = make_field(p, 2 * e)
    return make_curve(F, q + 1, _monomials(F, [q, 1]))


def norm_trace(q: int, ell: int) -> KummerCurve:
    """y^((q^ell - 1)/(q - 1)) = x^(q^(ell-1)) + ... + x over GF(q^ell)."""
    if ell < 2:
        raise ValueError("norm-trace needs ell >= 2")
    p, e = prime_power(q)
    F = make_field(p, e * ell)
    m = (q**ell - 1) // (q - 1)
    return make_curve(F, m, _monomials(F, [q**i for i in range(ell)]))


def gen_hermitian(q: int, ell: int) -> KummerCurve:
    """y^(q^ell + 1) = x^q + x over GF(q^(2 ell)), ell odd."""
    if ell < 1 or ell % 2 == 0:
        raise ValueError("generalized Hermitian needs odd ell >= 1")
    p, e = prime_power(q)
    F = make_field(p, 2 * e * ell)
    return make_curve(F, q**ell + 1, _monomials(F, [q, 1]))


def custom(p: int, k: int, m: int, f: Sequence[int]) -> KummerCurve:
    """Curve from raw data: f as element encodings, constant term first."""
    return make_curve(make_field(p, k), m, list(f))
