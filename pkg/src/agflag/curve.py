"""Kummer curves y^m = f(x) with f split and separable over the base field.

P is the unique place at infinity and Q = (alpha_k, 0) for a chosen root
alpha_k of f. Riemann-Roch spaces L(aP + bQ) have the explicit monomial
basis y^t (x - alpha_k)^j, with pole order r*t + m*j at P and zero order
t + m*j at Q.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import gcd
from typing import NamedTuple, Sequence

import numpy as np

from .arith import CurveParams
from .field import FieldElement, FieldSpec, kummer_fiber


class CurveError(ValueError):
    pass


class NotSeparableOrNotSplit(CurveError):
    pass


class GcdViolation(CurveError):
    pass


class DegreeOutOfRange(CurveError):
    pass


class LengthTooSmall(CurveError):
    pass


class PoleAtPoint(ZeroDivisionError):
    pass


RAMIFIED = "ramified"
SPLIT = "split"


@dataclass(frozen=True)
class KummerCurve:
    field: FieldSpec
    m: int
    f_coeffs: tuple[FieldElement, ...]
    f_roots: tuple[FieldElement, ...]
    r: int
    r_tilde: int
    genus: int

    def f(self, x: FieldElement) -> FieldElement:
        acc = self.field.zero
        for c in reversed(self.f_coeffs):
            acc = acc * x + c
        return acc

    def f_values(self) -> np.ndarray:
        """f evaluated at every field element, indexed by encoding."""
        F = self.field
        xs = np.arange(F.q)
        acc = np.zeros(F.q, dtype=np.int64)
        for c in reversed(self.f_coeffs):
            acc = F.add(F.mul(acc, xs), int(c))
        return acc

    def __repr__(self) -> str:
        return f"KummerCurve(y^{self.m} = f(x) over {self.field!r}, r={self.r}, g={self.genus})"


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElement
    y: FieldElement
    kind: str


class FunctionTerm(NamedTuple):
    """The function y**t * (x - alpha_k)**j."""

    t: int
    j: int


@dataclass(frozen=True)
class EvaluationSupport:
    curve: KummerCurve
    k_index: int
    points: tuple[AffinePoint, ...] = dc_field(repr=False)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def alpha(self) -> FieldElement:
        return self.curve.f_roots[self.k_index - 1]

    @property
    def Q(self) -> AffinePoint:
        return AffinePoint(self.alpha, self.curve.field.zero, RAMIFIED)

    @cached_property
    def params(self) -> CurveParams:
        c = self.curve
        return CurveParams(m=c.m, r=c.r, n=self.n)

    @cached_property
    def _coords(self) -> tuple[np.ndarray, np.ndarray]:
        xs = np.array([int(p.x) for p in self.points], dtype=np.int64)
        ys = np.array([int(p.y) for p in self.points], dtype=np.int64)
        return xs, ys

    def evaluate(self, terms: Sequence[FunctionTerm]) -> np.ndarray:
        """Matrix of term values: one row per term, one column per point."""
        F = self.curve.field
        xs, ys = self._coords
        dx = F.sub(xs, int(self.alpha))
        if np.any(dx == 0):
            raise PoleAtPoint("support contains Q")
        if not terms:
            return np.zeros((0, self.n), dtype=np.int64)
        t = np.array([term.t for term in terms], dtype=np.int64)[:, None]
        j = np.array([term.j for term in terms], dtype=np.int64)[:, None]
        return F.mul(F.power(ys[None, :], t), F.power(dx[None, :], j))

    def __repr__(self) -> str:
        return f"EvaluationSupport({self.curve!r}, Q=root {self.k_index}, n={self.n})"


def _as_elements(field: FieldSpec, coeffs: Sequence[FieldElement | int]) -> tuple[FieldElement, ...]:
    return tuple(field(c) for c in coeffs)


def make_curve(field: FieldSpec, m: int, f_coeffs: Sequence[FieldElement | int]) -> KummerCurve:
    """Validate y^m = f(x); f is given constant term first, monic.

    Raises one of the :class:`CurveError` subclasses when f is not a product
    of distinct rational linear factors or (m, deg f) violate the standing
    hypotheses 2 <= r <= m-1, gcd(m, r) = 1.
    """
    coeffs = list(_as_elements(field, f_coeffs))
    while coeffs and coeffs[-1].value == 0:
        coeffs.pop()
    if not coeffs:
        raise DegreeOutOfRange("f is the zero polynomial")
    if coeffs[-1] != field.one:
        raise CurveError("f must be monic")
    r = len(coeffs) - 1
    if m < 3:
        raise DegreeOutOfRange(f"m must be at least 3, got {m}")
    if not 2 <= r <= m - 1:
        raise DegreeOutOfRange(f"deg f = {r} outside [2, m-1] = [2, {m - 1}]")
    if gcd(m, r) != 1:
        raise GcdViolation(f"gcd(m, deg f) = gcd({m}, {r}) = {gcd(m, r)} != 1")
    curve = KummerCurve(field, m, tuple(coeffs), (), r, pow(r, -1, m), (m - 1) * (r - 1) // 2)
    values = curve.f_values()
    roots = tuple(field(int(v)) for v in np.flatnonzero(values == 0))
    if len(roots) != r:
        raise NotSeparableOrNotSplit(
            f"f has {len(roots)} distinct roots in {field!r} but degree {r}")
    return KummerCurve(field, m, tuple(coeffs), roots, r, curve.r_tilde, curve.genus)


def enumerate_points(curve: KummerCurve) -> list[AffinePoint]:
    """All affine rational points, x then y in canonical order."""
    F = curve.field
    values = curve.f_values()
    pts = []
    for a, fa in enumerate(values.tolist()):
        x = F(a)
        if fa == 0:
            pts.append(AffinePoint(x, F.zero, RAMIFIED))
            continue
        for y in sorted(kummer_fiber(F, curve.m, F(fa))):
            pts.append(AffinePoint(x, y, SPLIT))
    return pts


def standard_support(curve: KummerCurve, k_index: int) -> EvaluationSupport:
    """D = (sum of the ramified points) - Q + (all points over fully split x).

    x-values whose fibre has fewer than m points are not completely split and
    are left out.
    """
    if not 1 <= k_index <= curve.r:
        raise ValueError(f"k_index must be in [1, {curve.r}], got {k_index}")
    alpha = curve.f_roots[k_index - 1]
    by_x: dict[int, list[AffinePoint]] = {}
    for pt in enumerate_points(curve):
        by_x.setdefault(pt.x.value, []).append(pt)
    points = []
    for x, fibre in by_x.items():
        if fibre[0].kind == RAMIFIED:
            if x != alpha.value:
                points.extend(fibre)
        elif len(fibre) == curve.m:
            points.extend(fibre)
    support = EvaluationSupport(curve, k_index, tuple(points))
    if support.n <= 2 * curve.genus - 1:
        raise LengthTooSmall(f"n = {support.n} <= 2g - 1 = {2 * curve.genus - 1}")
    return support


def j_range(m: int, r: int, t: int, a: int, b: int) -> range:
    """Exponents j with y^t (x-alpha_k)^j in L(aP + bQ)."""
    return range(-((b + t) // m), (a - r * t) // m + 1)


def rr_basis(curve: KummerCurve, k_index: int, a: int, b: int) -> list[FunctionTerm]:
    """Monomial basis of L(aP + bQ), sorted by pole order at P.

    Negative a is accepted: the space is still finite and the same
    description applies.
    """
    if not 1 <= k_index <= curve.r:
        raise ValueError(f"k_index must be in [1, {curve.r}], got {k_index}")
    m, r = curve.m, curve.r
    terms = [FunctionTerm(t, j) for t in range(m) for j in j_range(m, r, t, a, b)]
    terms.sort(key=lambda term: r * term.t + m * term.j)
    return terms


def pole_order(curve: KummerCurve, term: FunctionTerm) -> int:
    return curve.r * term.t + curve.m * term.j


def eval_term(curve: KummerCurve, k_index: int, term: FunctionTerm,
              point: AffinePoint) -> FieldElement:
    alpha = curve.f_roots[k_index - 1]
    d = point.x - alpha
    if d.value == 0:
        if term.j < 0:
            raise PoleAtPoint(f"(x - alpha_{k_index})^{term.j} has a pole at {point}")
        if term.j > 0:
            return curve.field.zero
        return point.y**term.t
    return point.y**term.t * d**term.j
