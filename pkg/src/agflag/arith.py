"""Integer side of two-point codes on Kummer curves.

Everything here depends only on (m, r, n): the dimensions l(aP + bQ) from
the floor-sum decomposition, the jump sets H_b and H_b^*, their closed
forms, and the Weierstrass semigroups at P, Q and (P, Q). No field
arithmetic is involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Iterator


class EmptyJumpSet(ValueError):
    pass


@dataclass(frozen=True)
class CurveParams:
    m: int
    r: int
    n: int

    def __post_init__(self):
        m, r, n = self.m, self.r, self.n
        if m < 3 or not 2 <= r <= m - 1:
            raise ValueError(f"need m >= 3 and 2 <= r <= m-1, got m={m}, r={r}")
        if gcd(m, r) != 1:
            raise ValueError(f"gcd(m, r) = {gcd(m, r)} != 1")
        if n <= 2 * self.g - 1:
            raise ValueError(f"n = {n} must exceed 2g - 1 = {2 * self.g - 1}")
        if (n - (r - 1)) % m:
            raise ValueError(f"n = {n} is not r - 1 plus a multiple of m")

    @property
    def g(self) -> int:
        return (self.m - 1) * (self.r - 1) // 2

    @property
    def r_tilde(self) -> int:
        return pow(self.r, -1, self.m)

    @property
    def top(self) -> int:
        """n + 2g - 1, the largest a + b at which H_b^* can still jump."""
        return self.n + 2 * self.g - 1

    @cached_property
    def window(self) -> int:
        return 4 * self.g + self.m


@dataclass(frozen=True)
class JumpSet:
    b: int
    members: tuple[int, ...]

    @classmethod
    def of(cls, b: int, members: Iterable[int]) -> JumpSet:
        return cls(b, tuple(sorted(set(members))))

    def __contains__(self, a: object) -> bool:
        return a in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def max(self) -> int:
        if not self.members:
            raise EmptyJumpSet(f"jump set at b={self.b} is empty")
        return self.members[-1]

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


def ell(params: CurveParams, a: int, b: int) -> int:
    """l(aP + bQ) for any integers a, b."""
    m, r = params.m, params.r
    total = 0
    for t in range(m):
        d = (a - r * t) // m + (b + t) // m + 1
        if d > 0:
            total += d
    return total


def code_dim(params: CurveParams, a: int, b: int) -> int:
    """dim C_L(D, aP + bQ) = l(aP + bQ) - l((a-n-1)P + (b+1)Q), using D ~ (n+1)P - Q."""
    return ell(params, a, b) - ell(params, a - params.n - 1, b + 1)


def h_b(params: CurveParams, b: int, a_max: int) -> JumpSet:
    return JumpSet.of(b, (a for a in range(a_max + 1)
                          if ell(params, a, b) > ell(params, a - 1, b)))


def hb_star_via_ell(params: CurveParams, b: int) -> JumpSet:
    """Jumps of the code dimension in a, counted through l."""
    if b < 0:
        raise ValueError("b must be non-negative")
    top = params.top - b
    dims = [code_dim(params, a, b) for a in range(-1, top + 1)]
    return JumpSet.of(b, (a for a in range(top + 1) if dims[a + 1] > dims[a]))


def in_hb_star_closed(params: CurveParams, a: int, b: int) -> bool:
    """Membership a in H_b^* through the residue criterion, exactly in integers."""
    m, r, n, rt = params.m, params.r, params.n, params.r_tilde
    s = a + b
    if a < 0 or s < 0:
        return False
    if s < n:
        return (rt * a) % m * (r - 1) <= s
    if s <= params.top:
        return (rt * (a - n - 1)) % m * (r - 1) > s - n
    return False


def hb_star_closed(params: CurveParams, b: int) -> JumpSet:
    if b < 0:
        raise ValueError("b must be non-negative")
    return JumpSet.of(b, (a for a in range(params.top - b + 1)
                          if in_hb_star_closed(params, a, b)))


def max_hb_star(params: CurveParams, b: int) -> int:
    """Closed form for max(H_b^*).

    Only meaningful while H_b^* is nonempty, i.e. b <= n + 2g - 1; larger b
    raise :class:`EmptyJumpSet`.
    """
    if b < 0:
        raise ValueError("b must be non-negative")
    if b > params.top:
        raise EmptyJumpSet(f"H_b^* is empty for b = {b} > n + 2g - 1 = {params.top}")
    m, r, n, g = params.m, params.r, params.n, params.g
    rho = b % m
    if rho < m // r:
        return n + 2 * g - b + rho - r - r * rho
    return n + 2 * g - b + rho - m


def semigroup_membership(params: CurveParams, a: int, b: int) -> bool:
    """(a, b) in H(P, Q): some f has pole divisor exactly aP + bQ.

    That needs L(aP + bQ) to exceed both L((a-1)P + bQ) and L(aP + (b-1)Q);
    a space is never the union of two proper subspaces, so both jumps
    together are also sufficient.
    """
    if a < 0 or b < 0:
        return False
    e = ell(params, a, b)
    return e != ell(params, a - 1, b) and e != ell(params, a, b - 1)


def hp_members(params: CurveParams, upto: int) -> list[int]:
    """H(P) intersected with [0, upto]."""
    return [a for a in range(upto + 1) if ell(params, a, 0) > ell(params, a - 1, 0)]


def hq_members(params: CurveParams, upto: int) -> list[int]:
    return [b for b in range(upto + 1) if ell(params, 0, b) > ell(params, 0, b - 1)]


def gaps_p(params: CurveParams) -> list[int]:
    members = set(hp_members(params, 2 * params.g))
    return [a for a in range(2 * params.g + 1) if a not in members]


def gaps_q(params: CurveParams) -> list[int]:
    members = set(hq_members(params, 2 * params.g))
    return [b for b in range(2 * params.g + 1) if b not in members]


@lru_cache(maxsize=64)
def gamma_set(params: CurveParams, window: int | None = None) -> tuple[tuple[int, int], ...]:
    """Pairs (beta, n_beta) for each gap beta at P, n_beta the least partner."""
    w = params.window if window is None else window
    out = []
    for beta in gaps_p(params):
        n_beta = next((c for c in range(w + 1) if semigroup_membership(params, beta, c)), None)
        if n_beta is None:
            raise RuntimeError(f"no partner for gap {beta} below {w}")
        out.append((beta, n_beta))
    return tuple(out)


@lru_cache(maxsize=64)
def _lub_closure(params: CurveParams, window: int) -> frozenset[tuple[int, int]]:
    gens = set(gamma_set(params, max(window, params.window)))
    gens |= {(h, 0) for h in hp_members(params, window)}
    gens |= {(0, h) for h in hq_members(params, window)}
    gens = {u for u in gens if u[0] <= window and u[1] <= window}
    pts = sorted(gens)
    return frozenset((max(x[0], y[0]), max(x[1], y[1])) for x in pts for y in pts)


def lub_membership(params: CurveParams, a: int, b: int, window: int | None = None) -> bool:
    """(a, b) is the lub of two elements of Gamma(P,Q), H(P)x{0} or {0}xH(Q)."""
    w = params.window if window is None else window
    if not (0 <= a <= w and 0 <= b <= w):
        raise ValueError(f"({a}, {b}) outside the search window [0, {w}]^2")
    return (a, b) in _lub_closure(params, w)
