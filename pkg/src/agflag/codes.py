"""Explicit two-point codes C_L(D, aP + bQ) and the linear-algebra oracle.

Nothing in this module consults the dimension formulas: dimensions come from
ranks of evaluation matrices, duals from nullspaces, and isometries from
solving a linear system for the scaling vector.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .curve import EvaluationSupport, FunctionTerm, pole_order, rr_basis
from .field import FieldElement
from .matrix import (EchelonBasis, GFMatrix, _matmul_array, _nullspace_array, nullspace,
                     rank, row_basis, rowspace_equal, scale_columns)

ENUMERATION_LIMIT = 10**6


class TooLargeToEnumerate(ValueError):
    pass


class InconclusiveSearch(RuntimeError):
    pass


class DegreeTooLarge(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TwoPointCode:
    support: EvaluationSupport
    a: int
    b: int
    terms: tuple[FunctionTerm, ...]
    gen: GFMatrix

    @cached_property
    def dim(self) -> int:
        return rank(self.gen)

    @property
    def n(self) -> int:
        return self.support.n

    def basis(self) -> GFMatrix:
        return row_basis(self.gen)

    def __repr__(self) -> str:
        return f"TwoPointCode(a={self.a}, b={self.b}, n={self.n}, dim={self.dim})"


def build_code(support: EvaluationSupport, a: int, b: int) -> TwoPointCode:
    """Evaluate the full monomial basis of L(aP + bQ) on the support.

    Rows may be dependent once a + b >= n; the dimension is the rank.
    """
    terms = tuple(rr_basis(support.curve, support.k_index, a, b))
    gen = GFMatrix(support.curve.field, support.evaluate(terms))
    if not terms:
        gen = GFMatrix.zeros(support.curve.field, 0, support.n)
    return TwoPointCode(support, a, b, terms, gen)


def dual(code: TwoPointCode | GFMatrix) -> GFMatrix:
    gen = code.gen if isinstance(code, TwoPointCode) else code
    return nullspace(gen)


def _jump_scan(support: EvaluationSupport, b: int, a_max: int,
               scale: Sequence[FieldElement | int] | None = None):
    """Walk the basis of L(a_max P + bQ) by pole order, tracking the span.

    Yields (pole order, enlarged?, echelon basis) per term; the basis of
    L(aP + bQ) is exactly the prefix with pole order <= a.
    """
    curve = support.curve
    terms = rr_basis(curve, support.k_index, a_max, b)
    rows = support.evaluate(terms)
    F = curve.field
    if scale is not None:
        xs = np.array([int(v) for v in scale], dtype=np.int64)
        rows = F.mul(rows, xs[None, :])
    ech = EchelonBasis(F, support.n)
    for term, row in zip(terms, rows):
        yield pole_order(curve, term), ech.add(row), ech


def code_dims(support: EvaluationSupport, b: int, a_max: int) -> list[int]:
    """dim C_L(D, aP + bQ) for a = -1, 0, ..., a_max, by incremental rank."""
    dims = [0] * (a_max + 2)
    current = 0
    pending = []
    for order, grew, ech in _jump_scan(support, b, a_max):
        pending.append((order, ech.rank))
    it = iter(pending)
    nxt = next(it, None)
    for a in range(-1, a_max + 1):
        while nxt is not None and nxt[0] <= a:
            current = nxt[1]
            nxt = next(it, None)
        dims[a + 1] = current
    return dims


def hb_star_via_rank(support: EvaluationSupport, b: int,
                     scale: Sequence[FieldElement | int] | None = None) -> list[int]:
    """a in [0, n + 2g - 1 - b] where the code dimension jumps, from ranks only.

    Pole orders at P are distinct across basis monomials, so at most one new
    row arrives per a and the jump is whether it enlarges the span.
    """
    if b < 0:
        raise ValueError("b must be non-negative")
    curve = support.curve
    a_max = support.n + 2 * curve.genus - 1 - b
    if a_max < 0:
        return []
    return [order for order, grew, _ in _jump_scan(support, b, a_max, scale)
            if grew and order >= 0]


def designed_distance(support: EvaluationSupport, a: int, b: int) -> int:
    if a + b >= support.n:
        raise DegreeTooLarge(f"deg G = {a + b} >= n = {support.n}")
    return support.n - a - b


def min_distance_exhaustive(code: TwoPointCode | GFMatrix, chunk_rows: int = 2**15) -> int:
    """Minimum weight over all nonzero codewords, by enumeration."""
    gen = code.basis() if isinstance(code, TwoPointCode) else row_basis(code)
    F = gen.field
    k, n = gen.shape
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    if F.q**k > ENUMERATION_LIMIT:
        raise TooLargeToEnumerate(f"{F.q}^{k} codewords exceeds {ENUMERATION_LIMIT}")
    G = gen.data
    # all combinations of the first `head` rows, then sweep the rest
    head = 1
    while head < k and F.q ** (head + 1) <= chunk_rows:
        head += 1
    coeffs = np.array(list(itertools.product(range(F.q), repeat=head)), dtype=np.int64)
    block = _matmul_array(F, coeffs, G[:head])
    best = n + 1
    for tail in itertools.product(range(F.q), repeat=k - head):
        offset = np.zeros(n, dtype=np.int64)
        for c, row in zip(tail, G[head:]):
            if c:
                offset = F.add(offset, F.mul(c, row))
        words = F.add(block, offset[None, :])
        weights = np.count_nonzero(words, axis=1)
        if not any(tail):
            weights = weights[1:]
        best = min(best, int(weights.min()))
    return best


def _as_gen(c: TwoPointCode | GFMatrix) -> GFMatrix:
    return c.basis() if isinstance(c, TwoPointCode) else row_basis(c)


def find_isometry(pairs: Sequence[tuple[TwoPointCode | GFMatrix, TwoPointCode | GFMatrix]]
                  ) -> list[FieldElement] | None:
    """One x with A_i = x * B_i for every pair, all x_j nonzero, or None.

    x * B_i <= A_i is linear in x: H_i (x . g) = 0 for each parity row set
    H_i of A_i and generator g of B_i. The joint solution space is narrowed
    pair by pair, then searched in canonical order for a vector without zero
    coordinates. Equal dimensions turn the inclusion into equality.
    """
    if not pairs:
        raise ValueError("no code pairs given")
    gens = [(_as_gen(a), _as_gen(b)) for a, b in pairs]
    F = gens[0][0].field
    n = gens[0][0].cols
    for a, b in gens:
        if a.field != F or b.field != F or a.cols != n or b.cols != n:
            raise ValueError("all codes must share a field and length")
        if a.rows != b.rows:
            return None
    # solution space as rows of `space`; start from all of F^n
    space = np.eye(n, dtype=np.int64)
    order = sorted(range(len(gens)), key=lambda i: (n - gens[i][0].rows) * gens[i][1].rows)
    for i in order:
        a, b = gens[i]
        parity = _nullspace_array(F, a.data)
        if parity.shape[0] == 0 or b.rows == 0:
            continue
        # column d of the system: all entries of H_i (space_d . g)^T
        cols = []
        for v in space:
            scaled = F.mul(b.data, v[None, :])
            cols.append(_matmul_array(F, parity, scaled.T).ravel())
        system = np.array(cols, dtype=np.int64).T
        coef = _nullspace_array(F, system)
        if coef.shape[0] == 0:
            return None
        space = _matmul_array(F, coef, space)
    dim = space.shape[0]
    if F.q**dim > ENUMERATION_LIMIT:
        raise InconclusiveSearch(
            f"solution space has dimension {dim}; {F.q}^{dim} candidates exceed {ENUMERATION_LIMIT}")
    for combo in itertools.product(range(F.q), repeat=dim):
        if not any(combo):
            continue
        x = F.sum(F.mul(np.array(combo, dtype=np.int64)[:, None], space), axis=0)
        if np.all(x != 0):
            return [F(int(v)) for v in x]
    return None


def is_isometry(pairs: Sequence[tuple[TwoPointCode | GFMatrix, TwoPointCode | GFMatrix]],
                x: Sequence[FieldElement | int]) -> bool:
    """Direct check that A_i and x * B_i have the same row space for all i."""
    if any(int(v) == 0 for v in x):
        return False
    for a, b in pairs:
        ga, gb = _as_gen(a), _as_gen(b)
        if not rowspace_equal(ga, scale_columns(gb, x)):
            return False
    return True
