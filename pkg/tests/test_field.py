import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from agflag.field import (FieldMismatch, NotPrime, TooLarge, enumerate_elements, field_arith,
                          is_irreducible, kummer_fiber, make_field)

SMALL = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 1)]


def test_gf4_modulus_is_the_unique_irreducible_quadratic():
    F = make_field(2, 2)
    assert F.modulus == (1, 1, 1)
    assert F.q == 4


def test_gf8_has_eight_elements():
    assert len(enumerate_elements(make_field(2, 3))) == 8


def test_gf64_generator_order_by_brute_multiplication():
    F = make_field(2, 6)
    g = F.generator
    x, order = g, 1
    while x != F.one:
        x = x * g
        order += 1
    assert order == 63


def test_modulus_is_smallest_primitive_candidate():
    # brute force: all monic polynomials with a nonzero constant term, in encoding order
    for p, k in [(2, 3), (3, 2), (2, 4), (2, 6)]:
        F = make_field(p, k)
        for low in range(p**k):
            coeffs = [(low // p**i) % p for i in range(k)] + [1]
            if coeffs[0] == 0 or not is_irreducible(coeffs, p):
                continue
            # root x is primitive iff powers of x hit every nonzero residue
            G = type(F)(p, k, coeffs)
            if len({int(G.generator**e) for e in range(p**k - 1)}) == p**k - 1:
                assert tuple(coeffs) == F.modulus
                break


def test_make_field_errors():
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(TooLarge):
        make_field(2, 21)


def test_gf4_primitive_cubed_is_one():
    F = make_field(2, 2)
    g = F.generator
    assert g * g * g == F.one


def test_gf8_inverses():
    F = make_field(2, 3)
    for x in F.elements()[1:]:
        assert field_arith("mul", field_arith("inv", x), x) == F.one


def test_gf64_frobenius_exhaustive():
    F = make_field(2, 6)
    assert all(x**64 == x for x in F.elements())


def test_division_by_zero():
    F = make_field(3, 2)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        field_arith("inv", F.zero)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        make_field(2, 2).one + make_field(2, 3).one


def test_enumeration_order_and_bijection():
    for p, k in SMALL:
        F = make_field(p, k)
        els = enumerate_elements(F)
        assert [e.value for e in els] == list(range(F.q))
        assert len(set(els)) == F.q
        assert els[0] == F.zero
        for e in els:
            assert sum(c * p**i for i, c in enumerate(e.coeffs)) == e.value


def test_gf2_and_gf4_enumeration():
    assert [e.value for e in enumerate_elements(make_field(2))] == [0, 1]
    assert len(set(enumerate_elements(make_field(2, 2)))) == 4


def test_gf8_trace_zero_elements():
    F = make_field(2, 3)
    zeros = [x for x in F.elements() if x**4 + x**2 + x == F.zero]
    assert len(zeros) == 4


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_axioms_all_triples(p, k):
    F = make_field(p, k)
    els = F.elements()
    for x, y, z in itertools.product(els, repeat=3):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
    for x, y in itertools.product(els, repeat=2):
        assert x + y == y + x and x * y == y * x
        assert (x - y) + y == x


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(2, 6), (3, 3), (5, 2), (2, 10), (7, 2)]), st.data())
def test_axioms_random_triples(pk, data):
    F = make_field(*pk)
    x, y, z = (F(data.draw(st.integers(0, F.q - 1))) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x**F.q == x
    assert (x + y) ** F.p == x**F.p + y**F.p
    if x:
        assert x ** (F.q - 1) == F.one
        assert x / x == F.one


@pytest.mark.parametrize("p,k", [(2, 4), (3, 2), (5, 1), (3, 3)])
def test_vectorised_kernels_match_scalar(p, k):
    F = make_field(p, k)
    a, b = np.meshgrid(np.arange(F.q), np.arange(F.q))
    add, mul = F.add(a, b), F.mul(a, b)
    for x, y in itertools.product(range(F.q), repeat=2):
        assert add[y, x] == (F(x) + F(y)).value
        assert mul[y, x] == (F(x) * F(y)).value
    assert np.array_equal(F.sub(a, b), F.add(a, F.neg(b)))
    rows = np.arange(F.q).reshape(1, -1).repeat(3, axis=0)
    total = F.zero
    for v in range(F.q):
        total = total + F(v)
    assert np.all(F.sum(rows, axis=1) == total.value)


def test_kummer_fiber_examples():
    F = make_field(2, 3)
    assert kummer_fiber(F, 7, F.one) == frozenset(F.elements()[1:])
    assert kummer_fiber(F, 7, F.generator) == frozenset()
    for pk in [(2, 2), (3, 2), (2, 6)]:
        G = make_field(*pk)
        assert kummer_fiber(G, 3, G.zero) == frozenset([G.zero])


@pytest.mark.parametrize("p,k,m", [(2, 4, 5), (2, 4, 3), (3, 2, 4), (2, 6, 9), (2, 3, 3)])
def test_kummer_fiber_sizes(p, k, m):
    from math import gcd

    F = make_field(p, k)
    d = gcd(m, F.q - 1)
    mth_powers = {y**m for y in F.elements()[1:]}
    for c in F.elements()[1:]:
        fib = kummer_fiber(F, m, c)
        assert len(fib) == (d if c in mth_powers else 0)
        assert all(y**m == c for y in fib)
