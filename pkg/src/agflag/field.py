"""Arithmetic in small finite fields GF(p^k).

Elements are stored by their integer encoding: the coefficient vector of the
representative polynomial read as a base-p number, constant term least
significant. That encoding is also the canonical element order.

Scalar work goes through :class:`FieldElement`; the linear-algebra layer
uses the vectorised methods of :class:`FieldSpec` on integer numpy arrays.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 2**20


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class TooLarge(FieldError):
    pass


class NoIrreducibleFound(FieldError):
    pass


class FieldMismatch(TypeError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, or raise NotPrime."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise NotPrime(f"{p ** e * q} is not a prime power")
    return p, e


# -- polynomials over GF(p), coefficient lists with constant term first ----

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _poly_mod(prod, f, p)


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result: list[int] = [1]
    base = _poly_mod(list(a), f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    for d in {k // s for s in prime_factors(k)}:
        h = _poly_powmod(x, p**d, f, p)
        h = h + [0] * (2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_poly_gcd(list(f), _trim(h), p)) > 1:
            return False
    return _trim(_poly_powmod(x, p**k, f, p)) == [0, 1]


def _root_is_primitive(f: Sequence[int], p: int) -> bool:
    k = len(f) - 1
    order = p**k - 1
    x = [0, 1]
    if order == 1:
        return True
    return all(_poly_powmod(x, order // s, f, p) != [1] for s in prime_factors(order))


def _decode(value: int, p: int, k: int) -> tuple[int, ...]:
    digits = []
    for _ in range(k):
        value, d = divmod(value, p)
        digits.append(d)
    return tuple(digits)


def _encode(coeffs: Iterable[int], p: int) -> int:
    value, mult = 0, 1
    for c in coeffs:
        value += (c % p) * mult
        mult *= p
    return value


class FieldSpec:
    """GF(p^k) with a fixed primitive modulus; immutable after construction."""

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus)
        self._build_tables()
        self.generator = FieldElement(self, int(self._exp[1 % (self.q - 1)]))

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        exp = np.zeros(max(q - 1, 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        if k == 1:
            g = next(c for c in range(1, p) if _root_is_primitive([-c % p, 1], p))
            cur = 1
            for i in range(q - 1):
                exp[i] = cur
                log[cur] = i
                cur = cur * g % p
        elif p == 2:
            full = _encode(self.modulus, 2)
            cur = 1
            for i in range(q - 1):
                exp[i] = cur
                log[cur] = i
                cur <<= 1
                if cur & q:
                    cur ^= full
        else:
            # multiply by x, the primitive root of the modulus
            low = [(-c) % p for c in self.modulus[:-1]]
            cur = [1] + [0] * (k - 1)
            weights = [p**i for i in range(k)]
            for i in range(q - 1):
                v = sum(c * w for c, w in zip(cur, weights))
                exp[i] = v
                log[v] = i
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [(c + top * lc) % p for c, lc in zip(cur, low)]
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        self._powers = [p**i for i in range(k)]

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.k == other.k and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __call__(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        if isinstance(value, FieldElement):
            self.check(value)
            return value
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if not 0 <= value < self.q:
                raise FieldError(f"encoding {value} outside [0, {self.q})")
            return FieldElement(self, value)
        coeffs = list(value)
        if len(coeffs) > self.k:
            raise FieldError(f"{len(coeffs)} coefficients for a degree-{self.k} extension")
        return FieldElement(self, _encode(coeffs, self.p))

    def check(self, x: FieldElement) -> None:
        if x.field is not self and x.field != self:
            raise FieldMismatch(f"element of {x.field} used with {self}")

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    # -- scalar kernels on encodings ---------------------------------------

    def _encode_int(self, n: int) -> int:
        # integers act through the prime subfield
        return n % self.p

    def _add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        for w in self._powers:
            out += ((a // w + b // w) % p) * w
        return out

    def _neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        for w in self._powers:
            out += ((-(a // w)) % p) * w
        return out

    def _mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_list[(self._log_list[a] + self._log_list[b]) % (self.q - 1)]

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp_list[(-self._log_list[a]) % (self.q - 1)]

    def _pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp_list[(self._log_list[a] * e) % (self.q - 1)]

    # -- vectorised kernels on integer arrays -------------------------------

    def add(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        for w in self._powers:
            out += ((a // w + b // w) % p) * w
        return out

    def neg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        out = np.zeros_like(a)
        for w in self._powers:
            out += ((-(a // w)) % p) * w
        return out

    def sub(self, a, b) -> np.ndarray:
        return self.add(a, self.neg(b))

    def mul(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def power(self, a, e) -> np.ndarray:
        """Elementwise a**e; 0**0 = 1, negative powers of 0 are an error."""
        a, e = np.asarray(a, dtype=np.int64), np.asarray(e, dtype=np.int64)
        a, e = np.broadcast_arrays(a, e)
        zero = a == 0
        if np.any(zero & (e < 0)):
            raise ZeroDivisionError("negative power of zero")
        out = self._exp[(self._log[a] * e) % (self.q - 1)]
        return np.where(zero, np.where(e == 0, 1, 0), out)

    def sum(self, a, axis: int = 0) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.k == 1:
            return a.sum(axis=axis) % self.p
        p = self.p
        out = None
        for w in self._powers:
            part = ((a // w) % p).sum(axis=axis) % p * w
            out = part if out is None else out + part
        return out


class FieldElement:
    """Element of a :class:`FieldSpec`, identified by its integer encoding."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return _decode(self.value, self.field.p, self.field.k)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            self.field.check(other)
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field._encode_int(int(other))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._add(self.value, o))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._add(self.value, self.field._neg(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._mul(self.value, self.field._inv(o)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field._pow(self.value, int(e)))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field._inv(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.value == self.field._encode_int(int(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __lt__(self, other: FieldElement) -> bool:
        self.field.check(other)
        return self.value < other.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field!r}[{self.value}]"


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldSpec:
    """Build GF(p^k) on the smallest monic irreducible with a primitive root.

    Candidate moduli are scanned in increasing integer encoding of their
    lower coefficients (constant term least significant). Results are cached,
    so equal arguments give the same object.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    if p**k > MAX_ORDER:
        raise TooLarge(f"GF({p}^{k}) exceeds the supported order {MAX_ORDER}")
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    for low in range(p**k):
        f = list(_decode(low, p, k)) + [1]
        if f[0] == 0:
            continue
        if is_irreducible(f, p) and _root_is_primitive(f, p):
            return FieldSpec(p, k, f)
    raise NoIrreducibleFound(f"no primitive polynomial of degree {k} over GF({p})")


def enumerate_elements(spec: FieldSpec) -> list[FieldElement]:
    return spec.elements()


_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "inv": lambda x: x.inverse(),
    "pow": lambda x, e: x**e,
}


def field_arith(op: str, *operands):
    """Dispatch one of add, sub, mul, inv, pow by name."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    elems = [o for o in operands if isinstance(o, FieldElement)]
    for e in elems[1:]:
        elems[0].field.check(e)
    return fn(*operands)


def kummer_fiber(spec: FieldSpec, m: int, c: FieldElement) -> frozenset[FieldElement]:
    """All y in the field with y**m == c."""
    if m < 2:
        raise ValueError("m must be at least 2")
    spec.check(c)
    if c.value == 0:
        return frozenset([spec.zero])
    ys = np.arange(1, spec.q)
    hits = ys[spec.power(ys, m) == c.value]
    return frozenset(FieldElement(spec, int(v)) for v in hits)
