"""Exact arithmetic in finite fields F_q, q = p^n.

An element is stored as an integer code ``0 <= v < q`` whose base-p digits
are the coefficients of its residue polynomial, lowest degree first.  The
:class:`Field` methods ``add``, ``mul``, ``neg``, ... accept plain codes or
integer numpy arrays of codes, which is what the linear algebra and group
algebra layers use.  :class:`FieldElement` is the user-facing wrapper.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

MAX_ORDER = 2**31
# log/exp tables are built for extension fields up to this order
LOG_TABLE_LIMIT = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p**n``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = ps[0]
    n = 0
    while q > 1:
        q //= p
        n += 1
    return p, n


# -- dense polynomial helpers over F_p (low degree first), used only to pick
# -- and test the defining modulus


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, m, p)


def _ppowmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(list(a), m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return _pmod(result, m, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible_mod_p(f: list[int], p: int) -> bool:
    n = len(f) - 1
    if n == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(1, n // 2 + 1):
        h = _ppowmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, diff, p)
        if len(g) > 1:
            return False
    return True


def _least_irreducible(p: int, n: int) -> tuple[int, ...]:
    # lexicographic order on (c_0, ..., c_{n-1}), low degree first
    for low in itertools.product(range(p), repeat=n):
        f = list(low) + [1]
        if n > 1 and low[0] == 0:
            continue
        if _is_irreducible_mod_p(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """The finite field F_{p^n} modelled as F_p[x]/(modulus)."""

    def __init__(self, p: int, n: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        if p**n > MAX_ORDER:
            raise OverflowError(f"field order {p}^{n} exceeds 2^31")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not _is_irreducible_mod_p(list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.n = n
        self.modulus = modulus
        self.q = p**n
        self._powers = np.array([p**i for i in range(n)], dtype=np.int64)

    # -- identity -------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.n == other.n
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"

    # -- element construction ------------------------------------------

    def __call__(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field != self:
                raise ValueError("element belongs to a different field")
            return x
        if isinstance(x, (int, np.integer)):
            return FieldElement(self, int(x) % self.p)
        coeffs = list(x)
        if len(coeffs) > self.n:
            raise ValueError("too many coefficients")
        return FieldElement(self, self.encode(coeffs))

    def from_code(self, v: int) -> FieldElement:
        v = int(v)
        if not 0 <= v < self.q:
            raise ValueError(f"code {v} out of range for {self!r}")
        return FieldElement(self, v)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """Class of x in F_p[x]/(modulus)."""
        return FieldElement(self, self.encode([0, 1]) if self.n > 1 else (-self.modulus[0]) % self.p)

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.q):
            yield FieldElement(self, v)

    def encode(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + int(c) % self.p
        if v >= self.q:
            raise ValueError("coefficient vector longer than extension degree")
        return v

    def decode(self, v: int) -> tuple[int, ...]:
        v = int(v)
        out = []
        for _ in range(self.n):
            v, r = divmod(v, self.p)
            out.append(r)
        return tuple(out)

    # -- vectorized arithmetic on codes ----------------------------------

    def _digits(self, a: np.ndarray) -> np.ndarray:
        return (a[..., None] // self._powers) % self.p

    def _undigits(self, d: np.ndarray) -> np.ndarray:
        return (d * self._powers).sum(axis=-1)

    def add(self, a, b):
        if self.n == 1:
            return (np.asarray(a, dtype=np.int64) + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, dtype=np.int64), b)
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return self._undigits((self._digits(a) + self._digits(b)) % self.p)

    def neg(self, a):
        if self.n == 1:
            return (-np.asarray(a, dtype=np.int64)) % self.p
        if self.p == 2:
            return np.asarray(a, dtype=np.int64).copy()
        return self._undigits((-self._digits(np.asarray(a, dtype=np.int64))) % self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        if self.n == 1:
            return (a * b) % self.p
        if self.q <= LOG_TABLE_LIMIT:
            log, exp = self._log_exp
            a, b = np.broadcast_arrays(a, np.asarray(b, dtype=np.int64))
            out = exp[(log[a] + log[b]) % (self.q - 1)]
            return np.where((a == 0) | (b == 0), 0, out)
        return self._scalar_ufunc(self._mul_scalar, a, b)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.n == 1:
            if a.ndim == 0:
                return np.int64(pow(int(a), -1, self.p))
            return np.vectorize(lambda v: pow(int(v), -1, self.p), otypes=[np.int64])(a)
        if self.q <= LOG_TABLE_LIMIT:
            log, exp = self._log_exp
            return exp[(-log[a]) % (self.q - 1)]
        return self._scalar_ufunc(lambda v: self._pow_scalar(v, self.q - 2), a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        """Square-and-multiply power on codes; negative exponents invert."""
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            a, e = self.inv(a), -e
        result = np.ones_like(a)
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a):
        """The absolute Frobenius a -> a^p."""
        return self.pow(a, self.p)

    def sum(self, a, axis=None):
        a = np.asarray(a, dtype=np.int64)
        if axis is None:
            a, axis = a.ravel(), 0
        if self.n == 1:
            return np.sum(a, axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        digits = self._digits(a)
        return self._undigits(np.sum(digits, axis=axis if axis >= 0 else axis - 1) % self.p)

    # -- scalar fallback for large extension fields ----------------------

    def _mul_scalar(self, a: int, b: int) -> int:
        pa = list(self.decode(a))
        pb = list(self.decode(b))
        return self.encode(_pmulmod(pa, pb, list(self.modulus), self.p) or [0])

    def _pow_scalar(self, a: int, e: int) -> int:
        r = _ppowmod(list(self.decode(a)), e, list(self.modulus), self.p)
        return self.encode(r or [0])

    def _scalar_ufunc(self, fn, *args):
        vec = np.vectorize(lambda *xs: fn(*map(int, xs)), otypes=[np.int64])
        return vec(*args)

    @cached_property
    def _log_exp(self) -> tuple[np.ndarray, np.ndarray]:
        g = self._primitive_code()
        exp = np.zeros(self.q - 1, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        v = 1
        for i in range(self.q - 1):
            exp[i] = v
            log[v] = i
            v = self._mul_scalar(v, g)
        return log, exp

    def _primitive_code(self) -> int:
        factors = prime_factors(self.q - 1)
        for g in range(2, self.q):
            if all(self._pow_scalar(g, (self.q - 1) // r) != 1 for r in factors):
                return g
        return 1  # q == 2

    def primitive_element(self) -> FieldElement:
        """A generator of the cyclic group F_q^*."""
        if self.n == 1:
            factors = prime_factors(self.q - 1)
            for g in range(1, self.q):
                if all(pow(g, (self.q - 1) // r, self.q) != 1 for r in factors):
                    return FieldElement(self, g)
        return FieldElement(self, self._primitive_code())


@functools.lru_cache(maxsize=None)
def make_field(p: int, n: int = 1) -> Field:
    """Return F_{p^n} built on the lexicographically least monic irreducible.

    Coefficients are compared lowest degree first, so F_9 is F_3[x]/(x^2+1).
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if p**n > MAX_ORDER:
        raise OverflowError(f"field order {p}^{n} exceeds 2^31")
    return Field(p, n, _least_irreducible(p, n))


def field_of_order(q: int) -> Field:
    p, n = prime_power(q)
    return make_field(p, n)


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.decode(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("operands belong to different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def _wrap(self, v) -> FieldElement:
        return FieldElement(self.field, int(v))

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.div(self.value, o))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, int(e)))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def frobenius(self) -> FieldElement:
        return self._wrap(self.field.frobenius(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        if self.field.n > 1 and self.value >= self.field.p:
            raise TypeError("element is not in the prime field")
        return self.value

    def __str__(self):
        if self.field.n == 1:
            return str(self.value)
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"

    def __repr__(self):
        return f"{self!s} in {self.field!r}"


# module-level conveniences mirroring the element methods


def add(a: FieldElement, b) -> FieldElement:
    return a + b


def mul(a: FieldElement, b) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def frobenius(a: FieldElement) -> FieldElement:
    return a.frobenius()
