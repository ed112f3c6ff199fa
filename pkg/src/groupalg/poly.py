"""Univariate polynomials over F_q and their complete factorization."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import numpy as np

from . import linalg
from .gf import Field, FieldElement

# root scanning replaces random splitting for linear factors up to this q
ROOT_SCAN_LIMIT = 4096


class Polynomial:
    """Polynomial with coefficients stored as field codes, lowest degree first.

    The coefficient tuple never ends in a zero; the zero polynomial has
    an empty tuple and degree -1.
    """

    __slots__ = ("field", "_c")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        self.field = field
        c = [field(x).value if isinstance(x, FieldElement) else int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def from_elements(cls, coeffs: Sequence[FieldElement]) -> Polynomial:
        if not coeffs:
            raise ValueError("cannot infer the field of an empty coefficient list")
        F = coeffs[0].field
        return cls(F, [F(c).value for c in coeffs])

    @classmethod
    def x(cls, field: Field) -> Polynomial:
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: Field, c: int = 1) -> Polynomial:
        return cls(field, (c,))

    # -- basic accessors -----------------------------------------------

    @property
    def codes(self) -> tuple[int, ...]:
        return self._c

    @property
    def coeffs(self) -> list[FieldElement]:
        return [self.field.from_code(v) for v in self._c]

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def lead(self) -> int:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == (1,)

    def monic(self) -> Polynomial:
        if not self._c or self._c[-1] == 1:
            return self
        inv = int(self.field.inv(self._c[-1]))
        return Polynomial(self.field, self.field.mul(np.array(self._c), inv))

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.field == other.field and self._c == other._c

    def __hash__(self):
        return hash((self.field, self._c))

    def __lt__(self, other: Polynomial):
        return (self.degree, self._c[::-1]) < (other.degree, other._c[::-1])

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            cs = str(self.field.from_code(c))
            if self.field.n > 1 and "+" in cs:
                cs = f"({cs})"
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)

    # -- ring operations -----------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, FieldElement):
            return Polynomial(self.field, (self.field(other).value,))
        if isinstance(other, (int, np.integer)):
            return Polynomial(self.field, (int(other) % self.field.p,))
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def _arr(self, length: int) -> np.ndarray:
        a = np.zeros(length, dtype=np.int64)
        a[: len(self._c)] = self._c
        return a

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self._c), len(other._c))
        return Polynomial(self.field, self.field.add(self._arr(n), other._arr(n)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, self.field.neg(np.array(self._c, dtype=np.int64)))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self._c or not other._c:
            return Polynomial(self.field)
        F = self.field
        a = np.array(self._c, dtype=np.int64)
        out = np.zeros(len(self._c) + len(other._c) - 1, dtype=np.int64)
        for j, b in enumerate(other._c):
            if b:
                seg = slice(j, j + len(a))
                out[seg] = F.add(out[seg], F.mul(a, b))
        return Polynomial(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self._c)
        dq = len(r) - len(other._c)
        if dq < 0:
            return Polynomial(F), self
        quot = [0] * (dq + 1)
        inv_lead = int(F.inv(other.lead))
        b = np.array(other._c, dtype=np.int64)
        r = np.array(r, dtype=np.int64)
        for k in range(dq, -1, -1):
            c = int(F.mul(r[k + len(b) - 1], inv_lead))
            if c:
                quot[k] = c
                seg = slice(k, k + len(b))
                r[seg] = F.sub(r[seg], F.mul(b, c))
        return Polynomial(F, quot), Polynomial(F, r[: len(b) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        result = Polynomial.constant(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def powmod(self, e: int, m: Polynomial) -> Polynomial:
        result = Polynomial.constant(self.field)
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result % m

    def derivative(self) -> Polynomial:
        F = self.field
        return Polynomial(F, [int(F.mul(c, i % F.p)) for i, c in enumerate(self._c)][1:])

    def __call__(self, x):
        """Evaluate at a field element (Horner)."""
        F = self.field
        v = F(x).value if not isinstance(x, (int, np.integer)) else int(x) % F.p
        acc = 0
        for c in reversed(self._c):
            acc = int(F.add(F.mul(acc, v), c))
        return F.from_code(acc)

    def eval_codes(self, xs: np.ndarray) -> np.ndarray:
        F = self.field
        acc = np.zeros_like(np.asarray(xs, dtype=np.int64))
        for c in reversed(self._c):
            acc = F.add(F.mul(acc, xs), c)
        return acc


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(g, s, t)`` with ``s a + t b = g`` and g monic."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial.constant(F), Polynomial(F)
    t0, t1 = Polynomial(F), Polynomial.constant(F)
    while not r1.is_zero():
        qt, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = Polynomial.constant(F, int(F.inv(r0.lead)))
    return r0 * inv, s0 * inv, t0 * inv


def inverse_mod(a: Polynomial, m: Polynomial) -> Polynomial:
    g, s, _ = xgcd(a % m, m)
    if not g.is_one():
        raise ZeroDivisionError("polynomial is not invertible modulo m")
    return s % m


def _pth_root(f: Polynomial) -> Polynomial:
    # f' = 0, so f(x) = g(x^p); coefficients get the inverse Frobenius a^(q/p)
    F = f.field
    e = F.q // F.p
    codes = [int(F.pow(c, e)) for c in f.codes[:: F.p]]
    return Polynomial(F, codes)


def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Pairs ``(g, m)`` of coprime squarefree monic g with ``f = lc * prod g^m``."""
    F = f.field
    f = f.monic()
    if f.degree <= 0:
        return []
    out: list[tuple[Polynomial, int]] = []
    fp = f.derivative()
    if fp.is_zero():
        return [(g, m * F.p) for g, m in squarefree_decomposition(_pth_root(f))]
    c = gcd(f, fp)
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        out.extend((g, m * F.p) for g, m in squarefree_decomposition(_pth_root(c)))
    return out


def distinct_degree_factorization(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Split squarefree monic f into products of irreducibles of equal degree."""
    F = f.field
    x = Polynomial.x(F)
    out = []
    rest = f
    h = x % rest if rest.degree > 0 else x
    d = 1
    while rest.degree >= 2 * d:
        h = h.powmod(F.q, rest)
        g = gcd(rest, h - x)
        if not g.is_one():
            out.append((g, d))
            rest = rest // g
            h = h % rest
        d += 1
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _random_poly(F: Field, deg: int, rng: np.random.Generator) -> Polynomial:
    return Polynomial(F, rng.integers(0, F.q, size=deg))


def equal_degree_factorization(
    f: Polynomial, d: int, rng: np.random.Generator
) -> list[Polynomial]:
    """Irreducible factors of f, a squarefree product of degree-d irreducibles."""
    F = f.field
    if f.degree == d:
        return [f]
    if d == 1 and F.q <= ROOT_SCAN_LIMIT:
        roots = np.flatnonzero(f.eval_codes(np.arange(F.q)) == 0)
        return [Polynomial(F, (int(F.neg(r)), 1)) for r in roots]
    while True:
        a = _random_poly(F, f.degree, rng)
        if a.degree <= 0:
            continue
        if F.p == 2:
            # absolute trace to F_2 of F_{q^d}
            t = a % f
            acc = t
            for _ in range(F.n * d - 1):
                t = (t * t) % f
                acc = acc + t
            b = acc
        else:
            b = a.powmod((F.q**d - 1) // 2, f) - 1
        g = gcd(f, b)
        if 0 < g.degree < f.degree:
            return equal_degree_factorization(g, d, rng) + equal_degree_factorization(
                f // g, d, rng
            )


def factor(f: Polynomial, seed: int = 0) -> list[tuple[Polynomial, int]]:
    """Complete factorization into monic irreducibles with multiplicities.

    The leading coefficient is dropped; factors are sorted by degree then
    coefficients.  ``seed`` drives the randomized equal-degree splitting.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = np.random.default_rng(seed)
    out = []
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree_factorization(g):
            for irr in equal_degree_factorization(h, d, rng):
                out.append((irr, m))
    return sorted(out, key=lambda t: (t[0], t[1]))


def is_irreducible(f: Polynomial) -> bool:
    """Test via gcd(x^{q^i} - x, f) = 1 for i <= deg f / 2."""
    if f.degree <= 0:
        return False
    F = f.field
    f = f.monic()
    x = Polynomial.x(F)
    h = x % f
    for _ in range(1, f.degree // 2 + 1):
        h = h.powmod(F.q, f)
        if not gcd(f, h - x).is_one():
            return False
    return True


def expand(factors: Sequence[tuple[Polynomial, int]], field: Field) -> Polynomial:
    out = Polynomial.constant(field)
    for g, m in factors:
        out = out * g**m
    return out


def min_poly(
    field: Field, v: np.ndarray, step: Callable[[np.ndarray], np.ndarray]
) -> Polynomial:
    """Least monic m with m(step)(v) = 0, via the Krylov sequence of v."""
    v = np.asarray(v, dtype=np.int64)
    if not v.any():
        return Polynomial.constant(field)
    krylov = [v]
    while True:
        nxt = step(krylov[-1])
        K = np.array(krylov + [nxt])
        # a dependency among v, Av, ..., A^k v with the top coefficient 1
        kernel = linalg.nullspace(field, K.T)
        if kernel.shape[0]:
            # rows of K before this step were independent, so the kernel is 1-d
            c = kernel[0]
            c = field.mul(c, field.inv(c[-1]))
            return Polynomial(field, c)
        krylov.append(nxt)
