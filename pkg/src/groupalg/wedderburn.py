"""Semisimple group algebras: simple components and unit groups.

Two independent routes count the simple components of F_q[G] when
p does not divide |G|:

* combinatorially, as the number of F_q-conjugacy classes of p-regular
  elements (orbits of g -> h^-1 g^t h with t in the cyclic group <q> mod m);
* algebraically, by splitting the identity of the center into primitive
  central idempotents using minimal polynomials and their factorizations.

From the idempotents each component's size n_i and center degree d_i are
read off as dimensions, giving F_q[G] ~ sum of M(n_i, F_{q^d_i}).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import grp, linalg
from .algebra import AlgebraElement, GroupAlgebra, Subspace, center_basis, is_semisimple
from .gf import field_of_order, prime_power
from .grp import Group
from .poly import Polynomial, factor, inverse_mod, min_poly


# -- F-conjugacy -------------------------------------------------------------


def t_group(q: int, m: int) -> list[int]:
    """Residues {q^s mod m}; the automorphisms eta -> eta^t of F_q(eta)."""
    if math.gcd(q, m) != 1:
        raise ValueError(f"gcd({q}, {m}) != 1")
    if m == 1:
        return [0]
    out = {1}
    t = q % m
    while t not in out:
        out.add(t)
        t = t * q % m
    return sorted(out)


@dataclass(frozen=True)
class FConjPartition:
    m: int
    T: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def c(self) -> int:
        return len(self.classes)


def f_conjugacy(G: Group, p: int, q: int) -> FConjPartition:
    """Partition the p-regular elements of G into F_q-conjugacy classes."""
    if prime_power(q)[0] != p:
        raise ValueError(f"{q} is not a power of {p}")
    orders = grp.element_orders(G)
    regular = [g for g in range(G.size) if math.gcd(int(orders[g]), p) == 1]
    m = math.lcm(*(int(orders[g]) for g in regular))
    T = t_group(q, m)
    idx = np.arange(G.size)
    seen = set()
    classes = []
    for g in regular:
        if g in seen:
            continue
        orbit = set()
        for t in T:
            gt = int(G.power(g, t if m > 1 else 1))
            orbit.update(int(x) for x in G.conj(gt, idx))
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    return FConjPartition(m, tuple(T), tuple(sorted(classes)))


def class_fixing_residues(G: Group, m: int) -> list[int]:
    """Units t mod m with g^t conjugate to g for every g of order dividing m."""
    classes = grp.conjugacy_classes(G)
    label = np.empty(G.size, dtype=np.int64)
    for i, c in enumerate(classes):
        label[c] = i
    orders = grp.element_orders(G)
    els = np.flatnonzero(m % orders == 0)
    out = []
    for t in range(1, m + 1):
        if math.gcd(t, m) != 1:
            continue
        if np.array_equal(label[G.power(els, t)], label[els]):
            out.append(t % m)
    return sorted(out)


def l_value(q: int, m: int, fixing: Iterable[int] | None = None) -> int:
    """Least l >= 1 with q^l mod m in ``fixing``.

    ``fixing`` is the set of residues acting trivially on the class sums
    (see :func:`class_fixing_residues`).  The default is the set for
    QD_{2m}, {1, m/2 - 1}, when m is a power of two >= 8, and {1} otherwise.
    """
    if fixing is None:
        fixing = (1, m // 2 - 1) if m >= 8 and m & (m - 1) == 0 else (1,)
    if math.gcd(q, m) != 1:
        raise ValueError(f"gcd({q}, {m}) != 1")
    fixing = {t % m for t in fixing}
    t, l = q % m, 1
    while t not in fixing:
        t = t * q % m
        l += 1
        if l > m:
            raise ValueError("no power of q lands in the fixing set")
    return l


def l_value_plus_minus(q: int, m: int) -> int:
    """Least l >= 1 with m | q^l - 1 or m | q^l + 1."""
    return l_value(q, m, (1, m - 1))


# -- central idempotents -------------------------------------------------------


@dataclass(frozen=True)
class IdempotentDecomposition:
    idempotents: tuple[AlgebraElement, ...]
    component_dims: tuple[int, ...]
    field_degrees: tuple[int, ...]

    def __len__(self):
        return len(self.idempotents)


def _block_center(A: GroupAlgebra, Z: np.ndarray, e: np.ndarray) -> Subspace:
    return Subspace(A, A.mul_vectors(Z, e[None, :]))


def _frobenius_fixed_dim(A: GroupAlgebra, block: Subspace) -> tuple[int, np.ndarray]:
    """Dimension and basis of {u in block : u^q = u}, i.e. the Berlekamp subalgebra."""
    F = A.field
    B = block.basis
    images = A.power_vectors(B, F.q)
    # coordinates of images in the RREF basis are their pivot entries
    coords = images[:, block.pivots]
    minus_id = F.sub(coords, np.eye(len(B), dtype=np.int64))
    kernel = linalg.nullspace(F, minus_id.T)
    return kernel.shape[0], linalg.matmul(F, kernel, B) if kernel.shape[0] else kernel


def _poly_at(A: GroupAlgebra, f: Polynomial, z: np.ndarray, e: np.ndarray) -> np.ndarray:
    """f(z) inside the block with identity e (Horner)."""
    F = A.field
    acc = np.zeros(A.dim, dtype=np.int64)
    for c in reversed(f.codes):
        acc = F.add(A.mul_vectors(acc, z), F.mul(e, c))
    return acc


def _split(A: GroupAlgebra, z: np.ndarray, e: np.ndarray, seed: int) -> list[np.ndarray] | None:
    F = A.field
    m = min_poly(F, e, lambda v: A.mul_vectors(z, v))
    factors = factor(m, seed=seed)
    if len(factors) < 2:
        return None
    if any(mult > 1 for _, mult in factors):
        raise ArithmeticError("minimal polynomial of a central element is not squarefree")
    parts = []
    for f, _ in factors:
        cof = m // f
        E = (cof * inverse_mod(cof, f)) % m
        parts.append(_poly_at(A, E, z, e))
    return parts


def central_idempotents(A: GroupAlgebra, seed: int = 0) -> IdempotentDecomposition:
    """Primitive central idempotents of a semisimple group algebra."""
    if not is_semisimple(A):
        raise ValueError("central_idempotents needs p not dividing |G|")
    F = A.field
    Z = np.array([z.coeffs for z in center_basis(A)])
    pending = [A.one.coeffs]
    final: list[np.ndarray] = []
    while pending:
        e = pending.pop()
        block = _block_center(A, Z, e)
        if block.rank == 1:
            final.append(e)
            continue
        k, berlekamp = _frobenius_fixed_dim(A, block)
        if k == 1:
            # the block center is a field
            final.append(e)
            continue
        parts = None
        for z in list(block.basis) + list(berlekamp):
            parts = _split(A, z, e, seed)
            if parts is not None:
                break
        if parts is None:
            raise ArithmeticError("failed to split a non-field block")
        pending.extend(parts)

    comps = []
    for e in final:
        dim_comp = Subspace(A, A.mul_vectors(np.eye(A.dim, dtype=np.int64), e[None, :])).rank
        deg = _block_center(A, Z, e).rank
        comps.append((deg, dim_comp, tuple(int(v) for v in e)))
    comps.sort()
    return IdempotentDecomposition(
        idempotents=tuple(AlgebraElement(A, c[2]) for c in comps),
        component_dims=tuple(c[1] for c in comps),
        field_degrees=tuple(c[0] for c in comps),
    )


def idempotent_identities(A: GroupAlgebra, dec: IdempotentDecomposition) -> dict[str, bool]:
    """Exact checks: each e_i is a central idempotent, e_i e_j = 0 for i != j, sum e_i = 1."""
    E = np.array([e.coeffs for e in dec.idempotents], dtype=np.int64)
    F = A.field
    prods = A.outer_products(E, E).reshape(len(E), len(E), A.dim)
    r = np.arange(len(E))
    idempotent = bool(np.array_equal(prods[r, r], E))
    off = ~np.eye(len(E), dtype=bool)
    orthogonal = bool(not prods[off].any())
    complete = bool(np.array_equal(F.sum(E, axis=0), A.one.coeffs))
    central = bool(np.array_equal(A.left_translates(E), A.right_translates(E)))
    return {"idempotent": idempotent, "orthogonal": orthogonal, "complete": complete, "central": central}


# -- shapes -----------------------------------------------------------------------


@dataclass(frozen=True)
class WedderburnShape:
    """Multiset of components M(n, F_{q^d}), as (n, d) pairs sorted by (d, n)."""

    components: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple(sorted(((int(n), int(d)) for n, d in self.components), key=lambda c: (c[1], c[0])))
        )

    @property
    def dimension(self) -> int:
        return sum(n * n * d for n, d in self.components)

    @property
    def center_dimension(self) -> int:
        return sum(d for _, d in self.components)

    @property
    def S(self) -> tuple[int, ...]:
        """Degrees [K_i : F_q] of the non-commutative components."""
        return tuple(sorted(d for n, d in self.components if n > 1))

    @property
    def commutative_count(self) -> int:
        return sum(1 for n, _ in self.components if n == 1)

    def counts(self) -> list[tuple[int, int, int]]:
        """(n, d, multiplicity) in canonical order."""
        c = Counter(self.components)
        return [(n, d, c[(n, d)]) for n, d in sorted(c, key=lambda x: (x[1], x[0]))]

    def __str__(self):
        parts = []
        for n, d, k in self.counts():
            f = "F_q" if d == 1 else f"F_q^{d}"
            s = f if n == 1 else f"M({n},{f})"
            parts.append(s if k == 1 else f"{s}^{k}")
        return " + ".join(parts)


def _isqrt_exact(x: int) -> int:
    r = math.isqrt(x)
    if r * r != x:
        raise ArithmeticError(f"{x} is not a perfect square: non-split component")
    return r


def shape_from_decomposition(dec: IdempotentDecomposition) -> WedderburnShape:
    comps = []
    for dim, d in zip(dec.component_dims, dec.field_degrees):
        if dim % d:
            raise ArithmeticError("component dimension not divisible by its center degree")
        comps.append((_isqrt_exact(dim // d), d))
    return WedderburnShape(tuple(comps))


def wedderburn_shape(A: GroupAlgebra, seed: int = 0) -> WedderburnShape:
    """Shape of F_q[G] read from its primitive central idempotents."""
    return shape_from_decomposition(central_idempotents(A, seed))


def gl_order(n: int, Q: int) -> int:
    """|GL(n, Q)| = prod_{t<n} (Q^n - Q^t)."""
    return math.prod(Q**n - Q**t for t in range(n))


def unit_group_order(shape: WedderburnShape, q: int) -> int:
    return math.prod(gl_order(n, q**d) for n, d in shape.components)


def unit_group_structure(shape: WedderburnShape, q: int) -> str:
    """Formal product of GL(n_i, q^d_i), with GL(1, Q) written C_{Q-1}."""
    parts = []
    for n, d, k in shape.counts():
        Q = q**d
        s = f"C_{Q - 1}" if n == 1 else f"GL({n},{Q})"
        parts.append(s if k == 1 else f"{s}^{k}")
    return " x ".join(parts)


# -- cross-checks --------------------------------------------------------------------


def witt_berman_crosscheck(A: GroupAlgebra, seed: int = 0) -> bool:
    """F-conjugacy class count equals the number of primitive central idempotents."""
    part = f_conjugacy(A.group, A.field.p, A.field.q)
    return part.c == len(central_idempotents(A, seed))


def _degree_lcm(shape: WedderburnShape) -> int:
    # q^s fixes the whole center iff every d_i divides s; for QD groups the
    # commutative d_i are all 1, so this is also the lcm over n_i > 1
    return math.lcm(*(d for _, d in shape.components))


def l_criterion(A: GroupAlgebra, seed: int = 0) -> tuple[int, int]:
    """(l, lcm of all d_i) for comparison."""
    G = A.group
    part = f_conjugacy(G, A.field.p, A.field.q)
    l = l_value(A.field.q, part.m, class_fixing_residues(G, part.m))
    return l, _degree_lcm(wedderburn_shape(A, seed))


def abelianization_consistency(A: GroupAlgebra, seed: int = 0) -> bool:
    """Commutative components of F_q[G] correspond to the components of F_q[G/G']."""
    G = A.group
    Gab, _ = grp.quotient(G, grp.commutator_subgroup(G))
    Aab = GroupAlgebra(A.field, Gab)
    ours = sorted(d for n, d in wedderburn_shape(A, seed).components if n == 1)
    theirs = sorted(d for _, d in wedderburn_shape(Aab, seed).components)
    return ours == theirs


def degree_multiset_from_l(q: int, G: Group, shape: WedderburnShape) -> dict:
    """Diagnostic: the l-value against the lcm of the shape's degrees."""
    orders = grp.element_orders(G)
    p = prime_power(q)[0]
    m = math.lcm(*(int(o) for o in orders if math.gcd(int(o), p) == 1))
    l = l_value(q, m, class_fixing_residues(G, m))
    lcm = _degree_lcm(shape)
    return {"m": m, "l": l, "lcm": lcm, "agrees": l == lcm}


def semisimple_algebra(q: int, G: Group) -> GroupAlgebra:
    return GroupAlgebra(field_of_order(q), G)
