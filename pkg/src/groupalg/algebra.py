"""Group algebras F_q[G] as structure-constant algebras.

Elements are coefficient vectors over the group basis.  Products are
computed through the group table, ``g * h -> table[g, h]``, so a product
of two elements is a sum of |G| permuted, scaled copies of a vector.
Subspaces (ideals, centers, commutator spaces) are kept as RREF row
bases, which makes every dimension claim a rank computation.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from . import grp, linalg
from .gf import Field, FieldElement
from .grp import Group, Subgroup


class GroupAlgebra:
    def __init__(self, field: Field, group: Group):
        self.field = field
        self.group = group
        self.dim = group.size
        self._table = group.table

    def __repr__(self):
        return f"{self.field!r}[group of order {self.dim}]"

    # -- element constructors -------------------------------------------

    def element(self, coeffs) -> AlgebraElement:
        return AlgebraElement(self, coeffs)

    def from_dict(self, terms: dict) -> AlgebraElement:
        """``{group element index or name: coefficient}``."""
        v = np.zeros(self.dim, dtype=np.int64)
        for g, c in terms.items():
            if isinstance(g, str):
                g = self.group.index(g)
            c = self.field(c).value
            v[g] = self.field.add(v[g], c)
        return AlgebraElement(self, v)

    def basis(self, g) -> AlgebraElement:
        if isinstance(g, str):
            g = self.group.index(g)
        v = np.zeros(self.dim, dtype=np.int64)
        v[int(g)] = 1
        return AlgebraElement(self, v)

    @property
    def one(self) -> AlgebraElement:
        return self.basis(self.group.identity)

    @property
    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, np.zeros(self.dim, dtype=np.int64))

    def class_sum(self, cls) -> AlgebraElement:
        v = np.zeros(self.dim, dtype=np.int64)
        v[list(cls)] = 1
        return AlgebraElement(self, v)

    def random_element(self, rng: np.random.Generator) -> AlgebraElement:
        return AlgebraElement(self, rng.integers(0, self.field.q, size=self.dim))

    # -- vectorized kernels on coefficient arrays -----------------------

    def mul_vectors(self, U, W) -> np.ndarray:
        """Products of coefficient arrays ``U`` and ``W`` (broadcast over leading axes)."""
        F = self.field
        U = np.asarray(U, dtype=np.int64)
        W = np.asarray(W, dtype=np.int64)
        shape = np.broadcast_shapes(U.shape, W.shape)
        U = np.broadcast_to(U, shape)
        W = np.broadcast_to(W, shape)
        out = np.zeros(shape, dtype=np.int64)
        if F.n == 1 and F.p < 2**20:
            for g in range(self.dim):
                ug = U[..., g : g + 1]
                if not ug.any():
                    continue
                out[..., self._table[g]] += ug * W
                if g % 512 == 511:
                    out %= F.p
            return out % F.p
        for g in range(self.dim):
            ug = U[..., g : g + 1]
            if not ug.any():
                continue
            cols = self._table[g]
            out[..., cols] = F.add(out[..., cols], F.mul(ug, W))
        return out

    def outer_products(self, B, C) -> np.ndarray:
        """All products ``B[i] * C[j]`` as an array of shape (len B * len C, dim)."""
        B = np.asarray(B, dtype=np.int64)
        C = np.asarray(C, dtype=np.int64)
        return self.mul_vectors(B[:, None, :], C[None, :, :]).reshape(-1, self.dim)

    def left_translates(self, V) -> np.ndarray:
        """``g * v`` for every group element g and row v; shape (|G| * len V, dim)."""
        V = np.asarray(V, dtype=np.int64)
        out = np.zeros((self.dim, V.shape[0], self.dim), dtype=np.int64)
        for g in range(self.dim):
            out[g][:, self._table[g]] = V
        return out.reshape(-1, self.dim)

    def right_translates(self, V) -> np.ndarray:
        V = np.asarray(V, dtype=np.int64)
        out = np.zeros((self.dim, V.shape[0], self.dim), dtype=np.int64)
        for g in range(self.dim):
            out[g][:, self._table[:, g]] = V
        return out.reshape(-1, self.dim)

    def power_vectors(self, U, e: int) -> np.ndarray:
        U = np.asarray(U, dtype=np.int64)
        result = np.zeros_like(U)
        result[..., self.group.identity] = 1
        base = U
        while e:
            if e & 1:
                result = self.mul_vectors(result, base)
            e >>= 1
            if e:
                base = self.mul_vectors(base, base)
        return result


class AlgebraElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: GroupAlgebra, coeffs):
        c = np.array(coeffs, dtype=np.int64).reshape(-1)
        if c.size != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coefficients, got {c.size}")
        if c.size and (c.min() < 0 or c.max() >= algebra.field.q):
            raise ValueError("coefficients must be field codes in [0, q)")
        c.setflags(write=False)
        self.algebra = algebra
        self.coeffs = c

    def _same(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise ValueError("operands belong to different algebras")
            return other
        if isinstance(other, (int, np.integer, FieldElement)):
            return self.algebra.one * other
        return NotImplemented

    def __add__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return AlgebraElement(self.algebra, self.algebra.field.add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return AlgebraElement(self.algebra, self.algebra.field.sub(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return AlgebraElement(self.algebra, self.algebra.field.neg(self.coeffs))

    def __mul__(self, other):
        F = self.algebra.field
        if isinstance(other, (int, np.integer)):
            return AlgebraElement(self.algebra, F.mul(self.coeffs, int(other) % F.p))
        if isinstance(other, FieldElement):
            return AlgebraElement(self.algebra, F.mul(self.coeffs, F(other).value))
        o = self._same(other)
        if o is NotImplemented:
            return o
        return AlgebraElement(self.algebra, self.algebra.mul_vectors(self.coeffs, o.coeffs))

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer, FieldElement)):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return inverse(self) ** (-e)
        return AlgebraElement(self.algebra, self.algebra.power_vectors(self.coeffs, e))

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and other.algebra is self.algebra
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __bool__(self):
        return bool(self.coeffs.any())

    def __repr__(self):
        F = self.algebra.field
        G = self.algebra.group
        terms = []
        for g in np.flatnonzero(self.coeffs):
            c = str(F.from_code(self.coeffs[g]))
            if F.n > 1 and "+" in c:
                c = f"({c})"
            name = G.name(g)
            if name == "1":
                terms.append(c)
            else:
                terms.append(name if c == "1" else f"{c}*{name}")
        return " + ".join(terms) or "0"


def mul(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    return u * v


def augmentation(u: AlgebraElement) -> FieldElement:
    """Sum of coefficients; the ring map F_q[G] -> F_q."""
    F = u.algebra.field
    return F.from_code(F.sum(u.coeffs))


# -- subspaces and ideals ---------------------------------------------------


class Subspace:
    """Row space of vectors in an algebra, stored in reduced echelon form."""

    def __init__(self, algebra: GroupAlgebra, vectors):
        self.algebra = algebra
        V = linalg.as_matrix(vectors, algebra.dim)
        if V.shape[0]:
            basis, pivots = linalg.rref(algebra.field, V)
        else:
            basis, pivots = V, []
        basis.setflags(write=False)
        self.basis = basis
        self.pivots = pivots

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def dim(self) -> int:
        return self.rank

    def is_zero(self) -> bool:
        return self.rank == 0

    def reduce(self, v) -> np.ndarray:
        return linalg.reduce_vector(self.algebra.field, self.basis, self.pivots, v)

    def contains(self, v) -> bool:
        if isinstance(v, AlgebraElement):
            v = v.coeffs
        return not np.any(self.reduce(v))

    def contains_all(self, V) -> bool:
        V = linalg.as_matrix(V, self.algebra.dim)
        return V.shape[0] == 0 or not np.any(self.reduce(V))

    def __contains__(self, u) -> bool:
        return self.contains(u)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and other.algebra is self.algebra
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((tuple(self.pivots), self.basis.tobytes()))

    def elements(self) -> list[AlgebraElement]:
        return [AlgebraElement(self.algebra, row) for row in self.basis]

    def intersect(self, other: Subspace) -> Subspace:
        return Subspace(self.algebra, linalg.intersect_rowspaces(self.algebra.field, self.basis, other.basis))

    def __repr__(self):
        return f"<{type(self).__name__} of dimension {self.rank} in {self.algebra!r}>"


class Ideal(Subspace):
    """Two-sided ideal; closure under multiplication by G is verified."""

    def __init__(self, algebra: GroupAlgebra, vectors, *, check: bool = True):
        super().__init__(algebra, vectors)
        self.two_sided = True
        if check and self.rank:
            if not self.contains_all(algebra.left_translates(self.basis)):
                raise ValueError("span is not closed under left multiplication")
            if not self.contains_all(algebra.right_translates(self.basis)):
                raise ValueError("span is not closed under right multiplication")

    @classmethod
    def generated_by(cls, algebra: GroupAlgebra, gens) -> Ideal:
        """Smallest two-sided ideal containing ``gens``."""
        gens = [g.coeffs if isinstance(g, AlgebraElement) else g for g in gens]
        space = Subspace(algebra, gens)
        while True:
            grown = Subspace(
                algebra,
                np.vstack([space.basis, algebra.left_translates(space.basis), algebra.right_translates(space.basis)])
                if space.rank
                else space.basis,
            )
            if grown.rank == space.rank:
                return cls(algebra, space.basis, check=False)
            space = grown

    @classmethod
    def zero(cls, algebra: GroupAlgebra) -> Ideal:
        return cls(algebra, np.zeros((0, algebra.dim), dtype=np.int64), check=False)


def omega_FG(A: GroupAlgebra) -> Ideal:
    """The augmentation ideal, spanned by g - 1."""
    G = A.group
    rows = np.zeros((A.dim - 1, A.dim), dtype=np.int64)
    others = [g for g in range(A.dim) if g != G.identity]
    rows[np.arange(A.dim - 1), others] = 1
    rows[:, G.identity] = A.field.neg(1)
    return Ideal(A, rows)


def omega_N(A: GroupAlgebra, N: Subgroup) -> Ideal:
    """Kernel of F_q[G] -> F_q[G/N], spanned by (h - 1) g for h in N, g in G."""
    G = A.group
    if not grp.is_normal(G, N):
        raise ValueError("subgroup is not normal")
    hs = [h for h in N.members if h != G.identity]
    if not hs:
        return Ideal.zero(A)
    rows = np.zeros((len(hs), A.dim), dtype=np.int64)
    rows[np.arange(len(hs)), hs] = 1
    rows[:, G.identity] = A.field.neg(1)
    return Ideal(A, A.right_translates(rows))


def ideal_product(I: Subspace, K: Subspace) -> Ideal:
    if I.algebra is not K.algebra:
        raise ValueError("ideals live in different algebras")
    A = I.algebra
    if I.rank == 0 or K.rank == 0:
        return Ideal.zero(A)
    return Ideal(A, A.outer_products(I.basis, K.basis), check=False)


def ideal_power(I: Ideal, t: int) -> Ideal:
    if t < 1:
        raise ValueError("power must be >= 1")
    P = I
    for _ in range(t - 1):
        if P.rank == 0:
            break
        P = ideal_product(P, I)
    return P


def ideal_powers(I: Ideal) -> list[Ideal]:
    """[I, I^2, ..., I^t] with I^t = 0; raises if I is not nilpotent."""
    powers = [I]
    while powers[-1].rank:
        nxt = ideal_product(powers[-1], I)
        if nxt.rank == powers[-1].rank:
            raise ValueError("ideal is not nilpotent")
        powers.append(nxt)
    return powers


def nilpotency_index(I: Ideal) -> int:
    """Least t with I^t = 0 (1 for the zero ideal)."""
    return len(ideal_powers(I))


def center_basis(A: GroupAlgebra) -> list[AlgebraElement]:
    """Class sums, one per conjugacy class, each checked to be central."""
    sums = [A.class_sum(c) for c in grp.conjugacy_classes(A.group)]
    S = np.array([z.coeffs for z in sums])
    if not np.array_equal(A.left_translates(S), A.right_translates(S)):
        raise AssertionError("a class sum is not central")
    return sums


def center(A: GroupAlgebra) -> Subspace:
    return Subspace(A, [z.coeffs for z in center_basis(A)])


def commutator_space(A: GroupAlgebra) -> Subspace:
    """[A, A] = span{uv - vu}, spanned by g - h^-1 g h."""
    G = A.group
    idx = np.arange(A.dim)
    rows = []
    for g in range(A.dim):
        conj = np.unique(G.conj(g, idx))
        for h in conj:
            if h != g:
                r = np.zeros(A.dim, dtype=np.int64)
                r[g] = 1
                r[h] = A.field.neg(1)
                rows.append(r)
    return Subspace(A, rows)


def is_semisimple(A: GroupAlgebra) -> bool:
    return A.dim % A.field.p != 0


def jacobson_radical(A: GroupAlgebra) -> Ideal:
    """J(F_q G) when G is a p-group (J = augmentation ideal) or p does not divide |G| (J = 0)."""
    p = A.field.p
    if A.dim % p:
        return Ideal.zero(A)
    if grp.is_p_group(A.group, p):
        return omega_FG(A)
    raise NotImplementedError(
        "out of scope: p divides |G| but G is not a p-group; only the p-group and "
        "coprime regimes are supported (see radical_via_subgroup)"
    )


def subgroup_algebra(A: GroupAlgebra, H: Subgroup) -> tuple[GroupAlgebra, np.ndarray]:
    """F_q[H] as its own algebra, plus the embedding of H's indices in G."""
    members = H.members
    pos = {int(h): i for i, h in enumerate(members)}
    G = A.group
    table = [[pos[int(G.mul(a, b))] for b in members] for a in members]
    Hgrp = Group(table, [G.name(h) for h in members])
    return GroupAlgebra(A.field, Hgrp), members


def induced_ideal(A: GroupAlgebra, H: Subgroup, I_H: Subspace) -> Ideal:
    """Row space of I_H * F_q G, with I_H an ideal of F_q[H]."""
    if I_H.rank == 0:
        return Ideal.zero(A)
    emb = np.zeros((I_H.rank, A.dim), dtype=np.int64)
    emb[:, H.members] = I_H.basis
    return Ideal(A, A.right_translates(emb))


def _check_invertible_index(A: GroupAlgebra, H: Subgroup) -> int:
    G = A.group
    if not grp.is_normal(G, H):
        raise ValueError("subgroup is not normal")
    index = G.size // H.order
    if index % A.field.p == 0:
        raise ValueError(f"index {index} is not invertible in {A.field!r}")
    return index


def radical_via_subgroup(A: GroupAlgebra, H: Subgroup) -> Ideal:
    """J(F_q G) = J(F_q H) F_q G for normal H of index invertible in F_q.

    J(F_q H) itself must fall in a supported regime (H a p-group or p not
    dividing |H|).
    """
    _check_invertible_index(A, H)
    AH, _ = subgroup_algebra(A, H)
    return induced_ideal(A, H, jacobson_radical(AH))


def radical_subgroup_consistency(A: GroupAlgebra, H: Subgroup) -> bool:
    """Whether J(F_q H) F_q G equals J(F_q G), both computed independently."""
    return radical_via_subgroup(A, H) == jacobson_radical(A)


# -- quotients ---------------------------------------------------------------


class QuotientAlgebra:
    """A / I on the complement basis of standard vectors at I's non-pivot columns."""

    def __init__(self, algebra: GroupAlgebra, ideal: Subspace):
        if ideal.algebra is not algebra:
            raise ValueError("ideal belongs to another algebra")
        self.algebra = algebra
        self.ideal = ideal
        pivots = set(ideal.pivots)
        self.section_columns = [c for c in range(algebra.dim) if c not in pivots]
        self.dim = len(self.section_columns)

    def project(self, u) -> np.ndarray:
        v = u.coeffs if isinstance(u, AlgebraElement) else np.asarray(u, dtype=np.int64)
        return self.ideal.reduce(v)[..., self.section_columns]

    def lift(self, x) -> AlgebraElement:
        v = np.zeros(self.algebra.dim, dtype=np.int64)
        v[self.section_columns] = x
        return AlgebraElement(self.algebra, v)

    def mul(self, x, y) -> np.ndarray:
        return self.project(self.lift(x) * self.lift(y))

    @property
    def one(self) -> np.ndarray:
        return self.project(self.algebra.one)

    @cached_property
    def structure_constants(self) -> np.ndarray:
        """``c[i, j] = e_i * e_j`` in quotient coordinates."""
        E = np.eye(self.dim, dtype=np.int64)
        lifted = np.zeros((self.dim, self.algebra.dim), dtype=np.int64)
        lifted[:, self.section_columns] = E
        prods = self.algebra.outer_products(lifted, lifted)
        return self.project(prods).reshape(self.dim, self.dim, self.dim)

    def is_commutative(self) -> bool:
        c = self.structure_constants
        return np.array_equal(c, c.transpose(1, 0, 2))


def quotient_algebra(A: GroupAlgebra, I: Subspace) -> QuotientAlgebra:
    return QuotientAlgebra(A, I)


# -- units --------------------------------------------------------------------


def regular_representation(A: GroupAlgebra, u: AlgebraElement) -> np.ndarray:
    """Matrix of v -> u v in the group basis (column h is u * h)."""
    M = np.zeros((A.dim, A.dim), dtype=np.int64)
    for g in np.flatnonzero(u.coeffs):
        M[A._table[g], np.arange(A.dim)] = u.coeffs[g]
    return M


def is_unit(A: GroupAlgebra, u: AlgebraElement) -> bool:
    return linalg.rank(A.field, regular_representation(A, u)) == A.dim


def inverse(u: AlgebraElement) -> AlgebraElement:
    A = u.algebra
    e = np.zeros(A.dim, dtype=np.int64)
    e[A.group.identity] = 1
    x = linalg.solve(A.field, regular_representation(A, u), e)
    if x is None:
        raise ZeroDivisionError("element is not a unit")
    return AlgebraElement(A, x)


def count_units(A: GroupAlgebra) -> int:
    """Brute-force count of units via the rank of the regular representation."""
    F = A.field
    total = F.q**A.dim
    count = 0
    for code in range(total):
        digits = []
        c = code
        for _ in range(A.dim):
            c, r = divmod(c, F.q)
            digits.append(r)
        if is_unit(A, AlgebraElement(A, digits)):
            count += 1
    return count


def unipotent_inverse(u: AlgebraElement, nil_index: int) -> AlgebraElement:
    """(1 + j)^-1 = sum_{t < nil_index} (-j)^t for j in a nilpotent ideal."""
    A = u.algebra
    j = u - A.one
    minus_j = -j
    acc = A.one
    term = A.one
    for _ in range(1, nil_index):
        term = term * minus_j
        acc = acc + term
    return acc

