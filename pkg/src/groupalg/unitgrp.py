"""Unit groups of group algebras.

In the modular p-group case the radical J is the augmentation ideal and
V = 1 + J has order q^dim J.  Small V is materialized as a
:class:`~groupalg.grp.Group` whose elements are indexed by their
coordinates in the RREF basis of J, and products are computed in bulk in
the algebra.  Large V (2^31 elements for F_2[QD_32]) is only analysed
through ideal powers.

Exponent certificate: in characteristic p, (1 + j)^(p^s) = 1 + j^(p^s),
so exp V = p^s for the least s with j^(p^s) = 0 for all j in J.  The
upper bound holds if J^(p^s) = 0, or, more sharply, if exp G divides p^s
and J^(p^s) meets the commutator space [A, A] trivially: the p-power map
is additive modulo [A, A], which forces j^(p^s) = aug(j)^(p^s) = 0 there.
The lower bound is an explicit j with j^(p^(s-1)) != 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import grp, linalg
from .algebra import (
    AlgebraElement,
    GroupAlgebra,
    Ideal,
    center,
    commutator_space,
    ideal_powers,
    is_semisimple,
    jacobson_radical,
    quotient_algebra,
    radical_via_subgroup,
)
from .grp import Group, Subgroup
from .wedderburn import WedderburnShape, unit_group_order, unit_group_structure, wedderburn_shape

ENUMERATION_CAP = 2**16
WITNESS_SAMPLES = 10_000
_BATCH = 1 << 15


def _require_modular(A: GroupAlgebra) -> Ideal:
    """J(A) when G is a p-group in characteristic p, or J = 0 when p does not divide |G|."""
    p = A.field.p
    if A.dim % p == 0 and not grp.is_p_group(A.group, p):
        raise ValueError("V = 1 + J needs G to be a p-group in characteristic p, or p not dividing |G|")
    return jacobson_radical(A)


# -- U / V -----------------------------------------------------------------------


@dataclass(frozen=True)
class UnitQuotient:
    """U(A) / V described through A / J."""

    order: int
    field_order: int
    cyclic: bool
    label: str


def _quotient_elements(Q) -> np.ndarray:
    q = Q.algebra.field.q
    n = Q.dim
    codes = np.arange(q**n)
    return (codes[:, None] // q ** np.arange(n)) % q


def unit_quotient(A: GroupAlgebra) -> UnitQuotient:
    """Verify A/J is a field and return its cyclic unit group C_{|A/J| - 1}."""
    if not grp.is_p_group(A.group, A.field.p):
        raise ValueError("unit_quotient needs G to be a p-group in characteristic p")
    J = _require_modular(A)
    Q = quotient_algebra(A, J)
    F = A.field
    if not Q.is_commutative():
        raise AssertionError("A/J is not commutative")
    elems = _quotient_elements(Q)
    nonzero = elems[1:]
    one = Q.one
    # multiplication table of A/J, through lifts and projections
    lifts = np.zeros((len(elems), A.dim), dtype=np.int64)
    lifts[:, Q.section_columns] = elems
    prods = Q.project(A.outer_products(lifts[1:], lifts[1:])).reshape(len(nonzero), len(nonzero), Q.dim)
    is_one = np.all(prods == one, axis=2)
    if not np.all(is_one.any(axis=1)):
        raise AssertionError("A/J has a non-invertible nonzero element")
    size = F.q**Q.dim
    # cyclic iff some element has multiplicative order |A/J| - 1
    order = size - 1
    cyclic = False
    for x in lifts[1:]:
        xe = AlgebraElement(A, x)
        if _unit_order_mod(Q, xe, order) == order:
            cyclic = True
            break
    return UnitQuotient(order=order, field_order=size, cyclic=cyclic, label=f"C_{order}" if cyclic else "?")


def _unit_order_mod(Q, x: AlgebraElement, bound: int) -> int:
    one = Q.one
    cur = x
    for k in range(1, bound + 1):
        if np.array_equal(Q.project(cur), one):
            return k
        cur = cur * x
    return -1


# -- enumerating V ------------------------------------------------------------------


class _OnePlusJ:
    """Index <-> element bookkeeping for V = 1 + J."""

    def __init__(self, A: GroupAlgebra, J: Ideal):
        self.A = A
        self.J = J
        self.F = A.field
        self.r = J.rank
        self.size = self.F.q**self.r
        self._weights = self.F.q ** np.arange(self.r, dtype=np.int64)

    def vectors(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        coords = (idx[:, None] // self._weights) % self.F.q
        v = linalg.matmul(self.F, coords, self.J.basis)
        v[:, self.A.group.identity] = self.F.add(v[:, self.A.group.identity], 1)
        return v

    def indices(self, V) -> np.ndarray:
        j = np.array(V, dtype=np.int64)
        j[:, self.A.group.identity] = self.F.sub(j[:, self.A.group.identity], 1)
        coords = j[:, self.J.pivots]
        if np.any(linalg.matmul(self.F, coords, self.J.basis) != j):
            raise ValueError("product left 1 + J: not closed")
        return coords @ self._weights

    def mul(self, a, b) -> np.ndarray:
        out = np.empty(a.size, dtype=np.int64)
        for s in range(0, a.size, _BATCH):
            sl = slice(s, s + _BATCH)
            out[sl] = self.indices(self.A.mul_vectors(self.vectors(a[sl]), self.vectors(b[sl])))
        return out

    def inverse(self, a, nil_index: int) -> np.ndarray:
        out = np.empty(a.size, dtype=np.int64)
        F = self.F
        for s in range(0, a.size, _BATCH):
            u = self.vectors(a[s : s + _BATCH])
            minus_j = F.neg(u)
            minus_j[:, self.A.group.identity] = F.add(minus_j[:, self.A.group.identity], 1)
            acc = np.zeros_like(u)
            acc[:, self.A.group.identity] = 1
            term = acc.copy()
            for _ in range(1, nil_index):
                term = self.A.mul_vectors(term, minus_j)
                acc = F.add(acc, term)
            out[s : s + _BATCH] = self.indices(acc)
        return out

    def element(self, i: int) -> AlgebraElement:
        return AlgebraElement(self.A, self.vectors([i])[0])


def enumerate_V(A: GroupAlgebra, cap: int = ENUMERATION_CAP) -> Group:
    """V = 1 + J as a Group; element i has coordinates = base-q digits of i.

    Every element is checked to be a unit whose inverse lies in V.
    """
    J = _require_modular(A)
    V = _OnePlusJ(A, J)
    if V.size > cap:
        raise ValueError(f"|V| = {A.field.q}^{J.rank} exceeds the enumeration cap {cap}")
    nil = len(ideal_powers(J))
    group = Group.from_callback(
        V.size,
        V.mul,
        identity=0,
        inverse=lambda a: V.inverse(a, nil),
        name=lambda i: repr(V.element(i)),
    )
    idx = np.arange(V.size)
    inv = group.inv(idx)
    if not np.all(group.mul(idx, inv) == 0) or not np.all(group.mul(inv, idx) == 0):
        raise AssertionError("an element of 1 + J is not a unit")
    group._one_plus_j = V
    return group


def v_elements(Vgrp: Group, idx) -> np.ndarray:
    """Coefficient vectors of the given elements of an enumerated V."""
    return Vgrp._one_plus_j.vectors(np.atleast_1d(idx))


# -- exponent -----------------------------------------------------------------------


@dataclass(frozen=True)
class ExponentCertificate:
    exponent: int
    upper_bound: str
    lower_bound_confirmed: bool
    witness: AlgebraElement | None
    radical_nilpotency_index: int

    def describe(self) -> str:
        if self.exponent == 1 or self.lower_bound_confirmed:
            return f"exponent {self.exponent} ({self.upper_bound}; witness found)"
        return f"exponent <= {self.exponent}, lower bound unconfirmed ({self.upper_bound})"


def _upper_bound(A: GroupAlgebra, powers: list[Ideal]) -> tuple[int, str]:
    p = A.field.p
    t = len(powers)  # J^t = 0
    exp_g = grp.exponent(A.group)
    comm = None
    s = 0
    while True:
        k = p**s
        if k >= t:
            return s, f"J^{k} = 0"
        if exp_g and k % exp_g == 0:
            if comm is None:
                comm = commutator_space(A)
            if powers[k - 1].intersect(comm).rank == 0:
                return s, f"J^{k} meets [A,A] trivially and exp G | {k}"
        s += 1


def _find_witness(A: GroupAlgebra, J: Ideal, e: int, seed: int) -> AlgebraElement | None:
    """Some j in J with j^e != 0: basis vectors first, then random elements."""
    cand = J.basis
    P = A.power_vectors(cand, e)
    hit = np.flatnonzero(P.any(axis=1))
    if hit.size:
        return AlgebraElement(A, cand[hit[0]])
    rng = np.random.default_rng(seed)
    for s in range(0, WITNESS_SAMPLES, 1000):
        coords = rng.integers(0, A.field.q, size=(min(1000, WITNESS_SAMPLES - s), J.rank))
        cand = linalg.matmul(A.field, coords, J.basis)
        P = A.power_vectors(cand, e)
        hit = np.flatnonzero(P.any(axis=1))
        if hit.size:
            return AlgebraElement(A, cand[hit[0]])
    return None


def exponent_certificate(A: GroupAlgebra, seed: int = 0) -> ExponentCertificate:
    J = _require_modular(A)
    if J.rank == 0:
        return ExponentCertificate(1, "J = 0", True, None, 1)
    powers = ideal_powers(J)
    s, how = _upper_bound(A, powers)
    p = A.field.p
    witness = _find_witness(A, J, p ** (s - 1), seed) if s > 0 else None
    return ExponentCertificate(
        exponent=p**s,
        upper_bound=how,
        lower_bound_confirmed=s == 0 or witness is not None,
        witness=witness,
        radical_nilpotency_index=len(powers),
    )


def exponent_of_V(A: GroupAlgebra, seed: int = 0) -> int:
    return exponent_certificate(A, seed).exponent


# -- structure of an enumerated V ------------------------------------------------------


def nilpotency_class_of_V(A: GroupAlgebra, Vgrp: Group | None = None) -> int:
    Vgrp = enumerate_V(A) if Vgrp is None else Vgrp
    c = grp.nilpotency_class(Vgrp)
    if c is None:
        raise AssertionError("V is not nilpotent")
    return c


def _central_in_algebra(A: GroupAlgebra, vectors: np.ndarray) -> bool:
    Z = center(A)
    return Z.contains_all(vectors)


def centrally_metabelian_check(A: GroupAlgebra, Vgrp: Group | None = None) -> tuple[bool, bool]:
    """(V' lies in the center of A, V'' is central in V)."""
    Vgrp = enumerate_V(A) if Vgrp is None else Vgrp
    D1 = grp.derived_subgroup(Vgrp)
    derived_central = _central_in_algebra(A, v_elements(Vgrp, D1.members))
    D2 = grp.derived_subgroup(Vgrp, D1)
    gens = np.asarray(Vgrp.generators, dtype=np.int64)
    d2 = D2.members
    second_central = bool(
        np.all(Vgrp.mul(d2[:, None], gens[None, :]) == Vgrp.mul(gens[None, :], d2[:, None]))
    )
    return derived_central, second_central


# -- reports ------------------------------------------------------------------------------


@dataclass(frozen=True)
class ModularUnitReport:
    dim_J: int
    order_V: int
    exponent: int
    exponent_certificate: ExponentCertificate
    enumerated_exponent: int | None
    nilpotency_class: int | None
    derived_in_center: bool | None
    second_derived_central: bool | None
    quotient_structure: str

    @property
    def enumerated(self) -> bool:
        return self.nilpotency_class is not None


def modular_report(A: GroupAlgebra, seed: int = 0, cap: int = ENUMERATION_CAP) -> ModularUnitReport:
    J = _require_modular(A)
    order_V = A.field.q**J.rank
    cert = exponent_certificate(A, seed)
    uq = unit_quotient(A)
    cls = derived = second = exp_enum = None
    if order_V <= cap:
        Vgrp = enumerate_V(A, cap)
        if Vgrp.size != order_V:
            raise AssertionError("enumerated V has the wrong order")
        exp_enum = grp.exponent(Vgrp)
        cls = nilpotency_class_of_V(A, Vgrp)
        derived, second = centrally_metabelian_check(A, Vgrp)
    return ModularUnitReport(
        dim_J=J.rank,
        order_V=order_V,
        exponent=cert.exponent,
        exponent_certificate=cert,
        enumerated_exponent=exp_enum,
        nilpotency_class=cls,
        derived_in_center=derived,
        second_derived_central=second,
        quotient_structure=uq.label,
    )


@dataclass(frozen=True)
class SemisimpleUnitReport:
    shape: WedderburnShape
    structure: str
    order: int


def semisimple_unit_structure(A: GroupAlgebra, seed: int = 0) -> SemisimpleUnitReport:
    if not is_semisimple(A):
        raise ValueError("algebra is not semisimple")
    shape = wedderburn_shape(A, seed)
    q = A.field.q
    return SemisimpleUnitReport(shape, unit_group_structure(shape, q), unit_group_order(shape, q))


def unit_count_via_radical(A: GroupAlgebra, H: Subgroup, seed: int = 0) -> int:
    """|U(A)| = |U(A/J)| |1 + J| with J = J(F_q H) F_q G.

    H must be a normal p-subgroup of index prime to p, so that
    A/J = F_q[G/H] is semisimple.
    """
    p = A.field.p
    order = H.order
    while order % p == 0:
        order //= p
    if order != 1:
        raise ValueError("H must be a p-group")
    J = radical_via_subgroup(A, H)
    Gq, _ = grp.quotient(A.group, H)
    shape = wedderburn_shape(GroupAlgebra(A.field, Gq), seed)
    return unit_group_order(shape, A.field.q) * A.field.q**J.rank

