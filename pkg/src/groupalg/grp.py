"""Finite groups on dense element indices.

A :class:`Group` knows how to multiply index arrays.  Small groups keep a
full multiplication table; large ones (the unit group 1+J, for instance)
are backed by a vectorized product callback.  Every algorithm here goes
through ``G.mul`` / ``G.inv`` on numpy arrays, so both kinds work.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Callable, Hashable, Sequence

import numpy as np

TABLE_CHECK_LIMIT = 512
UNIT_SET_CAP = 2**16
# group_from_unit_set keeps an explicit table up to this size
DENSE_TABLE_LIMIT = 4096


class Group:
    """Finite group with elements ``0 .. size-1``."""

    def __init__(self, table, names: Sequence[str] | None = None, *, check: bool = True):
        table = np.asarray(table, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n) or n == 0:
            raise ValueError("multiplication table must be a non-empty square array")
        if table.min() < 0 or table.max() >= n:
            raise ValueError("table entries out of range")
        ids = [e for e in range(n) if np.array_equal(table[e], np.arange(n))]
        if not ids:
            raise ValueError("no identity element")
        e = ids[0]
        if check and n <= TABLE_CHECK_LIMIT:
            _check_group_axioms(table, e)
        inv = np.argmax(table == e, axis=1)
        if not np.all(table[np.arange(n), inv] == e):
            raise ValueError("some element has no inverse")
        self.size = n
        self.identity = e
        self._table = table
        self._table.setflags(write=False)
        self._inv = inv
        self._mul_fn = None
        self._inv_fn = None
        self._names = list(names) if names is not None else None
        self._name_fn = None

    @classmethod
    def from_callback(
        cls,
        size: int,
        mul: Callable[[np.ndarray, np.ndarray], np.ndarray],
        identity: int,
        inverse: Callable[[np.ndarray], np.ndarray],
        name: Callable[[int], str] | None = None,
    ) -> Group:
        """Group whose product is computed on demand by ``mul``.

        ``mul`` and ``inverse`` must accept integer arrays (``mul`` with
        numpy broadcasting) and return arrays of the same shape.
        """
        G = cls.__new__(cls)
        G.size = size
        G.identity = identity
        G._table = None
        G._inv = None
        G._mul_fn = mul
        G._inv_fn = inverse
        G._names = None
        G._name_fn = name
        return G

    # -- products ------------------------------------------------------

    def mul(self, a, b):
        if self._table is not None:
            return self._table[a, b]
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = self._mul_fn(a.ravel(), b.ravel())
        return np.asarray(out, dtype=np.int64).reshape(a.shape)

    def inv(self, a):
        if self._inv is not None:
            return self._inv[a]
        a = np.asarray(a, dtype=np.int64)
        return np.asarray(self._inv_fn(a.ravel()), dtype=np.int64).reshape(a.shape)

    def conj(self, g, h):
        """h^-1 g h."""
        return self.mul(self.mul(self.inv(h), g), h)

    def power(self, g, e: int):
        g = np.asarray(g, dtype=np.int64)
        if e < 0:
            g, e = self.inv(g), -e
        result = np.full(g.shape, self.identity, dtype=np.int64)
        base = g
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            if self.size > DENSE_TABLE_LIMIT:
                raise MemoryError(f"refusing to materialize a {self.size}^2 table")
            idx = np.arange(self.size)
            self._table = self.mul(idx[:, None], idx[None, :])
        return self._table

    @property
    def has_table(self) -> bool:
        return self._table is not None

    # -- names ---------------------------------------------------------

    def name(self, g: int) -> str:
        if self._names is not None:
            return self._names[g]
        if self._name_fn is not None:
            return self._name_fn(int(g))
        return str(int(g))

    @property
    def names(self) -> list[str]:
        return [self.name(g) for g in range(self.size)]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<Group of order {self.size}>"

    @cached_property
    def is_abelian(self) -> bool:
        gens = generators(self, np.arange(self.size))
        g = np.asarray(gens)
        return bool(np.all(self.mul(g[:, None], g[None, :]) == self.mul(g[None, :], g[:, None])))

    @cached_property
    def generators(self) -> list[int]:
        return generators(self, np.arange(self.size))


def _check_group_axioms(table: np.ndarray, e: int) -> None:
    n = table.shape[0]
    if not np.all(table[:, e] == np.arange(n)):
        raise ValueError("identity is not two-sided")
    for a in range(n):
        # (a b) c == a (b c) for all b, c
        if not np.array_equal(table[table[a]], table[a][table]):
            raise ValueError("multiplication table is not associative")
    for a in range(n):
        if not (np.any(table[a] == e) and np.any(table[:, a] == e)):
            raise ValueError("some element has no inverse")


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: Group
    members: np.ndarray

    def __post_init__(self):
        m = np.unique(np.asarray(self.members, dtype=np.int64))
        m.setflags(write=False)
        object.__setattr__(self, "members", m)

    @property
    def order(self) -> int:
        return int(self.members.size)

    def __len__(self):
        return self.order

    def __contains__(self, g) -> bool:
        i = np.searchsorted(self.members, g)
        return bool(i < self.members.size and self.members[i] == g)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.size, dtype=bool)
        m[self.members] = True
        return m

    def contains_all(self, gs) -> bool:
        return bool(np.all(self.mask[np.asarray(gs, dtype=np.int64)]))

    @cached_property
    def generators(self) -> list[int]:
        return generators(self.parent, self.members)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and np.array_equal(self.members, other.members)
        )

    def __hash__(self):
        return hash((id(self.parent), self.members.tobytes()))

    def names(self) -> list[str]:
        return [self.parent.name(g) for g in self.members]

    def __repr__(self):
        return f"<Subgroup of order {self.order} in group of order {self.parent.size}>"


# -- closures -----------------------------------------------------------


def _extend_closure(G: Group, mask: np.ndarray, frontier: np.ndarray, gens: np.ndarray) -> None:
    """Grow ``mask`` in place by right multiplication with ``gens``."""
    while frontier.size:
        prods = np.unique(G.mul(frontier[:, None], gens[None, :]).ravel())
        new = prods[~mask[prods]]
        mask[new] = True
        frontier = new


def closure_mask(G: Group, gens) -> np.ndarray:
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    mask = np.zeros(G.size, dtype=bool)
    mask[G.identity] = True
    if gens.size:
        mask[gens] = True
        _extend_closure(G, mask, np.concatenate([[G.identity], gens]), gens)
    return mask


def subgroup(G: Group, gens) -> Subgroup:
    """Subgroup generated by ``gens`` (breadth-first closure)."""
    return Subgroup(G, np.flatnonzero(closure_mask(G, gens)))


def generators(G: Group, members) -> list[int]:
    """Greedy generating set: repeatedly add the least member not yet reached."""
    members = np.asarray(members, dtype=np.int64)
    gens: list[int] = []
    mask = np.zeros(G.size, dtype=bool)
    mask[G.identity] = True
    while True:
        missing = members[~mask[members]]
        if missing.size == 0:
            return gens
        x = int(missing[0])
        gens.append(x)
        cur = np.flatnonzero(mask)
        start = np.unique(G.mul(cur, x))
        start = start[~mask[start]]
        mask[start] = True
        _extend_closure(G, mask, start, np.asarray(gens, dtype=np.int64))


def normal_closure(G: Group, gens, ambient_gens=None) -> Subgroup:
    """Smallest subgroup containing ``gens`` normalized by ``ambient_gens``.

    ``ambient_gens`` defaults to a generating set of G.
    """
    ys = np.asarray(G.generators if ambient_gens is None else list(ambient_gens), dtype=np.int64)
    current = [int(g) for g in gens]
    mask = closure_mask(G, current)
    while True:
        hs = np.asarray(generators(G, np.flatnonzero(mask)) or [G.identity], dtype=np.int64)
        conj = G.conj(hs[:, None], ys[None, :]).ravel() if ys.size else hs
        outside = np.unique(conj[~mask[conj]])
        if outside.size == 0:
            return Subgroup(G, np.flatnonzero(mask))
        current = list(hs) + [int(outside[0])]
        mask = closure_mask(G, current)


def is_normal(G: Group, H: Subgroup) -> bool:
    hs = np.asarray(H.generators or [G.identity], dtype=np.int64)
    ys = np.asarray(G.generators or [G.identity], dtype=np.int64)
    return H.contains_all(G.conj(hs[:, None], ys[None, :]))


def commutator(G: Group, g, h):
    """(g, h) = g^-1 h^-1 g h."""
    return G.mul(G.mul(G.inv(g), G.inv(h)), G.mul(g, h))


def commutator_subgroup(G: Group, H: Subgroup | None = None, K: Subgroup | None = None) -> Subgroup:
    """[H, K], by default G' = [G, G].

    Uses the fact that [H, K] is the normal closure in <H, K> of the
    commutators of generating sets of H and K.
    """
    hs = np.asarray(H.generators if H is not None else G.generators, dtype=np.int64)
    ks = np.asarray(K.generators if K is not None else G.generators, dtype=np.int64)
    if hs.size == 0 or ks.size == 0:
        return Subgroup(G, [G.identity])
    comms = np.unique(commutator(G, hs[:, None], ks[None, :]).ravel())
    ambient = np.unique(np.concatenate([hs, ks]))
    return normal_closure(G, comms, ambient)


def derived_subgroup(G: Group, H: Subgroup | None = None) -> Subgroup:
    return commutator_subgroup(G, H, H)


def whole(G: Group) -> Subgroup:
    return Subgroup(G, np.arange(G.size))


def trivial(G: Group) -> Subgroup:
    return Subgroup(G, [G.identity])


def lower_central_series(G: Group) -> list[Subgroup]:
    """gamma_1 = G, gamma_{c+1} = (gamma_c, G), until the chain stabilizes."""
    series = [whole(G)]
    while not series[-1].is_trivial():
        nxt = commutator_subgroup(G, series[-1], None)
        if nxt.order == series[-1].order:
            break
        series.append(nxt)
    return series


def nilpotency_class(G: Group) -> int | None:
    """Last c with gamma_c != 1; 0 for the trivial group; None if not nilpotent."""
    series = lower_central_series(G)
    if not series[-1].is_trivial():
        return None
    return len(series) - 1


def derived_series(G: Group) -> list[Subgroup]:
    series = [whole(G)]
    while not series[-1].is_trivial():
        nxt = derived_subgroup(G, series[-1])
        if nxt.order == series[-1].order:
            break
        series.append(nxt)
    return series


def center(G: Group) -> Subgroup:
    gens = np.asarray(G.generators or [G.identity], dtype=np.int64)
    idx = np.arange(G.size)
    commutes = np.all(G.mul(idx[:, None], gens[None, :]) == G.mul(gens[None, :], idx[:, None]), axis=1)
    return Subgroup(G, np.flatnonzero(commutes))


def centralizer(G: Group, g: int) -> Subgroup:
    idx = np.arange(G.size)
    return Subgroup(G, idx[G.mul(idx, g) == G.mul(g, idx)])


# -- element data ---------------------------------------------------------


def element_order(G: Group, g: int) -> int:
    e, cur = 1, int(g)
    while cur != G.identity:
        cur = int(G.mul(cur, g))
        e += 1
    return e


def element_orders(G: Group, elements=None) -> np.ndarray:
    """Orders of many elements at once."""
    els = np.arange(G.size) if elements is None else np.asarray(elements, dtype=np.int64)
    orders = np.zeros(els.size, dtype=np.int64)
    cur = els.copy()
    k = 1
    pending = np.ones(els.size, dtype=bool)
    while pending.any():
        done = pending & (cur == G.identity)
        orders[done] = k
        pending &= ~done
        if not pending.any():
            break
        cur = np.where(pending, G.mul(cur, els), G.identity)
        k += 1
    return orders


def exponent(G: Group) -> int:
    return math.lcm(*(int(o) for o in np.unique(element_orders(G))))


def is_p_regular(G: Group, g: int, p: int) -> bool:
    return math.gcd(p, element_order(G, g)) == 1


def order_statistics(G: Group) -> Counter:
    """Multiset of element orders, {order: count}."""
    vals, counts = np.unique(element_orders(G), return_counts=True)
    return Counter(dict(zip(vals.tolist(), counts.tolist())))


def is_p_group(G: Group, p: int) -> bool:
    n = G.size
    while n % p == 0:
        n //= p
    return n == 1


# -- classes and quotients ------------------------------------------------


def conjugacy_classes(G: Group) -> list[list[int]]:
    """Orbits under conjugation, sorted by least member, members sorted."""
    seen = np.zeros(G.size, dtype=bool)
    idx = np.arange(G.size)
    classes = []
    for g in range(G.size):
        if seen[g]:
            continue
        orbit = np.unique(G.conj(g, idx))
        seen[orbit] = True
        classes.append([int(x) for x in orbit])
    return classes


def quotient(G: Group, N: Subgroup) -> tuple[Group, np.ndarray]:
    """G/N on cosets ordered by least representative, plus the projection."""
    if not is_normal(G, N):
        raise ValueError("subgroup is not normal")
    proj = np.full(G.size, -1, dtype=np.int64)
    reps = []
    for g in range(G.size):
        if proj[g] >= 0:
            continue
        coset = G.mul(g, N.members)
        proj[coset] = len(reps)
        reps.append(g)
    reps = np.asarray(reps)
    table = proj[G.mul(reps[:, None], reps[None, :])]
    names = ["{" + ",".join(G.name(h) for h in np.flatnonzero(proj == i)) + "}" for i in range(len(reps))]
    return Group(table, names), proj


# -- constructors ---------------------------------------------------------


def _power_name(base: str, i: int) -> str:
    if i == 0:
        return ""
    return base if i == 1 else f"{base}^{i}"


def qd_group(k: int) -> Group:
    """Quasidihedral group <a, x | a^(2^(k-1)) = x^2 = 1, x a x = a^(2^(k-2)-1)>.

    Element a^i x^j has index ``i + j * 2^(k-1)`` and name like ``a^3x``.
    """
    if not 3 <= k <= 9:
        raise ValueError("k must satisfy 3 <= k <= 9")
    m = 2 ** (k - 1)
    r = 2 ** (k - 2) - 1
    i = np.arange(2 * m) % m
    j = np.arange(2 * m) // m
    # (a^i x^j)(a^i' x^j') = a^(i + i' r^j) x^(j + j'), since x a x = a^r
    twist = np.where(j == 1, r, 1)
    ii = (i[:, None] + i[None, :] * twist[:, None]) % m
    jj = (j[:, None] + j[None, :]) % 2
    table = ii + jj * m
    names = [(_power_name("a", a) + ("x" if b else "")) or "1" for b in (0, 1) for a in range(m)]
    return Group(table, names)


def cyclic_group(n: int, symbol: str = "c") -> Group:
    idx = np.arange(n)
    names = [_power_name(symbol, i) or "1" for i in range(n)]
    return Group((idx[:, None] + idx[None, :]) % n, names)


def symmetric_group(n: int) -> Group:
    import itertools

    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (s t)(i) = s(t(i))
    table = [[index[tuple(s[t[i]] for i in range(n))] for t in perms] for s in perms]
    return Group(table, ["".join(map(str, p)) for p in perms])


def direct_product(G: Group, H: Group) -> Group:
    a = np.arange(G.size * H.size)
    g, h = a // H.size, a % H.size
    table = G.mul(g[:, None], g[None, :]) * H.size + H.mul(h[:, None], h[None, :])
    names = [f"({G.name(x)},{H.name(y)})" for x, y in zip(g, h)]
    return Group(table, names)


def group_from_unit_set(elements: Sequence[Hashable], mul: Callable) -> Group:
    """Materialize a finite set closed under ``mul`` as a Group.

    Raises ValueError if a product leaves the set, or if the set exceeds
    the size cap.
    """
    elements = list(elements)
    n = len(elements)
    if n > UNIT_SET_CAP:
        raise ValueError(f"set of size {n} exceeds the cap {UNIT_SET_CAP}")
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != n:
        raise ValueError("elements are not distinct")

    def lookup(e):
        try:
            return index[e]
        except KeyError:
            raise ValueError(f"set is not closed: product {e!r} is outside") from None

    names = [str(e) for e in elements]
    if n <= DENSE_TABLE_LIMIT:
        table = [[lookup(mul(a, b)) for b in elements] for a in elements]
        return Group(table, names)

    def batch_mul(a, b):
        return np.array([lookup(mul(elements[x], elements[y])) for x, y in zip(a, b)], dtype=np.int64)

    ident = next(
        (i for i, e in enumerate(elements) if all(mul(e, f) == f for f in elements[:8])), None
    )
    if ident is None:
        raise ValueError("no identity element found")

    def batch_inv(a):
        out = []
        for x in a:
            cur, prev = int(x), ident
            while cur != ident:
                prev, cur = cur, lookup(mul(elements[cur], elements[int(x)]))
            out.append(prev)
        return np.array(out, dtype=np.int64)

    return Group.from_callback(n, batch_mul, ident, batch_inv, names.__getitem__)


# -- table file format -----------------------------------------------------


def load_table_file(path: str | Path) -> Group:
    """Read the text format: |G|, |G| rows of products, |G| display names."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty group file")
    n = int(lines[0])
    if len(lines) < 1 + 2 * n:
        raise ValueError("group file is truncated")
    table = [[int(t) for t in lines[1 + i].split()] for i in range(n)]
    if any(len(row) != n for row in table):
        raise ValueError("table rows must have |G| entries")
    names = lines[1 + n : 1 + 2 * n]
    return Group(table, names)


def dump_table_file(G: Group, path: str | Path) -> None:
    rows = [" ".join(map(str, G.table[g])) for g in range(G.size)]
    Path(path).write_text("\n".join([str(G.size), *rows, *G.names]) + "\n")
