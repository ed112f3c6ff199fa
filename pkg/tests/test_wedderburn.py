import itertools
import math

import numpy as np
import pytest

from groupalg import grp
from groupalg.algebra import GroupAlgebra
from groupalg.expected import SEMISIMPLE, semisimple_case
from groupalg.gf import field_of_order, make_field
from groupalg.wedderburn import (
    WedderburnShape,
    abelianization_consistency,
    central_idempotents,
    class_fixing_residues,
    degree_multiset_from_l,
    f_conjugacy,
    gl_order,
    idempotent_identities,
    l_criterion,
    l_value,
    l_value_plus_minus,
    semisimple_algebra,
    t_group,
    unit_group_order,
    unit_group_structure,
    wedderburn_shape,
    witt_berman_crosscheck,
)


def test_t_group():
    assert t_group(7, 16) == [1, 7]
    assert t_group(23, 16) == [1, 7]
    assert t_group(3, 8) == [1, 3]
    assert t_group(17, 8) == [1]
    assert t_group(3, 16) == [1, 3, 9, 11]
    with pytest.raises(ValueError):
        t_group(4, 8)


def test_f_conjugacy_examples(qd16, qd32):
    part = f_conjugacy(qd16, 7, 7)
    assert part.c == 6 and part.m == 8
    named = [sorted(qd16.name(g) for g in c) for c in part.classes]
    assert sorted(["a", "a^3", "a^5", "a^7"]) in named
    part = f_conjugacy(qd32, 3, 3)
    assert part.c == 7
    named = [sorted(qd32.name(g) for g in c) for c in part.classes]
    assert sorted(["a", "a^15", "a^3", "a^13", "a^5", "a^11", "a^7", "a^9"]) in named
    assert f_conjugacy(qd16, 17, 17).c == 7


def test_f_conjugacy_modular_uses_regular_elements(qd16):
    # in characteristic 2 only the identity of a 2-group is 2-regular
    part = f_conjugacy(qd16, 2, 2)
    assert part.c == 1 and part.m == 1


def test_class_fixing_residues(qd16, qd32):
    assert class_fixing_residues(qd16, 8) == [1, 3]
    assert class_fixing_residues(qd32, 16) == [1, 7]


def test_l_value_examples():
    assert l_value(3, 16) == 4
    assert l_value(19, 16) == 4
    assert l_value(7, 8) == 2
    assert l_value(23, 8) == 2
    for m in (5, 8, 12, 16):
        assert l_value(m + 1, m) == 1
    # the "m | q^l - 1 or m | q^l + 1" reading gives 1 for q = -1 mod 8
    assert l_value_plus_minus(7, 8) == 1
    assert l_value_plus_minus(3, 16) == 4


def test_idempotent_examples(qd16, qd32):
    dec = central_idempotents(GroupAlgebra(make_field(3), qd16))
    assert sorted(dec.component_dims) == [1, 1, 1, 1, 4, 4, 4]
    assert dec.field_degrees == (1,) * 7
    dec = central_idempotents(GroupAlgebra(make_field(7), qd16))
    assert sorted(dec.component_dims) == [1, 1, 1, 1, 4, 8]
    assert sorted(dec.field_degrees) == [1, 1, 1, 1, 1, 2]
    trivial = GroupAlgebra(make_field(5), grp.cyclic_group(1))
    dec = central_idempotents(trivial)
    assert len(dec) == 1 and dec.idempotents[0] == trivial.one
    with pytest.raises(ValueError):
        central_idempotents(GroupAlgebra(make_field(2), qd16))


def test_shape_examples(qd16, qd32):
    assert wedderburn_shape(GroupAlgebra(make_field(3), qd16)).components == ((1, 1),) * 4 + ((2, 1),) * 3
    s = wedderburn_shape(GroupAlgebra(make_field(3), qd32))
    assert s.components == ((1, 1),) * 4 + ((2, 1), (2, 2), (2, 4))
    s = wedderburn_shape(GroupAlgebra(make_field(17), qd32))
    assert s.components == ((1, 1),) * 4 + ((2, 1),) * 7


@pytest.mark.parametrize("q", [3, 5, 7, 9, 25, 27])
def test_seed_independence(qd16, qd32, q):
    for G in (qd16, qd32):
        A = GroupAlgebra(field_of_order(q), G)
        a = {e.coeffs.tobytes() for e in central_idempotents(A, seed=0).idempotents}
        b = {e.coeffs.tobytes() for e in central_idempotents(A, seed=987654321).idempotents}
        assert a == b


@pytest.mark.parametrize(
    "q,G",
    [
        (5, "S3"),
        (7, "S3"),
        (2, "C3"),
        (2, "C7"),
        (3, "C4"),
        (5, "S4"),
        (7, "C3xS3"),
        (9, "QD16"),
        (3, "QD32"),
        (13, "QD32"),
    ],
)
def test_shape_invariants_other_groups(q, G):
    groups = {
        "S3": grp.symmetric_group(3),
        "S4": grp.symmetric_group(4),
        "C3": grp.cyclic_group(3),
        "C7": grp.cyclic_group(7),
        "C4": grp.cyclic_group(4),
        "C3xS3": grp.direct_product(grp.cyclic_group(3), grp.symmetric_group(3)),
        "QD16": grp.qd_group(4),
        "QD32": grp.qd_group(5),
    }
    A = semisimple_algebra(q, groups[G])
    dec = central_idempotents(A)
    assert all(idempotent_identities(A, dec).values())
    shape = wedderburn_shape(A)
    assert shape.dimension == A.dim
    assert shape.center_dimension == len(grp.conjugacy_classes(A.group))
    assert witt_berman_crosscheck(A)
    assert abelianization_consistency(A)
    l, lcm = l_criterion(A)
    assert l == lcm


def test_known_shapes_small():
    # F_2 C_7 = F_2 + F_8 + F_8, F_3 C_4 = F_3 + F_3 + F_9, F_5 S_3 = F_5 + F_5 + M(2, F_5)
    assert wedderburn_shape(semisimple_algebra(2, grp.cyclic_group(7))).components == ((1, 1), (1, 3), (1, 3))
    assert wedderburn_shape(semisimple_algebra(3, grp.cyclic_group(4))).components == ((1, 1), (1, 1), (1, 2))
    assert wedderburn_shape(semisimple_algebra(5, grp.symmetric_group(3))).components == ((1, 1), (1, 1), (2, 1))
    # F_5 S_4 splits with dimensions 1 + 1 + 4 + 9 + 9
    s = wedderburn_shape(semisimple_algebra(5, grp.symmetric_group(4)))
    assert s.components == ((1, 1), (1, 1), (2, 1), (3, 1), (3, 1))


def test_gl_order_brute_force():
    count = 0
    for a, b, c, d in itertools.product(range(3), repeat=4):
        if (a * d - b * c) % 3:
            count += 1
    assert count == gl_order(2, 3) == 48
    assert gl_order(1, 7) == 6
    assert gl_order(2, 4) == 180


def test_unit_group_orders():
    s = WedderburnShape(((1, 1),) * 4 + ((2, 1),) * 3)
    assert unit_group_order(s, 3) == 2**4 * 48**3 == 1_769_472
    assert unit_group_structure(s, 3) == "C_2^4 x GL(2,3)^3"
    s5 = WedderburnShape(((1, 1),) * 4 + ((2, 1), (2, 2), (2, 4)))
    assert unit_group_structure(s5, 5) == "C_4^4 x GL(2,5) x GL(2,25) x GL(2,625)"
    assert unit_group_order(s5, 5) == 4**4 * gl_order(2, 5) * gl_order(2, 25) * gl_order(2, 625)
    big = WedderburnShape(((1, 1),) * 4 + ((2, 1),) * 7)
    assert unit_group_order(big, 17) > 2**64


@pytest.mark.parametrize("k", [4, 5])
def test_degree_sum_matches_center(k):
    classes = {4: 7, 5: 11}[k]
    for case in SEMISIMPLE[k].values():
        # four commutative copies of F_q plus the matrix components
        assert 4 + len(case.S) == case.c
        assert 4 + sum(case.S) == classes
        assert math.lcm(*case.S) == case.l


def test_diagnostic(qd16):
    A = GroupAlgebra(make_field(7), qd16)
    d = degree_multiset_from_l(7, qd16, wedderburn_shape(A))
    assert d == {"m": 8, "l": 2, "lcm": 2, "agrees": True}


def test_semisimple_case_lookup():
    assert semisimple_case(4, 23).S == (1, 2)
    assert semisimple_case(5, 31).c == 9


def test_idempotents_are_canonical_across_representations(qd16):
    # a relabelled copy of the group gives the same shape
    perm = np.random.default_rng(4).permutation(16)
    inv = np.argsort(perm)
    table = perm[qd16.table[inv][:, inv]]
    H = grp.Group(table)
    A = GroupAlgebra(make_field(5), H)
    assert wedderburn_shape(A) == wedderburn_shape(GroupAlgebra(make_field(5), qd16))
