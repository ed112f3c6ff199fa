"""Known unit-group data for F_q[QD_16] and F_q[QD_32].

Semisimple cases are keyed by q mod m (m = 8 for QD_16, 16 for QD_32).
``S`` lists the degrees [K_i : F_q] of the 2x2 matrix components; the
commutative part is always four copies of F_q.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SemisimpleCase:
    T: tuple[int, ...]
    c: int
    S: tuple[int, ...]
    l: int

    @property
    def components(self) -> tuple[tuple[int, int], ...]:
        """(n, d) pairs: four copies of F_q plus M(2, F_{q^d}) for d in S."""
        return tuple(sorted([(1, 1)] * 4 + [(2, d) for d in self.S], key=lambda c: (c[1], c[0])))


SEMISIMPLE = {
    4: {
        1: SemisimpleCase(T=(1,), c=7, S=(1, 1, 1), l=1),
        3: SemisimpleCase(T=(1, 3), c=7, S=(1, 1, 1), l=1),
        5: SemisimpleCase(T=(1, 5), c=6, S=(1, 2), l=2),
        7: SemisimpleCase(T=(1, 7), c=6, S=(1, 2), l=2),
    },
    5: {
        1: SemisimpleCase(T=(1,), c=11, S=(1,) * 7, l=1),
        7: SemisimpleCase(T=(1, 7), c=11, S=(1,) * 7, l=1),
        15: SemisimpleCase(T=(1, 15), c=9, S=(1, 1, 1, 2, 2), l=2),
        9: SemisimpleCase(T=(1, 9), c=9, S=(1, 1, 1, 2, 2), l=2),
        3: SemisimpleCase(T=(1, 3, 9, 11), c=7, S=(1, 2, 4), l=4),
        11: SemisimpleCase(T=(1, 3, 9, 11), c=7, S=(1, 2, 4), l=4),
        5: SemisimpleCase(T=(1, 5, 9, 13), c=7, S=(1, 2, 4), l=4),
        13: SemisimpleCase(T=(1, 5, 9, 13), c=7, S=(1, 2, 4), l=4),
    },
}


@dataclass(frozen=True)
class ModularCase:
    dim_J: int
    exponent: int
    center_dim: int
    # normal subgroup N with G/N = C_2, by generator names, and dim omega(N)
    normal_subgroup: tuple[str, ...]
    dim_omega_normal: int
    omega_normal_vanishing_power: int | None
    nilpotency_class: int | None
    derived_in_center: bool | None
    centrally_metabelian: bool | None


MODULAR = {
    4: ModularCase(
        dim_J=15,
        exponent=8,
        center_dim=7,
        normal_subgroup=("a^2", "x"),
        dim_omega_normal=14,
        omega_normal_vanishing_power=5,
        nilpotency_class=4,
        derived_in_center=True,
        centrally_metabelian=True,
    ),
    5: ModularCase(
        dim_J=31,
        exponent=16,
        center_dim=11,
        normal_subgroup=("a",),
        dim_omega_normal=30,
        omega_normal_vanishing_power=None,
        nilpotency_class=None,
        derived_in_center=None,
        centrally_metabelian=None,
    ),
}

# the ordinary conjugacy classes, by element names
CONJUGACY_CLASSES = {
    4: [
        ["1"],
        ["a^4"],
        ["a^2", "a^6"],
        ["a", "a^3"],
        ["a^5", "a^7"],
        ["x", "a^2x", "a^4x", "a^6x"],
        ["ax", "a^3x", "a^5x", "a^7x"],
    ],
    5: [
        ["1"],
        ["a^8"],
        ["a", "a^7"],
        ["a^2", "a^14"],
        ["a^3", "a^5"],
        ["a^4", "a^12"],
        ["a^6", "a^10"],
        ["a^15", "a^9"],
        ["a^13", "a^11"],
        ["x", "a^2x", "a^4x", "a^6x", "a^8x", "a^10x", "a^12x", "a^14x"],
        ["ax", "a^3x", "a^5x", "a^7x", "a^9x", "a^11x", "a^13x", "a^15x"],
    ],
}


def semisimple_case(k: int, q: int) -> SemisimpleCase:
    m = 2 ** (k - 1)
    return SEMISIMPLE[k][q % m]
