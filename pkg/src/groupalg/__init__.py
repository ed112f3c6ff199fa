"""Exact group algebras F_q[G] over finite fields and their unit groups."""

from .algebra import (
    AlgebraElement,
    GroupAlgebra,
    Ideal,
    Subspace,
    center,
    count_units,
    is_semisimple,
    is_unit,
    jacobson_radical,
    omega_FG,
    omega_N,
)
from .gf import Field, FieldElement, field_of_order, make_field
from .grp import Group, Subgroup, conjugacy_classes, cyclic_group, qd_group, symmetric_group
from .poly import Polynomial, factor, min_poly
from .unitgrp import exponent_certificate, exponent_of_V, modular_report, semisimple_unit_structure
from .wedderburn import (
    WedderburnShape,
    central_idempotents,
    f_conjugacy,
    l_value,
    unit_group_order,
    unit_group_structure,
    wedderburn_shape,
)

__version__ = "0.1.0"
