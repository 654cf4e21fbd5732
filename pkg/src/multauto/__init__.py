"""Multiplicative automorphism groups of R, C and finite fields."""

from .additive import (
    ComplexAdditiveAuto,
    LatticeFixingAdditiveAuto,
    RealAdditiveAuto,
    eval_complex_additive,
    eval_lattice_fixing,
    eval_real_additive,
    fixes_lattice,
    from_multiplicative,
    principal_log,
    to_multiplicative,
)
from .complex_autos import (
    ComplexAuto,
    ComponentTag,
    center,
    commutes_with_conjugation,
    component_of,
    conjugation_auto,
    eval_complex,
    identity_auto,
    invert_auto,
    is_increasing_on_reals,
    is_rotation_like,
    quotient_compose,
    semidirect_factor,
    star_compose,
)
from .errors import *  # noqa: F401,F403
from .ff import (
    FieldElement,
    FiniteField,
    euler_phi,
    ff_add,
    ff_inv,
    ff_mul,
    ff_neg,
    make_field,
    multiplicative_order,
    primitive_element,
)
from .ff_autos import (
    PowerAutomorphism,
    apply,
    compose,
    enumerate_mult_autos,
    frobenius_subgroup,
    invert,
    is_multiplicative_automorphism,
    power_automorphism,
)
from .hom import check_hom, parse_spec
from .real import (
    RealAuto,
    compose_real,
    eval_real,
    extend_from_positive,
    invert_real,
    preserves_rationals,
)

__version__ = "0.1.0"
