"""Strong equivalence of ground logic programs under the stable-model semantics."""

from .classical import (
    Pair,
    Witness,
    build_witness,
    find_witness,
    models_a,
    models_star,
    sat_a,
    sat_b,
    sat_star,
    se_by_subtotal,
    stable_models_circ,
    strongly_equivalent,
    subtotal_models,
)
from .errors import (
    NestedInput,
    ParseError,
    SchemaMismatch,
    SeCheckError,
    SignatureTooLarge,
    UnsupportedOperator,
)
from .ht import ht_equilibrium, ht_models, ht_sat
from .l3 import (
    TriValue,
    check_transformation,
    l3_models,
    l3_stable_models,
    l3_tautology,
    strongly_equivalent_l3,
)
from .normal_form import normalize
from .parser import parse_formula, parse_program, parse_theory, print_program, print_theory
from .semantics import minimal_models, reduct, sample_refute_se, stable_models, union
from .syntax import (
    Atom,
    NonNestedRule,
    Program,
    Rule,
    Signature,
    Theory,
    as_non_nested,
    classical_sat,
)

__version__ = "0.1.0"

__all__ = [
    "Pair",
    "Witness",
    "build_witness",
    "find_witness",
    "models_a",
    "models_star",
    "sat_a",
    "sat_b",
    "sat_star",
    "se_by_subtotal",
    "stable_models_circ",
    "strongly_equivalent",
    "subtotal_models",
    "NestedInput",
    "ParseError",
    "SchemaMismatch",
    "SeCheckError",
    "SignatureTooLarge",
    "UnsupportedOperator",
    "TriValue",
    "check_transformation",
    "l3_models",
    "l3_stable_models",
    "l3_tautology",
    "strongly_equivalent_l3",
    "Atom",
    "NonNestedRule",
    "Program",
    "Rule",
    "Signature",
    "Theory",
    "as_non_nested",
    "classical_sat",
    "ht_equilibrium",
    "ht_models",
    "ht_sat",
    "normalize",
    "parse_formula",
    "parse_program",
    "parse_theory",
    "print_program",
    "print_theory",
    "minimal_models",
    "reduct",
    "sample_refute_se",
    "stable_models",
    "union",
]
