"""Complexity of suffix-free regular languages: quotient/state
complexity of operations, syntactic complexity, atom complexities,
witness DFA families and an exhaustive small-degree verification
harness."""

from .automata import (
    BudgetError,
    Dfa,
    Nfa,
    Transformation,
    canonicalize,
    compose,
    determinize,
    is_isomorphic,
    minimize,
    quotient_complexity,
    word_transformation,
)
from .semigroups import (
    BSF,
    VSF,
    WSF,
    TransitionSemigroup,
    colliding_pairs,
    enumerate_class,
    focused_pairs,
    generate,
    in_bsf,
    in_vsf,
    in_wsf,
    is_subsemigroup_of,
    transition_semigroup,
    vsf_generators,
    wsf_cardinality,
    wsf_generators,
    zero_path,
)
from .langops import (
    BooleanOp,
    PartialPermutation,
    apply_dialect,
    boolean,
    complement,
    concat,
    equivalent,
    is_suffix_free,
    reverse,
    star,
    suffix_free_report,
)
from .atoms import (
    atom_complexity,
    atom_dfa,
    atom_report,
    atoms,
    is_atom,
    middle_basis_bound,
    suffix_free_atom_bound,
    syntactic_complexity,
)
from .witnesses import (
    binary_product_pair,
    d5,
    d6,
    pred_word,
    verify_pred_word,
)
from .verify import (
    ComplexityReport,
    SearchReport,
    search_subsemigroups,
    verify,
    verify_all,
    verify_atom_table,
    verify_semigroup_classes,
    verify_tables,
)

__version__ = "0.1.0"

__all__ = [
    "BSF",
    "VSF",
    "WSF",
    "BooleanOp",
    "BudgetError",
    "ComplexityReport",
    "Dfa",
    "Nfa",
    "PartialPermutation",
    "SearchReport",
    "TransitionSemigroup",
    "Transformation",
    "apply_dialect",
    "atom_complexity",
    "atom_dfa",
    "atom_report",
    "atoms",
    "binary_product_pair",
    "boolean",
    "canonicalize",
    "colliding_pairs",
    "complement",
    "compose",
    "concat",
    "d5",
    "d6",
    "determinize",
    "enumerate_class",
    "equivalent",
    "focused_pairs",
    "generate",
    "in_bsf",
    "in_vsf",
    "in_wsf",
    "is_atom",
    "is_isomorphic",
    "is_subsemigroup_of",
    "is_suffix_free",
    "middle_basis_bound",
    "minimize",
    "pred_word",
    "quotient_complexity",
    "reverse",
    "search_subsemigroups",
    "star",
    "suffix_free_atom_bound",
    "suffix_free_report",
    "syntactic_complexity",
    "transition_semigroup",
    "verify",
    "verify_all",
    "verify_atom_table",
    "verify_pred_word",
    "verify_semigroup_classes",
    "verify_tables",
    "vsf_generators",
    "word_transformation",
    "wsf_cardinality",
    "wsf_generators",
    "zero_path",
]
