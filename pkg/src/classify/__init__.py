from .forms import FormSpec, form_spec
from .names import ALIASES, Family, MatrixGroupName
from .tables import (
    CONCLUSION_TABLES,
    DIMENSION_EQUALITIES,
    G2_TABLE,
    KNOWN_TYPOS,
    SPIN_TABLE,
    THEOREMS,
    classify,
    cross_check_tables,
    signatures_up_to,
    theorem_case,
)
from .verify import flags_consistent, verify_classification

__all__ = [
    "ALIASES",
    "CONCLUSION_TABLES",
    "DIMENSION_EQUALITIES",
    "Family",
    "FormSpec",
    "G2_TABLE",
    "KNOWN_TYPOS",
    "MatrixGroupName",
    "SPIN_TABLE",
    "THEOREMS",
    "classify",
    "cross_check_tables",
    "flags_consistent",
    "form_spec",
    "signatures_up_to",
    "theorem_case",
    "verify_classification",
]
