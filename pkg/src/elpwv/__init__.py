"""Three-valued world views for ground epistemic logic programs.

A world view here is a candidate world interpretation: every atom is always
true, always false, or unknown across the answer sets of the program's
epistemic reduct. The package also covers the Shen–Eiter semantics,
equivalence and strong equivalence, and a QSAT case study.
"""

from .asp import (
    SEModel,
    answer_sets,
    asp_strongly_equivalent,
    gl_reduct,
    models,
    satisfies,
    se_models,
)
from .engine import (
    SECWV,
    CorrespondenceReport,
    InconsistentGuess,
    WorldViewResult,
    add_tautology_rules,
    check_correspondence,
    compatible,
    cwi_to_guess,
    enumerate_cwvs,
    enumerate_se_cwvs,
    epistemic_reduct_cwi,
    epistemic_reduct_guess,
    guess_to_cwi,
    is_cwv,
    se_wvs,
)
from .equivalence import (
    EquivalenceVerdict,
    cwv_equivalent,
    se_cwv_equivalent,
    se_function,
    se_wv_equivalent,
    strongly_equivalent,
    wv_equivalent,
)
from .syntax import (
    CWI,
    BodyElement,
    EpistemicLiteral,
    Kind,
    Literal,
    ParseError,
    Program,
    Rule,
    elit_of,
    extend_universe,
    format_program,
    parse_program,
    program_from_json,
    program_to_json,
    union,
)

__version__ = "0.1.0"
