"""Decision procedures dual to unification over string rewriting systems.

The package answers three questions about a finite string rewriting
system R: does alpha W rewrite to W for some W (fixed point), does
alpha W meet beta W (common term), and do two word substitutions share a
non-trivial equation (common equation). The fixed point question is
decided for dwindling convergent systems, the other two for monadic
convergent systems; instance generators for the undecidable classes and a
bounded brute-force oracle round out the toolkit.
"""

from .automata import (
    Dfa,
    Mefa,
    WitnessTriple,
    concat_letter,
    concat_word,
    dfa_from_words,
    dump_dfa,
    dump_mefa,
    empty_dfa,
    enumerate_language,
    exists_xyz,
    intersect_dfa,
    left_quotient_mefa,
    mefa_intersect_witness,
    union_dfa,
    universal_dfa,
)
from .errors import (
    AlphaEmpty,
    AlphaReducible,
    AlphabetMismatch,
    ClassViolation,
    DegenerateInput,
    FuelExhausted,
    InputReducible,
    NotConvergent,
    NotDwindling,
    NotInterReduced,
    NotMonadic,
    SrsError,
    SrsSyntaxError,
    VerificationFailed,
)
from .fixed_point import (
    Decomposition,
    FpInstance,
    FpSolution,
    decompose_reduction,
    solve_fp_dwindling,
    solve_fp_via_ct,
)
from .monadic import (
    CeSolution,
    CtSolution,
    MonadicContext,
    RfLanguage,
    SolPair,
    mp_set,
    rf1_dfa,
    rf_dfa,
    sol_pairs,
    solve_ce_one,
    solve_ce_two,
    solve_ct_monadic,
)
from .oracle import OracleAnswer, OracleQuery, oracle_search
from .reductions import (
    Dlba,
    EncodedInstance,
    GpcpInstance,
    encode_dlba_to_srs,
    encode_gpcp_to_ce,
    encode_gpcp_to_ct,
    format_dlba,
    format_gpcp,
    gpcp_ce_witness,
    gpcp_ct_witness,
    parse_dlba,
    parse_gpcp,
    random_solvable_gpcp,
    rewrite_reachable,
    run_dlba,
)
from .srs import (
    DEFAULT_FUEL,
    Classification,
    ConvergenceEvidence,
    CriticalPair,
    Rule,
    Srs,
    check_convergence,
    classify,
    critical_pairs,
    format_srs,
    irr_dfa,
    is_irreducible,
    normalize,
    one_step_rewrites,
    parse_srs,
    rewrite_steps,
)
from .words import EMPTY, Word, word, word_str

__version__ = "0.1.0"
