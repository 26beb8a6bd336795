"""Formal languages as lazy infinite tries.

Languages are represented behaviorally: a node answers whether the word
leading to it is accepted and hands out one child per letter, computed
on demand and cached.  On top of that one representation the package
provides the regular and shuffle operations (each in two observably
equal styles), extended regexes with syntactic derivatives, bounded
reference semantics, context-free grammars in weak Greibach normal
form, and bounded as well as exact, certificate-producing equivalence
checking.  ``trielang.cli`` exposes it all as a command line.
"""

from .words import Alphabet, AlphabetError, BoundedLang, Symbol, Word
from .lang import (Continue, Lang, Stop, coiterate, corecurse, from_predicate,
                   make, out_bounded, share_caches)
from .ops import (atom, collapse, compl, concat, concat_direct, deferred_concat,
                  deferred_iter, deferred_shuffle, inter, one, plus, shuffle,
                  shuffle_direct, star, star_direct, zero)
from .regex import (Atom, Concat, Inter, Not, One, Plus, Regex, RegexSyntaxError,
                    Shuffle, Star, Zero, denote, deriv, norm, nullable, to_text)
from .regex import parse as parse_regex
from .oracle import eval_bounded, interleavings
from .grammar import (Grammar, GrammarError, WgnfViolation, derives, grammar_lang,
                      member_states, parse_grammar, state_nullable, state_step,
                      states_lang, validate_wgnf)
from .equiv import (BisimCertificate, Counterexample, DerivativeAutomaton,
                    PairLimitExceeded, bisim_bounded, check_certificate,
                    derivative_automaton, equiv_regex, leq_regex, sim_bounded,
                    sim_bounded_via_sum)
from .axioms import AxiomResult, OpsTable, random_regex, run_battery

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "AlphabetError", "BoundedLang", "Symbol", "Word",
    "Continue", "Lang", "Stop", "coiterate", "corecurse", "from_predicate",
    "make", "out_bounded", "share_caches",
    "atom", "collapse", "compl", "concat", "concat_direct", "deferred_concat",
    "deferred_iter", "deferred_shuffle", "inter", "one", "plus", "shuffle",
    "shuffle_direct", "star", "star_direct", "zero",
    "Atom", "Concat", "Inter", "Not", "One", "Plus", "Regex", "RegexSyntaxError",
    "Shuffle", "Star", "Zero", "denote", "deriv", "norm", "nullable", "to_text",
    "parse_regex",
    "eval_bounded", "interleavings",
    "Grammar", "GrammarError", "WgnfViolation", "derives", "grammar_lang",
    "member_states", "parse_grammar", "state_nullable", "state_step",
    "states_lang", "validate_wgnf",
    "BisimCertificate", "Counterexample", "DerivativeAutomaton",
    "PairLimitExceeded", "bisim_bounded", "check_certificate",
    "derivative_automaton", "equiv_regex", "leq_regex", "sim_bounded",
    "sim_bounded_via_sum",
    "AxiomResult", "OpsTable", "random_regex", "run_battery",
    "__version__",
]
