"""Context-free grammars whose productions are empty or terminal-first,
and the language tries they generate.

A sentential form is a tuple mixing terminal symbols (ints of the
terminal alphabet) and nonterminal names (strings).  The generated
language is built as a trie over *sets* of sentential forms: a set
accepts when some form in it can erase to nothing, and its child under
a terminal is the union of the forms' one-letter successors.  Because
every production either is empty or starts with a terminal, one letter
of lookahead fully determines those successors, and memoizing on the
(canonically ordered) set makes the trie a deterministic automaton over
state sets.

A second, inductive reading is provided by :func:`derives`, a
depth-bounded search over leftmost replacement; agreement of the two is
what the test suite's soundness checks pin down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .lang import Lang
from .words import Alphabet, Symbol, Word

__all__ = [
    "Grammar",
    "GrammarError",
    "SForm",
    "WgnfViolation",
    "derives",
    "grammar_lang",
    "member_states",
    "parse_grammar",
    "state_nullable",
    "state_step",
    "states_lang",
    "validate_wgnf",
]

# Terminals are symbols of the terminal alphabet, nonterminals are their
# names; the types disambiguate the two within a form.
SFSymbol = Union[Symbol, str]
SForm = tuple[SFSymbol, ...]


class GrammarError(ValueError):
    """A malformed grammar, grammar file, or non-weak-GNF production."""


def _element_key(x: SFSymbol):
    return (0, x) if isinstance(x, int) else (1, x)


def _form_key(form: SForm):
    return (len(form), tuple(_element_key(x) for x in form))


def _canonical(forms: Iterable[SForm]) -> tuple[SForm, ...]:
    return tuple(sorted(set(forms), key=_form_key))


@dataclass(frozen=True, eq=False)
class Grammar:
    """An immutable grammar plus a private cache of its state-set tries."""

    terminals: Alphabet
    nonterminals: tuple[str, ...]
    start: str
    productions: Mapping[str, frozenset[SForm]]
    _trie_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        declared = set(self.nonterminals)
        if len(declared) != len(self.nonterminals):
            raise GrammarError("duplicate nonterminal names")
        if self.start not in declared:
            raise GrammarError(f"start symbol {self.start!r} is not declared")
        if set(self.productions) - declared:
            raise GrammarError("production for undeclared nonterminal")
        for name in self.nonterminals:
            for prod in self.productions.get(name, frozenset()):
                for x in prod:
                    if isinstance(x, str):
                        if x not in declared:
                            raise GrammarError(f"undeclared nonterminal {x!r} in a production of {name!r}")
                    elif not 0 <= x < len(self.terminals):
                        raise GrammarError(f"terminal {x} outside the alphabet in a production of {name!r}")

    def prods(self, name: str) -> frozenset[SForm]:
        return self.productions.get(name, frozenset())


@dataclass(frozen=True)
class WgnfViolation:
    """A production that neither is empty nor starts with a terminal."""

    nonterminal: str
    production: SForm

    def __str__(self) -> str:
        shape = " ".join(x if isinstance(x, str) else f"t{x}" for x in self.production)
        return f"production of {self.nonterminal!r} does not start with a terminal: {shape!r}"


def validate_wgnf(grammar: Grammar) -> WgnfViolation | None:
    """First offending production in declaration order, or None if none."""
    for name in grammar.nonterminals:
        for prod in sorted(grammar.prods(name), key=_form_key):
            if prod and not isinstance(prod[0], int):
                return WgnfViolation(name, prod)
    return None


def _require_wgnf(grammar: Grammar) -> None:
    violation = validate_wgnf(grammar)
    if violation is not None:
        raise GrammarError(str(violation))


def state_nullable(grammar: Grammar, form: SForm) -> bool:
    """Whether a form erases to the empty word (every element an ε-nonterminal)."""
    return all(isinstance(x, str) and () in grammar.prods(x) for x in form)


def state_step(grammar: Grammar, form: SForm, letter: Symbol) -> frozenset[SForm]:
    """One-letter successors of a form under leftmost replacement."""
    if not form:
        return frozenset()
    head, rest = form[0], form[1:]
    if isinstance(head, int):
        return frozenset({rest}) if head == letter else frozenset()
    successors = {prod[1:] + rest for prod in grammar.prods(head)
                  if prod and prod[0] == letter}
    if () in grammar.prods(head):
        successors |= state_step(grammar, rest, letter)
    return frozenset(successors)


def states_lang(grammar: Grammar, forms: Iterable[SForm]) -> Lang:
    """The trie of words derivable from any of the given forms."""
    _require_wgnf(grammar)
    return _states_lang(grammar, _canonical(forms))


def _states_lang(grammar: Grammar, state: tuple[SForm, ...]) -> Lang:
    node = grammar._trie_cache.get(state)
    if node is None:

        def step(letter: Symbol) -> Lang:
            successors: set[SForm] = set()
            for form in state:
                successors |= state_step(grammar, form, letter)
            return _states_lang(grammar, _canonical(successors))

        node = Lang(lambda: any(state_nullable(grammar, f) for f in state), step)
        grammar._trie_cache[state] = node
    return node


def grammar_lang(grammar: Grammar) -> Lang:
    """The language trie of the grammar, from its start symbol."""
    return states_lang(grammar, [(grammar.start,)])


def member_states(grammar: Grammar, forms: Iterable[SForm], word: Word) -> bool:
    """Membership by stepping the state set through the word."""
    _require_wgnf(grammar)
    state = set(forms)
    for letter in word:
        if not state:
            return False
        state = {succ for form in state for succ in state_step(grammar, form, letter)}
    return any(state_nullable(grammar, f) for f in state)


def derives(grammar: Grammar, form: Iterable[SFSymbol], word: Word) -> bool:
    """Whether the form derives the word, by bounded leftmost-replacement search.

    Along any live branch a non-empty production exposes a terminal that
    must match immediately, so at most ``len(word) + 1`` of them fire,
    and the empty productions in between only ever shorten the form.
    The fuel covers both with room to spare; running out means the
    grammar was not weak-GNF and is reported loudly.
    """
    _require_wgnf(grammar)
    form = tuple(form)
    longest = max((len(p) for ps in grammar.productions.values() for p in ps), default=1)
    fuel = len(form) + (len(word) + 1) * (max(longest, 1) + 2) + 2
    return _derives(grammar, form, tuple(word), fuel)


def _derives(grammar: Grammar, form: SForm, word: Word, fuel: int) -> bool:
    if fuel <= 0:
        raise GrammarError("derivation search ran out of fuel; grammar is not weak-GNF")
    if not form:
        return not word
    head, rest = form[0], form[1:]
    if isinstance(head, str):
        return any(_derives(grammar, prod + rest, word, fuel - 1)
                   for prod in sorted(grammar.prods(head), key=_form_key))
    if not word or word[0] != head:
        return False
    return _derives(grammar, rest, word[1:], fuel - 1)


def parse_grammar(text: str) -> Grammar:
    """Read a grammar from its text form.

    One rule per line, ``S -> "" | a | b | a S a | b S b``; symbols are
    whitespace-separated, ``""`` is the empty production, an uppercase
    first letter marks a nonterminal unless a ``terminals: a b`` header
    claims the token.  ``#`` starts a comment.  The first left-hand side
    is the start symbol.
    """
    declared_terminals: list[str] | None = None
    rules: list[tuple[str, list[list[str]]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("terminals:"):
            if declared_terminals is not None:
                raise GrammarError(f"line {lineno}: repeated terminals header")
            declared_terminals = line[len("terminals:"):].split()
            continue
        if "->" not in line:
            raise GrammarError(f"line {lineno}: expected 'Name -> alternatives'")
        lhs, rhs = line.split("->", 1)
        lhs = lhs.strip()
        if not lhs or len(lhs.split()) != 1:
            raise GrammarError(f"line {lineno}: bad left-hand side {lhs!r}")
        alternatives = [alt.split() for alt in rhs.split("|")]
        if any(not alt for alt in alternatives):
            raise GrammarError(f"line {lineno}: empty alternative (use \"\" for the empty production)")
        rules.append((lhs, alternatives))
    if not rules:
        raise GrammarError("grammar has no rules")

    nonterminals = list(dict.fromkeys(lhs for lhs, _ in rules))
    lhs_set = set(nonterminals)

    def is_nonterminal(token: str) -> bool:
        if declared_terminals is not None and token in declared_terminals:
            return False
        return token[0].isupper() or token in lhs_set

    terminal_names: list[str] = list(declared_terminals or [])
    for _, alternatives in rules:
        for alt in alternatives:
            for token in alt:
                if token != '""' and not is_nonterminal(token) and token not in terminal_names:
                    terminal_names.append(token)
    if not terminal_names:
        raise GrammarError("grammar uses no terminals")
    alphabet = Alphabet(terminal_names)

    productions: dict[str, set[SForm]] = {name: set() for name in nonterminals}
    for lhs, alternatives in rules:
        for alt in alternatives:
            if alt == ['""']:
                productions[lhs].add(())
                continue
            form: list[SFSymbol] = []
            for token in alt:
                if token == '""':
                    raise GrammarError(f'"" must stand alone in an alternative of {lhs!r}')
                if is_nonterminal(token):
                    if token not in lhs_set:
                        raise GrammarError(f"nonterminal {token!r} has no rule")
                    form.append(token)
                else:
                    form.append(alphabet.symbol(token))
            productions[lhs].add(tuple(form))

    return Grammar(alphabet, tuple(nonterminals), nonterminals[0],
                   {name: frozenset(ps) for name, ps in productions.items()})
