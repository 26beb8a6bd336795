"""Equivalence and inclusion: bounded on tries, exact on regexes.

Bounded checks unfold two tries side by side breadth-first, so a failure
is reported at the shortest distinguishing word (first in length, then
in alphabet order).  Exact checks run a worklist over pairs of iterated
syntactic derivatives in normal form; success yields the explored pair
relation as a certificate that :func:`check_certificate` can re-verify
from scratch, failure yields the same shortest-word counterexample.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import ops
from .lang import Lang
from .regex import Plus, Regex, deriv, mk_plus, norm, nullable, regex_member, to_text, uses_complement
from .words import Alphabet

__all__ = [
    "BisimCertificate",
    "Counterexample",
    "DerivativeAutomaton",
    "PairLimitExceeded",
    "bisim_bounded",
    "check_certificate",
    "derivative_automaton",
    "equiv_regex",
    "leq_regex",
    "sim_bounded",
    "sim_bounded_via_sum",
]

DEFAULT_PAIR_LIMIT = 100_000


@dataclass(frozen=True)
class Counterexample:
    """A word on which the two sides disagree, with both verdicts."""

    word: tuple
    lhs_verdict: bool
    rhs_verdict: bool


def bisim_bounded(lhs: Lang, rhs: Lang, depth: int, letters: Iterable) -> Counterexample | None:
    """Equality of all labels down to ``depth``; None means no difference found."""
    letters = tuple(letters)
    queue: deque = deque([((), lhs, rhs)])
    while queue:
        word, left, right = queue.popleft()
        la, ra = left.accept, right.accept
        if la != ra:
            return Counterexample(word, la, ra)
        if len(word) < depth:
            for a in letters:
                queue.append((word + (a,), left.derive(a), right.derive(a)))
    return None


def sim_bounded(lhs: Lang, rhs: Lang, depth: int, letters: Iterable) -> Counterexample | None:
    """Label implication (lhs accepts => rhs accepts) down to ``depth``."""
    letters = tuple(letters)
    queue: deque = deque([((), lhs, rhs)])
    while queue:
        word, left, right = queue.popleft()
        la, ra = left.accept, right.accept
        if la and not ra:
            return Counterexample(word, la, ra)
        if len(word) < depth:
            for a in letters:
                queue.append((word + (a,), left.derive(a), right.derive(a)))
    return None


def sim_bounded_via_sum(lhs: Lang, rhs: Lang, depth: int, letters: Iterable) -> Counterexample | None:
    """Same check reduced to bisimulation of lhs+rhs against rhs."""
    found = bisim_bounded(ops.plus(lhs, rhs), rhs, depth, letters)
    if found is None:
        return None
    # The sides differ exactly where lhs accepts and rhs does not.
    return Counterexample(found.word, True, False)


class PairLimitExceeded(RuntimeError):
    """The worklist hit its pair cap before reaching a verdict."""

    def __init__(self, limit: int):
        super().__init__(f"more than {limit} derivative pairs explored; result inconclusive")
        self.limit = limit


@dataclass(frozen=True)
class BisimCertificate:
    """A pair relation witnessing equality (or inclusion) of two regexes.

    ``kind`` is ``"equal"`` or ``"leq"``; the relation contains the root
    pair, is closed under simultaneous derivatives, and every pair's
    nullabilities agree (for equality) or imply left-to-right (for
    inclusion).  All members are in normal form.
    """

    kind: str
    root: tuple[Regex, Regex]
    pairs: frozenset[tuple[Regex, Regex]]


def _pairs_ok(kind: str, left_nullable: bool, right_nullable: bool) -> bool:
    if kind == "equal":
        return left_nullable == right_nullable
    return (not left_nullable) or right_nullable


def _closure(lhs: Regex, rhs: Regex, alphabet: Alphabet, limit: int, kind: str) -> BisimCertificate | Counterexample:
    root = (lhs, rhs)
    seen = {root}
    queue: deque = deque([((), lhs, rhs)])
    symbols = tuple(alphabet)
    while queue:
        word, left, right = queue.popleft()
        if not _pairs_ok(kind, nullable(left), nullable(right)):
            return Counterexample(word, nullable(left), nullable(right))
        for a in symbols:
            pair = (deriv(left, a), deriv(right, a))
            if pair not in seen:
                if len(seen) >= limit:
                    raise PairLimitExceeded(limit)
                seen.add(pair)
                queue.append((word + (a,), *pair))
    return BisimCertificate(kind, root, frozenset(seen))


def equiv_regex(lhs: Regex, rhs: Regex, alphabet: Alphabet,
                limit: int = DEFAULT_PAIR_LIMIT) -> BisimCertificate | Counterexample:
    """Exact language equality; a certificate on success, else the shortest
    distinguishing word.  Raises :class:`PairLimitExceeded` past the cap."""
    return _closure(norm(lhs), norm(rhs), alphabet, limit, "equal")


def leq_regex(lhs: Regex, rhs: Regex, alphabet: Alphabet,
              limit: int = DEFAULT_PAIR_LIMIT) -> BisimCertificate | Counterexample:
    """Exact language inclusion of lhs in rhs.

    Nullability implication is not preserved under complement, so inputs
    using ``~`` are decided as the equality lhs+rhs = rhs instead; the
    returned certificate is then an equality certificate for that sum.
    """
    if uses_complement(lhs) or uses_complement(rhs):
        outcome = _closure(norm(Plus(lhs, rhs)), norm(rhs), alphabet, limit, "equal")
        if isinstance(outcome, Counterexample):
            # A word in the sum but not in rhs is a word in lhs only.
            return Counterexample(outcome.word,
                                  regex_member(lhs, outcome.word),
                                  regex_member(rhs, outcome.word))
        return outcome
    return _closure(norm(lhs), norm(rhs), alphabet, limit, "leq")


def check_certificate(certificate: BisimCertificate, alphabet: Alphabet) -> bool:
    """Re-verify a certificate from its definition, independent of any search:
    root present, labels compatible, closed under simultaneous derivatives."""
    if certificate.kind not in ("equal", "leq"):
        return False
    pairs = certificate.pairs
    if certificate.root not in pairs:
        return False
    for left, right in pairs:
        if not _pairs_ok(certificate.kind, nullable(left), nullable(right)):
            return False
        for a in alphabet:
            if (deriv(left, a), deriv(right, a)) not in pairs:
                return False
    return True


@dataclass(frozen=True)
class DerivativeAutomaton:
    """The finite automaton of iterated normal-form derivatives of a regex.

    States carry their regex; state 0 is the initial one and numbering
    follows breadth-first discovery order, so the layout is stable.
    """

    alphabet: Alphabet
    states: tuple[Regex, ...]
    transitions: tuple[tuple[int, ...], ...]
    accepting: tuple[bool, ...]

    def run(self, word: Sequence[int]) -> bool:
        state = 0
        for letter in word:
            state = self.transitions[state][letter]
        return self.accepting[state]

    def to_dot(self) -> str:
        lines = ["digraph derivatives {", "  rankdir=LR;",
                 "  start [shape=point];", "  start -> s0;"]
        for i, r in enumerate(self.states):
            shape = "doublecircle" if self.accepting[i] else "circle"
            label = to_text(r, self.alphabet).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  s{i} [shape={shape}, label="{label}"];')
        for i, row in enumerate(self.transitions):
            for letter, target in enumerate(row):
                lines.append(f'  s{i} -> s{target} [label="{self.alphabet.name(letter)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def derivative_automaton(r: Regex, alphabet: Alphabet,
                         limit: int = DEFAULT_PAIR_LIMIT) -> DerivativeAutomaton:
    """Explore all iterated derivatives of ``r`` breadth-first."""
    start = norm(r)
    index: dict[Regex, int] = {start: 0}
    states: list[Regex] = [start]
    transitions: list[tuple[int, ...]] = []
    queue: deque = deque([start])
    symbols = tuple(alphabet)
    while queue:
        current = queue.popleft()
        row = []
        for a in symbols:
            successor = deriv(current, a)
            target = index.get(successor)
            if target is None:
                if len(states) >= limit:
                    raise PairLimitExceeded(limit)
                target = index[successor] = len(states)
                states.append(successor)
                queue.append(successor)
            row.append(target)
        transitions.append(tuple(row))
    return DerivativeAutomaton(alphabet, tuple(states), tuple(transitions),
                               tuple(nullable(s) for s in states))
