"""Randomized checking of the algebraic laws of the trie operations.

Each law is instantiated with random regex denotations and decided by
bounded bisimulation (or simulation, for the inequational ones).  Laws
with a premise draw fresh instances until enough satisfy it, so every
law is exercised on a full quota of meaningful cases.  The operations
under test come in through a table, which lets a test plug in a broken
operation and watch the right law fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import ops
from .equiv import Counterexample, bisim_bounded, sim_bounded
from .lang import Lang
from .regex import (Atom, Concat, Inter, Not, One, Plus, Regex, Shuffle, Star,
                    Zero, denote, to_text)
from .words import Alphabet, Word

__all__ = [
    "AxiomResult",
    "DEFAULT_SEED",
    "OpsTable",
    "REAL_OPS",
    "Witness",
    "random_regex",
    "run_battery",
]

# Battery runs are reproducible: this is the seed the acceptance run and
# the CLI default use.
DEFAULT_SEED = 0

# How many random draws a premise-carrying law may burn per counted
# instance before the battery gives up on filling its quota.
_ATTEMPT_FACTOR = 50


def random_regex(rng: random.Random, alphabet: Alphabet, depth: int,
                 extended: bool = False) -> Regex:
    """A random regex of AST depth <= ``depth``.

    Union and concatenation dominate; star is damped (and with
    ``extended``, intersection, complement and shuffle are mixed in at
    low weight) to keep bounded enumeration of the results cheap.
    """
    symbols = tuple(alphabet)
    if depth <= 0 or rng.random() < 0.25:
        leaf = rng.choices(("atom", "one", "zero"), weights=(6, 1, 1))[0]
        if leaf == "atom":
            return Atom(rng.choice(symbols))
        return One() if leaf == "one" else Zero()
    kinds = ["plus", "concat", "star"]
    weights = [4, 4, 2]
    if extended:
        kinds += ["inter", "compl", "shuffle"]
        weights += [2, 1, 1]
    kind = rng.choices(kinds, weights=weights)[0]
    if kind == "star":
        return Star(random_regex(rng, alphabet, depth - 1, extended))
    if kind == "compl":
        return Not(random_regex(rng, alphabet, depth - 1, extended))
    lhs = random_regex(rng, alphabet, depth - 1, extended)
    rhs = random_regex(rng, alphabet, depth - 1, extended)
    return {"plus": Plus, "concat": Concat, "inter": Inter, "shuffle": Shuffle}[kind](lhs, rhs)


@dataclass(frozen=True)
class OpsTable:
    """The operations a law is stated over; swap one out to break it."""

    zero: Callable[[], Lang] = ops.zero
    one: Callable[[], Lang] = ops.one
    plus: Callable[[Lang, Lang], Lang] = ops.plus
    concat: Callable[[Lang, Lang], Lang] = ops.concat
    star: Callable[[Lang], Lang] = ops.star


REAL_OPS = OpsTable()


@dataclass(frozen=True)
class Witness:
    """A failing instantiation: the operand regexes and the bad word."""

    operands: tuple[Regex, ...]
    word: Word

    def describe(self, alphabet: Alphabet) -> str:
        names = "LKM"
        parts = [f"{names[i]}={to_text(r, alphabet)}" for i, r in enumerate(self.operands)]
        parts.append(f"word={alphabet.text(self.word) or 'ε'}")
        return "; ".join(parts)


@dataclass
class AxiomResult:
    """Outcome of one law over its quota of instances."""

    name: str
    relation: str
    attempts: int
    checked: int
    passes: int
    failures: list[Witness] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class _Law:
    name: str
    arity: int
    relation: str  # "eq" | "leq"
    build: Callable
    premise: Callable | None = None


def _laws() -> list[_Law]:
    return [
        _Law("0 + L = L", 1, "eq", lambda t, L: (t.plus(t.zero(), L), L)),
        _Law("L + L = L", 1, "eq", lambda t, L: (t.plus(L, L), L)),
        _Law("L + K = K + L", 2, "eq", lambda t, L, K: (t.plus(L, K), t.plus(K, L))),
        _Law("(L + K) + M = L + (K + M)", 3, "eq",
             lambda t, L, K, M: (t.plus(t.plus(L, K), M), t.plus(L, t.plus(K, M)))),
        _Law("0 . L = 0", 1, "eq", lambda t, L: (t.concat(t.zero(), L), t.zero())),
        _Law("L . 0 = 0", 1, "eq", lambda t, L: (t.concat(L, t.zero()), t.zero())),
        _Law("1 . L = L", 1, "eq", lambda t, L: (t.concat(t.one(), L), L)),
        _Law("L . 1 = L", 1, "eq", lambda t, L: (t.concat(L, t.one()), L)),
        _Law("(L . K) . M = L . (K . M)", 3, "eq",
             lambda t, L, K, M: (t.concat(t.concat(L, K), M), t.concat(L, t.concat(K, M)))),
        _Law("(L + K) . M = L . M + K . M", 3, "eq",
             lambda t, L, K, M: (t.concat(t.plus(L, K), M), t.plus(t.concat(L, M), t.concat(K, M)))),
        _Law("M . (L + K) = M . L + M . K", 3, "eq",
             lambda t, L, K, M: (t.concat(M, t.plus(L, K)), t.plus(t.concat(M, L), t.concat(M, K)))),
        _Law("L accepts ε  =>  1 + L = L", 1, "eq",
             lambda t, L: (t.plus(t.one(), L), L),
             premise=lambda t, langs, depth, letters: langs[0].accept),
        _Law("K accepts ε  =>  L <= L . K", 2, "leq",
             lambda t, L, K: (L, t.concat(L, K)),
             premise=lambda t, langs, depth, letters: langs[1].accept),
        _Law("1 + L . L* <= L*", 1, "leq",
             lambda t, L: (t.plus(t.one(), t.concat(L, t.star(L))), t.star(L))),
        _Law("L + M . K <= M  =>  L . K* <= M", 3, "leq",
             lambda t, L, M, K: (t.concat(L, t.star(K)), M),
             premise=lambda t, langs, depth, letters: sim_bounded(
                 t.plus(langs[0], t.concat(langs[1], langs[2])), langs[1], depth, letters) is None),
    ]


def _check(law: _Law, table: OpsTable, langs: Sequence[Lang], depth: int,
           letters: tuple) -> Counterexample | None:
    lhs, rhs = law.build(table, *langs)
    if law.relation == "eq":
        return bisim_bounded(lhs, rhs, depth, letters)
    return sim_bounded(lhs, rhs, depth, letters)


def _size(r: Regex) -> int:
    if isinstance(r, (Zero, One, Atom)):
        return 1
    if isinstance(r, (Star, Not)):
        return 1 + _size(r.body)
    return 1 + _size(r.lhs) + _size(r.rhs)


def _shrink_candidates(r: Regex) -> list[Regex]:
    if isinstance(r, (Star, Not)):
        subterms = [r.body]
    elif isinstance(r, (Plus, Inter, Concat, Shuffle)):
        subterms = [r.lhs, r.rhs]
    else:
        subterms = []
    extra = [] if isinstance(r, (Zero, One)) else [Zero(), One()]
    return subterms + extra


def _shrink(law: _Law, table: OpsTable, operands: tuple[Regex, ...], depth: int,
            letters: tuple) -> tuple[tuple[Regex, ...], Word]:
    """Greedily replace operands by smaller ones while the law still fails."""

    def still_fails(candidate: tuple[Regex, ...]) -> Counterexample | None:
        langs = tuple(denote(r) for r in candidate)
        if law.premise is not None and not law.premise(table, langs, depth, letters):
            return None
        return _check(law, table, langs, depth, letters)

    word = _check(law, table, tuple(denote(r) for r in operands), depth, letters).word
    improved = True
    while improved:
        improved = False
        for i, r in enumerate(operands):
            for candidate in _shrink_candidates(r):
                if _size(candidate) >= _size(r):
                    continue
                trial = operands[:i] + (candidate,) + operands[i + 1:]
                cex = still_fails(trial)
                if cex is not None:
                    operands, word, improved = trial, cex.word, True
                    break
            if improved:
                break
    return operands, word


def run_battery(seed: int = DEFAULT_SEED, trials: int = 100, depth: int = 5,
                alphabet: Alphabet | None = None, table: OpsTable = REAL_OPS,
                operand_depth: int = 2) -> list[AxiomResult]:
    """Check every law on ``trials`` random instances at the given depth.

    Deterministic in ``seed``.  ``trials=0`` produces an empty report.
    """
    if trials == 0:
        return []
    if alphabet is None:
        alphabet = Alphabet("ab")
    rng = random.Random(seed)
    letters = tuple(alphabet)
    results = []
    for law in _laws():
        attempts = checked = passes = 0
        failures: list[Witness] = []
        while checked < trials and attempts < trials * _ATTEMPT_FACTOR:
            attempts += 1
            operands = tuple(random_regex(rng, alphabet, operand_depth)
                             for _ in range(law.arity))
            langs = tuple(denote(r) for r in operands)
            if law.premise is not None and not law.premise(table, langs, depth, letters):
                continue
            checked += 1
            cex = _check(law, table, langs, depth, letters)
            if cex is None:
                passes += 1
            else:
                failures.append(Witness(*_shrink(law, table, operands, depth, letters)))
        results.append(AxiomResult(law.name, law.relation, attempts, checked, passes, failures))
    return results
