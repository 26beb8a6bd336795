"""Bounded reference semantics for regexes, by plain set recursion.

Independent of the trie machinery: every operator is evaluated on
explicit finite word sets truncated to the length bound, so results can
be compared wholesale against bounded trie enumeration.
"""

from __future__ import annotations

from .regex import Atom, Concat, Inter, Not, One, Plus, Regex, Shuffle, Star, Zero
from .words import Alphabet, BoundedLang, Word

__all__ = ["eval_bounded", "interleavings"]


def interleavings(u: Word, v: Word) -> set[Word]:
    """All order-preserving merges of two words."""
    if not u:
        return {tuple(v)}
    if not v:
        return {tuple(u)}
    return {(u[0], *rest) for rest in interleavings(u[1:], v)} | \
           {(v[0], *rest) for rest in interleavings(u, v[1:])}


def _cat(xs: set[Word], ys: set[Word], bound: int) -> set[Word]:
    return {x + y for x in xs for y in ys if len(x) + len(y) <= bound}


def _eval(r: Regex, bound: int, alphabet: Alphabet) -> set[Word]:
    if isinstance(r, Zero):
        return set()
    if isinstance(r, One):
        return {()}
    if isinstance(r, Atom):
        return {(r.symbol,)} if bound >= 1 else set()
    if isinstance(r, Plus):
        return _eval(r.lhs, bound, alphabet) | _eval(r.rhs, bound, alphabet)
    if isinstance(r, Inter):
        return _eval(r.lhs, bound, alphabet) & _eval(r.rhs, bound, alphabet)
    if isinstance(r, Not):
        return set(alphabet.words_upto(bound)) - _eval(r.body, bound, alphabet)
    if isinstance(r, Concat):
        return _cat(_eval(r.lhs, bound, alphabet), _eval(r.rhs, bound, alphabet), bound)
    if isinstance(r, Star):
        base = _eval(r.body, bound, alphabet)
        # Least fixed point of S = {ε} ∪ base·S, truncated; at most one
        # growth round per word length plus one to detect stability.
        words: set[Word] = {()}
        for _ in range(bound + 1):
            grown = words | _cat(base, words, bound)
            if grown == words:
                break
            words = grown
        return words
    if isinstance(r, Shuffle):
        lhs = _eval(r.lhs, bound, alphabet)
        rhs = _eval(r.rhs, bound, alphabet)
        merged: set[Word] = set()
        for x in lhs:
            for y in rhs:
                if len(x) + len(y) <= bound:
                    merged |= interleavings(x, y)
        return merged
    raise TypeError(f"not a regex: {r!r}")


def eval_bounded(r: Regex, bound: int, alphabet: Alphabet) -> BoundedLang:
    """All words of length <= bound matched by ``r``."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return BoundedLang(bound, alphabet, frozenset(_eval(r, bound, alphabet)))
