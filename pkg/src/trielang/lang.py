"""Languages as lazy infinite tries.

A language over an alphabet is represented by the infinite trie of all
words: each node says whether the word spelled by the path to it belongs
to the language, and has one subtree per letter (the left quotient by
that letter).  Nodes are built from a root label and a step function and
force nothing until observed; both observations are cached, so a node is
computed at most once however often it is revisited.

Nodes are deliberately agnostic about what a "letter" is: ordinary
languages branch over symbols, while the deferred operation forms in
:mod:`trielang.ops` branch over (symbol, flag) pairs.  A letter only has
to be hashable and comparable with ``==``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Any, Callable, Iterable

from .words import Alphabet, BoundedLang, Word

__all__ = [
    "Continue",
    "Lang",
    "Stop",
    "coiterate",
    "corecurse",
    "from_predicate",
    "make",
    "out_bounded",
    "share_caches",
]

# Cache fills are plain attribute/dict writes, correct for a single
# thread.  Sharing tries across threads is opt-in: share_caches(True)
# routes every fill through one lock.
_fill_lock: threading.RLock | None = None


def share_caches(enabled: bool = True) -> None:
    """Synchronize observation caches so tries may be shared across threads."""
    global _fill_lock
    _fill_lock = threading.RLock() if enabled else None


class Lang:
    """One node of a language trie.

    ``accept`` may be given as a plain bool or as a zero-argument thunk;
    thunks are forced on first observation only.  ``step`` maps a letter
    to the child node and is called at most once per letter.
    """

    __slots__ = ("_accept", "_step", "_children")

    def __init__(self, accept: bool | Callable[[], bool], step: Callable[[Any], "Lang"]):
        self._accept = accept
        self._step = step
        self._children: dict[Any, Lang] = {}

    @property
    def accept(self) -> bool:
        """Whether the word leading to this node is in the language."""
        label = self._accept
        if isinstance(label, bool):
            return label
        lock = _fill_lock
        if lock is not None:
            with lock:
                label = self._accept
                if isinstance(label, bool):
                    return label
                value = bool(label())
                self._accept = value
                return value
        value = bool(label())
        self._accept = value
        return value

    def derive(self, letter: Any) -> "Lang":
        """The subtree under ``letter``: the left quotient of this language."""
        children = self._children
        child = children.get(letter)
        if child is None:
            lock = _fill_lock
            if lock is not None:
                with lock:
                    child = children.get(letter)
                    if child is None:
                        child = self._step(letter)
                        children[letter] = child
                return child
            child = self._step(letter)
            children[letter] = child
        return child

    def member(self, word: Iterable[Any]) -> bool:
        """Follow ``word`` through the trie and read the final label."""
        node = self
        for letter in word:
            node = node.derive(letter)
        return node.accept

    def __repr__(self) -> str:
        label = self._accept if isinstance(self._accept, bool) else "?"
        return f"<Lang accept={label} children={len(self._children)}>"


def make(accept: bool, step: Callable[[Any], Lang]) -> Lang:
    """Build a trie node from its root label and per-letter subtree function."""
    return Lang(bool(accept), step)


def from_predicate(pred: Callable[[Word], bool]) -> Lang:
    """The trie of all words satisfying ``pred``, consulted on demand only."""
    return Lang(lambda: pred(()), lambda a: from_predicate(lambda w: pred((a, *w))))


def out_bounded(lang: Lang, bound: int, alphabet: Alphabet) -> BoundedLang:
    """Collect every accepted word of length <= bound by levelwise unfolding."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    symbols = tuple(alphabet)
    found: list[Word] = [()] if lang.accept else []
    level: list[tuple[Word, Lang]] = [((), lang)]
    for _ in range(bound):
        grown: list[tuple[Word, Lang]] = []
        for word, node in level:
            for s in symbols:
                child = node.derive(s)
                extended = word + (s,)
                if child.accept:
                    found.append(extended)
                grown.append((extended, child))
        level = grown
    return BoundedLang(bound, alphabet, frozenset(found))


def coiterate(obs: Callable[[Any], bool], trans: Callable[[Any], Callable[[Any], Any]], state: Any) -> Lang:
    """Unfold a deterministic automaton into its language trie.

    ``obs`` labels a state, ``trans`` maps a state to its per-letter
    successor function.  The node for a state is produced one layer at a
    time; nothing beyond the root label is forced until derived.
    """
    return Lang(lambda: obs(state), lambda a: coiterate(obs, trans, trans(state)(a)))


@dataclass(frozen=True)
class Stop:
    """Corecursion step that finishes with an already-built language."""

    value: Lang


@dataclass(frozen=True)
class Continue:
    """Corecursion step that keeps unfolding from a successor state."""

    state: Any


def corecurse(obs: Callable[[Any], bool], trans: Callable[[Any], Callable[[Any], "Stop | Continue"]], state: Any) -> Lang:
    """Like :func:`coiterate`, but a step may stop with a finished language.

    Each transition either continues from a new state or grafts an
    existing trie in place of the whole subtree.
    """

    def step(a):
        nxt = trans(state)(a)
        if isinstance(nxt, Stop):
            return nxt.value
        if isinstance(nxt, Continue):
            return corecurse(obs, trans, nxt.state)
        raise TypeError(f"transition must return Stop or Continue, got {nxt!r}")

    return Lang(lambda: obs(state), step)
