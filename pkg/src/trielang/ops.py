"""Regular and shuffle operations on language tries.

Union, intersection and complement are plain one-layer-at-a-time node
builders.  Concatenation, iteration and shuffle come in two styles that
are kept observably equal:

* a *deferred* style, where the operation first builds a trie over a
  doubled alphabet of ``(symbol, flag)`` letters — the flag chooses which
  operand the letter is fed to — and :func:`collapse` then folds the two
  flagged branches back together with a union per letter;
* a *direct* style that builds one node per observation straight from
  the derivative equations, leaning on :func:`plus` for the sums.

The deferred style is the definitional one (:func:`concat`,
:func:`star`, :func:`shuffle` are compositions through the doubled
alphabet); the ``*_direct`` forms exist to cross-check it.

A trie over the doubled alphabet is an ordinary :class:`~trielang.lang.Lang`
whose letters happen to be ``(symbol, flag)`` pairs; no separate alphabet
object is materialized for it.
"""

from __future__ import annotations

from typing import Any

from .lang import Lang

__all__ = [
    "FlaggedSymbol",
    "Lang2",
    "atom",
    "collapse",
    "compl",
    "concat",
    "concat_direct",
    "deferred_concat",
    "deferred_iter",
    "deferred_shuffle",
    "inter",
    "one",
    "plus",
    "shuffle",
    "shuffle_direct",
    "star",
    "star_direct",
    "zero",
]

# Letters of the doubled alphabet: the underlying symbol plus the flag
# saying which operand consumes it.
FlaggedSymbol = tuple[Any, bool]

# A trie branching over FlaggedSymbol letters.  Structurally the same
# node type; the alias marks intent in signatures.
Lang2 = Lang

# The empty and empty-word languages are letter-agnostic, so single
# shared nodes serve every alphabet, doubled ones included.
_ZERO = Lang(False, lambda _a: _ZERO)
_ONE = Lang(True, lambda _a: _ZERO)


def zero() -> Lang:
    """The language with no words."""
    return _ZERO


def one() -> Lang:
    """The language containing exactly the empty word."""
    return _ONE


def atom(letter: Any) -> Lang:
    """The language containing exactly the one-letter word ``letter``."""
    return Lang(False, lambda a: _ONE if a == letter else _ZERO)


def plus(lhs: Lang, rhs: Lang) -> Lang:
    """Union, one layer at a time."""
    return Lang(lambda: lhs.accept or rhs.accept,
                lambda a: plus(lhs.derive(a), rhs.derive(a)))


def inter(lhs: Lang, rhs: Lang) -> Lang:
    """Intersection, one layer at a time."""
    return Lang(lambda: lhs.accept and rhs.accept,
                lambda a: inter(lhs.derive(a), rhs.derive(a)))


def compl(operand: Lang) -> Lang:
    """Complement relative to all words over the ambient alphabet."""
    return Lang(lambda: not operand.accept,
                lambda a: compl(operand.derive(a)))


def deferred_concat(lhs: Lang, rhs: Lang) -> Lang2:
    """Concatenation over the doubled alphabet.

    A True-flagged letter goes to the left operand.  A False-flagged
    letter commits the split point: it goes to the right operand, which
    is then re-paired with ``one()`` so later False-flagged letters keep
    feeding it; if the left operand does not accept here, no split is
    possible and the branch is empty.
    """

    def step(letter: FlaggedSymbol) -> Lang:
        a, flag = letter
        if flag:
            return deferred_concat(lhs.derive(a), rhs)
        if lhs.accept:
            return deferred_concat(rhs.derive(a), _ONE)
        return _ZERO

    return Lang(lambda: lhs.accept and rhs.accept, step)


def collapse(doubled: Lang2) -> Lang:
    """Fold a doubled-alphabet trie back over the plain alphabet.

    The label is kept; the child under a symbol is the union of the two
    flagged children for that symbol.
    """
    return Lang(lambda: doubled.accept,
                lambda a: collapse(plus(doubled.derive((a, True)),
                                        doubled.derive((a, False)))))


def concat(lhs: Lang, rhs: Lang) -> Lang:
    """Concatenation: collapse of the deferred form."""
    return collapse(deferred_concat(lhs, rhs))


def concat_direct(lhs: Lang, rhs: Lang) -> Lang:
    """Concatenation built directly from its derivative equation."""

    def step(a):
        tail = concat_direct(lhs.derive(a), rhs)
        return plus(tail, rhs.derive(a) if lhs.accept else _ZERO)

    return Lang(lambda: lhs.accept and rhs.accept, step)


def deferred_iter(lhs: Lang, rhs: Lang) -> Lang:
    """The language lhs · rhs*, unfolded one concatenation layer per letter.

    Each derivative re-expresses the iteration with a one-step-longer
    prefix: derive by ``a`` of ``lhs · rhs*`` is
    ``derive(lhs · (1 + rhs), a) · rhs*``.
    """
    # Built eagerly so both letters of a level share the same body nodes.
    body = concat(lhs, plus(_ONE, rhs))
    return Lang(lambda: lhs.accept,
                lambda a: deferred_iter(body.derive(a), rhs))


def star(operand: Lang) -> Lang:
    """Iteration: one() stepped through deferred_iter."""
    return deferred_iter(_ONE, operand)


def star_direct(operand: Lang) -> Lang:
    """Iteration built directly from its derivative equation.

    The result node appears in its own derivatives, so every unfolding
    shares one memoized node for the whole iteration.
    """

    def step(a):
        return concat_direct(operand.derive(a), result)

    result = Lang(True, step)
    return result


def deferred_shuffle(lhs: Lang, rhs: Lang) -> Lang2:
    """Interleaving over the doubled alphabet: the flag picks the operand."""

    def step(letter: FlaggedSymbol) -> Lang:
        a, flag = letter
        if flag:
            return deferred_shuffle(lhs.derive(a), rhs)
        return deferred_shuffle(lhs, rhs.derive(a))

    return Lang(lambda: lhs.accept and rhs.accept, step)


def shuffle(lhs: Lang, rhs: Lang) -> Lang:
    """Interleaving: collapse of the deferred form."""
    return collapse(deferred_shuffle(lhs, rhs))


def shuffle_direct(lhs: Lang, rhs: Lang) -> Lang:
    """Interleaving built directly from its derivative equation."""

    def step(a):
        return plus(shuffle_direct(lhs.derive(a), rhs),
                    shuffle_direct(lhs, rhs.derive(a)))

    return Lang(lambda: lhs.accept and rhs.accept, step)
