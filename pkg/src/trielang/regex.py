"""Extended regular expressions: syntax tree, text form, and derivatives.

The operator set is union, intersection, complement, concatenation,
iteration and shuffle over single-symbol atoms.  Iterated syntactic
derivatives stay finite because results are kept in a normal form:
sums are flattened, sorted, duplicate-free and right-nested with no
zero summand; concatenation drops units and absorbs zeros; doubled
stars and doubled complements collapse.  Nothing stronger than that is
applied, so normalization is cheap and purely structural.

Text form (also the CLI's input syntax)::

    0  1  letters  ~r  r*  r.s  r&s  r||s  r+s  (r)

with ``~``/``*`` binding tightest, then ``.``, then ``&``, then ``||``,
then ``+``; the binary operators associate to the right, and whitespace
between tokens is ignored.  ``~a*`` reads as ``~(a*)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, TypeAlias, Union

from . import ops
from .lang import Lang
from .words import Alphabet, AlphabetError, Symbol, Word

__all__ = [
    "Atom",
    "Concat",
    "Inter",
    "Not",
    "One",
    "Plus",
    "Regex",
    "RegexSyntaxError",
    "Shuffle",
    "Star",
    "Zero",
    "denote",
    "deriv",
    "mk_concat",
    "mk_inter",
    "mk_not",
    "mk_plus",
    "mk_shuffle",
    "mk_star",
    "norm",
    "nullable",
    "parse",
    "regex_member",
    "to_text",
    "uses_complement",
]


@dataclass(frozen=True)
class Zero:
    """No words."""


@dataclass(frozen=True)
class One:
    """Exactly the empty word."""


@dataclass(frozen=True)
class Atom:
    """Exactly one one-letter word."""

    symbol: Symbol


@dataclass(frozen=True)
class Plus:
    """Union."""

    lhs: "Regex"
    rhs: "Regex"


@dataclass(frozen=True)
class Inter:
    """Intersection."""

    lhs: "Regex"
    rhs: "Regex"


@dataclass(frozen=True)
class Not:
    """Complement."""

    body: "Regex"


@dataclass(frozen=True)
class Concat:
    """Concatenation."""

    lhs: "Regex"
    rhs: "Regex"


@dataclass(frozen=True)
class Star:
    """Iteration."""

    body: "Regex"


@dataclass(frozen=True)
class Shuffle:
    """Interleaving."""

    lhs: "Regex"
    rhs: "Regex"


Regex: TypeAlias = Union[Zero, One, Atom, Plus, Inter, Not, Concat, Star, Shuffle]

_TAG = {Zero: 0, One: 1, Atom: 2, Star: 3, Not: 4, Concat: 5, Inter: 6, Shuffle: 7, Plus: 8}


def sort_key(r: Regex):
    """Total structural order: constructor tag, then children recursively."""
    tag = _TAG[type(r)]
    if isinstance(r, (Zero, One)):
        return (tag,)
    if isinstance(r, Atom):
        return (tag, r.symbol)
    if isinstance(r, (Star, Not)):
        return (tag, sort_key(r.body))
    return (tag, sort_key(r.lhs), sort_key(r.rhs))


def _summands(r: Regex, into: list[Regex]) -> None:
    if isinstance(r, Plus):
        _summands(r.lhs, into)
        _summands(r.rhs, into)
    else:
        into.append(r)


def mk_plus(lhs: Regex, rhs: Regex) -> Regex:
    """Union in normal form: flat, sorted, duplicate- and zero-free, right-nested."""
    collected: list[Regex] = []
    _summands(lhs, collected)
    _summands(rhs, collected)
    terms = sorted({t for t in collected if not isinstance(t, Zero)}, key=sort_key)
    if not terms:
        return Zero()
    return reduce(lambda acc, t: Plus(t, acc), reversed(terms[:-1]), terms[-1])


def mk_concat(lhs: Regex, rhs: Regex) -> Regex:
    if isinstance(lhs, Zero) or isinstance(rhs, Zero):
        return Zero()
    if isinstance(lhs, One):
        return rhs
    if isinstance(rhs, One):
        return lhs
    return Concat(lhs, rhs)


def mk_star(body: Regex) -> Regex:
    return body if isinstance(body, Star) else Star(body)


def mk_not(body: Regex) -> Regex:
    return body.body if isinstance(body, Not) else Not(body)


def mk_inter(lhs: Regex, rhs: Regex) -> Regex:
    return Inter(lhs, rhs)


def mk_shuffle(lhs: Regex, rhs: Regex) -> Regex:
    return Shuffle(lhs, rhs)


def norm(r: Regex) -> Regex:
    """Bottom-up normal form; idempotent and semantics-preserving."""
    if isinstance(r, (Zero, One, Atom)):
        return r
    if isinstance(r, Plus):
        return mk_plus(norm(r.lhs), norm(r.rhs))
    if isinstance(r, Inter):
        return mk_inter(norm(r.lhs), norm(r.rhs))
    if isinstance(r, Not):
        return mk_not(norm(r.body))
    if isinstance(r, Concat):
        return mk_concat(norm(r.lhs), norm(r.rhs))
    if isinstance(r, Star):
        return mk_star(norm(r.body))
    if isinstance(r, Shuffle):
        return mk_shuffle(norm(r.lhs), norm(r.rhs))
    raise TypeError(f"not a regex: {r!r}")


def nullable(r: Regex) -> bool:
    """Whether the empty word matches."""
    if isinstance(r, (One, Star)):
        return True
    if isinstance(r, (Zero, Atom)):
        return False
    if isinstance(r, Plus):
        return nullable(r.lhs) or nullable(r.rhs)
    if isinstance(r, (Inter, Concat, Shuffle)):
        return nullable(r.lhs) and nullable(r.rhs)
    if isinstance(r, Not):
        return not nullable(r.body)
    raise TypeError(f"not a regex: {r!r}")


def deriv(r: Regex, a: Symbol) -> Regex:
    """Syntactic derivative by one symbol, in normal form for normal input."""
    if isinstance(r, (Zero, One)):
        return Zero()
    if isinstance(r, Atom):
        return One() if r.symbol == a else Zero()
    if isinstance(r, Plus):
        return mk_plus(deriv(r.lhs, a), deriv(r.rhs, a))
    if isinstance(r, Inter):
        return mk_inter(deriv(r.lhs, a), deriv(r.rhs, a))
    if isinstance(r, Not):
        return mk_not(deriv(r.body, a))
    if isinstance(r, Concat):
        first = mk_concat(deriv(r.lhs, a), r.rhs)
        if nullable(r.lhs):
            return mk_plus(first, deriv(r.rhs, a))
        return first
    if isinstance(r, Star):
        return mk_concat(deriv(r.body, a), mk_star(r.body))
    if isinstance(r, Shuffle):
        return mk_plus(mk_shuffle(deriv(r.lhs, a), r.rhs),
                       mk_shuffle(r.lhs, deriv(r.rhs, a)))
    raise TypeError(f"not a regex: {r!r}")


def regex_member(r: Regex, word: Word) -> bool:
    """Membership by iterated syntactic derivative."""
    return nullable(reduce(deriv, word, norm(r)))


def uses_complement(r: Regex) -> bool:
    if isinstance(r, Not):
        return True
    if isinstance(r, (Plus, Inter, Concat, Shuffle)):
        return uses_complement(r.lhs) or uses_complement(r.rhs)
    if isinstance(r, Star):
        return uses_complement(r.body)
    return False


def denote(r: Regex) -> Lang:
    """The language trie of a regex, via the trie operations."""
    if isinstance(r, Zero):
        return ops.zero()
    if isinstance(r, One):
        return ops.one()
    if isinstance(r, Atom):
        return ops.atom(r.symbol)
    if isinstance(r, Plus):
        return ops.plus(denote(r.lhs), denote(r.rhs))
    if isinstance(r, Inter):
        return ops.inter(denote(r.lhs), denote(r.rhs))
    if isinstance(r, Not):
        return ops.compl(denote(r.body))
    if isinstance(r, Concat):
        return ops.concat(denote(r.lhs), denote(r.rhs))
    if isinstance(r, Star):
        return ops.star(denote(r.body))
    if isinstance(r, Shuffle):
        return ops.shuffle(denote(r.lhs), denote(r.rhs))
    raise TypeError(f"not a regex: {r!r}")


class RegexSyntaxError(ValueError):
    """A parse error, carrying the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_RESERVED = "01~*.&|+()"


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self, expected: str) -> None:
        if self.peek() != expected:
            raise RegexSyntaxError(f"expected {expected!r}", self.pos)
        self.pos += 1

    # One method per precedence level, loosest first; '+' and '.' (and,
    # for uniformity, '&' and '||') associate to the right.
    def sum(self) -> Regex:
        lhs = self.shuf()
        if self.peek() == "+":
            self.pos += 1
            return Plus(lhs, self.sum())
        return lhs

    def shuf(self) -> Regex:
        lhs = self.isect()
        if self.peek() == "|":
            self.pos += 1
            if self.pos >= len(self.text) or self.text[self.pos] != "|":
                raise RegexSyntaxError("expected '||'", self.pos - 1)
            self.pos += 1
            return Shuffle(lhs, self.shuf())
        return lhs

    def isect(self) -> Regex:
        lhs = self.cat()
        if self.peek() == "&":
            self.pos += 1
            return Inter(lhs, self.isect())
        return lhs

    def cat(self) -> Regex:
        lhs = self.unary()
        if self.peek() == ".":
            self.pos += 1
            return Concat(lhs, self.cat())
        return lhs

    def unary(self) -> Regex:
        if self.peek() == "~":
            self.pos += 1
            return Not(self.unary())
        return self.postfix()

    def postfix(self) -> Regex:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self) -> Regex:
        ch = self.peek()
        if ch is None:
            raise RegexSyntaxError("unexpected end of input", self.pos)
        if ch == "(":
            self.pos += 1
            node = self.sum()
            self.take(")")
            return node
        if ch == "0":
            self.pos += 1
            return Zero()
        if ch == "1":
            self.pos += 1
            return One()
        if ch in _RESERVED:
            raise RegexSyntaxError(f"unexpected {ch!r}", self.pos)
        try:
            symbol = self.alphabet.symbol(ch)
        except AlphabetError:
            raise RegexSyntaxError(f"unknown letter {ch!r}", self.pos) from None
        self.pos += 1
        return Atom(symbol)


def parse(text: str, alphabet: Alphabet) -> Regex:
    """Parse the text form; raises :class:`RegexSyntaxError` with a position."""
    parser = _Parser(text, alphabet)
    node = parser.sum()
    if parser.peek() is not None:
        raise RegexSyntaxError(f"unexpected {text[parser.pos]!r}", parser.pos)
    return node


# Grammar levels for printing with minimal parentheses: an operand is
# parenthesized when its own level is looser than its context requires.
_LEVEL_SUM, _LEVEL_SHUF, _LEVEL_ISECT, _LEVEL_CAT, _LEVEL_UNARY, _LEVEL_POSTFIX, _LEVEL_ATOM = range(7)


def _render(r: Regex, alphabet: Alphabet) -> tuple[str, int]:
    if isinstance(r, Zero):
        return "0", _LEVEL_ATOM
    if isinstance(r, One):
        return "1", _LEVEL_ATOM
    if isinstance(r, Atom):
        return alphabet.name(r.symbol), _LEVEL_ATOM
    if isinstance(r, Star):
        return _child(r.body, _LEVEL_POSTFIX, alphabet) + "*", _LEVEL_POSTFIX
    if isinstance(r, Not):
        return "~" + _child(r.body, _LEVEL_UNARY, alphabet), _LEVEL_UNARY
    if isinstance(r, Concat):
        return _binary(r, ".", _LEVEL_CAT, alphabet), _LEVEL_CAT
    if isinstance(r, Inter):
        return _binary(r, "&", _LEVEL_ISECT, alphabet), _LEVEL_ISECT
    if isinstance(r, Shuffle):
        return _binary(r, "||", _LEVEL_SHUF, alphabet), _LEVEL_SHUF
    if isinstance(r, Plus):
        return _binary(r, "+", _LEVEL_SUM, alphabet), _LEVEL_SUM
    raise TypeError(f"not a regex: {r!r}")


def _child(r: Regex, required: int, alphabet: Alphabet) -> str:
    text, level = _render(r, alphabet)
    return f"({text})" if level < required else text


def _binary(r, symbol: str, level: int, alphabet: Alphabet) -> str:
    # Right-associative: the left child must sit one level tighter.
    return _child(r.lhs, level + 1, alphabet) + symbol + _child(r.rhs, level, alphabet)


def to_text(r: Regex, alphabet: Alphabet) -> str:
    """Render to the text form; ``parse`` of the result rebuilds ``r``."""
    return _render(r, alphabet)[0]
