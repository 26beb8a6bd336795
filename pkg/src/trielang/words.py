"""Alphabets, words over them, and explicit bounded word sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Alphabet",
    "AlphabetError",
    "BoundedLang",
    "Symbol",
    "Word",
]

# A symbol is an index into its alphabet's declared order; a word is a
# tuple of symbols.  Keeping symbols as small ints makes per-letter child
# tables cheap and gives words a total (length-free lexicographic) order.
Symbol = int
Word = tuple[Symbol, ...]


class AlphabetError(ValueError):
    """A malformed alphabet, or a letter that is not in the alphabet."""


class Alphabet:
    """Finite ordered collection of distinct, printable symbol names.

    Iterating an alphabet yields its symbols (indices) in declared order,
    which is the order every enumeration and counterexample search uses.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise AlphabetError("alphabet must contain at least one symbol")
        if len(set(names)) != len(names):
            raise AlphabetError(f"duplicate symbol names in {names!r}")
        for name in names:
            if not isinstance(name, str) or not name or not name.isprintable():
                raise AlphabetError(f"symbol name {name!r} is not a printable string")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(range(len(self.names)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.names)!r})"

    def symbol(self, name: str) -> Symbol:
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetError(f"unknown letter {name!r}") from None

    def name(self, symbol: Symbol) -> str:
        try:
            return self.names[symbol]
        except IndexError:
            raise AlphabetError(f"symbol {symbol} outside alphabet of size {len(self)}") from None

    def word(self, text: str) -> Word:
        """Read a word written one character per symbol name."""
        if any(len(name) != 1 for name in self.names):
            raise AlphabetError("one-character word literals need one-character symbol names")
        return tuple(self.symbol(ch) for ch in text)

    def text(self, word: Word) -> str:
        """Spell a word by concatenating its symbol names."""
        return "".join(self.name(s) for s in word)

    def words_upto(self, bound: int) -> Iterator[Word]:
        """All words of length <= bound, shortest first, lexicographic within a length."""
        symbols = tuple(self)
        level: list[Word] = [()]
        yield ()
        for _ in range(bound):
            level = [w + (s,) for w in level for s in symbols]
            yield from level


def _length_lex(word: Word) -> tuple[int, Word]:
    return (len(word), word)


@dataclass(frozen=True)
class BoundedLang:
    """Every member of a language up to a length bound, as an explicit set."""

    bound: int
    alphabet: Alphabet
    words: frozenset[Word]

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("bound must be nonnegative")
        for w in self.words:
            if len(w) > self.bound:
                raise ValueError(f"word {w!r} exceeds bound {self.bound}")

    def __contains__(self, word: Word) -> bool:
        return tuple(word) in self.words

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self.words, key=_length_lex))

    def __len__(self) -> int:
        return len(self.words)

    def texts(self) -> list[str]:
        """Members in length-then-lexicographic order, spelled out."""
        return [self.alphabet.text(w) for w in self]
