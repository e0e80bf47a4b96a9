"""Words over a finite alphabet, their numeric codes, and split sequences.

Words are nonempty strings of alphabet symbols (there is no empty word;
the words form a free semigroup under juxtaposition, not a monoid).  The
numeric encoding is the shortlex bijection onto the naturals: words are
ranked by length first, then lexicographically by symbol index, starting
from 0.

A partial sequence of arity n assigns a word code to every position
0..n; it denotes the word obtained by decoding the positions from n down
to 0 and joining the pieces.  Two sequences are equivalent when they
denote the same word; the class of a word of size s has representatives
of every arity up to s − 1 (cut the word into that many pieces) and none
beyond.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator


class AlphabetMismatchError(ValueError):
    """Two values over different alphabets were combined."""


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("an alphabet needs at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index_of(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise KeyError(f"symbol {symbol!r} is not in the alphabet") from None

    def word(self, text: str) -> "Word":
        """Parse a word from text; requires single-character symbols."""
        if any(len(s) != 1 for s in self.symbols):
            raise ValueError("text parsing needs single-character symbols")
        return Word(self, tuple(self.index_of(ch) for ch in text))


def alphabet(symbols: str) -> Alphabet:
    return Alphabet(tuple(symbols))


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.indices:
            raise ValueError("there is no empty word")
        if any(not 0 <= i < self.alphabet.size for i in self.indices):
            raise ValueError("symbol index out of range")

    @property
    def size(self) -> int:
        return len(self.indices)

    def text(self) -> str:
        return "".join(self.alphabet.symbols[i] for i in self.indices)

    def __repr__(self) -> str:
        return f"Word({self.text()!r})"


def join_words(w1: Word, w2: Word) -> Word:
    if w1.alphabet != w2.alphabet:
        raise AlphabetMismatchError("words over different alphabets")
    return Word(w1.alphabet, w1.indices + w2.indices)


def encode(w: Word) -> int:
    """Shortlex rank: all shorter words first, then lexicographic order."""
    k = w.alphabet.size
    offset = sum(k**j for j in range(1, w.size))
    value = 0
    for digit in w.indices:
        value = value * k + digit
    return offset + value


def decode(alpha: Alphabet, code: int) -> Word:
    if code < 0:
        raise ValueError("codes are naturals")
    k = alpha.size
    length, offset = 1, 0
    while code >= offset + k**length:
        offset += k**length
        length += 1
    rem = code - offset
    digits = [0] * length
    for pos in range(length - 1, -1, -1):
        digits[pos] = rem % k
        rem //= k
    return Word(alpha, tuple(digits))


@dataclass(frozen=True)
class PartialSeq:
    """A total assignment of word codes to positions 0..arity.

    The denoted word reads the positions from the top down:
    decode(f(n)) · decode(f(n−1)) · … · decode(f(0)).
    """

    alphabet: Alphabet
    codes: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.codes:
            raise ValueError("a partial sequence has at least position 0")
        if any(c < 0 for c in self.codes):
            raise ValueError("codes are naturals")

    @property
    def arity(self) -> int:
        return len(self.codes) - 1

    def value_at(self, position: int) -> int:
        return self.codes[position]


def seq_of_word(w: Word) -> PartialSeq:
    """The arity-0 representative of a word."""
    return PartialSeq(w.alphabet, (encode(w),))


def seq_of_pieces(pieces: list[Word]) -> PartialSeq:
    """Sequence denoting the left-to-right join of the given pieces."""
    if not pieces:
        raise ValueError("at least one piece is required")
    alpha = pieces[0].alphabet
    for p in pieces:
        if p.alphabet != alpha:
            raise AlphabetMismatchError("pieces over different alphabets")
    return PartialSeq(alpha, tuple(encode(p) for p in reversed(pieces)))


def word_of_seq(f: PartialSeq) -> Word:
    word = decode(f.alphabet, f.codes[-1])
    for code in reversed(f.codes[:-1]):
        word = join_words(word, decode(f.alphabet, code))
    return word


def equivalent_seqs(f: PartialSeq, g: PartialSeq) -> bool:
    if f.alphabet != g.alphabet:
        raise AlphabetMismatchError("sequences over different alphabets")
    return word_of_seq(f) == word_of_seq(g)


@dataclass(frozen=True)
class WordClass:
    canonical: Word
    size: int


def class_of(f: PartialSeq) -> WordClass:
    word = word_of_seq(f)
    return WordClass(word, word.size)


def decompositions(w: Word, k: int) -> Iterator[PartialSeq]:
    """All arity-k sequences denoting ``w``: k cut points among size−1 gaps.

    Cut-point sets are enumerated in ascending bitmask order (bit g set
    means a cut after symbol position g).
    """
    gaps = w.size - 1
    if not 0 <= k <= gaps:
        raise ValueError(f"arity must lie in 0..{gaps}")
    for mask in range(1 << gaps):
        if mask.bit_count() != k:
            continue
        cuts = [g for g in range(gaps) if mask >> g & 1]
        pieces = []
        start = 0
        for cut in cuts:
            pieces.append(Word(w.alphabet, w.indices[start : cut + 1]))
            start = cut + 1
        pieces.append(Word(w.alphabet, w.indices[start:]))
        yield seq_of_pieces(pieces)


def count_decompositions(w: Word, k: int | None = None) -> int:
    """Number of arity-k decompositions, or of all arities when k is None."""
    gaps = w.size - 1
    if k is None:
        return 1 << gaps
    if not 0 <= k <= gaps:
        raise ValueError(f"arity must lie in 0..{gaps}")
    return math.comb(gaps, k)


def theta(alpha: Alphabet, code: int) -> WordClass:
    """The word class addressed by a code: classes inherit the encoding."""
    return class_of(PartialSeq(alpha, (code,)))
