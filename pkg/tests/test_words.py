"""Word encoding, joins, partial sequences, and decompositions.

The shortlex encoding is checked against an independently generated
shortlex listing (itertools.product by increasing length), and the
decomposition counts against binomial coefficients.
"""

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tarski_lab.words import (
    Alphabet,
    AlphabetMismatchError,
    Word,
    alphabet,
    class_of,
    count_decompositions,
    decode,
    decompositions,
    encode,
    equivalent_seqs,
    join_words,
    seq_of_pieces,
    seq_of_word,
    theta,
    word_of_seq,
)


def shortlex_listing(alpha: Alphabet, max_len: int) -> list[Word]:
    """Independent oracle: all words by length, lexicographic within."""
    out = []
    for length in range(1, max_len + 1):
        for combo in itertools.product(range(alpha.size), repeat=length):
            out.append(Word(alpha, combo))
    return out


MATH = Alphabet(tuple(sorted(set("mathematics"))))


class TestEncoding:
    def test_two_symbol_examples(self):
        ab = alphabet("ab")
        assert encode(ab.word("a")) == 0
        assert encode(ab.word("b")) == 1
        assert encode(ab.word("aa")) == 2

    def test_codes_enumerate_shortlex_order(self):
        for symbols in ("ab", "abc", "abcd"):
            alpha = alphabet(symbols)
            listing = shortlex_listing(alpha, 3)
            assert [encode(w) for w in listing] == list(range(len(listing)))

    @pytest.mark.parametrize("symbols", ["ab", "abc", "abcd"])
    def test_round_trip_exhaustive(self, symbols):
        alpha = alphabet(symbols)
        for w in shortlex_listing(alpha, 5):
            assert decode(alpha, encode(w)) == w

    def test_decode_is_total_on_naturals(self):
        alpha = alphabet("abc")
        for code in range(200):
            assert encode(decode(alpha, code)) == code

    def test_unary_alphabet(self):
        one = alphabet("a")
        assert [encode(one.word("a" * n)) for n in (1, 2, 3)] == [0, 1, 2]
        assert decode(one, 5).text() == "aaaaaa"

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError):
            alphabet("ab").word("")


class TestJoin:
    def test_mathematics(self):
        assert join_words(MATH.word("math"), MATH.word("ematics")).text() == "mathematics"

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            join_words(alphabet("ab").word("a"), alphabet("cd").word("c"))

    words3 = st.builds(
        lambda idx: Word(alphabet("abc"), tuple(idx)),
        st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=6),
    )

    @given(words3, words3, words3)
    def test_associative(self, w1, w2, w3):
        assert join_words(join_words(w1, w2), w3) == join_words(w1, join_words(w2, w3))

    @given(words3, words3)
    def test_length_additive(self, w1, w2):
        assert join_words(w1, w2).size == w1.size + w2.size

    @given(words3, words3, words3)
    def test_cancellative(self, w, w1, w2):
        if join_words(w, w1) == join_words(w, w2):
            assert w1 == w2
        if join_words(w1, w) == join_words(w2, w):
            assert w1 == w2


class TestPartialSequences:
    def test_descending_positions_denote_left_to_right(self):
        pieces = [MATH.word(p) for p in ("math", "e", "mat", "ics")]
        f = seq_of_pieces(pieces)
        assert f.arity == 3
        assert f.value_at(3) == encode(MATH.word("math"))
        assert f.value_at(0) == encode(MATH.word("ics"))
        assert word_of_seq(f).text() == "mathematics"

    def test_arity_zero(self):
        w = MATH.word("mathematics")
        assert word_of_seq(seq_of_word(w)) == w

    def test_reversed_pieces_change_the_word(self):
        ab = alphabet("ab")
        forward = seq_of_pieces([ab.word("a"), ab.word("b")])
        backward = seq_of_pieces([ab.word("b"), ab.word("a")])
        assert word_of_seq(forward) != word_of_seq(backward)

    def test_equivalence_examples(self):
        split = seq_of_pieces([MATH.word("math"), MATH.word("ematics")])
        whole = seq_of_word(MATH.word("mathematics"))
        assert equivalent_seqs(split, whole)
        ab = alphabet("ab")
        assert not equivalent_seqs(seq_of_word(ab.word("ab")), seq_of_word(ab.word("ba")))
        assert equivalent_seqs(split, split)

    def test_equivalence_relation_laws_exhaustively(self):
        ab = alphabet("ab")
        word = ab.word("abab")
        population = [
            seq for k in range(word.size) for seq in decompositions(word, k)
        ]
        for f in population:
            assert equivalent_seqs(f, f)
        for f, g in itertools.product(population, repeat=2):
            assert equivalent_seqs(f, g) == equivalent_seqs(g, f)
            assert equivalent_seqs(f, g) == (word_of_seq(f) == word_of_seq(g))
        # All decompositions of one word are mutually equivalent, so
        # transitivity is immediate on this population; check a mixed one.
        other = ab.word("ba")
        mixed = population + [seq_of_word(other)]
        for f, g, h in itertools.product(mixed, repeat=3):
            if equivalent_seqs(f, g) and equivalent_seqs(g, h):
                assert equivalent_seqs(f, h)


class TestClasses:
    def test_size_of_mathematics(self):
        cls = class_of(seq_of_word(MATH.word("mathematics")))
        assert cls.size == 11

    def test_single_symbol_split(self):
        abc = alphabet("abc")
        f = next(decompositions(abc.word("abc"), 2))
        cls = class_of(f)
        assert cls.size == 3
        assert cls.canonical == abc.word("abc")

    def test_equivalent_sequences_share_the_class(self):
        split = seq_of_pieces([MATH.word("math"), MATH.word("ematics")])
        whole = seq_of_word(MATH.word("mathematics"))
        assert class_of(split) == class_of(whole)


class TestDecompositions:
    def test_all_splits_of_abc(self):
        abc = alphabet("abc")
        word = abc.word("abc")
        seqs = [seq for k in range(3) for seq in decompositions(word, k)]
        texts = [
            ",".join(decode(abc, code).text() for code in reversed(seq.codes)) for seq in seqs
        ]
        assert texts == ["abc", "a,bc", "ab,c", "a,b,c"]

    def test_mathematics_counts(self):
        word = MATH.word("mathematics")
        assert count_decompositions(word) == 2**10 == 1024
        assert count_decompositions(word, 3) == math.comb(10, 3) == 120
        assert sum(1 for _ in decompositions(word, 3)) == 120

    def test_published_split_appears(self):
        word = MATH.word("mathematics")
        target = seq_of_pieces([MATH.word(p) for p in ("math", "e", "mat", "ics")])
        assert target in list(decompositions(word, 3))

    def test_arity_bounds(self):
        abc = alphabet("abc")
        with pytest.raises(ValueError):
            list(decompositions(abc.word("abc"), 3))
        with pytest.raises(ValueError):
            count_decompositions(abc.word("abc"), -1)

    @given(st.integers(min_value=1, max_value=8))
    def test_counts_sum_to_power_of_two(self, size):
        ab = alphabet("ab")
        word = Word(ab, tuple(i % 2 for i in range(size)))
        per_k = [count_decompositions(word, k) for k in range(size)]
        assert per_k == [math.comb(size - 1, k) for k in range(size)]
        assert sum(per_k) == 2 ** (size - 1)
        assert sum(per_k) == count_decompositions(word)

    def test_every_split_is_equivalent_to_the_word(self):
        word = MATH.word("mathematic")
        base = seq_of_word(word)
        for k in (0, 2, 5):
            for seq in decompositions(word, k):
                assert equivalent_seqs(seq, base)


class TestTheta:
    def test_theta_of_ab(self):
        ab = alphabet("ab")
        cls = theta(ab, encode(ab.word("ab")))
        assert cls.size == 2
        assert cls.canonical == ab.word("ab")

    def test_injective_on_initial_codes(self):
        abc = alphabet("abc")
        classes = [theta(abc, code) for code in range(50)]
        assert len(set(classes)) == 50

    def test_single_symbol_has_one_arity(self):
        ab = alphabet("ab")
        cls = theta(ab, encode(ab.word("a")))
        assert cls.size == 1
        assert count_decompositions(cls.canonical) == 1
