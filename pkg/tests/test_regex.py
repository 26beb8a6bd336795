"""Regex syntax: parsing, printing, normal form, syntactic derivatives."""

import random
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trielang import (Alphabet, Atom, Concat, Inter, Not, One, Plus,
                      RegexSyntaxError, Shuffle, Star, Zero, denote, deriv, norm,
                      nullable, out_bounded, parse_regex, random_regex, to_text)
from trielang.equiv import bisim_bounded
from trielang.regex import mk_plus, regex_member

A, B = Atom(0), Atom(1)


class TestParse:
    def test_structure_of_star_example(self, ab):
        assert parse_regex("(a.(a+b))*", ab) == Star(Concat(A, Plus(A, B)))

    def test_precedence_dot_over_plus(self, ab):
        assert parse_regex("a.b+c", Alphabet("abc")) == Plus(Concat(Atom(0), Atom(1)), Atom(2))

    def test_precedence_full_tower(self):
        # + binds loosest, then ||, then &, with postfix * under prefix ~.
        abc = Alphabet("abc")
        got = parse_regex("~(a.b)&c*+a||b", abc)
        want = Plus(Inter(Not(Concat(Atom(0), Atom(1))), Star(Atom(2))),
                    Shuffle(Atom(0), Atom(1)))
        assert got == want

    def test_right_associativity(self, ab):
        assert parse_regex("a.b.a", ab) == Concat(A, Concat(B, A))
        assert parse_regex("a+b+a", ab) == Plus(A, Plus(B, A))

    def test_postfix_star_inside_complement(self, ab):
        assert parse_regex("~a*", ab) == Not(Star(A))
        assert parse_regex("(~a)*", ab) == Star(Not(A))

    def test_whitespace_is_ignored(self, ab):
        assert parse_regex("1 + a.(a*)", ab) == parse_regex("1+a.(a*)", ab)

    def test_constants(self, ab):
        assert parse_regex("0", ab) == Zero()
        assert parse_regex("1", ab) == One()

    @pytest.mark.parametrize("text,position", [
        ("a+", 2),
        ("(a", 2),
        ("a)b", 1),
        ("a||", 3),
        ("a|b", 1),
        ("c", 0),
        ("*a", 0),
        ("", 0),
    ])
    def test_errors_carry_position(self, ab, text, position):
        with pytest.raises(RegexSyntaxError) as err:
            parse_regex(text, ab)
        assert err.value.position == position


class TestToText:
    @settings(max_examples=100)
    @given(st.integers(0, 10 ** 9))
    def test_round_trips_through_parse(self, seed):
        ab = Alphabet("ab")
        r = random_regex(random.Random(seed), ab, 4, extended=True)
        assert parse_regex(to_text(r, ab), ab) == r

    def test_minimal_parentheses(self, ab):
        assert to_text(Star(Concat(A, Plus(A, B))), ab) == "(a.(a+b))*"
        assert to_text(Plus(Concat(A, B), Star(A)), ab) == "a.b+a*"
        assert to_text(Not(Star(A)), ab) == "~a*"
        assert to_text(Star(Not(A)), ab) == "(~a)*"


class TestNormalForm:
    def test_plus_is_sorted_flat_dedup_right_nested(self, ab):
        messy = Plus(Plus(B, Zero()), Plus(A, B))
        assert norm(messy) == Plus(A, B)
        three = Plus(Plus(Concat(A, B), A), Plus(B, A))
        assert norm(three) == Plus(A, Plus(B, Concat(A, B)))

    def test_concat_units_and_absorbers(self, ab):
        assert norm(Concat(One(), A)) == A
        assert norm(Concat(A, One())) == A
        assert norm(Concat(Zero(), A)) == Zero()
        assert norm(Concat(A, Zero())) == Zero()

    def test_star_and_not_collapse(self, ab):
        assert norm(Star(Star(A))) == Star(A)
        assert norm(Not(Not(A))) == A

    @settings(max_examples=100)
    @given(st.integers(0, 10 ** 9))
    def test_idempotent(self, seed):
        ab = Alphabet("ab")
        r = random_regex(random.Random(seed), ab, 4, extended=True)
        assert norm(norm(r)) == norm(r)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10 ** 9))
    def test_semantics_preserving(self, seed):
        ab = Alphabet("ab")
        r = random_regex(random.Random(seed), ab, 3, extended=True)
        assert bisim_bounded(denote(norm(r)), denote(r), 5, ab) is None


class TestNullable:
    @pytest.mark.parametrize("text,expected", [
        ("0", False), ("1", True), ("a", False), ("a*", True),
        ("a.b", False), ("~0", True), ("1+a", True), ("a&1", False),
        ("a*||b*", True), ("~a.b", False),
    ])
    def test_table(self, ab, text, expected):
        assert nullable(parse_regex(text, ab)) is expected

    def test_agrees_with_trie_root(self, ab):
        rng = random.Random(97)
        for _ in range(500):
            r = random_regex(rng, ab, 3, extended=True)
            assert nullable(r) == denote(r).accept


class TestDeriv:
    def test_simple_cases(self, ab):
        assert deriv(parse_regex("a.b", ab), 0) == B
        assert deriv(parse_regex("a*", ab), 0) == Star(A)
        assert deriv(parse_regex("a*", ab), 1) == Zero()
        assert deriv(parse_regex("~a", ab), 0) == Not(One())
        assert deriv(A, 0) == One()
        assert deriv(A, 1) == Zero()

    def test_nullable_head_adds_tail_derivative(self, ab):
        # derive of 1.b-like shapes must include the right's derivative
        r = Concat(Star(A), B)
        assert deriv(r, 1) == One()

    def test_coherence_square(self, ab):
        # Deriving the syntax then denoting equals denoting then deriving.
        rng = random.Random(101)
        for _ in range(60):
            r = random_regex(rng, ab, 3, extended=True)
            for a in ab:
                assert bisim_bounded(denote(deriv(norm(r), a)),
                                     denote(r).derive(a), 5, ab) is None

    def test_membership_by_iterated_derivative(self, ab):
        rng = random.Random(103)
        for _ in range(60):
            r = random_regex(rng, ab, 3, extended=True)
            lang = denote(r)
            for w in list(ab.words_upto(4)):
                assert regex_member(r, w) == lang.member(w)

    def test_closure_stays_small(self, ab):
        # Iterated derivatives modulo the normal form reach a fixed point.
        samples = ["(a.(a+b))*", "(a*.b*)*", "~(a.b)&(a+b)*", "a*||b*",
                   "((a+b).(a+b))*", "~(a*||b)+b.a*"]
        for text in samples:
            seen = {norm(parse_regex(text, ab))}
            frontier = list(seen)
            while frontier:
                nxt = []
                for r in frontier:
                    for a in ab:
                        d = deriv(r, a)
                        if d not in seen:
                            seen.add(d)
                            nxt.append(d)
                frontier = nxt
                assert len(seen) < 10_000
