"""Grammars: format, weak-GNF validation, trie semantics, derivation search."""

import pytest

from trielang import (Alphabet, Grammar, GrammarError, bisim_bounded, derives,
                      from_predicate, grammar_lang, member_states, out_bounded,
                      parse_grammar, state_nullable, state_step, states_lang,
                      validate_wgnf)

from conftest import GRAMMAR_DIR

PAL = (GRAMMAR_DIR / "pal.cfg").read_text()


@pytest.fixture
def pal() -> Grammar:
    return parse_grammar(PAL)


class TestParseGrammar:
    def test_palindrome_file(self, pal):
        assert pal.start == "S"
        assert pal.nonterminals == ("S",)
        assert pal.terminals.names == ("a", "b")
        a, b = pal.terminals.word("ab")
        assert pal.prods("S") == frozenset({(), (a,), (b,), (a, "S", a), (b, "S", b)})

    def test_terminals_header_overrides_case(self):
        g = parse_grammar("terminals: X y\nS -> \"\" | X S y\n")
        assert g.terminals.names == ("X", "y")
        assert g.nonterminals == ("S",)

    def test_comments_and_blank_lines(self):
        g = parse_grammar("# leading comment\n\nS -> a  # trailing\n")
        assert g.prods("S") == frozenset({(0,)})

    @pytest.mark.parametrize("text", [
        "",
        "S ->\n",
        "no arrow here\n",
        "S -> a | M a\n",            # M never defined
        "S -> a \"\" b\n",           # "" must stand alone
        "terminals: a\nterminals: b\nS -> a\n",
    ])
    def test_rejects_malformed(self, text):
        with pytest.raises(GrammarError):
            parse_grammar(text)

    def test_multiple_lines_for_one_nonterminal_union(self):
        g = parse_grammar("S -> a\nS -> b\n")
        assert g.prods("S") == frozenset({(0,), (1,)})


class TestValidateWgnf:
    def test_palindrome_is_valid(self, pal):
        assert validate_wgnf(pal) is None

    def test_violation_names_the_production(self):
        g = parse_grammar("S -> a | S a\n")
        violation = validate_wgnf(g)
        assert violation is not None
        assert violation.nonterminal == "S"
        assert violation.production == ("S", 0)
        assert "S" in str(violation)

    def test_trie_construction_refuses_invalid(self):
        g = parse_grammar("S -> a | S a\n")
        with pytest.raises(GrammarError):
            grammar_lang(g)
        with pytest.raises(GrammarError):
            derives(g, ("S",), (0,))
        with pytest.raises(GrammarError):
            member_states(g, {("S",)}, (0,))


class TestStateFunctions:
    def test_state_nullable(self, pal):
        a = pal.terminals.symbol("a")
        assert state_nullable(pal, ()) is True
        assert state_nullable(pal, ("S",)) is True
        assert state_nullable(pal, (a,)) is False
        assert state_nullable(pal, ("S", a)) is False
        assert state_nullable(pal, ("S", "S")) is True

    def test_state_step_terminal_head(self, pal):
        a, b = pal.terminals.word("ab")
        assert state_step(pal, (a, "S"), a) == frozenset({("S",)})
        assert state_step(pal, (a, "S"), b) == frozenset()
        assert state_step(pal, (), a) == frozenset()

    def test_state_step_nonterminal_head(self, pal):
        a, _ = pal.terminals.word("ab")
        # productions a and aSa contribute; the empty production lets the
        # rest of the form (here empty) take the letter, adding nothing.
        assert state_step(pal, ("S",), a) == frozenset({(), ("S", a)})

    def test_state_step_skips_through_nullable_head(self, pal):
        a, _ = pal.terminals.word("ab")
        got = state_step(pal, ("S", a), a)
        assert got == frozenset({(a,), ("S", a, a), ()})


class TestGrammarLang:
    def test_palindrome_membership(self, pal):
        lang = grammar_lang(pal)
        for text, expected in [("", True), ("a", True), ("aba", True),
                               ("abba", True), ("abaa", False), ("ab", False)]:
            assert lang.member(pal.terminals.word(text)) is expected

    def test_enumeration_short_palindromes(self, pal):
        got = out_bounded(grammar_lang(pal), 3, pal.terminals)
        assert got.texts() == ["", "a", "b", "aa", "bb", "aaa", "aba", "bab", "bbb"]

    def test_trie_nodes_are_shared_per_state_set(self):
        g = parse_grammar((GRAMMAR_DIR / "evenlen.cfg").read_text())
        lang = grammar_lang(g)
        a, b = g.terminals.word("ab")
        # Paths that reach the same state set share one node: the trie
        # is a dag over canonical state sets.
        assert lang.derive(a).derive(a) is lang
        assert lang.derive(b).derive(a) is lang
        assert lang.derive(a) is lang.derive(b)

    def test_states_lang_matches_member_states(self, pal):
        forms = {("S", pal.terminals.symbol("a"))}
        lang = states_lang(pal, forms)
        rebuilt = from_predicate(lambda w: member_states(pal, forms, w))
        assert bisim_bounded(lang, rebuilt, 5, pal.terminals) is None


class TestDerives:
    def test_palindrome_words(self, pal):
        for text, expected in [("aba", True), ("ab", False), ("", True),
                               ("abba", True), ("abaa", False)]:
            assert derives(pal, ("S",), pal.terminals.word(text)) is expected

    def test_explicit_sentential_form(self, pal):
        # a S b derives exactly a-palindrome-b words.
        a, b = pal.terminals.word("ab")
        assert derives(pal, (a, "S", b), pal.terminals.word("aab")) is True
        assert derives(pal, (a, "S", b), pal.terminals.word("ab")) is True
        assert derives(pal, (a, "S", b), pal.terminals.word("aabb")) is False
        assert derives(pal, (a, "S", b), pal.terminals.word("ba")) is False

    def test_multi_nonterminal_productions_terminate(self):
        # Productions that stack several nonterminals stress the fuel
        # bound; the search must still terminate and agree with the trie.
        g = parse_grammar("S -> \"\" | a S S S S S\n")
        lang = grammar_lang(g)
        for w in list(g.terminals.words_upto(6)):
            assert derives(g, ("S",), w) == lang.member(w)


class TestSoundnessTriangle:
    def test_three_readings_agree_on_short_words(self, pal):
        lang = grammar_lang(pal)
        start = {("S",)}
        for w in pal.terminals.words_upto(6):
            via_trie = lang.member(w)
            via_states = member_states(pal, start, w)
            via_search = derives(pal, ("S",), w)
            assert via_trie == via_states == via_search
