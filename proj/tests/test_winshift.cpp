#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "winshift/io.hpp"
#include "winshift/regex.hpp"
#include "winshift/winning.hpp"

using namespace winshift;

namespace {

Dfa even_complete() {
    Dfa d(Alphabet::binary(), 4, 0);
    d.set_accepting(0);
    d.set_accepting(1);
    d.set_accepting(2);
    d.set_transition(0, 0, 0);
    d.set_transition(0, 1, 1);
    d.set_transition(1, 0, 2);
    d.set_transition(1, 1, 1);
    d.set_transition(2, 0, 1);
    d.set_transition(2, 1, 3);
    d.set_transition(3, 0, 3);
    d.set_transition(3, 1, 3);
    return d;
}

std::string golden_text(const std::string& name) {
    std::ifstream in(std::string(WINSHIFT_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<TurnOrder> all_orders(int n) {
    std::vector<TurnOrder> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        TurnOrder order;
        for (int j = n - 1; j >= 0; --j)
            order.turns.push_back(static_cast<Player>((mask >> j) & 1));
        out.push_back(order);
    }
    return out;
}

}  // namespace

TEST_CASE("alternating automaton agrees with the game solver") {
    Dfa even = even_complete();
    AlternatingAutomaton alt = alternating_from_dfa(even);
    for (int n = 0; n <= 6; ++n) {
        FiniteLanguage wins = winning_set(enumerate_words(even, n));
        for (const TurnOrder& order : all_orders(n))
            REQUIRE(alt.accepts(order) == wins.contains(order_to_word(order)));
    }
}

TEST_CASE("right-to-left automaton of the even shift is pinned") {
    Dfa rev = winning_reversed_dfa(even_complete());
    REQUIRE(write_dfa(rev) == golden_text("even_winning_reversed.dfa"));

    // The subset chain {a,b,c} > {a,b} > {a} > {} in explicit form.
    REQUIRE(rev.num_states == 4);
    REQUIRE(rev.initial == 0);
    REQUIRE(rev.accepting == std::vector<bool>{true, true, true, false});
    REQUIRE(rev.next(0, 0) == 0);
    REQUIRE(rev.next(0, 1) == 1);
    REQUIRE(rev.next(1, 0) == 0);
    REQUIRE(rev.next(1, 1) == 2);
    REQUIRE(rev.next(2, 0) == 2);
    REQUIRE(rev.next(2, 1) == 3);
    REQUIRE(rev.next(3, 0) == 3);
    REQUIRE(rev.next(3, 1) == 3);
}

TEST_CASE("forward winning language of the even shift is pinned") {
    Dfa fwd = winning_language_dfa(even_complete());
    REQUIRE(write_dfa(fwd) == golden_text("even_winning.dfa"));
    REQUIRE(language_equal(fwd, parse_dfa(golden_text("even_winning.dfa"))));

    // Independent description: every word of A*BB(A+AB)* and its factors.
    Alphabet gl = Alphabet::game_letters();
    REQUIRE(language_equal(fwd, factor_closure(build_expected(gl, "A*BB(A+AB)*"))));

    // Slice sizes match the factor counts of the shift itself.
    Dfa even = even_complete();
    for (int n = 0; n <= 10; ++n)
        REQUIRE(count_words(fwd, n) == count_words(even, n));
}

TEST_CASE("forward and reversed automata are mirror images") {
    Dfa even = even_complete();
    Dfa rev = winning_reversed_dfa(even);
    Dfa fwd = winning_language_dfa(even);
    for (int n = 0; n <= 6; ++n) {
        FiniteLanguage backward = enumerate_words(rev, n);
        FiniteLanguage mirrored(backward.alphabet());
        for (const Word& w : backward.words())
            mirrored.insert(w.reversed());
        REQUIRE(enumerate_words(fwd, n) == mirrored);
    }
}

TEST_CASE("two-directional winning shift of the even shift") {
    Dfa even = even_complete();
    Dfa fwd = winning_language_dfa(even);
    Dfa two = two_directional_winning_shift(even);
    REQUIRE(language_subset(two, fwd));
    REQUIRE(is_downward_closed(two));

    // Factors of bi-infinite winning sequences: one BB block survives
    // (padded by A's on both sides), triple B never does.
    auto word = [&](const std::string& text) { return parse_word(two.alphabet, text); };
    REQUIRE(accepts(two, word("-")));
    REQUIRE(accepts(two, word("BB")));
    REQUIRE(accepts(two, word("BABA")));
    REQUIRE(accepts(two, word("AABAA")));
    REQUIRE(accepts(two, word("BBABAB")));
    REQUIRE_FALSE(accepts(two, word("BBB")));
    REQUIRE_FALSE(accepts(two, word("BBAABB")));
}

TEST_CASE("full shift: every order wins") {
    Dfa full(Alphabet::binary(), 1, 0);
    full.set_accepting(0);
    full.set_transition(0, 0, 0);
    full.set_transition(0, 1, 0);
    Dfa rev = winning_reversed_dfa(full);
    REQUIRE(rev.num_states == 1);
    REQUIRE(rev.accepting == std::vector<bool>{true});
    Alphabet gl = Alphabet::game_letters();
    REQUIRE(language_equal(winning_language_dfa(full), build_expected(gl, "(A+B)*")));
    REQUIRE(language_equal(two_directional_winning_shift(full), build_expected(gl, "(A+B)*")));
}

TEST_CASE("construction rejects unusable automata") {
    Dfa partial(Alphabet::binary(), 2, 0);
    partial.set_accepting(0);
    partial.set_transition(0, 0, 0);
    partial.set_transition(0, 1, 1);
    partial.set_transition(1, 0, 0);
    REQUIRE_THROWS_AS(alternating_from_dfa(partial), std::invalid_argument);
    REQUIRE_THROWS_AS(winning_reversed_dfa(partial), std::invalid_argument);
    REQUIRE_THROWS_AS(winning_reversed_dfa(Dfa::empty(Alphabet::binary())),
                      std::invalid_argument);

    Dfa huge(Alphabet::binary(), 63, 0);
    for (int q = 0; q < 63; ++q) {
        huge.set_transition(q, 0, q);
        huge.set_transition(q, 1, q);
    }
    REQUIRE_THROWS_AS(winning_reversed_dfa(huge), std::invalid_argument);
}

TEST_CASE("downward-closure decision over the alphabet order") {
    Alphabet gl = Alphabet::game_letters();
    REQUIRE(is_downward_closed(build_expected(gl, "A*")));
    REQUIRE(is_downward_closed(build_expected(gl, "A* + A*BA*")));
    REQUIRE(is_downward_closed(build_expected(gl, "(A+B)*")));
    REQUIRE_FALSE(is_downward_closed(build_expected(gl, "(AB)*")));
    REQUIRE_FALSE(is_downward_closed(build_expected(gl, "A*B")));

    Alphabet tern = Alphabet::digits(2);
    REQUIRE(is_downward_closed(build_expected(tern, "0* + 0*10* + 0*20*")));
    REQUIRE_FALSE(is_downward_closed(build_expected(tern, "0*(1+2)0*")));
}

TEST_CASE("gluing witnesses over A-gaps") {
    Dfa w_even = winning_language_dfa(even_complete());
    REQUIRE(mixing_witness_check(w_even, Word{1}, Word{1}, 0, 10));
    REQUIRE(mixing_witness_check(w_even, Word{1, 1}, Word{0, 0}, 0, 10));
    for (int k = 1; k <= 6; ++k)
        REQUIRE_FALSE(mixing_witness_check(w_even, Word{1, 1}, Word{1, 1}, k, k));
    REQUIRE_THROWS_AS(mixing_witness_check(w_even, Word{1}, Word{1}, 3, 2),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(mixing_witness_check(w_even, Word{1}, Word{1}, -1, 2),
                      std::invalid_argument);
}

TEST_CASE("presentation bundle completes its input") {
    // The sinkless 3-state even presentation and the 4-state one agree.
    Dfa partial(Alphabet::binary(), 3, 0);
    for (int q : {0, 1, 2})
        partial.set_accepting(q);
    partial.set_transition(0, 0, 0);
    partial.set_transition(0, 1, 1);
    partial.set_transition(1, 0, 2);
    partial.set_transition(1, 1, 1);
    partial.set_transition(2, 0, 1);

    WinningShiftPresentation a = winning_shift_presentation(partial, false);
    WinningShiftPresentation b = winning_shift_presentation(even_complete(), true);
    REQUIRE_FALSE(a.two_directional_dfa.has_value());
    REQUIRE(b.two_directional_dfa.has_value());
    REQUIRE(write_dfa(a.reversed_dfa) == write_dfa(b.reversed_dfa));
    REQUIRE(language_equal(a.forward_dfa, b.forward_dfa));
    REQUIRE(language_equal(*b.two_directional_dfa,
                           two_directional_winning_shift(even_complete())));
}
