#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "winshift/games.hpp"
#include "winshift/regex.hpp"

using namespace winshift;

namespace {

FiniteLanguage worked_example() {
    return FiniteLanguage(Alphabet::binary(), {Word{0, 0, 0}, Word{1, 1, 0}, Word{1, 1, 1}});
}

// Independent game evaluation straight from the definition, on a plain set.
bool brute_wins(const std::set<Word>& target, const TurnOrder& order, int sigma, Word& prefix,
                int depth) {
    if (depth == order.size())
        return target.count(prefix) > 0;
    bool a_turn = order[depth] == Player::A;
    for (int c = 0; c < sigma; ++c) {
        prefix.push_back(c);
        bool v = brute_wins(target, order, sigma, prefix, depth + 1);
        prefix.pop_back();
        if (a_turn && v)
            return true;
        if (!a_turn && !v)
            return false;
    }
    return !a_turn;
}

FiniteLanguage brute_winning_set(const FiniteLanguage& lang) {
    FiniteLanguage result(Alphabet::game_letters());
    for (int n : lang.lengths()) {
        std::set<Word> target;
        for (const Word& w : lang.words())
            if (w.size() == n)
                target.insert(w);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            TurnOrder order;
            for (int j = n - 1; j >= 0; --j)
                order.turns.push_back(static_cast<Player>((mask >> j) & 1));
            Word prefix;
            if (brute_wins(target, order, lang.alphabet().size(), prefix, 0))
                result.insert(order_to_word(order));
        }
    }
    return result;
}

FiniteLanguage orders(std::initializer_list<std::string> texts) {
    FiniteLanguage out(Alphabet::game_letters());
    for (const std::string& t : texts)
        out.insert(order_to_word(TurnOrder::from_string(t)));
    return out;
}

}  // namespace

TEST_CASE("turn orders and counting orders parse and print") {
    TurnOrder t = TurnOrder::from_string("BAB");
    REQUIRE(t.size() == 3);
    REQUIRE(t[0] == Player::B);
    REQUIRE(t[1] == Player::A);
    REQUIRE(t.to_string() == "BAB");
    REQUIRE(TurnOrder::from_string("").size() == 0);
    REQUIRE_THROWS_AS(TurnOrder::from_string("AXB"), std::invalid_argument);
    REQUIRE(word_to_order(Word{1, 0, 1}) == t);
    REQUIRE(order_to_word(t) == Word{1, 0, 1});
    REQUIRE_THROWS_AS(word_to_order(Word{2}), std::invalid_argument);
    REQUIRE(opponent(Player::A) == Player::B);
    REQUIRE(player_letter(Player::B) == 'B');

    CountingOrder c = CountingOrder::from_string("123");
    REQUIRE(c.size() == 3);
    REQUIRE(c[2] == 3);
    REQUIRE(c.to_string() == "123");
    REQUIRE_THROWS_AS(CountingOrder::from_string("102"), std::invalid_argument);
    REQUIRE(CountingOrder({3, 12}).to_string() == "3 12");
}

TEST_CASE("winning sets of pinned examples") {
    REQUIRE(winning_set(worked_example()) == orders({"AAA", "AAB", "BAA"}));

    FiniteLanguage pair1(Alphabet::binary(), {Word{0, 0, 0, 0}, Word{0, 0, 1, 1}});
    REQUIRE(winning_set(pair1) == orders({"AAAA", "AABA"}));

    FiniteLanguage pair2(Alphabet::binary(), {Word{0, 0, 0, 0}, Word{1, 1, 0, 0}});
    REQUIRE(winning_set(pair2) == orders({"AAAA", "BAAA"}));

    // Full slice: every order wins. Empty target: none do.
    FiniteLanguage full2(Alphabet::binary(), {Word{0, 0}, Word{0, 1}, Word{1, 0}, Word{1, 1}});
    REQUIRE(winning_set(full2) == orders({"AA", "AB", "BA", "BB"}));
    REQUIRE(winning_set(FiniteLanguage(Alphabet::binary())).empty());

    // The empty word is its own (trivially won) game.
    FiniteLanguage lambda(Alphabet::binary(), {Word{}});
    REQUIRE(winning_set(lambda) == FiniteLanguage(Alphabet::game_letters(), {Word{}}));

    // Length classes are handled independently.
    FiniteLanguage mixed(Alphabet::binary(), {Word{0}, Word{0, 0}, Word{1, 1}});
    REQUIRE(winning_set(mixed) == orders({"A", "AA", "BA"}));
}

TEST_CASE("winning sets agree with brute-force evaluation") {
    std::mt19937 rng(20260814);
    auto random_language = [&](int sigma, int n, double p) {
        FiniteLanguage lang(Alphabet::digits(sigma - 1));
        std::bernoulli_distribution keep(p);
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        for (;;) {
            if (keep(rng))
                lang.insert(Word(w));
            int i = n - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == sigma - 1)
                w[static_cast<std::size_t>(i--)] = 0;
            if (i < 0)
                break;
            ++w[static_cast<std::size_t>(i)];
        }
        return lang;
    };

    for (int trial = 0; trial < 15; ++trial) {
        FiniteLanguage lang = random_language(3, 3, 0.4);
        REQUIRE(winning_set(lang) == brute_winning_set(lang));
    }
    for (int trial = 0; trial < 10; ++trial) {
        FiniteLanguage lang = random_language(2, 4, 0.5);
        REQUIRE(winning_set(lang) == brute_winning_set(lang));
    }
}

TEST_CASE("solving a game yields winner and replayable strategy") {
    FiniteLanguage lang = worked_example();

    GameResult bab = solve_game(lang, TurnOrder::from_string("BAB"));
    REQUIRE(bab.winner == Player::B);
    REQUIRE(bab.witness.player == Player::B);
    // B opens with 0; afterwards either reply of A is dodged.
    REQUIRE(bab.witness.choice.at(Word{}) == 0);
    REQUIRE(bab.witness.choice.at(Word{0, 0}) == 1);
    REQUIRE(bab.witness.choice.at(Word{0, 1}) == 0);
    REQUIRE(bab.witness.choice.size() == 3);

    GameResult aab = solve_game(lang, TurnOrder::from_string("AAB"));
    REQUIRE(aab.winner == Player::A);
    REQUIRE(aab.witness.choice.at(Word{}) == 1);
    REQUIRE(aab.witness.choice.at(Word{1}) == 1);
    REQUIRE(aab.witness.choice.size() == 2);

    // Replay every opposing line and check the witness actually wins.
    auto replay = [&](const GameResult& res, const TurnOrder& order) {
        auto walk = [&](auto&& self, Word prefix, int depth) -> void {
            if (depth == order.size()) {
                bool in_target = lang.contains(prefix);
                REQUIRE(in_target == (res.winner == Player::A));
                return;
            }
            if (order[depth] == res.winner) {
                Word next = prefix;
                next.push_back(res.witness.choice.at(prefix));
                self(self, next, depth + 1);
            } else {
                for (int c = 0; c < 2; ++c) {
                    Word next = prefix;
                    next.push_back(c);
                    self(self, next, depth + 1);
                }
            }
        };
        walk(walk, Word{}, 0);
    };
    replay(bab, TurnOrder::from_string("BAB"));
    replay(aab, TurnOrder::from_string("AAB"));
}

TEST_CASE("position values of the worked example") {
    GameAnalysis analysis(worked_example(), TurnOrder::from_string("BAB"));
    REQUIRE(analysis.winner() == Player::B);
    REQUIRE_FALSE(analysis.position_winning(Word{}));
    REQUIRE_FALSE(analysis.position_winning(Word{0}));
    REQUIRE(analysis.position_winning(Word{1}));
    REQUIRE(analysis.position_winning(Word{1, 1}));
    REQUIRE_FALSE(analysis.position_winning(Word{0, 0}));
    REQUIRE(analysis.position_winning(Word{0, 0, 0}));
    REQUIRE_FALSE(analysis.position_winning(Word{0, 0, 1}));
    REQUIRE_FALSE(analysis.position_winning(Word{0, 1}));  // outside the trie
    REQUIRE_THROWS_AS(analysis.position_winning(Word{0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("counting orders generalize turn orders") {
    FiniteLanguage lang = worked_example();
    FiniteLanguage wins = winning_set(lang);

    // Entries 1 and |alphabet| replicate A-turns and B-turns.
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        TurnOrder order;
        CountingOrder counting;
        for (int j = 2; j >= 0; --j) {
            bool b = (mask >> j) & 1;
            order.turns.push_back(b ? Player::B : Player::A);
            counting.counts.push_back(b ? 2 : 1);
        }
        REQUIRE(counting_membership(lang, counting) == wins.contains(order_to_word(order)));
    }

    // The counting winning set always has exactly as many orders as the
    // language has words; exhaustively over all binary targets of length 2.
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        FiniteLanguage target(Alphabet::binary());
        for (int i = 0; i < 4; ++i)
            if ((mask >> i) & 1)
                target.insert(Word{i / 2, i % 2});
        REQUIRE(counting_winning_set(target).size() == target.size());
    }

    // A ternary example pinned by hand: {0, 1} wins thresholds 1 and 2.
    FiniteLanguage two(Alphabet::digits(2), {Word{0}, Word{1}});
    auto counting = counting_winning_set(two);
    REQUIRE(counting == std::vector<CountingOrder>{CountingOrder({1}), CountingOrder({2})});

    REQUIRE_THROWS_AS(counting_membership(two, CountingOrder({4})), std::invalid_argument);
    REQUIRE_THROWS_AS(counting_membership(two, CountingOrder({0})), std::invalid_argument);
}

TEST_CASE("right-special words are counted both ways") {
    // Full binary shift: every word is right-special.
    Dfa full(Alphabet::binary(), 1, 0);
    full.set_accepting(0);
    full.set_transition(0, 0, 0);
    full.set_transition(0, 1, 0);
    REQUIRE(right_special_count(full, 4) == 16);

    // Factors of 0*1*: only 0^n extends both ways.
    Dfa zeroone = build_expected(Alphabet::binary(), "0*1*");
    REQUIRE(right_special_count(zeroone, 3) == 1);
    REQUIRE(right_special_count(zeroone, 10) == 1);

    // The automaton-side count matches the explicit-slice count.
    Dfa even(Alphabet::binary(), 4, 0);
    even.set_accepting(0);
    even.set_accepting(1);
    even.set_accepting(2);
    even.set_transition(0, 0, 0);
    even.set_transition(0, 1, 1);
    even.set_transition(1, 0, 2);
    even.set_transition(1, 1, 1);
    even.set_transition(2, 0, 1);
    even.set_transition(2, 1, 3);
    even.set_transition(3, 0, 3);
    even.set_transition(3, 1, 3);
    for (int n = 0; n <= 6; ++n)
        REQUIRE(right_special_count(even, n) == right_special_count(enumerate_words(even, n + 1)));

    Dfa ternary(Alphabet::digits(2), 1, 0);
    REQUIRE_THROWS_AS(right_special_count(ternary, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(right_special_count(full, -1), std::invalid_argument);
    FiniteLanguage mixed(Alphabet::binary(), {Word{0}, Word{0, 1}});
    REQUIRE_THROWS_AS(right_special_count(mixed), std::invalid_argument);
}

TEST_CASE("enumeration caps refuse oversized games") {
    FiniteLanguage longword(Alphabet::binary());
    longword.insert(Word(std::vector<int>(30, 0)));
    REQUIRE_THROWS_AS(winning_set(longword), std::invalid_argument);
    REQUIRE_THROWS_AS(counting_winning_set(longword), std::invalid_argument);

    FiniteLanguage small = worked_example();
    TurnOrder long_order(std::vector<Player>(30, Player::A));
    REQUIRE_THROWS_AS(solve_game(small, long_order), std::invalid_argument);
    // A custom cap tightens the guard.
    REQUIRE_THROWS_AS(solve_game(small, TurnOrder::from_string("AAA"), 2), std::invalid_argument);
    REQUIRE_NOTHROW(solve_game(small, TurnOrder::from_string("AAA"), 3));
}

TEST_CASE("winning sets ignore absent length classes") {
    FiniteLanguage lang(Alphabet::binary(), {Word{0, 1}});
    FiniteLanguage wins = winning_set(lang);
    REQUIRE(wins.lengths() == std::vector<int>{2});
    REQUIRE(wins == orders({"AA"}));
}
