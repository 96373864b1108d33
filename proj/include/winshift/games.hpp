#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "winshift/dfa.hpp"
#include "winshift/language.hpp"

namespace winshift {

/// Default guard for operations that enumerate words or turn orders:
/// an operation touching more than 2^24 candidates is refused.
constexpr int kDefaultCapBits = 24;

namespace detail {

inline void check_enumeration_cap(int length, int alphabet_size, int cap_bits) {
    if (length < 0)
        throw std::invalid_argument("length must be nonnegative");
    double bits = static_cast<double>(length) * std::log2(static_cast<double>(alphabet_size));
    if (bits > static_cast<double>(cap_bits))
        throw std::invalid_argument("enumeration cap exceeded: length " + std::to_string(length) +
                                    " over " + std::to_string(alphabet_size) +
                                    " symbols needs more than 2^" + std::to_string(cap_bits) +
                                    " candidates");
}

}  // namespace detail

/// A (the first player) tries to steer the spelled word into the target set;
/// B tries to avoid it. Values below (A = 0 < B = 1) match the convention
/// that replacing B-turns by A-turns can only help A.
enum class Player : std::uint8_t { A = 0, B = 1 };

inline Player opponent(Player p) { return p == Player::A ? Player::B : Player::A; }
inline char player_letter(Player p) { return p == Player::A ? 'A' : 'B'; }

/// Who picks the symbol at each position of the word being spelled.
struct TurnOrder {
    std::vector<Player> turns;

    TurnOrder() = default;
    explicit TurnOrder(std::vector<Player> t) : turns(std::move(t)) {}

    int size() const { return static_cast<int>(turns.size()); }
    Player operator[](int i) const { return turns[static_cast<std::size_t>(i)]; }

    static TurnOrder from_string(std::string_view text) {
        TurnOrder order;
        for (char c : text) {
            if (c == 'A')
                order.turns.push_back(Player::A);
            else if (c == 'B')
                order.turns.push_back(Player::B);
            else
                throw std::invalid_argument(std::string("turn orders use letters A/B, got '") + c +
                                            "'");
        }
        return order;
    }

    std::string to_string() const {
        std::string out;
        for (Player p : turns)
            out += player_letter(p);
        return out;
    }

    auto operator<=>(const TurnOrder&) const = default;
};

/// Conversions between turn orders and words over the {A, B} alphabet
/// (A = symbol 0, B = symbol 1), used wherever winning sets are treated as
/// languages in their own right.
inline Word order_to_word(const TurnOrder& order) {
    Word w;
    for (Player p : order.turns)
        w.push_back(static_cast<int>(p));
    return w;
}

inline TurnOrder word_to_order(const Word& w) {
    TurnOrder order;
    for (int i = 0; i < w.size(); ++i) {
        if (w[i] != 0 && w[i] != 1)
            throw std::invalid_argument("turn-order words use symbols 0 (A) and 1 (B)");
        order.turns.push_back(static_cast<Player>(w[i]));
    }
    return order;
}

/// Counting generalization of a turn order: entry k at position i means the
/// position is winning exactly when at least k one-symbol extensions lead to
/// winning positions. Entry 1 behaves like an A-turn, entry |S| like a B-turn.
struct CountingOrder {
    std::vector<int> counts;

    CountingOrder() = default;
    explicit CountingOrder(std::vector<int> c) : counts(std::move(c)) {}

    int size() const { return static_cast<int>(counts.size()); }
    int operator[](int i) const { return counts[static_cast<std::size_t>(i)]; }

    static CountingOrder from_string(std::string_view text) {
        CountingOrder order;
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("counting orders use digits 1-9");
            order.counts.push_back(c - '0');
        }
        return order;
    }

    std::string to_string() const {
        std::string out;
        for (int k : counts) {
            if (k > 9)
                return spaced();
            out += static_cast<char>('0' + k);
        }
        return out;
    }

    auto operator<=>(const CountingOrder&) const = default;

private:
    std::string spaced() const {
        std::string out;
        for (int i = 0; i < size(); ++i) {
            if (i > 0)
                out += ' ';
            out += std::to_string(counts[static_cast<std::size_t>(i)]);
        }
        return out;
    }
};

/// A positional strategy for one player: the chosen symbol for every game
/// prefix that can arise while this player follows the strategy and the
/// opponent plays arbitrarily.
struct Strategy {
    Player player = Player::A;
    std::map<Word, int> choice;
};

struct GameResult {
    Player winner = Player::A;
    Strategy witness;
};

/// Backward-induction values for one game (a fixed target slice and turn
/// order). Positions are prefixes of the word under construction; a position
/// value of true means A forces the final word into the target set.
class GameAnalysis {
public:
    GameAnalysis(const FiniteLanguage& lang, TurnOrder order)
        : slice_(lang.slice(order.size())), order_(std::move(order)) {
        values_.assign(static_cast<std::size_t>(slice_.node_count()), false);
        depths_.assign(static_cast<std::size_t>(slice_.node_count()), 0);
        // nodes in a trie are created parents-first, so a reverse scan is a
        // bottom-up evaluation once depths are known
        for (int node = 0; node < slice_.node_count(); ++node)
            for (int c = 0; c < alphabet_size(); ++c)
                if (int ch = slice_.child(node, c); ch != FiniteLanguage::npos)
                    depths_[static_cast<std::size_t>(ch)] =
                        depths_[static_cast<std::size_t>(node)] + 1;
        for (int node = slice_.node_count() - 1; node >= 0; --node)
            values_[static_cast<std::size_t>(node)] = evaluate(node);
    }

    int length() const { return order_.size(); }
    const TurnOrder& order() const { return order_; }
    const FiniteLanguage& slice() const { return slice_; }
    int alphabet_size() const { return slice_.alphabet().size(); }

    Player winner() const { return node_value(slice_.root()) ? Player::A : Player::B; }

    /// Value of the position after the symbols of `prefix` have been played.
    bool position_winning(const Word& prefix) const {
        if (prefix.size() > length())
            throw std::invalid_argument("prefix longer than the game");
        int node = slice_.root();
        for (int i = 0; i < prefix.size() && node != FiniteLanguage::npos; ++i)
            node = slice_.child(node, prefix[i]);
        return node_value(node);
    }

    bool node_value(int node) const {
        return node != FiniteLanguage::npos && values_[static_cast<std::size_t>(node)];
    }

    int node_after(int node, int symbol) const { return slice_.child(node, symbol); }

private:
    bool evaluate(int node) const {
        int depth = depths_[static_cast<std::size_t>(node)];
        if (depth == length())
            return slice_.terminal(node);
        if (order_[depth] == Player::A) {
            for (int c = 0; c < alphabet_size(); ++c)
                if (node_value(slice_.child(node, c)))
                    return true;
            return false;
        }
        for (int c = 0; c < alphabet_size(); ++c)
            if (!node_value(slice_.child(node, c)))
                return false;
        return true;
    }

    FiniteLanguage slice_;
    TurnOrder order_;
    std::vector<bool> values_;
    std::vector<int> depths_;
};

/// Solves the game on the length-|order| slice of `lang` and extracts a
/// winning strategy for the winner: at the winner's turns the smallest
/// winning symbol is chosen; choices are recorded for every prefix reachable
/// against arbitrary opposing play.
inline GameResult solve_game(const FiniteLanguage& lang, const TurnOrder& order,
                             int cap_bits = kDefaultCapBits) {
    detail::check_enumeration_cap(order.size(), lang.alphabet().size(), cap_bits);
    GameAnalysis analysis(lang, order);
    GameResult result;
    result.winner = analysis.winner();
    result.witness.player = result.winner;

    bool want = result.winner == Player::A;  // value the winner maintains
    Word prefix;
    auto walk = [&](auto&& self, int node, int depth) -> void {
        if (depth == order.size())
            return;
        if (order[depth] == result.winner) {
            int pick = -1;
            for (int c = 0; c < analysis.alphabet_size() && pick < 0; ++c)
                if (analysis.node_value(analysis.node_after(node, c)) == want)
                    pick = c;
            if (pick < 0)
                throw std::logic_error("winning strategy extraction lost its invariant");
            result.witness.choice[prefix] = pick;
            prefix.push_back(pick);
            self(self, analysis.node_after(node, pick), depth + 1);
            prefix.pop_back();
        } else {
            for (int c = 0; c < analysis.alphabet_size(); ++c) {
                prefix.push_back(c);
                self(self, analysis.node_after(node, c), depth + 1);
                prefix.pop_back();
            }
        }
    };
    walk(walk, analysis.slice().root(), 0);
    return result;
}

/// Winning set of the game on `lang`, taken per length class and returned as
/// a language over the {A, B} alphabet: order a is present exactly when A
/// wins the game with that order on the slice of matching length.
///
/// Per class this is a single bottom-up sweep of the slice trie carrying one
/// bitset per node, indexed by the possible turn-order suffixes: the A-headed
/// half of a parent bitset is the union of the children's, the B-headed half
/// the intersection over the whole alphabet (a missing child contributes
/// nothing, and kills the intersection).
inline FiniteLanguage winning_set(const FiniteLanguage& lang, int cap_bits = kDefaultCapBits) {
    using Bits = boost::dynamic_bitset<>;
    FiniteLanguage result(Alphabet::game_letters());
    for (int n : lang.lengths()) {
        if (n > cap_bits)
            throw std::invalid_argument("enumeration cap exceeded: 2^" + std::to_string(n) +
                                        " turn orders of length " + std::to_string(n));
        FiniteLanguage slice = lang.slice(n);
        int sigma = slice.alphabet().size();

        std::vector<std::vector<int>> by_depth(static_cast<std::size_t>(n) + 1);
        by_depth[0].push_back(slice.root());
        for (int d = 0; d < n; ++d)
            for (int node : by_depth[static_cast<std::size_t>(d)])
                for (int c = 0; c < sigma; ++c)
                    if (int ch = slice.child(node, c); ch != FiniteLanguage::npos)
                        by_depth[static_cast<std::size_t>(d) + 1].push_back(ch);

        // wins[node], for nodes at the current depth d: bit index encodes the
        // order suffix a_d..a_{n-1}, most significant bit = a_d (A=0, B=1)
        std::map<int, Bits> wins;
        for (int node : by_depth[static_cast<std::size_t>(n)])
            wins.emplace(node, Bits(1, slice.terminal(node) ? 1 : 0));
        for (int d = n - 1; d >= 0; --d) {
            std::map<int, Bits> above;
            std::size_t half = std::size_t{1} << (n - 1 - d);
            for (int node : by_depth[static_cast<std::size_t>(d)]) {
                Bits any(half);             // A to move: some child wins
                Bits all(half);             // B to move: every child wins
                all.set();
                for (int c = 0; c < sigma; ++c) {
                    int ch = slice.child(node, c);
                    if (ch == FiniteLanguage::npos) {
                        all.reset();
                        continue;
                    }
                    const Bits& childbits = wins.at(ch);
                    any |= childbits;
                    all &= childbits;
                }
                all.resize(2 * half);
                all <<= half;
                any.resize(2 * half);
                above.emplace(node, any | all);
            }
            wins = std::move(above);
        }

        const Bits& root = wins.at(slice.root());
        for (std::size_t idx = root.find_first(); idx != Bits::npos; idx = root.find_next(idx)) {
            Word w;
            for (int j = 0; j < n; ++j)
                w.push_back(static_cast<int>((idx >> (n - 1 - j)) & 1));
            result.insert(w);
        }
    }
    return result;
}

/// Membership of one counting order: positions are evaluated bottom-up with
/// the at-least-k rule at each level.
inline bool counting_membership(const FiniteLanguage& lang, const CountingOrder& order) {
    int sigma = lang.alphabet().size();
    for (int i = 0; i < order.size(); ++i)
        if (order[i] < 1 || order[i] > sigma)
            throw std::invalid_argument("counting order entries must lie in 1..|alphabet|");
    FiniteLanguage slice = lang.slice(order.size());
    auto value = [&](auto&& self, int node, int depth) -> bool {
        if (node == FiniteLanguage::npos)
            return false;
        if (depth == order.size())
            return slice.terminal(node);
        int winners = 0;
        for (int c = 0; c < sigma; ++c)
            if (self(self, slice.child(node, c), depth + 1))
                ++winners;
        return winners >= order[depth];
    };
    return value(value, slice.root(), 0);
}

/// All winning counting orders, per length class, in lexicographic order.
inline std::vector<CountingOrder> counting_winning_set(const FiniteLanguage& lang,
                                                       int cap_bits = kDefaultCapBits) {
    std::vector<CountingOrder> result;
    int sigma = lang.alphabet().size();
    for (int n : lang.lengths()) {
        detail::check_enumeration_cap(n, sigma, cap_bits);
        CountingOrder order(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (;;) {
            if (counting_membership(lang, order))
                result.push_back(order);
            int i = n - 1;
            while (i >= 0 && order.counts[static_cast<std::size_t>(i)] == sigma)
                order.counts[static_cast<std::size_t>(i--)] = 1;
            if (i < 0)
                break;
            ++order.counts[static_cast<std::size_t>(i)];
        }
    }
    return result;
}

/// Number of length-n words all of whose one-symbol extensions stay in the
/// language (for a binary alphabet: words w with both w0 and w1 accepted).
/// For a factor-closed language these are exactly the right-special words.
inline BigInt right_special_count(const Dfa& d, int n) {
    if (d.alphabet.size() != 2)
        throw std::invalid_argument("right-special counting expects a binary alphabet");
    if (n < 0)
        throw std::invalid_argument("length must be nonnegative");
    if (d.num_states == 0)
        return 0;
    std::vector<BigInt> cur(static_cast<std::size_t>(d.num_states), 0);
    cur[static_cast<std::size_t>(d.initial)] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(static_cast<std::size_t>(d.num_states), 0);
        for (int q = 0; q < d.num_states; ++q) {
            if (cur[static_cast<std::size_t>(q)] == 0)
                continue;
            for (int c = 0; c < 2; ++c)
                if (int r = d.next(q, c); r != Dfa::kNone)
                    next[static_cast<std::size_t>(r)] += cur[static_cast<std::size_t>(q)];
        }
        cur = std::move(next);
    }
    BigInt total = 0;
    for (int q = 0; q < d.num_states; ++q) {
        int r0 = d.next(q, 0), r1 = d.next(q, 1);
        bool both = r0 != Dfa::kNone && d.accepting[static_cast<std::size_t>(r0)] &&
                    r1 != Dfa::kNone && d.accepting[static_cast<std::size_t>(r1)];
        if (both)
            total += cur[static_cast<std::size_t>(q)];
    }
    return total;
}

/// Same count computed from an explicit slice of words of length n+1:
/// counts the length-n prefixes that continue with both symbols.
inline BigInt right_special_count(const FiniteLanguage& slice) {
    if (slice.alphabet().size() != 2)
        throw std::invalid_argument("right-special counting expects a binary alphabet");
    if (!slice.uniform_length())
        throw std::invalid_argument("right-special counting expects a single length class");
    BigInt total = 0;
    auto walk = [&](auto&& self, int node) -> void {
        int c0 = slice.child(node, 0), c1 = slice.child(node, 1);
        if (c0 != FiniteLanguage::npos && c1 != FiniteLanguage::npos &&
            slice.terminal(c0) && slice.terminal(c1))
            ++total;
        for (int c = 0; c < 2; ++c)
            if (int ch = slice.child(node, c); ch != FiniteLanguage::npos)
                self(self, ch);
    };
    walk(walk, slice.root());
    return total;
}

}  // namespace winshift
