#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "winshift/alphabet.hpp"
#include "winshift/language.hpp"

namespace winshift {

/// Arbitrary-precision integer for exact word counts.
using BigInt = boost::multiprecision::cpp_int;

/// Deterministic finite automaton with a possibly partial transition map.
///
/// States are 0..num_states-1. A missing transition (kNone) is an implicit
/// rejecting sink; `complete` materializes it. The zero-state automaton (the
/// result of trimming everything away) is permitted and accepts nothing.
struct Dfa {
    static constexpr int kNone = -1;

    Alphabet alphabet;
    int num_states = 0;
    int initial = kNone;
    std::vector<bool> accepting;
    std::vector<std::vector<int>> delta;  // delta[state][symbol] = state or kNone

    Dfa(Alphabet a, int states, int init)
        : alphabet(std::move(a)),
          num_states(states),
          initial(init),
          accepting(static_cast<std::size_t>(states), false),
          delta(static_cast<std::size_t>(states),
                std::vector<int>(static_cast<std::size_t>(alphabet.size()), kNone)) {
        if (states < 0)
            throw std::invalid_argument("negative state count");
        if (states == 0 ? init != kNone : (init < 0 || init >= states))
            throw std::invalid_argument("initial state out of range");
    }

    static Dfa empty(Alphabet a) { return Dfa(std::move(a), 0, kNone); }

    int next(int q, int c) const {
        return delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
    }

    void set_transition(int from, int c, int to) {
        check_state(from);
        check_state(to);
        if (c < 0 || c >= alphabet.size())
            throw std::invalid_argument("symbol index out of range");
        int& slot = delta[static_cast<std::size_t>(from)][static_cast<std::size_t>(c)];
        if (slot != kNone)
            throw std::invalid_argument("duplicate transition from state " + std::to_string(from) +
                                        " on symbol " + alphabet.symbol(c));
        slot = to;
    }

    void set_accepting(int q, bool value = true) {
        check_state(q);
        accepting[static_cast<std::size_t>(q)] = value;
    }

    bool is_complete() const {
        for (int q = 0; q < num_states; ++q)
            for (int c = 0; c < alphabet.size(); ++c)
                if (next(q, c) == kNone)
                    return false;
        return true;
    }

private:
    void check_state(int q) const {
        if (q < 0 || q >= num_states)
            throw std::invalid_argument("state index out of range: " + std::to_string(q));
    }
};

/// State reached from the initial state on w, or nullopt if the run dies.
inline std::optional<int> run(const Dfa& d, const Word& w) {
    if (d.num_states == 0)
        return std::nullopt;
    int q = d.initial;
    for (int i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] >= d.alphabet.size())
            throw std::invalid_argument("word symbol index out of range for automaton alphabet");
        q = d.next(q, w[i]);
        if (q == Dfa::kNone)
            return std::nullopt;
    }
    return q;
}

inline bool accepts(const Dfa& d, const Word& w) {
    auto q = run(d, w);
    return q && d.accepting[static_cast<std::size_t>(*q)];
}

/// Totalizes the transition map, adding a rejecting sink if needed.
/// A zero-state automaton becomes a one-state rejecting loop.
inline Dfa complete(const Dfa& d) {
    if (d.num_states == 0) {
        Dfa sink(d.alphabet, 1, 0);
        for (int c = 0; c < d.alphabet.size(); ++c)
            sink.set_transition(0, c, 0);
        return sink;
    }
    if (d.is_complete())
        return d;
    Dfa out = d;
    int sink = out.num_states++;
    out.accepting.push_back(false);
    out.delta.emplace_back(static_cast<std::size_t>(out.alphabet.size()), Dfa::kNone);
    for (int q = 0; q < out.num_states; ++q)
        for (int c = 0; c < out.alphabet.size(); ++c)
            if (out.next(q, c) == Dfa::kNone)
                out.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)] = sink;
    return out;
}

inline Dfa complement(const Dfa& d) {
    Dfa out = complete(d);
    for (int q = 0; q < out.num_states; ++q)
        out.accepting[static_cast<std::size_t>(q)] = !out.accepting[static_cast<std::size_t>(q)];
    return out;
}

inline bool is_empty_language(const Dfa& d) {
    if (d.num_states == 0)
        return true;
    std::vector<bool> seen(static_cast<std::size_t>(d.num_states), false);
    std::vector<int> stack{d.initial};
    seen[static_cast<std::size_t>(d.initial)] = true;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        if (d.accepting[static_cast<std::size_t>(q)])
            return false;
        for (int c = 0; c < d.alphabet.size(); ++c) {
            int r = d.next(q, c);
            if (r != Dfa::kNone && !seen[static_cast<std::size_t>(r)]) {
                seen[static_cast<std::size_t>(r)] = true;
                stack.push_back(r);
            }
        }
    }
    return true;
}

/// All accepted words of length exactly n, in lexicographic order.
inline FiniteLanguage enumerate_words(const Dfa& d, int n) {
    if (n < 0)
        throw std::invalid_argument("word length must be nonnegative");
    FiniteLanguage out(d.alphabet);
    if (d.num_states == 0)
        return out;
    Word prefix;
    auto dfs = [&](auto&& self, int q, int depth) -> void {
        if (depth == n) {
            if (d.accepting[static_cast<std::size_t>(q)])
                out.insert(prefix);
            return;
        }
        for (int c = 0; c < d.alphabet.size(); ++c) {
            int r = d.next(q, c);
            if (r == Dfa::kNone)
                continue;
            prefix.push_back(c);
            self(self, r, depth + 1);
            prefix.pop_back();
        }
    };
    dfs(dfs, d.initial, 0);
    return out;
}

/// Exact number of accepted words of length n (dynamic program over states).
inline BigInt count_words(const Dfa& d, int n) {
    if (n < 0)
        throw std::invalid_argument("word length must be nonnegative");
    if (d.num_states == 0)
        return 0;
    std::vector<BigInt> cur(static_cast<std::size_t>(d.num_states), 0);
    cur[static_cast<std::size_t>(d.initial)] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(static_cast<std::size_t>(d.num_states), 0);
        for (int q = 0; q < d.num_states; ++q) {
            if (cur[static_cast<std::size_t>(q)] == 0)
                continue;
            for (int c = 0; c < d.alphabet.size(); ++c) {
                int r = d.next(q, c);
                if (r != Dfa::kNone)
                    next[static_cast<std::size_t>(r)] += cur[static_cast<std::size_t>(q)];
            }
        }
        cur = std::move(next);
    }
    BigInt total = 0;
    for (int q = 0; q < d.num_states; ++q)
        if (d.accepting[static_cast<std::size_t>(q)])
            total += cur[static_cast<std::size_t>(q)];
    return total;
}

/// log2 of a positive BigInt, accurate to a few ulps regardless of magnitude.
inline double log2_big(const BigInt& x) {
    if (x <= 0)
        throw std::invalid_argument("log2 of nonpositive count");
    unsigned bits = boost::multiprecision::msb(x);  // index of the highest set bit
    if (bits <= 52)
        return std::log2(x.convert_to<double>());
    BigInt top = x >> (bits - 52);
    return static_cast<double>(bits - 52) + std::log2(top.convert_to<double>());
}

}  // namespace winshift
