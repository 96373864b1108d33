#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "winshift/dfa.hpp"

namespace winshift {

/// Nondeterministic automaton with multiple initial states (no epsilon moves;
/// the regex pipeline eliminates those before reaching this type).
struct Nfa {
    Alphabet alphabet;
    int num_states = 0;
    std::vector<int> initials;
    std::vector<bool> accepting;
    std::vector<std::vector<std::vector<int>>> trans;  // trans[state][symbol] = targets

    Nfa(Alphabet a, int states)
        : alphabet(std::move(a)),
          num_states(states),
          accepting(static_cast<std::size_t>(states), false),
          trans(static_cast<std::size_t>(states),
                std::vector<std::vector<int>>(static_cast<std::size_t>(alphabet.size()))) {
        if (states < 0)
            throw std::invalid_argument("negative state count");
    }

    void add_initial(int q) {
        check_state(q);
        if (std::find(initials.begin(), initials.end(), q) == initials.end())
            initials.push_back(q);
    }

    void add_transition(int from, int c, int to) {
        check_state(from);
        check_state(to);
        if (c < 0 || c >= alphabet.size())
            throw std::invalid_argument("symbol index out of range");
        auto& targets = trans[static_cast<std::size_t>(from)][static_cast<std::size_t>(c)];
        if (std::find(targets.begin(), targets.end(), to) == targets.end())
            targets.push_back(to);
    }

    void set_accepting(int q, bool value = true) {
        check_state(q);
        accepting[static_cast<std::size_t>(q)] = value;
    }

private:
    void check_state(int q) const {
        if (q < 0 || q >= num_states)
            throw std::invalid_argument("state index out of range: " + std::to_string(q));
    }
};

/// Reversal: recognizes the mirror images of d's words.
inline Nfa reverse(const Dfa& d) {
    Nfa out(d.alphabet, d.num_states);
    for (int q = 0; q < d.num_states; ++q) {
        if (d.accepting[static_cast<std::size_t>(q)])
            out.add_initial(q);
        for (int c = 0; c < d.alphabet.size(); ++c) {
            int r = d.next(q, c);
            if (r != Dfa::kNone)
                out.add_transition(r, c, q);
        }
    }
    if (d.num_states > 0)
        out.set_accepting(d.initial);
    return out;
}

/// Subset construction. The result is complete (the empty subset acts as the
/// sink) and its states are numbered in BFS discovery order from the initial
/// subset, so equal inputs produce identical outputs.
inline Dfa determinize(const Nfa& n) {
    std::vector<int> start = n.initials;
    std::sort(start.begin(), start.end());

    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    auto intern = [&](std::vector<int> subset) {
        auto [it, inserted] = ids.emplace(std::move(subset), static_cast<int>(subsets.size()));
        if (inserted)
            subsets.push_back(it->first);
        return it->second;
    };

    intern(start);
    std::vector<std::vector<int>> delta;
    for (std::size_t next = 0; next < subsets.size(); ++next) {
        std::vector<int> row(static_cast<std::size_t>(n.alphabet.size()));
        const std::vector<int> current = subsets[next];  // copy: subsets grows below
        for (int c = 0; c < n.alphabet.size(); ++c) {
            std::vector<int> target;
            for (int q : current)
                for (int r : n.trans[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)])
                    target.push_back(r);
            std::sort(target.begin(), target.end());
            target.erase(std::unique(target.begin(), target.end()), target.end());
            row[static_cast<std::size_t>(c)] = intern(std::move(target));
        }
        delta.push_back(std::move(row));
    }

    Dfa out(n.alphabet, static_cast<int>(subsets.size()), 0);
    for (int s = 0; s < out.num_states; ++s) {
        for (int c = 0; c < out.alphabet.size(); ++c)
            out.set_transition(s, c, delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)]);
        bool acc = std::any_of(subsets[static_cast<std::size_t>(s)].begin(),
                               subsets[static_cast<std::size_t>(s)].end(),
                               [&](int q) { return n.accepting[static_cast<std::size_t>(q)]; });
        out.set_accepting(s, acc);
    }
    return out;
}

}  // namespace winshift
