#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "winshift/dfa.hpp"
#include "winshift/nfa.hpp"

namespace winshift {

namespace detail {

inline std::vector<bool> reachable_states(const Dfa& d) {
    std::vector<bool> seen(static_cast<std::size_t>(d.num_states), false);
    if (d.num_states == 0)
        return seen;
    std::vector<int> stack{d.initial};
    seen[static_cast<std::size_t>(d.initial)] = true;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int c = 0; c < d.alphabet.size(); ++c) {
            int r = d.next(q, c);
            if (r != Dfa::kNone && !seen[static_cast<std::size_t>(r)]) {
                seen[static_cast<std::size_t>(r)] = true;
                stack.push_back(r);
            }
        }
    }
    return seen;
}

inline std::vector<bool> coreachable_states(const Dfa& d) {
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(d.num_states));
    for (int q = 0; q < d.num_states; ++q)
        for (int c = 0; c < d.alphabet.size(); ++c) {
            int r = d.next(q, c);
            if (r != Dfa::kNone)
                rev[static_cast<std::size_t>(r)].push_back(q);
        }
    std::vector<bool> seen(static_cast<std::size_t>(d.num_states), false);
    std::vector<int> stack;
    for (int q = 0; q < d.num_states; ++q)
        if (d.accepting[static_cast<std::size_t>(q)]) {
            seen[static_cast<std::size_t>(q)] = true;
            stack.push_back(q);
        }
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int p : rev[static_cast<std::size_t>(q)])
            if (!seen[static_cast<std::size_t>(p)]) {
                seen[static_cast<std::size_t>(p)] = true;
                stack.push_back(p);
            }
    }
    return seen;
}

/// Keeps the states selected by `keep` (and transitions between them),
/// renumbering survivors in ascending order of their old index. If the old
/// initial state is dropped, the smallest survivor becomes initial.
inline Dfa restrict_states(const Dfa& d, const std::vector<bool>& keep) {
    std::vector<int> remap(static_cast<std::size_t>(d.num_states), Dfa::kNone);
    int count = 0;
    for (int q = 0; q < d.num_states; ++q)
        if (keep[static_cast<std::size_t>(q)])
            remap[static_cast<std::size_t>(q)] = count++;
    if (count == 0)
        return Dfa::empty(d.alphabet);
    int init = (d.initial != Dfa::kNone && keep[static_cast<std::size_t>(d.initial)])
                   ? remap[static_cast<std::size_t>(d.initial)]
                   : 0;
    Dfa out(d.alphabet, count, init);
    for (int q = 0; q < d.num_states; ++q) {
        if (!keep[static_cast<std::size_t>(q)])
            continue;
        out.set_accepting(remap[static_cast<std::size_t>(q)],
                          d.accepting[static_cast<std::size_t>(q)]);
        for (int c = 0; c < d.alphabet.size(); ++c) {
            int r = d.next(q, c);
            if (r != Dfa::kNone && keep[static_cast<std::size_t>(r)])
                out.set_transition(remap[static_cast<std::size_t>(q)], c,
                                   remap[static_cast<std::size_t>(r)]);
        }
    }
    return out;
}

/// Renumbers states in BFS discovery order from the initial state, exploring
/// symbols in alphabet order. Input must be complete with all states
/// reachable; the output is the canonical presentation of its isomorphism
/// class, so structural equality decides language equality of minimal DFAs.
inline Dfa bfs_canonical(const Dfa& d) {
    std::vector<int> order(static_cast<std::size_t>(d.num_states), Dfa::kNone);
    std::vector<int> discovered;
    discovered.reserve(static_cast<std::size_t>(d.num_states));
    order[static_cast<std::size_t>(d.initial)] = 0;
    discovered.push_back(d.initial);
    for (std::size_t i = 0; i < discovered.size(); ++i)
        for (int c = 0; c < d.alphabet.size(); ++c) {
            int r = d.next(discovered[i], c);
            if (order[static_cast<std::size_t>(r)] == Dfa::kNone) {
                order[static_cast<std::size_t>(r)] = static_cast<int>(discovered.size());
                discovered.push_back(r);
            }
        }
    if (discovered.size() != static_cast<std::size_t>(d.num_states))
        throw std::invalid_argument("bfs_canonical requires all states reachable");
    Dfa out(d.alphabet, d.num_states, 0);
    for (int q = 0; q < d.num_states; ++q) {
        out.set_accepting(order[static_cast<std::size_t>(q)],
                          d.accepting[static_cast<std::size_t>(q)]);
        for (int c = 0; c < d.alphabet.size(); ++c)
            out.set_transition(order[static_cast<std::size_t>(q)], c,
                               order[static_cast<std::size_t>(d.next(q, c))]);
    }
    return out;
}

}  // namespace detail

/// Minimal complete DFA for the same language, in canonical (BFS-numbered)
/// form: two language-equal inputs minimize to structurally identical
/// automata. The empty language yields the one-state rejecting automaton.
inline Dfa minimize(const Dfa& d) {
    Dfa total = complete(d);
    Dfa c = detail::restrict_states(total, detail::reachable_states(total));
    // Moore partition refinement: split classes by (acceptance, successor classes).
    std::vector<int> cls(static_cast<std::size_t>(c.num_states));
    for (int q = 0; q < c.num_states; ++q)
        cls[static_cast<std::size_t>(q)] = c.accepting[static_cast<std::size_t>(q)] ? 1 : 0;
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(static_cast<std::size_t>(c.num_states));
        for (int q = 0; q < c.num_states; ++q) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(c.alphabet.size()) + 1);
            sig.push_back(cls[static_cast<std::size_t>(q)]);
            for (int s = 0; s < c.alphabet.size(); ++s)
                sig.push_back(cls[static_cast<std::size_t>(c.next(q, s))]);
            auto [it, _] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            next_cls[static_cast<std::size_t>(q)] = it->second;
        }
        bool stable = sig_ids.size() ==
                      static_cast<std::size_t>(*std::max_element(cls.begin(), cls.end())) + 1;
        cls = std::move(next_cls);
        if (stable)
            break;
    }
    int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;
    Dfa quotient(c.alphabet, num_classes, cls[static_cast<std::size_t>(c.initial)]);
    std::vector<bool> built(static_cast<std::size_t>(num_classes), false);
    for (int q = 0; q < c.num_states; ++q) {
        int k = cls[static_cast<std::size_t>(q)];
        if (built[static_cast<std::size_t>(k)])
            continue;
        built[static_cast<std::size_t>(k)] = true;
        quotient.set_accepting(k, c.accepting[static_cast<std::size_t>(q)]);
        for (int s = 0; s < c.alphabet.size(); ++s)
            quotient.set_transition(k, s, cls[static_cast<std::size_t>(c.next(q, s))]);
    }
    return detail::bfs_canonical(quotient);
}

enum class ProductMode { Intersect, Union };

/// Reachable product automaton over a shared alphabet; output is complete.
inline Dfa product(const Dfa& a, const Dfa& b, ProductMode mode) {
    if (!(a.alphabet == b.alphabet))
        throw std::invalid_argument("product requires identical alphabets");
    Dfa ca = complete(a), cb = complete(b);
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs;
    auto intern = [&](std::pair<int, int> p) {
        auto [it, inserted] = ids.emplace(p, static_cast<int>(pairs.size()));
        if (inserted)
            pairs.push_back(p);
        return it->second;
    };
    intern({ca.initial, cb.initial});
    std::vector<std::vector<int>> delta;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [qa, qb] = pairs[i];
        std::vector<int> row(static_cast<std::size_t>(ca.alphabet.size()));
        for (int c = 0; c < ca.alphabet.size(); ++c)
            row[static_cast<std::size_t>(c)] = intern({ca.next(qa, c), cb.next(qb, c)});
        delta.push_back(std::move(row));
    }
    Dfa out(ca.alphabet, static_cast<int>(pairs.size()), 0);
    for (int s = 0; s < out.num_states; ++s) {
        auto [qa, qb] = pairs[static_cast<std::size_t>(s)];
        bool fa = ca.accepting[static_cast<std::size_t>(qa)];
        bool fb = cb.accepting[static_cast<std::size_t>(qb)];
        out.set_accepting(s, mode == ProductMode::Intersect ? (fa && fb) : (fa || fb));
        for (int c = 0; c < out.alphabet.size(); ++c)
            out.set_transition(s, c, delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)]);
    }
    return out;
}

inline bool language_subset(const Dfa& a, const Dfa& b) {
    return is_empty_language(product(a, complement(b), ProductMode::Intersect));
}

inline bool language_equal(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet == b.alphabet))
        throw std::invalid_argument("language_equal requires identical alphabets");
    Dfa ma = minimize(a), mb = minimize(b);
    return ma.num_states == mb.num_states && ma.accepting == mb.accepting && ma.delta == mb.delta;
}

/// Restricts to the essential part: first drop states not on any path from
/// the initial state to acceptance (this removes sinks), then iteratively
/// delete states without incoming or without outgoing transitions. What
/// remains is exactly the set of states lying on bi-infinite paths, the
/// graph presentation of the underlying subshift. May return a zero-state
/// automaton. The result's initial state is the surviving original initial
/// if it survives and is otherwise arbitrary; graph-level consumers ignore it.
inline Dfa trim_essential(const Dfa& d) {
    auto reach = detail::reachable_states(d);
    auto coreach = detail::coreachable_states(d);
    std::vector<bool> keep(static_cast<std::size_t>(d.num_states), false);
    for (int q = 0; q < d.num_states; ++q)
        keep[static_cast<std::size_t>(q)] =
            reach[static_cast<std::size_t>(q)] && coreach[static_cast<std::size_t>(q)];

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<bool> has_in(static_cast<std::size_t>(d.num_states), false);
        std::vector<bool> has_out(static_cast<std::size_t>(d.num_states), false);
        for (int q = 0; q < d.num_states; ++q) {
            if (!keep[static_cast<std::size_t>(q)])
                continue;
            for (int c = 0; c < d.alphabet.size(); ++c) {
                int r = d.next(q, c);
                if (r != Dfa::kNone && keep[static_cast<std::size_t>(r)]) {
                    has_out[static_cast<std::size_t>(q)] = true;
                    has_in[static_cast<std::size_t>(r)] = true;
                }
            }
        }
        for (int q = 0; q < d.num_states; ++q)
            if (keep[static_cast<std::size_t>(q)] &&
                !(has_in[static_cast<std::size_t>(q)] && has_out[static_cast<std::size_t>(q)])) {
                keep[static_cast<std::size_t>(q)] = false;
                changed = true;
            }
    }
    return detail::restrict_states(d, keep);
}

/// Minimal complete DFA for the set of labels of all finite paths anywhere in
/// d's transition graph (every state acts as both initial and accepting).
/// For an essential graph this is the factor language of the presented
/// subshift. A zero-state input yields the empty-language automaton, which
/// rejects even the empty word.
inline Dfa all_paths_language(const Dfa& d) {
    Nfa n(d.alphabet, d.num_states);
    for (int q = 0; q < d.num_states; ++q) {
        n.add_initial(q);
        n.set_accepting(q);
        for (int c = 0; c < d.alphabet.size(); ++c)
            if (d.next(q, c) != Dfa::kNone)
                n.add_transition(q, c, d.next(q, c));
    }
    return minimize(determinize(n));
}

/// Minimal complete DFA for the factor language { u : xuy in L(d) }.
inline Dfa factor_closure(const Dfa& d) {
    auto reach = detail::reachable_states(d);
    auto coreach = detail::coreachable_states(d);
    std::vector<bool> useful(static_cast<std::size_t>(d.num_states), false);
    for (int q = 0; q < d.num_states; ++q)
        useful[static_cast<std::size_t>(q)] =
            reach[static_cast<std::size_t>(q)] && coreach[static_cast<std::size_t>(q)];
    return all_paths_language(detail::restrict_states(d, useful));
}

}  // namespace winshift
