#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "winshift/dfa.hpp"
#include "winshift/games.hpp"
#include "winshift/nfa.hpp"
#include "winshift/ops.hpp"

namespace winshift {

/// Alternating automaton over the {A, B} order alphabet built from a DFA:
/// reading A is an existential choice among one-symbol successors, reading B
/// a universal one. Acceptance of a turn order coincides with A winning the
/// game on the corresponding slice of the DFA's language.
struct AlternatingAutomaton {
    Alphabet order_alphabet = Alphabet::game_letters();
    int num_states = 0;
    int initial = 0;
    std::vector<bool> accepting;
    std::vector<std::vector<int>> successors;  // {delta(q,c) : c in S}, sorted distinct

    /// Backward induction over positions (i, q): at i = |a| a state holds iff
    /// accepting; at an A-position some successor must hold, at a B-position
    /// all successors must.
    bool accepts(const TurnOrder& order) const {
        std::vector<char> holds(accepting.begin(), accepting.end());
        for (int i = order.size() - 1; i >= 0; --i) {
            std::vector<char> prev(static_cast<std::size_t>(num_states), 0);
            for (int q = 0; q < num_states; ++q) {
                bool value = order[i] == Player::B;
                for (int r : successors[static_cast<std::size_t>(q)]) {
                    if (order[i] == Player::A)
                        value = value || holds[static_cast<std::size_t>(r)];
                    else
                        value = value && holds[static_cast<std::size_t>(r)];
                }
                prev[static_cast<std::size_t>(q)] = value;
            }
            holds = std::move(prev);
        }
        return holds[static_cast<std::size_t>(initial)] != 0;
    }
};

/// The alternating-automaton construction on a complete DFA.
inline AlternatingAutomaton alternating_from_dfa(const Dfa& d) {
    if (!d.is_complete() || d.num_states == 0)
        throw std::invalid_argument("alternating construction needs a complete automaton");
    AlternatingAutomaton out;
    out.num_states = d.num_states;
    out.initial = d.initial;
    out.accepting = d.accepting;
    out.successors.resize(static_cast<std::size_t>(d.num_states));
    for (int q = 0; q < d.num_states; ++q) {
        std::vector<int>& succ = out.successors[static_cast<std::size_t>(q)];
        for (int c = 0; c < d.alphabet.size(); ++c)
            succ.push_back(d.next(q, c));
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
    return out;
}

/// Determinization of the alternating automaton, reading turn orders
/// right-to-left: the subset state tracks which DFA states would let A win
/// the remaining (already consumed) part of the order. The start subset is
/// the accepting set; reading A maps P to its existential preimage, reading B
/// to its universal preimage; a subset accepts iff it contains the initial
/// state. Subsets are materialized in BFS discovery order (A before B), and
/// the empty subset is kept as an explicit rejecting sink.
inline Dfa winning_reversed_dfa(const Dfa& d) {
    if (!d.is_complete() || d.num_states == 0)
        throw std::invalid_argument("winning-shift construction needs a complete automaton");
    if (d.num_states > 62)
        throw std::invalid_argument("winning-shift subset construction capped at 62 states");

    using Mask = std::uint64_t;
    Mask start = 0;
    for (int q = 0; q < d.num_states; ++q)
        if (d.accepting[static_cast<std::size_t>(q)])
            start |= Mask{1} << q;

    auto pre_exists = [&](Mask p) {
        Mask out = 0;
        for (int q = 0; q < d.num_states; ++q)
            for (int c = 0; c < d.alphabet.size(); ++c)
                if (p >> d.next(q, c) & 1) {
                    out |= Mask{1} << q;
                    break;
                }
        return out;
    };
    auto pre_forall = [&](Mask p) {
        Mask out = 0;
        for (int q = 0; q < d.num_states; ++q) {
            bool all = true;
            for (int c = 0; c < d.alphabet.size(); ++c)
                all = all && (p >> d.next(q, c) & 1);
            if (all)
                out |= Mask{1} << q;
        }
        return out;
    };

    std::map<Mask, int> ids;
    std::vector<Mask> masks;
    auto intern = [&](Mask m) {
        auto [it, inserted] = ids.emplace(m, static_cast<int>(masks.size()));
        if (inserted)
            masks.push_back(m);
        return it->second;
    };
    intern(start);
    std::vector<std::pair<int, int>> delta;  // successor on A, on B
    for (std::size_t i = 0; i < masks.size(); ++i) {
        Mask p = masks[i];
        int on_a = intern(pre_exists(p));
        int on_b = intern(pre_forall(p));
        delta.emplace_back(on_a, on_b);
    }

    Dfa out(Alphabet::game_letters(), static_cast<int>(masks.size()), 0);
    for (int s = 0; s < out.num_states; ++s) {
        out.set_transition(s, 0, delta[static_cast<std::size_t>(s)].first);
        out.set_transition(s, 1, delta[static_cast<std::size_t>(s)].second);
        out.set_accepting(s, (masks[static_cast<std::size_t>(s)] >> d.initial & 1) != 0);
    }
    return out;
}

/// Minimal DFA of the winning language W(B(X)) read left-to-right, obtained
/// by reversing the right-to-left automaton.
inline Dfa winning_language_dfa(const Dfa& d) {
    return minimize(determinize(reverse(winning_reversed_dfa(d))));
}

namespace detail {

/// One step of the extension filter: words w such that awb is accepted for
/// some letters a, b.
inline Dfa middle_factors_step(const Dfa& d) {
    Dfa c = complete(d);
    Nfa n(c.alphabet, c.num_states);
    for (int a = 0; a < c.alphabet.size(); ++a)
        n.add_initial(c.next(c.initial, a));
    for (int q = 0; q < c.num_states; ++q) {
        for (int b = 0; b < c.alphabet.size(); ++b) {
            int r = c.next(q, b);
            if (c.accepting[static_cast<std::size_t>(r)]) {
                n.set_accepting(q);
                break;
            }
        }
        for (int cc = 0; cc < c.alphabet.size(); ++cc)
            n.add_transition(q, cc, c.next(q, cc));
    }
    return minimize(determinize(n));
}

}  // namespace detail

/// Factor language of the two-directional winning shift: the bi-infinite
/// {A,B}-sequences whose every factor lies in W(B(X)). Computed on the graph
/// of the minimal forward DFA (essential part, then all path labels), and
/// cross-checked against the fixpoint of the one-step extension filter
/// L -> {w : awb in L for some letters a, b}; the two constructions must
/// agree, a disagreement indicates an internal error. May return the
/// empty-language automaton (degenerate case).
inline Dfa two_directional_winning_shift(const Dfa& d) {
    Dfa forward = winning_language_dfa(d);
    Dfa graph_based = all_paths_language(trim_essential(forward));

    Dfa iterate = forward;
    long guard = 1 + (std::int64_t{1} << std::min(iterate.num_states, 32));
    for (long step = 0; step < guard; ++step) {
        Dfa next = detail::middle_factors_step(iterate);
        if (language_equal(next, iterate))
            break;
        iterate = std::move(next);
    }
    if (!language_equal(graph_based, iterate))
        throw std::logic_error(
            "two-directional constructions disagree (graph trim vs extension fixpoint)");
    return graph_based;
}

/// Language-level downward closure with respect to the alphabet order
/// (symbol i may be lowered to any j < i): true iff every coordinatewise
/// lowering of an accepted word is accepted. Decided by building the
/// lowering-image machine nondeterministically and testing inclusion.
inline bool is_downward_closed(const Dfa& d) {
    Dfa c = complete(d);
    Nfa lowered(c.alphabet, c.num_states);
    lowered.add_initial(c.initial);
    for (int q = 0; q < c.num_states; ++q) {
        if (c.accepting[static_cast<std::size_t>(q)])
            lowered.set_accepting(q);
        for (int sym = 0; sym < c.alphabet.size(); ++sym)
            for (int low = 0; low <= sym; ++low)
                lowered.add_transition(q, low, c.next(q, sym));
    }
    return language_subset(determinize(lowered), c);
}

/// Finite mixing witness: a A^k b accepted for every k in [kmin, kmax]
/// (A here is the first alphabet symbol). For downward-closed winning
/// languages this is the witness form of the mixing property.
inline bool mixing_witness_check(const Dfa& d, const Word& a, const Word& b, int kmin, int kmax) {
    if (kmin > kmax)
        throw std::invalid_argument("mixing witness range is empty");
    if (kmin < 0)
        throw std::invalid_argument("mixing witness exponents must be nonnegative");
    for (int k = kmin; k <= kmax; ++k) {
        Word w = a;
        for (int i = 0; i < k; ++i)
            w.push_back(0);
        w = w + b;
        if (!accepts(d, w))
            return false;
    }
    return true;
}

/// The bundle the CLI emits: right-to-left automaton, minimal forward DFA,
/// and optionally the two-directional factor language.
struct WinningShiftPresentation {
    Dfa reversed_dfa;
    Dfa forward_dfa;
    std::optional<Dfa> two_directional_dfa;
};

inline WinningShiftPresentation winning_shift_presentation(const Dfa& d, bool two_directional) {
    Dfa c = complete(d);
    WinningShiftPresentation out{winning_reversed_dfa(c), winning_language_dfa(c), std::nullopt};
    if (two_directional)
        out.two_directional_dfa = two_directional_winning_shift(c);
    return out;
}

}  // namespace winshift
