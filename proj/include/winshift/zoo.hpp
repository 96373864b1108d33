#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "winshift/dfa.hpp"
#include "winshift/games.hpp"
#include "winshift/language.hpp"
#include "winshift/ops.hpp"
#include "winshift/regex.hpp"

namespace winshift {

/// Minimal complete DFA of the factor language of the shift defined by the
/// forbidden word set F. An Aho-Corasick matcher over F yields the avoidance
/// automaton (states that completed a forbidden word are dropped, making the
/// transition map partial); trimming to the essential part and collecting
/// all path labels then gives exactly the factors of bi-infinite avoiders.
inline Dfa sft_from_forbidden(const Alphabet& alphabet, const FiniteLanguage& forbidden) {
    if (!(forbidden.alphabet() == alphabet))
        throw std::invalid_argument("forbidden words must use the shift's alphabet");
    if (forbidden.contains(Word{}))
        return minimize(Dfa::empty(alphabet));

    int sigma = alphabet.size();
    // Aho-Corasick trie with failure links over the forbidden set
    struct Node {
        std::vector<int> child;
        int fail = 0;
        bool dead = false;
        explicit Node(int degree) : child(static_cast<std::size_t>(degree), -1) {}
    };
    std::vector<Node> trie{Node(sigma)};
    for (const Word& f : forbidden.words()) {
        int at = 0;
        for (int i = 0; i < f.size(); ++i) {
            int& slot = trie[static_cast<std::size_t>(at)].child[static_cast<std::size_t>(f[i])];
            if (slot < 0) {
                slot = static_cast<int>(trie.size());
                trie.emplace_back(sigma);
            }
            at = slot;
        }
        trie[static_cast<std::size_t>(at)].dead = true;
    }
    std::deque<int> queue;
    for (int c = 0; c < sigma; ++c) {
        int ch = trie[0].child[static_cast<std::size_t>(c)];
        if (ch > 0)
            queue.push_back(ch);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (trie[static_cast<std::size_t>(trie[static_cast<std::size_t>(u)].fail)].dead)
            trie[static_cast<std::size_t>(u)].dead = true;
        for (int c = 0; c < sigma; ++c) {
            int ch = trie[static_cast<std::size_t>(u)].child[static_cast<std::size_t>(c)];
            if (ch < 0)
                continue;
            int f = trie[static_cast<std::size_t>(u)].fail;
            while (f != 0 && trie[static_cast<std::size_t>(f)].child[static_cast<std::size_t>(c)] < 0)
                f = trie[static_cast<std::size_t>(f)].fail;
            int target = trie[static_cast<std::size_t>(f)].child[static_cast<std::size_t>(c)];
            trie[static_cast<std::size_t>(ch)].fail = (target >= 0 && target != ch) ? target : 0;
            queue.push_back(ch);
        }
    }
    auto step = [&](int u, int c) {
        for (;;) {
            int ch = trie[static_cast<std::size_t>(u)].child[static_cast<std::size_t>(c)];
            if (ch >= 0)
                return ch;
            if (u == 0)
                return 0;
            u = trie[static_cast<std::size_t>(u)].fail;
        }
    };

    Dfa avoid(alphabet, static_cast<int>(trie.size()), 0);
    for (int u = 0; u < avoid.num_states; ++u) {
        if (trie[static_cast<std::size_t>(u)].dead)
            continue;
        avoid.set_accepting(u);
        for (int c = 0; c < sigma; ++c) {
            int v = step(u, c);
            if (!trie[static_cast<std::size_t>(v)].dead)
                avoid.set_transition(u, c, v);
        }
    }
    return all_paths_language(trim_essential(avoid));
}

/// Replicates every 1-labeled transition for the symbols 1..k of the larger
/// alphabet {0..k}, keeping 0-transitions: a presentation of the k-extension
/// of a binary shift (for downward-closed languages this is exactly the
/// extension construction of the entropy analysis).
inline Dfa extend(const Dfa& d, int k) {
    if (!(d.alphabet == Alphabet::binary()))
        throw std::invalid_argument("extension is defined for the {0, 1} alphabet");
    if (k < 1)
        throw std::invalid_argument("extension needs k >= 1");
    Dfa out(Alphabet::digits(k), d.num_states, d.num_states == 0 ? Dfa::kNone : d.initial);
    for (int q = 0; q < d.num_states; ++q) {
        out.set_accepting(q, d.accepting[static_cast<std::size_t>(q)]);
        if (int r = d.next(q, 0); r != Dfa::kNone)
            out.set_transition(q, 0, r);
        if (int r = d.next(q, 1); r != Dfa::kNone)
            for (int c = 1; c <= k; ++c)
                out.set_transition(q, c, r);
    }
    return out;
}

/// Image under the symbol map sending the top symbol k to 1 and everything
/// else to 0 (a nondeterministic relabeling, then determinized and
/// minimized). Inverse direction of extend on its image.
inline Dfa counting_projection(const Dfa& d) {
    int top = d.alphabet.size() - 1;
    if (!(d.alphabet == Alphabet::digits(top)))
        throw std::invalid_argument("counting projection is defined for a {0..k} alphabet");
    Nfa n(Alphabet::binary(), d.num_states);
    if (d.num_states == 0)
        return minimize(determinize(n));
    n.add_initial(d.initial);
    for (int q = 0; q < d.num_states; ++q) {
        if (d.accepting[static_cast<std::size_t>(q)])
            n.set_accepting(q);
        for (int c = 0; c <= top; ++c)
            if (int r = d.next(q, c); r != Dfa::kNone)
                n.add_transition(q, c == top ? 1 : 0, r);
    }
    return minimize(determinize(n));
}

namespace detail {

inline Dfa even_shift_canonical() {
    // the four-state presentation: state 0 reads leading 0s, states 1/2
    // track an even/odd run of 0s since the last 1, and state 3 is the
    // rejecting sink reached when an odd run closes
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

inline Dfa gap_shift(int m) {
    if (m < 1)
        throw std::invalid_argument("gap shift needs m >= 1");
    FiniteLanguage forbidden(Alphabet::binary());
    for (int i = 0; i < m; ++i) {
        Word f{1};
        for (int j = 0; j < i; ++j)
            f.push_back(0);
        f.push_back(1);
        forbidden.insert(f);
    }
    return sft_from_forbidden(Alphabet::binary(), forbidden);
}

inline Dfa full_shift(int k) {
    if (k < 0)
        throw std::invalid_argument("full shift needs k >= 0");
    Dfa d(Alphabet::digits(k), 1, 0);
    d.set_accepting(0);
    for (int c = 0; c <= k; ++c)
        d.set_transition(0, c, 0);
    return d;
}

inline Dfa periodic_shift(int p) {
    if (p < 1)
        throw std::invalid_argument("periodic shift needs p >= 1");
    // cycle automaton spelling (0^{p-1} 1)^inf; its path labels are the
    // factor language of the periodic orbit
    Dfa cycle(Alphabet::binary(), p, 0);
    for (int i = 0; i < p; ++i) {
        cycle.set_accepting(i);
        int symbol = (p > 1 && i == p - 1) ? 1 : 0;
        cycle.set_transition(i, symbol, (i + 1) % p);
    }
    return all_paths_language(cycle);
}

}  // namespace detail

/// The named presentations used throughout the test corpus and the CLI.
/// Parameters: gap and periodic read m (period/gap size), full and the two
/// extension families read k; gapext reads both.
inline Dfa named_shift(std::string_view name, int m = 1, int k = 1) {
    if (name == "even")
        return detail::even_shift_canonical();
    if (name == "goldenmean") {
        FiniteLanguage forbidden(Alphabet::binary(), {Word{1, 1}});
        return sft_from_forbidden(Alphabet::binary(), forbidden);
    }
    if (name == "zeroone") {
        FiniteLanguage forbidden(Alphabet::binary(), {Word{1, 0}});
        return sft_from_forbidden(Alphabet::binary(), forbidden);
    }
    if (name == "soficY")
        return factor_closure(build_expected(Alphabet::digits(2), "0*(10*20*)*"));
    if (name == "sftZ")
        return factor_closure(build_expected(Alphabet::binary(), "(01+0001)*"));
    if (name == "gap")
        return detail::gap_shift(m);
    if (name == "full")
        return detail::full_shift(k);
    if (name == "periodic")
        return detail::periodic_shift(m);
    if (name == "goldext")
        return extend(named_shift("goldenmean"), k);
    if (name == "gapext")
        return extend(detail::gap_shift(m), k);
    throw std::invalid_argument("unknown shift name: " + std::string(name));
}

/// Substitution on symbols, with the derived uniform/primitive flags.
struct Substitution {
    Alphabet alphabet;
    std::vector<Word> images;
    bool uniform = false;
    bool primitive = false;
};

inline Substitution make_substitution(Alphabet alphabet, std::vector<Word> images) {
    if (static_cast<int>(images.size()) != alphabet.size())
        throw std::invalid_argument("one image per alphabet symbol required");
    for (const Word& img : images) {
        if (img.empty())
            throw std::invalid_argument("substitution images must be nonempty");
        for (int i = 0; i < img.size(); ++i)
            if (img[i] < 0 || img[i] >= alphabet.size())
                throw std::invalid_argument("substitution image symbol out of range");
    }
    Substitution t{std::move(alphabet), std::move(images), true, false};
    for (const Word& img : t.images)
        t.uniform = t.uniform && img.size() == t.images[0].size();

    // primitivity: some power of the occurrence matrix is everywhere positive
    int s = t.alphabet.size();
    std::vector<std::vector<bool>> occurs(static_cast<std::size_t>(s),
                                          std::vector<bool>(static_cast<std::size_t>(s), false));
    for (int a = 0; a < s; ++a)
        for (int i = 0; i < t.images[static_cast<std::size_t>(a)].size(); ++i)
            occurs[static_cast<std::size_t>(a)]
                  [static_cast<std::size_t>(t.images[static_cast<std::size_t>(a)][i])] = true;
    std::vector<std::vector<bool>> power = occurs;
    for (int step = 0; step < (s - 1) * (s - 1) + 1; ++step) {
        bool all = true;
        for (const auto& row : power)
            for (bool cell : row)
                all = all && cell;
        if (all) {
            t.primitive = true;
            break;
        }
        std::vector<std::vector<bool>> next(static_cast<std::size_t>(s),
                                            std::vector<bool>(static_cast<std::size_t>(s), false));
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                if (power[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                    for (int c = 0; c < s; ++c)
                        next[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] =
                            next[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] ||
                            occurs[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        power = std::move(next);
    }
    return t;
}

inline Substitution fibonacci_substitution() {
    return make_substitution(Alphabet::binary(), {Word{0, 1}, Word{0}});
}

inline Substitution thue_morse_substitution() {
    return make_substitution(Alphabet::binary(), {Word{0, 1}, Word{1, 0}});
}

/// The length-n factors of the substitution's limit language. The working
/// set holds every discovered factor of length <= n; applying the
/// substitution to a factor only ever produces factors (images of factors
/// are factors of the next iterate), and every length-<=n factor of an
/// iterate is covered by the image of a factor of length <= n of the
/// previous one, since images are nonempty. Closure of the seed symbols
/// under this step therefore yields exactly the factor set, without
/// materializing the exponentially long iterates themselves.
inline FiniteLanguage substitution_factors(const Substitution& t, int n,
                                           int cap_bits = kDefaultCapBits) {
    if (n < 1)
        throw std::invalid_argument("factor length must be at least 1");
    detail::check_enumeration_cap(n, t.alphabet.size(), cap_bits);

    // reject non-growing substitutions: iterate the exact length vector;
    // bounded orbits are constant after |S| steps (paths have entered the
    // multiplicity-one cycles of the dependency graph by then)
    int s = t.alphabet.size();
    std::vector<BigInt> lengths(static_cast<std::size_t>(s), 1);
    std::vector<BigInt> prev;
    for (int step = 0; step <= s; ++step) {
        prev = lengths;
        std::vector<BigInt> next(static_cast<std::size_t>(s), 0);
        for (int a = 0; a < s; ++a)
            for (int i = 0; i < t.images[static_cast<std::size_t>(a)].size(); ++i)
                next[static_cast<std::size_t>(a)] +=
                    lengths[static_cast<std::size_t>(t.images[static_cast<std::size_t>(a)][i])];
        lengths = std::move(next);
    }
    if (lengths == prev)
        throw std::invalid_argument("substitution is non-growing; it generates no length-" +
                                    std::to_string(n) + " factors beyond a bounded set");

    std::set<Word> factors;
    std::vector<Word> frontier;
    for (int a = 0; a < s; ++a) {
        Word seed{a};
        factors.insert(seed);
        frontier.push_back(seed);
    }
    while (!frontier.empty()) {
        std::vector<Word> next_frontier;
        for (const Word& u : frontier) {
            Word image;
            for (int i = 0; i < u.size(); ++i)
                image = image + t.images[static_cast<std::size_t>(u[i])];
            for (int len = 1; len <= std::min(n, image.size()); ++len)
                for (int at = 0; at + len <= image.size(); ++at) {
                    Word factor(std::vector<int>(image.syms.begin() + at,
                                                 image.syms.begin() + at + len));
                    if (factors.insert(factor).second)
                        next_frontier.push_back(std::move(factor));
                }
        }
        frontier = std::move(next_frontier);
    }

    FiniteLanguage out(t.alphabet);
    for (const Word& w : factors)
        if (w.size() == n)
            out.insert(w);
    return out;
}

}  // namespace winshift
