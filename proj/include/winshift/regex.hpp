#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "winshift/nfa.hpp"
#include "winshift/ops.hpp"

namespace winshift {

/// Regular expression over symbol indices (immutable tree).
class RegexExpr {
public:
    enum class Kind { Epsilon, Literal, Concat, Union, Star, Plus };

    Kind kind() const { return node_->kind; }
    int literal() const { return node_->literal; }
    const std::vector<RegexExpr>& children() const { return node_->children; }

    static RegexExpr eps() { return RegexExpr(Kind::Epsilon, -1, {}); }
    static RegexExpr lit(int symbol) {
        if (symbol < 0)
            throw std::invalid_argument("literal symbol index must be nonnegative");
        return RegexExpr(Kind::Literal, symbol, {});
    }
    static RegexExpr cat(std::vector<RegexExpr> parts) {
        if (parts.empty())
            return eps();
        if (parts.size() == 1)
            return parts[0];
        return RegexExpr(Kind::Concat, -1, std::move(parts));
    }
    static RegexExpr alt(std::vector<RegexExpr> parts) {
        if (parts.empty())
            throw std::invalid_argument("union of zero alternatives");
        if (parts.size() == 1)
            return parts[0];
        return RegexExpr(Kind::Union, -1, std::move(parts));
    }
    static RegexExpr star(RegexExpr e) { return RegexExpr(Kind::Star, -1, {std::move(e)}); }
    static RegexExpr plus(RegexExpr e) { return RegexExpr(Kind::Plus, -1, {std::move(e)}); }

private:
    struct Node {
        Kind kind;
        int literal;
        std::vector<RegexExpr> children;
    };

    RegexExpr(Kind k, int literal, std::vector<RegexExpr> children)
        : node_(std::make_shared<Node>(Node{k, literal, std::move(children)})) {}

    std::shared_ptr<const Node> node_;
};

namespace rx {
inline RegexExpr eps() { return RegexExpr::eps(); }
inline RegexExpr lit(int s) { return RegexExpr::lit(s); }
inline RegexExpr cat(std::vector<RegexExpr> p) { return RegexExpr::cat(std::move(p)); }
inline RegexExpr alt(std::vector<RegexExpr> p) { return RegexExpr::alt(std::move(p)); }
inline RegexExpr star(RegexExpr e) { return RegexExpr::star(std::move(e)); }
inline RegexExpr plus(RegexExpr e) { return RegexExpr::plus(std::move(e)); }
}  // namespace rx

namespace detail {

/// Thompson construction scaffolding: single initial/accepting state pair per
/// fragment, epsilon edges allowed.
struct EpsNfa {
    int num_states = 0;
    std::vector<std::pair<int, int>> eps_edges;
    std::vector<std::tuple<int, int, int>> sym_edges;  // from, symbol, to
    int new_state() { return num_states++; }
};

struct Fragment {
    int start;
    int end;
};

inline Fragment thompson(EpsNfa& nfa, const RegexExpr& e, int alphabet_size) {
    using Kind = RegexExpr::Kind;
    Fragment f{nfa.new_state(), nfa.new_state()};
    switch (e.kind()) {
        case Kind::Epsilon:
            nfa.eps_edges.emplace_back(f.start, f.end);
            break;
        case Kind::Literal:
            if (e.literal() >= alphabet_size)
                throw std::invalid_argument("regex literal outside alphabet");
            nfa.sym_edges.emplace_back(f.start, e.literal(), f.end);
            break;
        case Kind::Concat: {
            int at = f.start;
            for (const RegexExpr& child : e.children()) {
                Fragment g = thompson(nfa, child, alphabet_size);
                nfa.eps_edges.emplace_back(at, g.start);
                at = g.end;
            }
            nfa.eps_edges.emplace_back(at, f.end);
            break;
        }
        case Kind::Union:
            for (const RegexExpr& child : e.children()) {
                Fragment g = thompson(nfa, child, alphabet_size);
                nfa.eps_edges.emplace_back(f.start, g.start);
                nfa.eps_edges.emplace_back(g.end, f.end);
            }
            break;
        case Kind::Star:
        case Kind::Plus: {
            Fragment g = thompson(nfa, e.children()[0], alphabet_size);
            nfa.eps_edges.emplace_back(f.start, g.start);
            nfa.eps_edges.emplace_back(g.end, f.end);
            nfa.eps_edges.emplace_back(g.end, g.start);
            if (e.kind() == Kind::Star)
                nfa.eps_edges.emplace_back(f.start, f.end);
            break;
        }
    }
    return f;
}

inline std::vector<std::vector<int>> eps_closures(const EpsNfa& nfa) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nfa.num_states));
    for (auto [a, b] : nfa.eps_edges)
        adj[static_cast<std::size_t>(a)].push_back(b);
    std::vector<std::vector<int>> closure(static_cast<std::size_t>(nfa.num_states));
    for (int q = 0; q < nfa.num_states; ++q) {
        std::vector<bool> seen(static_cast<std::size_t>(nfa.num_states), false);
        std::vector<int> stack{q};
        seen[static_cast<std::size_t>(q)] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            closure[static_cast<std::size_t>(q)].push_back(u);
            for (int v : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    stack.push_back(v);
                }
        }
    }
    return closure;
}

}  // namespace detail

/// Minimal complete DFA for a regular expression (Thompson construction,
/// epsilon elimination, subset construction, minimization). The name reflects
/// its main role: building independently specified expected languages that
/// computed languages are compared against.
inline Dfa build_expected(const Alphabet& alphabet, const RegexExpr& e) {
    detail::EpsNfa eps;
    detail::Fragment f = detail::thompson(eps, e, alphabet.size());
    auto closure = detail::eps_closures(eps);

    std::vector<std::vector<std::pair<int, int>>> out_edges(
        static_cast<std::size_t>(eps.num_states));
    for (auto [from, sym, to] : eps.sym_edges)
        out_edges[static_cast<std::size_t>(from)].emplace_back(sym, to);

    Nfa n(alphabet, eps.num_states);
    n.add_initial(f.start);
    for (int q = 0; q < eps.num_states; ++q)
        for (int p : closure[static_cast<std::size_t>(q)]) {
            if (p == f.end)
                n.set_accepting(q);
            for (auto [sym, to] : out_edges[static_cast<std::size_t>(p)])
                n.add_transition(q, sym, to);
        }
    return minimize(determinize(n));
}

/// Parses the textbook syntax used throughout: juxtaposition concatenates,
/// '+' (or '|') is union, '*' is star, parentheses group, and every other
/// non-space character must be a single-character alphabet symbol. The empty
/// pattern denotes the empty word.
inline RegexExpr parse_pattern(const Alphabet& alphabet, std::string_view pattern) {
    struct Parser {
        const Alphabet& alphabet;
        std::string_view text;
        std::size_t pos = 0;

        void skip_space() {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
                ++pos;
        }
        bool at_end() {
            skip_space();
            return pos == text.size();
        }
        char peek() {
            skip_space();
            return text[pos];
        }

        RegexExpr parse_union() {
            std::vector<RegexExpr> alts{parse_concat()};
            while (!at_end() && (peek() == '+' || peek() == '|')) {
                ++pos;
                alts.push_back(parse_concat());
            }
            return RegexExpr::alt(std::move(alts));
        }

        RegexExpr parse_concat() {
            std::vector<RegexExpr> parts;
            while (!at_end() && peek() != ')' && peek() != '+' && peek() != '|')
                parts.push_back(parse_repeat());
            return RegexExpr::cat(std::move(parts));
        }

        RegexExpr parse_repeat() {
            RegexExpr e = parse_atom();
            while (!at_end() && peek() == '*') {
                ++pos;
                e = RegexExpr::star(std::move(e));
            }
            return e;
        }

        RegexExpr parse_atom() {
            if (at_end())
                throw std::invalid_argument("pattern ended where a symbol was expected");
            char c = peek();
            if (c == '(') {
                ++pos;
                RegexExpr e = parse_union();
                if (at_end() || peek() != ')')
                    throw std::invalid_argument("unbalanced parenthesis in pattern");
                ++pos;
                return e;
            }
            if (c == '*' || c == ')')
                throw std::invalid_argument(std::string("unexpected '") + c + "' in pattern");
            ++pos;
            return RegexExpr::lit(alphabet.index_or_throw(std::string_view(&c, 1)));
        }
    };

    Parser p{alphabet, pattern};
    RegexExpr e = p.parse_union();
    if (!p.at_end())
        throw std::invalid_argument("trailing characters in pattern: " +
                                    std::string(pattern.substr(p.pos)));
    return e;
}

inline Dfa build_expected(const Alphabet& alphabet, std::string_view pattern) {
    return build_expected(alphabet, parse_pattern(alphabet, pattern));
}

}  // namespace winshift
