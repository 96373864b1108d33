#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "winshift/dfa.hpp"
#include "winshift/language.hpp"

namespace winshift {

namespace detail {

/// Splits a text stream into whitespace-separated token lines, dropping
/// comments (everything from '#') and blank lines. Each returned entry keeps
/// its 1-based source line number for error messages.
struct TokenLine {
    int number;
    std::vector<std::string> tokens;
};

inline std::vector<TokenLine> token_lines(std::istream& in) {
    std::vector<TokenLine> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream split(line);
        TokenLine tl{number, {}};
        std::string tok;
        while (split >> tok)
            tl.tokens.push_back(tok);
        if (!tl.tokens.empty())
            out.push_back(std::move(tl));
    }
    return out;
}

inline std::runtime_error parse_error(const std::string& what, int line) {
    return std::runtime_error("parse error on line " + std::to_string(line) + ": " + what);
}

inline const TokenLine& expect_header(const std::vector<TokenLine>& lines, std::size_t i,
                                      const std::string& key) {
    if (i >= lines.size())
        throw std::runtime_error("parse error: missing '" + key + "' header line");
    if (lines[i].tokens[0] != key)
        throw parse_error("expected '" + key + "' header", lines[i].number);
    return lines[i];
}

inline int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + tok + "'", line);
    }
}

}  // namespace detail

/// Text format for automata:
///
///     # comment
///     alphabet: 0 1
///     states: 4
///     initial: 0
///     accepting: 0 1 2
///     0 0 0        # from symbol to
///     0 1 1
///
/// Header lines appear in that order; transition lines may omit pairs (the
/// automaton is then partial) but may not repeat one. A zero-state automaton
/// is written with "initial: -" and no transitions.
inline Dfa parse_dfa(std::istream& in) {
    auto lines = detail::token_lines(in);
    std::size_t at = 0;

    const auto& alpha_line = detail::expect_header(lines, at++, "alphabet:");
    if (alpha_line.tokens.size() < 2)
        throw detail::parse_error("alphabet needs at least one symbol", alpha_line.number);
    Alphabet alphabet(
        std::vector<std::string>(alpha_line.tokens.begin() + 1, alpha_line.tokens.end()));

    const auto& states_line = detail::expect_header(lines, at++, "states:");
    if (states_line.tokens.size() != 2)
        throw detail::parse_error("states line needs exactly one count", states_line.number);
    int num_states = detail::parse_int(states_line.tokens[1], states_line.number);
    if (num_states < 0)
        throw detail::parse_error("negative state count", states_line.number);

    const auto& initial_line = detail::expect_header(lines, at++, "initial:");
    if (initial_line.tokens.size() != 2)
        throw detail::parse_error("initial line needs exactly one state", initial_line.number);
    int initial = Dfa::kNone;
    if (initial_line.tokens[1] == "-") {
        if (num_states != 0)
            throw detail::parse_error("'initial: -' is only valid with zero states",
                                      initial_line.number);
    } else {
        initial = detail::parse_int(initial_line.tokens[1], initial_line.number);
        if (initial < 0 || initial >= num_states)
            throw detail::parse_error("initial state out of range", initial_line.number);
    }

    const auto& acc_line = detail::expect_header(lines, at++, "accepting:");
    Dfa d(alphabet, num_states, initial);
    for (std::size_t i = 1; i < acc_line.tokens.size(); ++i) {
        int q = detail::parse_int(acc_line.tokens[i], acc_line.number);
        if (q < 0 || q >= num_states)
            throw detail::parse_error("accepting state out of range", acc_line.number);
        d.set_accepting(q);
    }

    for (; at < lines.size(); ++at) {
        const auto& tl = lines[at];
        if (tl.tokens.size() != 3)
            throw detail::parse_error("transition lines are 'from symbol to'", tl.number);
        int from = detail::parse_int(tl.tokens[0], tl.number);
        auto sym = alphabet.index(tl.tokens[1]);
        if (!sym)
            throw detail::parse_error("unknown symbol '" + tl.tokens[1] + "'", tl.number);
        int to = detail::parse_int(tl.tokens[2], tl.number);
        try {
            d.set_transition(from, *sym, to);
        } catch (const std::invalid_argument& e) {
            throw detail::parse_error(e.what(), tl.number);
        }
    }
    return d;
}

inline Dfa parse_dfa(const std::string& text) {
    std::istringstream in(text);
    return parse_dfa(in);
}

inline void write_dfa(std::ostream& out, const Dfa& d) {
    out << "alphabet:";
    for (const std::string& s : d.alphabet.symbols())
        out << ' ' << s;
    out << "\nstates: " << d.num_states;
    out << "\ninitial: ";
    if (d.initial == Dfa::kNone)
        out << '-';
    else
        out << d.initial;
    out << "\naccepting:";
    for (int q = 0; q < d.num_states; ++q)
        if (d.accepting[static_cast<std::size_t>(q)])
            out << ' ' << q;
    out << '\n';
    for (int q = 0; q < d.num_states; ++q)
        for (int c = 0; c < d.alphabet.size(); ++c)
            if (d.next(q, c) != Dfa::kNone)
                out << q << ' ' << d.alphabet.symbol(c) << ' ' << d.next(q, c) << '\n';
}

inline std::string write_dfa(const Dfa& d) {
    std::ostringstream out;
    write_dfa(out, d);
    return out.str();
}

/// Text format for finite word sets: an alphabet header, then one word per
/// line ('-' is the empty word). Words of mixed lengths are allowed.
inline FiniteLanguage parse_language(std::istream& in) {
    auto lines = detail::token_lines(in);
    const auto& alpha_line = detail::expect_header(lines, 0, "alphabet:");
    if (alpha_line.tokens.size() < 2)
        throw detail::parse_error("alphabet needs at least one symbol", alpha_line.number);
    Alphabet alphabet(
        std::vector<std::string>(alpha_line.tokens.begin() + 1, alpha_line.tokens.end()));
    FiniteLanguage lang(alphabet);
    for (std::size_t at = 1; at < lines.size(); ++at) {
        std::string joined;
        for (std::size_t i = 0; i < lines[at].tokens.size(); ++i) {
            if (i > 0)
                joined += ' ';
            joined += lines[at].tokens[i];
        }
        try {
            lang.insert(parse_word(alphabet, joined));
        } catch (const std::invalid_argument& e) {
            throw detail::parse_error(e.what(), lines[at].number);
        }
    }
    return lang;
}

inline FiniteLanguage parse_language(const std::string& text) {
    std::istringstream in(text);
    return parse_language(in);
}

inline void write_language(std::ostream& out, const FiniteLanguage& lang) {
    out << "alphabet:";
    for (const std::string& s : lang.alphabet().symbols())
        out << ' ' << s;
    out << '\n';
    for (const Word& w : lang.words())
        out << to_string(lang.alphabet(), w) << '\n';
}

inline std::string write_language(const FiniteLanguage& lang) {
    std::ostringstream out;
    write_language(out, lang);
    return out.str();
}

}  // namespace winshift
