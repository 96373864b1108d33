#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace winshift {

/// Ordered set of distinct printable symbol tokens.
///
/// The token order is fixed at construction and defines every canonical
/// encoding in the library: symbol indices in words, state numbering of
/// minimized automata, enumeration order, and the text formats.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty())
            throw std::invalid_argument("alphabet must be nonempty");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (symbols_[i].empty())
                throw std::invalid_argument("alphabet symbols must be nonempty tokens");
            if (!index_.emplace(symbols_[i], static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate alphabet symbol: " + symbols_[i]);
        }
    }

    Alphabet(std::initializer_list<std::string> symbols)
        : Alphabet(std::vector<std::string>(symbols)) {}

    int size() const { return static_cast<int>(symbols_.size()); }

    const std::string& symbol(int i) const { return symbols_.at(static_cast<std::size_t>(i)); }

    const std::vector<std::string>& symbols() const { return symbols_; }

    std::optional<int> index(std::string_view token) const {
        auto it = index_.find(std::string(token));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    int index_or_throw(std::string_view token) const {
        if (auto i = index(token))
            return *i;
        throw std::invalid_argument("unknown symbol: " + std::string(token));
    }

    bool single_char_symbols() const {
        return std::all_of(symbols_.begin(), symbols_.end(),
                           [](const std::string& s) { return s.size() == 1; });
    }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

    /// {"0", "1", ..., "k"}
    static Alphabet digits(int k) {
        if (k < 0)
            throw std::invalid_argument("digits alphabet needs k >= 0");
        std::vector<std::string> syms;
        syms.reserve(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= k; ++i)
            syms.push_back(std::to_string(i));
        return Alphabet(std::move(syms));
    }

    static Alphabet binary() { return digits(1); }

    /// The turn-order alphabet {"A", "B"}, with A < B.
    static Alphabet game_letters() { return Alphabet({"A", "B"}); }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, int> index_;
};

/// Word over an alphabet, stored as symbol indices. The empty word is valid.
struct Word {
    std::vector<int> syms;

    Word() = default;
    Word(std::initializer_list<int> s) : syms(s) {}
    explicit Word(std::vector<int> s) : syms(std::move(s)) {}

    int size() const { return static_cast<int>(syms.size()); }
    bool empty() const { return syms.empty(); }
    int operator[](int i) const { return syms[static_cast<std::size_t>(i)]; }
    void push_back(int c) { syms.push_back(c); }
    void pop_back() { syms.pop_back(); }

    Word prefix(int len) const {
        return Word(std::vector<int>(syms.begin(), syms.begin() + len));
    }
    Word suffix_from(int pos) const {
        return Word(std::vector<int>(syms.begin() + pos, syms.end()));
    }
    Word reversed() const {
        return Word(std::vector<int>(syms.rbegin(), syms.rend()));
    }

    friend Word operator+(const Word& a, const Word& b) {
        Word r = a;
        r.syms.insert(r.syms.end(), b.syms.begin(), b.syms.end());
        return r;
    }

    auto operator<=>(const Word&) const = default;
};

/// Renders a word with the alphabet's tokens: contiguous when every token is
/// a single character, space-separated otherwise. The empty word is "-".
inline std::string to_string(const Alphabet& a, const Word& w) {
    if (w.empty())
        return "-";
    std::string out;
    bool compact = a.single_char_symbols();
    for (int i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] >= a.size())
            throw std::invalid_argument("word symbol index out of range");
        if (!compact && i > 0)
            out += ' ';
        out += a.symbol(w[i]);
    }
    return out;
}

/// Inverse of to_string. Accepts either space-separated tokens or, when every
/// token is a single character, a contiguous string.
inline Word parse_word(const Alphabet& a, std::string_view text) {
    if (text == "-")
        return Word{};
    Word w;
    if (text.find_first_of(" \t") != std::string_view::npos) {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok)
            w.push_back(a.index_or_throw(tok));
        return w;
    }
    if (auto i = a.index(text)) {
        // a single multi-character token
        w.push_back(*i);
        return w;
    }
    if (!a.single_char_symbols())
        throw std::invalid_argument("cannot split word over multi-character alphabet: " +
                                    std::string(text));
    for (char c : text)
        w.push_back(a.index_or_throw(std::string_view(&c, 1)));
    return w;
}

}  // namespace winshift
