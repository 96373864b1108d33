#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "winshift/alphabet.hpp"

namespace winshift {

/// Finite set of words stored as a trie. Words of different lengths may
/// coexist; helpers slice the set by length where an operation is defined
/// per length class.
class FiniteLanguage {
public:
    static constexpr int npos = -1;

    explicit FiniteLanguage(Alphabet a) : alphabet_(std::move(a)) {
        nodes_.emplace_back(alphabet_.size());
    }

    FiniteLanguage(Alphabet a, const std::vector<Word>& words) : FiniteLanguage(std::move(a)) {
        for (const Word& w : words)
            insert(w);
    }

    const Alphabet& alphabet() const { return alphabet_; }

    void insert(const Word& w) {
        int node = 0;
        for (int i = 0; i < w.size(); ++i) {
            int c = w[i];
            if (c < 0 || c >= alphabet_.size())
                throw std::invalid_argument("word symbol index out of range for alphabet");
            int& slot = nodes_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(c)];
            if (slot == npos) {
                slot = static_cast<int>(nodes_.size());
                nodes_.emplace_back(alphabet_.size());
            }
            node = slot;
        }
        if (!nodes_[static_cast<std::size_t>(node)].terminal) {
            nodes_[static_cast<std::size_t>(node)].terminal = true;
            ++size_;
        }
    }

    bool contains(const Word& w) const {
        int node = 0;
        for (int i = 0; i < w.size(); ++i) {
            if (w[i] < 0 || w[i] >= alphabet_.size())
                return false;
            node = child(node, w[i]);
            if (node == npos)
                return false;
        }
        return terminal(node);
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    /// All words in lexicographic order (shorter prefixes first).
    std::vector<Word> words() const {
        std::vector<Word> out;
        out.reserve(size_);
        Word prefix;
        collect(0, prefix, out);
        return out;
    }

    /// Sorted distinct word lengths present in the set.
    std::vector<int> lengths() const {
        std::set<int> ls;
        for (const Word& w : words())
            ls.insert(w.size());
        return std::vector<int>(ls.begin(), ls.end());
    }

    bool uniform_length() const { return lengths().size() <= 1; }

    /// The subset of words of length exactly n.
    FiniteLanguage slice(int n) const {
        FiniteLanguage out(alphabet_);
        for (const Word& w : words())
            if (w.size() == n)
                out.insert(w);
        return out;
    }

    // --- trie access -------------------------------------------------------

    int root() const { return 0; }

    /// Child of `node` on symbol `sym`; npos when absent (also for node == npos).
    int child(int node, int sym) const {
        if (node == npos)
            return npos;
        return nodes_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(sym)];
    }

    bool terminal(int node) const {
        return node != npos && nodes_[static_cast<std::size_t>(node)].terminal;
    }

    int node_count() const { return static_cast<int>(nodes_.size()); }

    bool operator==(const FiniteLanguage& other) const {
        return alphabet_ == other.alphabet_ && words() == other.words();
    }

private:
    struct Node {
        explicit Node(int degree) : child(static_cast<std::size_t>(degree), npos) {}
        std::vector<int> child;
        bool terminal = false;
    };

    void collect(int node, Word& prefix, std::vector<Word>& out) const {
        if (terminal(node))
            out.push_back(prefix);
        for (int c = 0; c < alphabet_.size(); ++c) {
            int next = child(node, c);
            if (next == npos)
                continue;
            prefix.push_back(c);
            collect(next, prefix, out);
            prefix.pop_back();
        }
    }

    Alphabet alphabet_;
    std::vector<Node> nodes_;
    std::size_t size_ = 0;
};

}  // namespace winshift
