#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "winshift/dfa.hpp"
#include "winshift/ops.hpp"

namespace winshift {

/// Dominant-eigenvalue estimate with a certified absolute error bound on the
/// eigenvalue itself. entropy_bits = log2(value); the sentinel for an empty
/// essential graph is value 0 / entropy -infinity.
struct SpectralResult {
    double value = 0.0;
    double entropy_bits = -std::numeric_limits<double>::infinity();
    double tolerance = 0.0;
    long iterations = 0;
};

namespace detail {

/// Strongly connected components (Kosaraju), returned as lists of state ids.
inline std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> radj(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        for (int r : adj[static_cast<std::size_t>(q)])
            radj[static_cast<std::size_t>(r)].push_back(q);

    std::vector<int> finish;
    finish.reserve(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)])
            continue;
        // iterative DFS recording finish order
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        seen[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            auto& [q, i] = stack.back();
            if (i < adj[static_cast<std::size_t>(q)].size()) {
                int r = adj[static_cast<std::size_t>(q)][i++];
                if (!seen[static_cast<std::size_t>(r)]) {
                    seen[static_cast<std::size_t>(r)] = 1;
                    stack.emplace_back(r, 0);
                }
            } else {
                finish.push_back(q);
                stack.pop_back();
            }
        }
    }

    std::vector<std::vector<int>> components;
    std::vector<char> assigned(static_cast<std::size_t>(n), 0);
    for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
        if (assigned[static_cast<std::size_t>(*it)])
            continue;
        components.emplace_back();
        std::vector<int> stack{*it};
        assigned[static_cast<std::size_t>(*it)] = 1;
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            components.back().push_back(q);
            for (int r : radj[static_cast<std::size_t>(q)])
                if (!assigned[static_cast<std::size_t>(r)]) {
                    assigned[static_cast<std::size_t>(r)] = 1;
                    stack.push_back(r);
                }
        }
    }
    return components;
}

}  // namespace detail

/// Spectral radius of the adjacency matrix of trim_essential(minimize(d)),
/// i.e. 2^h of the presented subshift. Power iteration runs per strongly
/// connected component on A + I (irreducible plus positive diagonal, hence
/// primitive, so the Collatz–Wielandt ratio bounds min_i (Mv)_i/v_i and
/// max_i (Mv)_i/v_i close in on the eigenvalue); the overall value is the
/// componentwise maximum with an honest combined bracket.
inline SpectralResult entropy_spectral(const Dfa& d, double tol = 1e-12) {
    if (tol <= 0)
        throw std::invalid_argument("tolerance must be positive");
    Dfa ess = trim_essential(minimize(d));
    if (ess.num_states == 0)
        return SpectralResult{};

    int n = ess.num_states;
    std::vector<std::vector<double>> weight(static_cast<std::size_t>(n),
                                            std::vector<double>(static_cast<std::size_t>(n), 0.0));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < ess.alphabet.size(); ++c)
            if (int r = ess.next(q, c); r != Dfa::kNone) {
                if (weight[static_cast<std::size_t>(q)][static_cast<std::size_t>(r)] == 0.0)
                    adj[static_cast<std::size_t>(q)].push_back(r);
                weight[static_cast<std::size_t>(q)][static_cast<std::size_t>(r)] += 1.0;
            }

    double best_lo = 0.0, best_hi = 0.0;
    long iterations = 0;
    for (const std::vector<int>& comp : detail::strongly_connected_components(adj)) {
        int m = static_cast<int>(comp.size());
        if (m == 1) {
            // exact: the eigenvalue of a 1x1 block is its self-loop count
            double self = weight[static_cast<std::size_t>(comp[0])][static_cast<std::size_t>(comp[0])];
            best_lo = std::max(best_lo, self);
            best_hi = std::max(best_hi, self);
            continue;
        }
        std::vector<double> v(static_cast<std::size_t>(m), 1.0);
        std::vector<double> w(static_cast<std::size_t>(m), 0.0);
        double lo = 0.0, hi = std::numeric_limits<double>::infinity();
        const long max_iterations = 2'000'000;
        for (long it = 0; it < max_iterations; ++it) {
            ++iterations;
            double wmax = 0.0;
            for (int i = 0; i < m; ++i) {
                double sum = v[static_cast<std::size_t>(i)];  // the +I term
                for (int j = 0; j < m; ++j)
                    sum += weight[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])]
                                 [static_cast<std::size_t>(comp[static_cast<std::size_t>(j)])] *
                           v[static_cast<std::size_t>(j)];
                w[static_cast<std::size_t>(i)] = sum;
                wmax = std::max(wmax, sum);
            }
            lo = std::numeric_limits<double>::infinity();
            hi = 0.0;
            for (int i = 0; i < m; ++i) {
                double ratio = w[static_cast<std::size_t>(i)] / v[static_cast<std::size_t>(i)];
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            for (int i = 0; i < m; ++i)
                v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / wmax;
            if (hi - lo < tol)
                break;
        }
        double comp_lo = lo - 1.0, comp_hi = hi - 1.0;
        best_lo = std::max(best_lo, comp_lo);
        best_hi = std::max(best_hi, comp_hi);
    }

    SpectralResult out;
    out.value = (best_lo + best_hi) / 2.0;
    out.tolerance = (best_hi - best_lo) / 2.0;
    out.entropy_bits = out.value > 0 ? std::log2(out.value)
                                     : -std::numeric_limits<double>::infinity();
    out.iterations = iterations;
    return out;
}

/// One row of the combinatorial entropy estimate h_n = (1/n) log2 |B_n|.
struct WordCountRow {
    int n = 0;
    BigInt count;
    double h = 0.0;
};

inline std::vector<WordCountRow> entropy_word_count(const Dfa& d, int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("n_max must be at least 1");
    std::vector<WordCountRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        BigInt count = count_words(d, n);
        if (count == 0)
            throw std::invalid_argument("language has no words of length " + std::to_string(n) +
                                        "; entropy estimate undefined");
        rows.push_back({n, count, log2_big(count) / n});
    }
    return rows;
}

/// Largest positive root of p_k(x) = x^{m+1} - x^m - k. The left bracket end
/// max(1, k^{1/(m+1)}) is guaranteed: p_k there equals -k^{m/(m+1)} < 0 (or
/// -k at 1); the right end starts one above and doubles until the sign flips.
inline double gap_root(int m, int k, double tol = 1e-12) {
    if (m < 1 || k < 1)
        throw std::invalid_argument("gap_root needs m >= 1 and k >= 1");
    auto p = [&](double x) {
        return std::pow(x, m + 1) - std::pow(x, m) - static_cast<double>(k);
    };
    double base = std::pow(static_cast<double>(k), 1.0 / (m + 1));
    double lo = std::max(1.0, base);
    double hi = base + 1.0;
    while (p(hi) < 0)
        hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        double mid = (lo + hi) / 2.0;
        (p(mid) < 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2.0;
}

/// The unique epsilon in (0,1] with (2e/eps)^eps = c, i.e. the largest value
/// admissible in the binomial bound; (2e/eps)^eps increases from 1 to 2e on
/// (0,1], so the answer is 1 whenever c >= 2e and undefined for c <= 1.
inline double binomial_eps(double c, double tol = 1e-12) {
    const double two_e = 2.0 * std::exp(1.0);
    if (!(c > 1.0))
        throw std::invalid_argument("binomial_eps needs c > 1");
    if (c >= two_e)
        return 1.0;
    // solve eps * (ln 2e - ln eps) = ln c; the left side is increasing in eps
    double target = std::log(c);
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        double mid = (lo + hi) / 2.0;
        double value = mid * (std::log(two_e) - std::log(mid));
        (value < target ? lo : hi) = mid;
    }
    return (lo + hi) / 2.0;
}

/// Per-length maximum number of B's over accepted words, and the densities.
/// Index i holds the value for n = i+1. A length with no accepted words
/// yields max_b = -1 and an unordered density.
struct DensityProfile {
    std::vector<int> max_b;
    std::vector<double> density;
};

inline DensityProfile max_b_density(const Dfa& d, int n_max) {
    if (!(d.alphabet == Alphabet::game_letters()))
        throw std::invalid_argument("B-density is defined over the {A, B} alphabet");
    if (n_max < 1)
        throw std::invalid_argument("n_max must be at least 1");
    DensityProfile out;
    if (d.num_states == 0) {
        out.max_b.assign(static_cast<std::size_t>(n_max), -1);
        out.density.assign(static_cast<std::size_t>(n_max),
                           std::numeric_limits<double>::quiet_NaN());
        return out;
    }
    const int unreachable = -1;
    std::vector<int> cur(static_cast<std::size_t>(d.num_states), unreachable);
    cur[static_cast<std::size_t>(d.initial)] = 0;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int> next(static_cast<std::size_t>(d.num_states), unreachable);
        for (int q = 0; q < d.num_states; ++q) {
            if (cur[static_cast<std::size_t>(q)] == unreachable)
                continue;
            for (int c = 0; c < 2; ++c) {
                int r = d.next(q, c);
                if (r == Dfa::kNone)
                    continue;
                int count = cur[static_cast<std::size_t>(q)] + (c == 1 ? 1 : 0);
                next[static_cast<std::size_t>(r)] = std::max(next[static_cast<std::size_t>(r)], count);
            }
        }
        cur = std::move(next);
        int best = unreachable;
        for (int q = 0; q < d.num_states; ++q)
            if (d.accepting[static_cast<std::size_t>(q)])
                best = std::max(best, cur[static_cast<std::size_t>(q)]);
        out.max_b.push_back(best);
        out.density.push_back(best >= 0 ? static_cast<double>(best) / n
                                        : std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

/// One verified instance of the density-to-entropy inequality
/// |B_n(X)| >= |S|^{max B-count of W at n}, with exact integers.
struct LowerBoundRow {
    int n = 0;
    BigInt count;
    int max_b = 0;
    bool ok = true;
};

struct LowerBoundReport {
    std::vector<LowerBoundRow> rows;

    int violations() const {
        int v = 0;
        for (const LowerBoundRow& r : rows)
            if (!r.ok)
                ++v;
        return v;
    }
    bool ok() const { return violations() == 0; }
};

inline LowerBoundReport lower_bound_check(const Dfa& dX, const Dfa& dW, int n_max) {
    DensityProfile profile = max_b_density(dW, n_max);
    LowerBoundReport report;
    BigInt sigma = dX.alphabet.size();
    for (int n = 1; n <= n_max; ++n) {
        LowerBoundRow row;
        row.n = n;
        row.count = count_words(dX, n);
        row.max_b = profile.max_b[static_cast<std::size_t>(n - 1)];
        row.ok = row.max_b < 0 ||
                 row.count >= boost::multiprecision::pow(sigma, static_cast<unsigned>(row.max_b));
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// The winning-entropy lower bound of the large-alphabet proposition:
/// applicable when h(X) > log2(|S|-1); then with c = 2^{h(X)}/(|S|-1) and
/// eps = binomial_eps(c), the winning language must satisfy h(W) >= eps.
struct UpperBoundReport {
    bool applicable = false;
    double h_x = 0.0;
    double threshold = 0.0;  // log2(|S|-1)
    double c = 0.0;
    double epsilon = 0.0;
    double h_w = 0.0;
    bool ok = true;
};

inline UpperBoundReport upper_bound_check(const Dfa& dX, double h_w_bits, double tol = 1e-9) {
    if (dX.alphabet.size() < 2)
        throw std::invalid_argument("the winning-entropy bound needs at least two symbols");
    UpperBoundReport report;
    report.h_x = entropy_spectral(dX).entropy_bits;
    report.threshold = std::log2(static_cast<double>(dX.alphabet.size() - 1));
    report.h_w = h_w_bits;
    report.applicable = report.h_x > report.threshold + tol;
    if (!report.applicable)
        return report;  // hypothesis not met: reported, not a failure
    report.c = std::exp2(report.h_x) / static_cast<double>(dX.alphabet.size() - 1);
    report.epsilon = binomial_eps(report.c);
    report.ok = h_w_bits >= report.epsilon - tol;
    return report;
}

/// Derived report for the entropy proposition: a lower bound on h(X) implied
/// by the entropy of the winning language alone, eps * log2|S| with
/// eps = binomial_eps(2^{h(W)}). Zero when h(W) gives no leverage.
inline double winning_entropy_lower_bound(double h_w_bits, int alphabet_size) {
    if (alphabet_size < 2)
        throw std::invalid_argument("the entropy bound needs at least two symbols");
    if (!(h_w_bits > 0.0))
        return 0.0;
    double c = std::exp2(h_w_bits);
    return binomial_eps(c) * std::log2(static_cast<double>(alphabet_size));
}

}  // namespace winshift
