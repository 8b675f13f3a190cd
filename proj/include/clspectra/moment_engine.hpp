#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "clspectra/degree_sequence.hpp"

namespace clspectra {

using BigInt = boost::multiprecision::cpp_int;

// Degree distribution of a tree with s edges: r_j = number of vertices
// of degree j, with sum r_j = s+1 and sum j r_j = 2s, together with the
// exact number of rooted ordered trees realizing it.
struct TreeDegreeDistribution {
    int s = 0;
    std::vector<int> r; // r[j-1] = r_j, length s
    BigInt tree_count;
};

inline BigInt factorial_big(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt multinomial(int n, std::span<const int> parts) {
    int total = 0;
    BigInt denom = 1;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("negative multinomial part");
        total += p;
        denom *= factorial_big(p);
    }
    if (total != n) throw std::invalid_argument("multinomial parts do not sum to n");
    return factorial_big(n) / denom;
}

// C_s = binom(2s, s) / (s+1), exact.
inline BigInt catalan(int s) {
    if (s < 0) throw std::invalid_argument("catalan requires s >= 0");
    BigInt num = 1;
    for (int i = s + 2; i <= 2 * s; ++i) num *= i;
    return num / factorial_big(s); // binom(2s,s)/(s+1) = (2s)!/(s!(s+1)!)
}

// Number of rooted ordered trees with degree distribution r:
// (2/(s+1)) * multinomial(s+1; r_1..r_s).  The division is exact.
inline BigInt rooted_ordered_tree_count(int s, std::span<const int> r) {
    BigInt t = 2 * multinomial(s + 1, r);
    if (t % (s + 1) != 0) throw std::logic_error("tree count division is not exact");
    return t / (s + 1);
}

// All valid tree degree distributions for s edges, in lexicographic
// order of (r_1, ..., r_s).  Bounded DFS from high degree down with
// vertex- and degree-budget propagation.
inline std::vector<TreeDegreeDistribution> enumerate_degree_distributions(int s) {
    if (s < 1 || s > 64) throw std::invalid_argument("s must lie in [1, 64]");
    std::vector<TreeDegreeDistribution> out;
    std::vector<int> r(static_cast<std::size_t>(s), 0);
    // Assign r_s..r_2, then r_1 is forced.
    auto rec = [&](auto&& self, int j, int vertices_left, int degree_left) -> void {
        if (j == 1) {
            // r_1 vertices of degree 1 must use up both budgets.
            if (vertices_left == degree_left && vertices_left >= 0) {
                r[0] = vertices_left;
                TreeDegreeDistribution t;
                t.s = s;
                t.r = r;
                t.tree_count = rooted_ordered_tree_count(s, t.r);
                out.push_back(std::move(t));
                r[0] = 0;
            }
            return;
        }
        int max_rj = std::min(vertices_left, degree_left / j);
        for (int rj = 0; rj <= max_rj; ++rj) {
            r[static_cast<std::size_t>(j - 1)] = rj;
            self(self, j - 1, vertices_left - rj, degree_left - j * rj);
        }
        r[static_cast<std::size_t>(j - 1)] = 0;
    };
    rec(rec, s, s + 1, 2 * s);
    std::sort(out.begin(), out.end(),
              [](const TreeDegreeDistribution& a, const TreeDegreeDistribution& b) {
                  return a.r < b.r;
              });
    return out;
}

// Limiting spectral moments: odd moments vanish; even moments assemble
// exact tree counts with products of Lambda powers.
struct TheoreticalMoments {
    int k_max = 0;
    std::vector<double> moments; // moments[k-1] = m_k; odd entries are 0
    std::string lambda_source;   // "finite_n_estimate" or "closed_form(<model>)"
};

inline TheoreticalMoments limiting_moments(std::span<const double> lambdas, int k_max,
                                           std::string lambda_source = "finite_n_estimate") {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    int s_max = k_max / 2;
    if (static_cast<int>(lambdas.size()) < s_max)
        throw std::invalid_argument("need Lambda_1..Lambda_{k_max/2}");
    if (s_max >= 1 && !(lambdas[0] > 0.0))
        throw std::invalid_argument("Lambda_1 must be positive");
    TheoreticalMoments tm;
    tm.k_max = k_max;
    tm.lambda_source = std::move(lambda_source);
    tm.moments.assign(static_cast<std::size_t>(k_max), 0.0);
    for (int s = 1; s <= s_max; ++s) {
        KahanSum acc;
        for (const auto& t : enumerate_degree_distributions(s)) {
            double term = t.tree_count.convert_to<double>();
            for (int j = 1; j <= s; ++j) {
                int rj = t.r[static_cast<std::size_t>(j - 1)];
                if (rj > 0) term *= std::pow(lambdas[static_cast<std::size_t>(j - 1)], rj);
            }
            acc.add(term);
        }
        tm.moments[static_cast<std::size_t>(2 * s - 1)] = acc.value();
    }
    return tm;
}

// Closed-form even moments for the exponential model, assembled directly
// in product form:
//   m_{2s} = alpha^{s-1}/(1-e^{-alpha})^{2s}
//            * sum_r count(r) prod_k ((1-e^{-k alpha})/k)^{r_k}.
// Algebraically identical to limiting_moments over the exponential
// closed-form Lambda sequence.
inline TheoreticalMoments exponential_moments(double alpha, int k_max) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    TheoreticalMoments tm;
    tm.k_max = k_max;
    tm.lambda_source = "closed_form(exponential)";
    tm.moments.assign(static_cast<std::size_t>(k_max), 0.0);
    double em1 = 1.0 - std::exp(-alpha);
    for (int s = 1; s <= k_max / 2; ++s) {
        double prefactor = std::pow(alpha, s - 1) / std::pow(em1, 2 * s);
        KahanSum acc;
        for (const auto& t : enumerate_degree_distributions(s)) {
            double term = t.tree_count.convert_to<double>();
            for (int k = 1; k <= s; ++k) {
                int rk = t.r[static_cast<std::size_t>(k - 1)];
                if (rk > 0)
                    term *= std::pow((1.0 - std::exp(-static_cast<double>(k) * alpha)) /
                                         static_cast<double>(k),
                                     rk);
            }
            acc.add(term);
        }
        tm.moments[static_cast<std::size_t>(2 * s - 1)] = prefactor * acc.value();
    }
    return tm;
}

} // namespace clspectra
