#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "clspectra/degree_sequence.hpp"
#include "clspectra/graph_sample.hpp"

namespace clspectra::oracle {

// Rooted ordered tree with s edges, vertices in depth-first discovery
// order; parent[0] = -1 for the root.
struct OrderedTree {
    int s = 0;
    std::vector<int> parent;
};

inline std::vector<int> degree_distribution(const OrderedTree& t) {
    std::vector<int> deg(t.parent.size(), 0);
    for (std::size_t v = 1; v < t.parent.size(); ++v) {
        ++deg[v];
        ++deg[static_cast<std::size_t>(t.parent[v])];
    }
    std::vector<int> r(static_cast<std::size_t>(t.s), 0);
    for (int d : deg) ++r[static_cast<std::size_t>(d - 1)];
    return r;
}

// Exhaustive enumeration through the Dyck-path bijection: an up step
// descends to a new child, a down step returns to the parent.  Produces
// exactly C_s trees.
inline std::vector<OrderedTree> enumerate_ordered_trees(int s) {
    if (s < 1 || s > 8) throw std::invalid_argument("exhaustive regime is s in [1, 8]");
    std::vector<OrderedTree> out;
    std::vector<int> parent{-1};
    std::vector<int> stack{0};
    auto rec = [&](auto&& self, int ups_used, int height) -> void {
        if (ups_used == s && height == 0) {
            out.push_back(OrderedTree{s, parent});
            return;
        }
        if (ups_used < s) {
            int v = static_cast<int>(parent.size());
            parent.push_back(stack.back());
            stack.push_back(v);
            self(self, ups_used + 1, height + 1);
            stack.pop_back();
            parent.pop_back();
        }
        if (height > 0) {
            int v = stack.back();
            stack.pop_back();
            self(self, ups_used, height - 1);
            stack.push_back(v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Trees of size s grouped by degree distribution; keys compare against
// the exact counts of the moment engine.
inline std::map<std::vector<int>, long long> count_trees_by_degree_distribution(int s) {
    std::map<std::vector<int>, long long> counts;
    for (const auto& t : enumerate_ordered_trees(s)) ++counts[degree_distribution(t)];
    return counts;
}

// Exact E{(1/n) trace(M^k)} over all 2^{n(n+1)/2} symmetric 0/1
// outcomes, with independent Bernoulli(rho w_i w_j) entries on i <= j.
// Independent of the sampler; n <= 4, k <= 6 keeps this sub-second.
inline double exact_expected_moment(const DegreeSequence& ds, int k, MatrixKind kind) {
    if (ds.n > 4) throw std::invalid_argument("exact oracle requires n <= 4");
    if (k < 1 || k > 6) throw std::invalid_argument("exact oracle requires k in [1, 6]");
    std::size_t n = ds.n;
    std::size_t npairs = n * (n + 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<double> prob;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            pairs.emplace_back(i, j);
            double p = ds.rho * ds.w[i] * ds.w[j];
            if (p >= 1.0) throw std::invalid_argument("A1 violated: edge probability >= 1");
            prob.push_back(p);
        }

    double nn = static_cast<double>(n);
    double a_scale = 1.0, m_coef = 0.0;
    switch (kind) {
        case MatrixKind::unnormalized: break;
        case MatrixKind::normalized: a_scale = std::sqrt(nn * ds.rho); break;
        case MatrixKind::centralized:
            a_scale = std::sqrt(nn * ds.rho);
            m_coef = std::sqrt(nn) * ds.rho * std::sqrt(ds.rho);
            break;
        case MatrixKind::centralized_unnormalized: m_coef = ds.rho; break;
    }

    Eigen::MatrixXd base(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) base(i, j) = -m_coef * ds.w[i] * ds.w[j];

    double expectation = 0.0;
    double prob_total = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << npairs); ++mask) {
        double p_outcome = 1.0;
        Eigen::MatrixXd M = base;
        for (std::size_t e = 0; e < npairs; ++e) {
            if (mask & (std::size_t{1} << e)) {
                p_outcome *= prob[e];
                auto [i, j] = pairs[e];
                M(i, j) += a_scale;
                if (i != j) M(j, i) += a_scale;
            } else {
                p_outcome *= 1.0 - prob[e];
            }
        }
        prob_total += p_outcome;
        Eigen::MatrixXd B = M;
        for (int kk = 2; kk <= k; ++kk) B = (B * M).eval();
        expectation += p_outcome * B.trace() / nn;
    }
    if (std::abs(prob_total - 1.0) > 1e-12)
        throw std::logic_error("outcome probabilities do not sum to 1");
    return expectation;
}

} // namespace clspectra::oracle
