#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "clspectra/degree_sequence.hpp"
#include "clspectra/rng.hpp"

namespace clspectra {

// Which matrix the spectral operations act on.
//   unnormalized            : raw 0/1 adjacency
//   normalized              : sqrt(n rho) * adjacency
//   centralized             : normalized minus its rank-one mean
//   centralized_unnormalized: 0/1 adjacency minus [rho w_i w_j]
enum class MatrixKind { unnormalized, normalized, centralized, centralized_unnormalized };

inline const char* to_string(MatrixKind k) {
    switch (k) {
        case MatrixKind::unnormalized: return "unnormalized";
        case MatrixKind::normalized: return "normalized";
        case MatrixKind::centralized: return "centralized";
        case MatrixKind::centralized_unnormalized: return "centralized_unnormalized";
    }
    return "?";
}

inline MatrixKind matrix_kind_from_string(const std::string& s) {
    if (s == "unnormalized") return MatrixKind::unnormalized;
    if (s == "normalized") return MatrixKind::normalized;
    if (s == "centralized") return MatrixKind::centralized;
    if (s == "centralized_unnormalized") return MatrixKind::centralized_unnormalized;
    throw std::invalid_argument("unknown matrix kind: " + s);
}

// One sampled Chung-Lu graph.  Symmetry is structural: edges are stored
// as unordered pairs (i <= j), loops as (i, i).  The mean matrix is kept
// as its rank-one factorization E{A_n} = mean_coef * w w^T and never
// materialized densely.
struct AdjacencySample {
    std::size_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    double norm = 0.0;      // sqrt(n rho), entry scale of A_n
    double mean_coef = 0.0; // sqrt(n) rho^{3/2}
    double rho = 0.0;
    std::vector<double> w;
    std::uint64_t seed = 0;
    std::string rng_id = Rng::id();
};

// Edge {i,j} (i <= j, loops included) present independently with
// probability rho w_i w_j.  Pair iteration is row-major over i <= j;
// together with the fixed generator this makes the edge set a pure
// function of (ds, seed).
inline AdjacencySample sample(const DegreeSequence& ds, std::uint64_t seed) {
    if (ds.rho * ds.w_max * ds.w_max >= 1.0)
        throw std::invalid_argument("A1 violated: edge probability >= 1");
    AdjacencySample s;
    s.n = ds.n;
    s.rho = ds.rho;
    s.w = ds.w;
    s.seed = seed;
    double n = static_cast<double>(ds.n);
    s.norm = std::sqrt(n * ds.rho);
    s.mean_coef = std::sqrt(n) * ds.rho * std::sqrt(ds.rho);
    Rng rng(seed);
    for (std::size_t i = 0; i < ds.n; ++i) {
        double rwi = ds.rho * ds.w[i];
        for (std::size_t j = i; j < ds.n; ++j) {
            if (rng.bernoulli(rwi * ds.w[j]))
                s.edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
    }
    return s;
}

namespace detail {

// (entry scale on the 0/1 part, coefficient of the -w w^T correction)
inline std::pair<double, double> kind_scales(const AdjacencySample& s, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::unnormalized: return {1.0, 0.0};
        case MatrixKind::normalized: return {s.norm, 0.0};
        case MatrixKind::centralized: return {s.norm, s.mean_coef};
        case MatrixKind::centralized_unnormalized: return {1.0, s.rho};
    }
    return {1.0, 0.0};
}

} // namespace detail

// Dense realization of the chosen matrix.  A loop contributes 1 to the
// diagonal (Bernoulli entry convention, not degree-doubling).
inline Eigen::MatrixXd dense_matrix(const AdjacencySample& s, MatrixKind kind,
                                    std::size_t cap = 4096) {
    if (s.n > cap)
        throw std::invalid_argument("n exceeds dense cap; use the matrix-free path");
    auto [a_scale, m_coef] = detail::kind_scales(s, kind);
    Eigen::MatrixXd M(static_cast<Eigen::Index>(s.n), static_cast<Eigen::Index>(s.n));
    if (m_coef != 0.0) {
        Eigen::Map<const Eigen::VectorXd> wv(s.w.data(), static_cast<Eigen::Index>(s.n));
        M = -m_coef * (wv * wv.transpose());
    } else {
        M.setZero();
    }
    for (auto [i, j] : s.edges) {
        M(i, j) += a_scale;
        if (i != j) M(j, i) += a_scale;
    }
    return M;
}

// y = M x in O(|edges| + n), with the rank-one correction applied
// analytically.
inline std::vector<double> matvec(const AdjacencySample& s, std::span<const double> x,
                                  MatrixKind kind) {
    if (x.size() != s.n) throw std::invalid_argument("matvec dimension mismatch");
    auto [a_scale, m_coef] = detail::kind_scales(s, kind);
    std::vector<double> y(s.n, 0.0);
    for (auto [i, j] : s.edges) {
        y[i] += x[j];
        if (i != j) y[j] += x[i];
    }
    for (double& v : y) v *= a_scale;
    if (m_coef != 0.0) {
        KahanSum dot;
        for (std::size_t i = 0; i < s.n; ++i) dot.add(s.w[i] * x[i]);
        double c = m_coef * dot.value();
        for (std::size_t i = 0; i < s.n; ++i) y[i] -= c * s.w[i];
    }
    return y;
}

} // namespace clspectra
