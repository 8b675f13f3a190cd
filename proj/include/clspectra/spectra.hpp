#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "clspectra/graph_sample.hpp"

namespace clspectra {

enum class MomentMethod { dense_power, eigen_sum, hutchinson };

inline const char* to_string(MomentMethod m) {
    switch (m) {
        case MomentMethod::dense_power: return "dense_power";
        case MomentMethod::eigen_sum: return "eigen_sum";
        case MomentMethod::hutchinson: return "hutchinson";
    }
    return "?";
}

// Empirical spectral moments m_k = (1/n) trace(M^k), k = 1..k_max.
struct MomentReport {
    int k_max = 0;
    std::vector<double> moments; // moments[k-1] = m_k
    MatrixKind kind = MatrixKind::normalized;
    MomentMethod method = MomentMethod::dense_power;
    std::vector<double> std_errors; // hutchinson only, per k
    int probes = 0;
    std::uint64_t probe_seed = 0;
};

// m_k via accumulated powers B_k = B_{k-1} M; no eigensolver involved,
// so this path cross-checks the eigenvalue route.
inline MomentReport moments_dense(const AdjacencySample& s, int k_max, MatrixKind kind,
                                  std::size_t cap = 4096) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    Eigen::MatrixXd M = dense_matrix(s, kind, cap);
    MomentReport rep;
    rep.k_max = k_max;
    rep.kind = kind;
    rep.method = MomentMethod::dense_power;
    rep.moments.resize(static_cast<std::size_t>(k_max));
    Eigen::MatrixXd B = M;
    double inv_n = 1.0 / static_cast<double>(s.n);
    rep.moments[0] = B.trace() * inv_n;
    for (int k = 2; k <= k_max; ++k) {
        B = (B * M).eval();
        rep.moments[static_cast<std::size_t>(k - 1)] = B.trace() * inv_n;
    }
    return rep;
}

// Full symmetric spectrum, ascending.
inline std::vector<double> eigenvalues(const AdjacencySample& s, MatrixKind kind,
                                       std::size_t cap = 4096) {
    Eigen::MatrixXd M = dense_matrix(s, kind, cap);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver failed to converge");
    std::vector<double> out(static_cast<std::size_t>(s.n));
    Eigen::VectorXd::Map(out.data(), es.eigenvalues().size()) = es.eigenvalues();
    return out;
}

inline std::vector<double> moments_from_eigenvalues(std::span<const double> eigs, int k_max) {
    std::vector<double> m(static_cast<std::size_t>(k_max), 0.0);
    for (int k = 1; k <= k_max; ++k) {
        KahanSum acc;
        for (double ev : eigs) acc.add(std::pow(ev, k));
        m[static_cast<std::size_t>(k - 1)] = acc.value() / static_cast<double>(eigs.size());
    }
    return m;
}

inline MomentReport moments_eigen(const AdjacencySample& s, int k_max, MatrixKind kind,
                                  std::size_t cap = 4096) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    MomentReport rep;
    rep.k_max = k_max;
    rep.kind = kind;
    rep.method = MomentMethod::eigen_sum;
    std::vector<double> eigs = eigenvalues(s, kind, cap);
    rep.moments = moments_from_eigenvalues(eigs, k_max);
    return rep;
}

// Stochastic trace estimation with Rademacher probes:
// m_k ~ (1/(n P)) sum_p z_p^T M^k z_p.  Matrix-free; reports per-k
// standard errors of the probe mean.
inline MomentReport moments_hutchinson(const AdjacencySample& s, int k_max, int probes,
                                       std::uint64_t seed, MatrixKind kind) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (probes < 8) throw std::invalid_argument("need at least 8 probes");
    MomentReport rep;
    rep.k_max = k_max;
    rep.kind = kind;
    rep.method = MomentMethod::hutchinson;
    rep.probes = probes;
    rep.probe_seed = seed;

    std::vector<std::vector<double>> per_probe(static_cast<std::size_t>(k_max));
    Rng rng(seed);
    std::vector<double> z(s.n);
    for (int p = 0; p < probes; ++p) {
        for (double& v : z) v = rng.sign();
        std::vector<double> y = z;
        for (int k = 1; k <= k_max; ++k) {
            y = matvec(s, y, kind);
            KahanSum dot;
            for (std::size_t i = 0; i < s.n; ++i) dot.add(z[i] * y[i]);
            per_probe[static_cast<std::size_t>(k - 1)].push_back(dot.value() /
                                                                 static_cast<double>(s.n));
        }
    }
    rep.moments.resize(static_cast<std::size_t>(k_max));
    rep.std_errors.resize(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        const auto& v = per_probe[static_cast<std::size_t>(k - 1)];
        double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(probes);
        double var = 0.0;
        for (double x : v) var += (x - mean) * (x - mean);
        var /= static_cast<double>(probes - 1);
        rep.moments[static_cast<std::size_t>(k - 1)] = mean;
        rep.std_errors[static_cast<std::size_t>(k - 1)] =
            std::sqrt(var / static_cast<double>(probes));
    }
    return rep;
}

struct PowerIterResult {
    double value = 0.0;     // signed estimate (Rayleigh quotient)
    double magnitude = 0.0; // |lambda| of largest magnitude
    int iterations = 0;
    bool converged = false;
};

// Largest-magnitude eigenvalue, matrix-free.  Iterates on M^2 so that a
// dominant negative eigenvalue cannot stall the iteration; the sign is
// recovered from the Rayleigh quotient of the converged vector.
inline PowerIterResult largest_eigenvalue_power(const AdjacencySample& s, MatrixKind kind,
                                                double tol = 1e-10, int max_iter = 5000) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    PowerIterResult res;
    if (s.edges.empty() && kind != MatrixKind::centralized &&
        kind != MatrixKind::centralized_unnormalized) {
        res.converged = true;
        return res;
    }
    Rng rng(0x9e3779b97f4a7c15ull ^ s.seed);
    std::vector<double> v(s.n);
    for (double& x : v) x = rng.uniform() - 0.5;
    double est = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<double> u = matvec(s, matvec(s, v, kind), kind);
        double norm2 = 0.0;
        for (double x : u) norm2 += x * x;
        norm2 = std::sqrt(norm2);
        if (norm2 == 0.0) {
            res.converged = true;
            return res; // v in the kernel of M^2
        }
        for (double& x : u) x /= norm2;
        // Rayleigh quotient of M^2.
        std::vector<double> mu = matvec(s, u, kind);
        double lam2 = 0.0;
        for (double x : mu) lam2 += x * x;
        double next = std::sqrt(lam2);
        res.iterations = it;
        if (it > 1 && std::abs(next - est) <= tol * std::max(1.0, std::abs(next))) {
            est = next;
            res.converged = true;
            // Sign from the Rayleigh quotient of M itself.
            double num = 0.0;
            for (std::size_t i = 0; i < s.n; ++i) num += u[i] * mu[i];
            res.magnitude = est;
            res.value = (num < 0.0) ? -est : est;
            return res;
        }
        est = next;
        v = std::move(u);
    }
    res.magnitude = est;
    res.value = est;
    res.converged = false;
    return res;
}

struct SpectrumHistogram {
    std::vector<double> bin_edges; // size counts.size() + 1, strictly increasing
    std::vector<std::size_t> counts;
};

// Freedman-Diaconis binning by default (bins = 0); fixed bin count
// otherwise.  All-equal input degenerates to a single bin.
inline SpectrumHistogram histogram(std::span<const double> eigs, std::size_t bins = 0) {
    if (eigs.empty()) throw std::invalid_argument("histogram needs at least one value");
    std::vector<double> sorted(eigs.begin(), eigs.end());
    std::sort(sorted.begin(), sorted.end());
    double lo = sorted.front(), hi = sorted.back();
    SpectrumHistogram h;
    if (lo == hi) {
        h.bin_edges = {lo - 0.5, lo + 0.5};
        h.counts = {sorted.size()};
        return h;
    }
    if (bins == 0) {
        std::size_t n = sorted.size();
        double q1 = sorted[(n - 1) / 4];
        double q3 = sorted[(3 * (n - 1)) / 4];
        double iqr = q3 - q1;
        double width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
        if (width <= 0.0) width = (hi - lo) / std::ceil(std::sqrt(static_cast<double>(n)));
        bins = static_cast<std::size_t>(std::ceil((hi - lo) / width));
        bins = std::clamp<std::size_t>(bins, 1, 4096);
    }
    h.counts.assign(bins, 0);
    h.bin_edges.resize(bins + 1);
    double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t b = 0; b <= bins; ++b)
        h.bin_edges[b] = lo + width * static_cast<double>(b);
    h.bin_edges.back() = hi;
    for (double x : sorted) {
        auto b = static_cast<std::size_t>((x - lo) / width);
        if (b >= bins) b = bins - 1;
        ++h.counts[b];
    }
    return h;
}

// Moment sandwich on the largest-magnitude eigenvalue (even k):
//   m_k^{1/k} <= max|lambda| <= (n m_k)^{1/k}.
inline std::pair<double, double> moment_bounds_on_lambda(double m_k, int k, std::size_t n) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("bounds require even k >= 2");
    if (m_k < 0.0) throw std::invalid_argument("even moment must be non-negative");
    double lower = std::pow(m_k, 1.0 / static_cast<double>(k));
    double upper = std::pow(static_cast<double>(n) * m_k, 1.0 / static_cast<double>(k));
    return {lower, upper};
}

} // namespace clspectra
