#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "clspectra/rng.hpp"

namespace clspectra {

enum class Model { constant, exponential, power_law, custom };

enum class ExpSampling { uniform_random, quantile_grid };

inline const char* to_string(Model m) {
    switch (m) {
        case Model::constant: return "constant";
        case Model::exponential: return "exponential";
        case Model::power_law: return "power_law";
        case Model::custom: return "custom";
    }
    return "?";
}

struct ExponentialParams {
    double delta = 0.0; // amplitude Delta_n
    double alpha = 0.0; // decay rate, > 0
    ExpSampling sampling = ExpSampling::uniform_random;
};

struct PowerLawParams {
    double beta = 0.0;  // exponent, > 2
    double delta = 0.0; // max expected degree
    double davg = 0.0;  // average expected degree
    double c = 0.0;     // scale, derived
    double i0 = 0.0;    // offset, derived (real-valued, no rounding)
};

struct ModelParams {
    Model model = Model::custom;
    double p = 0.0; // constant model edge probability
    ExponentialParams exp;
    PowerLawParams pl;
    std::uint64_t seed = 0;
};

// Compensated (Kahan) accumulator. Power sums reach ~40 decades for
// k up to 20 with degrees up to 100.
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0, c_ = 0.0;
};

// Expected degree sequence with its derived scalars:
//   rho   = 1 / sum_i w_i          (inverse expected volume)
//   d2avg = rho * ||w||^2          (second-order average degree)
struct DegreeSequence {
    std::size_t n = 0;
    std::vector<double> w;
    double rho = 0.0;
    double w_max = 0.0;
    double w_min = 0.0;
    double d2avg = 0.0;
    ModelParams params;
};

namespace detail {

inline DegreeSequence finalize(std::vector<double> w, ModelParams params) {
    if (w.empty()) throw std::invalid_argument("degree sequence is empty");
    KahanSum s1, s2;
    double wmax = w[0], wmin = w[0];
    for (double x : w) {
        if (x < 0.0) throw std::invalid_argument("negative expected degree");
        s1.add(x);
        s2.add(x * x);
        wmax = std::max(wmax, x);
        wmin = std::min(wmin, x);
    }
    if (s1.value() <= 0.0) throw std::invalid_argument("expected volume must be positive");
    DegreeSequence ds;
    ds.n = w.size();
    ds.w = std::move(w);
    ds.rho = 1.0 / s1.value();
    ds.w_max = wmax;
    ds.w_min = wmin;
    ds.d2avg = ds.rho * s2.value();
    ds.params = std::move(params);
    return ds;
}

} // namespace detail

inline DegreeSequence from_weights(std::vector<double> w) {
    ModelParams p;
    p.model = Model::custom;
    return detail::finalize(std::move(w), p);
}

// Erdos-Renyi style constant sequence: w_i = n p.
inline DegreeSequence make_constant(std::size_t n, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
    if (n == 0) throw std::invalid_argument("n must be positive");
    ModelParams mp;
    mp.model = Model::constant;
    mp.p = p;
    return detail::finalize(std::vector<double>(n, static_cast<double>(n) * p), mp);
}

// w_i = Delta * exp(-alpha x_i) with x_i either iid uniform on [0,1]
// (model-faithful) or the midpoint grid x_i = (i - 1/2)/n (deterministic,
// O(1/n^2) approximation of the integral forms).
inline DegreeSequence make_exponential(std::size_t n, const ExponentialParams& params,
                                       std::uint64_t seed = 0) {
    if (!(params.alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(params.delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (n == 0) throw std::invalid_argument("n must be positive");
    std::vector<double> w(n);
    if (params.sampling == ExpSampling::uniform_random) {
        Rng rng(seed);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = params.delta * std::exp(-params.alpha * rng.uniform());
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            double x = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
            w[i] = params.delta * std::exp(-params.alpha * x);
        }
    }
    ModelParams mp;
    mp.model = Model::exponential;
    mp.exp = params;
    mp.seed = seed;
    return detail::finalize(std::move(w), mp);
}

// Chung-Lu power-law sequence: w_i = c (i0 + i)^{-1/(beta-1)}, i = 1..n,
// with c and i0 chosen to prescribe max degree Delta and average degree d.
inline DegreeSequence make_power_law(std::size_t n, double beta, double delta, double d) {
    if (!(beta > 2.0)) throw std::invalid_argument("beta must exceed 2");
    if (!(delta >= d && d > 0.0)) throw std::invalid_argument("need Delta >= d > 0");
    if (n == 0) throw std::invalid_argument("n must be positive");
    double c = (beta - 2.0) / (beta - 1.0) * d * std::pow(static_cast<double>(n), 1.0 / (beta - 1.0));
    double i0 = static_cast<double>(n) *
                std::pow(d * (beta - 2.0) / (delta * (beta - 1.0)), beta - 1.0);
    if (!(i0 >= 0.0)) throw std::invalid_argument("derived offset i0 is negative");
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = c * std::pow(i0 + static_cast<double>(i + 1), -1.0 / (beta - 1.0));
    ModelParams mp;
    mp.model = Model::power_law;
    mp.pl = {beta, delta, d, c, i0};
    DegreeSequence ds = detail::finalize(std::move(w), mp);
    if (ds.rho * ds.w_max * ds.w_max >= 1.0)
        throw std::invalid_argument("A1 violated: rho * w_max^2 >= 1 for these parameters");
    return ds;
}

// Newline-separated non-negative reals; '#'-prefixed lines are comments.
inline DegreeSequence load_custom(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<double> w;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(line, &pos);
        } catch (const std::exception&) {
            throw std::runtime_error("non-numeric token in " + path.string() + ": " + line);
        }
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos != line.size())
            throw std::runtime_error("trailing garbage in " + path.string() + ": " + line);
        if (v < 0.0) throw std::runtime_error("negative entry in " + path.string());
        w.push_back(v);
    }
    if (w.empty()) throw std::runtime_error("empty degree sequence file: " + path.string());
    return from_weights(std::move(w));
}

// S_{n,k} = sum_i w_i^k for k = 1..k_max.
inline std::vector<double> power_sums(const DegreeSequence& ds, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    std::vector<KahanSum> acc(static_cast<std::size_t>(k_max));
    for (double wi : ds.w) {
        double p = wi;
        for (int k = 1; k <= k_max; ++k) {
            acc[static_cast<std::size_t>(k - 1)].add(p);
            p *= wi;
        }
    }
    std::vector<double> out(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) out[static_cast<std::size_t>(k - 1)] = acc[static_cast<std::size_t>(k - 1)].value();
    return out;
}

// Finite-n estimates of the limiting normalized power-sums:
// Lambda_k^{(n)} = (1/n) sum_i (n rho w_i)^k.  Lambda_1 == 1 identically.
inline std::vector<double> lambda_estimates(const DegreeSequence& ds, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    double scale = static_cast<double>(ds.n) * ds.rho;
    std::vector<KahanSum> acc(static_cast<std::size_t>(k_max));
    for (double wi : ds.w) {
        double z = scale * wi;
        double p = z;
        for (int k = 1; k <= k_max; ++k) {
            acc[static_cast<std::size_t>(k - 1)].add(p);
            p *= z;
        }
    }
    std::vector<double> out(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k)
        out[static_cast<std::size_t>(k - 1)] =
            acc[static_cast<std::size_t>(k - 1)].value() / static_cast<double>(ds.n);
    return out;
}

// Closed-form Lambda_k for the exponential model:
// alpha^{k-1} (1 - e^{-k alpha}) / (k (1 - e^{-alpha})^k).
inline double lambda_closed_form_exponential(double alpha, int k) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return std::pow(alpha, k - 1) * (1.0 - std::exp(-static_cast<double>(k) * alpha)) /
           (static_cast<double>(k) * std::pow(1.0 - std::exp(-alpha), k));
}

// f(d/Delta; beta, k): the finite-Delta power-sum factor with
// (1/n) sum w_i^k ~ d^k f(d/Delta; beta, k).  Pole at k = beta - 1.
inline double power_law_f(double d_over_delta, double beta, double k) {
    double r = d_over_delta * (beta - 2.0) / (beta - 1.0);
    double denom = beta - 1.0 - k;
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("divergent moment boundary: k = beta - 1");
    double rb = std::pow(r, beta - 1.0);
    double bracket = std::pow(rb + 1.0, denom / (beta - 1.0)) - std::pow(r, denom);
    return std::pow((beta - 2.0) / (beta - 1.0), k) * (beta - 1.0) / denom * bracket;
}

// Delta = omega(d) simplification of f.  Undefined for k >= beta - 1.
inline double power_law_f_wide(double beta, double k) {
    double denom = beta - 1.0 - k;
    if (denom <= 0.0)
        throw std::domain_error("wide-limit branch requires k < beta - 1");
    return std::pow((beta - 2.0) / (beta - 1.0), k) * (beta - 1.0) / denom;
}

// Closed-form Lambda_k for the power-law model via the finite-Delta f:
// Lambda_k = f(d/Delta; beta, k) / f(d/Delta; beta, 1)^k.
inline double lambda_closed_form_power_law(double beta, double delta, double d, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    double y = d / delta;
    return power_law_f(y, beta, static_cast<double>(k)) /
           std::pow(power_law_f(y, beta, 1.0), k);
}

// Wide-limit (Delta = omega(d)) power-law Lambda_k.  f~(beta,1) = 1, so
// this is just f~(beta,k).
inline double lambda_closed_form_power_law_wide(double beta, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return power_law_f_wide(beta, static_cast<double>(k));
}

} // namespace clspectra
