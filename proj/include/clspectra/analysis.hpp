#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "clspectra/degree_sequence.hpp"

namespace clspectra {

// kurtosis of the triangular law t(x; b), independent of b
inline constexpr double kTriangularKurtosis = 12.0 / 5.0;

enum class TailVerdict { fat_tail, thin_tail, matched };

inline const char* to_string(TailVerdict v) {
    switch (v) {
        case TailVerdict::fat_tail: return "fat_tail";
        case TailVerdict::thin_tail: return "thin_tail";
        case TailVerdict::matched: return "matched";
    }
    return "?";
}

// Symmetric triangular density on [-b/2, b/2].
inline double triangular_density(double x, double b) {
    if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
    if (x < -b / 2.0 || x > b / 2.0) return 0.0;
    return 2.0 / b - 4.0 / (b * b) * std::abs(x);
}

// k-th moment of t(x; b): (1 + (-1)^k) (b/2)^k / ((k+1)(k+2)).
inline double triangular_moment(double b, int k) {
    if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (k % 2 != 0) return 0.0;
    return 2.0 * std::pow(b / 2.0, k) / (static_cast<double>(k + 1) * static_cast<double>(k + 2));
}

struct TriangularFit {
    double kappa_graph = 0.0;    // m_4 / m_2^2
    double kappa_triangle = kTriangularKurtosis;
    double b_match = 0.0;        // b with m^_2(b) = m_2
    TailVerdict verdict = TailVerdict::matched;
};

// Compare a spectral distribution against the triangular law through
// kurtosis; b is fitted by second-moment matching only.
inline TriangularFit kurtosis_analysis(double m2, double m4) {
    if (!(m2 > 0.0)) throw std::invalid_argument("m2 must be positive");
    TriangularFit fit;
    fit.kappa_graph = m4 / (m2 * m2);
    fit.b_match = std::sqrt(24.0 * m2);
    double diff = fit.kappa_graph - kTriangularKurtosis;
    if (std::abs(diff) < 1e-9)
        fit.verdict = TailVerdict::matched;
    else
        fit.verdict = (diff < 0.0) ? TailVerdict::fat_tail : TailVerdict::thin_tail;
    return fit;
}

// Power-law exponent at which the graph kurtosis matches the triangular
// law, i.e. the root of (b-2)^2/((b-1)(b-3)) = 6/5 on beta > 3.
// Bisection; the closed form is 2 + sqrt(6).
inline double beta_critical() {
    auto g = [](double beta) {
        return (beta - 2.0) * (beta - 2.0) / ((beta - 1.0) * (beta - 3.0)) - 6.0 / 5.0;
    };
    double lo = 3.0 + 1e-9, hi = 20.0;
    // g -> +inf at 3+, negative at 20
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

enum class EigRegime { volume, max_degree, indeterminate };

inline const char* to_string(EigRegime r) {
    switch (r) {
        case EigRegime::volume: return "volume";
        case EigRegime::max_degree: return "max_degree";
        case EigRegime::indeterminate: return "indeterminate";
    }
    return "?";
}

struct LargestEigPrediction {
    EigRegime regime = EigRegime::indeterminate;
    double predicted = 0.0;          // for the unnormalized adjacency
    double power_law_bound = 0.0;    // 7 sqrt(log n) max(sqrt(w_max), d2avg); power-law only
    bool has_power_law_bound = false;
};

// Almost-sure largest-eigenvalue regimes for the unnormalized adjacency:
// d2avg when the volume term dominates, sqrt(w_max) when the maximum
// degree dominates.  The two conditions are not exhaustive at finite n,
// so a third regime reports both candidates.
inline LargestEigPrediction largest_eigenvalue_prediction(const DegreeSequence& ds) {
    LargestEigPrediction out;
    double logn = std::log(static_cast<double>(ds.n));
    double sqw = std::sqrt(ds.w_max);
    if (ds.d2avg > sqw * logn) {
        out.regime = EigRegime::volume;
        out.predicted = ds.d2avg;
    } else if (sqw > ds.d2avg * logn * logn) {
        out.regime = EigRegime::max_degree;
        out.predicted = sqw;
    } else {
        out.regime = EigRegime::indeterminate;
        out.predicted = std::max(ds.d2avg, sqw);
    }
    if (ds.params.model == Model::power_law) {
        out.has_power_law_bound = true;
        out.power_law_bound = 7.0 * std::sqrt(logn) * std::max(sqw, ds.d2avg);
    }
    return out;
}

} // namespace clspectra
