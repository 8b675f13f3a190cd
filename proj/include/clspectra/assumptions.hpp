#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clspectra/degree_sequence.hpp"

namespace clspectra {

enum class Verdict { consistent, inconsistent, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::inconsistent: return "inconsistent";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

// One asymptotic condition tracked across the size ladder.
struct TrendRecord {
    std::string quantity;        // e.g. "rho*w_max^2"
    std::string condition;       // e.g. "o(1)"
    std::vector<double> values;  // one per ladder point
    double loglog_slope = 0.0;   // least-squares slope of log(value) vs log(n)
    Verdict verdict = Verdict::inconclusive;
};

// Finite-n evaluation of the asymptotic assumptions on a size ladder.
// The trend thresholds are artifact policy, not theory; raw values are
// retained so callers can re-judge.
struct AssumptionDiagnostics {
    bool a1_hard = true; // rho*w_max^2 < 1 at every ladder point
    std::vector<std::size_t> ladder;
    std::vector<TrendRecord> trends;
    double lambda_stability = 0.0; // A2 proxy: max successive rel. change of Lambda_k
    Verdict a2_verdict = Verdict::inconclusive;
    bool overall_pass = false;
};

namespace detail {

inline double loglog_slope(std::span<const std::size_t> ns, std::span<const double> vals) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (!(vals[i] > 0.0)) continue;
        double x = std::log(static_cast<double>(ns[i]));
        double y = std::log(vals[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) return 0.0;
    double dm = static_cast<double>(m);
    return (dm * sxy - sx * sy) / (dm * sxx - sx * sx);
}

// o(1): value decreases across the ladder and final < first/2.
inline Verdict judge_o1(std::span<const double> v) {
    bool decreasing = true;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] >= v[i - 1]) decreasing = false;
    if (decreasing && v.back() < v.front() / 2.0) return Verdict::consistent;
    if (!decreasing) return Verdict::inconsistent;
    return Verdict::inconclusive;
}

// O(log n): value/log n non-increasing within 10% slack.
inline Verdict judge_Ologn(std::span<const std::size_t> ns, std::span<const double> v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        double prev = v[i - 1] / std::log(static_cast<double>(ns[i - 1]));
        double cur = v[i] / std::log(static_cast<double>(ns[i]));
        if (cur > 1.10 * prev) return Verdict::inconsistent;
    }
    return Verdict::consistent;
}

// O(1): value itself non-increasing within 10% slack.
inline Verdict judge_O1(std::span<const double> v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > 1.10 * v[i - 1]) return Verdict::inconsistent;
    return Verdict::consistent;
}

// omega(1/n): n * value increases across the ladder.
inline Verdict judge_omega_inv_n(std::span<const std::size_t> ns, std::span<const double> v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (static_cast<double>(ns[i]) * v[i] <= static_cast<double>(ns[i - 1]) * v[i - 1])
            return Verdict::inconsistent;
    return Verdict::consistent;
}

} // namespace detail

// Sequence factory: n -> DegreeSequence for that n.  Parametric models
// only; a custom file sequence has no ladder and must be rejected by the
// caller.
using SequenceFactory = std::function<DegreeSequence(std::size_t)>;

inline AssumptionDiagnostics check_assumptions(const SequenceFactory& make,
                                               std::span<const std::size_t> n_ladder,
                                               int k_max = 8) {
    if (n_ladder.size() < 3) throw std::invalid_argument("ladder needs at least 3 sizes");
    for (std::size_t i = 1; i < n_ladder.size(); ++i)
        if (n_ladder[i] <= n_ladder[i - 1])
            throw std::invalid_argument("ladder must be strictly increasing");

    AssumptionDiagnostics diag;
    diag.ladder.assign(n_ladder.begin(), n_ladder.end());
    std::size_t L = n_ladder.size();

    std::vector<double> a1(L), ratio(L), wmax(L), nrho(L), nrhowmax(L), d2log(L);
    std::vector<std::vector<double>> lambdas(L);
    for (std::size_t i = 0; i < L; ++i) {
        DegreeSequence ds = make(n_ladder[i]);
        double n = static_cast<double>(ds.n);
        a1[i] = ds.rho * ds.w_max * ds.w_max;
        if (a1[i] >= 1.0) diag.a1_hard = false;
        ratio[i] = (ds.w_min > 0.0) ? ds.w_max / ds.w_min
                                    : std::numeric_limits<double>::infinity();
        wmax[i] = ds.w_max;
        nrho[i] = n * ds.rho;
        nrhowmax[i] = n * ds.rho * ds.w_max;
        d2log[i] = ds.d2avg * std::log(n) / n;
        lambdas[i] = lambda_estimates(ds, k_max);
    }

    auto push = [&](std::string q, std::string cond, std::vector<double> vals, Verdict v) {
        TrendRecord t;
        t.quantity = std::move(q);
        t.condition = std::move(cond);
        t.loglog_slope = detail::loglog_slope(n_ladder, vals);
        t.values = std::move(vals);
        t.verdict = v;
        diag.trends.push_back(std::move(t));
    };

    push("rho*w_max^2", "o(1) [A1]", a1, detail::judge_o1(a1));
    push("rho*w_max^2", "omega(1/n) [A3-ii]", a1, detail::judge_omega_inv_n(n_ladder, a1));
    push("w_max/w_min", "O(log n) [A3-i]", ratio, detail::judge_Ologn(n_ladder, ratio));
    push("n*rho", "o(1) [A3-iii]", nrho, detail::judge_o1(nrho));
    push("n*rho*w_max", "O(1) [A3-iv]", nrhowmax, detail::judge_O1(nrhowmax));
    push("w_max", "O(log n) [A3-v]", wmax, detail::judge_Ologn(n_ladder, wmax));
    push("d2avg*log(n)/n", "o(1) [A3-vi]", d2log, detail::judge_o1(d2log));

    // A2 proxy: Cauchy-like stability of the finite-n Lambda_k.
    double worst = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        for (std::size_t i = 1; i < L; ++i) {
            double prev = lambdas[i - 1][static_cast<std::size_t>(k - 1)];
            double cur = lambdas[i][static_cast<std::size_t>(k - 1)];
            double denom = std::max(std::abs(prev), 1e-300);
            worst = std::max(worst, std::abs(cur - prev) / denom);
        }
    }
    diag.lambda_stability = worst;
    diag.a2_verdict = (worst < 0.05) ? Verdict::consistent : Verdict::inconsistent;

    diag.overall_pass = diag.a1_hard && diag.a2_verdict == Verdict::consistent;
    for (const auto& t : diag.trends)
        if (t.verdict == Verdict::inconsistent) diag.overall_pass = false;
    return diag;
}

} // namespace clspectra
