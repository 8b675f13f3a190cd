// clspectra: sample expected-degree random graphs and study their spectra.
//
// Exit codes: 0 success, 2 contract violation (JSON error on stderr),
// 64 usage error.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <json.hpp>

#include "clspectra/clspectra.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
using namespace clspectra;

namespace {

// Canonical config string: the post-config-expansion argv, joined.
std::string g_canonical_config;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    fs::path p(out_path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    fs::path p(out_path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

// Shared degree-model flags for `degseq` and `assume`.
struct ModelFlags {
    std::string model;
    std::size_t n = 0;
    double p = 0.0;
    double alpha = 0.0;
    double delta = 0.0;
    double beta = 0.0;
    double davg = 0.0;
    std::uint64_t seed = 0;
    bool grid = false;
    std::string file;

    void attach(CLI::App* cmd, bool need_n) {
        cmd->add_option("--model", model, "constant|exponential|powerlaw|file")->required();
        auto* n_opt = cmd->add_option("--n", n, "number of vertices");
        if (need_n) n_opt->required(false); // validated per model below
        cmd->add_option("--p", p, "edge probability (constant model)");
        cmd->add_option("--alpha", alpha, "decay rate (exponential model)");
        cmd->add_option("--delta", delta, "maximum expected degree");
        cmd->add_option("--beta", beta, "power-law exponent");
        cmd->add_option("--davg", davg, "average expected degree (power-law model)");
        cmd->add_option("--seed", seed, "sequence sampling seed (exponential model)");
        cmd->add_flag("--grid", grid, "use the deterministic quantile grid");
        cmd->add_option("--file", file, "degree sequence file (file model)");
    }

    DegreeSequence build(std::size_t n_override = 0) const {
        std::size_t nn = n_override ? n_override : n;
        if (model == "constant") {
            if (nn == 0) throw std::invalid_argument("constant model requires --n");
            return make_constant(nn, p);
        }
        if (model == "exponential") {
            if (nn == 0) throw std::invalid_argument("exponential model requires --n");
            ExponentialParams ep{delta, alpha,
                                 grid ? ExpSampling::quantile_grid : ExpSampling::uniform_random};
            return make_exponential(nn, ep, seed);
        }
        if (model == "powerlaw") {
            if (nn == 0) throw std::invalid_argument("powerlaw model requires --n");
            return make_power_law(nn, beta, delta, davg);
        }
        if (model == "file") {
            if (file.empty()) throw std::invalid_argument("file model requires --file");
            return load_custom(file);
        }
        throw std::invalid_argument("unknown model: " + model);
    }
};

MomentMethod method_from_string(const std::string& s) {
    if (s == "dense") return MomentMethod::dense_power;
    if (s == "eig") return MomentMethod::eigen_sum;
    if (s == "hutch") return MomentMethod::hutchinson;
    throw std::invalid_argument("unknown method: " + s + " (expected dense|eig|hutch)");
}

MomentReport compute_moments(const AdjacencySample& s, int k_max, MatrixKind kind,
                             MomentMethod method, int probes, std::uint64_t probe_seed) {
    switch (method) {
        case MomentMethod::dense_power: return moments_dense(s, k_max, kind);
        case MomentMethod::eigen_sum: return moments_eigen(s, k_max, kind);
        case MomentMethod::hutchinson:
            return moments_hutchinson(s, k_max, probes, probe_seed, kind);
    }
    throw std::logic_error("unreachable");
}

json lambdas_json(const DegreeSequence& ds, int count) {
    return json(lambda_estimates(ds, count));
}

// Theoretical moments for a sequence: finite-n Lambda estimates, or the
// model closed forms when available.
TheoreticalMoments theory_for(const DegreeSequence& ds, int k_max, const std::string& lambda_mode) {
    int s_max = std::max(1, k_max / 2);
    if (lambda_mode == "finite") return limiting_moments(lambda_estimates(ds, s_max), k_max);
    if (lambda_mode != "closed")
        throw std::invalid_argument("--lambda must be finite or closed");
    switch (ds.params.model) {
        case Model::exponential: return exponential_moments(ds.params.exp.alpha, k_max);
        case Model::power_law: {
            std::vector<double> lam;
            for (int k = 1; k <= s_max; ++k)
                lam.push_back(lambda_closed_form_power_law(ds.params.pl.beta, ds.params.pl.delta,
                                                           ds.params.pl.davg, k));
            return limiting_moments(lam, k_max, "closed_form(power_law)");
        }
        case Model::constant: {
            std::vector<double> lam(static_cast<std::size_t>(s_max), 1.0);
            return limiting_moments(lam, k_max, "closed_form(constant)");
        }
        case Model::custom:
            throw std::invalid_argument("custom sequences have no closed-form Lambda; use --lambda finite");
    }
    throw std::logic_error("unreachable");
}

int cmd_degseq(const ModelFlags& mf, const std::string& out) {
    DegreeSequence ds = mf.build();
    json j = to_json(ds);
    j["meta"] = meta_block(g_canonical_config, mf.seed, "n/a");
    emit(j, out);
    return 0;
}

int cmd_assume(const ModelFlags& mf, std::vector<std::size_t> ladder, int k_max,
               const std::string& out) {
    if (mf.model == "file")
        throw std::invalid_argument("file sequences have no size ladder; use a parametric model");
    auto diag = check_assumptions([&](std::size_t n) { return mf.build(n); }, ladder, k_max);
    json trends = json::array();
    for (const auto& t : diag.trends)
        trends.push_back({{"quantity", t.quantity},
                          {"condition", t.condition},
                          {"values", t.values},
                          {"loglog_slope", t.loglog_slope},
                          {"verdict", to_string(t.verdict)}});
    json j{{"ladder", diag.ladder},
           {"a1_hard", diag.a1_hard},
           {"trends", trends},
           {"lambda_stability", diag.lambda_stability},
           {"a2_verdict", to_string(diag.a2_verdict)},
           {"overall_pass", diag.overall_pass}};
    j["meta"] = meta_block(g_canonical_config, mf.seed, "n/a");
    emit(j, out);
    return 0;
}

int cmd_sample(const std::string& seq_path, std::uint64_t seed, const std::string& out) {
    DegreeSequence ds = load_degree_sequence_json(seq_path);
    AdjacencySample s = sample(ds, seed);
    save_edges(s, out);
    return 0;
}

int cmd_moments_empirical(const std::string& graph_path, int k_max, const std::string& kind_str,
                          const std::string& method_str, int probes, std::uint64_t probe_seed,
                          const std::string& out) {
    AdjacencySample s = load_edges(graph_path);
    MatrixKind kind = matrix_kind_from_string(kind_str);
    MomentReport rep =
        compute_moments(s, k_max, kind, method_from_string(method_str), probes, probe_seed);
    json j = to_json(rep);
    j["n"] = s.n;
    j["meta"] = meta_block(g_canonical_config, s.seed, kind_str);
    emit(j, out);
    return 0;
}

int cmd_moments_theory(const std::string& seq_path, int k_max, const std::string& lambda_mode,
                       const std::string& out) {
    DegreeSequence ds = load_degree_sequence_json(seq_path);
    TheoreticalMoments tm = theory_for(ds, k_max, lambda_mode);
    json j{{"k_max", tm.k_max},
           {"moments", tm.moments},
           {"lambda_source", tm.lambda_source},
           {"lambdas", lambdas_json(ds, std::max(1, k_max / 2))},
           {"model", to_string(ds.params.model)}};
    j["meta"] = meta_block(g_canonical_config, 0, "normalized");
    emit(j, out);
    return 0;
}

int cmd_spectrum(const std::string& graph_path, const std::string& kind_str,
                 const std::string& hist_mode, const std::string& out) {
    AdjacencySample s = load_edges(graph_path);
    MatrixKind kind = matrix_kind_from_string(kind_str);
    auto eigs = eigenvalues(s, kind);
    std::size_t bins = 0;
    if (hist_mode != "fd") {
        try {
            bins = static_cast<std::size_t>(std::stoul(hist_mode));
        } catch (const std::exception&) {
            throw std::invalid_argument("--hist expects 'fd' or a bin count");
        }
        if (bins == 0) throw std::invalid_argument("--hist bin count must be positive");
    }
    auto h = histogram(eigs, bins);
    std::ostringstream csv;
    json meta = meta_block(g_canonical_config, s.seed, kind_str);
    csv << "# meta " << meta.dump() << "\n";
    csv << "bin_lo,bin_hi,count\n";
    csv.precision(17);
    for (std::size_t b = 0; b < h.counts.size(); ++b)
        csv << h.bin_edges[b] << "," << h.bin_edges[b + 1] << "," << h.counts[b] << "\n";
    emit_text(csv.str(), out);
    return 0;
}

int cmd_bounds(const std::string& graph_path, int k, const std::string& kind_str,
               const std::string& out) {
    AdjacencySample s = load_edges(graph_path);
    MatrixKind kind = matrix_kind_from_string(kind_str);
    MomentReport rep = moments_eigen(s, k, kind);
    double m_k = rep.moments[static_cast<std::size_t>(k - 1)];
    auto [lo, hi] = moment_bounds_on_lambda(m_k, k, s.n);
    auto pi = largest_eigenvalue_power(s, kind, 1e-10, 50000);
    json j{{"k", k},
           {"m_k", m_k},
           {"lower", lo},
           {"upper", hi},
           {"observed_lambda_max", pi.magnitude},
           {"matrix_kind", kind_str},
           {"n", s.n}};
    j["meta"] = meta_block(g_canonical_config, s.seed, kind_str);
    emit(j, out);
    return 0;
}

int cmd_analyze_triangle(const std::string& moments_path, const std::string& out) {
    std::ifstream in(moments_path);
    if (!in) throw std::runtime_error("cannot open " + moments_path);
    json rep;
    in >> rep;
    std::vector<double> m = rep.at("moments").get<std::vector<double>>();
    if (m.size() < 4) throw std::invalid_argument("need moments up to order 4");
    auto fit = kurtosis_analysis(m[1], m[3]);
    json j{{"kappa", fit.kappa_graph},
           {"kappa_triangle", fit.kappa_triangle},
           {"b_match", fit.b_match},
           {"verdict", to_string(fit.verdict)}};
    if (m.size() >= 6) {
        j["m6_graph"] = m[5];
        j["m6_triangle"] = triangular_moment(fit.b_match, 6);
    }
    j["meta"] = meta_block(g_canonical_config, 0, rep.value("matrix_kind", "normalized"));
    emit(j, out);
    return 0;
}

int cmd_analyze_lambda1(const std::string& seq_path, const std::string& out) {
    DegreeSequence ds = load_degree_sequence_json(seq_path);
    auto pred = largest_eigenvalue_prediction(ds);
    json j{{"regime", to_string(pred.regime)},
           {"predicted", pred.predicted},
           {"d2avg", ds.d2avg},
           {"sqrt_w_max", std::sqrt(ds.w_max)}};
    if (pred.has_power_law_bound) j["power_law_bound"] = pred.power_law_bound;
    j["meta"] = meta_block(g_canonical_config, 0, "unnormalized");
    emit(j, out);
    return 0;
}

int cmd_rset(int s, const std::string& out) {
    auto rs = enumerate_degree_distributions(s);
    std::ostringstream csv;
    csv << "# meta " << meta_block(g_canonical_config, 0, "n/a").dump() << "\n";
    csv << "r,tree_count\n";
    for (const auto& t : rs) {
        csv << '"';
        for (std::size_t j = 0; j < t.r.size(); ++j) {
            if (j) csv << ' ';
            csv << t.r[j];
        }
        csv << "\"," << t.tree_count.str() << "\n";
    }
    emit_text(csv.str(), out);
    return 0;
}

int cmd_reproduce_table1(std::uint64_t seed, const std::string& out_dir) {
    auto ds = make_power_law(1000, 3.0, 100.0, 10.0);
    auto lam = lambda_estimates(ds, 4);
    auto theory = limiting_moments(lam, 8);
    auto emp = moments_eigen(sample(ds, seed), 8, MatrixKind::centralized);
    json rows = json::array();
    for (int k = 2; k <= 8; k += 2) {
        double th = theory.moments[static_cast<std::size_t>(k - 1)];
        double em = emp.moments[static_cast<std::size_t>(k - 1)];
        rows.push_back({{"order", k},
                        {"theoretical", th},
                        {"empirical", em},
                        {"rel_error", std::abs(em - th) / std::abs(th)}});
    }
    json j{{"model", "powerlaw"},
           {"n", 1000},
           {"beta", 3.0},
           {"delta", 100.0},
           {"davg", 10.0},
           {"lambdas", lam},
           {"rows", rows}};
    j["meta"] = meta_block(g_canonical_config, seed, "centralized");
    emit(j, out_dir.empty() ? "" : (fs::path(out_dir) / "table1.json").string());
    return 0;
}

int cmd_reproduce_semicircle(std::size_t n, double p, std::uint64_t seed,
                             const std::string& out) {
    auto ds = make_constant(n, p);
    auto emp = moments_eigen(sample(ds, seed), 8, MatrixKind::centralized);
    json rows = json::array();
    for (int s = 1; s <= 4; ++s) {
        double target = catalan(s).convert_to<double>();
        double em = emp.moments[static_cast<std::size_t>(2 * s - 1)];
        rows.push_back({{"order", 2 * s},
                        {"catalan_target", target},
                        {"empirical", em},
                        {"rel_error", std::abs(em - target) / target}});
    }
    json j{{"model", "constant"}, {"n", n}, {"p", p}, {"rows", rows}};
    j["meta"] = meta_block(g_canonical_config, seed, "centralized");
    emit(j, out);
    return 0;
}

int cmd_reproduce_exponential_bounds(std::size_t n, double delta, double alpha, int k,
                                     std::uint64_t seed, const std::string& out) {
    auto ds = make_exponential(n, {delta, alpha, ExpSampling::quantile_grid});
    double m_norm = exponential_moments(alpha, k).moments[static_cast<std::size_t>(k - 1)];
    double nrho_asym = alpha / (delta * (1.0 - std::exp(-alpha)));
    double m_un = m_norm / std::pow(nrho_asym, static_cast<double>(k) / 2.0);
    auto [lo, hi] = moment_bounds_on_lambda(m_un, k, n);
    auto s = sample(ds, seed);
    auto pi = largest_eigenvalue_power(s, MatrixKind::centralized_unnormalized, 1e-9, 50000);
    json j{{"model", "exponential"},
           {"n", n},
           {"delta", delta},
           {"alpha", alpha},
           {"k", k},
           {"theoretical_moment_normalized", m_norm},
           {"theoretical_moment_unnormalized", m_un},
           {"lower", lo},
           {"upper", hi},
           {"observed_lambda_max", pi.magnitude},
           {"inside_bounds", lo <= pi.magnitude && pi.magnitude <= hi}};
    j["meta"] = meta_block(g_canonical_config, seed, "centralized_unnormalized");
    emit(j, out);
    return 0;
}

// `--config cfg.json`: a flat JSON object whose keys are long flag names
// (without dashes); expands to trailing tokens so config values override
// earlier command-line flags.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> out;
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw std::invalid_argument("--config requires a path");
            config_path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        } else {
            out.push_back(args[i]);
        }
    }
    if (config_path.empty()) return out;
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config " + config_path);
    json cfg;
    in >> cfg;
    if (!cfg.is_object()) throw std::invalid_argument("config must be a JSON object");
    // drop command-line occurrences of flags the config sets
    std::vector<std::string> filtered;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::string name;
        if (out[i].rfind("--", 0) == 0) {
            auto eq = out[i].find('=');
            name = out[i].substr(2, eq == std::string::npos ? std::string::npos : eq - 2);
        }
        if (!name.empty() && cfg.contains(name)) {
            if (out[i].find('=') == std::string::npos && i + 1 < out.size() &&
                out[i + 1].rfind("--", 0) != 0)
                ++i; // skip the flag's value token too
            continue;
        }
        filtered.push_back(out[i]);
    }
    for (const auto& [key, val] : cfg.items()) {
        if (val.is_boolean()) {
            if (val.get<bool>()) filtered.push_back("--" + key);
        } else {
            filtered.push_back("--" + key);
            filtered.push_back(val.is_string() ? val.get<std::string>() : val.dump());
        }
    }
    return filtered;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("CLSPECTRA_THREADS"))
        Eigen::setNbThreads(std::max(1, std::atoi(threads)));

    CLI::App app{"expected-degree random graph spectra"};
    app.set_version_flag("--version", std::string("clspectra ") + kVersion);
    app.require_subcommand(0, 1);

    // degseq
    auto* degseq = app.add_subcommand("degseq", "construct a degree sequence");
    ModelFlags degseq_mf;
    std::string degseq_out;
    degseq_mf.attach(degseq, true);
    degseq->add_option("--out", degseq_out, "output JSON path (default stdout)");

    // assume
    auto* assume = app.add_subcommand("assume", "asymptotic assumption diagnostics");
    ModelFlags assume_mf;
    std::vector<std::size_t> ladder{1000, 10'000, 100'000};
    int assume_kmax = 8;
    std::string assume_out;
    assume_mf.attach(assume, false);
    assume->add_option("--ladder", ladder, "comma-separated size ladder")->delimiter(',');
    assume->add_option("--kmax", assume_kmax, "Lambda stability depth");
    assume->add_option("--out", assume_out, "output JSON path (default stdout)");

    // sample
    auto* smp = app.add_subcommand("sample", "sample one graph");
    std::string sample_seq, sample_out;
    std::uint64_t sample_seed = 0;
    smp->add_option("--seq", sample_seq, "degree sequence JSON")->required();
    smp->add_option("--seed", sample_seed, "sampling seed");
    smp->add_option("--out", sample_out, "edge-list output path")->required();

    // moments empirical|theory
    auto* moments = app.add_subcommand("moments", "spectral moments");
    moments->require_subcommand(1);
    auto* memp = moments->add_subcommand("empirical", "moments of one sampled graph");
    std::string memp_graph, memp_kind = "centralized", memp_method = "eig", memp_out;
    int memp_kmax = 8, memp_probes = 64;
    std::uint64_t memp_seed = 0;
    memp->add_option("--graph", memp_graph, "edge-list file")->required();
    memp->add_option("--kmax", memp_kmax, "highest order");
    memp->add_option("--kind", memp_kind, "matrix kind");
    memp->add_option("--method", memp_method, "dense|eig|hutch");
    memp->add_option("--probes", memp_probes, "trace-probe count (hutch)");
    memp->add_option("--seed", memp_seed, "probe seed (hutch)");
    memp->add_option("--out", memp_out, "output JSON path (default stdout)");

    auto* mth = moments->add_subcommand("theory", "limiting moments for a sequence");
    std::string mth_seq, mth_lambda = "finite", mth_out;
    int mth_kmax = 8;
    mth->add_option("--seq", mth_seq, "degree sequence JSON")->required();
    mth->add_option("--kmax", mth_kmax, "highest order");
    mth->add_option("--lambda", mth_lambda, "finite|closed");
    mth->add_option("--out", mth_out, "output JSON path (default stdout)");

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "eigenvalue histogram");
    std::string spec_graph, spec_kind = "centralized", spec_hist = "fd", spec_out;
    spec->add_option("--graph", spec_graph, "edge-list file")->required();
    spec->add_option("--kind", spec_kind, "matrix kind");
    spec->add_option("--hist", spec_hist, "'fd' or a bin count");
    spec->add_option("--out", spec_out, "output CSV path (default stdout)");

    // bounds
    auto* bnd = app.add_subcommand("bounds", "moment bounds on the extreme eigenvalue");
    std::string bnd_graph, bnd_kind = "centralized", bnd_out;
    int bnd_k = 20;
    bnd->add_option("--graph", bnd_graph, "edge-list file")->required();
    bnd->add_option("--k", bnd_k, "even moment order");
    bnd->add_option("--kind", bnd_kind, "matrix kind");
    bnd->add_option("--out", bnd_out, "output JSON path (default stdout)");

    // analyze triangle|lambda1
    auto* analyze = app.add_subcommand("analyze", "distribution analysis");
    analyze->require_subcommand(1);
    auto* tri = analyze->add_subcommand("triangle", "triangular-law kurtosis comparison");
    std::string tri_moments, tri_out;
    tri->add_option("--moments", tri_moments, "moments report JSON")->required();
    tri->add_option("--out", tri_out, "output JSON path (default stdout)");
    auto* lam1 = analyze->add_subcommand("lambda1", "largest-eigenvalue regime prediction");
    std::string lam1_seq, lam1_out;
    lam1->add_option("--seq", lam1_seq, "degree sequence JSON")->required();
    lam1->add_option("--out", lam1_out, "output JSON path (default stdout)");

    // rset
    auto* rset = app.add_subcommand("rset", "tree degree distributions for s edges");
    int rset_s = 6;
    std::string rset_out;
    rset->add_option("--s", rset_s, "edge count s");
    rset->add_option("--out", rset_out, "output CSV path (default stdout)");

    // reproduce table1|semicircle|exponential-bounds
    auto* rep = app.add_subcommand("reproduce", "end-to-end reference pipelines");
    rep->require_subcommand(1);
    auto* rt1 = rep->add_subcommand("table1", "power-law theory vs one sample");
    std::uint64_t rt1_seed = 69;
    std::string rt1_out;
    rt1->add_option("--seed", rt1_seed, "sampling seed");
    rt1->add_option("--out", rt1_out, "output directory (default stdout)");
    auto* rsc = rep->add_subcommand("semicircle", "centralized ER moments vs Catalan targets");
    std::size_t rsc_n = 2000;
    double rsc_p = 0.01;
    std::uint64_t rsc_seed = 7;
    std::string rsc_out;
    rsc->add_option("--n", rsc_n, "number of vertices");
    rsc->add_option("--p", rsc_p, "edge probability");
    rsc->add_option("--seed", rsc_seed, "sampling seed");
    rsc->add_option("--out", rsc_out, "output JSON path (default stdout)");
    auto* reb = rep->add_subcommand("exponential-bounds", "order-k eigenvalue bounds");
    std::size_t reb_n = 1000;
    double reb_delta = 10.0, reb_alpha = 1.0;
    int reb_k = 20;
    std::uint64_t reb_seed = 0;
    std::string reb_out;
    reb->add_option("--n", reb_n, "number of vertices");
    reb->add_option("--delta", reb_delta, "maximum expected degree");
    reb->add_option("--alpha", reb_alpha, "decay rate");
    reb->add_option("--k", reb_k, "even moment order");
    reb->add_option("--seed", reb_seed, "sampling seed");
    reb->add_option("--out", reb_out, "output JSON path (default stdout)");

    std::vector<std::string> args;
    try {
        args = expand_config(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    {
        std::ostringstream canon;
        for (const auto& a : args) canon << a << ' ';
        g_canonical_config = canon.str();
    }
    try {
        // CLI11 parses reversed argv-style vectors
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (degseq->parsed()) return cmd_degseq(degseq_mf, degseq_out);
        if (assume->parsed()) return cmd_assume(assume_mf, ladder, assume_kmax, assume_out);
        if (smp->parsed()) return cmd_sample(sample_seq, sample_seed, sample_out);
        if (memp->parsed())
            return cmd_moments_empirical(memp_graph, memp_kmax, memp_kind, memp_method,
                                         memp_probes, memp_seed, memp_out);
        if (mth->parsed()) return cmd_moments_theory(mth_seq, mth_kmax, mth_lambda, mth_out);
        if (spec->parsed()) return cmd_spectrum(spec_graph, spec_kind, spec_hist, spec_out);
        if (bnd->parsed()) return cmd_bounds(bnd_graph, bnd_k, bnd_kind, bnd_out);
        if (tri->parsed()) return cmd_analyze_triangle(tri_moments, tri_out);
        if (lam1->parsed()) return cmd_analyze_lambda1(lam1_seq, lam1_out);
        if (rset->parsed()) return cmd_rset(rset_s, rset_out);
        if (rt1->parsed()) return cmd_reproduce_table1(rt1_seed, rt1_out);
        if (rsc->parsed()) return cmd_reproduce_semicircle(rsc_n, rsc_p, rsc_seed, rsc_out);
        if (reb->parsed())
            return cmd_reproduce_exponential_bounds(reb_n, reb_delta, reb_alpha, reb_k, reb_seed,
                                                    reb_out);
        std::cout << app.help();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
