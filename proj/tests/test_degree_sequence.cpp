#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "clspectra/degree_sequence.hpp"

using namespace clspectra;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("constant sequence scalars", "[degree_sequence]") {
    auto ds = make_constant(1000, 0.01);
    CHECK(ds.n == 1000);
    for (double wi : ds.w) CHECK(wi == 10.0);
    CHECK(ds.rho == Catch::Approx(1e-4).epsilon(1e-12));
    CHECK(ds.d2avg == Catch::Approx(10.0).epsilon(1e-12));

    auto one = make_constant(1, 0.5);
    CHECK(one.w == std::vector<double>{0.5});
    CHECK(one.rho == Catch::Approx(2.0));
    CHECK(one.d2avg == Catch::Approx(0.5));

    auto four = make_constant(4, 0.25);
    for (double wi : four.w) CHECK(wi == 1.0);
    CHECK(four.rho == Catch::Approx(0.25));
    CHECK(four.d2avg == Catch::Approx(1.0));

    CHECK_THROWS_AS(make_constant(10, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_constant(10, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_constant(10, -0.1), std::invalid_argument);
}

TEST_CASE("rho inverts the volume exactly", "[degree_sequence]") {
    for (const auto& ds :
         {make_constant(257, 0.03), make_power_law(1000, 3.0, 100.0, 10.0),
          make_exponential(500, {10.0, 1.0, ExpSampling::quantile_grid})}) {
        double vol = 0.0;
        for (double wi : ds.w) vol += wi;
        CHECK(ds.rho * vol == Catch::Approx(1.0).epsilon(1e-12));
        CHECK(ds.w_min <= vol / static_cast<double>(ds.n) * (1.0 + 1e-12));
        CHECK(vol / static_cast<double>(ds.n) <= ds.w_max * (1.0 + 1e-12));
        CHECK(ds.w_min <= ds.d2avg);
        CHECK(ds.d2avg <= ds.w_max);
    }
}

TEST_CASE("exponential volume approaches the integral form", "[degree_sequence]") {
    double delta = 7.0, alpha = 1.3;
    auto ds = make_exponential(1'000'000, {delta, alpha, ExpSampling::quantile_grid});
    double n = 1e6;
    double expected_volume = n * delta / alpha * (1.0 - std::exp(-alpha));
    CHECK(1.0 / ds.rho == Catch::Approx(expected_volume).epsilon(1e-4));
}

TEST_CASE("exponential degenerates to constant as alpha -> 0", "[degree_sequence]") {
    auto ds = make_exponential(100, {5.0, 1e-9, ExpSampling::uniform_random}, 42);
    for (double wi : ds.w) CHECK(wi == Catch::Approx(5.0).epsilon(1e-8));
}

TEST_CASE("exponential second-order average degree", "[degree_sequence]") {
    double delta = 10.0, alpha = 1.0;
    auto ds = make_exponential(100'000, {delta, alpha, ExpSampling::quantile_grid});
    double closed = delta * (1.0 - std::exp(-2.0 * alpha)) / (2.0 * (1.0 - std::exp(-alpha)));
    CHECK(closed == Catch::Approx(6.8394).margin(1e-4));
    CHECK(ds.d2avg == Catch::Approx(closed).epsilon(1e-3));
}

TEST_CASE("exponential parameter validation", "[degree_sequence]") {
    CHECK_THROWS_AS(make_exponential(10, {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_exponential(10, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("power-law sequence matches a direct recomputation", "[degree_sequence]") {
    std::size_t n = 1000;
    double beta = 3.0, delta = 100.0, d = 10.0;
    auto ds = make_power_law(n, beta, delta, d);

    double c = (beta - 2.0) / (beta - 1.0) * d * std::pow(static_cast<double>(n), 1.0 / (beta - 1.0));
    double i0 = static_cast<double>(n) * std::pow(d * (beta - 2.0) / (delta * (beta - 1.0)), beta - 1.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double wi = c * std::pow(i0 + static_cast<double>(i + 1), -1.0 / (beta - 1.0));
        CHECK(ds.w[i] == Catch::Approx(wi).epsilon(1e-14));
        total += wi;
    }
    // Finite-Delta correction: the average degree is d*f(d/Delta;beta,1),
    // about 9.47 here, not d itself.
    CHECK(total / static_cast<double>(n) ==
          Catch::Approx(d * power_law_f(d / delta, beta, 1.0)).epsilon(6e-3));
}

TEST_CASE("power-law monotonicity and asymptotic calibration", "[degree_sequence]") {
    auto ds = make_power_law(100'000, 3.0, 100.0, 10.0);
    for (std::size_t i = 1; i < ds.n; ++i) CHECK(ds.w[i] <= ds.w[i - 1]);
    CHECK(ds.w_max / 100.0 == Catch::Approx(1.0).margin(0.02));
    double avg = 1.0 / (ds.rho * static_cast<double>(ds.n));
    CHECK(avg / (10.0 * power_law_f(0.1, 3.0, 1.0)) == Catch::Approx(1.0).margin(0.02));

    auto near_constant = make_power_law(1000, 3.0, 10.0, 10.0);
    for (std::size_t i = 1; i < near_constant.n; ++i)
        CHECK(near_constant.w[i] <= near_constant.w[i - 1]);
}

TEST_CASE("power-law rejects invalid parameters", "[degree_sequence]") {
    CHECK_THROWS_AS(make_power_law(1000, 2.0, 100.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(make_power_law(1000, 3.0, 5.0, 10.0), std::invalid_argument);
    // rho * w_max^2 >= 1 at small n: A1 hard failure
    CHECK_THROWS_AS(make_power_law(100, 3.0, 100.0, 10.0), std::invalid_argument);
}

TEST_CASE("load_custom parses and validates", "[degree_sequence]") {
    auto p = write_temp("clspectra_seq_ok.txt", "1\n2\n3\n");
    auto ds = load_custom(p);
    CHECK(ds.n == 3);
    CHECK(ds.rho == Catch::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(ds.w_max == 3.0);
    CHECK(ds.params.model == Model::custom);

    auto header = write_temp("clspectra_seq_hdr.txt", "# clspectra-degseq v1\n4\n5\n");
    CHECK(load_custom(header).n == 2);

    auto neg = write_temp("clspectra_seq_neg.txt", "1\n-2\n");
    CHECK_THROWS(load_custom(neg));
    auto bad = write_temp("clspectra_seq_bad.txt", "1\nfoo\n");
    CHECK_THROWS(load_custom(bad));
    auto empty = write_temp("clspectra_seq_empty.txt", "");
    CHECK_THROWS(load_custom(empty));
}

TEST_CASE("custom constant file equals make_constant", "[degree_sequence]") {
    std::string body;
    for (int i = 0; i < 1000; ++i) body += "10\n";
    auto ds_file = load_custom(write_temp("clspectra_seq_const.txt", body));
    auto ds_ctor = make_constant(1000, 0.01);
    CHECK(ds_file.n == ds_ctor.n);
    CHECK(ds_file.rho == Catch::Approx(ds_ctor.rho).epsilon(1e-14));
    CHECK(ds_file.d2avg == Catch::Approx(ds_ctor.d2avg).epsilon(1e-14));
    CHECK(ds_file.w == ds_ctor.w);
}

TEST_CASE("power sums", "[degree_sequence]") {
    auto ds = from_weights({1.0, 2.0, 3.0});
    auto s = power_sums(ds, 3);
    CHECK(s[0] == Catch::Approx(6.0));
    CHECK(s[1] == Catch::Approx(14.0));
    CHECK(s[2] == Catch::Approx(36.0));

    auto constant = make_constant(50, 0.1);
    auto sc = power_sums(constant, 4);
    for (int k = 1; k <= 4; ++k)
        CHECK(sc[static_cast<std::size_t>(k - 1)] ==
              Catch::Approx(50.0 * std::pow(5.0, k)).epsilon(1e-12));

    auto pl = make_power_law(1000, 3.0, 100.0, 10.0);
    CHECK(power_sums(pl, 1)[0] == Catch::Approx(1.0 / pl.rho).epsilon(1e-12));

    // Jensen: S2/n >= (S1/n)^2
    for (const auto& seq : {ds, constant, pl}) {
        auto ps = power_sums(seq, 2);
        double n = static_cast<double>(seq.n);
        CHECK(ps[1] / n >= (ps[0] / n) * (ps[0] / n) - 1e-12);
    }
}

TEST_CASE("d2avg identity", "[degree_sequence]") {
    for (const auto& ds :
         {make_constant(100, 0.2), make_power_law(1000, 3.0, 100.0, 10.0),
          make_exponential(777, {3.0, 0.7, ExpSampling::quantile_grid})}) {
        double s2 = power_sums(ds, 2)[1];
        double n = static_cast<double>(ds.n);
        CHECK(ds.d2avg == Catch::Approx(n * ds.rho * s2 / n).epsilon(1e-12));
    }
}

TEST_CASE("lambda estimates normalize to 1 at k = 1", "[degree_sequence]") {
    for (const auto& ds :
         {make_constant(100, 0.2), make_power_law(1000, 3.0, 100.0, 10.0),
          from_weights({0.1, 5.0, 2.2}),
          make_exponential(1000, {4.0, 2.0, ExpSampling::uniform_random}, 9)}) {
        auto lam = lambda_estimates(ds, 4);
        CHECK(lam[0] == Catch::Approx(1.0).epsilon(1e-12));
    }
    auto constant = make_constant(64, 0.5);
    for (double lk : lambda_estimates(constant, 8)) CHECK(lk == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exponential lambda estimates converge to the closed form", "[degree_sequence]") {
    double alpha = 1.0;
    auto ds = make_exponential(1'000'000, {10.0, alpha, ExpSampling::quantile_grid});
    auto lam = lambda_estimates(ds, 8);
    for (int k = 1; k <= 8; ++k)
        CHECK(lam[static_cast<std::size_t>(k - 1)] ==
              Catch::Approx(lambda_closed_form_exponential(alpha, k)).epsilon(1e-3));
    CHECK(lambda_closed_form_exponential(alpha, 2) == Catch::Approx(1.0820).margin(5e-5));
}

TEST_CASE("power-law closed-form lambda branches", "[degree_sequence]") {
    CHECK(lambda_closed_form_exponential(0.7, 1) == Catch::Approx(1.0).epsilon(1e-14));
    // pole at k = beta - 1
    CHECK_THROWS_AS(lambda_closed_form_power_law(3.0, 100.0, 10.0, 2), std::domain_error);
    CHECK_THROWS_AS(lambda_closed_form_power_law_wide(3.0, 2), std::domain_error);
    // beyond the pole the finite-Delta branch stays finite
    CHECK(std::isfinite(lambda_closed_form_power_law(3.5, 100.0, 10.0, 4)));
    // wide-limit and finite-Delta branches agree when Delta >> d
    double wide = lambda_closed_form_power_law_wide(6.0, 3);
    double finite = lambda_closed_form_power_law(6.0, 1e7, 10.0, 3);
    CHECK(finite == Catch::Approx(wide).epsilon(1e-4));
}
