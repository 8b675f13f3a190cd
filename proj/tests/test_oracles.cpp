#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "clspectra/moment_engine.hpp"
#include "clspectra/oracles.hpp"

using namespace clspectra;

TEST_CASE("ordered tree enumeration counts Catalan numbers", "[oracles]") {
    CHECK(oracle::enumerate_ordered_trees(1).size() == 1);
    CHECK(oracle::enumerate_ordered_trees(2).size() == 2);
    CHECK(oracle::enumerate_ordered_trees(3).size() == 5);
    CHECK(oracle::enumerate_ordered_trees(6).size() == 132);
    CHECK(oracle::enumerate_ordered_trees(8).size() == 1430);
}

TEST_CASE("every enumerated tree is a tree", "[oracles]") {
    for (const auto& t : oracle::enumerate_ordered_trees(5)) {
        REQUIRE(t.parent.size() == 6);
        CHECK(t.parent[0] == -1);
        auto r = oracle::degree_distribution(t);
        int vertices = 0, degsum = 0;
        for (int j = 1; j <= t.s; ++j) {
            vertices += r[static_cast<std::size_t>(j - 1)];
            degsum += j * r[static_cast<std::size_t>(j - 1)];
        }
        CHECK(vertices == t.s + 1);
        CHECK(degsum == 2 * t.s);
        // parents precede children in DFS order
        for (std::size_t v = 1; v < t.parent.size(); ++v)
            CHECK(t.parent[v] < static_cast<int>(v));
    }
}

TEST_CASE("brute-force grouping matches the exact tree-count formula", "[oracles]") {
    for (int s = 1; s <= 6; ++s) {
        auto grouped = oracle::count_trees_by_degree_distribution(s);
        auto rs = enumerate_degree_distributions(s);
        REQUIRE(grouped.size() == rs.size());
        for (const auto& t : rs) {
            REQUIRE(grouped.count(t.r) == 1);
            CHECK(BigInt(grouped.at(t.r)) == t.tree_count);
        }
    }
}

TEST_CASE("single-node loop variance", "[oracles]") {
    // n=1, w=(0.5), rho=2: loop probability rho*w^2 = 0.5.
    // Centralized unnormalized entry is a Bernoulli(1/2) minus its mean,
    // so the exact second moment is p(1-p) = 1/4.
    DegreeSequence ds = from_weights({0.5});
    CHECK(ds.rho == Catch::Approx(2.0));
    double m2 = oracle::exact_expected_moment(ds, 2, MatrixKind::centralized_unnormalized);
    CHECK(m2 == Catch::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("two-node uniform case matches the variance identity", "[oracles]") {
    // w=(1,1), rho=1/2 gives p_ij = 1/2 for all pairs.
    // m2(centralized, unnormalized) = (1/n) sum_{ij} p_ij (1 - p_ij).
    DegreeSequence ds = from_weights({1.0, 1.0});
    double m2 = oracle::exact_expected_moment(ds, 2, MatrixKind::centralized_unnormalized);
    double expected = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) expected += 0.5 * 0.5;
    expected /= 2.0;
    CHECK(m2 == Catch::Approx(expected).epsilon(1e-14));
}

TEST_CASE("odd centralized moment vanishes for symmetric entries", "[oracles]") {
    // All entry probabilities 1/2: each centralized entry is +-1/2 with
    // equal mass, so every closed 3-walk carries an odd power of some
    // independent entry and the expectation is exactly zero.
    DegreeSequence ds = from_weights({1.0, 1.0});
    double m3 = oracle::exact_expected_moment(ds, 3, MatrixKind::centralized_unnormalized);
    CHECK(std::abs(m3) < 1e-15);
}

TEST_CASE("uncentralized first moment counts expected loops", "[oracles]") {
    // m1(unnormalized) = (1/n) E{trace A} = (1/n) sum_i rho w_i^2.
    DegreeSequence ds = from_weights({1.0, 1.5, 0.5});
    double expected = 0.0;
    for (double wi : ds.w) expected += ds.rho * wi * wi;
    expected /= static_cast<double>(ds.n);
    CHECK(oracle::exact_expected_moment(ds, 1, MatrixKind::unnormalized) ==
          Catch::Approx(expected).epsilon(1e-13));
}

TEST_CASE("oracle caps are enforced", "[oracles]") {
    DegreeSequence big = from_weights({1, 1, 1, 1, 1});
    CHECK_THROWS_AS(oracle::exact_expected_moment(big, 2, MatrixKind::unnormalized),
                    std::invalid_argument);
    DegreeSequence ok = from_weights({1, 1});
    CHECK_THROWS_AS(oracle::exact_expected_moment(ok, 7, MatrixKind::unnormalized),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle::enumerate_ordered_trees(9), std::invalid_argument);
}
