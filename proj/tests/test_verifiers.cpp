#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qnk/classical.hpp"
#include "qnk/verifiers.hpp"

using namespace qnk;

namespace {

bool all_pass(const std::vector<CheckResult>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const CheckResult& c) { return c.status == Status::Pass; });
}

std::vector<CheckResult> named(const std::vector<CheckResult>& rs, const std::string& name) {
    std::vector<CheckResult> out;
    for (const auto& c : rs)
        if (c.name == name) out.push_back(c);
    return out;
}

} // namespace

TEST_CASE("status strings round-trip") {
    for (Status s : {Status::Pass, Status::Fail, Status::Ambiguous, Status::Refused})
        CHECK(status_from_string(to_string(s)) == s);
    CHECK(std::string(to_string(Status::Pass)) == "pass");
    CHECK_THROWS_AS(status_from_string("green"), Error);
}

TEST_CASE("empty report summary") {
    Report r;
    const Summary s = r.summary();
    CHECK(s.total == 0);
    CHECK(s.pass == 0);
    CHECK(s.fail == 0);
    CHECK(s.ambiguous == 0);
    CHECK(s.refused == 0);
}

TEST_CASE("report sorting and counting") {
    Report r;
    CheckResult a{"b_check", {{"x", 2}}, 1, 1, 0, Status::Pass, 0};
    CheckResult b{"a_check", {{"x", 1}}, 1, 2, 1, Status::Fail, 0};
    CheckResult c{"b_check", {{"x", 1}}, 1, 1, 0, Status::Refused, 0};
    r.append({a, b, c});
    r.sort();
    CHECK(r.results[0].name == "a_check");
    CHECK(r.results[1].params["x"] == 1);
    CHECK(r.results[2].params["x"] == 2);
    const Summary s = r.summary();
    CHECK(s.total == 3);
    CHECK(s.pass == 1);
    CHECK(s.fail == 1);
    CHECK(s.refused == 1);
}

TEST_CASE("scaled residual") {
    const CMatrix a = CMatrix::Identity(2, 2);
    CHECK(scaled_residual(a, a, 1.0) == 0.0);
    CHECK(scaled_residual(a, 2.0 * a, 1.0) == doctest::Approx(0.5));
    // both sides numerically zero against ref: measured against ref
    const CMatrix tiny = 1e-20 * a, other = 2e-20 * a;
    CHECK(scaled_residual(tiny, other, 1.0) < 1e-19);
    CHECK(scaled_residual(tiny, other, 1e-20) == doctest::Approx(0.5));
}

TEST_CASE("random points are reproducible and in the cell") {
    Rng a(42), b(42);
    const cplx eta{0.31, 1.37};
    for (int i = 0; i < 20; ++i) {
        const cplx x = random_point(a, eta), y = random_point(b, eta);
        CHECK(x == y);
        const double t = x.imag() / eta.imag(), s = x.real() - t * eta.real();
        CHECK(std::abs(s) <= 0.5);
        CHECK(std::abs(t) <= 0.5);
    }
}

TEST_CASE("QYBE and inverse pair at small n") {
    Rng rng(1);
    const auto p = AlgebraParams::make(2, 1);
    const auto q = qybe_check(p, 5, rng);
    CHECK(named(q, "qybe2").size() == 6);
    CHECK(all_pass(q));
    CHECK(all_pass(inverse_pair_check(p, rng)));
    CHECK(all_pass(transform_check(p, 2, rng)));
}

TEST_CASE("determinant checks, double and extended") {
    Rng rng(3);
    const auto p = AlgebraParams::make(3, 2);
    const auto d = det_check(p, 3, rng);
    CHECK(all_pass(d));
    CHECK(named(d, "det_winding_number").size() == 1);
    CHECK(named(d, "det_winding_number")[0].observed.get<double>() == doctest::Approx(9.0).epsilon(1e-6));
    const auto px = AlgebraParams::make(2, 1, kDefaultEta, std::nullopt, {}, Precision::Extended);
    CHECK(all_pass(det_check(px, 2, rng)));
    CHECK(all_pass(det_k_independence(4, kDefaultEta, default_tau(kDefaultEta), 2, rng)));
}

TEST_CASE("nullity table covers a full cell") {
    Rng rng(4);
    const auto p = AlgebraParams::make(2, 1);
    const auto rs = nullity_table(p, rng);
    const auto all = named(rs, "nullity");
    const auto grid = std::count_if(all.begin(), all.end(), [](const CheckResult& c) { return c.params.contains("zeta"); });
    CHECK(grid == 8); // both cosets, n^2 points each
    CHECK(all.size() > 8); // plus generic probes
    CHECK(all_pass(rs));
}

TEST_CASE("algebra checks at n = 2") {
    Rng rng(5);
    const auto p = AlgebraParams::make(2, 1);
    CHECK(all_pass(hilbert_check(p, 3)));
    CHECK(all_pass(dual_hilbert_check(p, 3)));
    CHECK(all_pass(t_rank_table(p, 3)));
    CHECK(all_pass(mult_identity_check(p, 1, 2, rng)));
    CHECK(all_pass(koszul_check(p, 3)));
    CHECK(all_pass(frobenius_check(p)));
    CHECK(all_pass(dual_algebra_check(p)));
    CHECK(all_pass(twist_rank_check(p)));
    CHECK(all_pass(chain_identity_check(p, 3, rng)));
}

TEST_CASE("Hilbert ranks are reported against the classical dimensions") {
    const auto p = AlgebraParams::make(3, 1);
    const auto rs = named(hilbert_check(p, 3), "hilbert_rank");
    REQUIRE(rs.size() == 4);
    for (const auto& c : rs) {
        const int d = c.params["d"].get<int>();
        CHECK(c.expected.get<long>() == binomial(3 + d - 1, d));
        CHECK(c.status == Status::Pass);
    }
}

TEST_CASE("property suite") {
    Rng rng(6);
    const auto p = AlgebraParams::make(3, 1);
    CHECK(all_pass(theta_property_check(p, rng)));
    CHECK(all_pass(belavin_check(p, rng)));
    CHECK(all_pass(transpose_check(p, rng)));
    CHECK(all_pass(shuffle_check(4)));
}

TEST_CASE("torsion tau is refused, not failed") {
    Rng rng(7);
    const auto p = AlgebraParams::make(3, 1, kDefaultEta, cplx(1.0 / 3, 0));
    for (const auto& rs : {qybe_check(p, 2, rng), hilbert_check(p, 2), det_check(p, 1, rng)}) {
        REQUIRE_FALSE(rs.empty());
        for (const auto& c : rs) CHECK(c.status == Status::Refused);
    }
}

TEST_CASE("the limit suite reports first-order decay") {
    const auto rs = limit_check(3, 1, kDefaultEta, 3, {1, 2});
    REQUIRE(rs.size() == 4);
    for (const auto& c : rs) {
        CHECK(c.observed["monotone"] == true);
        const auto& dev = c.observed["deviations"];
        CHECK(dev.size() == 4);
        CHECK(dev[3].get<double>() < dev[0].get<double>());
    }
}
