#include <cmath>

#include "doctest.h"
#include "lseries/bounds.hpp"
#include "lseries/rng.hpp"
#include "lseries/numeric.hpp"

using namespace lseries;

namespace {
const Polyannulus unit_disc = Polyannulus::polydisc({1.0});
const Polyannulus annulus_half_two({AxisRange::annulus(0.5, 2.0)});
}  // namespace

TEST_CASE("mu factor values and symmetry") {
    CHECK(mu_factor(0) == 1.0);
    CHECK(mu_factor(1) == 1.0);
    CHECK(mu_factor(3) == doctest::Approx(1.0 / 6.0));
    CHECK(mu_factor(-2) == doctest::Approx(1.0 / 6.0));
    for (long long l = -1000; l <= 1000; ++l) CHECK(mu_factor(l) == mu_factor(1 - l));  // bitwise
}

TEST_CASE("parts kernel magnitude equals mu") {
    Rng rng(1);
    for (int a = -20; a <= 20; ++a)
        for (int t = 0; t < 100; ++t) {
            double theta = rng.uniform(0.0, two_pi);
            CHECK(std::abs(std::abs(parts_kernel(a, theta)) - mu_factor(a)) <= 1e-15);
        }
}

TEST_CASE("decay factors") {
    CHECK(shifted_decay_factor(MultiIndex{0}, 0) == 1.0);
    CHECK(shifted_decay_factor(MultiIndex{3}, 0) == doctest::Approx(1.0 / 6.0));
    CHECK(shifted_decay_factor(MultiIndex{3, 3}, 1) == doctest::Approx(0.25));

    CHECK(uniform_decay_factor(MultiIndex{7}, 0) == shifted_decay_factor(MultiIndex{7}, 0));
    CHECK(uniform_decay_factor(MultiIndex{-5}, 2) == doctest::Approx(1.0 / 30.0));

    Rng rng(2);
    for (int t = 0; t < 200; ++t) {
        MultiIndex a{rng.uniform_int(-9, 9), rng.uniform_int(-9, 9)};
        int k = rng.uniform_int(0, 3);
        CHECK(uniform_decay_factor(a, k) >= shifted_decay_factor(a, k));
        if (std::min(a[0], a[1]) >= k + 2 || k == 0)
            CHECK(uniform_decay_factor(a, k) == shifted_decay_factor(a, k));
    }
}

TEST_CASE("summability of the uniform factors") {
    // partial sums over growing boxes are Cauchy with 1/N^2 increments
    for (int dim : {1, 2}) {
        for (int k : {0, 2}) {
            auto sums = decay_factor_box_sums(dim, k, 1.0, 300);
            double full_1d = 4.0;  // 2 + two telescoping halves
            for (int N = k + 2; N <= 300; ++N) {
                double inc = sums[static_cast<std::size_t>(N)] - sums[static_cast<std::size_t>(N - 1)];
                CHECK(inc > 0.0);
                double bound = 2.0 * dim * std::pow(full_1d, dim - 1) / (static_cast<double>(N - k) * (N - k - 1));
                CHECK(inc <= bound * (1 + 1e-12));
            }
        }
    }
}

TEST_CASE("one-dimensional factor sums telescope") {
    // sum_{a=-N..N} mu(a) = 4 - 1/N - 1/(N+1) exactly
    auto sums = decay_factor_box_sums(1, 0, 1.0, 200);
    for (int N = 1; N <= 200; ++N) {
        double expect = 4.0 - 1.0 / N - 1.0 / (N + 1.0);
        CHECK(sums[static_cast<std::size_t>(N)] == doctest::Approx(expect).epsilon(1e-13));
    }
    // shifting k only re-indexes the window: limits agree up to boundary terms
    auto s0 = decay_factor_box_sums(1, 0, 1.0, 400);
    auto s2 = decay_factor_box_sums(1, 2, 1.0, 400);
    for (int N = 50; N <= 400; N += 50) {
        double diff = std::abs(s0[static_cast<std::size_t>(N)] - s2[static_cast<std::size_t>(N)]);
        CHECK(diff <= 4.0 / ((N - 2.0) * (N - 3.0)));
    }
}

TEST_CASE("bound certificates for elementary functions") {
    // constant: lhs = 1, right side = mu(0) * (1+R^2) * 1 = 2
    auto one = make_monomial(Complex(1, 0), MultiIndex{0}, unit_disc);
    auto t_one = coefficients_with_aliasing(*one, {0.5}, 32, 2);
    auto r_one = coefficient_bound_check(*one, t_one, unit_disc, 0, SamplingSpec{16, 8});
    const BoundCertificate* c0 = nullptr;
    for (const auto& c : r_one.certificates)
        if (c.alpha == MultiIndex{0}) c0 = &c;
    REQUIRE(c0 != nullptr);
    CHECK(c0->lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c0->rhs_shifted == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c0->margin_shifted == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r_one.violations_shifted == 0);
    CHECK(r_one.violations_uniform == 0);

    // z^5 at order 0: lhs = 1, right side = (1/20) * 2 * 20 = 2
    auto e5 = make_monomial(Complex(1, 0), MultiIndex{5}, unit_disc);
    auto t5 = coefficients_with_aliasing(*e5, {0.5}, 32, 5);
    auto r5 = coefficient_bound_check(*e5, t5, unit_disc, 0, SamplingSpec{16, 8});
    const BoundCertificate* c5 = nullptr;
    for (const auto& c : r5.certificates)
        if (c.alpha == MultiIndex{5}) c5 = &c;
    REQUIRE(c5 != nullptr);
    CHECK(c5->lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c5->rhs_shifted == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r5.violations_uniform == 0);
}

TEST_CASE("uniform certificates hold where the shifted ones break") {
    // the shifted factor mu(alpha-k) undercuts the true constant once
    // alpha_j - k drops low enough; alpha = 0 at k = 2 is the sharp spot
    auto geo = make_geometric(Complex(3, 0), unit_disc);
    auto table = coefficients_with_aliasing(*geo, {0.5}, 64, 10);
    auto res = coefficient_bound_check(*geo, table, unit_disc, 2, SamplingSpec{32, 8});
    CHECK(res.violations_uniform == 0);
    CHECK(res.violations_shifted > 0);
    for (const auto& c : res.certificates) {
        if (!c.ok_shifted)
            CHECK(uniform_decay_factor(c.alpha, c.order) > shifted_decay_factor(c.alpha, c.order));
        if (c.alpha == MultiIndex{0}) {
            CHECK_FALSE(c.ok_shifted);  // 1/3 > (1/6) * 2 * ||f||'_4 = 0.25
            CHECK(c.ok_uniform);
        }
    }

    // negative exponents on an annulus: uniform passes as well
    auto pp = make_principal_part(Complex(0.1, 0), annulus_half_two);
    auto tp = coefficients_with_aliasing(*pp, {1.0}, 64, 10);
    for (int k = 0; k <= 3; ++k) {
        auto rp = coefficient_bound_check(*pp, tp, annulus_half_two, k, SamplingSpec{32, 8});
        CHECK(rp.violations_uniform == 0);
    }
}
