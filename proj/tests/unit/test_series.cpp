#include <cmath>

#include "doctest.h"
#include "lseries/series.hpp"

using namespace lseries;

namespace {
const Polyannulus unit_disc = Polyannulus::polydisc({1.0});
const Polyannulus disc_two = Polyannulus::polydisc({2.0});
}  // namespace

TEST_CASE("partial sums over explicit finite sets") {
    auto e1 = make_monomial(Complex(1, 0), MultiIndex{1}, disc_two);
    auto table = coefficients_dft(*e1, {1.0}, 8, 2);
    std::vector<Complex> z{{0.5, 0.0}};

    CHECK(partial_sum(table, {}, z) == Complex(0, 0));
    CHECK(std::abs(partial_sum(table, {MultiIndex{1}}, z) - Complex(0.5, 0)) < 1e-14);
    CHECK(std::abs(partial_sum(table, box_points(2, 1), z) - Complex(0.5, 0)) < 1e-13);
    CHECK_THROWS_AS(partial_sum(table, {MultiIndex{5}}, z), std::domain_error);
    CHECK_THROWS_AS(partial_sum(table, {MultiIndex{1}, MultiIndex{1}}, z), std::invalid_argument);
}

TEST_CASE("tail profile of a single monomial") {
    auto e2 = make_monomial(Complex(1, 0), MultiIndex{2}, unit_disc);
    auto table = coefficients_with_aliasing(*e2, {0.5}, 32, 6);
    auto profile = tail_seminorm_sum(table, unit_disc, 0);
    ShellEnumeration sigma(1);
    std::size_t idx = sigma.sigma_inverse(MultiIndex{2});
    for (std::size_t j = idx; j < profile.entries.size(); ++j) CHECK(profile.entries[j].tail < 1e-12);
    CHECK(profile.entries[idx - 1].tail > 0.9);  // the monomial itself is still ahead
    CHECK(profile.sandwich_ok);
}

TEST_CASE("geometric tail terms and ratios on the two-disc") {
    auto geo = make_geometric(Complex(3, 0), disc_two);
    auto table = coefficients_with_aliasing(*geo, {1.0}, 64, 20);
    auto profile = tail_seminorm_sum(table, disc_two, 0);
    ShellEnumeration sigma(1);
    // term for exponent a >= 0 is |c_a| 2^a = (1/3)(2/3)^a
    for (int a = 0; a <= 20; ++a) {
        double term = profile.entries[sigma.sigma_inverse(MultiIndex{a})].term;
        CHECK(term == doctest::Approx((1.0 / 3.0) * std::pow(2.0 / 3.0, a)).epsilon(1e-4));
    }
    for (int a = 1; a <= 20; ++a) CHECK(profile.entries[sigma.sigma_inverse(MultiIndex{-a})].term == 0.0);
    // tails never increase and prefix sums never decrease
    for (std::size_t j = 1; j < profile.entries.size(); ++j)
        CHECK(profile.entries[j].tail <= profile.entries[j - 1].tail);
    CHECK(profile.sandwich_ok);
}

TEST_CASE("box partial sum error: polynomial reproduced") {
    Polyannulus cell({AxisRange::annulus(0.5, 2.0)});
    auto poly = make_sum({make_monomial(Complex(2, 0), MultiIndex{3}, cell),
                          make_monomial(Complex(0, 1), MultiIndex{-1}, cell)});
    auto table = coefficients_dft(*poly, {1.0}, 32, 5);
    double err = box_partial_sum_error(*poly, table, 5, cell, 1, SamplingSpec{8, 8});
    CHECK(err < 1e-10);
}

TEST_CASE("box partial sum error: geometric decay and triangle bounds") {
    auto geo = make_geometric(Complex(3, 0), unit_disc);
    auto table = coefficients_with_aliasing(*geo, {0.5}, 64, 20);
    auto errs = box_partial_sum_error_profile(*geo, table, unit_disc, 0, SamplingSpec{16, 8});
    auto profile = tail_seminorm_sum(table, unit_disc, 0);
    double beyond = oracle_beyond_box_bound(*geo, unit_disc, 0, 20);
    for (int N = 0; N <= 20; ++N) {
        double analytic = std::pow(3.0, -(N + 1)) / 2.0;  // sum of |c_a| past N on the unit disc
        CHECK(errs[static_cast<std::size_t>(N)] <= analytic + 1e-12);
        // error is below the exact seminorm tail plus the beyond-box part
        std::size_t boundary = static_cast<std::size_t>(box_point_count(N, 1)) - 1;
        CHECK(errs[static_cast<std::size_t>(N)] <= profile.entries[boundary].tail + beyond + 1e-12);
    }
    for (int N = 0; N < 20; ++N) {
        std::size_t next = static_cast<std::size_t>(box_point_count(N + 1, 1)) - 1;
        double shell_terms = 0.0;
        for (std::size_t j = static_cast<std::size_t>(box_point_count(N, 1)); j <= next; ++j)
            shell_terms += profile.entries[j].term;
        CHECK(errs[static_cast<std::size_t>(N + 1)] <= errs[static_cast<std::size_t>(N)] + 2.0 * shell_terms + 1e-12);
    }
}

TEST_CASE("coarser orders converge no slower on shared samples") {
    auto geo = make_geometric(Complex(3, 0), unit_disc);
    auto table = coefficients_with_aliasing(*geo, {0.5}, 64, 15);
    SamplingSpec spec{12, 8};
    auto e0 = box_partial_sum_error_profile(*geo, table, unit_disc, 0, spec);
    auto e2 = box_partial_sum_error_profile(*geo, table, unit_disc, 2, spec);
    for (int N = 0; N <= 15; ++N)
        CHECK(e0[static_cast<std::size_t>(N)] <= e2[static_cast<std::size_t>(N)]);
}

TEST_CASE("net cauchy threshold for a single monomial") {
    auto e2 = make_monomial(Complex(1, 0), MultiIndex{2}, unit_disc);
    auto table = coefficients_with_aliasing(*e2, {0.5}, 32, 6);
    auto check = net_cauchy_check(table, unit_disc, 0, 1e-6, 42, 50);
    ShellEnumeration sigma(1);
    CHECK(check.reachable);
    CHECK(check.threshold_index == sigma.sigma_inverse(MultiIndex{2}));
    CHECK(check.violations == 0);
    CHECK(check.sampled_violations == 0);
}

TEST_CASE("net cauchy on the geometric series") {
    auto geo = make_geometric(Complex(3, 0), unit_disc);
    auto table = coefficients_with_aliasing(*geo, {0.5}, 128, 40);
    double beyond = oracle_beyond_box_bound(*geo, unit_disc, 0, 40);
    auto check = net_cauchy_check(table, unit_disc, 0, 1e-6, 77, 100, beyond);
    CHECK(check.reachable);
    CHECK(check.beyond_box_verified);
    CHECK(check.threshold_shell == 12);  // smallest N with 3^-(N+1)/2 < 5e-7
    CHECK(check.violations == 0);
    CHECK(check.sampled_violations == 0);
    CHECK(check.tail_at_threshold < 5e-7);

    // an epsilon the box cannot certify reports back instead of guessing
    auto blocked = net_cauchy_check(table, unit_disc, 0, 1e-30, 77, 10, beyond);
    CHECK_FALSE(blocked.reachable);
}

TEST_CASE("random rearrangements stay within the certified corridor") {
    auto geo = make_geometric(Complex(3, 0), unit_disc);
    auto table = coefficients_with_aliasing(*geo, {0.5}, 128, 40);
    auto check = permuted_convergence_check(table, unit_disc, 0, 20, 4242, 1e-6);
    CHECK(check.trials == 20);
    CHECK(check.max_full_prefix_discrepancy < 1e-10);
    CHECK(check.bound_violations == 0);
}

TEST_CASE("identity rearrangement is bitwise stable") {
    auto geo = make_geometric(Complex(3, 0), unit_disc);
    auto table = coefficients_dft(*geo, {0.5}, 64, 10);
    std::vector<Complex> z{{0.5, 0.25}};
    Complex a = partial_sum(table, box_points(10, 1), z);
    Complex b = partial_sum(table, box_points(10, 1), z);
    CHECK(a == b);
}
