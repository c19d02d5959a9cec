#include <cmath>

#include "doctest.h"
#include "lseries/rng.hpp"
#include "lseries/seminorms.hpp"
#include "lseries/test_functions.hpp"

using namespace lseries;

namespace {
const Polyannulus unit_disc = Polyannulus::polydisc({1.0});
const Polyannulus unit_bidisc = Polyannulus::polydisc({1.0, 1.0});
const Polyannulus annulus_half_two({AxisRange::annulus(0.5, 2.0)});
}  // namespace

TEST_CASE("ck seminorm on elementary functions") {
    auto one = make_monomial(Complex(1, 0), MultiIndex{0}, unit_disc);
    CHECK(ck_seminorm(*one, unit_disc, 5).value == doctest::Approx(1.0));

    auto z = make_monomial(Complex(1, 0), MultiIndex{1}, unit_disc);
    CHECK(ck_seminorm(*z, unit_disc, 1).value == doctest::Approx(1.0));

    auto z2 = make_monomial(Complex(1, 0), MultiIndex{2}, unit_disc);
    CHECK(ck_seminorm(*z2, unit_disc, 2).value == doctest::Approx(2.0));
}

TEST_CASE("box seminorm basics") {
    // one variable: the families coincide for every order
    auto geo = make_geometric(Complex(3, 0), unit_disc);
    for (int k = 0; k <= 3; ++k)
        CHECK(box_seminorm(*geo, unit_disc, k).value == ck_seminorm(*geo, unit_disc, k).value);

    auto z12 = make_monomial(Complex(1, 0), MultiIndex{1, 1}, unit_bidisc);
    CHECK(box_seminorm(*z12, unit_bidisc, 1).value == doctest::Approx(1.0));

    // order zero: both are the sup of |f|
    auto diag = make_diagonal_geometric(Complex(4, 0), unit_bidisc);
    CHECK(box_seminorm(*diag, unit_bidisc, 0).value == ck_seminorm(*diag, unit_bidisc, 0).value);
}

TEST_CASE("exact monomial box seminorm") {
    CHECK(monomial_box_seminorm_exact(Complex(1, 0), MultiIndex{2}, unit_disc, 1) == doctest::Approx(2.0));
    CHECK(monomial_box_seminorm_exact(Complex(1, 0), MultiIndex{-1}, annulus_half_two, 0) == doctest::Approx(2.0));
    CHECK(monomial_box_seminorm_exact(Complex(0, 0), MultiIndex{-1}, unit_disc, 2) == 0.0);
    CHECK_THROWS_AS(monomial_box_seminorm_exact(Complex(1, 0), MultiIndex{-1}, unit_disc, 0), std::domain_error);
}

TEST_CASE("seminorm family comparison is exact on shared samples") {
    SamplingSpec spec{12, 8};
    for (const FunctionPtr& f : standard_suite()) {
        if (f->dim() > 2) continue;
        Polyannulus cell = f->validity();
        for (int k = 0; k <= 2; ++k) {
            auto eq = seminorm_equivalence_check(*f, cell, k, spec);
            CHECK(eq.box_le_ck_nk);
            CHECK(eq.ck_le_box);
        }
    }
}

TEST_CASE("family comparison for the zero function") {
    auto zero = make_monomial(Complex(0, 0), MultiIndex{1}, unit_disc);
    auto eq = seminorm_equivalence_check(*zero, unit_disc, 2, SamplingSpec{6, 4});
    CHECK(eq.box_le_ck_nk);
    CHECK(eq.ck_le_box);
    CHECK(eq.box_k.value == 0.0);
    CHECK(eq.ck_nk.value == 0.0);
}

TEST_CASE("nested refinement never decreases a sampled value") {
    auto geo = make_geometric(Complex(3, 0), unit_disc);
    auto pp = make_principal_part(Complex(0.1, 0), annulus_half_two);
    for (int k = 0; k <= 2; ++k) {
        double coarse_g = box_seminorm(*geo, unit_disc, k, SamplingSpec{9, 8}).value;
        double fine_g = box_seminorm(*geo, unit_disc, k, SamplingSpec{17, 16}).value;
        CHECK(fine_g >= coarse_g);
        double coarse_p = box_seminorm(*pp, annulus_half_two, k, SamplingSpec{9, 8}).value;
        double fine_p = box_seminorm(*pp, annulus_half_two, k, SamplingSpec{17, 16}).value;
        CHECK(fine_p >= coarse_p);
    }
}

TEST_CASE("exact monomial value dominates any sampled value") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int a = rng.uniform_int(-3, 3);
        Polyannulus cell = a < 0 ? annulus_half_two : unit_disc;
        auto mono = make_monomial(Complex(rng.uniform(-2, 2), rng.uniform(-1, 1)), MultiIndex{a}, cell);
        Complex c = mono->coefficient(MultiIndex{a});
        for (int k = 0; k <= 2; ++k) {
            double exact = monomial_box_seminorm_exact(c, MultiIndex{a}, cell, k);
            double sampled = box_seminorm(*mono, cell, k, SamplingSpec{64, 8}).value;
            CHECK(sampled <= exact * (1.0 + 1e-12));
            if (exact > 0.0) CHECK((exact - sampled) / exact < 1e-3);  // closed grid attains the sup
        }
    }
}

TEST_CASE("seminorm axioms on identical samples") {
    SamplingSpec spec{8, 8};
    auto geo = make_geometric(Complex(3, 0), unit_disc);
    auto lac = make_lacunary(unit_disc);

    // absolute homogeneity, exact for a power-of-two factor
    auto doubled = make_scaled(Complex(2, 0), geo);
    CHECK(box_seminorm(*doubled, unit_disc, 2, spec).value == 2.0 * box_seminorm(*geo, unit_disc, 2, spec).value);

    // triangle inequality, allowing one rounding of the pointwise sums
    auto sum = make_sum({geo, lac});
    double lhs = box_seminorm(*sum, unit_disc, 2, spec).value;
    double rhs = box_seminorm(*geo, unit_disc, 2, spec).value + box_seminorm(*lac, unit_disc, 2, spec).value;
    CHECK(lhs <= rhs * (1.0 + 1e-14));
}

TEST_CASE("sampling outside the validity cell fails") {
    auto geo = make_geometric(Complex(3, 0), unit_disc);
    Polyannulus wide = Polyannulus::polydisc({1.5});
    CHECK_THROWS_AS(box_seminorm(*geo, wide, 0), std::domain_error);
}
