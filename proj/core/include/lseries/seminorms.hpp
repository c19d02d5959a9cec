#pragma once

#include <vector>

#include "lseries/geometry.hpp"
#include "lseries/multi_index.hpp"
#include "lseries/test_functions.hpp"

namespace lseries {

/// Grid density for sampled suprema: radial points per axis over the
/// closed shadow, equally spaced angles per axis on each torus.
struct SamplingSpec {
    int radial = 32;
    int angular = 16;
};

/// A sampled supremum.  The value is a maximum over the declared finite
/// grid and derivative set, hence a lower bound of the true sup.
struct SeminormReport {
    enum class Kind { ck, box };
    Kind kind = Kind::ck;
    int order = 0;
    double value = 0.0;
    MultiIndex attained_gamma;
    std::vector<double> attained_radii;
    std::vector<Complex> attained_point;
    SamplingSpec sampling;
};

/// sup over the sampled closure of P and all gamma with total degree <= k
/// of |D^gamma f|.
SeminormReport ck_seminorm(const AnalyticFunction& f, const Polyannulus& P, int k, SamplingSpec spec = {});

/// Same, but gamma ranges over max-entry <= k.
SeminormReport box_seminorm(const AnalyticFunction& f, const Polyannulus& P, int k, SamplingSpec spec = {});

/// Exact value of the order-k box seminorm of c * z^alpha on P.  Each
/// axis contributes max_{0<=g<=k} |ff(alpha_j,g)| * sup of |z|^(alpha_j-g),
/// with the sup taken at the outer radius for nonnegative exponents and
/// at the inner radius otherwise.  A negative exponent on a disc axis has
/// an infinite sup and raises a domain error (unless c == 0).
double monomial_box_seminorm_exact(Complex c, const MultiIndex& alpha, const Polyannulus& P, int k);

/// The two-sided comparison between the box family and the C^k family on
/// one shared sample set: box(k) <= ck(n*k) and ck(k) <= box(k).  Both
/// inequalities come from index-set inclusion, so they must hold exactly.
struct SeminormEquivalence {
    SeminormReport box_k;
    SeminormReport ck_k;
    SeminormReport ck_nk;
    bool box_le_ck_nk = false;
    bool ck_le_box = false;
};
SeminormEquivalence seminorm_equivalence_check(const AnalyticFunction& f, const Polyannulus& P, int k,
                                               SamplingSpec spec = {});

/// True if every axis range of P sits inside the closure of the matching
/// axis of `validity`.
bool cell_within_validity(const Polyannulus& validity, const Polyannulus& P);

}  // namespace lseries
