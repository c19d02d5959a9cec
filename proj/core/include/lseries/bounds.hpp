#pragma once

#include <vector>

#include "lseries/coefficients.hpp"
#include "lseries/geometry.hpp"
#include "lseries/multi_index.hpp"
#include "lseries/seminorms.hpp"
#include "lseries/test_functions.hpp"

namespace lseries {

/// 1/(l(l-1)) for l outside {0,1}, otherwise 1.  The denominator is an
/// exact integer product, so the symmetry mu(l) == mu(1-l) is bitwise.
double mu_factor(long long ell);

/// Integration-by-parts kernel: exp(-i(l-2)t)/(l(l-1)) for l outside
/// {0,1}, exp(-i l t) otherwise.  Its modulus equals mu_factor(l) for
/// every angle.
Complex parts_kernel(long long ell, double theta);

/// prod_j mu(alpha_j - k): the per-box decay factor with every axis
/// shifted by the full order k.
double shifted_decay_factor(const MultiIndex& alpha, int k);

/// prod_j max_{0<=g<=k} mu(alpha_j - g): the uniform variant, a valid
/// bound for every derivative order gamma with max entry <= k.  Agrees
/// with the shifted factor when k == 0 or min_j alpha_j >= k+2.
double uniform_decay_factor(const MultiIndex& alpha, int k);

/// One per-exponent certificate of the coefficient bound
///   ||c_alpha e_alpha||'_k  <=  factor * prod_j (1+R_j^2) * ||f||'_{k+2}
/// evaluated with both factor variants.  lhs is exact; the right side
/// uses a sampled seminorm.
struct BoundCertificate {
    MultiIndex alpha;
    int order = 0;
    double lhs = 0.0;
    double rhs_shifted = 0.0;
    double rhs_uniform = 0.0;
    double margin_shifted = 0.0;
    double margin_uniform = 0.0;
    bool ok_shifted = true;
    bool ok_uniform = true;
};

struct BoundCheckResult {
    std::vector<BoundCertificate> certificates;
    double seminorm_base = 0.0;    // sampled ||f||'_{k+2} on P
    double radius_product = 1.0;   // prod_j (1 + R_j^2)
    bool refined = false;          // violations triggered a 4x denser resample
    int violations_shifted = 0;
    int violations_uniform = 0;
};

/// Certificates for every exponent of the table.  A failure is declared
/// only when lhs > rhs*(1+delta) and a 4x sampling refinement does not
/// close the gap (the sampled right side underestimates the true sup).
BoundCheckResult coefficient_bound_check(const AnalyticFunction& f, const CoefficientTable& table,
                                         const Polyannulus& P, int k, SamplingSpec spec = {},
                                         double delta = 1e-8);

/// Partial sums, for N = 0..box, of  B * prod_j sum_{a=-N..N} mu(a-k)
/// (all axes carry the same one-dimensional sum).  The increments decay
/// like 1/N^2, which is the summability witness.
std::vector<double> decay_factor_box_sums(int dim, int k, double B, int box);

}  // namespace lseries
