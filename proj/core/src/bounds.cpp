#include "lseries/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "lseries/numeric.hpp"

namespace lseries {

double mu_factor(long long ell) {
    if (ell == 0 || ell == 1) return 1.0;
    return 1.0 / static_cast<double>(ell * (ell - 1));
}

Complex parts_kernel(long long ell, double theta) {
    if (ell == 0 || ell == 1) return std::polar(1.0, -static_cast<double>(ell) * theta);
    return std::polar(1.0, -static_cast<double>(ell - 2) * theta) / static_cast<double>(ell * (ell - 1));
}

double shifted_decay_factor(const MultiIndex& alpha, int k) {
    double p = 1.0;
    for (int j = 0; j < alpha.dim(); ++j) p *= mu_factor(static_cast<long long>(alpha[j]) - k);
    return p;
}

double uniform_decay_factor(const MultiIndex& alpha, int k) {
    double p = 1.0;
    for (int j = 0; j < alpha.dim(); ++j) {
        double best = 0.0;
        for (int g = 0; g <= k; ++g) best = std::max(best, mu_factor(static_cast<long long>(alpha[j]) - g));
        p *= best;
    }
    return p;
}

BoundCheckResult coefficient_bound_check(const AnalyticFunction& f, const CoefficientTable& table,
                                         const Polyannulus& P, int k, SamplingSpec spec, double delta) {
    BoundCheckResult out;
    for (int j = 0; j < P.dim(); ++j) out.radius_product *= 1.0 + P.axis(j).outer * P.axis(j).outer;

    auto evaluate = [&](double base) {
        out.seminorm_base = base;
        out.violations_shifted = 0;
        out.violations_uniform = 0;
        out.certificates.clear();
        out.certificates.reserve(table.size());
        for (std::size_t j = 0; j < table.size(); ++j) {
            const MultiIndex& alpha = table.exponent_at(j);
            BoundCertificate cert;
            cert.alpha = alpha;
            cert.order = k;
            Complex c = effective_coefficient(table, P, alpha);
            cert.lhs = monomial_box_seminorm_exact(c, alpha, P, k);
            cert.rhs_shifted = shifted_decay_factor(alpha, k) * out.radius_product * base;
            cert.rhs_uniform = uniform_decay_factor(alpha, k) * out.radius_product * base;
            cert.margin_shifted = cert.rhs_shifted - cert.lhs;
            cert.margin_uniform = cert.rhs_uniform - cert.lhs;
            cert.ok_shifted = cert.lhs <= cert.rhs_shifted * (1.0 + delta);
            cert.ok_uniform = cert.lhs <= cert.rhs_uniform * (1.0 + delta);
            if (!cert.ok_shifted) ++out.violations_shifted;
            if (!cert.ok_uniform) ++out.violations_uniform;
            out.certificates.push_back(std::move(cert));
        }
    };

    evaluate(box_seminorm(f, P, k + 2, spec).value);
    if (out.violations_shifted > 0 || out.violations_uniform > 0) {
        // the sampled sup is a lower bound; refine before declaring failure
        SamplingSpec fine{spec.radial * 4, spec.angular * 4};
        evaluate(box_seminorm(f, P, k + 2, fine).value);
        out.refined = true;
    }
    return out;
}

std::vector<double> decay_factor_box_sums(int dim, int k, double B, int box) {
    if (dim < 1) throw std::invalid_argument("decay_factor_box_sums: dim must be >= 1");
    if (box < 0) throw std::invalid_argument("decay_factor_box_sums: box must be >= 0");
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(box) + 1);
    double one_dim = mu_factor(-static_cast<long long>(k));  // a = 0 term
    sums.push_back(B * pow_int(one_dim, dim));
    for (int N = 1; N <= box; ++N) {
        one_dim += mu_factor(static_cast<long long>(N) - k) + mu_factor(-static_cast<long long>(N) - k);
        sums.push_back(B * pow_int(one_dim, dim));
    }
    return sums;
}

}  // namespace lseries
