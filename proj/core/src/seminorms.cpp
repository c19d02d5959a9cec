#include "lseries/seminorms.hpp"

#include <cmath>
#include <stdexcept>

#include "lseries/numeric.hpp"

namespace lseries {

bool cell_within_validity(const Polyannulus& validity, const Polyannulus& P) {
    if (validity.dim() != P.dim()) return false;
    const double tol = 1e-12;
    for (int j = 0; j < P.dim(); ++j) {
        const AxisRange& v = validity.axis(j);
        const AxisRange& a = P.axis(j);
        if (!(a.outer <= v.outer * (1.0 + tol))) return false;
        if (!(a.closure_min() >= v.closure_min() * (1.0 - tol))) return false;
    }
    return true;
}

namespace {

// max of |D^gamma f| over the closed sample grid, for each gamma set
void sampled_sup(const AnalyticFunction& f, const Polyannulus& P, SamplingSpec spec,
                 const std::vector<MultiIndex>& gammas, SeminormReport& out) {
    if (!cell_within_validity(f.validity(), P))
        throw std::domain_error(f.name() + ": sampling region exceeds validity closure");
    int n = P.dim();
    const auto radii_grid = sample_shadow(P, spec.radial);
    std::vector<Complex> z(static_cast<std::size_t>(n));
    std::vector<int> ang(static_cast<std::size_t>(n), 0);
    for (const auto& radii : radii_grid) {
        std::fill(ang.begin(), ang.end(), 0);
        for (;;) {
            for (int j = 0; j < n; ++j)
                z[static_cast<std::size_t>(j)] =
                    std::polar(radii[static_cast<std::size_t>(j)],
                               two_pi * static_cast<double>(ang[static_cast<std::size_t>(j)]) / spec.angular);
            for (const MultiIndex& g : gammas) {
                double v = std::abs(f.deriv(g, z));
                if (v > out.value) {
                    out.value = v;
                    out.attained_gamma = g;
                    out.attained_radii = radii;
                    out.attained_point = z;
                }
            }
            int j = n - 1;
            while (j >= 0 && ang[static_cast<std::size_t>(j)] == spec.angular - 1) {
                ang[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            ++ang[static_cast<std::size_t>(j)];
        }
    }
}

}  // namespace

SeminormReport ck_seminorm(const AnalyticFunction& f, const Polyannulus& P, int k, SamplingSpec spec) {
    if (k < 0) throw std::invalid_argument("seminorm order must be >= 0");
    SeminormReport out;
    out.kind = SeminormReport::Kind::ck;
    out.order = k;
    out.sampling = spec;
    out.attained_gamma = MultiIndex::zero(P.dim());
    sampled_sup(f, P, spec, total_degree_orders(k, P.dim()), out);
    return out;
}

SeminormReport box_seminorm(const AnalyticFunction& f, const Polyannulus& P, int k, SamplingSpec spec) {
    if (k < 0) throw std::invalid_argument("seminorm order must be >= 0");
    SeminormReport out;
    out.kind = SeminormReport::Kind::box;
    out.order = k;
    out.sampling = spec;
    out.attained_gamma = MultiIndex::zero(P.dim());
    sampled_sup(f, P, spec, box_orders(k, P.dim()), out);
    return out;
}

double monomial_box_seminorm_exact(Complex c, const MultiIndex& alpha, const Polyannulus& P, int k) {
    if (alpha.dim() != P.dim()) throw std::invalid_argument("monomial seminorm: dimension mismatch");
    if (k < 0) throw std::invalid_argument("seminorm order must be >= 0");
    double mod = std::abs(c);
    if (mod == 0.0) return 0.0;
    double value = mod;
    for (int j = 0; j < P.dim(); ++j) {
        const AxisRange& ax = P.axis(j);
        int a = alpha[j];
        if (a < 0 && ax.kind == AxisKind::disc)
            throw std::domain_error("monomial seminorm: negative exponent on a disc axis has infinite sup");
        double best = 0.0;
        for (int g = 0; g <= k; ++g) {
            double ff = std::abs(falling_factorial(a, g));
            if (ff == 0.0) continue;
            long long e = static_cast<long long>(a) - g;
            double radius = e >= 0 ? ax.outer : ax.inner;
            best = std::max(best, ff * pow_int(radius, e));
        }
        value *= best;
    }
    return value;
}

SeminormEquivalence seminorm_equivalence_check(const AnalyticFunction& f, const Polyannulus& P, int k,
                                               SamplingSpec spec) {
    int n = P.dim();
    SeminormEquivalence eq;
    eq.box_k = box_seminorm(f, P, k, spec);
    eq.ck_k = ck_seminorm(f, P, k, spec);
    eq.ck_nk = ck_seminorm(f, P, n * k, spec);
    // index-set inclusions on one shared grid, so exact comparisons
    eq.box_le_ck_nk = eq.box_k.value <= eq.ck_nk.value;
    eq.ck_le_box = eq.ck_k.value <= eq.box_k.value;
    return eq;
}

}  // namespace lseries
