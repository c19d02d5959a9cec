#include "lseries/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lseries/numeric.hpp"
#include "lseries/rng.hpp"

namespace lseries {

Complex partial_sum(const CoefficientTable& table, const std::vector<MultiIndex>& S, std::span<const Complex> z) {
    std::vector<std::size_t> idx;
    idx.reserve(S.size());
    for (const MultiIndex& a : S) idx.push_back(table.index_of(a));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument("partial_sum: duplicate index in the finite set");
    Complex acc(0.0, 0.0);
    for (std::size_t j : idx) acc += table.at(j) * pow_multi(z, table.exponent_at(j));
    return acc;
}

double term_seminorm(const CoefficientTable& table, const Polyannulus& P, const MultiIndex& alpha, int k) {
    return monomial_box_seminorm_exact(effective_coefficient(table, P, alpha), alpha, P, k);
}

std::vector<double> term_seminorms(const CoefficientTable& table, const Polyannulus& P, int k) {
    std::vector<double> out(table.size());
    for (std::size_t j = 0; j < table.size(); ++j)
        out[j] = monomial_box_seminorm_exact(effective_coefficient(table, P, table.exponent_at(j)),
                                             table.exponent_at(j), P, k);
    return out;
}

TailProfile tail_seminorm_sum(const CoefficientTable& table, const Polyannulus& P, int k,
                              std::optional<double> beyond_box_bound) {
    TailProfile profile;
    profile.order = k;
    profile.beyond_box_bound = beyond_box_bound;
    std::vector<double> terms = term_seminorms(table, P, k);
    const std::size_t T = terms.size();
    profile.entries.resize(T);
    double tail = 0.0;
    for (std::size_t r = 0; r < T; ++r) {  // suffix sums, last entry has tail 0
        std::size_t j = T - 1 - r;
        profile.entries[j] = TailEntry{j, terms[j], tail};
        tail += terms[j];
    }

    // shell sandwich between prefix sums and box-restricted sums
    std::vector<double> prefix(T);
    double acc = 0.0;
    for (std::size_t m = 0; m < T; ++m) {
        acc += terms[m];
        prefix[m] = acc;
    }
    for (std::size_t m = 1; m < T; ++m) {
        int m1 = box_index_bound(static_cast<long long>(m), table.dim());
        std::size_t lower_idx = static_cast<std::size_t>(box_point_count(m1, table.dim())) - 1;
        double lower = prefix[lower_idx];
        if (lower > prefix[m]) profile.sandwich_ok = false;
        if (lower == prefix[m]) ++profile.sandwich_equalities;
        if (m1 + 1 <= table.box()) {
            std::size_t upper_idx = static_cast<std::size_t>(box_point_count(m1 + 1, table.dim())) - 1;
            double upper = prefix[upper_idx];
            if (prefix[m] > upper) profile.sandwich_ok = false;
            if (prefix[m] == upper) ++profile.sandwich_equalities;
        }
    }
    return profile;
}

double oracle_beyond_box_bound(const AnalyticFunction& f, const Polyannulus& P, int k, int box, int extra_shells) {
    double total = 0.0;
    for (int s = box + 1; s <= box + extra_shells; ++s) {
        for (const MultiIndex& a : shell_points(s, f.dim())) {
            Complex c = f.coefficient(a);
            if (c == Complex(0.0, 0.0)) continue;
            bool disc_negative = false;
            for (int j = 0; j < P.dim(); ++j)
                if (a[j] < 0 && P.axis(j).kind == AxisKind::disc) disc_negative = true;
            if (disc_negative) continue;  // vanishes analytically on disc axes
            total += monomial_box_seminorm_exact(c, a, P, k);
        }
    }
    return total;
}

namespace {

// per-point per-axis powers z^e for e in [emin, emax]
struct PowerTable {
    long long emin;
    std::vector<std::vector<Complex>> axis_powers;  // [axis][e - emin]

    PowerTable(std::span<const Complex> z, long long emin_, long long emax) : emin(emin_) {
        axis_powers.resize(z.size());
        for (std::size_t ax = 0; ax < z.size(); ++ax) {
            auto& pows = axis_powers[ax];
            pows.resize(static_cast<std::size_t>(emax - emin + 1));
            for (long long e = emin; e <= emax; ++e) pows[static_cast<std::size_t>(e - emin)] = pow_int(z[ax], e);
        }
    }

    Complex value(const MultiIndex& exponent) const {
        Complex p(1.0, 0.0);
        for (std::size_t ax = 0; ax < axis_powers.size(); ++ax)
            p *= axis_powers[ax][static_cast<std::size_t>(exponent[static_cast<int>(ax)] - emin)];
        return p;
    }
};

std::vector<std::vector<Complex>> grid_points(const Polyannulus& P, SamplingSpec spec) {
    const int n = P.dim();
    std::vector<std::vector<Complex>> points;
    const auto radii_grid = sample_shadow(P, spec.radial);
    std::vector<int> ang(static_cast<std::size_t>(n), 0);
    for (const auto& radii : radii_grid) {
        std::fill(ang.begin(), ang.end(), 0);
        for (;;) {
            std::vector<Complex> z(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                z[static_cast<std::size_t>(j)] =
                    std::polar(radii[static_cast<std::size_t>(j)],
                               two_pi * static_cast<double>(ang[static_cast<std::size_t>(j)]) / spec.angular);
            points.push_back(std::move(z));
            int j = n - 1;
            while (j >= 0 && ang[static_cast<std::size_t>(j)] == spec.angular - 1) {
                ang[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            ++ang[static_cast<std::size_t>(j)];
        }
    }
    return points;
}

}  // namespace

std::vector<double> box_partial_sum_error_profile(const AnalyticFunction& f, const CoefficientTable& table,
                                                  const Polyannulus& P, int k, SamplingSpec spec) {
    if (!cell_within_validity(f.validity(), P))
        throw std::domain_error(f.name() + ": sampling region exceeds validity closure");
    const int n = table.dim();
    const int box = table.box();
    const std::vector<MultiIndex> gammas = box_orders(k, n);
    const auto points = grid_points(P, spec);

    // reference derivative values
    std::vector<std::vector<Complex>> fval(gammas.size(), std::vector<Complex>(points.size()));
    for (std::size_t gi = 0; gi < gammas.size(); ++gi)
        for (std::size_t p = 0; p < points.size(); ++p) fval[gi][p] = f.deriv(gammas[gi], points[p]);

    std::vector<PowerTable> powers;
    powers.reserve(points.size());
    for (const auto& z : points) powers.emplace_back(z, -static_cast<long long>(box) - k, box);

    std::vector<std::vector<Complex>> running(gammas.size(), std::vector<Complex>(points.size(), Complex(0.0, 0.0)));
    std::vector<double> err(static_cast<std::size_t>(box) + 1, 0.0);

    int shell = 0;
    auto finalize_shell = [&](int N) {
        double worst = 0.0;
        for (std::size_t gi = 0; gi < gammas.size(); ++gi)
            for (std::size_t p = 0; p < points.size(); ++p)
                worst = std::max(worst, std::abs(fval[gi][p] - running[gi][p]));
        err[static_cast<std::size_t>(N)] = worst;
    };

    for (std::size_t j = 0; j < table.size(); ++j) {
        const MultiIndex& a = table.exponent_at(j);
        int s = linf_norm(a);
        if (s > shell) {
            finalize_shell(shell);
            shell = s;
        }
        Complex c = effective_coefficient(table, P, a);
        if (c == Complex(0.0, 0.0)) continue;
        for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
            double ff = 1.0;
            for (int ax = 0; ax < n; ++ax) ff *= falling_factorial(a[ax], gammas[gi][ax]);
            if (ff == 0.0) continue;
            Complex cf = c * ff;
            MultiIndex e = a - gammas[gi];
            for (std::size_t p = 0; p < points.size(); ++p) running[gi][p] += cf * powers[p].value(e);
        }
    }
    finalize_shell(shell);
    return err;
}

double box_partial_sum_error(const AnalyticFunction& f, const CoefficientTable& table, int N, const Polyannulus& P,
                             int k, SamplingSpec spec) {
    if (N < 0 || N > table.box()) throw std::invalid_argument("box_partial_sum_error: N outside the table box");
    return box_partial_sum_error_profile(f, table, P, k, spec)[static_cast<std::size_t>(N)];
}

NetCauchyCheck net_cauchy_check(const CoefficientTable& table, const Polyannulus& P, int k, double epsilon,
                                std::uint64_t seed, int random_sets, std::optional<double> beyond_box_bound) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("net_cauchy_check: epsilon must be positive");
    NetCauchyCheck out;
    out.epsilon = epsilon;
    out.beyond_box_verified = beyond_box_bound.has_value();
    double beyond = beyond_box_bound.value_or(0.0);
    if (beyond >= epsilon / 2.0) {
        out.reachable = false;  // the box itself cannot certify this epsilon
        return out;
    }

    TailProfile profile = tail_seminorm_sum(table, P, k, beyond_box_bound);
    const std::size_t T = profile.entries.size();
    double target = epsilon / 2.0 - beyond;
    std::size_t n0 = T - 1;
    for (std::size_t j = 0; j < T; ++j) {
        if (profile.entries[j].tail < target) {
            n0 = j;
            break;
        }
    }
    out.threshold_index = n0;
    out.threshold_shell = linf_norm(table.exponent_at(n0));
    out.tail_at_threshold = profile.entries[n0].tail;

    // random finite sets J, K containing I = {sigma(0..N0)}
    const std::vector<double> terms = [&] {
        std::vector<double> t(T);
        for (std::size_t j = 0; j < T; ++j) t[j] = profile.entries[j].term;
        return t;
    }();
    std::size_t max_extra = n0 >= 1 ? n0 - 1 : 0;  // |J| <= max(2*N0, N0+1)
    max_extra = std::min(max_extra, T - 1 - n0);
    Rng root(seed);
    std::vector<std::size_t> candidates;
    for (std::size_t j = n0 + 1; j < T; ++j) candidates.push_back(j);

    const SamplingSpec pair_spec{5, 6};
    const auto points = grid_points(P, pair_spec);
    const std::vector<MultiIndex> gammas = box_orders(k, table.dim());

    for (int s = 0; s < random_sets; ++s) {
        Rng rng = root.fork(static_cast<std::uint64_t>(s));
        auto draw = [&](std::vector<std::size_t>& extra) {
            std::size_t count = max_extra == 0 ? 0 : static_cast<std::size_t>(rng.below(max_extra + 1));
            std::vector<std::size_t> pool = candidates;
            rng.shuffle(pool);
            extra.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
            std::sort(extra.begin(), extra.end());
        };
        std::vector<std::size_t> extraJ, extraK;
        draw(extraJ);
        draw(extraK);
        double boundJ = 0.0, boundK = 0.0;
        for (std::size_t j : extraJ) boundJ += terms[j];
        for (std::size_t j : extraK) boundK += terms[j];
        double pair_bound = boundJ + boundK;
        out.max_pair_bound = std::max(out.max_pair_bound, pair_bound);
        ++out.sets_checked;
        if (!(pair_bound < epsilon)) ++out.violations;

        // sampled seminorm of sum_J - sum_K; extras outside the shared I
        // are all that survives the difference
        double sampled = 0.0;
        for (std::size_t p = 0; p < points.size(); ++p) {
            for (const MultiIndex& g : gammas) {
                Complex diff(0.0, 0.0);
                for (std::size_t j : extraJ) {
                    const MultiIndex& a = table.exponent_at(j);
                    double ff = 1.0;
                    for (int ax = 0; ax < table.dim(); ++ax) ff *= falling_factorial(a[ax], g[ax]);
                    if (ff == 0.0) continue;
                    diff += effective_coefficient(table, P, a) * ff * pow_multi(points[p], a - g);
                }
                for (std::size_t j : extraK) {
                    const MultiIndex& a = table.exponent_at(j);
                    double ff = 1.0;
                    for (int ax = 0; ax < table.dim(); ++ax) ff *= falling_factorial(a[ax], g[ax]);
                    if (ff == 0.0) continue;
                    diff -= effective_coefficient(table, P, a) * ff * pow_multi(points[p], a - g);
                }
                sampled = std::max(sampled, std::abs(diff));
            }
        }
        if (sampled > pair_bound * (1.0 + 1e-10) + 1e-18) ++out.sampled_violations;
    }
    return out;
}

RearrangementCheck permuted_convergence_check(const CoefficientTable& table, const Polyannulus& P, int k, int trials,
                                              std::uint64_t seed, double epsilon, SamplingSpec spec) {
    RearrangementCheck out;
    out.epsilon = epsilon;
    TailProfile profile = tail_seminorm_sum(table, P, k);
    const std::size_t T = profile.entries.size();

    double target = epsilon / 2.0;
    std::size_t n0 = T - 1;
    for (std::size_t j = 0; j < T; ++j) {
        if (profile.entries[j].tail < target) {
            n0 = j;
            break;
        }
    }
    out.threshold_index = n0;
    out.tail_at_threshold = profile.entries[n0].tail;

    const auto points = grid_points(P, spec);
    const std::vector<MultiIndex> gammas = box_orders(k, table.dim());
    const int n = table.dim();

    auto contribution = [&](std::size_t j, const MultiIndex& g, const std::vector<Complex>& z) -> Complex {
        const MultiIndex& a = table.exponent_at(j);
        Complex c = effective_coefficient(table, P, a);
        if (c == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
        double ff = 1.0;
        for (int ax = 0; ax < n; ++ax) ff *= falling_factorial(a[ax], g[ax]);
        if (ff == 0.0) return Complex(0.0, 0.0);
        return c * ff * pow_multi(z, a - g);
    };

    // enumeration-order full sums per (gamma, point)
    std::vector<std::vector<Complex>> base(gammas.size(), std::vector<Complex>(points.size(), Complex(0.0, 0.0)));
    for (std::size_t j = 0; j < T; ++j)
        for (std::size_t gi = 0; gi < gammas.size(); ++gi)
            for (std::size_t p = 0; p < points.size(); ++p) base[gi][p] += contribution(j, gammas[gi], points[p]);

    Rng root(seed);
    std::vector<std::size_t> tau(T);
    for (std::size_t j = 0; j < T; ++j) tau[j] = j;

    for (int t = 0; t < trials; ++t) {
        Rng rng = root.fork(static_cast<std::uint64_t>(t));
        std::vector<std::size_t> perm = tau;
        rng.shuffle(perm);
        ++out.trials;

        // full-prefix sums in tau order differ from base by reassociation only
        double disc = 0.0;
        for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
            for (std::size_t p = 0; p < points.size(); ++p) {
                Complex acc(0.0, 0.0);
                for (std::size_t i = 0; i < T; ++i) acc += contribution(perm[i], gammas[gi], points[p]);
                disc = std::max(disc, std::abs(acc - base[gi][p]));
            }
        }
        out.max_full_prefix_discrepancy = std::max(out.max_full_prefix_discrepancy, disc);

        // covering point of {0..N0} within tau
        std::size_t u = 0;
        for (std::size_t i = 0; i < T; ++i) {
            if (perm[i] <= n0) u = std::max(u, i);
        }
        std::vector<char> included(T, 0);
        for (std::size_t i = 0; i <= u; ++i) included[perm[i]] = 1;
        for (std::size_t v = u; v < T; ++v) {
            if (v > u) included[perm[v]] = 1;
            double missing = 0.0;
            for (std::size_t j = 0; j < T; ++j)
                if (!included[j]) missing += profile.entries[j].term;
            if (missing > 2.0 * out.tail_at_threshold) ++out.bound_violations;
        }
    }
    return out;
}

}  // namespace lseries
