#include "lseries/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <stdexcept>

#include "lseries/numeric.hpp"

namespace lseries {

CoefficientTable::CoefficientTable(int box, std::vector<double> torus_radii, int grid, std::vector<Complex> values)
    : box_(box), grid_(grid), torus_radii_(std::move(torus_radii)), values_(std::move(values)) {
    exponents_ = box_points(box_, dim());
    if (exponents_.size() != values_.size())
        throw std::invalid_argument("coefficient table: value count does not match the box");
    for (std::size_t j = 0; j < exponents_.size(); ++j) index_.emplace(exponents_[j], j);
}

bool CoefficientTable::in_box(const MultiIndex& alpha) const {
    return alpha.dim() == dim() && linf_norm(alpha) <= box_;
}

std::size_t CoefficientTable::index_of(const MultiIndex& alpha) const {
    auto it = index_.find(alpha);
    if (it == index_.end()) throw std::domain_error("coefficient table: exponent outside the stored box");
    return it->second;
}

namespace {

bool is_pow2(int m) { return m > 0 && (m & (m - 1)) == 0; }

// forward transform, X_t = sum_s a_s e^{-2 pi i t s / m}
void fft_radix2(std::vector<Complex>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = -two_pi / static_cast<double>(len);
        Complex wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                Complex u = a[i + j];
                Complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

void dft_naive(std::vector<Complex>& a) {
    const std::size_t m = a.size();
    std::vector<Complex> out(m, Complex(0.0, 0.0));
    for (std::size_t t = 0; t < m; ++t) {
        Complex acc(0.0, 0.0);
        for (std::size_t s = 0; s < m; ++s) {
            std::size_t phase = (t * s) % m;  // keep angles in one period
            acc += a[s] * std::polar(1.0, -two_pi * static_cast<double>(phase) / static_cast<double>(m));
        }
        out[t] = acc;
    }
    a = std::move(out);
}

void transform_line(std::vector<Complex>& line) {
    if (is_pow2(static_cast<int>(line.size())))
        fft_radix2(line);
    else
        dft_naive(line);
}

void parallel_chunks(std::size_t count, int workers, const std::function<void(std::size_t, std::size_t)>& body) {
    if (workers <= 1 || count < 2) {
        body(0, count);
        return;
    }
    int nw = std::min<int>(workers, static_cast<int>(count));
    std::vector<std::future<void>> futs;
    futs.reserve(static_cast<std::size_t>(nw));
    std::size_t chunk = (count + static_cast<std::size_t>(nw) - 1) / static_cast<std::size_t>(nw);
    for (int w = 0; w < nw; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&body, lo, hi] { body(lo, hi); }));
    }
    for (auto& f : futs) f.get();
}

}  // namespace

CoefficientTable coefficients_dft(const AnalyticFunction& f, const std::vector<double>& radii, int m, int box,
                                  int workers) {
    const int n = f.dim();
    if (static_cast<int>(radii.size()) != n) throw std::invalid_argument("coefficients_dft: radii dimension mismatch");
    if (box < 0) throw std::invalid_argument("coefficients_dft: box must be >= 0");
    if (m < 2 * box + 1)
        throw std::invalid_argument("coefficients_dft: grid too small, need m >= 2*box+1");
    for (double r : radii)
        if (!(r > 0.0)) throw std::domain_error("coefficients_dft: torus radii must be positive");
    if (!f.validity().contains_radii(radii))
        throw std::domain_error("coefficients_dft: torus lies outside the validity cell");

    std::size_t total = 1;
    for (int j = 0; j < n; ++j) total *= static_cast<std::size_t>(m);

    // sample f on the torus grid, row-major with axis 0 slowest
    std::vector<Complex> data(total);
    std::vector<Complex> unit(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) unit[static_cast<std::size_t>(s)] = std::polar(1.0, two_pi * s / static_cast<double>(m));
    parallel_chunks(total, workers, [&](std::size_t lo, std::size_t hi) {
        std::vector<Complex> z(static_cast<std::size_t>(n));
        for (std::size_t flat = lo; flat < hi; ++flat) {
            std::size_t rem = flat;
            for (int j = n - 1; j >= 0; --j) {
                std::size_t s = rem % static_cast<std::size_t>(m);
                rem /= static_cast<std::size_t>(m);
                z[static_cast<std::size_t>(j)] = radii[static_cast<std::size_t>(j)] * unit[s];
            }
            data[flat] = f.eval(z);
        }
    });

    // one transform per line along each axis
    for (int axis = 0; axis < n; ++axis) {
        std::size_t stride = 1;
        for (int j = axis + 1; j < n; ++j) stride *= static_cast<std::size_t>(m);
        std::size_t lines = total / static_cast<std::size_t>(m);
        parallel_chunks(lines, workers, [&](std::size_t lo, std::size_t hi) {
            std::vector<Complex> line(static_cast<std::size_t>(m));
            for (std::size_t li = lo; li < hi; ++li) {
                // decompose line index into (outer block, inner offset)
                std::size_t block = li / stride;
                std::size_t offset = li % stride;
                std::size_t base = block * stride * static_cast<std::size_t>(m) + offset;
                for (int s = 0; s < m; ++s) line[static_cast<std::size_t>(s)] = data[base + static_cast<std::size_t>(s) * stride];
                transform_line(line);
                for (int s = 0; s < m; ++s) data[base + static_cast<std::size_t>(s) * stride] = line[static_cast<std::size_t>(s)];
            }
        });
    }

    double scale = 1.0 / static_cast<double>(total);
    for (Complex& v : data) v *= scale;

    // pick out the box, undoing the radius factor per exponent
    std::vector<MultiIndex> exps = box_points(box, n);
    std::vector<Complex> values(exps.size());
    for (std::size_t j = 0; j < exps.size(); ++j) {
        const MultiIndex& a = exps[j];
        std::size_t flat = 0;
        double rpow = 1.0;
        for (int ax = 0; ax < n; ++ax) {
            int w = ((a[ax] % m) + m) % m;
            flat = flat * static_cast<std::size_t>(m) + static_cast<std::size_t>(w);
            rpow *= pow_int(radii[static_cast<std::size_t>(ax)], a[ax]);
        }
        values[j] = data[flat] / rpow;
    }
    return CoefficientTable(box, radii, m, std::move(values));
}

double aliasing_estimate(const AnalyticFunction& f, const std::vector<double>& radii, int m, int box, int workers) {
    CoefficientTable t1 = coefficients_dft(f, radii, m, box, workers);
    CoefficientTable t2 = coefficients_dft(f, radii, 2 * m, box, workers);
    double worst = 0.0;
    for (std::size_t j = 0; j < t1.size(); ++j) worst = std::max(worst, std::abs(t1.at(j) - t2.at(j)));
    return worst;
}

CoefficientTable coefficients_with_aliasing(const AnalyticFunction& f, const std::vector<double>& radii, int m,
                                            int box, int workers) {
    CoefficientTable t1 = coefficients_dft(f, radii, m, box, workers);
    CoefficientTable t2 = coefficients_dft(f, radii, 2 * m, box, workers);
    double worst = 0.0;
    for (std::size_t j = 0; j < t1.size(); ++j) worst = std::max(worst, std::abs(t1.at(j) - t2.at(j)));
    t1.set_aliasing_bound(worst);
    return t1;
}

double derivative_shift_residual(const AnalyticFunction& f, const MultiIndex& gamma, const MultiIndex& alpha,
                                 std::span<const Complex> z, int m) {
    if (!is_nonnegative(gamma)) throw std::invalid_argument("derivative shift: gamma must be nonnegative");
    if (gamma.dim() != f.dim() || alpha.dim() != f.dim())
        throw std::invalid_argument("derivative shift: index dimension mismatch");
    std::vector<double> radii = shadow(z);
    if (!f.validity().contains_radii(radii))
        throw std::domain_error("derivative shift: torus through z lies outside the validity cell");

    MultiIndex shifted = alpha - gamma;
    double ff = 1.0;
    for (int j = 0; j < alpha.dim(); ++j) ff *= falling_factorial(alpha[j], gamma[j]);
    Complex zpow = pow_multi(z, shifted);
    Complex lhs = ff == 0.0 ? Complex(0.0, 0.0) : f.coefficient(alpha) * ff * zpow;

    int grid = std::max(m, default_grid(linf_norm(shifted)));
    FunctionPtr fp(&f, [](const AnalyticFunction*) {});  // non-owning view
    CoefficientTable table = coefficients_dft(*derivative_function(fp, gamma), radii, grid, linf_norm(shifted));
    Complex rhs = table.at(shifted) * zpow;
    return std::abs(lhs - rhs);
}

std::vector<double> default_torus_radii(const Polyannulus& P) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(P.dim()));
    for (int j = 0; j < P.dim(); ++j) {
        const AxisRange& a = P.axis(j);
        out.push_back(a.kind == AxisKind::disc ? a.outer / 2.0 : std::sqrt(a.inner * a.outer));
    }
    return out;
}

int default_grid(int box) {
    int need = std::max(2 * box + 1, 32);
    int m = 1;
    while (m < need) m <<= 1;
    return m;
}

Complex effective_coefficient(const CoefficientTable& table, const Polyannulus& P, const MultiIndex& alpha) {
    const Complex& c = table.at(alpha);
    for (int j = 0; j < P.dim(); ++j) {
        if (alpha[j] < 0 && P.axis(j).kind == AxisKind::disc) {
            double floor = std::max(table.aliasing_bound(), 1e-12);
            if (std::abs(c) > floor)
                throw std::runtime_error(
                    "coefficient table: nonzero value on a disc axis with negative exponent (data inconsistency)");
            return Complex(0.0, 0.0);
        }
    }
    return c;
}

}  // namespace lseries
