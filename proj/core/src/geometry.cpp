#include "lseries/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lseries {

AxisRange AxisRange::disc(double outer) {
    if (!(outer > 0.0) || !std::isfinite(outer)) throw std::invalid_argument("disc axis needs 0 < R < inf");
    return AxisRange{AxisKind::disc, 0.0, outer};
}

AxisRange AxisRange::annulus(double inner, double outer) {
    if (!(0.0 < inner && inner < outer) || !std::isfinite(outer))
        throw std::invalid_argument("annulus axis needs 0 < r < R < inf");
    return AxisRange{AxisKind::annulus, inner, outer};
}

bool AxisRange::contains(double modulus) const {
    if (kind == AxisKind::disc) return modulus < outer;
    return inner < modulus && modulus < outer;
}

bool AxisRange::contains_closure(double modulus, double rel_tol) const {
    double lo = kind == AxisKind::disc ? 0.0 : inner * (1.0 - rel_tol);
    return modulus >= lo && modulus <= outer * (1.0 + rel_tol);
}

Polyannulus Polyannulus::polydisc(const std::vector<double>& radii) {
    std::vector<AxisRange> axes;
    axes.reserve(radii.size());
    for (double R : radii) axes.push_back(AxisRange::disc(R));
    return Polyannulus(std::move(axes));
}

bool Polyannulus::contains(std::span<const Complex> z) const {
    if (static_cast<int>(z.size()) != dim()) return false;
    for (int j = 0; j < dim(); ++j)
        if (!axes_[static_cast<std::size_t>(j)].contains(std::abs(z[static_cast<std::size_t>(j)]))) return false;
    return true;
}

bool Polyannulus::contains_closure(std::span<const Complex> z, double rel_tol) const {
    if (static_cast<int>(z.size()) != dim()) return false;
    for (int j = 0; j < dim(); ++j)
        if (!axes_[static_cast<std::size_t>(j)].contains_closure(std::abs(z[static_cast<std::size_t>(j)]), rel_tol))
            return false;
    return true;
}

bool Polyannulus::contains_radii(std::span<const double> radii) const {
    if (static_cast<int>(radii.size()) != dim()) return false;
    for (int j = 0; j < dim(); ++j)
        if (!axes_[static_cast<std::size_t>(j)].contains(radii[static_cast<std::size_t>(j)])) return false;
    return true;
}

std::string Polyannulus::describe() const {
    std::ostringstream os;
    for (int j = 0; j < dim(); ++j) {
        const AxisRange& a = axes_[static_cast<std::size_t>(j)];
        if (j) os << " x ";
        if (a.kind == AxisKind::disc)
            os << "D(" << a.outer << ")";
        else
            os << "A(" << a.inner << "," << a.outer << ")";
    }
    return os.str();
}

std::vector<double> shadow(std::span<const Complex> z) {
    std::vector<double> out;
    out.reserve(z.size());
    for (const Complex& w : z) out.push_back(std::abs(w));
    return out;
}

std::vector<std::vector<double>> sample_shadow(const Polyannulus& P, int res) {
    if (res < 2) throw std::invalid_argument("sample_shadow: res must be >= 2");
    int n = P.dim();
    std::vector<std::vector<double>> grids(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const AxisRange& a = P.axis(j);
        double lo = a.closure_min(), hi = a.closure_max();
        std::vector<double>& g = grids[static_cast<std::size_t>(j)];
        g.reserve(static_cast<std::size_t>(res));
        for (int i = 0; i < res; ++i) {
            double t = static_cast<double>(i) / static_cast<double>(res - 1);
            g.push_back(lo * (1.0 - t) + hi * t);  // endpoints land exactly on lo and hi
        }
    }
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(std::pow(static_cast<double>(res), n)));
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<double> tuple(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) tuple[static_cast<std::size_t>(j)] = grids[static_cast<std::size_t>(j)][static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])];
        out.push_back(std::move(tuple));
        int j = n - 1;
        while (j >= 0 && pos[static_cast<std::size_t>(j)] == res - 1) {
            pos[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++pos[static_cast<std::size_t>(j)];
    }
    return out;
}

int domain_dim(const DomainSpec& spec) {
    if (const auto* p = std::get_if<PolydiscSpec>(&spec)) return static_cast<int>(p->radii.size());
    if (const auto* a = std::get_if<AnnulusProductSpec>(&spec)) return static_cast<int>(a->outer.size());
    return 2;  // Hartogs triangle
}

std::string domain_label(const DomainSpec& spec) {
    if (std::holds_alternative<PolydiscSpec>(spec)) return "polydisc";
    if (std::holds_alternative<AnnulusProductSpec>(spec)) return "annulus-product";
    return "hartogs-triangle";
}

bool domain_contains(const DomainSpec& spec, std::span<const Complex> z) {
    if (static_cast<int>(z.size()) != domain_dim(spec)) return false;
    if (const auto* p = std::get_if<PolydiscSpec>(&spec)) {
        for (std::size_t j = 0; j < z.size(); ++j)
            if (!(std::abs(z[j]) < p->radii[j])) return false;
        return true;
    }
    if (const auto* a = std::get_if<AnnulusProductSpec>(&spec)) {
        for (std::size_t j = 0; j < z.size(); ++j) {
            double m = std::abs(z[j]);
            if (!(a->inner[j] < m && m < a->outer[j])) return false;
        }
        return true;
    }
    return std::abs(z[0]) < std::abs(z[1]) && std::abs(z[1]) < 1.0;
}

ReinhardtCover rational_cover(const DomainSpec& spec, int depth) {
    if (depth < 1) throw std::invalid_argument("rational_cover: depth must be >= 1");
    ReinhardtCover cover;
    cover.label = domain_label(spec);
    if (const auto* p = std::get_if<PolydiscSpec>(&spec)) {
        if (p->radii.empty()) throw std::invalid_argument("polydisc needs at least one radius");
        cover.cells.push_back(Polyannulus::polydisc(p->radii));
        return cover;
    }
    if (const auto* a = std::get_if<AnnulusProductSpec>(&spec)) {
        if (a->inner.size() != a->outer.size() || a->outer.empty())
            throw std::invalid_argument("annulus product needs matching inner/outer radius lists");
        std::vector<AxisRange> axes;
        for (std::size_t j = 0; j < a->outer.size(); ++j) axes.push_back(AxisRange::annulus(a->inner[j], a->outer[j]));
        cover.cells.push_back(Polyannulus(std::move(axes)));
        return cover;
    }
    // Hartogs triangle: cells { |z1| < j/2^d, j/2^d < |z2| < 1 - 1/2^d },
    // j = 1 .. 2^d - 2, all radii dyadic rationals.
    double step = std::ldexp(1.0, -depth);  // 2^-depth
    double top = 1.0 - step;
    long long cells = (1LL << depth) - 2;
    for (long long j = 1; j <= cells; ++j) {
        double b = static_cast<double>(j) * step;
        if (!(b < top)) break;
        cover.cells.push_back(Polyannulus({AxisRange::disc(b), AxisRange::annulus(b, top)}));
    }
    if (cover.cells.empty()) throw std::invalid_argument("hartogs-triangle cover needs depth >= 2");
    return cover;
}

}  // namespace lseries
