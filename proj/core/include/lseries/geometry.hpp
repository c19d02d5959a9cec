#pragma once

#include <complex>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace lseries {

using Complex = std::complex<double>;

enum class AxisKind { disc, annulus };

/// One coordinate of a polyannulus: either the disc |z| < outer or the
/// annulus inner < |z| < outer.
struct AxisRange {
    AxisKind kind = AxisKind::disc;
    double inner = 0.0;  // 0 for disc axes
    double outer = 1.0;

    static AxisRange disc(double outer);
    static AxisRange annulus(double inner, double outer);

    bool contains(double modulus) const;  // open interval
    bool contains_closure(double modulus, double rel_tol = 1e-9) const;

    double closure_min() const { return kind == AxisKind::disc ? 0.0 : inner; }
    double closure_max() const { return outer; }
};

/// Product of per-axis annuli/discs.
class Polyannulus {
public:
    Polyannulus() = default;
    explicit Polyannulus(std::vector<AxisRange> axes) : axes_(std::move(axes)) {}

    static Polyannulus polydisc(const std::vector<double>& radii);

    int dim() const { return static_cast<int>(axes_.size()); }
    const AxisRange& axis(int j) const { return axes_[static_cast<std::size_t>(j)]; }
    const std::vector<AxisRange>& axes() const { return axes_; }

    bool contains(std::span<const Complex> z) const;
    bool contains_closure(std::span<const Complex> z, double rel_tol = 1e-9) const;
    bool contains_radii(std::span<const double> radii) const;

    std::string describe() const;

private:
    std::vector<AxisRange> axes_;
};

/// Componentwise modulus (|z_1|, ..., |z_n|).
std::vector<double> shadow(std::span<const Complex> z);

/// Deterministic grid on the closed shadow of P: res points per axis,
/// both endpoints included.  Returns res^dim radius tuples in
/// lexicographic order of the per-axis grid positions.
std::vector<std::vector<double>> sample_shadow(const Polyannulus& P, int res);

struct PolydiscSpec {
    std::vector<double> radii;
};
struct AnnulusProductSpec {
    std::vector<double> inner;
    std::vector<double> outer;
};
struct HartogsTriangleSpec {};

/// Built-in Reinhardt domain descriptors accepted by rational_cover.
using DomainSpec = std::variant<PolydiscSpec, AnnulusProductSpec, HartogsTriangleSpec>;

int domain_dim(const DomainSpec& spec);
std::string domain_label(const DomainSpec& spec);

/// Membership test for the built-in domain itself.
bool domain_contains(const DomainSpec& spec, std::span<const Complex> z);

struct ReinhardtCover {
    std::string label;
    std::vector<Polyannulus> cells;
};

/// A finite polyannulus cover of the built-in domain, monotone in depth:
/// every depth-d cell is contained in some depth-(d+1) cell and the union
/// exhausts the domain as depth grows.  Polydiscs and annulus products
/// are already polyannuli and yield a single cell at every depth.  The
/// Hartogs triangle  |z1| < |z2| < 1  is covered by dyadic-radius cells
/// { |z1| < j/2^d,  j/2^d < |z2| < 1 - 1/2^d }.
ReinhardtCover rational_cover(const DomainSpec& spec, int depth);

}  // namespace lseries
