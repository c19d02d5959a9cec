#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "lseries/geometry.hpp"
#include "lseries/multi_index.hpp"
#include "lseries/test_functions.hpp"

namespace lseries {

/// Laurent coefficients over the box |alpha|inf <= box, computed on one
/// torus.  values are stored in enumeration order (shell by shell,
/// lexicographic within shells).
class CoefficientTable {
public:
    CoefficientTable() = default;
    CoefficientTable(int box, std::vector<double> torus_radii, int grid, std::vector<Complex> values);

    int dim() const { return static_cast<int>(torus_radii_.size()); }
    int box() const { return box_; }
    int grid() const { return grid_; }
    const std::vector<double>& torus_radii() const { return torus_radii_; }
    const std::vector<Complex>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    double aliasing_bound() const { return aliasing_bound_; }
    void set_aliasing_bound(double b) { aliasing_bound_ = b; }

    bool in_box(const MultiIndex& alpha) const;
    std::size_t index_of(const MultiIndex& alpha) const;  // domain error if outside the box
    const MultiIndex& exponent_at(std::size_t j) const { return exponents_[j]; }
    const Complex& at(const MultiIndex& alpha) const { return values_[index_of(alpha)]; }
    const Complex& at(std::size_t j) const { return values_[j]; }

private:
    int box_ = 0;
    int grid_ = 0;
    double aliasing_bound_ = 0.0;
    std::vector<double> torus_radii_;
    std::vector<Complex> values_;
    std::vector<MultiIndex> exponents_;
    std::map<MultiIndex, std::size_t> index_;
};

/// Trapezoid quadrature of the parametrized Cauchy integral on the torus
/// {|z_j| = radii_j}: an m-point DFT per axis (radix-2 when m is a power
/// of two), then division by radii^alpha.  The result equals
/// c_alpha + sum_{t != 0} c_{alpha + t m} radii^{t m}  (aliasing only).
/// Requires m >= 2*box+1 and the torus strictly inside f's validity.
CoefficientTable coefficients_dft(const AnalyticFunction& f, const std::vector<double>& radii, int m, int box,
                                  int workers = 1);

/// Empirical aliasing control: max over the box of |table_m - table_2m|.
double aliasing_estimate(const AnalyticFunction& f, const std::vector<double>& radii, int m, int box,
                         int workers = 1);

/// coefficients_dft with the aliasing bound filled in (one extra 2m run).
CoefficientTable coefficients_with_aliasing(const AnalyticFunction& f, const std::vector<double>& radii, int m,
                                            int box, int workers = 1);

/// Residual of the coefficient/derivative shift identity at z:
/// | D^gamma(c_alpha(f) z^alpha)  -  c_{alpha-gamma}(D^gamma f) z^{alpha-gamma} |,
/// left side from the coefficient oracle and the monomial closed form,
/// right side from quadrature applied to the derivative function on the
/// torus through z.
double derivative_shift_residual(const AnalyticFunction& f, const MultiIndex& gamma, const MultiIndex& alpha,
                                 std::span<const Complex> z, int m = 64);

/// Geometric mean of the annulus radii per axis, outer/2 on disc axes.
std::vector<double> default_torus_radii(const Polyannulus& P);

/// Smallest power of two >= max(2*box+1, 32).
int default_grid(int box);

/// Table coefficient with the disc-axis convention applied: exponents
/// that are negative on a disc axis of P must vanish analytically, so the
/// stored quadrature noise is replaced by zero after checking it is below
/// the aliasing bound (data inconsistency error otherwise).
Complex effective_coefficient(const CoefficientTable& table, const Polyannulus& P, const MultiIndex& alpha);

}  // namespace lseries
