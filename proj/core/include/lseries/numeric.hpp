#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>

#include "lseries/multi_index.hpp"

namespace lseries {

using Complex = std::complex<double>;

/// z^e for integer e, by repeated squaring; 0^0 == 1, 0^negative is inf.
inline Complex pow_int(Complex z, long long e) {
    if (e == 0) return Complex(1.0, 0.0);
    bool neg = e < 0;
    unsigned long long k = neg ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Complex base = z, acc(1.0, 0.0);
    while (k) {
        if (k & 1ULL) acc *= base;
        base *= base;
        k >>= 1;
    }
    return neg ? Complex(1.0, 0.0) / acc : acc;
}

inline double pow_int(double x, long long e) {
    if (e == 0) return 1.0;
    bool neg = e < 0;
    unsigned long long k = neg ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    double base = x, acc = 1.0;
    while (k) {
        if (k & 1ULL) acc *= base;
        base *= base;
        k >>= 1;
    }
    return neg ? 1.0 / acc : acc;
}

/// z^alpha = prod_j z_j^(alpha_j)
inline Complex pow_multi(std::span<const Complex> z, const MultiIndex& alpha) {
    Complex p(1.0, 0.0);
    for (int j = 0; j < alpha.dim(); ++j) p *= pow_int(z[static_cast<std::size_t>(j)], alpha[j]);
    return p;
}

inline double pow_multi(std::span<const double> x, const MultiIndex& alpha) {
    double p = 1.0;
    for (int j = 0; j < alpha.dim(); ++j) p *= pow_int(x[static_cast<std::size_t>(j)], alpha[j]);
    return p;
}

inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

}  // namespace lseries
