#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lseries/coefficients.hpp"
#include "lseries/geometry.hpp"
#include "lseries/multi_index.hpp"
#include "lseries/seminorms.hpp"
#include "lseries/test_functions.hpp"

namespace lseries {

/// sum over S of c_alpha z^alpha, accumulated in enumeration order for
/// reproducibility.  Every index must lie in the table's box.
Complex partial_sum(const CoefficientTable& table, const std::vector<MultiIndex>& S, std::span<const Complex> z);

/// Exact order-k box seminorm of the single term c_alpha e_alpha on P,
/// with the disc-axis zero convention applied to the table value.
double term_seminorm(const CoefficientTable& table, const Polyannulus& P, const MultiIndex& alpha, int k);

/// term_seminorm for every table entry, in enumeration order.
std::vector<double> term_seminorms(const CoefficientTable& table, const Polyannulus& P, int k);

struct TailEntry {
    std::size_t j;
    double term;  // ||c_sigma(j) e_sigma(j)||' at order k, exact
    double tail;  // sum of the terms after position j, within the box
};

/// Per-term seminorms in enumeration order with running tails, plus the
/// shell sandwich between prefix sums and box-restricted sums:
///   boxsum(M1(m)) <= prefix(m) <= boxsum(M1(m)+1),  M1(m) = box_index_bound(m).
/// The comparisons use <=; equality cases (possible with zero terms or at
/// exact box boundaries) are counted, not failed.
struct TailProfile {
    int order = 0;
    std::vector<TailEntry> entries;
    bool sandwich_ok = true;
    std::size_t sandwich_equalities = 0;
    std::optional<double> beyond_box_bound;  // oracle tail estimate past the box, when known

    double tail_at(std::size_t m) const { return entries[m].tail; }
};
TailProfile tail_seminorm_sum(const CoefficientTable& table, const Polyannulus& P, int k,
                              std::optional<double> beyond_box_bound = {});

/// Oracle bound on the seminorm tail past the table's box: the exact
/// term seminorms of the oracle coefficients over the shells
/// (box, box+extra].  Needs a coefficient oracle for f.
double oracle_beyond_box_bound(const AnalyticFunction& f, const Polyannulus& P, int k, int box, int extra_shells = 60);

/// Sampled order-k box seminorm of f minus its box-N partial sum, for
/// every N = 0..table.box() in one sweep.
std::vector<double> box_partial_sum_error_profile(const AnalyticFunction& f, const CoefficientTable& table,
                                                  const Polyannulus& P, int k, SamplingSpec spec = {});

/// Single entry of the profile above.
double box_partial_sum_error(const AnalyticFunction& f, const CoefficientTable& table, int N, const Polyannulus& P,
                             int k, SamplingSpec spec = {});

struct NetCauchyCheck {
    bool reachable = true;             // false: requested epsilon needs a larger box
    bool beyond_box_verified = false;  // an oracle bound past the box was supplied
    std::size_t threshold_index = 0;   // N0, as a position in the enumeration
    int threshold_shell = 0;           // |sigma(N0)|inf
    double tail_at_threshold = 0.0;
    double epsilon = 0.0;
    int sets_checked = 0;
    int violations = 0;          // random pairs whose certified bound reached epsilon
    int sampled_violations = 0;  // sampled seminorm of a pair difference above its certified bound
    double max_pair_bound = 0.0;
};

/// Finds the smallest N0 with tail(N0) < epsilon/2 and certifies, for
/// random finite index sets J, K containing {sigma(0..N0)}, that
/// ||sum_J - sum_K|| <= sum over J\I plus sum over K\I < epsilon, the
/// sums being exact term seminorms.
NetCauchyCheck net_cauchy_check(const CoefficientTable& table, const Polyannulus& P, int k, double epsilon,
                                std::uint64_t seed, int random_sets = 100,
                                std::optional<double> beyond_box_bound = {});

struct RearrangementCheck {
    int trials = 0;
    double max_full_prefix_discrepancy = 0.0;  // reassociation-only difference of full sums
    int bound_violations = 0;                  // tau-prefixes past the covering point outside 2*tail(N0)
    std::size_t threshold_index = 0;
    double tail_at_threshold = 0.0;
    double epsilon = 0.0;
};

/// Random rearrangements tau of the box terms: the full tau-order sum
/// must match the full enumeration-order sum up to floating reassociation
/// (measured as a sampled order-k seminorm), and once a tau-prefix covers
/// {sigma(0..N0)} the missing terms' exact seminorm sum stays within
/// 2*tail(N0).
RearrangementCheck permuted_convergence_check(const CoefficientTable& table, const Polyannulus& P, int k, int trials,
                                              std::uint64_t seed, double epsilon = 1e-6,
                                              SamplingSpec spec = {8, 8});

}  // namespace lseries
