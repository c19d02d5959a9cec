#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <vector>

namespace lseries {

/// Point of Z^n, used both as a Laurent exponent and as a derivative order.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}
    MultiIndex(std::initializer_list<int> entries) : entries_(entries) {}

    static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0)); }

    int dim() const { return static_cast<int>(entries_.size()); }
    int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
    int& operator[](int j) { return entries_[static_cast<std::size_t>(j)]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const MultiIndex&) const = default;
    // lexicographic; this is also the intra-shell order of the enumeration
    auto operator<=>(const MultiIndex&) const = default;

    MultiIndex operator+(const MultiIndex& o) const;
    MultiIndex operator-(const MultiIndex& o) const;

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& a);

/// max_j |a_j|
int linf_norm(const MultiIndex& a);

/// sum of the entries (signed)
long long total_degree(const MultiIndex& a);

bool is_nonnegative(const MultiIndex& a);

/// a(a-1)...(a-g+1); the factor produced by g-fold differentiation of z^a.
/// falling_factorial(a, 0) == 1.
double falling_factorial(long long a, int g);

/// Number of lattice points with |alpha|inf <= box: (2*box+1)^dim.
long long box_point_count(int box, int dim);

/// All alpha with |alpha|inf <= box, listed shell by shell
/// (Q_0, then Q_1 minus Q_0, ...), lexicographic within each shell.
std::vector<MultiIndex> box_points(int box, int dim);

/// One shell {|alpha|inf == s} in lexicographic order.
std::vector<MultiIndex> shell_points(int s, int dim);

/// Largest m1 >= 0 with (2*m1+1)^dim <= m, found by exact integer search
/// (no floating-point root, so perfect powers land on the right side).
/// Requires m >= 1.
int box_index_bound(long long m, int dim);

/// Derivative orders gamma >= 0 with total degree <= k, lexicographic.
std::vector<MultiIndex> total_degree_orders(int k, int dim);

/// Derivative orders gamma >= 0 with max entry <= k, lexicographic.
std::vector<MultiIndex> box_orders(int k, int dim);

/// The bijection N -> Z^dim that lists Q_0, Q_1\Q_0, Q_2\Q_1, ... with
/// lexicographic order inside each shell.  The cache grows on demand;
/// warm it sequentially (ensure_box) before sharing across readers.
class ShellEnumeration {
public:
    explicit ShellEnumeration(int dim);

    int dim() const { return dim_; }

    /// alpha at position j; extends the cache as needed.
    const MultiIndex& sigma(std::size_t j);

    /// position of alpha; inverse of sigma.
    std::size_t sigma_inverse(const MultiIndex& alpha);

    /// Make positions for all of Q_box available.
    void ensure_box(int box);

    /// Number of cached positions.
    std::size_t size() const { return cache_.size(); }

    /// Read-only access without cache extension; j must be < size().
    const MultiIndex& at(std::size_t j) const { return cache_[j]; }

private:
    void extend_one_shell();

    int dim_;
    int shells_built_;  // highest complete shell, -1 if none
    std::vector<MultiIndex> cache_;
    std::map<MultiIndex, std::size_t> index_;
};

}  // namespace lseries
