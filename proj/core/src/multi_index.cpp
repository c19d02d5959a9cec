#include "lseries/multi_index.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace lseries {

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("multi-index dimension mismatch");
    std::vector<int> out(entries_);
    for (int j = 0; j < dim(); ++j) out[static_cast<std::size_t>(j)] += o[j];
    return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("multi-index dimension mismatch");
    std::vector<int> out(entries_);
    for (int j = 0; j < dim(); ++j) out[static_cast<std::size_t>(j)] -= o[j];
    return MultiIndex(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& a) {
    os << '(';
    for (int j = 0; j < a.dim(); ++j) {
        if (j) os << ',';
        os << a[j];
    }
    return os << ')';
}

int linf_norm(const MultiIndex& a) {
    int m = 0;
    for (int v : a) m = std::max(m, std::abs(v));
    return m;
}

long long total_degree(const MultiIndex& a) {
    long long s = 0;
    for (int v : a) s += v;
    return s;
}

bool is_nonnegative(const MultiIndex& a) {
    for (int v : a)
        if (v < 0) return false;
    return true;
}

double falling_factorial(long long a, int g) {
    double p = 1.0;
    for (int i = 0; i < g; ++i) p *= static_cast<double>(a - i);
    return p;
}

long long box_point_count(int box, int dim) {
    long long edge = 2LL * box + 1;
    long long c = 1;
    for (int j = 0; j < dim; ++j) c *= edge;
    return c;
}

namespace {

// Appends the shell {|alpha|inf == s} in lexicographic order.
void append_shell(std::vector<MultiIndex>& out, int s, int dim) {
    if (s == 0) {
        out.push_back(MultiIndex::zero(dim));
        return;
    }
    std::vector<int> cur(static_cast<std::size_t>(dim), -s);
    for (;;) {
        int m = 0;
        for (int v : cur) m = std::max(m, std::abs(v));
        if (m == s) out.push_back(MultiIndex(cur));
        int j = dim - 1;
        while (j >= 0 && cur[static_cast<std::size_t>(j)] == s) {
            cur[static_cast<std::size_t>(j)] = -s;
            --j;
        }
        if (j < 0) break;
        ++cur[static_cast<std::size_t>(j)];
    }
}

}  // namespace

std::vector<MultiIndex> box_points(int box, int dim) {
    if (box < 0) throw std::invalid_argument("box_points: box must be >= 0");
    if (dim < 1) throw std::invalid_argument("box_points: dim must be >= 1");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(box_point_count(box, dim)));
    for (int s = 0; s <= box; ++s) append_shell(out, s, dim);
    return out;
}

std::vector<MultiIndex> shell_points(int s, int dim) {
    if (s < 0) throw std::invalid_argument("shell_points: shell must be >= 0");
    if (dim < 1) throw std::invalid_argument("shell_points: dim must be >= 1");
    std::vector<MultiIndex> out;
    append_shell(out, s, dim);
    return out;
}

int box_index_bound(long long m, int dim) {
    if (m < 1) throw std::invalid_argument("box_index_bound: m must be >= 1");
    if (dim < 1) throw std::invalid_argument("box_index_bound: dim must be >= 1");
    int m1 = 0;
    for (;;) {
        // does (2(m1+1)+1)^dim still fit below m?
        long long edge = 2LL * (m1 + 1) + 1;
        long long p = 1;
        bool over = false;
        for (int j = 0; j < dim; ++j) {
            p *= edge;
            if (p > m) {
                over = true;
                break;
            }
        }
        if (over) return m1;
        ++m1;
    }
}

namespace {

void collect_orders(std::vector<MultiIndex>& out, std::vector<int>& cur, int pos, int k, int dim, bool total) {
    if (pos == dim) {
        out.push_back(MultiIndex(cur));
        return;
    }
    for (int g = 0; g <= k; ++g) {
        if (total) {
            int used = 0;
            for (int j = 0; j < pos; ++j) used += cur[static_cast<std::size_t>(j)];
            if (used + g > k) break;
        }
        cur[static_cast<std::size_t>(pos)] = g;
        collect_orders(out, cur, pos + 1, k, dim, total);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::vector<MultiIndex> total_degree_orders(int k, int dim) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(dim), 0);
    collect_orders(out, cur, 0, k, dim, /*total=*/true);
    return out;
}

std::vector<MultiIndex> box_orders(int k, int dim) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(dim), 0);
    collect_orders(out, cur, 0, k, dim, /*total=*/false);
    return out;
}

ShellEnumeration::ShellEnumeration(int dim) : dim_(dim), shells_built_(-1) {
    if (dim < 1) throw std::invalid_argument("ShellEnumeration: dim must be >= 1");
}

void ShellEnumeration::extend_one_shell() {
    int s = shells_built_ + 1;
    std::size_t before = cache_.size();
    append_shell(cache_, s, dim_);
    for (std::size_t j = before; j < cache_.size(); ++j) index_.emplace(cache_[j], j);
    shells_built_ = s;
}

const MultiIndex& ShellEnumeration::sigma(std::size_t j) {
    while (cache_.size() <= j) extend_one_shell();
    return cache_[j];
}

std::size_t ShellEnumeration::sigma_inverse(const MultiIndex& alpha) {
    if (alpha.dim() != dim_) throw std::invalid_argument("sigma_inverse: dimension mismatch");
    ensure_box(linf_norm(alpha));
    return index_.at(alpha);
}

void ShellEnumeration::ensure_box(int box) {
    while (shells_built_ < box) extend_one_shell();
}

}  // namespace lseries
