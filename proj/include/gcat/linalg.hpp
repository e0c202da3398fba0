#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gcat {

/// Arithmetic in the prime field F_p, p <= 2^16.  Residues are stored as
/// ints in [0, p).
struct Fp {
    int p;

    int reduce(long long x) const {
        long long r = x % p;
        return static_cast<int>(r < 0 ? r + p : r);
    }
    int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
    int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
    int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
    int neg(int a) const { return a == 0 ? 0 : p - a; }
    int inv(int a) const; // Fermat; throws std::domain_error on 0
    int div(int a, int b) const { return mul(a, inv(b)); }
};

bool is_prime(int p);

/// Rows over F_p in reduced row echelon form, pivots ascending.
struct Rref {
    int p = 2;
    std::size_t cols = 0;
    std::vector<std::vector<int>> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return rows.size(); }
};

/// Gaussian elimination to reduced row echelon form.  Zero rows are dropped;
/// the result is the canonical basis of the row space.
Rref rref(std::vector<std::vector<int>> rows, std::size_t cols, int p);

/// Reduces v against the echelon rows in place; v ends zero iff it lies in
/// the row space.
void reduce_against(std::vector<int>& v, const Rref& r);

bool in_row_space(std::vector<int> v, const Rref& r);

} // namespace gcat
