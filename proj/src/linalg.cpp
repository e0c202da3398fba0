#include "gcat/linalg.hpp"

#include <stdexcept>

namespace gcat {

int Fp::inv(int a) const {
    if (a % p == 0) throw std::domain_error("Fp::inv: zero has no inverse");
    // a^(p-2) mod p
    long long base = a % p;
    long long result = 1;
    int e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(result);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Rref rref(std::vector<std::vector<int>> rows, std::size_t cols, int p) {
    Fp field{p};
    Rref result;
    result.p = p;
    result.cols = cols;
    std::size_t nrows = rows.size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < nrows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < nrows && rows[sel][col] % p == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(rows[pivot_row], rows[sel]);
        int inv = field.inv(rows[pivot_row][col]);
        for (std::size_t c = col; c < cols; ++c)
            rows[pivot_row][c] = field.mul(rows[pivot_row][c], inv);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == pivot_row) continue;
            int factor = field.reduce(rows[r][col]);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[pivot_row][c]));
        }
        result.pivots.push_back(col);
        ++pivot_row;
    }
    rows.resize(pivot_row);
    result.rows = std::move(rows);
    return result;
}

void reduce_against(std::vector<int>& v, const Rref& r) {
    Fp field{r.p};
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        int factor = field.reduce(v[r.pivots[i]]);
        if (factor == 0) continue;
        for (std::size_t c = r.pivots[i]; c < r.cols; ++c)
            v[c] = field.sub(v[c], field.mul(factor, r.rows[i][c]));
    }
}

bool in_row_space(std::vector<int> v, const Rref& r) {
    reduce_against(v, r);
    for (int x : v)
        if (x % r.p != 0) return false;
    return true;
}

} // namespace gcat
