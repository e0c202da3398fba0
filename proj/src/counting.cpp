#include "gcat/counting.hpp"

#include <stdexcept>
#include <vector>

namespace gcat {

std::int64_t stirling2(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("stirling2: negative argument");
    if (m > 20 || n > 20) throw std::invalid_argument("stirling2: argument too large");
    if (n > m) return 0;
    // table[j] holds S(i, j) for the current row i
    std::vector<std::int64_t> table(static_cast<std::size_t>(n) + 1, 0);
    table[0] = 1;
    for (int i = 1; i <= m; ++i) {
        for (int j = n; j >= 1; --j)
            table[static_cast<std::size_t>(j)] =
                j * table[static_cast<std::size_t>(j)] + table[static_cast<std::size_t>(j - 1)];
        table[0] = 0;
    }
    return table[static_cast<std::size_t>(n)];
}

std::int64_t falling_factorial(int n, int m) {
    if (m < 0) throw std::invalid_argument("falling_factorial: negative m");
    std::int64_t r = 1;
    for (int i = 0; i < m; ++i) r *= (n - i);
    return r;
}

std::int64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: out of range");
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::int64_t ipow(std::int64_t n, int m) {
    if (m < 0) throw std::invalid_argument("ipow: negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < m; ++i) r *= n;
    return r;
}

} // namespace gcat
