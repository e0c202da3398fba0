#pragma once

#include <cstdint>

namespace gcat {

/// Stirling number of the second kind S(m, n), by the recurrence
/// S(m, n) = n*S(m-1, n) + S(m-1, n-1).  Valid for m, n <= 20.
std::int64_t stirling2(int m, int n);

/// n * (n-1) * ... * (n-m+1); equals 1 when m = 0.
std::int64_t falling_factorial(int n, int m);

std::int64_t factorial(int n);

/// Integer power n^m (m >= 0).
std::int64_t ipow(std::int64_t n, int m);

} // namespace gcat
