#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace inaccess {

// Default tolerance for membership and consistency tests. Overridable per call.
inline constexpr double kDefaultTol = 1e-9;

// Integer power by repeated multiplication. Well-defined for negative bases,
// unlike std::pow, and exact in the number of roundings.
inline double ipow(double base, unsigned exp) {
    double result = 1.0;
    double acc = base;
    while (exp != 0) {
        if (exp & 1u) result *= acc;
        exp >>= 1u;
        if (exp != 0) acc *= acc;
    }
    return result;
}

// Sum in ascending order. Makes the result invariant under permutations of
// the input and keeps cancellation error low for mixed-sign data.
inline double sorted_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
}

inline double sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

inline double sum_squares(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

inline bool is_probability_vector(const std::vector<double>& p, double tol = kDefaultTol) {
    if (p.empty()) return false;
    double s = 0.0;
    for (double x : p) {
        if (x < -tol || x > 1.0 + tol) return false;
        s += x;
    }
    return std::abs(s - 1.0) <= tol;
}

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace inaccess
