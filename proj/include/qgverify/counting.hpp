#pragma once

#include <stdexcept>
#include <vector>

#include "qgverify/numeric.hpp"

namespace qgv {

// Closed-form counting sequences, computed by their standard recursions.
// These are deliberately independent of the partition enumerators: the
// counting acceptance checks compare |enumerate(...)| against these values.

/// Catalan numbers via the convolution recursion C_0 = 1,
/// C_m = sum_i C_i * C_{m-1-i}.
inline Int catalan(int m) {
    if (m < 0) throw std::invalid_argument("catalan: negative index");
    std::vector<Int> c(static_cast<size_t>(m) + 1);
    c[0] = 1;
    for (int n = 1; n <= m; ++n) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += c[i] * c[n - 1 - i];
        c[static_cast<size_t>(n)] = s;
    }
    return c[static_cast<size_t>(m)];
}

/// Motzkin numbers: M_0 = M_1 = 1, M_n = M_{n-1} + sum_i M_i * M_{n-2-i}.
inline Int motzkin(int n) {
    if (n < 0) throw std::invalid_argument("motzkin: negative index");
    std::vector<Int> m(static_cast<size_t>(n) + 1);
    m[0] = 1;
    if (n >= 1) m[1] = 1;
    for (int j = 2; j <= n; ++j) {
        Int s = m[j - 1];
        for (int i = 0; i <= j - 2; ++i) s += m[i] * m[j - 2 - i];
        m[static_cast<size_t>(j)] = s;
    }
    return m[static_cast<size_t>(n)];
}

/// Bell numbers via the Bell triangle.
inline Int bell(int n) {
    if (n < 0) throw std::invalid_argument("bell: negative index");
    if (n == 0) return 1;
    std::vector<Int> row{1};
    for (int i = 1; i < n; ++i) {
        std::vector<Int> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const Int& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.back();
}

/// (2m-1)!! = 1 * 3 * ... * (2m-1); the number of pairings of 2m points.
inline Int double_factorial_odd(int m) {
    if (m < 0) throw std::invalid_argument("double_factorial_odd: negative index");
    Int r = 1;
    for (int i = 3; i <= 2 * m - 1; i += 2) r *= i;
    return r;
}

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative index");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace qgv
