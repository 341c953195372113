// Test-only oracles, kept independent of the library's computation paths:
// brute-force semigroup membership by trial division, Euler-Maclaurin zeta
// references, a scan-line interval-measure routine, and a plain trapezoid
// quadrature for the operator cross-check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracles {

inline bool member_by_trial_division(std::uint64_t n,
                                     const std::vector<std::uint64_t>& Q) {
    if (n == 1) return true;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        if (!std::binary_search(Q.begin(), Q.end(), p)) return false;
        while (m % p == 0) m /= p;
    }
    return m == 1 || std::binary_search(Q.begin(), Q.end(), m);
}

inline std::vector<std::uint64_t> brute_force_semigroup(const std::vector<std::uint64_t>& Q,
                                                        std::uint64_t X) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= X; ++n)
        if (member_by_trial_division(n, Q)) out.push_back(n);
    return out;
}

// Euler-Maclaurin zeta for real s > 1; error far below 1e-15 on [1.2, 8].
inline double zeta_reference(double s) {
    constexpr int N = 24;
    double acc = 0.0;
    for (int n = 1; n < N; ++n) acc += std::pow(n, -s);
    acc += std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);
    static const double B2k[] = {1.0 / 6, -1.0 / 30, 1.0 / 42,
                                 -1.0 / 30, 5.0 / 66, -691.0 / 2730};
    static const double fact2k[] = {2, 24, 720, 40320, 3628800, 479001600};
    for (int k = 1; k <= 6; ++k) {
        double rising = 1.0;
        for (int j = 0; j <= 2 * k - 2; ++j) rising *= (s + j);
        acc += B2k[k - 1] / fact2k[k - 1] * rising * std::pow(N, -s - 2 * k + 1);
    }
    return acc;
}

// Measure of the union of [log n, log(n+1)) over n in K, intersected with
// (a, b), by explicit interval clipping.
inline double scanline_measure(const std::vector<std::uint64_t>& K, double a, double b) {
    double m = 0.0;
    for (auto n : K) {
        const double lo = std::log(static_cast<double>(n));
        const double hi = std::log(static_cast<double>(n) + 1.0);
        m += std::max(0.0, std::min(hi, b) - std::max(lo, a));
    }
    return m;
}

// Composite trapezoid on a uniform grid.
template <class F>
std::complex<double> trapezoid(F&& f, double a, double b, int panels) {
    std::complex<double> acc = 0.5 * (f(a) + f(b));
    const double h = (b - a) / panels;
    for (int i = 1; i < panels; ++i) acc += f(a + h * i);
    return acc * h;
}

} // namespace oracles
