#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace modzeta {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int doublings = 0;
    std::size_t evaluations = 0;
};

// Composite Simpson with dyadic panel doubling until two successive composite
// values agree to rel_tol. Function values at old nodes are reused.
template <class F>
QuadResult simpson_refined(F&& f, double a, double b, double rel_tol = 1e-4,
                           int max_doublings = 12, int initial_panels = 8) {
    if (!(b > a)) throw std::invalid_argument("simpson_refined: empty interval");
    if (initial_panels < 2 || initial_panels % 2 != 0)
        throw std::invalid_argument("simpson_refined: initial_panels must be even and >= 2");

    std::size_t n = static_cast<std::size_t>(initial_panels);
    std::vector<double> vals(n + 1);
    double h = (b - a) / static_cast<double>(n);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(a + h * static_cast<double>(i));
    std::size_t evals = n + 1;

    auto composite = [&]() {
        double odd = 0.0, even = 0.0;
        for (std::size_t i = 1; i < n; i += 2) odd += vals[i];
        for (std::size_t i = 2; i < n; i += 2) even += vals[i];
        return h / 3.0 * (vals[0] + vals[n] + 4.0 * odd + 2.0 * even);
    };

    double prev = composite();
    double last_err = std::abs(prev);
    for (int d = 1; d <= max_doublings; ++d) {
        std::vector<double> next(2 * n + 1);
        for (std::size_t i = 0; i <= n; ++i) next[2 * i] = vals[i];
        h /= 2.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[2 * i + 1] = f(a + h * static_cast<double>(2 * i + 1));
        }
        evals += n;
        n *= 2;
        vals = std::move(next);

        const double cur = composite();
        last_err = std::abs(cur - prev);
        prev = cur;
        if (last_err <= rel_tol * std::max(std::abs(cur), 1e-300)) {
            return {cur, last_err, d, evals};
        }
    }
    return {prev, last_err, max_doublings, evals};
}

} // namespace modzeta
