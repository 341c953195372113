#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modzeta {

// Finite-sample verdict about a nondecreasing partial-sum sequence.
// A desk-scale computation cannot take limits; these verdicts are trends.
enum class Trend { Convergent, Divergent, Inconclusive };

std::string to_string(Trend t);

struct TrendRule {
    // convergent: every increment at most shrink_factor times the previous one
    double shrink_factor = 0.5;
    // divergent: increments keep pace with the log log growth of the grid,
    // the reference rate of sum 1/p over all primes
    double divergent_min_rate = 0.15;
    double divergent_keep = 0.5;
    double zero_floor = 1e-12;
};

// partial_sums: (x_i, S(x_i)) with x_i strictly increasing, x_0 >= 3.
Trend classify_partial_sums(std::span<const std::pair<double, double>> partial_sums,
                            const TrendRule& rule = {});

} // namespace modzeta
