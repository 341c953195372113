#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "modzeta/semigroup.hpp"

namespace modzeta {

// L = union over n in K of (-log(n+1), -log n] u [log n, log(n+1)).
// Stored as K plus prefix sums of log(1+1/n) and 1/n, so window queries are
// two binary searches; no explicit float interval list.
class FrequencySet {
public:
    explicit FrequencySet(Semigroup K);

    const Semigroup& source() const { return source_; }
    double xi_max() const { return xi_max_; }   // log X

    // Lebesgue measure of L cap (xi - delta, xi); exact up to floating point.
    // Throws std::out_of_range when the window leaves [-xi_max, xi_max].
    double measure_window(double xi, double delta) const;

    // |L cap (xi-delta, xi)| / delta - A per xi.
    std::vector<double> local_density_deviation(double A, std::span<const double> xi_list,
                                                double delta) const;

    struct PanejahRow {
        double xi;
        double measure;      // |L cap (xi-delta, xi)|
        double count_ratio;  // pi_K(e^{xi-delta}, e^xi) / e^xi
        double inv_sum;      // sum of 1/k over log k in (xi-delta, xi)
    };
    struct PanejahMeasure {
        double inf_ratio;    // min over the grid of measure/delta
        std::vector<PanejahRow> rows;
    };
    // The rows carry the counting-ratio sandwich values: at every grid point
    // count_ratio <= inv_sum <= e^delta * count_ratio.
    PanejahMeasure panejah_measure_inf(double delta, std::span<const double> xi_grid) const;

    // Total measure of the positive part, sum of log(1+1/n) over K.
    double total_measure() const;

private:
    Semigroup source_;
    double xi_max_;
    std::vector<double> prefix_len_;  // prefix sums of log(1+1/n)
    std::vector<double> prefix_inv_;  // prefix sums of 1/n

    double measure_positive(double a, double b) const;  // 0 <= a <= b
};

} // namespace modzeta
