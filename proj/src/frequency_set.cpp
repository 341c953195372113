#include "modzeta/frequency_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace modzeta {

FrequencySet::FrequencySet(Semigroup K) : source_(std::move(K)) {
    if (source_.elements.empty() || source_.elements.front() != 1)
        throw std::invalid_argument("FrequencySet: semigroup must contain 1");
    // membership is known up to the generated bound; a complete semigroup
    // (empty generator set) determines L everywhere
    xi_max_ = source_.complete_above_bound()
                  ? std::numeric_limits<double>::infinity()
                  : std::log(static_cast<double>(source_.bound));
    const auto& el = source_.elements;
    prefix_len_.resize(el.size() + 1, 0.0);
    prefix_inv_.resize(el.size() + 1, 0.0);
    for (std::size_t i = 0; i < el.size(); ++i) {
        const double n = static_cast<double>(el[i]);
        prefix_len_[i + 1] = prefix_len_[i] + std::log1p(1.0 / n);
        prefix_inv_[i + 1] = prefix_inv_[i] + 1.0 / n;
    }
}

double FrequencySet::total_measure() const { return prefix_len_.back(); }

// measure of L_+ cap (a, b) for 0 <= a < b: intervals [log n, log(n+1))
// intersecting (a,b) are the n in (e^a - 1, e^b); full intervals come from the
// prefix sums, the two boundary intervals are clipped individually.
double FrequencySet::measure_positive(double a, double b) const {
    if (!(b > a)) return 0.0;
    const auto& el = source_.elements;
    const double ea = std::exp(a), eb = std::exp(b);

    // first index with log(n+1) > a  <=>  n > e^a - 1
    const auto lo_it = std::upper_bound(el.begin(), el.end(),
                                        static_cast<std::uint64_t>(std::floor(ea - 1.0)));
    // last index with log n < b  <=>  n < e^b
    auto hi_it = std::lower_bound(el.begin(), el.end(),
                                  static_cast<std::uint64_t>(std::ceil(eb)));
    if (lo_it >= hi_it) return 0.0;
    const std::size_t lo = static_cast<std::size_t>(lo_it - el.begin());
    const std::size_t hi = static_cast<std::size_t>(hi_it - el.begin());  // exclusive

    double m = prefix_len_[hi] - prefix_len_[lo];
    // clip the first interval at a and the last at b
    const double first_lo = std::log(static_cast<double>(el[lo]));
    if (first_lo < a) m -= (a - first_lo);
    const double last_hi = std::log(static_cast<double>(el[hi - 1]) + 1.0);
    if (last_hi > b) m -= (last_hi - b);
    return std::max(m, 0.0);
}

double FrequencySet::measure_window(double xi, double delta) const {
    if (!(delta > 0.0)) throw std::invalid_argument("measure_window: delta must be > 0");
    const double a = xi - delta, b = xi;
    if (std::max(std::abs(a), std::abs(b)) > xi_max_ * (1.0 + 1e-12))
        throw std::out_of_range("measure_window: window extends beyond xi_max; "
                                "generate a larger semigroup");
    double m = 0.0;
    if (b > 0.0) m += measure_positive(std::max(a, 0.0), b);
    // negative part mirrors: |L cap (a, min(b,0))| = |L_+ cap (-min(b,0), -a)|
    if (a < 0.0) m += measure_positive(std::max(-b, 0.0), -a);
    return m;
}

std::vector<double> FrequencySet::local_density_deviation(double A,
                                                          std::span<const double> xi_list,
                                                          double delta) const {
    std::vector<double> out;
    out.reserve(xi_list.size());
    for (double xi : xi_list) out.push_back(measure_window(xi, delta) / delta - A);
    return out;
}

FrequencySet::PanejahMeasure FrequencySet::panejah_measure_inf(
    double delta, std::span<const double> xi_grid) const {
    if (xi_grid.empty()) throw std::invalid_argument("panejah_measure_inf: empty grid");
    PanejahMeasure out;
    out.inf_ratio = std::numeric_limits<double>::infinity();
    const auto& el = source_.elements;
    for (double xi : xi_grid) {
        PanejahRow row;
        row.xi = xi;
        row.measure = measure_window(xi, delta);
        const double ea = std::exp(xi - delta), eb = std::exp(xi);
        row.count_ratio = static_cast<double>(source_.count_between(ea, eb)) / eb;
        // sum of 1/k over elements with log k in (xi-delta, xi), i.e. k in (ea, eb)
        const auto lo = std::upper_bound(el.begin(), el.end(),
                                         static_cast<std::uint64_t>(std::floor(ea)));
        const auto hi = std::lower_bound(el.begin(), el.end(),
                                         static_cast<std::uint64_t>(std::ceil(eb)));
        row.inv_sum = prefix_inv_[static_cast<std::size_t>(hi - el.begin())] -
                      prefix_inv_[static_cast<std::size_t>(lo - el.begin())];
        out.inf_ratio = std::min(out.inf_ratio, row.measure / delta);
        out.rows.push_back(row);
    }
    return out;
}

} // namespace modzeta
