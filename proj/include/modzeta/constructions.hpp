#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "modzeta/primes.hpp"
#include "modzeta/selector.hpp"
#include "modzeta/trend.hpp"

namespace modzeta {

// Removed primes of the 6a construction restricted to [2, bound]:
// P = primes in the union of (delta x_k, x_k), x_k = base^(ratio^k).
// Intervals reaching past `bound` are dropped (desk-scale truncation).
std::vector<std::uint64_t> construction_6a_removed(const Construction6aParams& p,
                                                   const PrimeSieve& sieve,
                                                   std::uint64_t bound);

// Removed primes of the 6b quota construction restricted to [2, bound].
std::vector<std::uint64_t> construction_6b_removed(const Construction6bParams& p,
                                                   const PrimeSieve& sieve,
                                                   std::uint64_t bound);

struct Construction6aReport {
    PrimeSelector selector;                    // Q = P \ removed
    std::vector<std::pair<double, double>> intervals;       // kept (delta x_k, x_k)
    int intervals_dropped = 0;                 // beyond the sieve range
    std::vector<std::uint64_t> removed;        // P
    // (x_k, sum over p in (delta x_k, x_k) of log p / p): bounded below, so the
    // window criterion for a prime number theorem on Q fails on these x.
    std::vector<std::pair<double, double>> interval_logp_sums;
    // (x, sum over p in P, p <= x of 1/p): convergent trend, so the density of
    // the semigroup of Q stays positive.
    std::vector<std::pair<double, double>> inv_partial_sums;
    Trend inv_trend = Trend::Inconclusive;
};

Construction6aReport construct_6a(const Construction6aParams& p, std::uint64_t X,
                                  const PrimeSieve& sieve);

struct Construction6bReport {
    struct QuotaRow {
        int k;
        std::uint64_t quota;
        std::uint64_t available;
        std::uint64_t taken;
    };
    struct WindowRow {
        double x;
        double sum;        // sum over p in P cap (delta x, x) of log p / p
        double reference;  // 1 / log x
    };
    PrimeSelector selector;  // Q
    std::vector<QuotaRow> quotas;
    std::vector<std::uint64_t> removed;  // P
    std::vector<std::pair<double, double>> inv_partial_sums;  // divergent trend
    Trend inv_trend = Trend::Inconclusive;
    // empirical ratio of the 1/p increments to sum 1/(k log k) per decade;
    // the construction promises agreement only up to an unspecified constant
    std::vector<double> increment_ratio;
    std::vector<WindowRow> window_sums;  // decay like <= C / log x
    double delta = 0.5;
};

Construction6bReport construct_6b(const Construction6bParams& p, const PrimeSieve& sieve,
                                  double delta = 0.5,
                                  std::span<const double> window_samples = {});

// sum_{p <= x} log p / p - log x; stays in a bounded band across decades.
double mertens_sum(double x, const PrimeSieve& sieve);

struct PntReport {
    struct Row {
        double x;
        double pi_ratio;    // pi_Q(x) log x / x, -> 1 iff PNT for Q
        double window_sum;  // sum over complement primes in (delta x, x) of log p/p
    };
    std::vector<Row> rows;
    Trend window_trend = Trend::Inconclusive;  // convergent trend = window sums -> 0
    bool pnt_pass = false;
};

// Window criterion: PNT holds for Q iff the complement window sums vanish.
// The verdict is the trend rule applied to the window sums (decreasing toward
// zero), plus the pi_Q ratio reported as data.
PntReport pnt_check(const PrimeSelector& Q, const PrimeSieve& sieve, double delta,
                    std::span<const double> x_samples);

} // namespace modzeta
