#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "modzeta/primes.hpp"
#include "modzeta/selector.hpp"
#include "modzeta/trend.hpp"

namespace modzeta {

// K = { n <= X : every prime factor of n lies in Q }, sorted, 1 included as
// the empty product. Immutable after generation.
struct Semigroup {
    enum class Method { Sieve, Heap };

    PrimeSelector generator;
    std::uint64_t bound = 0;               // X
    std::vector<std::uint64_t> elements;   // strictly increasing, starts at 1
    Method method = Method::Sieve;

    // pi_K(x); requires 1 <= x <= bound (counting beyond the generated bound
    // is undefined). Monotone nondecreasing in x.
    std::uint64_t count(double x) const;

    // #{n in K : a < n <= b}
    std::uint64_t count_between(double a, double b) const;

    // True when K provably has no elements above `bound` (empty generator set).
    bool complete_above_bound() const;
};

// Marking sieve over 1..X when the generator set is dense; heap merge when Q
// restricted to [2,X] is small. Both agree with trial-division brute force.
Semigroup generate(const PrimeSelector& sel, std::uint64_t X, const PrimeSieve& sieve);

struct DensityReport {
    double A = 0.0;                 // asymptotic density, in [0,1]
    double euler_tail_bound = 0.0;  // certified bound on |log A_computed - log A|
    bool certified = false;
    bool divergent = false;         // complement prime sum diverges; A reported 0
    Trend complement_trend = Trend::Inconclusive;
    std::vector<std::pair<double, double>> empirical;  // (x, pi_K(x)/x)
};

// A = prod_{p in complement} (1 - 1/p). Exact (tail 0) whenever the complement
// has a finite support bound; otherwise partial products are scanned across
// decades and classified against the log log growth rate of sum 1/p.
DensityReport density(const PrimeSelector& sel, const PrimeSieve& sieve,
                      double precision, std::uint64_t empirical_bound = 1'000'000);

struct PanejahCheck {
    std::vector<std::pair<double, double>> ratios;  // (x, (pi_K(x)-pi_K(dx))/x)
    double min_top_half = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Finite surrogate for liminf_x (pi_K(x) - pi_K(delta x))/x > 0: the minimum
// over the top half of the sorted sample list must exceed `threshold`.
PanejahCheck panejah_check(const Semigroup& K, double delta,
                           std::span<const double> samples, double threshold = 1e-3);

} // namespace modzeta
