#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modzeta/semigroup.hpp"
#include "modzeta/trend.hpp"

namespace modzeta {

// Weights for the summability scans. Values are clamped at zero:
// log log p < 0 for p = 2, and the underlying comparison lemma only needs
// f >= 1 for large arguments, so the clamp changes each sum by a finite
// amount and preserves its convergence class.
struct Weight {
    enum class Kind { LogLog, LogPow, OmegaCount } kind = Kind::LogLog;
    double exponent = 0.5;  // LogPow: (log n)^exponent

    static Weight loglog() { return {Kind::LogLog, 0.0}; }
    static Weight logpow(double e) { return {Kind::LogPow, e}; }
    static Weight omega() { return {Kind::OmegaCount, 0.0}; }

    // f(n); OmegaCount factorizes by trial division (intended for n <= ~1e7).
    double operator()(std::uint64_t n) const;
    std::string name() const;
};

struct SummabilityScan {
    Weight weight;
    std::vector<std::pair<double, double>> partial_sums;  // (P0, sum f(p)/p over complement)
    Trend verdict = Trend::Inconclusive;
};

// Partial sums of f(p)/p over the complement primes on the P0 grid, with the
// growth compared against log log P0.
SummabilityScan summability_scan(const PrimeSelector& sel, const PrimeSieve& sieve,
                                 const Weight& weight,
                                 std::span<const std::uint64_t> grid);

struct NormLadder {
    double q = 1.0;
    double T = 1.0;
    struct Rung {
        double delta;
        double norm;        // || psi_K(1 + delta + i.) ||_{L^q(-T,T)}
        double quad_error;  // quadrature refinement estimate
    };
    std::vector<Rung> rungs;
    bool stabilized = false;  // last two rungs within rel_stability
    double rel_stability = 0.05;
};

// L^q norms of psi_K on the delta ladder, composite Simpson with dyadic
// refinement until successive values differ by < 1e-4 relative.
NormLadder lq_norm_ladder(const Semigroup& K, double A, double q, double T,
                          std::span<const double> deltas,
                          std::optional<double> deviation = std::nullopt);

struct MalliavinResult {
    double lhs = 0.0;  // sum_{n in J, n <= X} f(n) n^-sigma
    double rhs = 0.0;  // (sum_{p in P, p <= X} f(p) p^-sigma) * exp(sum p^-sigma)
    std::uint64_t terms = 0;
    // rhs vanished while lhs did not (every generator weight clamped to zero);
    // the comparison is vacuous there and reported as such instead of failing.
    bool degenerate = false;
    bool holds(double C) const { return degenerate || lhs <= C * rhs; }
};

// Truncated two-sided comparison behind the prime/integer summability
// equivalence. `sel` selects the generating primes P of J. Subadditivity of f
// is spot-checked on random pairs n, m >= 8 with n m <= X; violations throw
// std::invalid_argument.
MalliavinResult malliavin_diagnostic(const PrimeSelector& sel, const PrimeSieve& sieve,
                                     const Weight& f, double sigma, std::uint64_t X,
                                     unsigned spot_checks = 64,
                                     std::uint64_t seed = 0x5eed);

} // namespace modzeta
