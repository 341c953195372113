#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modzeta/semigroup.hpp"

namespace modzeta {

struct EvalResult {
    std::complex<double> value{0.0, 0.0};
    double truncation_bound = 0.0;  // certified when `certified`, estimated otherwise
    std::uint64_t terms_used = 0;
    bool certified = true;
    bool divergent = false;
};

// Cutoff N with integral tail bound sum_{n>N} n^-sigma <= N^(1-sigma)/(sigma-1)
// <= tol. The bound runs over all of N, conservative for sparse K. Returns +inf
// as a double if it overflows.
double direct_sum_cutoff(double sigma, double tol);

// zeta_K(s) = sum_{n in K} n^-s by direct summation, sigma > 1. Throws
// std::domain_error at sigma <= 1 and insufficient_semigroup when the cutoff
// exceeds K.bound.
EvalResult zeta_K(const Semigroup& K, std::complex<double> s, double tol);

// Streaming variant: enumerates K lazily from the selector (trial division by
// the finite complement, or heap merge for a finite generator list) so the
// cutoff is not limited by a stored semigroup. Unsupported selector kinds
// throw std::invalid_argument.
EvalResult zeta_K_lazy(const PrimeSelector& sel, const PrimeSieve& sieve,
                       std::complex<double> s, double tol);

// Partial Euler product over the complement primes, prod (1 - p^-s)^-1.
// Exact when the complement support is finite and covered by the sieve; at
// sigma = 1 with an unbounded complement the product is scanned and flagged
// divergent instead of throwing.
EvalResult zeta_J_euler(const PrimeSelector& sel, const PrimeSieve& sieve,
                        std::complex<double> s, double tol);

// Density-corrected evaluation: sums the stored elements and replaces the tail
// by A * B^(1-s)/(s-1), B = X + 1/2. The remainder is an Abel-summation bound
//   |R| <= D * B^-sigma * (1 + |s|/sigma),
// where D >= sup_{u >= B} |pi_K(u) - A u|. With a rigorous `deviation` D the
// result is certified (D = 1 for K = N and K = odds; D <= prod F for a finite
// exclude list F); otherwise D is estimated from the generated range and the
// result is marked uncertified. This is what makes evaluation near sigma = 1
// feasible: the direct cutoff (sigma-1ceil tol)^(-1/(sigma-1)) is astronomical
// for sigma - 1 <= 0.1.
EvalResult zeta_K_corrected(const Semigroup& K, double A, std::complex<double> s,
                            std::optional<double> deviation = std::nullopt);

// psi_K(s) = zeta_K(s)/s - A/(s-1). Uses the certified direct route when the
// cutoff fits the generated bound, the density-corrected route otherwise.
// Throws std::domain_error at s = 1.
EvalResult psi_K(const Semigroup& K, double A, std::complex<double> s, double tol,
                 std::optional<double> deviation = std::nullopt);

struct ReZetaRow {
    double t;
    double re, im;        // zeta_K(1 + delta + it)
    double poisson;       // A * delta / (delta^2 + t^2)
    double remainder;     // re - poisson
    double bound;
};

// Re zeta_K on the horizontal line sigma = 1 + delta, split into the Poisson
// term and the remainder.
std::vector<ReZetaRow> re_zeta_line(const Semigroup& K, double A, double delta,
                                    std::span<const double> t_grid,
                                    std::optional<double> deviation = std::nullopt);

// Standard delta ladder used by boundary-approach experiments.
std::vector<double> default_delta_ladder();

} // namespace modzeta
