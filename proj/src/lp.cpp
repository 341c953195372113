#include "modzeta/lp.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "modzeta/quadrature.hpp"
#include "modzeta/zeta.hpp"

namespace modzeta {

namespace {

// number of prime factors with multiplicity, trial division
double omega_count(std::uint64_t n) {
    double c = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) { n /= p; c += 1; }
    }
    if (n > 1) c += 1;
    return c;
}

} // namespace

double Weight::operator()(std::uint64_t n) const {
    if (n <= 1) return 0.0;
    switch (kind) {
        case Kind::LogLog: {
            const double l = std::log(static_cast<double>(n));
            return std::max(0.0, std::log(l));
        }
        case Kind::LogPow:
            return std::pow(std::log(static_cast<double>(n)), exponent);
        case Kind::OmegaCount:
            return omega_count(n);
    }
    return 0.0;
}

std::string Weight::name() const {
    switch (kind) {
        case Kind::LogLog: return "loglog";
        case Kind::LogPow: return "logpow:" + std::to_string(exponent);
        case Kind::OmegaCount: return "omega";
    }
    return {};
}

SummabilityScan summability_scan(const PrimeSelector& sel, const PrimeSieve& sieve,
                                 const Weight& weight,
                                 std::span<const std::uint64_t> grid) {
    if (grid.size() < 3)
        throw std::invalid_argument("summability_scan: need at least 3 grid points");
    std::vector<std::uint64_t> g(grid.begin(), grid.end());
    std::sort(g.begin(), g.end());
    if (g.back() > sieve.bound())
        throw std::out_of_range("summability_scan: grid beyond sieve range");

    const auto complement = sel.complement(sieve);
    SummabilityScan scan;
    scan.weight = weight;
    double sum = 0.0;
    std::size_t idx = 0;
    for (auto p0 : g) {
        while (idx < complement.size() && complement[idx] <= p0) {
            const auto p = complement[idx];
            sum += weight(p) / static_cast<double>(p);
            ++idx;
        }
        scan.partial_sums.emplace_back(static_cast<double>(p0), sum);
    }
    scan.verdict = classify_partial_sums(scan.partial_sums);
    return scan;
}

NormLadder lq_norm_ladder(const Semigroup& K, double A, double q, double T,
                          std::span<const double> deltas,
                          std::optional<double> deviation) {
    if (!(q >= 1.0)) throw std::invalid_argument("lq_norm_ladder: q must be >= 1");
    if (!(T > 0.0)) throw std::invalid_argument("lq_norm_ladder: T must be > 0");
    if (deltas.empty()) throw std::invalid_argument("lq_norm_ladder: empty delta ladder");

    NormLadder ladder;
    ladder.q = q;
    ladder.T = T;
    for (double delta : deltas) {
        if (!(delta > 0.0)) throw std::invalid_argument("lq_norm_ladder: delta must be > 0");
        auto integrand = [&](double t) {
            const auto psi = psi_K(K, A, {1.0 + delta, t}, 1e-8, deviation);
            return std::pow(std::abs(psi.value), q);
        };
        const auto quad = simpson_refined(integrand, -T, T, 1e-4, 12, 16);
        NormLadder::Rung rung;
        rung.delta = delta;
        rung.norm = std::pow(quad.value, 1.0 / q);
        // d(x^(1/q)) = x^(1/q-1)/q dx
        rung.quad_error = quad.value > 0.0
            ? std::pow(quad.value, 1.0 / q - 1.0) / q * quad.error_estimate
            : 0.0;
        ladder.rungs.push_back(rung);
    }
    if (ladder.rungs.size() >= 2) {
        const double a = ladder.rungs[ladder.rungs.size() - 2].norm;
        const double b = ladder.rungs.back().norm;
        ladder.stabilized = std::abs(b - a) <= ladder.rel_stability * std::max(a, 1e-300);
    }
    return ladder;
}

MalliavinResult malliavin_diagnostic(const PrimeSelector& sel, const PrimeSieve& sieve,
                                     const Weight& f, double sigma, std::uint64_t X,
                                     unsigned spot_checks, std::uint64_t seed) {
    if (!(sigma > 1.0)) throw std::domain_error("malliavin_diagnostic: sigma must be > 1");
    if (X < 1) throw std::invalid_argument("malliavin_diagnostic: X must be >= 1");
    if (sieve.bound() < X)
        throw std::invalid_argument("malliavin_diagnostic: sieve bound below X");

    const auto J = generate(sel, X, sieve);

    // subadditivity spot-check on pairs with both factors >= 8: the comparison
    // lemma only requires f(n) >= 1 eventually, and the clamped weights are
    // genuinely superadditive on tiny arguments (f(16) > 2 f(4) for loglog)
    std::mt19937_64 rng(seed);
    const auto& el = J.elements;
    std::vector<std::uint64_t> big;
    for (auto n : el)
        if (n >= 8) big.push_back(n);
    if (big.size() >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, big.size() - 1);
        for (unsigned i = 0; i < spot_checks; ++i) {
            const auto n = big[pick(rng)];
            const auto m = big[pick(rng)];
            if (n > X / m) continue;
            if (f(n * m) > f(n) + f(m) + 1e-9)
                throw std::invalid_argument(
                    "malliavin_diagnostic: weight not subadditive at n=" + std::to_string(n) +
                    ", m=" + std::to_string(m));
        }
    }

    MalliavinResult out;
    for (auto n : el) {
        out.lhs += f(n) * std::pow(static_cast<double>(n), -sigma);
    }
    double prime_weighted = 0.0, prime_plain = 0.0;
    for (auto p : sel.selected(sieve)) {
        if (p > X) break;
        const double ps = std::pow(static_cast<double>(p), -sigma);
        prime_weighted += f(p) * ps;
        prime_plain += ps;
    }
    out.rhs = prime_weighted * std::exp(prime_plain);
    out.terms = el.size();
    out.degenerate = out.rhs == 0.0 && out.lhs > 0.0;
    return out;
}

} // namespace modzeta
