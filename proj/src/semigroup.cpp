#include "modzeta/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "modzeta/errors.hpp"

namespace modzeta {

namespace {

// Generator sets at most this large go through the heap merge; everything
// denser marks a sieve over 1..X.
constexpr std::size_t kHeapGeneratorLimit = 64;

std::vector<std::uint64_t> generate_by_marking(const std::vector<std::uint64_t>& removed,
                                               std::uint64_t X) {
    std::vector<bool> alive(X + 1, true);
    alive[0] = false;
    for (auto p : removed) {
        for (std::uint64_t m = p; m <= X; m += p) alive[m] = false;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= X; ++n)
        if (alive[n]) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> generate_by_heap(const std::vector<std::uint64_t>& gens,
                                            std::uint64_t X) {
    // classic smooth-number merge; (value, index of the smallest generator
    // allowed next) avoids duplicates
    using Node = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;
    heap.emplace(1, 0);
    std::vector<std::uint64_t> out;
    while (!heap.empty()) {
        const auto [v, lo] = heap.top();
        heap.pop();
        out.push_back(v);
        for (std::size_t i = lo; i < gens.size(); ++i) {
            const std::uint64_t p = gens[i];
            if (v > X / p) break;  // overflow-safe v * p > X
            heap.emplace(v * p, i);
        }
    }
    return out;
}

} // namespace

std::uint64_t Semigroup::count(double x) const {
    if (x < 1.0) throw std::invalid_argument("Semigroup::count: x must be >= 1");
    if (x > static_cast<double>(bound))
        throw std::out_of_range("Semigroup::count: x beyond generated bound");
    const auto limit = static_cast<std::uint64_t>(std::floor(x));
    auto it = std::upper_bound(elements.begin(), elements.end(), limit);
    return static_cast<std::uint64_t>(it - elements.begin());
}

std::uint64_t Semigroup::count_between(double a, double b) const {
    if (b <= a) return 0;
    return count(b) - (a < 1.0 ? 0 : count(a));
}

bool Semigroup::complete_above_bound() const {
    switch (generator.kind()) {
        case SelectorKind::IncludeList:
        case SelectorKind::FromFile:
            return generator.list().empty() ||
                   generator.list().front() > bound;
        default:
            return false;
    }
}

Semigroup generate(const PrimeSelector& sel, std::uint64_t X, const PrimeSieve& sieve) {
    if (X < 1) throw std::invalid_argument("generate: bound must be >= 1");
    if (sieve.bound() < X)
        throw std::invalid_argument("generate: sieve bound below semigroup bound");

    Semigroup K;
    K.generator = sel;
    K.bound = X;

    // count generators <= X without materializing the full list when dense
    std::vector<std::uint64_t> gens;
    bool small_generator_set = false;
    switch (sel.kind()) {
        case SelectorKind::IncludeList:
        case SelectorKind::FromFile: {
            gens = sel.selected(sieve);
            while (!gens.empty() && gens.back() > X) gens.pop_back();
            small_generator_set = gens.size() <= kHeapGeneratorLimit;
            break;
        }
        default:
            break;  // all / exclude / mod / constructions are dense in general
    }

    if (small_generator_set) {
        K.method = Semigroup::Method::Heap;
        K.elements = generate_by_heap(gens, X);
    } else {
        K.method = Semigroup::Method::Sieve;
        auto removed = sel.complement(sieve);
        while (!removed.empty() && removed.back() > X) removed.pop_back();
        K.elements = generate_by_marking(removed, X);
    }
    return K;
}

DensityReport density(const PrimeSelector& sel, const PrimeSieve& sieve,
                      double precision, std::uint64_t empirical_bound) {
    if (!(precision > 0.0)) throw std::invalid_argument("density: precision must be > 0");

    DensityReport rep;
    const auto complement = sel.complement(sieve);
    const auto support = sel.complement_support_bound();

    if (support && *support <= sieve.bound()) {
        // finite complement covered by the sieve: the Euler product is a
        // finite product, tail identically zero
        double A = 1.0;
        for (auto p : complement) A *= (static_cast<double>(p) - 1.0) / static_cast<double>(p);
        rep.A = A;
        rep.euler_tail_bound = 0.0;
        rep.certified = true;
        rep.complement_trend = Trend::Convergent;
    } else {
        // unbounded complement: scan partial sums of -log(1 - 1/p) = the log of
        // the partial products across decades and compare their growth with
        // log log P0, the divergence rate of sum 1/p over all primes
        std::vector<std::pair<double, double>> partial;
        double logsum = 0.0;
        std::size_t idx = 0;
        for (double p0 = 1e3; p0 <= static_cast<double>(sieve.bound()); p0 *= 10.0) {
            while (idx < complement.size() && static_cast<double>(complement[idx]) <= p0) {
                const double p = static_cast<double>(complement[idx]);
                logsum += -std::log1p(-1.0 / p);
                ++idx;
            }
            partial.emplace_back(p0, logsum);
        }
        rep.complement_trend = partial.size() >= 3 ? classify_partial_sums(partial)
                                                   : Trend::Inconclusive;
        const double last_inc = partial.size() >= 2
            ? partial.back().second - partial[partial.size() - 2].second
            : logsum;
        if (rep.complement_trend == Trend::Divergent) {
            rep.A = 0.0;
            rep.divergent = true;
            rep.certified = false;
            rep.euler_tail_bound = last_inc;  // residual of the last scanned decade
        } else {
            // cannot certify |log A - log A_computed| <= precision without a
            // support bound; report the partial product with the residual
            rep.A = std::exp(-logsum);
            rep.certified = last_inc <= precision && rep.complement_trend == Trend::Convergent;
            rep.euler_tail_bound = last_inc;
        }
    }

    // empirical ratios pi_K(x)/x across decades
    if (empirical_bound >= 10) {
        const auto K = generate(sel, empirical_bound, sieve);
        for (double x = 10.0; x <= static_cast<double>(empirical_bound); x *= 10.0) {
            rep.empirical.emplace_back(x, static_cast<double>(K.count(x)) / x);
        }
    }
    return rep;
}

PanejahCheck panejah_check(const Semigroup& K, double delta,
                           std::span<const double> samples, double threshold) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("panejah_check: delta must lie in (0,1)");
    if (samples.empty()) throw std::invalid_argument("panejah_check: no sample points");

    std::vector<double> xs(samples.begin(), samples.end());
    std::sort(xs.begin(), xs.end());
    if (xs.front() <= 1.0 || xs.back() > static_cast<double>(K.bound))
        throw std::out_of_range("panejah_check: samples must lie in (1, X]");

    PanejahCheck out;
    out.threshold = threshold;
    for (double x : xs) {
        const double r =
            (static_cast<double>(K.count(x)) - static_cast<double>(K.count(delta * x))) / x;
        out.ratios.emplace_back(x, r);
    }
    const std::size_t half = xs.size() / 2;
    double m = out.ratios[half].second;
    for (std::size_t i = half; i < out.ratios.size(); ++i) m = std::min(m, out.ratios[i].second);
    out.min_top_half = m;
    out.pass = m > threshold;
    return out;
}

} // namespace modzeta
