#include "modzeta/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "modzeta/errors.hpp"

namespace modzeta {

namespace {

// interval ends x_k = base^(ratio^k), k_min..k_max, kept while x_k <= bound
std::vector<double> interval_ends(const Construction6aParams& p, std::uint64_t bound,
                                  int* dropped) {
    std::vector<double> xs;
    int drop = 0;
    for (int k = p.k_min; k <= p.k_max; ++k) {
        const double e = std::pow(p.exponent_ratio, static_cast<double>(k));
        const double x = std::pow(p.base, e);
        if (!(x > 1.0)) throw std::invalid_argument("construction 6a: interval end <= 1");
        if (x > static_cast<double>(bound)) {
            ++drop;
            continue;
        }
        xs.push_back(x);
    }
    if (dropped) *dropped = drop;
    // disjointness: x_k <= delta * x_{k+1}
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i - 1] >= p.delta * xs[i])
            throw std::invalid_argument("construction 6a: intervals overlap");
    }
    return xs;
}

std::vector<std::pair<double, double>> decade_partial_inv_sums(
    const std::vector<std::uint64_t>& P, double lo, double hi) {
    std::vector<std::pair<double, double>> out;
    double sum = 0.0;
    std::size_t idx = 0;
    for (double x = lo; x <= hi * 1.0000001; x *= 10.0) {
        while (idx < P.size() && static_cast<double>(P[idx]) <= x) {
            sum += 1.0 / static_cast<double>(P[idx]);
            ++idx;
        }
        out.emplace_back(x, sum);
    }
    return out;
}

} // namespace

std::vector<std::uint64_t> construction_6a_removed(const Construction6aParams& p,
                                                   const PrimeSieve& sieve,
                                                   std::uint64_t bound) {
    const auto xs = interval_ends(p, std::min(bound, sieve.bound()), nullptr);
    std::vector<std::uint64_t> removed;
    for (double x : xs) {
        const double lo = p.delta * x;
        for (auto q : sieve.primes()) {
            const double qd = static_cast<double>(q);
            if (qd <= lo) continue;
            if (qd >= x) break;
            removed.push_back(q);
        }
    }
    return removed;
}

std::vector<std::uint64_t> construction_6b_removed(const Construction6bParams& p,
                                                   const PrimeSieve& sieve,
                                                   std::uint64_t bound) {
    std::vector<std::uint64_t> removed;
    const auto& primes = sieve.primes();
    const std::uint64_t lim = std::min(bound, sieve.bound());
    for (int k = p.k0; k <= p.k_max; ++k) {
        if (k >= 63) throw std::invalid_argument("construction 6b: k too large");
        const std::uint64_t lo = 1ull << k;
        const std::uint64_t hi = 1ull << (k + 1);
        if (lo >= lim) break;
        const double quota_d =
            std::ceil(std::pow(2.0, k) / (static_cast<double>(k) * std::log(k)));
        const auto quota = static_cast<std::uint64_t>(quota_d);

        auto it = std::upper_bound(primes.begin(), primes.end(), lo);
        std::uint64_t taken = 0;
        while (it != primes.end() && *it < hi && *it <= lim && taken < quota) {
            removed.push_back(*it);
            ++it;
            ++taken;
        }
        if (taken < quota) {
            const bool interval_truncated = hi > lim;
            if (!p.cap_small_quotas && !interval_truncated) {
                throw construction_error(
                    k, "construction 6b: interval (2^" + std::to_string(k) + ", 2^" +
                           std::to_string(k + 1) + ") holds fewer than its quota of " +
                           std::to_string(quota) + " primes");
            }
        }
    }
    return removed;
}

Construction6aReport construct_6a(const Construction6aParams& p, std::uint64_t X,
                                  const PrimeSieve& sieve) {
    if (sieve.bound() < X)
        throw std::invalid_argument("construct_6a: sieve bound below X");

    Construction6aReport rep;
    int dropped = 0;
    const auto xs = interval_ends(p, X, &dropped);
    rep.intervals_dropped = dropped;
    rep.removed = construction_6a_removed(p, sieve, X);
    rep.selector = PrimeSelector::construction_6a(p);

    for (double x : xs) {
        rep.intervals.emplace_back(p.delta * x, x);
        double s = 0.0;
        for (auto q : rep.removed) {
            const double qd = static_cast<double>(q);
            if (qd <= p.delta * x) continue;
            if (qd >= x) break;
            s += std::log(qd) / qd;
        }
        rep.interval_logp_sums.emplace_back(x, s);
    }

    rep.inv_partial_sums = decade_partial_inv_sums(rep.removed, 1e3, static_cast<double>(X));
    if (rep.inv_partial_sums.size() >= 3)
        rep.inv_trend = classify_partial_sums(rep.inv_partial_sums);
    return rep;
}

Construction6bReport construct_6b(const Construction6bParams& p, const PrimeSieve& sieve,
                                  double delta, std::span<const double> window_samples) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("construct_6b: delta must lie in (0,1)");

    Construction6bReport rep;
    rep.delta = delta;
    rep.selector = PrimeSelector::construction_6b(p);
    rep.removed = construction_6b_removed(p, sieve, sieve.bound());

    const auto& primes = sieve.primes();
    std::size_t ridx = 0;
    for (int k = p.k0; k <= p.k_max; ++k) {
        const std::uint64_t lo = 1ull << k;
        const std::uint64_t hi = 1ull << (k + 1);
        if (lo >= sieve.bound()) break;
        Construction6bReport::QuotaRow row;
        row.k = k;
        row.quota = static_cast<std::uint64_t>(
            std::ceil(std::pow(2.0, k) / (static_cast<double>(k) * std::log(k))));
        const auto a = std::upper_bound(primes.begin(), primes.end(), lo);
        const auto b = std::lower_bound(primes.begin(), primes.end(),
                                        std::min(hi, sieve.bound() + 1));
        row.available = static_cast<std::uint64_t>(b - a);
        std::uint64_t t = 0;
        while (ridx < rep.removed.size() && rep.removed[ridx] < hi) {
            ++ridx;
            ++t;
        }
        row.taken = t;
        rep.quotas.push_back(row);
    }

    rep.inv_partial_sums =
        decade_partial_inv_sums(rep.removed, 1e3, static_cast<double>(sieve.bound()));
    if (rep.inv_partial_sums.size() >= 3)
        rep.inv_trend = classify_partial_sums(rep.inv_partial_sums);

    // empirical increments against sum 1/(k log k) per decade
    for (std::size_t i = 1; i < rep.inv_partial_sums.size(); ++i) {
        const double a = rep.inv_partial_sums[i - 1].first;
        const double b = rep.inv_partial_sums[i].first;
        const double inc = rep.inv_partial_sums[i].second - rep.inv_partial_sums[i - 1].second;
        double ref = 0.0;
        for (int k = std::max(p.k0, static_cast<int>(std::floor(std::log2(a))));
             k < static_cast<int>(std::floor(std::log2(b))) && k <= p.k_max; ++k)
            ref += 1.0 / (static_cast<double>(k) * std::log(k));
        rep.increment_ratio.push_back(ref > 0 ? inc / ref : 0.0);
    }

    static const double default_samples[] = {1e4, 1e5, 1e6};
    if (window_samples.empty()) window_samples = default_samples;
    for (double x : window_samples) {
        if (x > static_cast<double>(sieve.bound())) continue;
        double s = 0.0;
        for (auto q : rep.removed) {
            const double qd = static_cast<double>(q);
            if (qd <= delta * x) continue;
            if (qd >= x) break;
            s += std::log(qd) / qd;
        }
        rep.window_sums.push_back({x, s, 1.0 / std::log(x)});
    }
    return rep;
}

double mertens_sum(double x, const PrimeSieve& sieve) {
    if (!(x >= 2.0)) throw std::invalid_argument("mertens_sum: x must be >= 2");
    if (x > static_cast<double>(sieve.bound()))
        throw std::out_of_range("mertens_sum: x beyond sieve range");
    double s = 0.0;
    for (auto p : sieve.primes()) {
        const double pd = static_cast<double>(p);
        if (pd > x) break;
        s += std::log(pd) / pd;
    }
    return s - std::log(x);
}

PntReport pnt_check(const PrimeSelector& Q, const PrimeSieve& sieve, double delta,
                    std::span<const double> x_samples) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("pnt_check: delta must lie in (0,1)");
    if (x_samples.empty()) throw std::invalid_argument("pnt_check: no sample points");

    const auto selected = Q.selected(sieve);
    const auto removed = Q.complement(sieve);

    PntReport rep;
    std::vector<std::pair<double, double>> window_series;
    for (double x : x_samples) {
        if (x > static_cast<double>(sieve.bound()))
            throw std::out_of_range("pnt_check: sample beyond sieve range");
        PntReport::Row row;
        row.x = x;
        const auto it = std::upper_bound(selected.begin(), selected.end(),
                                         static_cast<std::uint64_t>(std::floor(x)));
        const double piq = static_cast<double>(it - selected.begin());
        row.pi_ratio = piq * std::log(x) / x;
        double s = 0.0;
        for (auto q : removed) {
            const double qd = static_cast<double>(q);
            if (qd <= delta * x) continue;
            if (qd >= x) break;
            s += std::log(qd) / qd;
        }
        row.window_sum = s;
        window_series.emplace_back(x, s);
        rep.rows.push_back(row);
    }

    // the window sums must tend to zero for the PNT verdict; best-fit slope
    // against log x nonpositive and the last value below 0.5, mirroring the
    // trend surrogate of the frequency-set module
    double slope = 0.0;
    if (rep.rows.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = static_cast<double>(rep.rows.size());
        for (const auto& r : rep.rows) {
            const double lx = std::log(r.x);
            sx += lx; sy += r.window_sum; sxx += lx * lx; sxy += lx * r.window_sum;
        }
        slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    const double last = rep.rows.back().window_sum;
    if (slope <= 1e-12 && last < 0.5) {
        rep.window_trend = Trend::Convergent;
    } else if (last > 0.3) {
        rep.window_trend = Trend::Divergent;
    } else {
        rep.window_trend = Trend::Inconclusive;
    }
    rep.pnt_pass = rep.window_trend == Trend::Convergent;
    return rep;
}

} // namespace modzeta
