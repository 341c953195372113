#include "modzeta/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modzeta {

PrimeSieve::PrimeSieve(std::uint64_t bound) : bound_(bound), composite_(bound + 1, false) {
    if (bound < 1) throw std::invalid_argument("PrimeSieve: bound must be >= 1");
    composite_[0] = true;
    if (bound >= 1) composite_[1] = true;
    for (std::uint64_t p = 2; p * p <= bound; ++p) {
        if (composite_[p]) continue;
        for (std::uint64_t m = p * p; m <= bound; m += p) composite_[m] = true;
    }
    for (std::uint64_t n = 2; n <= bound; ++n) {
        if (!composite_[n]) primes_.push_back(n);
    }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
    if (n > bound_) throw std::out_of_range("PrimeSieve: query beyond sieve bound");
    return n >= 2 && !composite_[n];
}

std::uint64_t PrimeSieve::count(double x) const {
    if (x < 2.0) return 0;
    if (x > static_cast<double>(bound_))
        throw std::out_of_range("PrimeSieve: count beyond sieve bound");
    const auto limit = static_cast<std::uint64_t>(std::floor(x));
    auto it = std::upper_bound(primes_.begin(), primes_.end(), limit);
    return static_cast<std::uint64_t>(it - primes_.begin());
}

std::uint64_t PrimeSieve::count_between(double a, double b) const {
    if (b <= a) return 0;
    return count(b) - (a < 2.0 ? 0 : count(a));
}

} // namespace modzeta
