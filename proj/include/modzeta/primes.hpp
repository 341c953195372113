#pragma once

#include <cstdint>
#include <vector>

namespace modzeta {

// Eratosthenes sieve with the prime list kept for counting queries.
// Desk scale is <= ~1e8; a flat bit vector is fine there.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t bound);

    std::uint64_t bound() const { return bound_; }
    bool is_prime(std::uint64_t n) const;
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    // pi(x) = #{p <= x}
    std::uint64_t count(double x) const;
    // #{p : a < p <= b}
    std::uint64_t count_between(double a, double b) const;

private:
    std::uint64_t bound_;
    std::vector<bool> composite_;
    std::vector<std::uint64_t> primes_;
};

} // namespace modzeta
