#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modzeta {

// Thrown when a Dirichlet-sum cutoff exceeds the generated semigroup bound.
// The caller must regenerate the semigroup with bound >= required.
struct insufficient_semigroup : std::runtime_error {
    std::uint64_t required;
    std::uint64_t available;
    insufficient_semigroup(std::uint64_t req, std::uint64_t avail)
        : std::runtime_error("semigroup generated to " + std::to_string(avail) +
                             " but evaluation needs elements up to " + std::to_string(req)),
          required(req), available(avail) {}
};

// Thrown when an interval of a prime-set construction cannot supply its quota.
struct construction_error : std::runtime_error {
    int k;
    construction_error(int k_, const std::string& what_)
        : std::runtime_error(what_), k(k_) {}
};

} // namespace modzeta
