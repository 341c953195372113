#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modzeta/primes.hpp"

namespace modzeta {

// Parameters of the prime removal built from disjoint intervals (delta*x_k, x_k)
// with x_k = base^(ratio^k). ratio > 1 keeps sum 1/log x_k finite (it is a
// geometric series in 1/ratio); a plain geometric x_k would make it harmonic.
struct Construction6aParams {
    double delta = 0.5;
    double base = 10.0;
    double exponent_ratio = 2.0;
    int k_min = 1;
    int k_max = 3;
};

// Parameters of the quota removal: from each (2^k, 2^{k+1}) take the first
// ceil(2^k / (k ln k)) primes, k0 <= k <= k_max.
struct Construction6bParams {
    int k0 = 4;
    int k_max = 19;
    // Small k may not hold their quota (k=2 wants 3 primes of {5,7}).
    // Strict mode raises construction_error; capped mode takes what exists.
    bool cap_small_quotas = false;
};

enum class SelectorKind {
    All,            // Q = P
    ExcludeList,    // Q = P minus a finite list
    IncludeList,    // Q = a finite list
    ResidueClass,   // Q = {p : p == a (mod m)}
    FromFile,       // include list loaded from a newline-separated file
    Construction6a,
    Construction6b,
};

// Declarative description of a prime subset Q; membership for every prime up
// to a sieve bound is decidable against that sieve. Immutable after creation.
class PrimeSelector {
public:
    PrimeSelector() = default;

    static PrimeSelector all();
    static PrimeSelector exclude(std::vector<std::uint64_t> primes);
    static PrimeSelector include(std::vector<std::uint64_t> primes);
    static PrimeSelector residue_class(std::uint64_t a, std::uint64_t m);
    static PrimeSelector from_file(const std::string& path);
    static PrimeSelector construction_6a(const Construction6aParams& p);
    static PrimeSelector construction_6b(const Construction6bParams& p);

    // Mini-language: all | exclude:2,3 | include:2,3,5 | mod:1,4 | file:PATH |
    // construct:6a:delta=0.5,base=10,ratio=2,kmin=1,kmax=3 |
    // construct:6b:k0=4,kmax=19[,cap]
    static PrimeSelector parse(std::string_view spec);
    std::string spec_string() const;

    SelectorKind kind() const { return kind_; }
    const std::vector<std::uint64_t>& list() const { return list_; }
    const Construction6aParams& params_6a() const { return c6a_; }
    const Construction6bParams& params_6b() const { return c6b_; }

    // p must be prime under `sieve`; throws std::invalid_argument otherwise.
    bool contains(std::uint64_t p, const PrimeSieve& sieve) const;

    // Q and P\Q intersected with [2, sieve.bound()], sorted. Include lists are
    // verified prime against the sieve here.
    std::vector<std::uint64_t> selected(const PrimeSieve& sieve) const;
    std::vector<std::uint64_t> complement(const PrimeSieve& sieve) const;

    // If the complement is contained in [2, B] for a B known from the selector
    // alone, returns B. This is what makes Euler products over the complement
    // exactly summable.
    std::optional<std::uint64_t> complement_support_bound() const;

private:
    SelectorKind kind_ = SelectorKind::All;
    std::vector<std::uint64_t> list_;     // exclude/include/file (sorted, deduped)
    std::uint64_t residue_ = 0, modulus_ = 0;
    std::string path_;
    Construction6aParams c6a_;
    Construction6bParams c6b_;

    // removed primes P for construction kinds, materialized against `sieve`
    std::vector<std::uint64_t> construction_removed(const PrimeSieve& sieve) const;
};

} // namespace modzeta
