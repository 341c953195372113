#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modzeta/constructions.hpp"
#include "modzeta/errors.hpp"
#include "modzeta/semigroup.hpp"

#include <cmath>

using namespace modzeta;

TEST_CASE("mertens values") {
    PrimeSieve s(1'000'000);
    // single prime: log 2/2 - log 2
    CHECK(mertens_sum(2.0, s) ==
          doctest::Approx(-std::log(2.0) / 2.0).epsilon(1e-15));
    const double v3 = mertens_sum(1e3, s);
    CHECK(v3 > -2.0);
    CHECK(v3 < 0.0);
    // regression anchor from the first verified run
    CHECK(v3 == doctest::Approx(-1.2982448035890943).epsilon(1e-12));
    // band stabilizes: consecutive decades within 0.2
    const double v5 = mertens_sum(1e5, s);
    const double v6 = mertens_sum(1e6, s);
    CHECK(std::abs(v6 - v5) <= 0.2);
    CHECK_THROWS_AS(mertens_sum(1.5, s), std::invalid_argument);
    CHECK_THROWS_AS(mertens_sum(1e7, s), std::out_of_range);
}

TEST_CASE("6a stated example: first interval (50, 100)") {
    PrimeSieve s(1'000'000);
    const auto rep = construct_6a({}, 1'000'000, s);
    // x_k = 10^(2^k), k = 1..3, truncated: {100, 10^4} kept, 10^8 dropped
    REQUIRE(rep.intervals.size() == 2);
    CHECK(rep.intervals_dropped == 1);
    CHECK(rep.intervals[0].first == doctest::Approx(50.0));
    CHECK(rep.intervals[0].second == doctest::Approx(100.0));

    // brute-force over the primes {53,...,97}
    const std::uint64_t expect[] = {53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    double want = 0.0;
    for (auto p : expect) want += std::log(static_cast<double>(p)) / static_cast<double>(p);
    CHECK(rep.interval_logp_sums[0].second == doctest::Approx(want).epsilon(1e-14));
    // removed begins with exactly these primes
    REQUIRE(rep.removed.size() >= 10);
    for (int i = 0; i < 10; ++i) CHECK(rep.removed[i] == expect[i]);

    // the interval sums sit in the O(1) band of log(1/delta) ~ 0.69
    for (const auto& [x, sum] : rep.interval_logp_sums) {
        CHECK(sum >= 0.3);
        CHECK(sum <= 1.2);
    }
    // sum 1/p over P converges at the sieve scale
    CHECK(rep.inv_trend == Trend::Convergent);
}

TEST_CASE("6a selector reproduces the construction") {
    PrimeSieve s(100'000);
    const auto rep = construct_6a({}, 100'000, s);
    const auto complement = rep.selector.complement(s);
    CHECK(complement == rep.removed);
    // Q has positive density: the removed set is finite here
    const auto dens = density(rep.selector, s, 1e-9, 10'000);
    CHECK(dens.A > 0.0);
    CHECK(dens.certified);
    // ... while the window criterion for the PNT fails on the intervals
    const double xs[] = {100.0, 10'000.0};
    const auto pnt = pnt_check(rep.selector, s, 0.5, xs);
    CHECK(!pnt.pnt_pass);
    CHECK(pnt.rows[0].window_sum >= 0.3);
    CHECK(pnt.rows[1].window_sum >= 0.3);
}

TEST_CASE("interval sums track Mertens differences") {
    PrimeSieve s(1'000'000);
    // a single interval (x/2, x): the window sum equals
    // [mertens(x) + log x] - [mertens(x/2) + log(x/2)] = log 2 + O(1) drift
    Construction6aParams p;
    p.base = 10.0;
    p.exponent_ratio = 5.0;  // only x_1 = 1e5 inside range
    p.k_min = 1;
    p.k_max = 1;
    const auto rep = construct_6a(p, 1'000'000, s);
    REQUIRE(rep.intervals.size() == 1);
    const double x = 1e5;
    const double want = std::log(2.0) + mertens_sum(x, s) - mertens_sum(x / 2, s);
    CHECK(rep.interval_logp_sums[0].second == doctest::Approx(want).epsilon(1e-12));
    CHECK(std::abs(rep.interval_logp_sums[0].second - std::log(2.0)) < 0.1);

    // Mertens differences over (x/2, x) sit within 2 of log 2 across decades
    for (double xx : {1e4, 1e5, 1e6}) {
        const double diff = mertens_sum(xx, s) - mertens_sum(xx / 2, s) + std::log(2.0);
        CHECK(std::abs(diff - std::log(2.0)) <= 2.0);
    }

    // every removed prime really is prime
    for (auto q : rep.removed) CHECK(s.is_prime(q));
}

TEST_CASE("6a input validation") {
    PrimeSieve s(1000);
    // ratio <= 1 breaks the sum 1/log x_k convergence requirement: rejected
    Construction6aParams nonconv;
    nonconv.exponent_ratio = 1.0;
    CHECK_THROWS_AS(PrimeSelector::construction_6a(nonconv), std::invalid_argument);
    // ratio barely above 1 passes validation but the intervals overlap
    Construction6aParams overlap;
    overlap.exponent_ratio = 1.01;
    CHECK_THROWS_AS(construct_6a(overlap, 1000, s), std::invalid_argument);
    Construction6aParams bad_delta;
    bad_delta.delta = 1.5;
    CHECK_THROWS_AS(construct_6a(bad_delta, 1000, s), std::invalid_argument);
    // empty interval list (all truncated): Q = P, zero sums
    Construction6aParams tiny;
    tiny.k_min = 3;
    tiny.k_max = 3;  // 10^8 beyond the sieve
    const auto rep = construct_6a(tiny, 1000, s);
    CHECK(rep.intervals.empty());
    CHECK(rep.removed.empty());
    CHECK(rep.interval_logp_sums.empty());
}

TEST_CASE("6b quotas: stated examples") {
    PrimeSieve s(100'000);
    // k = 4: quota ceil(16/(4 ln 4)) = 3 of (16,32) -> {17,19,23}
    Construction6bParams p4;
    p4.k0 = 4;
    p4.k_max = 4;
    const auto rep = construct_6b(p4, s, 0.5);
    REQUIRE(rep.quotas.size() == 1);
    CHECK(rep.quotas[0].quota == 3);
    CHECK(rep.removed == std::vector<std::uint64_t>{17, 19, 23});

    // k = 2: quota 3 but (4,8) holds only {5,7} -> strict construction error
    Construction6bParams p2;
    p2.k0 = 2;
    p2.k_max = 2;
    CHECK_THROWS_AS(construct_6b(p2, s, 0.5), construction_error);
    try {
        construct_6b(p2, s, 0.5);
    } catch (const construction_error& e) {
        CHECK(e.k == 2);
    }
    // capped mode takes what exists instead
    p2.cap_small_quotas = true;
    const auto capped = construct_6b(p2, s, 0.5);
    CHECK(capped.removed == std::vector<std::uint64_t>{5, 7});

    // empty range: P = 0, Q = all primes
    Construction6bParams pe;
    pe.k0 = 4;
    pe.k_max = 4;
    PrimeSieve tiny(8);
    const auto empty = construct_6b(pe, tiny, 0.5);
    CHECK(empty.removed.empty());

    // k_max < k0 selects nothing at all
    Construction6bParams pn;
    pn.k0 = 4;
    pn.k_max = 3;
    const auto none = construct_6b(pn, s, 0.5);
    CHECK(none.removed.empty());
    CHECK(none.selector.complement(s).empty());
}

TEST_CASE("6b trends at the 2^20 scale") {
    Construction6bParams p;
    p.k0 = 4;
    p.k_max = 19;
    PrimeSieve s(1ull << 20);
    const auto rep = construct_6b(p, s, 0.5);
    CHECK(rep.inv_trend == Trend::Divergent);
    for (double r : rep.increment_ratio) {
        CHECK(r >= 0.25);
        CHECK(r <= 4.0);
    }
    double prev = 1e300;
    for (const auto& w : rep.window_sums) {
        CHECK(w.sum <= 3.0 * w.reference);
        CHECK(w.sum <= prev);
        prev = w.sum;
    }
    // the companion density diagnostic: sum 1/p over P diverges -> A = 0
    const auto dens = density(rep.selector, s, 1e-9, 10'000);
    CHECK(dens.divergent);
    CHECK(dens.A == 0.0);
    // ... while the PNT window criterion passes
    const double xs[] = {1e4, 1e5, 1e6};
    const auto pnt = pnt_check(rep.selector, s, 0.5, xs);
    CHECK(pnt.pnt_pass);
}

TEST_CASE("pnt_check for the full prime set") {
    PrimeSieve s(1'000'000);
    const double xs[] = {1e4, 1e5, 1e6};
    const auto rep = pnt_check(PrimeSelector::all(), s, 0.5, xs);
    // pi(1e6) log(1e6) / 1e6 with pi(1e6) = 78498
    CHECK(rep.rows.back().pi_ratio ==
          doctest::Approx(78498.0 * std::log(1e6) / 1e6).epsilon(1e-12));
    // empty complement: window sums identically zero, PNT verdict passes
    for (const auto& r : rep.rows) CHECK(r.window_sum == 0.0);
    CHECK(rep.pnt_pass);
    CHECK_THROWS_AS(pnt_check(PrimeSelector::all(), s, 0.5, std::span<const double>{}),
                    std::invalid_argument);
}
