#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modzeta/frequency_set.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace modzeta;

namespace {
FrequencySet make(const char* spec, std::uint64_t X) {
    PrimeSieve s(X);
    return FrequencySet(generate(PrimeSelector::parse(spec), X, s));
}
} // namespace

TEST_CASE("full line for K = N") {
    const auto L = make("all", 100'000);
    // L_+ = [0, log(X+1)) with no gaps
    CHECK(L.total_measure() == doctest::Approx(std::log(100'001.0)).epsilon(1e-12));
    CHECK(L.measure_window(5.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(L.measure_window(11.0, 3.0) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("singleton: one interval [0, log 2)") {
    PrimeSieve s(2);
    const FrequencySet L(generate(PrimeSelector::include({}), 1, s));
    const double ln2 = std::log(2.0);
    CHECK(L.measure_window(ln2, ln2) == doctest::Approx(ln2).epsilon(1e-12));
    CHECK(L.total_measure() == doctest::Approx(ln2).epsilon(1e-15));
}

TEST_CASE("windows straddling zero pick up both branches") {
    const auto L = make("all", 1000);
    // (-1/2, 1/2): positive part [0, 1/2) full, negative part (-1/2, 0] full
    CHECK(L.measure_window(0.5, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("scan-line oracle on random windows") {
    const std::uint64_t X = 50'000;
    PrimeSieve s(X);
    for (const char* spec : {"all", "exclude:2", "include:2", "include:2,3", "mod:1,4"}) {
        CAPTURE(spec);
        const auto K = generate(PrimeSelector::parse(spec), X, s);
        const FrequencySet L(K);
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> xi(0.5, L.xi_max());
        std::uniform_real_distribution<double> del(0.01, 2.0);
        for (int i = 0; i < 60; ++i) {
            const double b = xi(rng);
            const double d = std::min(del(rng), b + L.xi_max());
            const double mine = L.measure_window(b, d);
            double want = oracles::scanline_measure(K.elements, std::max(b - d, 0.0), b);
            if (b - d < 0)  // mirrored negative branch
                want += oracles::scanline_measure(K.elements, 0.0, -(b - d));
            CHECK(mine == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("symmetry") {
    const auto L = make("exclude:2", 50'000);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> xi(1.0, L.xi_max() - 1.0);
    for (int i = 0; i < 40; ++i) {
        const double x = xi(rng);
        // mirror of the window (x - d, x) is (-x, -x + d)
        const double d = 0.75;
        CHECK(L.measure_window(x, d) == doctest::Approx(L.measure_window(-x + d, d)).epsilon(1e-12));
    }
}

TEST_CASE("window range errors") {
    const auto L = make("all", 1000);
    CHECK_THROWS_AS((void)L.measure_window(L.xi_max() + 0.5, 1.0), std::out_of_range);
    CHECK_THROWS_AS((void)L.measure_window(-L.xi_max(), 1.0), std::out_of_range);
    CHECK_THROWS_AS((void)L.measure_window(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("total measure equals the aggregated prefix") {
    const auto L = make("include:2,3", 100'000);
    double agg = 0.0;
    for (auto n : L.source().elements) agg += std::log1p(1.0 / static_cast<double>(n));
    CHECK(L.total_measure() == doctest::Approx(agg).epsilon(1e-14));
}

TEST_CASE("local density deviation") {
    // K = N: deviation exactly 0 once the window sits inside [0, log X]
    const auto Ln = make("all", 100'000);
    const double xs[] = {2.0, 5.0, 9.0};
    for (double dev : Ln.local_density_deviation(1.0, xs, 1.0))
        CHECK(std::abs(dev) < 1e-12);

    // K = odds: within 0.05 of zero at xi = 10
    const auto Lo = make("exclude:2", 100'000);
    const double x10[] = {10.0};
    CHECK(std::abs(Lo.local_density_deviation(0.5, x10, 1.0)[0]) < 0.05);

    // K = {2^k}: a single sliver of size ~2^-k, positive and tending to zero
    const auto Lp = make("include:2", 100'000);
    const auto devs = Lp.local_density_deviation(0.0, x10, 1.0);
    CHECK(devs[0] > 0.0);
    CHECK(devs[0] < 2e-4);
    const double x5[] = {5.0};
    CHECK(Lp.local_density_deviation(0.0, x5, 1.0)[0] > devs[0]);  // decreasing along xi
}

TEST_CASE("panejah measure inf and the counting sandwich") {
    const auto L = make("all", 1'000'000);
    std::vector<double> grid;
    for (double xi = 2.0; xi <= 13.0; xi += 1.0) grid.push_back(xi);
    const auto pm = L.panejah_measure_inf(1.0, grid);
    CHECK(pm.inf_ratio == doctest::Approx(1.0).epsilon(1e-6));

    // 3-smooth: ratios decay toward zero along the grid
    const auto L3 = make("include:2,3", 1'000'000);
    const double g3[] = {5.0, 10.0, 13.0};
    const auto pm3 = L3.panejah_measure_inf(1.0, g3);
    CHECK(pm3.rows[0].measure > pm3.rows[1].measure);
    CHECK(pm3.rows[1].measure > pm3.rows[2].measure);
    CHECK(pm3.inf_ratio < 1e-3);

    // odds: stabilized near 1/2 and sandwich holds on every row
    const auto Lo = make("exclude:2", 1'000'000);
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> xi(2.0, Lo.xi_max());
    std::vector<double> rg;
    for (int i = 0; i < 50; ++i) rg.push_back(xi(rng));
    const auto pmo = Lo.panejah_measure_inf(1.0, rg);
    CHECK(pmo.inf_ratio > 0.4);
    CHECK(pmo.inf_ratio < 0.6);
    const double e1 = std::exp(1.0);
    for (const auto& row : pmo.rows) {
        CHECK(row.count_ratio <= row.inv_sum + 1e-12);
        CHECK(row.inv_sum <= e1 * row.count_ratio + 1e-12);
    }
    CHECK_THROWS_AS((void)L.panejah_measure_inf(1.0, std::span<const double>{}),
                    std::invalid_argument);
}
