#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modzeta/errors.hpp"
#include "modzeta/frame.hpp"
#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace modzeta;
using cd = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

Semigroup make(const char* spec, std::uint64_t X) {
    PrimeSieve s(X);
    return generate(PrimeSelector::parse(spec), X, s);
}

} // namespace

TEST_CASE("hand-checkable singleton operator") {
    PrimeSieve s(2);
    const auto K1 = generate(PrimeSelector::include({}), 1, s);
    const auto F = assemble(K1, {kPi}, 3, 1);
    // only entry(0,0) = 2T/pi = 2 survives
    CHECK(std::abs(F.entry(0, 0) - cd{2.0, 0.0}) < 1e-14);
    for (int j = -1; j <= 1; ++j)
        for (int k = -1; k <= 1; ++k)
            if (j || k) CHECK(std::abs(F.entry(j, k)) < 1e-14);
    const auto rep = spectrum(F, 0.0);
    CHECK(std::abs(rep.eigenvalues[0]) < 1e-10);
    CHECK(std::abs(rep.eigenvalues[1]) < 1e-10);
    CHECK(std::abs(rep.eigenvalues[2] - 2.0) < 1e-10);
    CHECK(F.tail_bound() == 0.0);
    // apply: e0 maps to 2 e0
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(3);
    e0(1) = 1.0;
    const auto out = F.apply(e0);
    CHECK(std::abs(out(1) - cd{2.0, 0.0}) < 1e-14);
    CHECK(std::abs(out(0)) + std::abs(out(2)) < 1e-14);
}

TEST_CASE("assembly preconditions") {
    const auto K = make("all", 1000);
    CHECK_THROWS_AS(assemble(K, {1.0}, 4, 1000), std::invalid_argument);
    CHECK_THROWS_AS(assemble(K, {0.0}, 3, 1000), std::invalid_argument);
    CHECK_THROWS_AS(assemble(K, {1.0}, 3, 2000), insufficient_semigroup);
}

TEST_CASE("diagonal entries are real and positive for K = N") {
    const auto K = make("all", 10'000);
    const auto F = assemble(K, {1.0}, 9, 10'000);
    for (int j = -4; j <= 4; ++j) {
        const auto d = F.entry(j, j);
        CHECK(d.imag() == 0.0);
        CHECK(d.real() > 0.0);
    }
}

TEST_CASE("linearity over K: odds plus evens equals all") {
    const std::uint64_t X = 20'000;
    PrimeSieve s(X);
    const auto Kn = generate(PrimeSelector::all(), X, s);
    const auto Ko = generate(PrimeSelector::exclude({2}), X, s);
    const auto Fn = assemble(Kn, {1.0}, 9, X);
    const auto Fo = assemble(Ko, {1.0}, 9, X);
    // difference = contribution of even n only; assemble it by brute force
    Eigen::MatrixXcd diff = Fn.matrix() - Fo.matrix();
    Eigen::MatrixXd want = Eigen::MatrixXd::Zero(9, 9);
    for (std::uint64_t n = 2; n <= X; n += 2) {
        const double ln = std::log(static_cast<double>(n));
        for (int j = -4; j <= 4; ++j)
            for (int k = -4; k <= 4; ++k) {
                auto c = [&](int jj, double xi) {
                    const double x = xi - kPi * jj;
                    return std::sqrt(2.0) * (std::abs(x) < 1e-9 ? 1.0 : std::sin(x) / x);
                };
                want(j + 4, k + 4) += (c(j, ln) * c(k, ln) + c(j, -ln) * c(k, -ln)) /
                                      (2.0 * kPi * static_cast<double>(n));
            }
    }
    CHECK((diff - want.cast<cd>()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("default cutoff covers the basis or caps at X") {
    CHECK(default_cutoff(3, kPi, 1'000'000) == 1'000'000);  // e^6 < 1e6 -> floor at 1e6
    CHECK(default_cutoff(65, 1.0, 1'000'000) == 1'000'000); // e^408 capped by X
    CHECK(default_cutoff(3, 2.0, 100'000'000) == std::uint64_t(1'000'000));
}

TEST_CASE("monotonicity in K") {
    const std::uint64_t X = 10'000;
    PrimeSieve s(X);
    const auto K1 = generate(PrimeSelector::include({2, 3}), X, s);
    const auto K2 = generate(PrimeSelector::include({2, 3, 5}), X, s);
    const auto F1 = assemble(K1, {2.0}, 11, X);
    const auto F2 = assemble(K2, {2.0}, 11, X);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(F2.matrix() - F1.matrix());
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
}

TEST_CASE("entries converge as N grows, within the reported tail bound") {
    const auto K = make("all", 200'000);
    const auto Fa = assemble(K, {kPi}, 7, 20'000);
    const auto Fb = assemble(K, {kPi}, 7, 200'000);
    // doubling N never decreases diagonal entries
    for (int j = -3; j <= 3; ++j)
        CHECK(Fb.entry(j, j).real() >= Fa.entry(j, j).real() - 1e-15);
    const double change = (Fb.matrix() - Fa.matrix()).cwiseAbs().maxCoeff();
    CHECK(change <= Fa.tail_bound());
    CHECK(Fb.tail_bound() < Fa.tail_bound());
}

TEST_CASE("apply agrees with direct quadrature of the kernel sum") {
    const std::uint64_t X = 50;
    PrimeSieve s(X);
    const auto K = generate(PrimeSelector::all(), X, s);
    const double T = 1.0;
    const int M = 5, jmax = 2;
    const auto F = assemble(K, {T}, M, X);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXcd coeffs(M);
    for (int i = 0; i < M; ++i) coeffs(i) = cd{u(rng), u(rng)};

    auto g = [&](double t) {
        cd acc = 0.0;
        for (int j = -jmax; j <= jmax; ++j)
            acc += coeffs(j + jmax) * std::exp(cd{0.0, kPi * j * t / T}) / std::sqrt(2.0 * T);
        return acc;
    };
    auto ghat = [&](double xi) {  // (1/sqrt(2pi)) int_I g(tau) e^{-i xi tau} dtau
        return oracles::trapezoid(
                   [&](double tau) { return g(tau) * std::exp(cd{0.0, -xi * tau}); }, -T, T,
                   4096) /
               std::sqrt(2.0 * kPi);
    };
    std::vector<cd> ghat_pos, ghat_neg;
    for (auto n : K.elements) {
        const double ln = std::log(static_cast<double>(n));
        ghat_pos.push_back(ghat(ln));
        ghat_neg.push_back(ghat(-ln));
    }
    // Z g(t) = (1/sqrt(2pi)) sum_n (1/n)(ghat(log n) n^{it} + ghat(-log n) n^{-it})
    auto Zg = [&](double t) {
        cd acc = 0.0;
        for (std::size_t i = 0; i < K.elements.size(); ++i) {
            const double nd = static_cast<double>(K.elements[i]);
            const double ln = std::log(nd);
            acc += ghat_pos[i] * std::exp(cd{0.0, t * ln}) / nd;
            acc += ghat_neg[i] * std::exp(cd{0.0, -t * ln}) / nd;
        }
        return acc / std::sqrt(2.0 * kPi);
    };

    const auto direct = F.apply(coeffs);
    for (int j = -jmax; j <= jmax; ++j) {
        // project Zg back on phi_j by quadrature
        const cd out = oracles::trapezoid(
            [&](double t) {
                return Zg(t) * std::exp(cd{0.0, -kPi * j * t / T}) / std::sqrt(2.0 * T);
            },
            -T, T, 512);
        CHECK(std::abs(out - direct(j + jmax)) < 5e-3);
    }
    // zero in, zero out
    CHECK(F.apply(Eigen::VectorXcd::Zero(M)).norm() == 0.0);
    CHECK_THROWS_AS(F.apply(Eigen::VectorXcd::Zero(M + 2)), std::invalid_argument);
}

TEST_CASE("regression anchor at the uncovered stress configuration") {
    // T = 1 with cutoff 1e6 leaves every basis mode beyond |pi j| > ln N ~ 13.8
    // without spectral mass (the trace is ~9.2 whatever M is), so the cluster
    // fraction at M = 65 is small; the observed value is locked here.
    const std::uint64_t X = 1'000'000;
    PrimeSieve s(X);
    const auto Kn = generate(PrimeSelector::all(), X, s);
    const auto rep = spectrum(assemble(Kn, {1.0}, 65, X), 1.0);
    CHECK(rep.cluster_fraction.at(0.2) == doctest::Approx(7.0 / 65.0).epsilon(0.01));
    CHECK(rep.lambda_max == doctest::Approx(1.358).epsilon(0.01));
}

TEST_CASE("covered-regime clustering anchors") {
    // At T = pi with N = 1e5 every basis frequency j <= 8 sits far inside the
    // covered log-range [0, 11.5]; the spectra then show the structure the
    // asymptotic theory predicts. Values locked from the first verified run.
    const std::uint64_t X = 100'000;
    PrimeSieve s(X);
    const IntervalSpec I{kPi};

    const auto Kn = generate(PrimeSelector::all(), X, s);
    double prev = 0.0;
    for (int M : {9, 13, 17}) {
        const auto rep = spectrum(assemble(Kn, I, M, X), 1.0);
        CHECK(rep.cluster_fraction.at(0.2) >= prev);      // nondecreasing in M
        CHECK(rep.cluster_fraction.at(0.2) >= 0.85);
        CHECK(rep.histogram_mode(0.1) == doctest::Approx(1.0));
        // the frame bound certificate stays positive here, stable in M
        CHECK(rep.lower_bound_estimate > 0.5);
        prev = rep.cluster_fraction.at(0.2);
    }

    const auto Ko = generate(PrimeSelector::exclude({2}), X, s);
    const auto rep_o = spectrum(assemble(Ko, I, 17, X), 0.5);
    CHECK(rep_o.histogram_mode(0.1) == doctest::Approx(0.5));
    CHECK(rep_o.cluster_fraction.at(0.2) >= 0.8);

    // density-zero K: no lower bound; smallest eigenvalue decays with M
    const auto Kp = generate(PrimeSelector::include({2}), X, s);
    double prev_min = 1e300;
    for (int M : {9, 13, 17}) {
        const auto rep = spectrum(assemble(Kp, I, M, X), 0.0);
        CHECK(rep.lambda_min < prev_min);
        prev_min = rep.lambda_min;
    }
    CHECK(prev_min < 1e-2);
}

TEST_CASE("cluster fractions are monotone in epsilon") {
    const auto K = make("exclude:2", 50'000);
    const auto rep = spectrum(assemble(K, {2.0}, 13, 50'000), 0.5);
    CHECK(rep.cluster_fraction.at(0.05) <= rep.cluster_fraction.at(0.1));
    CHECK(rep.cluster_fraction.at(0.1) <= rep.cluster_fraction.at(0.2));
    for (const auto& [eps, frac] : rep.cluster_fraction) {
        CHECK(frac >= 0.0);
        CHECK(frac <= 1.0);
    }
}

TEST_CASE("band restriction difference is numerically small-normed") {
    // exploratory: the principal band term soaks up most of the operator
    const auto K = make("all", 2'000);
    const auto F = assemble(K, {1.0}, 7, 2'000);
    const auto band = band_restriction_matrix(K, {1.0}, 7, 2'000);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(F.matrix() - band);
    CHECK(svd.singularValues()(0) < 0.5);  // well below the operator scale ~1
}
