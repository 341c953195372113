// Discretization of the frame-type operator in the orthonormal exponential
// basis on (-T, T).
//
// Assembly is rank-1 accumulation: per element n the coefficient vector
// v_j = c_j(log n) = sqrt(2T) sinc(T log n - pi j) costs M sinc evaluations
// (one sin(T log n) shared across j since sin(x - pi j) = ±sin x), and the
// mirror branch c_j(-log n) is the index-reversed vector, so
//   2 pi Z = sum_n (1/n) (v v^T + J v v^T J),  J = index flip.
// Only B = sum (1/n) v v^T is accumulated (blocked syrk), the flip is added
// once at the end. n = 1 has v = J v, so the flip correctly doubles the
// constant.
//
// Truncation tail: the omitted PSD operator is bounded by
//   (1/2pi) sum_{n>N} (1/n) (sup_j c_j(log n)^2 + sup_j c_j(-log n)^2)
// with the sinc envelope |c_j(xi)| <= sqrt(2T) min(1, 2/|T xi - pi j|). Both
// branches give the same envelope phi(u) = min(1, 4/(u - pi j_max)^2) of the
// distance to the extreme basis frequency, and sum_{n>N} (1/n) phi(T log n)
// <= int_{T log N}^inf phi(u) du / T. The integral is explicit:
//   tail_bound = (2/pi) [ (pi j_max + 2 - T log N)_+ + 4 / max(2, T log N - pi j_max) ].
// When T log N < pi j_max (cutoff below the top basis frequency) the flat
// stretch of the envelope dominates and the bound is honest about how much
// operator mass the truncation may be missing.

#include "modzeta/frame.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "modzeta/errors.hpp"

namespace modzeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kBlock = 256;

// v_j = sqrt(2T) sinc(T xi - pi j) for j = -jmax..jmax, using
// sin(T xi - pi j) = (-1)^j sin(T xi).
void sinc_vector(double xi, double T, int jmax, double* v) {
    const double x = T * xi;
    const double s = std::sin(x);
    const double scale = std::sqrt(2.0 * T);
    for (int j = -jmax; j <= jmax; ++j) {
        const double d = x - kPi * static_cast<double>(j);
        double sinc;
        if (std::abs(d) < 1e-6) {
            sinc = 1.0 - d * d / 6.0;
        } else {
            const double sj = (j % 2 == 0) ? s : -s;
            sinc = sj / d;
        }
        v[j + jmax] = scale * sinc;
    }
}

} // namespace

std::uint64_t default_cutoff(int M, double T, std::uint64_t X) {
    const double want = std::exp(2.0 * kPi * static_cast<double>(M) / T);
    double n = std::max(1e6, want);
    n = std::min(n, static_cast<double>(X));
    return static_cast<std::uint64_t>(n);
}

std::complex<double> FrameMatrix::entry(int j, int k) const {
    const int jm = j_max();
    if (std::abs(j) > jm || std::abs(k) > jm)
        throw std::out_of_range("FrameMatrix::entry: index beyond basis range");
    return mat_(j + jm, k + jm);
}

Eigen::VectorXcd FrameMatrix::apply(const Eigen::VectorXcd& coeffs) const {
    if (coeffs.size() != mat_.rows())
        throw std::invalid_argument("FrameMatrix::apply: dimension mismatch");
    return mat_ * coeffs;
}

FrameMatrix assemble(const Semigroup& K, IntervalSpec I, int M, std::uint64_t N) {
    if (M < 1 || M % 2 == 0)
        throw std::invalid_argument("assemble: basis dimension M must be odd and >= 1");
    if (!(I.T > 0.0)) throw std::invalid_argument("assemble: interval needs T > 0");
    if (N > K.bound && !K.complete_above_bound())
        throw insufficient_semigroup(N, K.bound);

    const int jmax = (M - 1) / 2;
    const double T = I.T;

    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(M, M);
    Eigen::MatrixXd V(M, kBlock);
    int filled = 0;
    auto flush = [&]() {
        if (filled == 0) return;
        B.selfadjointView<Eigen::Lower>().rankUpdate(V.leftCols(filled), 1.0);
        filled = 0;
    };

    std::vector<double> v(static_cast<std::size_t>(M));
    for (auto n : K.elements) {
        if (n > N) break;
        const double nd = static_cast<double>(n);
        sinc_vector(std::log(nd), T, jmax, v.data());
        const double w = 1.0 / std::sqrt(nd);
        for (int r = 0; r < M; ++r) V(r, filled) = w * v[static_cast<std::size_t>(r)];
        if (++filled == kBlock) flush();
    }
    flush();
    B = B.selfadjointView<Eigen::Lower>();

    // add the mirror branch and scale; result is real symmetric
    Eigen::MatrixXd Z = (B + B.reverse()) / (2.0 * kPi);

    FrameMatrix F;
    F.T_ = T;
    F.cutoff_ = N;
    F.mat_ = Z.cast<std::complex<double>>();

    if (K.complete_above_bound() && N >= K.bound) {
        F.tail_bound_ = 0.0;
    } else {
        const double a = T * std::log(static_cast<double>(N)) - kPi * static_cast<double>(jmax);
        const double flat = std::max(0.0, -a + 2.0);
        const double decay = 4.0 / std::max(2.0, a);
        F.tail_bound_ = (2.0 / kPi) * (flat + decay);
    }
    return F;
}

// Bins are centered on multiples of bin_width; ties resolve to the lowest bin.
double SpectrumReport::histogram_mode(double bin_width) const {
    if (eigenvalues.empty()) return 0.0;
    std::map<long, int> bins;
    for (double ev : eigenvalues)
        bins[static_cast<long>(std::floor(ev / bin_width + 0.5))]++;
    long best = 0;
    int best_count = -1;
    for (const auto& [b, c] : bins)
        if (c > best_count) { best = b; best_count = c; }
    return static_cast<double>(best) * bin_width;
}

SpectrumReport spectrum(const FrameMatrix& F, double A_ref, std::span<const double> eps) {
    static const double default_eps[] = {0.05, 0.1, 0.2};
    if (eps.empty()) eps = default_eps;

    const auto& mat = F.matrix();
    SpectrumReport rep;
    rep.A_ref = A_ref;
    rep.tail_bound = F.tail_bound();

    // typed invariants, checked on every assembly
    const double scale = std::max(mat.cwiseAbs().maxCoeff(), 1e-300);
    rep.hermiticity_error = (mat - mat.adjoint()).cwiseAbs().maxCoeff() / scale;
    if (rep.hermiticity_error > 1e-12)
        throw std::runtime_error("frame matrix failed the Hermiticity invariant: " +
                                 std::to_string(rep.hermiticity_error));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hermitian eigensolver did not converge");

    const auto& ev = solver.eigenvalues();
    rep.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
    rep.lambda_min = rep.eigenvalues.front();
    rep.lambda_max = rep.eigenvalues.back();
    if (rep.lambda_min < -1e-8 * std::max(rep.lambda_max, 0.0))
        throw std::runtime_error("frame matrix failed the PSD invariant: lambda_min = " +
                                 std::to_string(rep.lambda_min));

    for (double e : eps) {
        int c = 0;
        for (double v : rep.eigenvalues)
            if (std::abs(v - A_ref) <= e) ++c;
        rep.cluster_fraction[e] =
            static_cast<double>(c) / static_cast<double>(rep.eigenvalues.size());
    }
    rep.lower_bound_estimate = rep.lambda_min - rep.tail_bound;
    return rep;
}

Eigen::MatrixXcd band_restriction_matrix(const Semigroup& K, IntervalSpec I, int M,
                                         std::uint64_t N) {
    if (M < 1 || M % 2 == 0)
        throw std::invalid_argument("band_restriction_matrix: M must be odd");
    if (N > K.bound && !K.complete_above_bound())
        throw insufficient_semigroup(N, K.bound);
    const int jmax = (M - 1) / 2;
    const double T = I.T;

    // 5-point Gauss-Legendre nodes on [0,1]
    static const double gx[5] = {0.046910077030668, 0.230765344947158, 0.5,
                                 0.769234655052841, 0.953089922969332};
    static const double gw[5] = {0.118463442528095, 0.239314335249683, 0.284444444444444,
                                 0.239314335249683, 0.118463442528095};

    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(M, M);
    std::vector<double> v(static_cast<std::size_t>(M));
    for (auto n : K.elements) {
        if (n > N) break;
        const double nd = static_cast<double>(n);
        const double lo = std::log(nd), hi = std::log(nd + 1.0);
        const double len = hi - lo;
        for (int g = 0; g < 5; ++g) {
            const double xi = lo + gx[g] * len;
            sinc_vector(xi, T, jmax, v.data());
            const double w = gw[g] * len;
            Eigen::Map<Eigen::VectorXd> vv(v.data(), M);
            B.selfadjointView<Eigen::Lower>().rankUpdate(vv, w);
        }
    }
    B = B.selfadjointView<Eigen::Lower>();
    Eigen::MatrixXd Z = (B + B.reverse()) / (2.0 * kPi);
    return Z.cast<std::complex<double>>();
}

} // namespace modzeta
