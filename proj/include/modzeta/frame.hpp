#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "modzeta/semigroup.hpp"

namespace modzeta {

struct IntervalSpec {
    double T = 1.0;  // I = (-T, T)
};

// Discretization of Z_{K,I} (the frame operator of {n^{±it}/sqrt n} on L^2(I),
// divided by 2 pi) in the orthonormal exponential basis
//   phi_j(t) = e^{i pi j t / T} / sqrt(2T),   j = -(M-1)/2 .. (M-1)/2.
// Inner products with n^{it} are closed-form sincs, so assembly needs no
// quadrature:
//   entry(j,k) = (1/2pi) sum_{n<=N, n in K} (1/n) [ c_j(log n) c_k(log n)
//                                              + c_j(-log n) c_k(-log n) ],
//   c_j(xi) = sqrt(2T) sinc(T xi - pi j),  sinc x = sin x / x.
// n = 1 contributes both branches (the doubled constant of the frame).
class FrameMatrix {
public:
    int dim() const { return static_cast<int>(mat_.rows()); }
    int j_max() const { return (dim() - 1) / 2; }
    double T() const { return T_; }
    std::uint64_t cutoff() const { return cutoff_; }
    double tail_bound() const { return tail_bound_; }

    // j, k in [-j_max, j_max]
    std::complex<double> entry(int j, int k) const;
    const Eigen::MatrixXcd& matrix() const { return mat_; }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& coeffs) const;

private:
    friend FrameMatrix assemble(const Semigroup&, IntervalSpec, int, std::uint64_t);
    Eigen::MatrixXcd mat_;
    double T_ = 0.0;
    std::uint64_t cutoff_ = 0;
    double tail_bound_ = 0.0;
};

// Default truncation: every basis frequency pi j / T should sit well inside
// the covered log-range, which wants N ~ e^{2 pi M / T}; capped by X.
std::uint64_t default_cutoff(int M, double T, std::uint64_t X);

// Throws std::invalid_argument for even M, insufficient_semigroup for N > X.
FrameMatrix assemble(const Semigroup& K, IntervalSpec I, int M, std::uint64_t N);

struct SpectrumReport {
    std::vector<double> eigenvalues;  // ascending
    double A_ref = 0.0;
    std::map<double, double> cluster_fraction;  // eps -> fraction within eps of A_ref
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double lower_bound_estimate = 0.0;  // lambda_min - tail_bound
    double tail_bound = 0.0;
    double hermiticity_error = 0.0;     // max relative asymmetry
    // Mode of the eigenvalue histogram with the given bin width.
    double histogram_mode(double bin_width = 0.1) const;
};

// Full dense Hermitian eigendecomposition; verifies the Hermitian/PSD typed
// invariants and throws std::runtime_error with diagnostics if they fail.
SpectrumReport spectrum(const FrameMatrix& F, double A_ref,
                        std::span<const double> eps = {});

// Exploratory: the band-restriction principal term in the same basis,
//   B(j,k) = (1/2pi) int_L c_j(xi) c_k(xi) dxi,
// integrated interval by interval. The singular values of Z - B decaying is
// the numerical shadow of the compact correction. No acceptance criteria are
// attached to this.
Eigen::MatrixXcd band_restriction_matrix(const Semigroup& K, IntervalSpec I, int M,
                                         std::uint64_t N);

} // namespace modzeta
