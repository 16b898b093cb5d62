#pragma once

// Independent reference computations used across the test suites. These
// deliberately avoid the production code paths they check: Gram matrices by
// brute-force cell sums, SG products through the dense assembled matrix,
// spectra through a dense symmetric eigensolver, and derivatives through
// finite differences.

#include <functional>
#include <random>

#include <Eigen/Eigenvalues>

#include "sgswell/algebra.hpp"
#include "sgswell/basis.hpp"
#include "sgswell/types.hpp"

namespace sgswell::test {

/// Gram matrix of the basis from the cell-value table with weight 1/K.
inline Mat gram_matrix(const StochasticBasis& basis)
{
    const int K = basis.size();
    Mat G = Mat::Zero(K, K);
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j) {
            double acc = 0.0;
            for (int c = 0; c < K; ++c)
                acc += basis.value_in_cell(i, c) * basis.value_in_cell(j, c);
            G(i - 1, j - 1) = acc / K;
        }
    return G;
}

/// Sorted eigenvalues of a dense symmetric matrix.
inline Vec sorted_symmetric_eigenvalues(const Mat& A)
{
    Eigen::SelfAdjointEigenSolver<Mat> solver(A);
    return solver.eigenvalues();
}

/// Deterministic RNG for property tests.
inline std::mt19937_64 rng(unsigned seed)
{
    return std::mt19937_64(seed);
}

inline Vec random_vec(std::mt19937_64& gen, int n, double lo, double hi)
{
    std::uniform_real_distribution<double> dist(lo, hi);
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = dist(gen);
    return v;
}

/// Random coefficient vector whose SG matrix has all eigenvalues in
/// [lo, hi] (drawn as cell values, then transformed). With lo > 0 this is an
/// admissible water-height vector by construction.
inline Vec random_positive_spectrum(std::mt19937_64& gen, const Eigenstructure& eig,
                                    double lo, double hi)
{
    return eig.from_values(random_vec(gen, eig.size(), lo, hi));
}

/// Central finite-difference gradient of a scalar functional.
inline Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x, double delta)
{
    Vec g(x.size());
    for (int i = 0; i < x.size(); ++i) {
        Vec xp = x, xm = x;
        xp(i) += delta;
        xm(i) -= delta;
        g(i) = (f(xp) - f(xm)) / (2.0 * delta);
    }
    return g;
}

/// Central finite-difference Hessian of a scalar functional.
inline Mat fd_hessian(const std::function<double(const Vec&)>& f, const Vec& x, double delta)
{
    const int n = static_cast<int>(x.size());
    Mat H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec xpp = x, xpm = x, xmp = x, xmm = x;
            xpp(i) += delta;
            xpp(j) += delta;
            xpm(i) += delta;
            xpm(j) -= delta;
            xmp(i) -= delta;
            xmp(j) += delta;
            xmm(i) -= delta;
            xmm(j) -= delta;
            H(i, j) = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * delta * delta);
        }
    return 0.5 * (H + H.transpose());
}

} // namespace sgswell::test
