#pragma once

#include <functional>
#include <vector>

#include "sgswell/quadrature.hpp"
#include "sgswell/types.hpp"

namespace sgswell {

/// Quadrature resolution used when projecting functions onto a basis.
/// Each smooth sub-piece of the integrand gets this many Gauss points.
struct QuadratureSpec {
    int points_per_piece = 50;
};

/// Orthonormal piecewise-constant (Haar) basis on the stochastic domain,
/// univariate on [-1,1] with density 1/2 or bivariate on [-1,1]^2 with
/// density 1/4.
///
/// The key structural fact: every basis function is constant on each of the
/// K finest dyadic cells, each cell carries probability mass exactly 1/K,
/// and the K x K table of cell values is orthogonal up to a factor sqrt(K).
/// All Galerkin algebra downstream rests on that table.
///
/// Univariate ordering is level-major, left to right within a level, with
/// psi_1 == 1 and the first wavelet equal to +1 on [-1,0) and -1 on (0,1].
/// Bivariate ordering is graded: sorted by total level of the tensor pair,
/// with functions varying only in xi_1 before those involving xi_2 inside
/// each grade.
///
/// Point evaluation at a dyadic breakpoint returns the value of the cell to
/// the LEFT of the breakpoint (the leftmost point of the domain belongs to
/// the first cell).
class StochasticBasis {
public:
    /// Number of basis functions (== number of finest cells).
    int size() const { return K_; }

    /// 1 for a univariate basis, 2 for a bivariate basis.
    int dims() const { return dims_; }

    /// Univariate resolution levels (dims()==1 only).
    int n_levels() const { return levels1_; }

    /// Per-direction factor sizes; K2 == 1 for univariate bases.
    int factor_size(int dim) const { return dim == 0 ? K1_ : K2_; }

    /// Value of psi_k (1-based) on finest cell c (0-based).
    double value_in_cell(int k, int c) const { return values_(k - 1, c); }

    /// K x K table with row k-1 holding psi_k on each finest cell.
    const Mat& cell_values() const { return values_; }

    /// Bounds [lo, hi) of finest cell c along direction dim.
    std::pair<double, double> cell_interval(int dim, int c) const;

    /// Midpoint of finest cell c along direction dim.
    double cell_midpoint(int dim, int c) const;

    /// Tensor pair (a, b) of basis function k (1-based); b == 1 univariate.
    std::pair<int, int> function_pair(int k) const;

    /// psi_k at xi (univariate basis only).
    double evaluate(int k, double xi) const;

    /// psi_k at (xi1, xi2) (bivariate basis only).
    double evaluate(int k, double xi1, double xi2) const;

    /// Projection coefficients <f, psi_k> by per-cell Gauss quadrature.
    Vec project(const std::function<double(double)>& f, const QuadratureSpec& spec = {}) const;
    Vec project(const std::function<double(double, double)>& f,
                const QuadratureSpec& spec = {}) const;

    /// Sum_k v_k psi_k at a point.
    double reconstruct(const Vec& coeffs, double xi) const;
    double reconstruct(const Vec& coeffs, double xi1, double xi2) const;

private:
    friend StochasticBasis haar_basis(int);
    friend StochasticBasis bivariate_haar_basis(int, int);

    int K_ = 0;
    int dims_ = 1;
    int levels1_ = 0, levels2_ = 0;
    int K1_ = 1, K2_ = 1;
    // pairs_[k] = (a, b) with psi_k(xi1, xi2) = phi_a(xi1) phi_b(xi2), 1-based.
    std::vector<std::pair<int, int>> pairs_;
    Mat values_; // K functions x K cells

    int cell_index(int dim, double xi) const;
};

/// Univariate Haar basis with 2^n_levels functions. Rejects negative levels.
StochasticBasis haar_basis(int n_levels);

/// Bivariate tensor Haar basis with 2^levels1 * 2^levels2 functions in the
/// graded ordering described on StochasticBasis.
StochasticBasis bivariate_haar_basis(int levels1, int levels2);

/// Bivariate basis of total size K (power of two); resolution is split as
/// evenly as possible with the extra level, if any, given to xi_1.
StochasticBasis bivariate_haar_basis_total(int K);

/// Coefficients of f in the orthonormalized Legendre basis on [-1,1] with
/// density 1/2 (first K polynomials). Used by the overshoot demonstration:
/// unlike the Haar projection, the reconstruction may leave [min f, max f].
Vec legendre_project_demo(const std::function<double(double)>& f, int K,
                          const QuadratureSpec& spec = {});

/// Sum_k v_k sqrt(2k-1) P_{k-1}(xi), the reconstruction matching
/// legendre_project_demo.
double legendre_reconstruct(const Vec& coeffs, double xi);

} // namespace sgswell
