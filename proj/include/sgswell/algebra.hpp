#pragma once

#include <vector>

#include "sgswell/basis.hpp"
#include "sgswell/types.hpp"

namespace sgswell {

/// Default absolute guard for positivity / invertibility gates on SG matrix
/// eigenvalues.
inline constexpr double kEpsPositivity = 1e-12;

/// Triple products M_ijk = <psi_i psi_j psi_k>, stored as the nonzero
/// entries with i <= j <= k. Exact for Haar bases: products of basis
/// functions are constant on the finest cells, so the cell sum is the
/// integral.
struct TripleProductTensor {
    struct Entry {
        int i, j, k; // 0-based, i <= j <= k
        double value;
    };
    int K = 0;
    std::vector<Entry> entries;
};

/// Computes the triple-product tensor by summation over finest cells.
TripleProductTensor triple_products(const StochasticBasis& basis);

/// Dense SG matrix P(v): [P(v)]_ij = sum_k v_k M_ijk. Symmetric. This is the
/// assembled oracle route; production code goes through Eigenstructure.
Mat sg_matrix(const TripleProductTensor& tensor, const Vec& v);

/// Constant-eigenvector factorization of the SG matrix family:
/// P(w) = V diag(lambda(w)) V^T with V independent of w and
/// lambda_k(w) = (sqrt(K) V^T w)_k, i.e. the reconstruction of w at the
/// midpoint of finest cell k. Columns of V are the scaled cell-value
/// vectors of the basis.
class Eigenstructure {
public:
    /// Builds V from the basis cell values and verifies
    /// ||P(w) - V L(w) V^T|| <= tol on a fixed probe vector.
    Eigenstructure(const StochasticBasis& basis, const TripleProductTensor& tensor,
                   double tol = 1e-10);

    int size() const { return K_; }
    const Mat& V() const { return V_; }

    /// Eigenvalues of P(w): sqrt(K) V^T w.
    Vec eigenvalues(const Vec& w) const;

    /// Cell values of the field with coefficients x (same as eigenvalues).
    Vec to_values(const Vec& x) const { return eigenvalues(x); }

    /// Inverse transform: coefficients of the field with given cell values.
    Vec from_values(const Vec& vals) const;

private:
    int K_;
    double sqrt_k_;
    Mat V_;
};

/// P(v) w via the eigen route, matrix-free in the sense that no K x K matrix
/// is assembled: V (lambda(v) .* (V^T w)).
Vec sg_apply(const Eigenstructure& eig, const Vec& v, const Vec& w);

/// P(v)^{-1} w. Throws SingularState when min_j |lambda_j(v)| <= eps_pos.
Vec sg_inverse_apply(const Eigenstructure& eig, const Vec& v, const Vec& w,
                     double eps_pos = kEpsPositivity);

/// Coefficients of the reciprocal field: v^{-1} = P(v)^{-1} e_1.
Vec sg_inverse_coefficients(const Eigenstructure& eig, const Vec& v,
                            double eps_pos = kEpsPositivity);

/// Coefficients of the square-root field: h^{1/2} = V L(h)^{-1/2} V^T h,
/// satisfying P(h^{1/2}) h^{1/2} = h. Throws NonPositiveHeight when any
/// lambda_j(h) <= eps_pos.
Vec sg_sqrt(const Eigenstructure& eig, const Vec& h, double eps_pos = kEpsPositivity);

/// Returns {P(P(v)w), P(v) P(w)} assembled densely; the two agree exactly
/// for constant-eigenvector bases.
std::pair<Mat, Mat> sg_compose_check(const TripleProductTensor& tensor,
                                     const Eigenstructure& eig, const Vec& v, const Vec& w);

/// Everything the solver needs about one stochastic discretization:
/// the basis, its triple products, and the eigenstructure. Immutable.
struct SgAlgebra {
    StochasticBasis basis;
    TripleProductTensor tensor;
    Eigenstructure eig;

    explicit SgAlgebra(StochasticBasis b)
        : basis(std::move(b)), tensor(triple_products(basis)), eig(basis, tensor) {}

    int K() const { return basis.size(); }
};

} // namespace sgswell
