#include "sgswell/algebra.hpp"

#include <cmath>

#include "sgswell/errors.hpp"

namespace sgswell {

TripleProductTensor triple_products(const StochasticBasis& basis)
{
    const int K = basis.size();
    const Mat& vals = basis.cell_values();
    TripleProductTensor tensor;
    tensor.K = K;
    for (int i = 0; i < K; ++i)
        for (int j = i; j < K; ++j)
            for (int k = j; k < K; ++k) {
                double acc = 0.0;
                for (int c = 0; c < K; ++c) acc += vals(i, c) * vals(j, c) * vals(k, c);
                acc /= K;
                if (std::abs(acc) > 1e-14) tensor.entries.push_back({i, j, k, acc});
            }
    return tensor;
}

Mat sg_matrix(const TripleProductTensor& tensor, const Vec& v)
{
    if (v.size() != tensor.K) throw Error("sg_matrix: coefficient size mismatch");
    Mat P = Mat::Zero(tensor.K, tensor.K);
    // Expand each sorted triple over the distinct ways of assigning one of
    // its indices to the coefficient slot.
    for (const auto& e : tensor.entries) {
        auto add = [&](int a, int b, int c) {
            P(a, b) += e.value * v(c);
            if (a != b) P(b, a) += e.value * v(c);
        };
        if (e.i == e.j && e.j == e.k) {
            add(e.i, e.i, e.i);
        } else if (e.i == e.j) {
            add(e.i, e.i, e.k);
            add(e.i, e.k, e.j);
        } else if (e.j == e.k) {
            add(e.j, e.j, e.i);
            add(e.i, e.j, e.k);
        } else {
            add(e.i, e.j, e.k);
            add(e.i, e.k, e.j);
            add(e.j, e.k, e.i);
        }
    }
    return P;
}

Eigenstructure::Eigenstructure(const StochasticBasis& basis, const TripleProductTensor& tensor,
                               double tol)
    : K_(basis.size()), sqrt_k_(std::sqrt(static_cast<double>(basis.size())))
{
    V_ = basis.cell_values() / sqrt_k_; // column k = function values at cell k
    // Verify the constant-eigenvector property on a fixed probe; a basis
    // without it must not reach the solver.
    Vec probe(K_);
    unsigned long long s = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < K_; ++i) {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        probe(i) = 0.25 + static_cast<double>(s % 1000) / 500.0;
    }
    const Mat dense = sg_matrix(tensor, probe);
    const Mat eig_route = V_ * eigenvalues(probe).asDiagonal() * V_.transpose();
    const double err = (dense - eig_route).norm();
    if (err > tol)
        throw Error("eigenstructure: basis does not admit constant eigenvectors (residual " +
                    std::to_string(err) + ")");
}

Vec Eigenstructure::eigenvalues(const Vec& w) const
{
    return sqrt_k_ * (V_.transpose() * w);
}

Vec Eigenstructure::from_values(const Vec& vals) const
{
    return (V_ * vals) / sqrt_k_;
}

Vec sg_apply(const Eigenstructure& eig, const Vec& v, const Vec& w)
{
    const Vec lam = eig.eigenvalues(v);
    const Vec a = eig.V().transpose() * w;
    return eig.V() * lam.cwiseProduct(a);
}

Vec sg_inverse_apply(const Eigenstructure& eig, const Vec& v, const Vec& w, double eps_pos)
{
    const Vec lam = eig.eigenvalues(v);
    if (lam.cwiseAbs().minCoeff() <= eps_pos)
        throw SingularState("sg_inverse_apply: SG matrix eigenvalue below positivity guard");
    const Vec a = eig.V().transpose() * w;
    return eig.V() * a.cwiseQuotient(lam);
}

Vec sg_inverse_coefficients(const Eigenstructure& eig, const Vec& v, double eps_pos)
{
    Vec e1 = Vec::Zero(eig.size());
    e1(0) = 1.0;
    return sg_inverse_apply(eig, v, e1, eps_pos);
}

Vec sg_sqrt(const Eigenstructure& eig, const Vec& h, double eps_pos)
{
    const Vec lam = eig.eigenvalues(h);
    if (lam.minCoeff() <= eps_pos)
        throw NonPositiveHeight("sg_sqrt: nonpositive SG eigenvalue");
    const Vec a = eig.V().transpose() * h;
    return eig.V() * a.cwiseQuotient(lam.cwiseSqrt());
}

std::pair<Mat, Mat> sg_compose_check(const TripleProductTensor& tensor,
                                     const Eigenstructure& eig, const Vec& v, const Vec& w)
{
    const Vec pv_w = sg_apply(eig, v, w);
    return {sg_matrix(tensor, pv_w), sg_matrix(tensor, v) * sg_matrix(tensor, w)};
}

} // namespace sgswell
