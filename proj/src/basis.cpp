#include "sgswell/basis.hpp"

#include <algorithm>
#include <cmath>

#include "sgswell/errors.hpp"

namespace sgswell {

namespace {

// Level and within-level position of univariate function k (1-based).
// k == 1 is the constant; wavelet j = k-2 sits at level floor(log2(j+1)).
struct HaarDesc {
    bool constant;
    int level;
    int pos;
};

HaarDesc haar_desc(int k)
{
    if (k == 1) return {true, 0, 0};
    const int j = k - 2;
    int level = 0;
    while ((2 << level) <= j + 1) ++level; // level = floor(log2(j+1))
    const int pos = j + 1 - (1 << level);
    return {false, level, pos};
}

// psi_k at xi with the left-cell breakpoint convention.
double haar_eval(int k, double xi)
{
    if (k == 1) return 1.0;
    const HaarDesc d = haar_desc(k);
    const double width = std::ldexp(2.0, -d.level); // 2^(1-level)
    const double lo = -1.0 + d.pos * width;
    const double hi = lo + width;
    const double mid = lo + 0.5 * width;
    const double amp = std::sqrt(std::ldexp(1.0, d.level));
    // Left-cell convention: support is (lo, hi] except at the domain edge.
    if (xi <= lo && !(d.pos == 0 && xi == -1.0)) return 0.0;
    if (xi > hi) return 0.0;
    return xi <= mid ? amp : -amp;
}

// Graded ordering key. The constant counts as degree 0, the wavelet at
// level l as degree l+1. Inside a grade, functions varying only in xi_1
// come first, then mixed products, then functions varying only in xi_2.
struct PairKey {
    int grade;
    int deg2;
    int b;
    int a;
    bool operator<(const PairKey& o) const
    {
        return std::tie(grade, deg2, b, a) < std::tie(o.grade, o.deg2, o.b, o.a);
    }
};

int haar_degree(int k)
{
    if (k == 1) return 0;
    return haar_desc(k).level + 1;
}

} // namespace

std::pair<double, double> StochasticBasis::cell_interval(int dim, int c) const
{
    const int n = dim == 0 ? K1_ : K2_;
    const double w = 2.0 / n;
    return {-1.0 + c * w, -1.0 + (c + 1) * w};
}

double StochasticBasis::cell_midpoint(int dim, int c) const
{
    const int n = dim == 0 ? K1_ : K2_;
    return -1.0 + (2.0 * c + 1.0) / n;
}

std::pair<int, int> StochasticBasis::function_pair(int k) const
{
    if (k < 1 || k > K_) throw Error("basis: function index out of range");
    return pairs_[k - 1];
}

int StochasticBasis::cell_index(int dim, double xi) const
{
    if (xi < -1.0 || xi > 1.0) throw Error("basis: evaluation point outside [-1,1]");
    const int n = dim == 0 ? K1_ : K2_;
    const double w = 2.0 / n;
    // Cells are (lo, hi]; the leftmost point belongs to cell 0.
    int c = static_cast<int>(std::ceil((xi + 1.0) / w)) - 1;
    return std::clamp(c, 0, n - 1);
}

double StochasticBasis::evaluate(int k, double xi) const
{
    if (dims_ != 1) throw Error("basis: univariate evaluate on a bivariate basis");
    if (k < 1 || k > K_) throw Error("basis: function index out of range");
    if (xi < -1.0 || xi > 1.0) throw Error("basis: evaluation point outside [-1,1]");
    return haar_eval(k, xi);
}

double StochasticBasis::evaluate(int k, double xi1, double xi2) const
{
    if (dims_ != 2) throw Error("basis: bivariate evaluate on a univariate basis");
    if (k < 1 || k > K_) throw Error("basis: function index out of range");
    if (xi1 < -1.0 || xi1 > 1.0 || xi2 < -1.0 || xi2 > 1.0)
        throw Error("basis: evaluation point outside [-1,1]^2");
    const auto [a, b] = pairs_[k - 1];
    return haar_eval(a, xi1) * haar_eval(b, xi2);
}

Vec StochasticBasis::project(const std::function<double(double)>& f,
                             const QuadratureSpec& spec) const
{
    if (dims_ != 1) throw Error("basis: univariate project on a bivariate basis");
    const GaussRule& rule = gauss_legendre(spec.points_per_piece);
    // Cell integrals of f (density 1/2), shared across all basis functions.
    Vec cell_int = Vec::Zero(K_);
    for (int c = 0; c < K_; ++c) {
        const auto [a, b] = cell_interval(0, c);
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double acc = 0.0;
        for (int q = 0; q < rule.points.size(); ++q) {
            const double v = f(mid + half * rule.points(q));
            if (!std::isfinite(v)) throw Error("project: non-finite integrand value");
            acc += rule.weights(q) * v;
        }
        cell_int(c) = 0.5 * half * acc;
    }
    return values_ * cell_int;
}

Vec StochasticBasis::project(const std::function<double(double, double)>& f,
                             const QuadratureSpec& spec) const
{
    if (dims_ != 2) throw Error("basis: bivariate project on a univariate basis");
    const GaussRule& rule = gauss_legendre(spec.points_per_piece);
    const int nq = static_cast<int>(rule.points.size());
    Vec cell_int = Vec::Zero(K_);
    for (int c1 = 0; c1 < K1_; ++c1) {
        const auto [a1, b1] = cell_interval(0, c1);
        for (int c2 = 0; c2 < K2_; ++c2) {
            const auto [a2, b2] = cell_interval(1, c2);
            const double m1 = 0.5 * (a1 + b1), h1 = 0.5 * (b1 - a1);
            const double m2 = 0.5 * (a2 + b2), h2 = 0.5 * (b2 - a2);
            double acc = 0.0;
            for (int q1 = 0; q1 < nq; ++q1)
                for (int q2 = 0; q2 < nq; ++q2) {
                    const double v = f(m1 + h1 * rule.points(q1), m2 + h2 * rule.points(q2));
                    if (!std::isfinite(v)) throw Error("project: non-finite integrand value");
                    acc += rule.weights(q1) * rule.weights(q2) * v;
                }
            cell_int(c1 * K2_ + c2) = 0.25 * h1 * h2 * acc;
        }
    }
    return values_ * cell_int;
}

double StochasticBasis::reconstruct(const Vec& coeffs, double xi) const
{
    const int c = cell_index(0, xi);
    double acc = 0.0;
    for (int k = 0; k < K_; ++k) acc += coeffs(k) * values_(k, c);
    return acc;
}

double StochasticBasis::reconstruct(const Vec& coeffs, double xi1, double xi2) const
{
    const int c = cell_index(0, xi1) * K2_ + cell_index(1, xi2);
    double acc = 0.0;
    for (int k = 0; k < K_; ++k) acc += coeffs(k) * values_(k, c);
    return acc;
}

StochasticBasis haar_basis(int n_levels)
{
    if (n_levels < 0) throw Error("haar_basis: n_levels must be >= 0");
    StochasticBasis basis;
    basis.dims_ = 1;
    basis.levels1_ = n_levels;
    basis.K1_ = 1 << n_levels;
    basis.K2_ = 1;
    basis.K_ = basis.K1_;
    basis.pairs_.resize(basis.K_);
    for (int k = 1; k <= basis.K_; ++k) basis.pairs_[k - 1] = {k, 1};
    basis.values_ = Mat::Zero(basis.K_, basis.K_);
    for (int k = 1; k <= basis.K_; ++k)
        for (int c = 0; c < basis.K_; ++c)
            basis.values_(k - 1, c) = haar_eval(k, basis.cell_midpoint(0, c));
    return basis;
}

StochasticBasis bivariate_haar_basis(int levels1, int levels2)
{
    if (levels1 < 0 || levels2 < 0) throw Error("bivariate_haar_basis: negative levels");
    StochasticBasis basis;
    basis.dims_ = 2;
    basis.levels1_ = levels1;
    basis.levels2_ = levels2;
    basis.K1_ = 1 << levels1;
    basis.K2_ = 1 << levels2;
    basis.K_ = basis.K1_ * basis.K2_;

    std::vector<std::pair<PairKey, std::pair<int, int>>> keyed;
    keyed.reserve(basis.K_);
    for (int a = 1; a <= basis.K1_; ++a)
        for (int b = 1; b <= basis.K2_; ++b) {
            const int da = haar_degree(a), db = haar_degree(b);
            keyed.push_back({{da + db, db, b, a}, {a, b}});
        }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    basis.pairs_.resize(basis.K_);
    for (int k = 0; k < basis.K_; ++k) basis.pairs_[k] = keyed[k].second;

    basis.values_ = Mat::Zero(basis.K_, basis.K_);
    for (int k = 0; k < basis.K_; ++k) {
        const auto [a, b] = basis.pairs_[k];
        for (int c1 = 0; c1 < basis.K1_; ++c1)
            for (int c2 = 0; c2 < basis.K2_; ++c2)
                basis.values_(k, c1 * basis.K2_ + c2) =
                    haar_eval(a, basis.cell_midpoint(0, c1)) *
                    haar_eval(b, basis.cell_midpoint(1, c2));
    }
    return basis;
}

StochasticBasis bivariate_haar_basis_total(int K)
{
    if (K < 1 || (K & (K - 1)) != 0)
        throw Error("bivariate_haar_basis_total: K must be a power of two");
    int total = 0;
    while ((1 << total) < K) ++total;
    const int levels1 = (total + 1) / 2;
    const int levels2 = total - levels1;
    return bivariate_haar_basis(levels1, levels2);
}

Vec legendre_project_demo(const std::function<double(double)>& f, int K,
                          const QuadratureSpec& spec)
{
    if (K < 1) throw Error("legendre_project_demo: K must be >= 1");
    // Composite quadrature over a fixed uniform subdivision keeps kinks
    // (e.g. |xi| at 0) resolved regardless of where they fall.
    const int pieces = 8;
    const GaussRule& rule = gauss_legendre(spec.points_per_piece);
    Vec coeffs = Vec::Zero(K);
    for (int p = 0; p < pieces; ++p) {
        const double a = -1.0 + 2.0 * p / pieces;
        const double b = -1.0 + 2.0 * (p + 1) / pieces;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int q = 0; q < rule.points.size(); ++q) {
            const double x = mid + half * rule.points(q);
            const double fv = f(x);
            if (!std::isfinite(fv)) throw Error("project: non-finite integrand value");
            const double w = 0.5 * half * rule.weights(q); // density 1/2
            double p0 = 1.0, p1 = x;
            for (int k = 0; k < K; ++k) {
                const double pk = (k == 0) ? 1.0 : (k == 1 ? x : p1);
                coeffs(k) += w * fv * std::sqrt(2.0 * k + 1.0) * pk;
                if (k >= 1) {
                    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
                    p0 = p1;
                    p1 = p2;
                }
            }
        }
    }
    return coeffs;
}

double legendre_reconstruct(const Vec& coeffs, double xi)
{
    double acc = 0.0;
    double p0 = 1.0, p1 = xi;
    for (int k = 0; k < coeffs.size(); ++k) {
        const double pk = (k == 0) ? 1.0 : (k == 1 ? xi : p1);
        acc += coeffs(k) * std::sqrt(2.0 * k + 1.0) * pk;
        if (k >= 1) {
            const double p2 = ((2.0 * k + 1.0) * xi * p1 - k * p0) / (k + 1.0);
            p0 = p1;
            p1 = p2;
        }
    }
    return acc;
}

} // namespace sgswell
