#include "sgswell/dg.hpp"

#include <cmath>
#include <string>

#include "sgswell/errors.hpp"

#ifdef SGSWELL_HAVE_OPENMP
#include <omp.h>
#endif

namespace sgswell {

namespace {

// P_N and P_N' by the three-term recurrence.
void legendre(int N, double x, double& p, double& dp)
{
    double p0 = 1.0, p1 = x;
    if (N == 0) {
        p = 1.0;
        dp = 0.0;
        return;
    }
    for (int k = 2; k <= N; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    if (std::abs(std::abs(x) - 1.0) < 1e-14) {
        dp = (x > 0 ? 1.0 : (N % 2 == 0 ? -1.0 : 1.0)) * 0.5 * N * (N + 1.0);
    } else {
        dp = N * (x * p1 - p0) / (x * x - 1.0);
    }
}

} // namespace

DGOperators lgl_operators(int N)
{
    if (N < 1) throw Error("lgl_operators: degree must be at least 1");
    DGOperators ops;
    ops.N = N;
    ops.nodes = Vec::Zero(N + 1);
    ops.weights = Vec::Zero(N + 1);
    ops.nodes(0) = -1.0;
    ops.nodes(N) = 1.0;

    // Interior nodes: roots of P_N', Newton from Chebyshev-Lobatto guesses.
    for (int k = 1; k < N; ++k) {
        double x = -std::cos(M_PI * k / N);
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            double p, dp;
            legendre(N, x, p, dp);
            const double ddp = (2.0 * x * dp - N * (N + 1.0) * p) / (1.0 - x * x);
            const double step = dp / ddp;
            x -= step;
            if (std::abs(step) < 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged) throw Error("lgl_operators: Newton iteration did not converge");
        ops.nodes(k) = x;
    }

    for (int i = 0; i <= N; ++i) {
        double p, dp;
        legendre(N, ops.nodes(i), p, dp);
        ops.weights(i) = 2.0 / (N * (N + 1.0) * p * p);
    }

    // Barycentric differentiation matrix; rows sum to zero by construction.
    Vec bary = Vec::Ones(N + 1);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j)
            if (j != i) bary(i) *= ops.nodes(i) - ops.nodes(j);
    bary = bary.cwiseInverse();

    ops.D = Mat::Zero(N + 1, N + 1);
    for (int i = 0; i <= N; ++i) {
        double diag = 0.0;
        for (int j = 0; j <= N; ++j) {
            if (j == i) continue;
            ops.D(i, j) = (bary(j) / bary(i)) / (ops.nodes(i) - ops.nodes(j));
            diag -= ops.D(i, j);
        }
        ops.D(i, i) = diag;
    }
    return ops;
}

Field Field::make_1d(int nel, int degree, int K)
{
    Field f;
    f.dim = 1;
    f.K = K;
    f.nvar = 2;
    f.N = degree;
    f.nelx = nel;
    f.nely = 1;
    f.u.assign(static_cast<size_t>(f.n_nodes()) * f.nvar * K, 0.0);
    f.b.assign(static_cast<size_t>(f.n_nodes()) * K, 0.0);
    return f;
}

Field Field::make_2d(int nelx, int nely, int degree, int K)
{
    Field f;
    f.dim = 2;
    f.K = K;
    f.nvar = 3;
    f.N = degree;
    f.nelx = nelx;
    f.nely = nely;
    f.u.assign(static_cast<size_t>(f.n_nodes()) * f.nvar * K, 0.0);
    f.b.assign(static_cast<size_t>(f.n_nodes()) * K, 0.0);
    return f;
}

void Field::finalize_bathymetry(const SgAlgebra& alg)
{
    b_values.assign(b.size(), 0.0);
    const Mat& V = alg.eig.V();
    const double s = std::sqrt(static_cast<double>(K));
    for (int node = 0; node < n_nodes(); ++node) {
        const double* src = b_at(node);
        double* dst = b_values.data() + static_cast<size_t>(node) * K;
        for (int c = 0; c < K; ++c) {
            double acc = 0.0;
            for (int k = 0; k < K; ++k) acc += V(k, c) * src[k];
            dst[c] = s * acc;
        }
    }
}

void ghost_state(Bc bc, int K, int nvar, int normal_var, const double* interior_vals,
                 const double* periodic_vals, double* out)
{
    const double* src = bc == Bc::Periodic ? periodic_vals : interior_vals;
    for (int v = 0; v < nvar; ++v)
        for (int k = 0; k < K; ++k) {
            double val = src[v * K + k];
            if (bc == Bc::Wall && v == normal_var) val = -val;
            out[v * K + k] = val;
        }
}

namespace {

// Hot-path transform tables: row-major to-value (sqrt(K) V^T) and
// from-value (V / sqrt(K)) matrices.
struct Transforms {
    int K;
    std::vector<double> to_vals;   // [c*K + k]
    std::vector<double> from_vals; // [k*K + c]

    explicit Transforms(const SgAlgebra& alg) : K(alg.K())
    {
        const Mat& V = alg.eig.V();
        const double s = std::sqrt(static_cast<double>(K));
        to_vals.resize(static_cast<size_t>(K) * K);
        from_vals.resize(static_cast<size_t>(K) * K);
        for (int c = 0; c < K; ++c)
            for (int k = 0; k < K; ++k) {
                to_vals[c * K + k] = s * V(k, c);
                from_vals[k * K + c] = V(k, c) / s;
            }
    }

    void forward(const double* coeffs, double* vals) const
    {
        for (int c = 0; c < K; ++c) {
            double acc = 0.0;
            for (int k = 0; k < K; ++k) acc += to_vals[c * K + k] * coeffs[k];
            vals[c] = acc;
        }
    }

    void backward(const double* vals, double* coeffs) const
    {
        for (int k = 0; k < K; ++k) {
            double acc = 0.0;
            for (int c = 0; c < K; ++c) acc += from_vals[k * K + c] * vals[c];
            coeffs[k] = acc;
        }
    }
};

struct AdmissibilityFailure {
    bool failed = false;
    int node = -1;
    double value = 0.0;
};

// Converts the whole field to cell values (h, q...) and per-node velocity,
// gating positivity. Layouts mirror the field layout.
void to_value_space(const Field& field, const Transforms& tf, double eps_pos, int threads,
                    std::vector<double>& vals, std::vector<double>& vel,
                    AdmissibilityFailure& fail)
{
    const int K = field.K;
    const int nvar = field.nvar;
    const int nodes = field.n_nodes();
    vals.assign(static_cast<size_t>(nodes) * nvar * K, 0.0);
    vel.assign(static_cast<size_t>(nodes) * (nvar - 1) * K, 0.0);

#ifdef SGSWELL_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
    for (int node = 0; node < nodes; ++node) {
        for (int v = 0; v < nvar; ++v)
            tf.forward(field.at(node, v), vals.data() + (static_cast<size_t>(node) * nvar + v) * K);
        const double* hv = vals.data() + static_cast<size_t>(node) * nvar * K;
        double local_min = hv[0];
        for (int k = 1; k < K; ++k) local_min = std::min(local_min, hv[k]);
        if (local_min <= eps_pos) {
#ifdef SGSWELL_HAVE_OPENMP
#pragma omp critical
#endif
            {
                if (!fail.failed || node < fail.node) {
                    fail.failed = true;
                    fail.node = node;
                    fail.value = local_min;
                }
            }
            continue;
        }
        for (int d = 0; d < nvar - 1; ++d) {
            const double* qv = hv + (1 + d) * K;
            double* vv = vel.data() + (static_cast<size_t>(node) * (nvar - 1) + d) * K;
            for (int k = 0; k < K; ++k) vv[k] = qv[k] / hv[k];
        }
    }
    (void)threads;
}

double cell_speed_max(const double* hv, const double* vv, int K, double g)
{
    double s = 0.0;
    for (int k = 0; k < K; ++k) s = std::max(s, std::abs(vv[k]) + std::sqrt(g * hv[k]));
    return s;
}

} // namespace

void rhs_1d(const System1D& sys, const Field& field, double /*t*/, Field& dudt)
{
    const SgAlgebra& alg = *sys.alg;
    const Transforms tf(alg);
    const int K = field.K;
    const int nn = field.nn();
    const int nel = field.nelx;
    const double g = sys.g;
    const double jac = 2.0 / sys.mesh.dx();
    const bool cubic = sys.family == EcFamily::Cubic1D;
    const bool es = sys.mode == InterfaceMode::ES;

    std::vector<double> vals, vel;
    AdmissibilityFailure fail;
    to_value_space(field, tf, sys.eps_pos, sys.threads, vals, vel, fail);
    if (fail.failed) {
        const int el = fail.node / nn, i = fail.node % nn;
        throw NonPositiveHeight("rhs_1d: height eigenvalue " + std::to_string(fail.value) +
                                " at element " + std::to_string(el) + ", node " +
                                std::to_string(i) + " (x=" +
                                std::to_string(sys.mesh.node_x(sys.ops, el, i)) + ")");
    }

    std::vector<double> dv(static_cast<size_t>(field.n_nodes()) * 2 * K, 0.0);
    auto hvals = [&](int node) { return vals.data() + static_cast<size_t>(node) * 2 * K; };
    auto qvals = [&](int node) { return vals.data() + static_cast<size_t>(node) * 2 * K + K; };
    auto vvals = [&](int node) { return vel.data() + static_cast<size_t>(node) * K; };
    auto bvals = [&](int node) { return field.b_values.data() + static_cast<size_t>(node) * K; };

#ifdef SGSWELL_HAVE_OPENMP
#pragma omp parallel num_threads(sys.threads)
#endif
    {
        std::vector<double> acc(2 * K), fstar(2 * K), ghost(2 * K), ghost_v(K), ghost_b(K);
#ifdef SGSWELL_HAVE_OPENMP
#pragma omp for schedule(static)
#endif
        for (int el = 0; el < nel; ++el) {
            // Volume flux differencing, source kernel included.
            for (int i = 0; i < nn; ++i) {
                const int ni = field.node_index_1d(el, i);
                std::fill(acc.begin(), acc.end(), 0.0);
                for (int j = 0; j < nn; ++j) {
                    const int nj = field.node_index_1d(el, j);
                    const double d2 = 2.0 * sys.ops.D(i, j);
                    if (d2 == 0.0) continue;
                    const double *hi = hvals(ni), *vi = vvals(ni), *bi = bvals(ni);
                    const double *hj = hvals(nj), *vj = vvals(nj), *bj = bvals(nj);
                    for (int k = 0; k < K; ++k) {
                        const auto f = cubic ? kernels::cubic_1d(hi[k], vi[k], hj[k], vj[k], g)
                                             : kernels::central_1d(hi[k], vi[k], hj[k], vj[k], g);
                        const double db = bj[k] - bi[k];
                        const double s2 =
                            cubic ? kernels::source_cubic(hi[k], vi[k], hj[k], vj[k], db, g)
                                  : kernels::source_central(hi[k], hj[k], db, g);
                        acc[k] += d2 * f.f1;
                        acc[K + k] += d2 * (f.f2 + s2);
                    }
                }
                double* out = dv.data() + static_cast<size_t>(ni) * 2 * K;
                for (int k = 0; k < 2 * K; ++k) out[k] -= jac * acc[k];
            }

            // Interface penalties at both element ends.
            for (int side = 0; side < 2; ++side) {
                const int i = side == 0 ? 0 : nn - 1;
                const double tau = side == 0 ? -1.0 : 1.0;
                const int ni = field.node_index_1d(el, i);

                const double *h_int = hvals(ni), *q_int = qvals(ni), *v_int = vvals(ni),
                             *b_int = bvals(ni);
                const double *h_ext, *q_ext, *v_ext, *b_ext;
                const bool at_domain_edge = (side == 0 && el == 0) || (side == 1 && el == nel - 1);
                if (!at_domain_edge || sys.bc == Bc::Periodic) {
                    int nel_ext = side == 0 ? (el == 0 ? nel - 1 : el - 1)
                                            : (el == nel - 1 ? 0 : el + 1);
                    const int nx = field.node_index_1d(nel_ext, side == 0 ? nn - 1 : 0);
                    h_ext = hvals(nx);
                    q_ext = qvals(nx);
                    v_ext = vvals(nx);
                    b_ext = bvals(nx);
                } else {
                    for (int k = 0; k < K; ++k) {
                        ghost[k] = h_int[k];
                        ghost[K + k] = sys.bc == Bc::Wall ? -q_int[k] : q_int[k];
                        ghost_v[k] = sys.bc == Bc::Wall ? -v_int[k] : v_int[k];
                        ghost_b[k] = b_int[k];
                    }
                    h_ext = ghost.data();
                    q_ext = ghost.data() + K;
                    v_ext = ghost_v.data();
                    b_ext = ghost_b.data();
                }

                double lam = 0.0;
                if (es)
                    lam = std::max(cell_speed_max(h_int, v_int, K, g),
                                   cell_speed_max(h_ext, v_ext, K, g));

                for (int k = 0; k < K; ++k) {
                    const auto f = cubic
                                       ? kernels::cubic_1d(h_int[k], v_int[k], h_ext[k], v_ext[k], g)
                                       : kernels::central_1d(h_int[k], v_int[k], h_ext[k], v_ext[k], g);
                    double f1 = f.f1, f2 = f.f2;
                    if (es) {
                        // Dissipation acts on the jump oriented outward.
                        const double sgn = tau;
                        f1 -= 0.5 * lam * sgn * (h_ext[k] - h_int[k]);
                        f2 -= 0.5 * lam * sgn * (q_ext[k] - q_int[k]);
                    }
                    const double db = b_ext[k] - b_int[k];
                    const double s2 = cubic ? kernels::source_cubic(h_int[k], v_int[k], h_ext[k],
                                                                    v_ext[k], db, g)
                                            : kernels::source_central(h_int[k], h_ext[k], db, g);
                    double p1, p2;
                    kernels::physical_1d(h_int[k], v_int[k], g, p1, p2);
                    double* out = dv.data() + static_cast<size_t>(ni) * 2 * K;
                    const double scale = jac * tau / sys.ops.weights(i);
                    out[k] -= scale * (f1 - p1);
                    out[K + k] -= scale * (f2 + s2 - p2);
                }
            }
        }
    }

    dudt.time = field.time;
#ifdef SGSWELL_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(sys.threads)
#endif
    for (int node = 0; node < field.n_nodes(); ++node)
        for (int v = 0; v < 2; ++v)
            tf.backward(dv.data() + (static_cast<size_t>(node) * 2 + v) * K, dudt.at(node, v));
}

void rhs_2d(const System2D& sys, const Field& field, double t, Field& dudt)
{
    const SgAlgebra& alg = *sys.alg;
    const Transforms tf(alg);
    const int K = field.K;
    const int nn = field.nn();
    const int nelx = field.nelx, nely = field.nely;
    const double g = sys.g;
    const double jacx = 2.0 / sys.mesh.dx();
    const double jacy = 2.0 / sys.mesh.dy();
    const bool es = sys.mode == InterfaceMode::ES;

    std::vector<double> vals, vel;
    AdmissibilityFailure fail;
    to_value_space(field, tf, sys.eps_pos, sys.threads, vals, vel, fail);
    if (fail.failed) {
        throw NonPositiveHeight("rhs_2d: height eigenvalue " + std::to_string(fail.value) +
                                " at node " + std::to_string(fail.node));
    }

    std::vector<double> dv(static_cast<size_t>(field.n_nodes()) * 3 * K, 0.0);
    auto hvals = [&](int node) { return vals.data() + static_cast<size_t>(node) * 3 * K; };
    auto qvals = [&](int node, int d) {
        return vals.data() + static_cast<size_t>(node) * 3 * K + (1 + d) * K;
    };
    auto vvals = [&](int node, int d) {
        return vel.data() + (static_cast<size_t>(node) * 2 + d) * K;
    };
    auto bvals = [&](int node) { return field.b_values.data() + static_cast<size_t>(node) * K; };

    const int n_el = nelx * nely;

#ifdef SGSWELL_HAVE_OPENMP
#pragma omp parallel num_threads(sys.threads)
#endif
    {
        std::vector<double> acc(3 * K), ghost(3 * K), ghost_v(2 * K), ghost_b(K);
#ifdef SGSWELL_HAVE_OPENMP
#pragma omp for schedule(static)
#endif
        for (int el = 0; el < n_el; ++el) {
            const int ex = el % nelx, ey = el / nelx;

            // Volume flux differencing along both coordinate lines.
            for (int j = 0; j < nn; ++j)
                for (int i = 0; i < nn; ++i) {
                    const int ni = field.node_index_2d(ex, ey, i, j);
                    const double *hi = hvals(ni), *v1i = vvals(ni, 0), *v2i = vvals(ni, 1),
                                 *bi = bvals(ni);
                    std::fill(acc.begin(), acc.end(), 0.0);
                    for (int m = 0; m < nn; ++m) {
                        const double d2x = 2.0 * sys.ops.D(i, m) * jacx;
                        if (d2x != 0.0) {
                            const int nm = field.node_index_2d(ex, ey, m, j);
                            const double *hm = hvals(nm), *v1m = vvals(nm, 0),
                                         *v2m = vvals(nm, 1), *bm = bvals(nm);
                            for (int k = 0; k < K; ++k) {
                                const auto f = kernels::central_2d(hi[k], v1i[k], v2i[k], hm[k],
                                                                   v1m[k], v2m[k], 0, g);
                                const double s2 = kernels::source_central(hi[k], hm[k],
                                                                          bm[k] - bi[k], g);
                                acc[k] += d2x * f.f1;
                                acc[K + k] += d2x * (f.f2 + s2);
                                acc[2 * K + k] += d2x * f.f3;
                            }
                        }
                        const double d2y = 2.0 * sys.ops.D(j, m) * jacy;
                        if (d2y != 0.0) {
                            const int nm = field.node_index_2d(ex, ey, i, m);
                            const double *hm = hvals(nm), *v1m = vvals(nm, 0),
                                         *v2m = vvals(nm, 1), *bm = bvals(nm);
                            for (int k = 0; k < K; ++k) {
                                const auto f = kernels::central_2d(hi[k], v1i[k], v2i[k], hm[k],
                                                                   v1m[k], v2m[k], 1, g);
                                const double s3 = kernels::source_central(hi[k], hm[k],
                                                                          bm[k] - bi[k], g);
                                acc[k] += d2y * f.f1;
                                acc[K + k] += d2y * f.f2;
                                acc[2 * K + k] += d2y * (f.f3 + s3);
                            }
                        }
                    }
                    double* out = dv.data() + static_cast<size_t>(ni) * 3 * K;
                    for (int k = 0; k < 3 * K; ++k) out[k] -= acc[k];
                }

            // Face penalties: x faces (direction 0), then y faces.
            for (int dir = 0; dir < 2; ++dir) {
                const double jc = dir == 0 ? jacx : jacy;
                const Bc bc = dir == 0 ? sys.bcx : sys.bcy;
                for (int side = 0; side < 2; ++side) {
                    const double tau = side == 0 ? -1.0 : 1.0;
                    const int edge = side == 0 ? 0 : nn - 1;
                    for (int line = 0; line < nn; ++line) {
                        const int i = dir == 0 ? edge : line;
                        const int j = dir == 0 ? line : edge;
                        const int ni = field.node_index_2d(ex, ey, i, j);

                        const double *h_int = hvals(ni), *v1_int = vvals(ni, 0),
                                     *v2_int = vvals(ni, 1), *b_int = bvals(ni);
                        const double *q1_int = qvals(ni, 0), *q2_int = qvals(ni, 1);
                        const double *h_ext, *v1_ext, *v2_ext, *b_ext, *q1_ext, *q2_ext;

                        const int e_this = dir == 0 ? ex : ey;
                        const int e_max = dir == 0 ? nelx : nely;
                        const bool at_edge =
                            (side == 0 && e_this == 0) || (side == 1 && e_this == e_max - 1);
                        if (!at_edge || bc == Bc::Periodic) {
                            int e_ext = side == 0 ? (e_this == 0 ? e_max - 1 : e_this - 1)
                                                  : (e_this == e_max - 1 ? 0 : e_this + 1);
                            const int opp = side == 0 ? nn - 1 : 0;
                            const int nx = dir == 0
                                               ? field.node_index_2d(e_ext, ey, opp, j)
                                               : field.node_index_2d(ex, e_ext, i, opp);
                            h_ext = hvals(nx);
                            q1_ext = qvals(nx, 0);
                            q2_ext = qvals(nx, 1);
                            v1_ext = vvals(nx, 0);
                            v2_ext = vvals(nx, 1);
                            b_ext = bvals(nx);
                        } else {
                            const int normal = dir + 1;
                            for (int k = 0; k < K; ++k) {
                                ghost[k] = h_int[k];
                                ghost[K + k] =
                                    (bc == Bc::Wall && normal == 1) ? -q1_int[k] : q1_int[k];
                                ghost[2 * K + k] =
                                    (bc == Bc::Wall && normal == 2) ? -q2_int[k] : q2_int[k];
                                ghost_v[k] =
                                    (bc == Bc::Wall && normal == 1) ? -v1_int[k] : v1_int[k];
                                ghost_v[K + k] =
                                    (bc == Bc::Wall && normal == 2) ? -v2_int[k] : v2_int[k];
                                ghost_b[k] = b_int[k];
                            }
                            h_ext = ghost.data();
                            q1_ext = ghost.data() + K;
                            q2_ext = ghost.data() + 2 * K;
                            v1_ext = ghost_v.data();
                            v2_ext = ghost_v.data() + K;
                            b_ext = ghost_b.data();
                        }

                        double lam = 0.0;
                        if (es) {
                            const double* vd_int = dir == 0 ? v1_int : v2_int;
                            const double* vd_ext = dir == 0 ? v1_ext : v2_ext;
                            lam = std::max(cell_speed_max(h_int, vd_int, K, g),
                                           cell_speed_max(h_ext, vd_ext, K, g));
                        }

                        const double scale = jc * tau / sys.ops.weights(edge);
                        double* out = dv.data() + static_cast<size_t>(ni) * 3 * K;
                        for (int k = 0; k < K; ++k) {
                            const auto f =
                                kernels::central_2d(h_int[k], v1_int[k], v2_int[k], h_ext[k],
                                                    v1_ext[k], v2_ext[k], dir, g);
                            double f1 = f.f1, f2 = f.f2, f3 = f.f3;
                            if (es) {
                                const double sgn = tau;
                                f1 -= 0.5 * lam * sgn * (h_ext[k] - h_int[k]);
                                f2 -= 0.5 * lam * sgn * (q1_ext[k] - q1_int[k]);
                                f3 -= 0.5 * lam * sgn * (q2_ext[k] - q2_int[k]);
                            }
                            const double s =
                                kernels::source_central(h_int[k], h_ext[k], b_ext[k] - b_int[k], g);
                            double p1, p2, p3;
                            kernels::physical_2d(h_int[k], v1_int[k], v2_int[k], dir, g, p1, p2, p3);
                            out[k] -= scale * (f1 - p1);
                            out[K + k] -= scale * (f2 + (dir == 0 ? s : 0.0) - p2);
                            out[2 * K + k] -= scale * (f3 + (dir == 1 ? s : 0.0) - p3);
                        }
                    }
                }
            }
        }
    }

    dudt.time = field.time;
#ifdef SGSWELL_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(sys.threads)
#endif
    for (int node = 0; node < field.n_nodes(); ++node)
        for (int v = 0; v < 3; ++v)
            tf.backward(dv.data() + (static_cast<size_t>(node) * 3 + v) * K, dudt.at(node, v));

    if (sys.extra_source) {
        std::vector<double> add(3 * K);
#ifdef SGSWELL_HAVE_OPENMP
#pragma omp parallel for schedule(static) collapse(2) num_threads(sys.threads) \
    firstprivate(add)
#endif
        for (int ey = 0; ey < nely; ++ey)
            for (int ex = 0; ex < nelx; ++ex)
                for (int j = 0; j < nn; ++j)
                    for (int i = 0; i < nn; ++i) {
                        const double x = sys.mesh.node_x(sys.ops, ex, i);
                        const double y = sys.mesh.node_y(sys.ops, ey, j);
                        std::fill(add.begin(), add.end(), 0.0);
                        sys.extra_source(x, y, t, add.data());
                        const int ni = field.node_index_2d(ex, ey, i, j);
                        for (int v = 0; v < 3; ++v)
                            for (int k = 0; k < K; ++k) dudt.at(ni, v)[k] += add[v * K + k];
                    }
    }
}

double min_height_eigenvalue(const SgAlgebra& alg, const Field& field)
{
    const Transforms tf(alg);
    std::vector<double> hv(field.K);
    double lo = 1e300;
    for (int node = 0; node < field.n_nodes(); ++node) {
        tf.forward(field.at(node, 0), hv.data());
        for (int k = 0; k < field.K; ++k) lo = std::min(lo, hv[k]);
    }
    return lo;
}

} // namespace sgswell
