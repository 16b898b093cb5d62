#include "sgswell/swe_model.hpp"

#include <cmath>

#include "sgswell/errors.hpp"

namespace sgswell {

Vec admissible_height_values(const SgAlgebra& alg, const Vec& h, double eps_pos)
{
    Vec hv = alg.eig.to_values(h);
    if (hv.minCoeff() <= eps_pos)
        throw NonPositiveHeight("height eigenvalue " + std::to_string(hv.minCoeff()) +
                                " at or below the positivity guard");
    return hv;
}

Vec velocity(const SgAlgebra& alg, const SGState1D& state, double eps_pos)
{
    const Vec hv = admissible_height_values(alg, state.h, eps_pos);
    const Vec qv = alg.eig.to_values(state.q);
    return alg.eig.from_values(qv.cwiseQuotient(hv));
}

std::pair<Vec, Vec> velocity(const SgAlgebra& alg, const SGState2D& state, double eps_pos)
{
    const Vec hv = admissible_height_values(alg, state.h, eps_pos);
    const Vec q1v = alg.eig.to_values(state.q1);
    const Vec q2v = alg.eig.to_values(state.q2);
    return {alg.eig.from_values(q1v.cwiseQuotient(hv)),
            alg.eig.from_values(q2v.cwiseQuotient(hv))};
}

std::pair<Vec, Vec> flux_1d(const SgAlgebra& alg, const SGState1D& state, double g,
                            double eps_pos)
{
    const Vec hv = admissible_height_values(alg, state.h, eps_pos);
    const Vec qv = alg.eig.to_values(state.q);
    const Vec vv = qv.cwiseQuotient(hv);
    const Vec mom = qv.cwiseProduct(vv) + 0.5 * g * hv.cwiseProduct(hv);
    return {state.q, alg.eig.from_values(mom)};
}

std::pair<Flux2D, Flux2D> flux_2d(const SgAlgebra& alg, const SGState2D& state, double g,
                                  double eps_pos)
{
    const Vec hv = admissible_height_values(alg, state.h, eps_pos);
    const Vec q1v = alg.eig.to_values(state.q1);
    const Vec q2v = alg.eig.to_values(state.q2);
    const Vec v1v = q1v.cwiseQuotient(hv);
    const Vec v2v = q2v.cwiseQuotient(hv);
    const Vec pressure = 0.5 * g * hv.cwiseProduct(hv);
    Flux2D fx, fy;
    fx.mass = state.q1;
    fx.mom1 = alg.eig.from_values(q1v.cwiseProduct(v1v) + pressure);
    fx.mom2 = alg.eig.from_values(q2v.cwiseProduct(v1v));
    fy.mass = state.q2;
    fy.mom1 = alg.eig.from_values(q1v.cwiseProduct(v2v));
    fy.mom2 = alg.eig.from_values(q2v.cwiseProduct(v2v) + pressure);
    return {fx, fy};
}

EntropyQuantities1D entropy_quantities_1d(const SgAlgebra& alg, const SGState1D& state,
                                          const Vec& b, double g, double eps_pos)
{
    const int K = alg.K();
    const Vec hv = admissible_height_values(alg, state.h, eps_pos);
    const Vec qv = alg.eig.to_values(state.q);
    const Vec bv = alg.eig.to_values(b);
    const Vec vv = qv.cwiseQuotient(hv);

    // Inner products of coefficient vectors equal cell-value means.
    EntropyQuantities1D out;
    out.eta = 0.0;
    out.flux = 0.0;
    out.potential = 0.0;
    Vec w1v(K);
    for (int k = 0; k < K; ++k) {
        const double h = hv(k), q = qv(k), v = vv(k), bb = bv(k);
        out.eta += 0.5 * (q * v + g * h * h) + g * h * bb;
        out.flux += 0.5 * h * v * v * v + g * q * h + g * q * bb;
        out.potential += 0.5 * g * v * h * h;
        w1v(k) = -0.5 * v * v + g * (h + bb);
    }
    out.eta /= K;
    out.flux /= K;
    out.potential /= K;

    out.v = alg.eig.from_values(vv);
    out.w = Vec(2 * K);
    out.w.head(K) = alg.eig.from_values(w1v);
    out.w.tail(K) = out.v;
    return out;
}

EntropyQuantities2D entropy_quantities_2d(const SgAlgebra& alg, const SGState2D& state,
                                          const Vec& b, double g, double eps_pos)
{
    const int K = alg.K();
    const Vec hv = admissible_height_values(alg, state.h, eps_pos);
    const Vec q1v = alg.eig.to_values(state.q1);
    const Vec q2v = alg.eig.to_values(state.q2);
    const Vec bv = alg.eig.to_values(b);
    const Vec v1v = q1v.cwiseQuotient(hv);
    const Vec v2v = q2v.cwiseQuotient(hv);

    EntropyQuantities2D out;
    out.eta = out.flux1 = out.flux2 = out.potential1 = out.potential2 = 0.0;
    Vec w1v(K);
    for (int k = 0; k < K; ++k) {
        const double h = hv(k), bb = bv(k);
        const double v1 = v1v(k), v2 = v2v(k);
        const double q1 = q1v(k), q2 = q2v(k);
        out.eta += 0.5 * (q1 * v1 + q2 * v2 + g * h * h) + g * h * bb;
        out.flux1 += 0.5 * h * v1 * (v1 * v1 + v2 * v2) + g * q1 * h + g * q1 * bb;
        out.flux2 += 0.5 * h * v2 * (v1 * v1 + v2 * v2) + g * q2 * h + g * q2 * bb;
        out.potential1 += 0.5 * g * v1 * h * h;
        out.potential2 += 0.5 * g * v2 * h * h;
        w1v(k) = -0.5 * (v1 * v1 + v2 * v2) + g * (h + bb);
    }
    out.eta /= K;
    out.flux1 /= K;
    out.flux2 /= K;
    out.potential1 /= K;
    out.potential2 /= K;
    out.potential = out.potential1 + out.potential2;

    out.v1 = alg.eig.from_values(v1v);
    out.v2 = alg.eig.from_values(v2v);
    out.w = Vec(3 * K);
    out.w.head(K) = alg.eig.from_values(w1v);
    out.w.segment(K, K) = out.v1;
    out.w.tail(K) = out.v2;
    return out;
}

namespace {

double speed_from_values(const Vec& hv, const Vec& qv, double g)
{
    double s = 0.0;
    for (int k = 0; k < hv.size(); ++k)
        s = std::max(s, std::abs(qv(k) / hv(k)) + std::sqrt(g * hv(k)));
    return s;
}

} // namespace

double wave_speed_bound(const SgAlgebra& alg, const SGState1D& state, double g, double eps_pos)
{
    const Vec hv = admissible_height_values(alg, state.h, eps_pos);
    return speed_from_values(hv, alg.eig.to_values(state.q), g);
}

double wave_speed_bound(const SgAlgebra& alg, const SGState2D& state, int direction, double g,
                        double eps_pos)
{
    const Vec hv = admissible_height_values(alg, state.h, eps_pos);
    const Vec qv = alg.eig.to_values(direction == 0 ? state.q1 : state.q2);
    return speed_from_values(hv, qv, g);
}

std::pair<Vec, Vec> roe_flux_1d(const SgAlgebra& alg, const SGState1D& state, double g,
                                double eps_pos)
{
    admissible_height_values(alg, state.h, eps_pos);
    const Vec alpha = sg_sqrt(alg.eig, state.h, eps_pos);
    const Vec beta = sg_inverse_apply(alg.eig, alpha, state.q, eps_pos);
    const Vec h_rebuilt = sg_apply(alg.eig, alpha, alpha);
    const Vec mom =
        sg_apply(alg.eig, beta, beta) + 0.5 * g * sg_apply(alg.eig, h_rebuilt, h_rebuilt);
    return {state.q, mom};
}

std::pair<double, double> roe_entropy_pair(const SgAlgebra& alg, const SGState1D& state,
                                           const Vec& b, double g, double eps_pos)
{
    admissible_height_values(alg, state.h, eps_pos);
    const Vec alpha = sg_sqrt(alg.eig, state.h, eps_pos);
    const Vec beta = sg_inverse_apply(alg.eig, alpha, state.q, eps_pos);

    const Vec pa_a = sg_apply(alg.eig, alpha, alpha); // P(alpha) alpha
    const Vec pa_b = sg_apply(alg.eig, alpha, b);     // P(alpha) b
    const double eta = 0.5 * (g * pa_a.dot(pa_a) + beta.dot(beta)) + g * alpha.dot(pa_b);

    const Vec pb_beta = sg_apply(alg.eig, beta, beta); // P(beta) beta
    const Vec pinv_a_pb = sg_inverse_apply(alg.eig, alpha, pb_beta, eps_pos);
    const Vec pa_beta = sg_apply(alg.eig, alpha, beta);
    const double flux =
        0.5 * beta.dot(pinv_a_pb) + g * pa_a.dot(pa_beta) + g * beta.dot(pa_b);
    return {eta, flux};
}

} // namespace sgswell
