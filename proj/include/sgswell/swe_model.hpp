#pragma once

#include "sgswell/algebra.hpp"
#include "sgswell/types.hpp"

namespace sgswell {

/// Spectral coefficients of water depth and discharge at one spatial point.
/// Admissible states have every eigenvalue of P(h) strictly positive, i.e.
/// positive depth in every stochastic cell.
struct SGState1D {
    Vec h;
    Vec q;
};

struct SGState2D {
    Vec h;
    Vec q1;
    Vec q2;
};

/// Entropy, entropy flux(es), entropy variables, and potential at a state.
struct EntropyQuantities1D {
    double eta;     // entropy
    double flux;    // entropy flux H
    double potential; // Phi = w.F - H
    Vec w;          // entropy variables, size 2K
    Vec v;          // velocity coefficients
};

struct EntropyQuantities2D {
    double eta;
    double flux1, flux2; // per-direction entropy fluxes
    double potential;    // potential1 + potential2
    double potential1, potential2;
    Vec w; // size 3K
    Vec v1, v2;
};

/// Cell values of h (the eigenvalues of P(h)); throws NonPositiveHeight when
/// any is <= eps_pos. All model operations gate on this.
Vec admissible_height_values(const SgAlgebra& alg, const Vec& h,
                             double eps_pos = kEpsPositivity);

/// Velocity coefficients v = P(h)^{-1} q.
Vec velocity(const SgAlgebra& alg, const SGState1D& state, double eps_pos = kEpsPositivity);
std::pair<Vec, Vec> velocity(const SgAlgebra& alg, const SGState2D& state,
                             double eps_pos = kEpsPositivity);

/// Physical flux (q; P(q)P^{-1}(h)q + g/2 P(h)h), returned as (mass, momentum)
/// coefficient blocks.
std::pair<Vec, Vec> flux_1d(const SgAlgebra& alg, const SGState1D& state, double g,
                            double eps_pos = kEpsPositivity);

/// Physical fluxes in x and y; each is (mass, momentum1, momentum2).
struct Flux2D {
    Vec mass, mom1, mom2;
};
std::pair<Flux2D, Flux2D> flux_2d(const SgAlgebra& alg, const SGState2D& state, double g,
                                  double eps_pos = kEpsPositivity);

/// Entropy machinery for the 1D system:
///   eta = 1/2 (q.P^{-1}(h)q + g h.h) + g h.b
///   H   = 1/2 v.P(q)v + g q.h + g q.b
///   w   = (-1/2 P(v)v + g(h+b); v)
///   Phi = g/2 v.P(h)h
EntropyQuantities1D entropy_quantities_1d(const SgAlgebra& alg, const SGState1D& state,
                                          const Vec& b, double g,
                                          double eps_pos = kEpsPositivity);

EntropyQuantities2D entropy_quantities_2d(const SgAlgebra& alg, const SGState2D& state,
                                          const Vec& b, double g,
                                          double eps_pos = kEpsPositivity);

/// Sharp bound max_k |lambda_k(v)| + sqrt(g lambda_k(h)) on the Jacobian
/// spectral radius, from the semi-analytic SG eigenvalues.
double wave_speed_bound(const SgAlgebra& alg, const SGState1D& state, double g,
                        double eps_pos = kEpsPositivity);

/// 2D variant; direction 0 uses v1, direction 1 uses v2.
double wave_speed_bound(const SgAlgebra& alg, const SGState2D& state, int direction, double g,
                        double eps_pos = kEpsPositivity);

/// Flux of the square-root-variable form of the system, assembled through
/// alpha = h^{1/2} and beta = P^{-1}(alpha) q. Agrees with flux_1d for
/// constant-eigenvector bases; kept as an equivalence oracle.
std::pair<Vec, Vec> roe_flux_1d(const SgAlgebra& alg, const SGState1D& state, double g,
                                double eps_pos = kEpsPositivity);

/// Entropy pair assembled in the square-root variables; agrees with
/// entropy_quantities_1d for constant-eigenvector bases.
std::pair<double, double> roe_entropy_pair(const SgAlgebra& alg, const SGState1D& state,
                                           const Vec& b, double g,
                                           double eps_pos = kEpsPositivity);

} // namespace sgswell
