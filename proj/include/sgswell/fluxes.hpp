#pragma once

#include "sgswell/swe_model.hpp"

namespace sgswell {

/// Entropy-conservative two-point flux families.
///  - Central1D: all nonlinear terms built from plain arithmetic averages of
///    point values; second highest velocity order.
///  - Cubic1D: adds cubic velocity-jump corrections; its matched source
///    carries the squared velocity-difference term.
///  - X2D / Y2D: the per-direction 2D central family.
enum class EcFamily { Central1D, Cubic1D, X2D, Y2D };

/// An EC two-point flux bound to a gravity constant. Consistent
/// (F(U,U) equals the physical flux) and symmetric in its two states.
struct TwoPointFlux {
    EcFamily family;
    double g;
};

/// Central-family 1D EC flux:
///   (P({h})({v}); g/2 {P(h)h} + P({v})P({h}){v})
/// with {.} the arithmetic average of the two point values and the product
/// P(h)h averaged as a whole.
std::pair<Vec, Vec> ec_flux_central_1d(const SgAlgebra& alg, const SGState1D& UL,
                                       const SGState1D& UR, double g,
                                       double eps_pos = kEpsPositivity);

/// Matched source for the central family. Returns the momentum-block
/// interface contribution -g/2 P({h}) [[b]] in the convention in which the
/// cell update adds the returned value directly (jump oriented left to
/// right).
Vec ec_source_central_1d(const SgAlgebra& alg, const SGState1D& UL, const SGState1D& UR,
                         const Vec& bL, const Vec& bR, double g,
                         double eps_pos = kEpsPositivity);

/// Cubic-correction 1D EC family:
///   F1 = P({h}){v} + 1/(4g^2) P([[v]])^2 {v}
///   F2 = g/2 {P(h)h} + P({v})P({h}){v}
///        + 1/(4g^2) P([[v]])^2 P({v}){v} - 1/(4g) P([[v]]) P([[h]]) {v}
/// The velocity corrections vanish at rest, so the family stays
/// well-balanced with its matched source.
std::pair<Vec, Vec> ec_flux_cubic_1d(const SgAlgebra& alg, const SGState1D& UL,
                                     const SGState1D& UR, double g,
                                     double eps_pos = kEpsPositivity);

/// Matched source for the cubic family in the pair convention of the
/// entropy balance: S(L,R) = g/2 P({h})[[b]] + 1/(8g) (P(v_R)-P(v_L))^2 [[b]].
Vec ec_source_cubic_1d(const SgAlgebra& alg, const SGState1D& UL, const SGState1D& UR,
                       const Vec& bL, const Vec& bR, double g,
                       double eps_pos = kEpsPositivity);

/// Per-direction 2D central EC flux on tensor grids; direction 0 is x.
Flux2D ec_flux_2d(const SgAlgebra& alg, const SGState2D& UL, const SGState2D& UR,
                  int direction, double g, double eps_pos = kEpsPositivity);

/// Direction-matched momentum-block source -g/2 P({h}) [[b]], update
/// convention as in ec_source_central_1d. Returned as a full (mass, mom1,
/// mom2) block with zeros elsewhere.
Flux2D ec_source_2d(const SgAlgebra& alg, const SGState2D& UL, const SGState2D& UR,
                    const Vec& bL, const Vec& bR, int direction, double g,
                    double eps_pos = kEpsPositivity);

/// Entropy-stable interface flux: the family flux plus local Lax-Friedrichs
/// dissipation -1/2 lambda_max [[U]] on the conservative coefficients, with
/// lambda_max the larger wave speed bound of the two states in the interface
/// direction.
std::pair<Vec, Vec> es_interface_flux(const TwoPointFlux& ec, const SgAlgebra& alg,
                                      const SGState1D& UL, const SGState1D& UR,
                                      double eps_pos = kEpsPositivity);
Flux2D es_interface_flux_2d(const TwoPointFlux& ec, const SgAlgebra& alg, const SGState2D& UL,
                            const SGState2D& UR, double eps_pos = kEpsPositivity);

/// Entropy-conservation residual of a flux family with its matched source:
/// |[[w]].F - [[Phi]] - g F_1.[[b]]| plus the source-balance residual
/// |g F_1.[[b]] + w_R.S(R,L) - w_L.S(L,R)|. Both parts vanish for the EC
/// families. For 2D families the direction-split potential is used.
double tadmor_residual(EcFamily family, const SgAlgebra& alg, const SGState1D& UL,
                       const SGState1D& UR, const Vec& bL, const Vec& bR, double g,
                       double eps_pos = kEpsPositivity);
double tadmor_residual_2d(EcFamily family, const SgAlgebra& alg, const SGState2D& UL,
                          const SGState2D& UR, const Vec& bL, const Vec& bR, double g,
                          double eps_pos = kEpsPositivity);

namespace kernels {

// Scalar two-point kernels, one stochastic cell at a time. These are the
// production building blocks; the coefficient-space wrappers above and the
// solver both reduce to them through the constant-eigenvector transform.

struct F1D {
    double f1, f2;
};
struct F2Dk {
    double f1, f2, f3;
};

inline F1D central_1d(double hL, double vL, double hR, double vR, double g)
{
    const double ha = 0.5 * (hL + hR);
    const double va = 0.5 * (vL + vR);
    const double h2a = 0.5 * (hL * hL + hR * hR);
    return {ha * va, 0.5 * g * h2a + ha * va * va};
}

inline F1D cubic_1d(double hL, double vL, double hR, double vR, double g)
{
    const double ha = 0.5 * (hL + hR);
    const double va = 0.5 * (vL + vR);
    const double h2a = 0.5 * (hL * hL + hR * hR);
    const double dv = vR - vL;
    const double dh = hR - hL;
    const double c = 1.0 / (4.0 * g * g);
    const double f1 = ha * va + c * va * dv * dv;
    const double f2 = 0.5 * g * h2a + ha * va * va + c * va * va * dv * dv -
                      c * g * va * dh * dv;
    return {f1, f2};
}

inline F2Dk central_2d(double hL, double v1L, double v2L, double hR, double v1R, double v2R,
                       int direction, double g)
{
    const double ha = 0.5 * (hL + hR);
    const double v1a = 0.5 * (v1L + v1R);
    const double v2a = 0.5 * (v2L + v2R);
    const double pa = 0.25 * g * (hL * hL + hR * hR);
    if (direction == 0) return {ha * v1a, pa + ha * v1a * v1a, ha * v1a * v2a};
    return {ha * v2a, ha * v1a * v2a, pa + ha * v2a * v2a};
}

// Pair-convention source kernels (momentum block, jump oriented L -> R).
inline double source_central(double hL, double hR, double db, double g)
{
    return 0.5 * g * 0.5 * (hL + hR) * db;
}

inline double source_cubic(double hL, double vL, double hR, double vR, double db, double g)
{
    const double dv = vR - vL;
    return source_central(hL, hR, db, g) + dv * dv * db / (8.0 * g);
}

inline void physical_1d(double h, double v, double g, double& f1, double& f2)
{
    f1 = h * v;
    f2 = h * v * v + 0.5 * g * h * h;
}

inline void physical_2d(double h, double v1, double v2, int direction, double g, double& f1,
                        double& f2, double& f3)
{
    const double p = 0.5 * g * h * h;
    if (direction == 0) {
        f1 = h * v1;
        f2 = h * v1 * v1 + p;
        f3 = h * v1 * v2;
    } else {
        f1 = h * v2;
        f2 = h * v1 * v2;
        f3 = h * v2 * v2 + p;
    }
}

} // namespace kernels

} // namespace sgswell
