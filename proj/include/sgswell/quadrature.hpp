#pragma once

#include <functional>

#include "sgswell/types.hpp"

namespace sgswell {

/// Gauss-Legendre rule on [-1,1] with unit weight function.
struct GaussRule {
    Vec points;
    Vec weights; // sum to 2
};

/// Returns the n-point Gauss-Legendre rule (cached; thread-safe after first use
/// for a given n only through the returned reference).
const GaussRule& gauss_legendre(int n);

/// Integrates f over [a,b] with an n-point Gauss-Legendre rule.
double gauss_integrate(const std::function<double(double)>& f, double a, double b, int n);

} // namespace sgswell
