#include "sgswell/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "sgswell/errors.hpp"

namespace sgswell {

namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x)
{
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0 + 1e-300);
    return {p1, dp};
}

GaussRule build_rule(int n)
{
    GaussRule rule;
    rule.points = Vec::Zero(n);
    rule.weights = Vec::Zero(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev guess, then Newton.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            std::tie(p, dp) = legendre_with_derivative(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        std::tie(p, dp) = legendre_with_derivative(n, x);
        rule.points(n - 1 - i) = x;
        rule.weights(n - 1 - i) = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int n)
{
    if (n < 1) throw Error("gauss_legendre: need at least one point");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double gauss_integrate(const std::function<double(double)>& f, double a, double b, int n)
{
    const GaussRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int q = 0; q < n; ++q) acc += rule.weights(q) * f(mid + half * rule.points(q));
    return half * acc;
}

} // namespace sgswell
