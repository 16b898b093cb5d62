#include "sgswell/time_integration.hpp"

#include <cmath>
#include <string>

#include "sgswell/errors.hpp"

namespace sgswell {

const double LSRK54::A[5] = {
    0.0,
    -567301805773.0 / 1357537059087.0,
    -2404267990393.0 / 2016746695238.0,
    -3550918686646.0 / 2091501179385.0,
    -1275806237668.0 / 842570457699.0,
};

const double LSRK54::B[5] = {
    1432997174477.0 / 9575080441755.0,
    5161836677717.0 / 13612068292357.0,
    1720146321549.0 / 2090206949498.0,
    3134564353537.0 / 4481467310338.0,
    2277821191437.0 / 14882151754819.0,
};

const double LSRK54::C[5] = {
    0.0,
    1432997174477.0 / 9575080441755.0,
    2526269341429.0 / 6820363962896.0,
    2006345519317.0 / 3224310063776.0,
    2802321613138.0 / 2924317926251.0,
};

void lsrk54_step(const RhsFn& rhs_fn, Field& field, double dt, Field& du, Field& rhs)
{
    const double t0 = field.time;
    const size_t n = field.u.size();
    std::fill(du.u.begin(), du.u.end(), 0.0);
    for (int stage = 0; stage < 5; ++stage) {
        field.time = t0 + LSRK54::C[stage] * dt;
        try {
            rhs_fn(field, field.time, rhs);
        } catch (const NonPositiveHeight& e) {
            throw NonPositiveHeight(std::string(e.what()) + " (t=" + std::to_string(field.time) +
                                    ", stage " + std::to_string(stage) + ")");
        }
        const double a = LSRK54::A[stage];
        const double b = LSRK54::B[stage];
        double* dup = du.u.data();
        double* up = field.u.data();
        const double* rp = rhs.u.data();
        for (size_t i = 0; i < n; ++i) {
            dup[i] = a * dup[i] + dt * rp[i];
            up[i] += b * dup[i];
        }
    }
    field.time = t0 + dt;
}

int integrate(const RhsFn& rhs_fn, Field& field, double t_final, double dt,
              const std::vector<StepCallback>& callbacks,
              const std::function<void(const Field&)>& post_step_check)
{
    if (dt <= 0.0) throw Error("integrate: time step must be positive");
    if (t_final < field.time) throw Error("integrate: t_final before the current time");

    Field du = field, rhs = field;
    if (!callbacks.empty()) {
        rhs_fn(field, field.time, rhs);
        for (const auto& cb : callbacks) cb.fn(0, field.time, field, rhs);
    }

    int step = 0;
    while (field.time < t_final - 1e-12 * std::max(1.0, std::abs(t_final))) {
        const double remaining = t_final - field.time;
        const double h = std::min(dt, remaining);
        lsrk54_step(rhs_fn, field, h, du, rhs);
        ++step;
        if (post_step_check) post_step_check(field);
        for (const auto& cb : callbacks)
            if (cb.fn && (step % std::max(1, cb.period) == 0 || field.time >= t_final - 1e-12))
                cb.fn(step, field.time, field, rhs);
    }
    return step;
}

} // namespace sgswell
