#pragma once

#include <functional>
#include <vector>

#include "sgswell/dg.hpp"

namespace sgswell {

/// Five-stage fourth-order low-storage Runge-Kutta coefficients
/// (Carpenter-Kennedy scheme, 2N-storage form).
struct LSRK54 {
    static const double A[5];
    static const double B[5];
    static const double C[5];
};

using RhsFn = std::function<void(const Field&, double t, Field& dudt)>;

/// Invoked after steps: (step index, time, state, last stage derivative).
struct StepCallback {
    int period = 1;
    std::function<void(int step, double t, const Field& field, const Field& rhs)> fn;
};

/// One low-storage RK step from field.time with step dt. The registers du
/// and rhs must have the shape of field. NonPositiveHeight raised by the
/// right-hand side is rethrown with the time and stage attached.
void lsrk54_step(const RhsFn& rhs_fn, Field& field, double dt, Field& du, Field& rhs);

/// Fixed-step march to t_final; the last step is shortened to land exactly.
/// Callbacks fire once before stepping (with a fresh RHS evaluation) and
/// after every matching step. Returns the step count.
int integrate(const RhsFn& rhs_fn, Field& field, double t_final, double dt,
              const std::vector<StepCallback>& callbacks = {},
              const std::function<void(const Field&)>& post_step_check = {});

} // namespace sgswell
