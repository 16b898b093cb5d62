#pragma once

#include <Eigen/Dense>

namespace sgswell {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

} // namespace sgswell
