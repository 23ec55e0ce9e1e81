#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace psurg::detail {

struct LMOptions {
  int max_iterations = 200;
  // Stop once the max-norm of the residual drops below this.
  double target = 1e-13;
  double initial_damping = 1e-3;
};

struct LMResult {
  Eigen::VectorXd x;
  double residual = 0.0;  // max-norm of the final residual
  int iterations = 0;
};

// Damped Gauss-Newton for square-summable residual systems. `eval(x, r, J)`
// fills the residual and Jacobian; `project(x)` maps an accepted iterate back
// onto the parameter manifold (unit axes, unit quaternions).
template <class Eval, class Project>
LMResult levenberg_marquardt(Eval&& eval, Project&& project, Eigen::VectorXd x,
                             const LMOptions& opt) {
  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  project(x);
  eval(x, r, J);
  double cost = r.squaredNorm();
  double lambda = opt.initial_damping;
  LMResult out;
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    if (r.size() == 0 || r.lpNorm<Eigen::Infinity>() < opt.target) break;
    const Eigen::MatrixXd jtj = J.transpose() * J;
    const Eigen::VectorXd jtr = J.transpose() * r;
    const double scale = std::max(1.0, jtj.diagonal().maxCoeff());
    bool accepted = false;
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::MatrixXd a = jtj;
      a.diagonal().array() += lambda * scale;
      const Eigen::VectorXd step = a.ldlt().solve(-jtr);
      Eigen::VectorXd trial = x + step;
      project(trial);
      Eigen::VectorXd rt;
      Eigen::MatrixXd jt;
      eval(trial, rt, jt);
      const double ct = rt.squaredNorm();
      if (std::isfinite(ct) && ct < cost) {
        x = std::move(trial);
        r = std::move(rt);
        J = std::move(jt);
        cost = ct;
        lambda = std::max(lambda / 5.0, 1e-15);
        accepted = true;
        break;
      }
      lambda *= 8.0;
    }
    if (!accepted) break;
  }
  out.x = std::move(x);
  out.residual = r.size() ? r.lpNorm<Eigen::Infinity>() : 0.0;
  out.iterations = it;
  return out;
}

}  // namespace psurg::detail
