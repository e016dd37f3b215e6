#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace condexp::lp {

enum class Status { optimal, infeasible, unbounded, iteration_limit };

struct Solution {
  Status status = Status::iteration_limit;
  double value = 0.0;   // objective c'x at the returned point
  Eigen::VectorXd x;    // primal solution, size = cols(A)
  long iterations = 0;  // simplex pivots across both phases
};

// Solves  min c'x  subject to  A x = b, x >= 0  with a two-phase revised
// primal simplex (dense basis inverse, Dantzig pricing, Bland fallback on
// degenerate stalls, periodic refactorization). tol is used both for
// optimality (reduced costs) and feasibility (phase-1 residual) tests.
// max_iters < 0 picks a generous default from the problem size.
Solution solve_standard_form(const Eigen::SparseMatrix<double>& A,
                             const Eigen::VectorXd& b,
                             const Eigen::VectorXd& c, double tol = 1e-8,
                             long max_iters = -1);

}  // namespace condexp::lp
