#include "condexp/simplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace condexp::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr int kRefactorEvery = 64;
constexpr int kStallLimit = 300;  // degenerate pivots before Bland kicks in

struct Tableau {
  const Eigen::SparseMatrix<double>* A = nullptr;  // column-major
  Eigen::VectorXd b;
  int m = 0;
  int n = 0;

  std::vector<int> basic;  // per row: column index; >= n means artificial
  Eigen::MatrixXd Binv;
  Eigen::VectorXd xB;

  bool is_artificial(int col) const { return col >= n; }

  // Dense representation of structural or artificial column `col`.
  void column(int col, Eigen::VectorXd& out) const {
    out.setZero(m);
    if (col < n) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(*A, col); it; ++it)
        out[it.row()] = it.value();
    } else {
      out[col - n] = 1.0;
    }
  }

  // d = Binv * A_col, accumulated over the sparse entries.
  void ftran(int col, Eigen::VectorXd& d) const {
    d.setZero(m);
    if (col < n) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(*A, col); it; ++it)
        d += it.value() * Binv.col(it.row());
    } else {
      d = Binv.col(col - n);
    }
  }

  void refactorize() {
    Eigen::MatrixXd B(m, m);
    Eigen::VectorXd col(m);
    for (int r = 0; r < m; ++r) {
      column(basic[r], col);
      B.col(r) = col;
    }
    Binv = B.partialPivLu().inverse();
    xB = Binv * b;
    for (int r = 0; r < m; ++r)
      if (xB[r] < 0.0 && xB[r] > -1e-7) xB[r] = 0.0;
  }

  void pivot(int enter, int leave_row, const Eigen::VectorXd& d, double theta) {
    xB -= theta * d;
    xB[leave_row] = theta;
    for (int r = 0; r < m; ++r)
      if (xB[r] < 0.0 && xB[r] > -1e-7) xB[r] = 0.0;
    basic[leave_row] = enter;
    const double piv = d[leave_row];
    Binv.row(leave_row) /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == leave_row) continue;
      const double f = d[r];
      if (f != 0.0) Binv.row(r) -= f * Binv.row(leave_row);
    }
  }
};

// Runs primal simplex iterations on the current basis for objective `cost`
// (length n + #artificials; artificial entries are priced only if
// allow_artificial_entering). Returns optimal/unbounded/iteration_limit.
Status iterate(Tableau& t, const Eigen::VectorXd& cost, double tol,
               long max_iters, long& iters_used) {
  const int n = t.n;
  Eigen::VectorXd y(t.m), d(t.m);
  int since_refactor = 0;
  int stall = 0;
  bool bland = false;

  for (long iter = 0; iter < max_iters; ++iter) {
    // y = Binv' c_B, then price structural columns.
    Eigen::VectorXd cB(t.m);
    for (int r = 0; r < t.m; ++r) cB[r] = cost[t.basic[r]];
    y.noalias() = t.Binv.transpose() * cB;

    int enter = -1;
    double best = -tol;
    for (int j = 0; j < n; ++j) {
      double rc = cost[j];
      for (Eigen::SparseMatrix<double>::InnerIterator it(*t.A, j); it; ++it)
        rc -= y[it.row()] * it.value();
      if (rc < best - 0.0) {
        if (bland) {
          if (rc < -tol) {
            enter = j;
            break;
          }
        } else {
          best = rc;
          enter = j;
        }
      }
    }
    if (enter < 0) return Status::optimal;

    t.ftran(enter, d);

    int leave = -1;
    double theta = 0.0;
    for (int r = 0; r < t.m; ++r) {
      if (d[r] <= kPivotTol) continue;
      const double ratio = std::max(t.xB[r], 0.0) / d[r];
      if (leave < 0 || ratio < theta - 1e-12 ||
          (ratio < theta + 1e-12 && t.basic[r] < t.basic[leave])) {
        leave = r;
        theta = ratio;
      }
    }
    if (leave < 0) return Status::unbounded;

    if (theta <= 1e-12) {
      if (++stall > kStallLimit) bland = true;
    } else {
      stall = 0;
      bland = false;
    }

    t.pivot(enter, leave, d, theta);
    ++iters_used;
    if (++since_refactor >= kRefactorEvery) {
      t.refactorize();
      since_refactor = 0;
    }
  }
  return Status::iteration_limit;
}

}  // namespace

Solution solve_standard_form(const Eigen::SparseMatrix<double>& A_in,
                             const Eigen::VectorXd& b_in,
                             const Eigen::VectorXd& c, double tol,
                             long max_iters) {
  const int m0 = static_cast<int>(A_in.rows());
  const int n = static_cast<int>(A_in.cols());
  if (b_in.size() != m0 || c.size() != n)
    throw std::invalid_argument("LP dimensions disagree");

  Solution sol;
  sol.x = Eigen::VectorXd::Zero(n);
  if (m0 == 0) {
    sol.status = (n == 0 || c.minCoeff() >= -tol) ? Status::optimal
                                                  : Status::unbounded;
    sol.value = 0.0;
    return sol;
  }
  if (max_iters < 0) max_iters = 200000 + 50L * (m0 + n);

  // Orient rows so b >= 0, giving the artificial basis a feasible start.
  Eigen::SparseMatrix<double> A = A_in;
  Eigen::VectorXd b = b_in;
  {
    std::vector<char> flip(m0, 0);
    for (int r = 0; r < m0; ++r)
      if (b[r] < 0.0) {
        flip[r] = 1;
        b[r] = -b[r];
      }
    for (int j = 0; j < A.outerSize(); ++j)
      for (Eigen::SparseMatrix<double>::InnerIterator it(A, j); it; ++it)
        if (flip[it.row()]) it.valueRef() = -it.value();
  }

  Tableau t;
  t.A = &A;
  t.b = b;
  t.m = m0;
  t.n = n;
  t.basic.resize(m0);
  for (int r = 0; r < m0; ++r) t.basic[r] = n + r;
  t.Binv = Eigen::MatrixXd::Identity(m0, m0);
  t.xB = b;

  // Phase 1: drive the artificial mass to zero.
  Eigen::VectorXd phase1_cost = Eigen::VectorXd::Zero(n + m0);
  phase1_cost.tail(m0).setOnes();
  Status st = iterate(t, phase1_cost, tol, max_iters, sol.iterations);
  if (st == Status::iteration_limit) {
    sol.status = st;
    return sol;
  }
  double artificial_mass = 0.0;
  for (int r = 0; r < t.m; ++r)
    if (t.is_artificial(t.basic[r])) artificial_mass += std::max(t.xB[r], 0.0);
  if (artificial_mass > 1e-7) {
    sol.status = Status::infeasible;
    return sol;
  }

  // Pivot lingering zero-level artificials out; rows that admit no pivot are
  // redundant and get dropped before phase 2.
  std::vector<char> drop_row(t.m, 0);
  {
    Eigen::VectorXd d(t.m);
    for (int r = 0; r < t.m; ++r) {
      if (!t.is_artificial(t.basic[r])) continue;
      Eigen::RowVectorXd w = t.Binv.row(r) * A;  // row r of Binv*A
      int enter = -1;
      for (int j = 0; j < n; ++j) {
        bool in_basis = false;
        for (int rr = 0; rr < t.m; ++rr)
          if (t.basic[rr] == j) {
            in_basis = true;
            break;
          }
        if (!in_basis && std::fabs(w[j]) > 1e-7) {
          enter = j;
          break;
        }
      }
      if (enter >= 0) {
        t.ftran(enter, d);
        t.pivot(enter, r, d, 0.0);
      } else {
        drop_row[r] = 1;
      }
    }
  }
  Eigen::SparseMatrix<double> A_kept;
  if (std::any_of(drop_row.begin(), drop_row.end(), [](char f) { return f; })) {
    std::vector<int> keep;
    for (int r = 0; r < t.m; ++r)
      if (!drop_row[r]) keep.push_back(r);
    std::vector<int> new_row(t.m, -1);
    for (size_t i = 0; i < keep.size(); ++i) new_row[keep[i]] = static_cast<int>(i);

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(A.nonZeros());
    for (int j = 0; j < A.outerSize(); ++j)
      for (Eigen::SparseMatrix<double>::InnerIterator it(A, j); it; ++it)
        if (new_row[it.row()] >= 0)
          trips.emplace_back(new_row[it.row()], j, it.value());
    A_kept.resize(static_cast<int>(keep.size()), n);
    A_kept.setFromTriplets(trips.begin(), trips.end());

    Eigen::VectorXd b_kept(keep.size());
    std::vector<int> basic_kept;
    for (size_t i = 0; i < keep.size(); ++i) {
      b_kept[static_cast<int>(i)] = t.b[keep[i]];
      basic_kept.push_back(t.basic[keep[i]]);
    }
    t.A = &A_kept;
    t.b = b_kept;
    t.m = static_cast<int>(keep.size());
    t.basic = std::move(basic_kept);
    t.refactorize();
  }

  // Phase 2 on the real objective (artificial columns cost 0 and, being
  // nonbasic now, never re-enter: pricing runs over structural columns only).
  Eigen::VectorXd phase2_cost = Eigen::VectorXd::Zero(n + m0);
  phase2_cost.head(n) = c;
  st = iterate(t, phase2_cost, tol, max_iters, sol.iterations);
  sol.status = st;
  if (st != Status::optimal) return sol;

  for (int r = 0; r < t.m; ++r)
    if (t.basic[r] < n) sol.x[t.basic[r]] = std::max(t.xB[r], 0.0);
  sol.value = c.dot(sol.x);
  return sol;
}

}  // namespace condexp::lp
