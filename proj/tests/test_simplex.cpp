#include <doctest.h>

#include "condexp/simplex.hpp"

#include <random>

using namespace condexp;

namespace {

lp::Solution solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                   const Eigen::VectorXd& c) {
  Eigen::SparseMatrix<double> sparse = A.sparseView();
  return lp::solve_standard_form(sparse, b, c);
}

}  // namespace

TEST_CASE("simplex: one-row problems pick the cheapest column") {
  Eigen::MatrixXd A(1, 3);
  A << 1.0, 1.0, 1.0;
  Eigen::VectorXd b(1);
  b << 1.0;
  Eigen::VectorXd c(3);
  c << -1.0, 0.0, 2.0;
  lp::Solution s = solve(A, b, c);
  REQUIRE(s.status == lp::Status::optimal);
  CHECK(s.value == doctest::Approx(-1.0));
  CHECK(s.x[0] == doctest::Approx(1.0));
}

TEST_CASE("simplex: a small transport problem reaches the known optimum") {
  // Two sources (masses 1, 2), two sinks (demands 2, 1), costs
  //   c = [1 3; 2 1] row-major over x_ij. Optimal plan: x11=1, x21=1,
  //   x22=1 with cost 1 + 2 + 1 = 4.
  Eigen::MatrixXd A(4, 4);
  A << 1, 1, 0, 0,   // source 1
       0, 0, 1, 1,   // source 2
       1, 0, 1, 0,   // sink 1
       0, 1, 0, 1;   // sink 2
  Eigen::VectorXd b(4);
  b << 1, 2, 2, 1;
  Eigen::VectorXd c(4);
  c << 1, 3, 2, 1;
  lp::Solution s = solve(A, b, c);
  REQUIRE(s.status == lp::Status::optimal);
  CHECK(s.value == doctest::Approx(4.0));
  CHECK((A * s.x - b).lpNorm<Eigen::Infinity>() <= 1e-9);
  CHECK(s.x.minCoeff() >= -1e-9);
}

TEST_CASE("simplex: inconsistent constraints are reported infeasible") {
  Eigen::MatrixXd A(2, 1);
  A << 1.0, 1.0;
  Eigen::VectorXd b(2);
  b << 1.0, 2.0;
  Eigen::VectorXd c(1);
  c << 0.0;
  CHECK(solve(A, b, c).status == lp::Status::infeasible);
}

TEST_CASE("simplex: free rays are reported unbounded") {
  // x1 - x2 = 0 leaves the diagonal ray free; pushing it lowers -x1.
  Eigen::MatrixXd A(1, 2);
  A << 1.0, -1.0;
  Eigen::VectorXd b(1);
  b << 0.0;
  Eigen::VectorXd c(2);
  c << -1.0, 0.0;
  CHECK(solve(A, b, c).status == lp::Status::unbounded);
}

TEST_CASE("simplex: redundant rows are dropped, not declared infeasible") {
  // Second row is twice the first; the system is consistent.
  Eigen::MatrixXd A(2, 2);
  A << 1.0, 1.0, 2.0, 2.0;
  Eigen::VectorXd b(2);
  b << 1.0, 2.0;
  Eigen::VectorXd c(2);
  c << 1.0, 0.0;
  lp::Solution s = solve(A, b, c);
  REQUIRE(s.status == lp::Status::optimal);
  CHECK(s.value == doctest::Approx(0.0));
}

TEST_CASE("simplex: negative right-hand sides are normalised away") {
  // -x1 = -1 written with a negative b entry.
  Eigen::MatrixXd A(1, 2);
  A << -1.0, 0.0;
  Eigen::VectorXd b(1);
  b << -1.0;
  Eigen::VectorXd c(2);
  c << 1.0, 1.0;
  lp::Solution s = solve(A, b, c);
  REQUIRE(s.status == lp::Status::optimal);
  CHECK(s.x[0] == doctest::Approx(1.0));
  CHECK(s.value == doctest::Approx(1.0));
}

TEST_CASE("simplex: random feasible programs satisfy their certificates") {
  // Build programs with a known feasible point; the reported optimum must
  // be feasible and no worse than the seeded point.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::uniform_real_distribution<double> positive(0.1, 1.0);

  for (int trial = 0; trial < 20; ++trial) {
    const int m = 3;
    const int n = 6;
    Eigen::MatrixXd A(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = entry(rng);
    Eigen::VectorXd x0(n);
    for (int j = 0; j < n; ++j) x0[j] = positive(rng);
    Eigen::VectorXd b = A * x0;
    Eigen::VectorXd c(n);
    for (int j = 0; j < n; ++j) c[j] = positive(rng);  // bounded below by 0

    lp::Solution s = solve(A, b, c);
    REQUIRE(s.status == lp::Status::optimal);
    CHECK((A * s.x - b).lpNorm<Eigen::Infinity>() <= 1e-7);
    CHECK(s.x.minCoeff() >= -1e-9);
    CHECK(s.value <= c.dot(x0) + 1e-7);
  }
}
