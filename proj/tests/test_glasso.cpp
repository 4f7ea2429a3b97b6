#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "netrecon/errors.hpp"
#include "netrecon/glasso.hpp"
#include "netrecon/simulate.hpp"

using namespace netrecon;

TEST_CASE("zero penalty inverts the covariance") {
  Eigen::MatrixXd S(4, 4);
  S << 2.0, 0.5, 0.2, 0.0,
       0.5, 1.5, 0.3, 0.1,
       0.2, 0.3, 1.8, 0.4,
       0.0, 0.1, 0.4, 1.2;
  GlassoOptions o;
  auto r = graphical_lasso(S, o);
  CHECK(r.converged);
  CHECK((r.theta * S - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("two-variable closed form with an active penalty") {
  Eigen::MatrixXd S(2, 2);
  S << 2.0, 0.8,
       0.8, 1.5;
  GlassoOptions o;
  o.rho_gl = 0.3;
  auto r = graphical_lasso(S, o);
  // stationarity gives theta = inverse of [[2, 0.5], [0.5, 1.5]]
  Eigen::MatrixXd Wstar(2, 2);
  Wstar << 2.0, 0.5,
           0.5, 1.5;
  const Eigen::MatrixXd expect = Wstar.inverse();
  CHECK((r.theta - expect).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(glasso_kkt_residual(S, r.theta, o.rho_gl) < 1e-5);
}

TEST_CASE("a penalty above every off-diagonal entry gives a diagonal precision") {
  Eigen::MatrixXd S(3, 3);
  S << 1.0, 0.3, -0.2,
       0.3, 2.0, 0.25,
       -0.2, 0.25, 1.5;
  GlassoOptions o;
  o.rho_gl = 0.35;
  auto r = graphical_lasso(S, o);
  for (int i = 0; i < 3; ++i) {
    CHECK(r.theta(i, i) == doctest::Approx(1.0 / S(i, i)).epsilon(1e-8));
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(r.theta(i, j) == 0.0);
  }
}

TEST_CASE("stationarity holds on a denser problem") {
  Eigen::MatrixXd A(5, 5);
  A << 3, 1, 0, 0.5, 0,
       1, 4, 1, 0, 0.2,
       0, 1, 3.5, 1, 0,
       0.5, 0, 1, 5, 1,
       0, 0.2, 0, 1, 2.5;
  const Eigen::MatrixXd S = A * A.transpose() / 5.0;  // SPD
  GlassoOptions o;
  o.rho_gl = 0.1;
  auto r = graphical_lasso(S, o);
  CHECK(r.converged);
  CHECK(glasso_kkt_residual(S, r.theta, o.rho_gl) < 1e-4);
}

TEST_CASE("edge extraction and sign-based pruning conventions") {
  Eigen::MatrixXd th(3, 3);
  th << 1.0, -0.5, 0.0002,
       -0.5, 1.0, 0.4,
       0.0002, 0.4, 1.0;
  CHECK(glasso_topology(th, 1e-3) == EdgeSet{{0, 1}, {1, 2}});
  // (1,2) has a positive entry above eps -> dropped by the sign rule
  CHECK(glasso_sign_pruned(th, 1e-3) == EdgeSet{{0, 1}});
  CHECK(glasso_topology(th, 0.01) == EdgeSet{{0, 1}, {1, 2}});
}

TEST_CASE("sample covariance matches the direct formula") {
  Panel p;
  p.dt = 1.0;
  p.x.resize(1000, 2);
  GaussianStream g(17);
  for (long long k = 0; k < 1000; ++k) {
    p.x(k, 0) = g.next() + 1.0;
    p.x(k, 1) = 0.5 * p.x(k, 0) + g.next();
  }
  auto S = sample_covariance(p);
  Eigen::RowVector2d mu = p.x.colwise().mean();
  double c01 = 0;
  for (long long k = 0; k < 1000; ++k)
    c01 += (p.x(k, 0) - mu(0)) * (p.x(k, 1) - mu(1));
  CHECK(S(0, 1) == doctest::Approx(c01 / 1000).epsilon(1e-12));
  CHECK(S(1, 0) == doctest::Approx(S(0, 1)));
}

TEST_CASE("covariance input validation") {
  Eigen::MatrixXd bad(2, 2);
  bad << 1.0, 0.5,
         0.2, 1.0;
  GlassoOptions o;
  CHECK_THROWS_AS(graphical_lasso(bad, o), usage_error);
  Eigen::MatrixXd negdiag(2, 2);
  negdiag << -1.0, 0.0,
             0.0, 1.0;
  CHECK_THROWS_AS(graphical_lasso(negdiag, o), usage_error);
  o.rho_gl = -0.1;
  Eigen::MatrixXd ok = Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(graphical_lasso(ok, o), usage_error);
}
