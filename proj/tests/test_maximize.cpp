#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "smt/maximize.hpp"
#include "torus_oracle.hpp"

using namespace smt;
using Catch::Approx;

namespace {

FunctionalParams disk_params(double beta, double lambda, double q, double alpha) {
  FunctionalParams p;
  p.beta = beta;
  p.lambda = lambda;
  p.q = q;
  if (alpha != 0.0) p.weight = ConicalWeight({{0.0, 0.0, alpha}});
  return p;
}

}  // namespace

TEST_CASE("subcritical disk maximization", "[maximize]") {
  MaximizeOptions opts;
  opts.residual_tol = 1e-7;
  opts.record_trace = true;
  auto res = maximize_disk(disk_params(0.9 * 4.0 * M_PI, 0.0, 2.0, 0.0), 192, opts);
  SECTION("converges with a small stationarity residual") {
    CHECK(res.report.converged);
    CHECK(res.report.residual <= 1e-6);
    CHECK_FALSE(res.report.saturated);
  }
  SECTION("value dominates the zero field and the iterate is feasible") {
    CHECK(res.report.value >= M_PI);
    CHECK(res.maximizer.dirichlet_energy() == Approx(1.0).epsilon(1e-12));
  }
  SECTION("accepted steps never decreased the functional") {
    for (std::size_t k = 1; k < res.trace.size(); ++k)
      CHECK(res.trace[k].log_value >= res.trace[k - 1].log_value - 1e-13);
  }
  SECTION("standalone residual diagnostic agrees at the maximizer") {
    auto el = euler_lagrange_residual(res.maximizer, disk_params(0.9 * 4.0 * M_PI, 0.0, 2.0, 0.0));
    CHECK(el.residual <= 1e-6);
    // at lambda = 0 the multiplier normalization gamma mu = 1 is exact
    CHECK(el.gamma * el.mu == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("euler-lagrange residual reduces to the eigen equation", "[maximize]") {
  // At beta = 0 and lambda = lambda_q the stationarity load of the q-norm
  // coupling reproduces the eigen relation of the Rayleigh minimizer.
  auto eig = lambda_q_disk(2.0, 192);
  std::vector<double> vals = eig.minimizer.values();
  const double e = eig.minimizer.dirichlet_energy();
  for (double& v : vals) v /= std::sqrt(e);
  RadialFunction u(eig.minimizer.nodes(), vals);
  auto el = euler_lagrange_residual(u, disk_params(0.0, eig.value, 2.0, 0.0));
  CHECK(el.residual <= 1e-8);
}

TEST_CASE("argmax is invariant under scaling the smooth factor", "[maximize]") {
  // V -> 2V doubles the functional at every field, so with identical seeds the
  // two ascents follow the same trajectory with doubled values.
  auto with_factor = [](double scale) {
    FunctionalParams p = disk_params(0.8 * 2.0 * M_PI, 0.0, 2.0, -0.5);
    p.weight = ConicalWeight({{0.0, 0.0, -0.5}}, [scale](double, double) { return scale; });
    MaximizeOptions opts;
    opts.residual_tol = 1e-7;
    opts.record_trace = true;
    opts.max_iterations = 800;
    return maximize_disk(p, 128, opts);
  };
  auto a = with_factor(1.0);
  auto b = with_factor(2.0);
  const std::size_t rows = std::min({a.trace.size(), b.trace.size(), std::size_t{15}});
  for (std::size_t k = 0; k < rows; ++k)
    CHECK(b.trace[k].log_value - a.trace[k].log_value == Approx(std::log(2.0)).margin(1e-8));
  CHECK(b.report.log_value - a.report.log_value == Approx(std::log(2.0)).margin(1e-7));
}

TEST_CASE("supremum scan in beta", "[maximize]") {
  const double bb = 4.0 * M_PI;
  std::vector<double> betas;
  for (double f : {0.5, 0.75, 0.875, 0.9375}) betas.push_back(f * bb);
  MaximizeOptions opts;
  opts.residual_tol = 1e-6;
  opts.max_iterations = 3000;
  auto rows = sup_convergence_scan(disk_params(bb, 0.0, 2.0, 0.0), betas, 192, opts);
  REQUIRE(rows.size() == betas.size());
  SECTION("estimates are nondecreasing in beta") {
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].value >= rows[k - 1].value);
  }
}

TEST_CASE("critical disk run exceeds the concentration ceiling", "[maximize][critical]") {
  // At the critical exponent the discrete maximizer value must exceed the
  // ceiling pi(1+e) (the existence mechanism) while staying finite.
  MaximizeOptions opts;
  opts.allow_critical = true;
  opts.max_iterations = 1500;
  opts.residual_tol = 1e-6;
  auto res = maximize_disk(disk_params(4.0 * M_PI, 0.0, 2.0, 0.0), 192, opts);
  const double ceiling = disk_threshold_bound(0.0, 0.0, 1.0, M_PI);
  CHECK(ceiling == Approx(M_PI * (1.0 + M_E)).epsilon(1e-14));
  CHECK_FALSE(res.report.saturated);
  CHECK(res.report.value > ceiling);
  CHECK(res.report.value < 20.0);
}

TEST_CASE("regime gate", "[maximize]") {
  CHECK_THROWS_AS(maximize_disk(disk_params(1.2 * 4.0 * M_PI, 0.0, 2.0, 0.0), 128), error);
  // lambda above lambda_q is likewise rejected without the critical flag
  CHECK_THROWS_AS(maximize_disk(disk_params(0.5 * 4.0 * M_PI, 7.0, 2.0, 0.0), 128), error);
}

TEST_CASE("torus maximization", "[maximize][torus]") {
  FunctionalParams p;
  p.beta = 0.6 * 4.0 * M_PI;
  p.lambda = 0.0;
  p.q = 2.0;
  MaximizeOptions opts;
  opts.residual_tol = 1e-6;
  opts.init = MaximizeInit::moser;
  opts.init_eps = 0.02;
  opts.max_iterations = 2000;
  auto res = maximize_torus(p, 64, opts);
  CHECK(res.report.converged);
  CHECK(res.report.value >= 1.0);
  CHECK(res.maximizer.dirichlet_energy() == Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(res.maximizer.mean()) < 1e-12);

  SECTION("mean correction matches a direct quadrature") {
    FunctionalParams pl = p;
    pl.lambda = 2.0;
    auto res2 = maximize_torus(pl, 64, opts);
    const auto& u = res2.maximizer;
    const std::size_t n = u.n();
    const double cell = 1.0 / static_cast<double>(n * n);
    double iu = 0.0, isgn = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double v = u(i, j);
        iu += cell * v * std::exp(res2.report.b * v * v);
        isgn += cell * (v >= 0.0 ? 1.0 : -1.0) * std::abs(v);  // q = 2
      }
    const double qn = res2.report.qnorm;
    const double c_direct = res2.report.gamma * iu + res2.report.lambda_hat * qn * qn / (qn * qn) *
                                                         std::pow(qn, 0.0) * isgn;
    CHECK(res2.report.c == Approx(c_direct).margin(1e-10));
  }
}

TEST_CASE("threshold bound", "[maximize][threshold]") {
  SECTION("disk analogue with centred weight") {
    CHECK(disk_threshold_bound(0.0, 0.0, 1.0, M_PI) ==
          Approx(M_PI * M_E + M_PI).epsilon(1e-14));
  }
  SECTION("flat torus matches the lattice-sum robin constant") {
    auto th = threshold_bound(ConicalWeight{}, 0.0, 2.0, 256);
    const double expected =
        M_PI * M_E * std::exp(4.0 * M_PI * oracle::torus_robin_constant()) + 1.0;
    CHECK(th.value == Approx(expected).epsilon(0.01));
    CHECK(th.k_max == 1.0);
    CHECK(th.area_h == Approx(1.0).epsilon(1e-12));
  }
  SECTION("negative orders restrict the candidates to the singular set") {
    ConicalWeight w({{0.0, 0.0, -0.5}, {0.5, 0.5, -0.25}});
    auto th = threshold_bound(w, 0.0, 2.0, 128);
    CHECK(th.argmax[0] == 0.0);
    CHECK(th.argmax[1] == 0.0);
    CHECK(th.k_max == Approx(w.K_torus(0.0, 0.0)).epsilon(1e-12));
  }
}
