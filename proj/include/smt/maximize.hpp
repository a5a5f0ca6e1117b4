#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "smt/conical_weight.hpp"
#include "smt/disk_solver.hpp"
#include "smt/errors.hpp"
#include "smt/radial_families.hpp"
#include "smt/rng.hpp"
#include "smt/test_family.hpp"
#include "smt/torus_fft.hpp"
#include "smt/torus_functional.hpp"
#include "smt/torus_green.hpp"
#include "smt/torus_solver.hpp"

namespace smt {

enum class MaximizeInit { family, moser, noise };

struct MaximizeOptions {
  std::size_t max_iterations = 5000;
  double residual_tol = 1e-7;
  std::uint64_t seed = 0;
  MaximizeInit init = MaximizeInit::family;
  double init_eps = 0.05;
  bool allow_critical = false;
  bool record_trace = false;
};

struct TraceRow {
  std::size_t iteration;
  double log_value;
  double residual;
  double step;
};

struct MaximizerReport {
  double value = 0.0;
  double log_value = 0.0;
  bool saturated = false;
  bool converged = false;
  std::size_t iterations = 0;
  double residual = 0.0;
  double qnorm = 0.0;
  // Euler-Lagrange coefficients of the stationarity system
  //   -Lap u = gamma h u e^{b u^2} + lambda_hat ||u||_q^{2-q} |u|^{q-2} u - c
  double b = 0.0;
  double gamma = 0.0;
  double c = 0.0;
  double mu = 0.0;  // integral of h u^2 e^{b u^2}
  double lambda_hat = 0.0;
};

struct ELResidual {
  double residual = 0.0;
  double b = 0.0;
  double gamma = 0.0;
  double c = 0.0;
  double mu = 0.0;
  double lambda_hat = 0.0;
  double qnorm = 0.0;
};

namespace detail {

struct EvalRecord {
  double log_value = 0.0;
  bool saturated = false;
  double qn = 0.0;    // ||u||_q
  double b = 0.0;     // beta (1 + lambda ||u||_q^2)
  double mu = 0.0;    // integral h u^2 e^{b u^2}
  double iu1 = 0.0;   // integral h u e^{b u^2}
  double isgn = 0.0;  // integral |u|^{q-2} u (plain measure)
};

// Multipliers of the stationarity system, fixed by exact feasibility
// |grad u|^2 = 1: gamma mu + lambda_hat ||u||_q^2 = 1 with
// lambda_hat = lambda beta gamma mu / b, which gives
//   gamma = (1 + lambda N) / (mu (1 + 2 lambda N)),   N = ||u||_q^2,
//   lambda_hat = lambda / (1 + 2 lambda N).
// At lambda = 0 this is the plain normalization gamma mu = 1.
inline void fill_multipliers(const EvalRecord& ev, double beta, double lambda,
                             MaximizerReport& rep) {
  const double N = ev.qn * ev.qn;
  rep.b = ev.b;
  rep.mu = ev.mu;
  rep.qnorm = ev.qn;
  rep.gamma = (1.0 + lambda * N) / (ev.mu * (1.0 + 2.0 * lambda * N));
  rep.lambda_hat = lambda / (1.0 + 2.0 * lambda * N);
  (void)beta;
}

template <class Space>
struct AscentResult {
  typename Space::Field field;
  MaximizerReport report;
  std::vector<TraceRow> trace;
};

template <class Space>
AscentResult<Space> ascend(Space& space, typename Space::Field u, const MaximizeOptions& opts) {
  space.project(u);
  space.normalize_energy(u);

  AscentResult<Space> out{u, {}, {}};
  typename Space::Field u_prev = u, d_prev = u;
  bool have_prev = false;
  double sigma = 0.0;

  EvalRecord ev = space.eval(u);
  for (std::size_t it = 0; it <= opts.max_iterations; ++it) {
    out.report.iterations = it;
    if (ev.saturated) {
      out.report.saturated = true;
      break;
    }
    auto g = space.functional_gradient(u, ev);
    const double theta = 0.5 * space.dot(u, g);
    auto Ku = space.stiffness_apply(u);
    auto rho = g;
    space.axpy(rho, -2.0 * theta, Ku);
    space.mean_project(rho);
    auto d = space.precond(rho);
    const double rho_d = std::max(0.0, space.dot(rho, d));
    const double residual = std::sqrt(rho_d) / std::max(2.0 * std::abs(theta), 1e-300);
    out.report.residual = residual;
    if (opts.record_trace) out.trace.push_back({it, ev.log_value, residual, sigma});
    if (residual <= opts.residual_tol) {
      out.report.converged = true;
      break;
    }
    if (it == opts.max_iterations) break;

    if (!have_prev) {
      sigma = 0.5 / std::max(std::sqrt(rho_d), 1e-300);
    } else {
      // Barzilai-Borwein step in the Dirichlet metric from the last move.
      auto s = u;
      space.axpy(s, -1.0, u_prev);
      auto y = d_prev;
      space.axpy(y, -1.0, d);
      const double ss = space.dot(s, space.stiffness_apply(s));
      const double sy = space.dot(s, space.stiffness_apply(y));
      if (std::abs(sy) > 1e-300) sigma = std::min(std::max(std::abs(ss / sy), 1e-8), 1e4);
    }

    u_prev = u;
    d_prev = d;
    bool accepted = false;
    for (int halving = 0; halving < 45 && !accepted; ++halving) {
      auto trial = u;
      space.axpy(trial, sigma, d);
      space.project(trial);
      space.normalize_energy(trial);
      EvalRecord trial_ev = space.eval(trial);
      if (trial_ev.log_value >= ev.log_value) {
        u = std::move(trial);
        ev = trial_ev;
        accepted = true;
        have_prev = true;
      } else {
        sigma *= 0.5;
      }
    }
    if (!accepted) break;  // numerical floor: residual reported as-is
  }

  out.field = u;
  out.report.log_value = ev.log_value;
  const auto I = ExpIntegral::from_log(ev.log_value);
  out.report.value = I.value;
  out.report.saturated = out.report.saturated || I.saturated;
  fill_multipliers(ev, space.beta(), space.lambda(), out.report);
  out.report.c = space.mean_multiplier(ev, out.report.gamma, out.report.lambda_hat);
  return out;
}

// ---------------------------------------------------------------------------
// Disk backend: nodal radial fields on the log-geometric grid.

class DiskSpace {
 public:
  using Field = std::vector<double>;

  DiskSpace(std::vector<double> nodes, const FunctionalParams& params)
      : params_(params),
        K_(nodes),
        quad_weighted_(build_disk_quadrature(K_.nodes(), params.weight.disk_order(),
                                             params.weight.has_smooth_factor()
                                                 ? std::function<double(double)>(
                                                       [w = params.weight](double r) {
                                                         return w.V_radial(r);
                                                       })
                                                 : std::function<double(double)>())),
        quad_plain_(build_disk_quadrature(K_.nodes(), 0.0)) {}

  double beta() const { return params_.beta; }
  double lambda() const { return params_.lambda; }
  const DiskStiffness& stiffness() const { return K_; }

  void project(Field& u) const { K_.project(u); }
  void mean_project(Field&) const {}

  void normalize_energy(Field& u) const {
    const double e = K_.energy(u);
    require(e > 0.0, errc::degenerate_input, "maximize: zero-energy iterate");
    const double s = 1.0 / std::sqrt(e);
    for (double& v : u) v *= s;
  }

  Field stiffness_apply(const Field& u) const { return K_.apply(u); }
  Field precond(const Field& rho) const { return K_.solve(rho); }

  double dot(const Field& a, const Field& b) const {
    double s = 0.0;
    for (std::size_t i = 1; i + 1 < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  void axpy(Field& y, double a, const Field& x) const {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  }

  EvalRecord eval(const Field& u) const {
    EvalRecord ev;
    ev.qn = std::pow(disk_qnorm_pow(quad_plain_, u, params_.q), 1.0 / params_.q);
    ev.b = params_.beta * (1.0 + params_.lambda * ev.qn * ev.qn);
    LogSumExp acc;
    double max_e = -1e300;
    for (const auto& p : quad_weighted_.points) {
      const double v = quad_weighted_.value_at(u, p);
      const double e = p.log_weight + ev.b * v * v;
      acc.add(e);
      max_e = std::max(max_e, e);
    }
    ev.log_value = acc.log();
    ev.saturated = max_e > 700.0;
    if (!ev.saturated) {
      for (const auto& p : quad_weighted_.points) {
        const double v = quad_weighted_.value_at(u, p);
        const double w = std::exp(p.log_weight + ev.b * v * v);
        ev.mu += w * v * v;
        ev.iu1 += w * v;
      }
      for (const auto& p : quad_plain_.points) {
        const double v = quad_plain_.value_at(u, p);
        ev.isgn += std::exp(p.log_weight) * std::pow(std::abs(v), params_.q - 1.0) *
                   (v >= 0.0 ? 1.0 : -1.0);
      }
    }
    return ev;
  }

  Field functional_gradient(const Field& u, const EvalRecord& ev) const {
    Field g(u.size(), 0.0);
    for (const auto& p : quad_weighted_.points) {
      const double v = quad_weighted_.value_at(u, p);
      const double w = std::exp(p.log_weight + ev.b * v * v) * 2.0 * ev.b * v;
      g[p.left] += w * (1.0 - p.theta);
      g[p.right] += w * p.theta;
    }
    if (params_.lambda > 0.0) {
      auto dQ = disk_qnorm_pow_gradient(quad_plain_, u, params_.q);
      const double chain = params_.beta * params_.lambda * ev.mu * (2.0 / params_.q) *
                           std::pow(ev.qn, 2.0 - params_.q);
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += chain * dQ[i];
    }
    g[1] += g[0];
    g[0] = 0.0;
    g.back() = 0.0;
    return g;
  }

  // No mean constraint on the disk.
  double mean_multiplier(const EvalRecord&, double, double) const { return 0.0; }

  // Load vector of the stationarity right-hand side
  //   gamma h u e^{b u^2} + lambda_hat ||u||_q^{2-q} |u|^{q-2} u,
  // paired against the nodal basis; well defined also at beta = 0.
  Field el_load(const Field& u, const EvalRecord& ev, double gamma, double lambda_hat,
                double /*c*/) const {
    Field f(u.size(), 0.0);
    for (const auto& p : quad_weighted_.points) {
      const double v = quad_weighted_.value_at(u, p);
      const double w = gamma * std::exp(p.log_weight + ev.b * v * v) * v;
      f[p.left] += w * (1.0 - p.theta);
      f[p.right] += w * p.theta;
    }
    const double lcoef = lambda_hat * std::pow(ev.qn, 2.0 - params_.q);
    if (lcoef != 0.0) {
      for (const auto& p : quad_plain_.points) {
        const double v = quad_plain_.value_at(u, p);
        const double w = lcoef * std::exp(p.log_weight) * std::pow(std::abs(v), params_.q - 1.0) *
                         (v >= 0.0 ? 1.0 : -1.0);
        f[p.left] += w * (1.0 - p.theta);
        f[p.right] += w * p.theta;
      }
    }
    f[1] += f[0];
    f[0] = 0.0;
    f.back() = 0.0;
    return f;
  }

 private:
  FunctionalParams params_;
  DiskStiffness K_;
  DiskQuadrature quad_weighted_;
  DiskQuadrature quad_plain_;
};

// ---------------------------------------------------------------------------
// Torus backend.

class TorusSpace {
 public:
  using Field = TorusField;

  TorusSpace(std::size_t n, const FunctionalParams& params)
      : params_(params), poisson_(n), table_(params.weight, n), cell_(1.0 / double(n * n)) {}

  double beta() const { return params_.beta; }
  double lambda() const { return params_.lambda; }
  const TorusWeightTable& table() const { return table_; }

  void project(Field& u) const { u.subtract_mean(); }
  void mean_project(Field& rho) const { rho.subtract_mean(); }

  void normalize_energy(Field& u) const {
    const double e = u.dirichlet_energy();
    require(e > 0.0, errc::degenerate_input, "maximize: zero-energy iterate");
    const double s = 1.0 / std::sqrt(e);
    for (double& v : u.values()) v *= s;
  }

  Field stiffness_apply(const Field& u) const { return u.stencil_apply(); }

  Field precond(const Field& rho) const {
    Field d = poisson_.solve_mean_zero(rho);
    const double nn = static_cast<double>(d.n() * d.n());
    for (double& v : d.values()) v *= nn;  // L^+ = n^2 (-Lap_h)^+
    return d;
  }

  double dot(const Field& a, const Field& b) const { return a.dot(b); }

  void axpy(Field& y, double a, const Field& x) const {
    for (std::size_t k = 0; k < y.size(); ++k) y.values()[k] += a * x.values()[k];
  }

  EvalRecord eval(const Field& u) const {
    EvalRecord ev;
    ev.qn = u.lp_norm(params_.q);
    ev.b = params_.beta * (1.0 + params_.lambda * ev.qn * ev.qn);
    LogSumExp acc;
    double max_e = -1e300;
    const std::size_t n = u.n();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double v = u(i, j);
        const double e = table_.log_weight(i, j) + ev.b * v * v;
        acc.add(e);
        max_e = std::max(max_e, e);
      }
    ev.log_value = acc.log();
    ev.saturated = max_e > 700.0;
    if (!ev.saturated) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const double v = u(i, j);
          const double w = std::exp(table_.log_weight(i, j) + ev.b * v * v);
          ev.mu += w * v * v;
          ev.iu1 += w * v;
          ev.isgn += cell_ * std::pow(std::abs(v), params_.q - 1.0) * (v >= 0.0 ? 1.0 : -1.0);
        }
    }
    return ev;
  }

  Field functional_gradient(const Field& u, const EvalRecord& ev) const {
    const std::size_t n = u.n();
    Field g(n);
    const double chain = params_.lambda > 0.0
                             ? params_.beta * params_.lambda * ev.mu * (2.0 / params_.q) *
                                   std::pow(ev.qn, 2.0 - params_.q) * cell_ * params_.q
                             : 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double v = u(i, j);
        double t = std::exp(table_.log_weight(i, j) + ev.b * v * v) * 2.0 * ev.b * v;
        if (chain != 0.0)
          t += chain * std::pow(std::abs(v), params_.q - 1.0) * (v >= 0.0 ? 1.0 : -1.0);
        g(i, j) = t;
      }
    return g;
  }

  // Mean correction of the stationarity system on the closed surface.
  double mean_multiplier(const EvalRecord& ev, double gamma, double lambda_hat) const {
    return gamma * ev.iu1 + lambda_hat * std::pow(ev.qn, 2.0 - params_.q) * ev.isgn;
  }

  Field el_load(const Field& u, const EvalRecord& ev, double gamma, double lambda_hat,
                double c) const {
    const std::size_t n = u.n();
    Field f(n);
    const double lcoef = lambda_hat * std::pow(ev.qn, 2.0 - params_.q) * cell_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double v = u(i, j);
        f(i, j) = gamma * std::exp(table_.log_weight(i, j) + ev.b * v * v) * v +
                  lcoef * std::pow(std::abs(v), params_.q - 1.0) * (v >= 0.0 ? 1.0 : -1.0) -
                  c * cell_;
      }
    return f;
  }

 private:
  FunctionalParams params_;
  SpectralPoisson poisson_;
  TorusWeightTable table_;
  double cell_;
};

}  // namespace detail

// ---------------------------------------------------------------------------

struct DiskMaximizeResult {
  MaximizerReport report;
  RadialFunction maximizer;
  std::vector<TraceRow> trace;
};

struct TorusMaximizeResult {
  MaximizerReport report;
  TorusField maximizer;
  std::vector<TraceRow> trace;
};

namespace detail {

inline void check_regime(const FunctionalParams& params, double lambda_q_value,
                         bool allow_critical) {
  const double bb = params.weight.beta_bar();
  const bool subcritical =
      params.beta < bb * (1.0 - 1e-12) && params.lambda < lambda_q_value * (1.0 - 1e-12);
  require(subcritical || allow_critical, errc::regime,
          "maximize: critical or supercritical parameters need the allow-critical flag");
}

}  // namespace detail

inline DiskMaximizeResult maximize_disk(const FunctionalParams& params, std::size_t cells = 256,
                                        const MaximizeOptions& opts = {}) {
  params.check();
  params.weight.require_disk_mode();
  const double lam_q = params.lambda > 0.0 ? lambda_q_disk(params.q, cells).value
                                           : std::numeric_limits<double>::infinity();
  detail::check_regime(params, lam_q, opts.allow_critical);

  detail::DiskSpace space(geometric_grid(cells), params);
  const auto& nodes = space.stiffness().nodes();
  std::vector<double> u0(nodes.size(), 0.0);
  switch (opts.init) {
    case MaximizeInit::family: {
      const double alpha = std::min(params.weight.disk_order(), 0.0);
      auto fam = disk_bubble_family(opts.init_eps, alpha);
      for (std::size_t i = 0; i < nodes.size(); ++i) u0[i] = fam.u(nodes[i]);
      break;
    }
    case MaximizeInit::moser: {
      auto m = moser_function(opts.init_eps);
      for (std::size_t i = 0; i < nodes.size(); ++i) u0[i] = m(nodes[i]);
      break;
    }
    case MaximizeInit::noise: {
      Rng rng(opts.seed);
      double acc = 0.0;
      for (std::size_t i = nodes.size(); i-- > 1;) {
        u0[i] = acc;
        acc += rng.normal();
      }
      break;
    }
  }
  auto res = detail::ascend(space, std::move(u0), opts);
  return DiskMaximizeResult{res.report, RadialFunction(nodes, res.field), std::move(res.trace)};
}

inline TorusMaximizeResult maximize_torus(const FunctionalParams& params, std::size_t n,
                                          const MaximizeOptions& opts = {}) {
  params.check();
  const double lam_q = lambda_q_torus(params.q, n).value;
  detail::check_regime(params, lam_q, opts.allow_critical);

  detail::TorusSpace space(n, params);
  TorusField u0(n);
  switch (opts.init) {
    case MaximizeInit::family: {
      std::array<double, 2> p{0.0, 0.0};
      const double ab = params.weight.alpha_bar();
      double best_k = -1.0;
      for (const auto& sp : params.weight.points())
        if (sp.alpha == ab && params.weight.K_torus(sp.x, sp.y) > best_k) {
          best_k = params.weight.K_torus(sp.x, sp.y);
          p = {sp.x, sp.y};
        }
      auto green = green_function(p, 0.0, params.q, n);
      TestFamilySpec spec{p, opts.init_eps, 0.0, params.q};
      u0 = test_family_w(spec, params.weight, green, n).u;
      break;
    }
    case MaximizeInit::moser:
      u0 = log_bump({0.0, 0.0}, opts.init_eps, 0.25, n);
      break;
    case MaximizeInit::noise: {
      Rng rng(opts.seed);
      for (double& v : u0.values()) v = rng.normal();
      break;
    }
  }
  auto res = detail::ascend(space, std::move(u0), opts);
  return TorusMaximizeResult{res.report, std::move(res.field), std::move(res.trace)};
}

namespace detail {

// Dual-norm residual of  -Lap u = gamma h u e^{b u^2} + lambda_hat ... - c
// with the load assembled directly from the multipliers, so the diagnostic
// stays well defined at beta = 0 where the functional gradient vanishes.
template <class Space>
ELResidual el_residual_impl(Space& space, typename Space::Field v, const FunctionalParams& params) {
  space.project(v);
  auto ev = space.eval(v);
  require(ev.qn > 0.0, errc::degenerate_input, "euler_lagrange_residual: degenerate field");
  require(!ev.saturated, errc::invalid_input, "euler_lagrange_residual: saturated functional");
  ELResidual out;
  MaximizerReport rep;
  fill_multipliers(ev, params.beta, params.lambda, rep);
  out.b = rep.b;
  out.gamma = rep.gamma;
  out.mu = rep.mu;
  out.lambda_hat = rep.lambda_hat;
  out.qnorm = rep.qnorm;
  out.c = space.mean_multiplier(ev, rep.gamma, rep.lambda_hat);
  auto rho = space.stiffness_apply(v);
  space.axpy(rho, -1.0, space.el_load(v, ev, rep.gamma, rep.lambda_hat, out.c));
  space.mean_project(rho);
  auto d = space.precond(rho);
  out.residual = std::sqrt(std::max(0.0, space.dot(rho, d)));
  return out;
}

}  // namespace detail

inline ELResidual euler_lagrange_residual(const RadialFunction& u, const FunctionalParams& params) {
  params.check();
  require(std::abs(u.dirichlet_energy() - 1.0) < 1e-6, errc::invalid_input,
          "euler_lagrange_residual: field must have unit Dirichlet energy");
  detail::DiskSpace space(u.nodes(), params);
  return detail::el_residual_impl(space, u.values(), params);
}

inline ELResidual euler_lagrange_residual(const TorusField& u, const FunctionalParams& params) {
  params.check();
  require(std::abs(u.dirichlet_energy() - 1.0) < 1e-6, errc::invalid_input,
          "euler_lagrange_residual: field must have unit Dirichlet energy");
  detail::TorusSpace space(u.n(), params);
  return detail::el_residual_impl(space, u, params);
}

// Runs maximize over an increasing beta grid with warm starts; the column of
// suprema is nondecreasing and estimates the critical supremum from below.
struct SupScanRow {
  double beta;
  double value;
  double log_value;
  double residual;
};

inline std::vector<SupScanRow> sup_convergence_scan(const FunctionalParams& base,
                                                    const std::vector<double>& betas,
                                                    std::size_t cells = 256,
                                                    MaximizeOptions opts = {}) {
  std::vector<SupScanRow> rows;
  std::optional<RadialFunction> warm;
  for (double beta : betas) {
    FunctionalParams params = base;
    params.beta = beta;
    params.weight.require_disk_mode();
    detail::DiskSpace space(geometric_grid(cells), params);
    std::vector<double> u0;
    if (warm) {
      u0 = warm->values();
    } else {
      auto fam = disk_bubble_family(opts.init_eps, std::min(params.weight.disk_order(), 0.0));
      const auto& nodes = space.stiffness().nodes();
      u0.resize(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i) u0[i] = fam.u(nodes[i]);
    }
    auto res = detail::ascend(space, std::move(u0), opts);
    rows.push_back({beta, res.report.value, res.report.log_value, res.report.residual});
    warm = RadialFunction(space.stiffness().nodes(), res.field);
  }
  return rows;
}

// Concentration ceiling of the critical functional on the torus:
//   pi e/(1+ab) max_{alpha(p) = ab} K(p) e^{bb A_p^lambda} + |Sigma|_h.
// On the flat torus the modified Green problem carries no weight, so the
// Robin constant is translation invariant and is computed once.
struct ThresholdBound {
  double value = 0.0;
  double robin = 0.0;
  double area_h = 0.0;
  double k_max = 0.0;
  std::array<double, 2> argmax{0.0, 0.0};
};

inline ThresholdBound threshold_bound(const ConicalWeight& weight, double lambda, double q,
                                      std::size_t n, GreenOptions gopts = {}) {
  const double ab = weight.alpha_bar();
  const double bb = weight.beta_bar();
  ThresholdBound out;
  out.robin = green_function({0.0, 0.0}, lambda, q, n, gopts).robin;
  out.area_h = TorusWeightTable(weight, n).area();

  std::vector<std::array<double, 2>> candidates;
  if (ab < 0.0) {
    for (const auto& p : weight.points())
      if (p.alpha == ab) candidates.push_back({p.x, p.y});
    require(!candidates.empty(), errc::invalid_input, "threshold_bound: no candidate points");
  } else {
    const std::size_t step = std::max<std::size_t>(1, n / 16);
    const double h = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; i += step)
      for (std::size_t j = 0; j < n; j += step) {
        const double x = i * h, y = j * h;
        bool near_singular = false;
        for (const auto& p : weight.points())
          if (torus_distance(x, y, p.x, p.y) < 3.0 * h) near_singular = true;
        if (!near_singular) candidates.push_back({x, y});
      }
  }
  out.k_max = -std::numeric_limits<double>::infinity();
  for (const auto& cand : candidates) {
    const double k = weight.K_torus(cand[0], cand[1]);
    if (k > out.k_max) {
      out.k_max = k;
      out.argmax = cand;
    }
  }
  out.value = M_PI * M_E / (1.0 + ab) * out.k_max * std::exp(bb * out.robin) + out.area_h;
  return out;
}

// Disk analogue with an explicit Robin constant (zero at the centre).
inline double disk_threshold_bound(double alpha, double robin, double k, double area_h) {
  return M_PI * M_E / (1.0 + alpha) * k * std::exp(4.0 * M_PI * (1.0 + alpha) * robin) + area_h;
}

}  // namespace smt
