#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>

#include "crnt/error.hpp"
#include "crnt/graph.hpp"
#include "crnt/steady_state.hpp"

namespace crnt {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIterations: return "max-iterations";
    case SolveStatus::SingularJacobian: return "singular-jacobian";
  }
  return "?";
}

// Unknowns are u = ln x, so binomial rows are linear in u and positivity is
// automatic.  Conservation rows are scaled by sum_s |w_s| x0_s.
SolveResult solve_steady_state(const Translation& t, const RateMap& rates, std::span<const double> x0,
                               const NewtonOptions& options) {
  const std::size_t m = t.source.species_count();
  if (x0.size() != m) throw DimensionError("initial state has wrong length");
  for (double v : x0)
    if (!(v > 0) || !std::isfinite(v)) throw ValidationError("initial state must be strictly positive");

  auto binomials = binomial_generators(t, rates);
  SubspaceBasis w = orthogonal_complement(stoichiometric_subspace(t.source));

  const auto M = static_cast<Eigen::Index>(m);
  const auto nb = static_cast<Eigen::Index>(binomials.size());
  const auto nw = static_cast<Eigen::Index>(w.dim());
  Eigen::MatrixXd expo(nb, M);
  Eigen::VectorXd logc(nb);
  for (Eigen::Index i = 0; i < nb; ++i) {
    const auto& b = binomials[static_cast<std::size_t>(i)];
    for (Eigen::Index s = 0; s < M; ++s)
      expo(i, s) = static_cast<double>(b.expon_pos[static_cast<std::size_t>(s)] - b.expon_neg[static_cast<std::size_t>(s)]);
    logc(i) = std::log(b.coeff_pos.constant_value().get_d()) - std::log(b.coeff_neg.constant_value().get_d());
  }
  Eigen::MatrixXd cons(nw, M);
  Eigen::VectorXd target(nw), scale(nw);
  for (Eigen::Index i = 0; i < nw; ++i) {
    double tv = 0, sc = 0;
    for (Eigen::Index s = 0; s < M; ++s) {
      double ws = w.vectors()[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)].get_d();
      cons(i, s) = ws;
      tv += ws * x0[static_cast<std::size_t>(s)];
      sc += std::abs(ws) * x0[static_cast<std::size_t>(s)];
    }
    target(i) = tv;
    scale(i) = sc > 0 ? sc : 1;
  }

  auto residual = [&](const Eigen::VectorXd& u) {
    Eigen::VectorXd f(nb + nw);
    f.head(nb) = logc + expo * u;
    Eigen::VectorXd x = u.array().exp();
    f.tail(nw) = ((cons * x - target).array() / scale.array()).matrix();
    return f;
  };

  auto merit = [](const Eigen::VectorXd& f) {
    double n = f.squaredNorm();
    return std::isfinite(n) ? n : std::numeric_limits<double>::infinity();
  };

  auto attempt = [&](Eigen::VectorXd u) {
    SolveResult out;
    Eigen::VectorXd f = residual(u);
    double phi = merit(f);
    for (out.iterations = 0; out.iterations < options.max_iterations; ++out.iterations) {
      if (f.cwiseAbs().maxCoeff() < options.tolerance) {
        out.status = SolveStatus::Converged;
        break;
      }
      Eigen::MatrixXd j(nb + nw, M);
      j.topRows(nb) = expo;
      Eigen::VectorXd x = u.array().exp();
      for (Eigen::Index i = 0; i < nw; ++i)
        for (Eigen::Index s = 0; s < M; ++s) j(nb + i, s) = cons(i, s) * x(s) / scale(i);
      Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(j);
      if (qr.rank() < M) {
        out.status = SolveStatus::SingularJacobian;
        break;
      }
      Eigen::VectorXd du = qr.solve(-f);
      // exp() makes long steps in log space overshoot by orders of magnitude.
      double big = du.cwiseAbs().maxCoeff();
      if (big > options.max_log_step) du *= options.max_log_step / big;

      double lambda = 1;
      Eigen::VectorXd un = u + du;
      Eigen::VectorXd fn = residual(un);
      double pn = merit(fn);
      for (std::size_t h = 0; h < options.max_halvings && !(pn < (1 - 1e-4 * lambda) * phi); ++h) {
        lambda /= 2;
        un = u + lambda * du;
        fn = residual(un);
        pn = merit(fn);
      }
      if (!std::isfinite(pn)) break;
      u = un;
      f = fn;
      phi = pn;
    }
    out.residual = f.cwiseAbs().maxCoeff();
    if (out.status == SolveStatus::MaxIterations && out.residual < options.tolerance) out.status = SolveStatus::Converged;
    out.x.resize(m);
    for (std::size_t s = 0; s < m; ++s) out.x[s] = std::exp(u(static_cast<Eigen::Index>(s)));
    return out;
  };

  std::span<const double> x_start = options.start.empty() ? x0 : std::span<const double>(options.start);
  if (x_start.size() != m) throw DimensionError("starting point has wrong length");
  Eigen::VectorXd u0(M), ux0(M);
  for (Eigen::Index s = 0; s < M; ++s) {
    double v = x_start[static_cast<std::size_t>(s)];
    if (!(v > 0) || !std::isfinite(v)) throw ValidationError("starting point must be strictly positive");
    u0(s) = std::log(v);
    ux0(s) = std::log(x0[static_cast<std::size_t>(s)]);
  }

  SolveResult out = attempt(u0);
  if (out.converged()) return out;

  // Fallback: stay on the binomial variety, x = x* exp(B t), and move the
  // conservation targets from those of x* to those of x0 in small steps.
  Parametrization par = parametrization(t);
  const auto d = static_cast<Eigen::Index>(par.dimension);
  Eigen::MatrixXd b(M, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index s = 0; s < M; ++s)
      b(s, c) = par.kinetic_orthogonal.vectors()[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)].get_d();
  Eigen::VectorXd ustar(M);
  {
    std::vector<double> xs = particular_steady_state(t, rates);
    for (Eigen::Index s = 0; s < M; ++s) ustar(s) = std::log(xs[static_cast<std::size_t>(s)]);
  }
  const Eigen::VectorXd c0 = cons * ustar.array().exp().matrix();
  auto corrector = [&](Eigen::VectorXd& tt, const Eigen::VectorXd& goal, std::size_t iters) {
    for (std::size_t k = 0; k < iters; ++k) {
      Eigen::VectorXd x = (ustar + b * tt).array().exp();
      Eigen::VectorXd g = ((cons * x - goal).array() / scale.array()).matrix();
      if (!g.allFinite()) return false;
      if (g.cwiseAbs().maxCoeff() < options.tolerance) return true;
      Eigen::MatrixXd jac = (scale.cwiseInverse().asDiagonal() * cons) * x.asDiagonal() * b;
      Eigen::VectorXd dt = jac.colPivHouseholderQr().solve(-g);
      if (!dt.allFinite()) return false;
      double big = (b * dt).cwiseAbs().maxCoeff();
      if (big > options.max_log_step) dt *= options.max_log_step / big;
      tt += dt;
    }
    Eigen::VectorXd x = (ustar + b * tt).array().exp();
    return (((cons * x - goal).array() / scale.array()).abs().maxCoeff() < 1e-8);
  };
  if (d > 0 && ustar.allFinite()) {
    Eigen::VectorXd tt = Eigen::VectorXd::Zero(d);
    double lambda = 0, step = 0.05;
    while (lambda < 1 && step > 1e-9) {
      double next = std::min(1.0, lambda + step);
      Eigen::VectorXd trial = tt;
      if (corrector(trial, (1 - next) * c0 + next * target, 12)) {
        tt = trial;
        lambda = next;
        step *= 1.5;
      } else {
        step /= 2;
      }
    }
    if (lambda >= 1) {
      SolveResult cont = attempt(ustar + b * tt);
      cont.restarts = 1;
      if (cont.converged() || cont.residual < out.residual) out = std::move(cont);
      if (out.converged()) return out;
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  for (std::size_t r = 1; !out.converged() && r <= options.restarts; ++r) {
    Eigen::VectorXd u = ux0;
    for (Eigen::Index s = 0; s < M; ++s) u(s) += jitter(rng);
    SolveResult next = attempt(u);
    next.restarts = r + 1;
    if (next.converged() || next.residual < out.residual) out = std::move(next);
    else out.restarts = r + 1;
  }
  return out;
}

}  // namespace crnt
