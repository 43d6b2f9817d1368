#include "crnt/steady_state.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "crnt/cone.hpp"
#include "crnt/error.hpp"
#include "crnt/graph.hpp"

namespace crnt {

namespace {

std::string monomial_string(const Network& net, const IntVec& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < e.size(); ++s) {
    if (e[s] == 0) continue;
    if (!first) os << "*";
    os << "x_" << net.species()[s].name;
    if (e[s] != 1) os << "^" << e[s];
    first = false;
  }
  return first ? "1" : os.str();
}

double monomial_value(const IntVec& e, std::span<const double> x) {
  double v = 1;
  for (std::size_t s = 0; s < e.size(); ++s)
    if (e[s] != 0) v *= std::pow(x[s], static_cast<double>(e[s]));
  return v;
}

IntVec kinetic_of(const Translation& t, std::size_t j) {
  const auto& ks = t.kinetic_source.at(j);
  if (!ks) throw ValidationError("translated complex without a kinetic complex");
  return t.source.complex(*ks).coeffs();
}

std::vector<Binomial> assemble(const Translation& t, const std::vector<Polynomial>& k, const BinomialOptions& options) {
  auto part = linkage_classes(t.translated.base());
  std::vector<Binomial> out;
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    const auto& cls = part.classes[c];
    std::size_t anchor = cls.front();
    if (auto it = options.anchors.find(c); it != options.anchors.end()) {
      if (std::find(cls.begin(), cls.end(), it->second) == cls.end())
        throw ValidationError("anchor is not in linkage class " + std::to_string(c));
      anchor = it->second;
    }
    for (auto j : cls) {
      if (j == anchor) continue;
      out.push_back({k[anchor], kinetic_of(t, j), k[j], kinetic_of(t, anchor), anchor, j});
    }
  }
  return out;
}

}  // namespace

std::string Binomial::to_string(const Network& net) const {
  auto wrap = [](const Polynomial& p) {
    std::string s = p.to_string();
    return p.term_count() > 1 ? "(" + s + ")" : s;
  };
  return wrap(coeff_pos) + "*" + monomial_string(net, expon_pos) + " - " + wrap(coeff_neg) + "*" +
         monomial_string(net, expon_neg);
}

double Binomial::relative_residual(std::span<const double> x) const {
  if (!coeff_pos.is_constant() || !coeff_neg.is_constant())
    throw ValidationError("binomial has symbolic coefficients");
  double a = coeff_pos.constant_value().get_d() * monomial_value(expon_pos, x);
  double b = coeff_neg.constant_value().get_d() * monomial_value(expon_neg, x);
  double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0 ? 0 : std::abs(a - b) / scale;
}

void require_deficiency_zero(const Translation& t) {
  TranslationClassification c = classify(t);
  if (!c.strong) throw HypothesisError("translated network is not weakly reversible");
  DeficiencyReport d = deficiency(t.translated);
  if (d.deficiency != 0)
    throw HypothesisError("translated network has deficiency " + std::to_string(d.deficiency));
  if (!d.kinetic_deficiency || *d.kinetic_deficiency != 0)
    throw HypothesisError("translated network has nonzero kinetic deficiency");
}

std::vector<Binomial> binomial_generators(const Translation& t, const BinomialOptions& options) {
  require_deficiency_zero(t);
  return assemble(t, translated_tree_constants(t), options);
}

std::vector<Binomial> binomial_generators(const Translation& t, const RateMap& rates, const BinomialOptions& options) {
  require_deficiency_zero(t);
  RatVec k = translated_tree_constants(t, rates);
  std::vector<Polynomial> kp(k.begin(), k.end());
  return assemble(t, kp, options);
}

Parametrization parametrization(const Translation& t) {
  Parametrization p;
  p.stoichiometric = stoichiometric_subspace(t.source);
  std::vector<RatVec> gens;
  for (const auto& [a, b] : kinetic_pair_basis(t)) {
    RatVec v = to_rational(t.source.complex(a).coeffs());
    RatVec w = to_rational(t.source.complex(b).coeffs());
    for (std::size_t s = 0; s < v.size(); ++s) v[s] -= w[s];
    gens.push_back(std::move(v));
  }
  p.kinetic_order = SubspaceBasis::span_of(t.source.species_count(), gens);
  p.kinetic_orthogonal = orthogonal_complement(p.kinetic_order);
  p.dimension = p.kinetic_orthogonal.dim();
  return p;
}

std::vector<double> particular_steady_state(const Translation& t, const RateMap& rates) {
  auto bs = binomial_generators(t, rates);
  const std::size_t m = t.source.species_count();
  Eigen::MatrixXd a(static_cast<Eigen::Index>(bs.size()), static_cast<Eigen::Index>(m));
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(bs.size()));
  for (std::size_t i = 0; i < bs.size(); ++i) {
    // K_a x^{y_j} = K_j x^{y_a}  <=>  (y_j - y_a) . ln x = ln K_j - ln K_a
    for (std::size_t s = 0; s < m; ++s)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(s)) =
          static_cast<double>(bs[i].expon_pos[s] - bs[i].expon_neg[s]);
    rhs(static_cast<Eigen::Index>(i)) =
        std::log(bs[i].coeff_neg.constant_value().get_d()) - std::log(bs[i].coeff_pos.constant_value().get_d());
  }
  Eigen::VectorXd l = bs.empty() ? Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m))
                                 : Eigen::VectorXd(a.completeOrthogonalDecomposition().solve(rhs));
  std::vector<double> x(m);
  for (std::size_t s = 0; s < m; ++s) x[s] = std::exp(l(static_cast<Eigen::Index>(s)));
  return x;
}

UniquenessCheck check_uniqueness_condition(const Translation& t, std::size_t dim_cap) {
  Parametrization p = parametrization(t);
  UniquenessCheck out;
  auto s = sign_vectors(p.stoichiometric, dim_cap);
  auto st = sign_vectors(p.kinetic_order, dim_cap);
  out.sign_compatible = s == st;
  if (!out.sign_compatible) {
    // Prefer the sign pattern of a reaction vector: it names the offending reaction.
    for (std::size_t i = 0; i < t.source.reaction_count() && !out.witness; ++i) {
      SignVector v = SignVector::of(to_rational(t.source.reaction_vector(i)));
      if (!st.count(v)) out.witness = v;
    }
    for (const auto& v : s)
      if (!out.witness && !st.count(v)) out.witness = v;
    for (const auto& v : st)
      if (!out.witness && !s.count(v)) out.witness = v;
  }
  SignVector plus{std::vector<std::int8_t>(t.source.species_count(), 1)};
  out.positive_conservation = sign_pattern_feasible(orthogonal_complement(p.stoichiometric), plus);
  return out;
}

MultistationarityCheck check_multistationarity_condition(const Translation& t, std::size_t dim_cap) {
  Parametrization p = parametrization(t);
  MultistationarityCheck out;
  // Enumerate the side with fewer sign vectors (the lower-dimensional one)
  // and test membership in the other.
  bool swap = p.kinetic_orthogonal.dim() < p.stoichiometric.dim();
  const SubspaceBasis& enumerated = swap ? p.kinetic_orthogonal : p.stoichiometric;
  const SubspaceBasis& tested = swap ? p.stoichiometric : p.kinetic_orthogonal;
  for (const auto& v : sign_vectors(enumerated, dim_cap)) {
    bool zero = std::all_of(v.entries.begin(), v.entries.end(), [](auto e) { return e == 0; });
    if (zero) continue;
    if (sign_pattern_feasible(tested, v)) {
      out.holds = true;
      out.witness = v;
      break;
    }
  }
  return out;
}

bool check_complex_balanced(const GeneralizedNetwork& g, const RateMap& rates, std::span<const Rational> x) {
  const Network& net = g.base();
  if (x.size() != net.species_count()) throw DimensionError("state vector has wrong length");
  RatVec psi(net.complex_count(), Rational(0));
  for (std::size_t j = 0; j < net.complex_count(); ++j) {
    if (!g.has_kinetic(j)) continue;
    Rational v = 1;
    const auto& y = g.kinetic_complex(j);
    for (std::size_t s = 0; s < y.size(); ++s)
      for (std::int64_t e = 0; e < y[s]; ++e) v *= x[s];
    psi[j] = v;
  }
  return is_zero(kinetic_matrix(net, rates) * psi);
}

bool check_complex_balanced(const GeneralizedNetwork& g, const RateMap& rates, std::span<const double> x,
                            double tolerance) {
  const Network& net = g.base();
  if (x.size() != net.species_count()) throw DimensionError("state vector has wrong length");
  std::vector<double> psi(net.complex_count(), 0.0);
  for (std::size_t j = 0; j < net.complex_count(); ++j)
    if (g.has_kinetic(j)) psi[j] = monomial_value(g.kinetic_complex(j).coeffs(), x);
  RatVec k = rate_vector(net, rates);
  std::vector<double> v(net.complex_count(), 0.0), scale(net.complex_count(), 0.0);
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    const auto& r = net.reaction(i);
    double f = k[i].get_d() * psi[r.reactant];
    v[r.product] += f;
    v[r.reactant] -= f;
    scale[r.product] += std::abs(f);
    scale[r.reactant] += std::abs(f);
  }
  double worst = 0, big = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    worst = std::max(worst, std::abs(v[j]));
    big = std::max(big, scale[j]);
  }
  return big == 0 || worst / big <= tolerance;
}

std::vector<double> nonnegative_least_squares(const std::vector<std::vector<double>>& columns,
                                              const std::vector<double>& b) {
  const auto n = static_cast<Eigen::Index>(columns.size());
  const auto rows = static_cast<Eigen::Index>(b.size());
  if (n == 0) return {};
  Eigen::MatrixXd a(rows, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (static_cast<Eigen::Index>(columns[static_cast<std::size_t>(j)].size()) != rows)
      throw DimensionError("NNLS column has wrong length");
    for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd bv = Eigen::Map<const Eigen::VectorXd>(b.data(), rows);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  const double tol = 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()) * std::max(1.0, bv.cwiseAbs().maxCoeff());

  auto solve_passive = [&]() {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index j = 0; j < n; ++j)
      if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
    Eigen::MatrixXd ap(rows, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
    Eigen::VectorXd sp = ap.completeOrthogonalDecomposition().solve(bv);
    Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k < idx.size(); ++k) s(idx[k]) = sp(static_cast<Eigen::Index>(k));
    return s;
  };

  for (Eigen::Index outer = 0; outer < 3 * n + 10; ++outer) {
    Eigen::VectorXd grad = a.transpose() * (bv - a * w);
    Eigen::Index best = -1;
    double best_val = tol;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!passive[static_cast<std::size_t>(j)] && grad(j) > best_val) {
        best_val = grad(j);
        best = j;
      }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;
    for (int inner = 0; inner < 3 * static_cast<int>(n) + 10; ++inner) {
      Eigen::VectorXd s = solve_passive();
      bool feasible = true;
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<std::size_t>(j)] && s(j) <= 0) feasible = false;
      if (feasible) {
        w = s;
        break;
      }
      double alpha = 1;
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<std::size_t>(j)] && s(j) <= 0) alpha = std::min(alpha, w(j) / (w(j) - s(j)));
      w += alpha * (s - w);
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<std::size_t>(j)] && w(j) <= tol) {
          passive[static_cast<std::size_t>(j)] = false;
          w(j) = 0;
        }
    }
  }
  return std::vector<double>(w.data(), w.data() + n);
}

VerificationReport verify_steady_state(const Network& net, const RateMap& rates, std::span<const double> x) {
  VerificationReport rep;
  std::vector<double> flux = reaction_fluxes(net, rates, x);
  rep.field.assign(net.species_count(), 0.0);
  std::vector<double> gross(net.species_count(), 0.0);
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    auto v = net.reaction_vector(i);
    for (std::size_t s = 0; s < v.size(); ++s) {
      rep.field[s] += static_cast<double>(v[s]) * flux[i];
      gross[s] += std::abs(static_cast<double>(v[s])) * flux[i];
    }
  }
  double big = 0;
  for (std::size_t s = 0; s < rep.field.size(); ++s) {
    rep.residual = std::max(rep.residual, std::abs(rep.field[s]));
    big = std::max(big, gross[s]);
  }
  rep.relative_residual = big == 0 ? 0 : rep.residual / big;

  auto currents = extreme_currents(net);
  if (currents.empty()) return rep;
  std::vector<std::vector<double>> cols;
  for (const auto& e : currents) cols.push_back(to_double(e.vector));
  rep.current_weights = nonnegative_least_squares(cols, flux);
  double err = 0, norm = 0;
  for (std::size_t i = 0; i < flux.size(); ++i) {
    double fit = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) fit += cols[k][i] * rep.current_weights[k];
    err = std::max(err, std::abs(fit - flux[i]));
    norm = std::max(norm, std::abs(flux[i]));
  }
  rep.decomposition_residual = norm == 0 ? 0 : err / norm;
  rep.decomposes = rep.decomposition_residual <= 1e-8;
  return rep;
}

}  // namespace crnt
