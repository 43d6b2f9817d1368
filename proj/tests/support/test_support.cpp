#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifndef CRNT_DATA_DIR
#error "CRNT_DATA_DIR must be defined"
#endif

namespace crnt::testing {

std::string data_path(const std::string& name) { return std::string(CRNT_DATA_DIR) + "/" + name; }

std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing test data file " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Network load_network(const std::string& name) { return parse_network(read_data(name)); }
GeneralizedNetwork load_generalized(const std::string& name) { return parse_generalized_network(read_data(name)); }
Translation load_translation(const Network& net, const std::string& name) {
  return parse_translation(read_data(name), net);
}
RateMap load_rates(const std::string& name) { return parse_assignments(read_data(name)); }

std::vector<std::string> corpus_network_files() {
  return {"futile_cycle.crn", "lotka_volterra.crn",        "shinar_feinberg.crn",    "mfc2.crn",
          "network38.crn",    "network39.crn",             "two_cycle.crn",          "improper_unresolvable.crn",
          "improper_not_strong.crn"};
}

Rational random_positive_rational(Rng& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Rational random_rational_in(Rng& rng, const Rational& lo, const Rational& hi, long den) {
  std::uniform_int_distribution<long> step(0, den);
  Rational q = lo + (hi - lo) * Rational(step(rng), den);
  q.canonicalize();
  return q;
}

RateMap random_rates(Rng& rng, const Network& net) {
  RateMap out;
  for (const auto& r : net.reactions()) out[r.rate] = random_positive_rational(rng);
  return out;
}

RateMap random_rates_in(Rng& rng, const Network& net, const Rational& lo, const Rational& hi) {
  RateMap out;
  for (const auto& r : net.reactions()) out[r.rate] = random_rational_in(rng, lo, hi);
  return out;
}

RatVec random_positive_state(Rng& rng, std::size_t m) {
  RatVec x;
  for (std::size_t i = 0; i < m; ++i) x.push_back(random_positive_rational(rng, 12, 7));
  return x;
}

namespace {

std::vector<std::string> species_names(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back("X" + std::to_string(i + 1));
  return out;
}

IntVec random_complex(Rng& rng, std::size_t m, std::int64_t max_coeff) {
  std::uniform_int_distribution<std::int64_t> c(0, max_coeff);
  std::bernoulli_distribution keep(0.5);
  IntVec v(m, 0);
  for (auto& e : v)
    if (keep(rng)) e = c(rng);
  return v;
}

bool every_species_used(const std::vector<IntVec>& complexes, std::size_t m) {
  for (std::size_t s = 0; s < m; ++s) {
    bool used = false;
    for (const auto& c : complexes) used = used || c[s] != 0;
    if (!used) return false;
  }
  return true;
}

Network assemble(std::size_t m, const std::vector<std::pair<IntVec, IntVec>>& edges, const std::string& name) {
  std::vector<IntVec> complexes;
  auto index_of = [&](const IntVec& v) {
    auto it = std::find(complexes.begin(), complexes.end(), v);
    if (it != complexes.end()) return static_cast<std::size_t>(it - complexes.begin());
    complexes.push_back(v);
    return complexes.size() - 1;
  };
  std::vector<Reaction> reactions;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::size_t a = index_of(edges[i].first);
    std::size_t b = index_of(edges[i].second);
    reactions.push_back({a, b, "k" + std::to_string(i + 1)});
  }
  std::vector<Complex> cs;
  for (auto& c : complexes) cs.emplace_back(c);
  return Network(species_names(m), std::move(cs), std::move(reactions), name);
}

}  // namespace

Network random_network(Rng& rng, std::size_t m, std::size_t r, std::int64_t max_coeff) {
  for (;;) {
    std::vector<std::pair<IntVec, IntVec>> edges;
    std::vector<IntVec> used;
    std::size_t guard = 0;
    while (edges.size() < r && ++guard < 1000) {
      IntVec a = random_complex(rng, m, max_coeff);
      IntVec b = random_complex(rng, m, max_coeff);
      // Reuse existing complexes half of the time so linkage classes form.
      std::bernoulli_distribution reuse(0.5);
      if (!used.empty() && reuse(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, used.size() - 1);
        a = used[pick(rng)];
      }
      if (a == b) continue;
      if (std::find(edges.begin(), edges.end(), std::pair{a, b}) != edges.end()) continue;
      edges.emplace_back(a, b);
      used.push_back(a);
      used.push_back(b);
    }
    if (edges.size() < r || !every_species_used(used, m)) continue;
    return assemble(m, edges, "random");
  }
}

Network random_weakly_reversible(Rng& rng, std::size_t m, std::size_t classes, std::size_t max_class_size) {
  std::uniform_int_distribution<std::size_t> size_dist(2, std::max<std::size_t>(2, max_class_size));
  for (;;) {
    std::vector<IntVec> all;
    std::vector<std::pair<IntVec, IntVec>> edges;
    bool ok = true;
    for (std::size_t c = 0; c < classes && ok; ++c) {
      std::size_t size = size_dist(rng);
      std::vector<IntVec> members;
      std::size_t guard = 0;
      while (members.size() < size && ++guard < 1000) {
        IntVec v = random_complex(rng, m, 2);
        if (std::find(all.begin(), all.end(), v) != all.end()) continue;
        all.push_back(v);
        members.push_back(v);
      }
      if (members.size() < size) {
        ok = false;
        break;
      }
      for (std::size_t i = 0; i < size; ++i) edges.emplace_back(members[i], members[(i + 1) % size]);
      std::uniform_int_distribution<std::size_t> pick(0, size - 1);
      std::size_t chords = size > 2 ? size / 2 : 0;
      for (std::size_t k = 0; k < chords; ++k) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        std::pair e{members[a], members[b]};
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
      }
    }
    if (!ok || !every_species_used(all, m)) continue;
    return assemble(m, edges, "random_wr");
  }
}

std::size_t oracle_rank(const RationalMatrix& in) {
  RationalMatrix a = in;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(rank, j), a(pivot, j));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Rational f = a(i, col) / a(rank, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::size_t oracle_linkage_class_count(const Network& net) {
  std::vector<std::size_t> parent(net.complex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (const auto& r : net.reactions()) parent[find(r.reactant)] = find(r.product);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
  return roots.size();
}

std::size_t oracle_kernel_deficiency(const Network& net) {
  const std::size_t n = net.complex_count(), r = net.reaction_count(), m = net.species_count();
  RationalMatrix ia(n, r), gamma(m, r);
  for (std::size_t i = 0; i < r; ++i) {
    ia(net.reaction(i).reactant, i) -= 1;
    ia(net.reaction(i).product, i) += 1;
    const auto& a = net.complex(net.reaction(i).reactant);
    const auto& b = net.complex(net.reaction(i).product);
    for (std::size_t s = 0; s < m; ++s) gamma(s, i) = Rational(static_cast<long>(b[s] - a[s]));
  }
  return oracle_rank(ia) - oracle_rank(gamma);
}

std::set<std::vector<std::size_t>> oracle_i_trees(const Network& net, std::size_t root) {
  // Members of root's linkage class by flood fill.
  std::set<std::size_t> members{root};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& r : net.reactions()) {
      bool a = members.count(r.reactant), b = members.count(r.product);
      if (a != b) {
        members.insert(r.reactant);
        members.insert(r.product);
        grew = true;
      }
    }
  }
  std::vector<std::size_t> edges;
  for (std::size_t i = 0; i < net.reaction_count(); ++i)
    if (members.count(net.reaction(i).reactant)) edges.push_back(i);
  const std::size_t need = members.size() - 1;
  std::set<std::vector<std::size_t>> out;
  if (edges.size() > 24) throw std::runtime_error("oracle_i_trees: class too large");
  const std::size_t e = edges.size();
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != need) continue;
    std::map<std::size_t, std::size_t> next;
    bool ok = true;
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < e && ok; ++j) {
      if (!(mask & (1u << j))) continue;
      const auto& r = net.reaction(edges[j]);
      if (r.reactant == root || next.count(r.reactant)) ok = false;
      next[r.reactant] = r.product;
      chosen.push_back(edges[j]);
    }
    if (!ok) continue;
    for (std::size_t v : members) {
      std::size_t cur = v;
      for (std::size_t steps = 0; cur != root && steps <= members.size(); ++steps) {
        auto it = next.find(cur);
        if (it == next.end()) break;
        cur = it->second;
      }
      if (cur != root) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(chosen);
  }
  return out;
}

Polynomial oracle_tree_constant(const Network& net, std::size_t root) {
  Polynomial sum;
  for (const auto& tree : oracle_i_trees(net, root)) {
    Polynomial prod(1);
    for (std::size_t i : tree) prod *= sym(net.reaction(i).rate);
    sum += prod;
  }
  return sum;
}

std::vector<double> oracle_rhs(const Network& net, const std::vector<double>& k, const std::vector<double>& x) {
  std::vector<double> f(net.species_count(), 0.0);
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    const auto& a = net.complex(net.reaction(i).reactant);
    const auto& b = net.complex(net.reaction(i).product);
    double flux = k[i];
    for (std::size_t s = 0; s < x.size(); ++s)
      for (std::int64_t e = 0; e < a[s]; ++e) flux *= x[s];
    for (std::size_t s = 0; s < x.size(); ++s) f[s] += flux * static_cast<double>(b[s] - a[s]);
  }
  return f;
}

namespace {

double relative_residual(const Network& net, const std::vector<double>& k, const std::vector<double>& x) {
  std::vector<double> f = oracle_rhs(net, k, x);
  std::vector<double> scale(x.size(), 0.0);
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    const auto& a = net.complex(net.reaction(i).reactant);
    const auto& b = net.complex(net.reaction(i).product);
    double flux = k[i];
    for (std::size_t s = 0; s < x.size(); ++s) flux *= std::pow(x[s], static_cast<double>(a[s]));
    for (std::size_t s = 0; s < x.size(); ++s) scale[s] += flux * std::abs(static_cast<double>(b[s] - a[s]));
  }
  double num = 0, den = 0;
  for (std::size_t s = 0; s < x.size(); ++s) {
    num = std::max(num, std::abs(f[s]));
    den = std::max(den, scale[s]);
  }
  return den > 0 ? num / den : num;
}

}  // namespace

OdeResult integrate_to_steady_state(const Network& net, const std::vector<double>& k, std::vector<double> x,
                                    double settle_tol, double t_max) {
  // Dormand-Prince tableau.
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  const std::size_t m = x.size();
  auto f = [&](const std::vector<double>& y) { return oracle_rhs(net, k, y); };
  auto axpy = [&](const std::vector<double>& y, std::initializer_list<std::pair<double, const std::vector<double>*>> terms,
                  double h) {
    std::vector<double> out = y;
    for (auto [c, v] : terms)
      for (std::size_t i = 0; i < m; ++i) out[i] += h * c * (*v)[i];
    return out;
  };

  OdeResult res;
  double t = 0, h = 1e-3;
  const double rtol = 1e-12, atol = 1e-14;
  std::vector<double> k1 = f(x);
  for (std::size_t step = 0; step < 5'000'000 && t < t_max; ++step) {
    if (relative_residual(net, k, x) < settle_tol) {
      res.settled = true;
      break;
    }
    std::vector<double> k2 = f(axpy(x, {{a21, &k1}}, h));
    std::vector<double> k3 = f(axpy(x, {{a31, &k1}, {a32, &k2}}, h));
    std::vector<double> k4 = f(axpy(x, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h));
    std::vector<double> k5 = f(axpy(x, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h));
    std::vector<double> k6 = f(axpy(x, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h));
    std::vector<double> xn = axpy(x, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
    bool positive = std::all_of(xn.begin(), xn.end(), [](double v) { return v > 0; });
    std::vector<double> k7 = positive ? f(xn) : k1;
    double err = 0;
    for (std::size_t i = 0; i < m; ++i) {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double sc = atol + rtol * std::max(std::abs(x[i]), std::abs(xn[i]));
      err = std::max(err, std::abs(e) / sc);
    }
    if (positive && err <= 1.0) {
      t += h;
      x = std::move(xn);
      k1 = std::move(k7);
      ++res.steps;
    }
    double factor = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    if (!positive) factor = 0.25;
    h *= std::clamp(factor, 0.2, 5.0);
  }
  res.x = x;
  res.t = t;
  res.relative_residual = relative_residual(net, k, x);
  res.settled = res.settled || res.relative_residual < settle_tol;
  return res;
}

std::vector<double> rate_values(const Network& net, const RateMap& rates) {
  std::vector<double> k;
  for (const auto& r : net.reactions()) k.push_back(rates.at(r.rate).get_d());
  return k;
}

double max_relative_difference(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]) / std::max({std::abs(a[i]), std::abs(b[i]), 1e-300}));
  return d;
}

Polynomial sym(const std::string& name) { return Polynomial::variable(name); }

}  // namespace crnt::testing
