#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <set>

#include "test_support.hpp"

using namespace crnt;
using namespace crnt::testing;

namespace {

std::set<RatVec> ray_set(const std::vector<ExtremeCurrent>& rays) {
  std::set<RatVec> out;
  for (const auto& r : rays) out.insert(r.vector);
  return out;
}

// Extreme rays by support enumeration: a support S carries an extreme ray iff
// the kernel of Gamma restricted to S is one-dimensional and spanned by a
// vector that is strictly positive on S.
std::set<RatVec> oracle_rays(const Network& net) {
  RationalMatrix gamma = to_rational(build_matrices(net).Gamma);
  const std::size_t r = net.reaction_count();
  std::set<RatVec> out;
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < r; ++j)
      if (mask & (1u << j)) cols.push_back(j);
    RationalMatrix sub(gamma.rows(), cols.size());
    for (std::size_t i = 0; i < gamma.rows(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = gamma(i, cols[j]);
    auto k = kernel_basis(sub);
    if (k.dim() != 1) continue;
    RatVec v = k.vectors()[0];
    bool pos = true, neg = true;
    for (const auto& x : v) {
      pos = pos && x > 0;
      neg = neg && x < 0;
    }
    if (!pos && !neg) continue;
    RatVec full(r, Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = pos ? v[j] : Rational(-v[j]);
    out.insert(normalize_integral(full));
  }
  return out;
}

std::optional<RatVec> strictly_positive_current(const Network& net) {
  RationalMatrix gamma = to_rational(build_matrices(net).Gamma);
  RatVec ones(net.reaction_count(), Rational(1));
  RatVec rhs = gamma * ones;
  for (auto& v : rhs) v = -v;
  auto z = find_nonnegative_solution(gamma, rhs);
  if (!z) return std::nullopt;
  for (std::size_t i = 0; i < z->size(); ++i) (*z)[i] += 1;
  return z;
}

}  // namespace

TEST(Cone, FutileCycleGenerators) {
  Network net = load_network("futile_cycle.crn");
  auto rays = extreme_currents(net);
  std::set<RatVec> expected{{1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0}, {1, 0, 1, 1, 0, 1}};
  EXPECT_EQ(ray_set(rays), expected);
  for (const auto& r : rays) {
    if (r.vector == RatVec{1, 0, 1, 1, 0, 1}) EXPECT_EQ(r.kind, CurrentKind::Stoichiometric);
    else EXPECT_EQ(r.kind, CurrentKind::Cyclic);
  }
}

TEST(Cone, ReversiblePair) {
  auto rays = extreme_currents(parse_network("A <-> B ; k1, k2\n"));
  ASSERT_EQ(rays.size(), 1u);
  EXPECT_EQ(rays[0].vector, (RatVec{1, 1}));
  EXPECT_EQ(rays[0].kind, CurrentKind::Cyclic);
}

TEST(Cone, ShinarFeinbergStoichiometricGenerators) {
  Network net = load_network("shinar_feinberg.crn");
  auto rays = extreme_currents(net);
  RatVec e1{0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0};
  RatVec e2{0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 1};
  bool found1 = false, found2 = false;
  for (const auto& r : rays) {
    if (r.vector == e1) {
      found1 = true;
      EXPECT_EQ(r.kind, CurrentKind::Stoichiometric);
    }
    if (r.vector == e2) {
      found2 = true;
      EXPECT_EQ(r.kind, CurrentKind::Stoichiometric);
    }
  }
  EXPECT_TRUE(found1);
  EXPECT_TRUE(found2);
}

TEST(Cone, Classification) {
  Network net = load_network("futile_cycle.crn");
  EXPECT_EQ(classify_current(net, {1, 1, 0, 0, 0, 0}), CurrentKind::Cyclic);
  EXPECT_EQ(classify_current(net, {1, 0, 1, 1, 0, 1}), CurrentKind::Stoichiometric);
  EXPECT_EQ(classify_current(net, {0, 0, 0, 0, 0, 0}), CurrentKind::NotACurrent);
  EXPECT_EQ(classify_current(net, {1, 0, 0, 0, 0, 0}), CurrentKind::NotACurrent);
  EXPECT_EQ(classify_current(net, {-1, -1, 0, 0, 0, 0}), CurrentKind::NotACurrent);
  EXPECT_THROW(classify_current(net, {1, 1}), DimensionError);
}

TEST(Cone, EmptyConeGivesNoRays) {
  EXPECT_TRUE(extreme_currents(parse_network("A -> B ; k1\n")).empty());
}

TEST(Cone, MatchesSupportEnumerationOracle) {
  Rng rng(20);
  std::vector<Network> nets;
  for (const auto& f : corpus_network_files()) nets.push_back(load_network(f));
  for (int t = 0; t < 40; ++t) nets.push_back(random_network(rng, 3, 4 + static_cast<std::size_t>(t % 5)));
  for (int t = 0; t < 20; ++t) nets.push_back(random_weakly_reversible(rng, 3, 2, 3));
  for (const auto& net : nets) {
    if (net.reaction_count() > 16) continue;
    auto rays = extreme_currents(net);
    ASSERT_EQ(ray_set(rays), oracle_rays(net)) << serialize_network(net);
  }
}

TEST(Cone, RaysAreCanonicalAndSupportMinimal) {
  Rng rng(21);
  std::vector<Network> nets;
  for (const auto& f : corpus_network_files()) nets.push_back(load_network(f));
  for (int t = 0; t < 30; ++t) nets.push_back(random_weakly_reversible(rng, 3, 2, 4));
  for (const auto& net : nets) {
    auto rays = extreme_currents(net);
    RationalMatrix gamma = to_rational(build_matrices(net).Gamma);
    for (std::size_t a = 0; a < rays.size(); ++a) {
      const auto& v = rays[a].vector;
      EXPECT_TRUE(is_zero(gamma * v));
      EXPECT_EQ(normalize_integral(v), v);
      for (const auto& x : v) EXPECT_GE(x, 0);
      EXPECT_EQ(rays[a].kind, classify_current(net, v));
      auto sa = rays[a].support();
      for (std::size_t b = 0; b < rays.size(); ++b) {
        if (a == b) continue;
        auto sb = rays[b].support();
        bool subset = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
        EXPECT_FALSE(subset && sb.size() < sa.size());
      }
    }
    // Deterministic order.
    auto again = extreme_currents(net);
    ASSERT_EQ(again.size(), rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) EXPECT_EQ(again[i].vector, rays[i].vector);
  }
}

TEST(Cone, StoichiometricGeneratorsIffPositiveDeficiency) {
  Rng rng(22);
  std::vector<Network> nets;
  for (const auto& f : corpus_network_files()) nets.push_back(load_network(f));
  for (int t = 0; t < 60; ++t) nets.push_back(random_network(rng, 3, 4 + static_cast<std::size_t>(t % 4)));
  for (int t = 0; t < 20; ++t) nets.push_back(random_weakly_reversible(rng, 3, 2, 3));
  for (const auto& net : nets) {
    std::size_t stoich = 0;
    for (const auto& r : extreme_currents(net)) stoich += r.kind == CurrentKind::Stoichiometric;
    const bool zero_deficiency = deficiency(net).deficiency == 0;
    if (zero_deficiency) { EXPECT_EQ(stoich, 0u) << serialize_network(net); }
    // The converse needs a strictly positive current; without one the cone
    // can be {0} while the deficiency is positive.
    if (strictly_positive_current(net)) { EXPECT_EQ(stoich == 0, zero_deficiency) << serialize_network(net); }
  }
}

TEST(Cone, RandomNonnegativeCurrentsDecompose) {
  Rng rng(23);
  std::vector<Network> nets{load_network("futile_cycle.crn"), load_network("two_cycle.crn"),
                            load_network("network39.crn")};
  for (int t = 0; t < 15; ++t) nets.push_back(random_weakly_reversible(rng, 3, 2, 4));
  for (const auto& net : nets) {
    auto p = strictly_positive_current(net);
    ASSERT_TRUE(p) << serialize_network(net);
    auto rays = extreme_currents(net);
    RationalMatrix r(net.reaction_count(), rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j)
      for (std::size_t i = 0; i < net.reaction_count(); ++i) r(i, j) = rays[j].vector[i];
    SubspaceBasis kernel = kernel_basis(to_rational(build_matrices(net).Gamma));
    for (int s = 0; s < 10; ++s) {
      RatVec v = *p;
      for (const auto& b : kernel.vectors()) {
        Rational c = random_rational_in(rng, Rational(-1, 20), Rational(1, 20));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
      }
      bool nonneg = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x >= 0; });
      if (!nonneg) continue;
      EXPECT_TRUE(find_nonnegative_solution(r, v).has_value());
    }
  }
}
