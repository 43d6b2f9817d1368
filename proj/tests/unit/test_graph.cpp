#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace crnt;
using namespace crnt::testing;

using Classes = std::vector<std::vector<std::size_t>>;

TEST(Linkage, Network38) {
  auto p = linkage_classes(load_network("network38.crn"));
  EXPECT_EQ(p.classes, (Classes{{0, 1, 2}, {3, 4}}));
  EXPECT_EQ(p.strong_classes, (Classes{{0}, {1, 2}, {3, 4}}));
}

TEST(Linkage, Network39) {
  Network net = load_network("network39.crn");
  auto p = linkage_classes(net);
  EXPECT_EQ(p.classes, (Classes{{0, 1, 2}}));
  EXPECT_EQ(p.strong_classes, p.classes);
}

TEST(Linkage, FutileCycleHasTwoClasses) {
  EXPECT_EQ(linkage_classes(load_network("futile_cycle.crn")).classes.size(), 2u);
}

TEST(Linkage, PartitionInvariantsOnRandomNetworks) {
  Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    Network net = random_network(rng, 3, 2 + static_cast<std::size_t>(t % 6));
    auto p = linkage_classes(net);
    ASSERT_EQ(p.classes.size(), oracle_linkage_class_count(net));
    std::vector<int> seen(net.complex_count(), 0);
    for (std::size_t c = 0; c < p.classes.size(); ++c)
      for (std::size_t j : p.classes[c]) {
        ++seen[j];
        EXPECT_EQ(p.class_of[j], c);
      }
    for (int s : seen) EXPECT_EQ(s, 1);
    // Each strong class sits inside one linkage class.
    for (const auto& sc : p.strong_classes)
      for (std::size_t j : sc) EXPECT_EQ(p.class_of[j], p.class_of[sc.front()]);
    // Deterministic order: by smallest member.
    for (std::size_t c = 1; c < p.classes.size(); ++c) EXPECT_LT(p.classes[c - 1].front(), p.classes[c].front());
  }
}

TEST(Reversibility, Examples) {
  EXPECT_TRUE(is_weakly_reversible(load_network("network39.crn")));
  EXPECT_FALSE(is_reversible(load_network("network39.crn")));
  EXPECT_FALSE(is_weakly_reversible(load_network("network38.crn")));
  EXPECT_FALSE(is_reversible(load_network("network38.crn")));
  EXPECT_TRUE(is_reversible(parse_network("A <-> B ; k1, k2\n")));
  EXPECT_FALSE(is_reversible(load_network("lotka_volterra.crn")));
  Network fc = load_network("futile_cycle.crn");
  Translation t = load_translation(fc, "futile_cycle.translation");
  EXPECT_TRUE(is_weakly_reversible(t.translated.base()));
}

TEST(Reversibility, Implications) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    Network net = t % 2 ? random_network(rng, 3, 5) : random_weakly_reversible(rng, 3, 2, 3);
    if (is_reversible(net)) { EXPECT_TRUE(is_weakly_reversible(net)); }
    if (is_weakly_reversible(net)) {
      for (std::size_t j = 0; j < net.complex_count(); ++j) EXPECT_TRUE(net.is_reactant(j));
    }
  }
}

TEST(Deficiency, FutileCycle) {
  auto d = deficiency(load_network("futile_cycle.crn"));
  EXPECT_EQ(d.complexes, 6u);
  EXPECT_EQ(d.linkage_classes, 2u);
  EXPECT_EQ(d.rank, 3u);
  EXPECT_EQ(d.deficiency, 1u);
}

TEST(Deficiency, TranslatedExamplesAreZero) {
  Network fc = load_network("futile_cycle.crn");
  auto tf = load_translation(fc, "futile_cycle.translation");
  auto d = deficiency(tf.translated);
  EXPECT_EQ(d.deficiency, 0u);
  EXPECT_EQ(d.kinetic_deficiency, 0u);

  Network mfc = load_network("mfc2.crn");
  auto tm = load_translation(mfc, "mfc2.translation");
  auto dm = deficiency(tm.translated);
  EXPECT_EQ(dm.complexes, 8u);
  EXPECT_EQ(dm.linkage_classes, 2u);
  EXPECT_EQ(dm.rank, 6u);
  EXPECT_EQ(dm.deficiency, 0u);

  Network sf = load_network("shinar_feinberg.crn");
  auto ts = load_translation(sf, "shinar_feinberg.translation");
  EXPECT_EQ(kinetic_deficiency(ts.translated), 0u);
  EXPECT_EQ(deficiency(ts.translated.base()).deficiency, 0u);
}

TEST(Deficiency, BothFormulasAgreeWithOracles) {
  Rng rng(13);
  std::vector<Network> nets;
  for (const auto& f : corpus_network_files()) nets.push_back(load_network(f));
  for (int t = 0; t < 60; ++t) nets.push_back(random_network(rng, 2 + t % 3, 3 + t % 5));
  for (const auto& net : nets) {
    auto d = deficiency(net);
    std::size_t s = oracle_rank(to_rational(build_matrices(net).Gamma));
    std::size_t l = oracle_linkage_class_count(net);
    EXPECT_EQ(d.rank, s);
    EXPECT_EQ(d.linkage_classes, l);
    EXPECT_EQ(d.deficiency, net.complex_count() - l - s);
    EXPECT_EQ(d.deficiency, oracle_kernel_deficiency(net));
  }
}

TEST(KineticOrder, Network32) {
  GeneralizedNetwork g = load_generalized("network32.gcrn");
  auto s = kinetic_order_subspace(g);
  EXPECT_TRUE(s.same_span(SubspaceBasis::span_of(3, {{-7, 5, -1}})));
  EXPECT_TRUE(stoichiometric_subspace(g.base()).same_span(SubspaceBasis::span_of(3, {{-1, -1, 1}})));
}

TEST(KineticOrder, TranslatedFutileCycle) {
  Network fc = load_network("futile_cycle.crn");
  auto t = load_translation(fc, "futile_cycle.translation");
  auto s = kinetic_order_subspace(t.translated);
  // Complex order: S+E, SE, P+E, P+F, PF, S+F.
  auto y = [&](std::size_t j) { return to_rational(fc.complex(j).coeffs()); };
  auto diff = [&](std::size_t a, std::size_t b) {
    RatVec v = y(a);
    RatVec w = y(b);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
    return v;
  };
  auto expected = SubspaceBasis::span_of(6, {diff(1, 0), diff(3, 0), diff(4, 0)});
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_TRUE(s.same_span(expected));
}

TEST(KineticOrder, MassActionEqualsStoichiometric) {
  Rng rng(14);
  for (int t = 0; t < 40; ++t) {
    Network net = random_network(rng, 3, 5);
    GeneralizedNetwork g(net);
    EXPECT_TRUE(kinetic_order_subspace(g).same_span(stoichiometric_subspace(net)));
    EXPECT_EQ(kinetic_deficiency(g), deficiency(net).deficiency);
  }
}
