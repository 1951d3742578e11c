#include <algorithm>

#include "doctest.h"
#include "wschreier/wact.hpp"

using namespace wschreier;

namespace {

WActObject object_for(const FiniteMonoid& n, const FiniteMonoid& h,
                      std::vector<std::vector<int>> fibers,
                      std::vector<std::vector<int>> cv) {
  auto q = AdmissibleQuotient::from_fibers(n, h, std::move(fibers));
  return WActObject{q, ActionClass{q, std::move(cv)}};
}

}  // namespace

TEST_CASE("the preorder on the three 2-chain objects") {
  auto s2 = chain_semilattice(2);
  auto trivial = object_for(s2, s2, {{0, 1}, {0, 1}}, {{0, 1}, {0, 1}});
  auto twist = object_for(s2, s2, {{0, 1}, {0, 1}}, {{0, 1}, {0, 0}});
  auto coarse = object_for(s2, s2, {{0, 1}, {0, 0}}, {{0, 1}, {0, 0}});
  CHECK(wact_leq(trivial, trivial));
  CHECK(wact_leq(trivial, coarse));
  CHECK(wact_leq(twist, coarse));
  CHECK(!wact_leq(coarse, trivial));
  CHECK(!wact_leq(coarse, twist));
  CHECK(!wact_leq(trivial, twist));
  CHECK(!wact_leq(twist, trivial));
  CHECK_THROWS_AS(
      wact_leq(trivial, object_for(cyclic_group(2), cyclic_group(2),
                                   {{0, 1}, {0, 1}}, {{0, 1}, {0, 1}})),
      Error);
}

TEST_CASE("classification census") {
  auto s2 = chain_semilattice(2);
  auto cls = classify_extensions(s2, s2);
  CHECK(cls.objects.size() == 3);
  int pairs_leq = 0;
  for (const auto& row : cls.leq)
    pairs_leq += static_cast<int>(std::count(row.begin(), row.end(), true));
  // three reflexive pairs plus trivial <= coarse and twist <= coarse
  CHECK(pairs_leq == 5);
  CHECK(classify_extensions(cyclic_group(2), cyclic_group(2)).objects.size() == 1);
  CHECK(classify_extensions(cyclic_group(2), cyclic_group(3)).objects.size() == 1);
  CHECK(classify_extensions(cyclic_group(3), cyclic_group(3)).objects.size() == 1);
  CHECK(classify_extensions(trivial_monoid(), s2).objects.size() == 1);
  // classification is thread-count independent
  auto cls4 = classify_extensions(s2, s2, {}, 4);
  CHECK(cls4.objects == cls.objects);
  CHECK(cls4.leq == cls.leq);
}

TEST_CASE("functors S and T are mutually inverse on objects") {
  auto pool = std::vector<FiniteMonoid>{trivial_monoid(), cyclic_group(2),
                                        chain_semilattice(2),
                                        chain_semilattice(3)};
  for (const auto& n : pool) {
    for (const auto& h : pool) {
      for (const auto& obj : classify_extensions(n, h).objects) {
        auto ext = functor_S(obj);
        CHECK(is_weakly_schreier(ext).weakly_schreier);
        auto back = functor_T(ext);
        CHECK(back == obj);
      }
    }
  }
}

TEST_CASE("T of a concrete extension reads off the canonical quotient") {
  auto s2 = chain_semilattice(2);
  auto g3 = chain_semilattice(3);
  auto glueing = SplitExtension::validate(
      s2, g3, s2, MonoidHom::validate(s2, g3, {0, 1}),
      MonoidHom::validate(g3, s2, {0, 0, 1}),
      MonoidHom::validate(s2, g3, {0, 2}));
  auto obj = functor_T(glueing);
  CHECK(obj.quotient.fibers == std::vector<std::vector<int>>{{0, 1}, {0, 0}});
  CHECK(obj.action.class_valued ==
        std::vector<std::vector<int>>{{0, 1}, {0, 0}});
}

TEST_CASE("morphisms: existence, uniqueness and direction") {
  auto s2 = chain_semilattice(2);
  auto prod = product_extension(s2, s2);
  auto g3 = chain_semilattice(3);
  auto glueing = SplitExtension::validate(
      s2, g3, s2, MonoidHom::validate(s2, g3, {0, 1}),
      MonoidHom::validate(g3, s2, {0, 0, 1}),
      MonoidHom::validate(s2, g3, {0, 2}));
  auto fwd = morphism_exists(prod, glueing);
  REQUIRE(fwd.has_value());
  CHECK(!fwd->map.bijective());
  // the underlying map really commutes with k, e, s
  for (int n = 0; n < 2; ++n) CHECK(fwd->map(prod.k(n)) == glueing.k(n));
  for (int h = 0; h < 2; ++h) CHECK(fwd->map(prod.s(h)) == glueing.s(h));
  for (int g = 0; g < 4; ++g) CHECK(glueing.e(fwd->map(g)) == prod.e(g));
  CHECK(!morphism_exists(glueing, prod).has_value());
  CHECK(!extensions_isomorphic(prod, glueing));
  CHECK(extensions_isomorphic(prod, prod));
  // rigidity: the exhaustive search finds exactly the same single hom
  auto all_fwd = search_square_commuting_homs(prod, glueing);
  REQUIRE(all_fwd.size() == 1);
  CHECK(all_fwd[0].map == fwd->map.map);
  CHECK(search_square_commuting_homs(glueing, prod).empty());
}

TEST_CASE("brute force oracle agrees with the classification") {
  auto s2 = chain_semilattice(2);
  auto brute = brute_force_classify(s2, s2, 4);
  auto cls = classify_extensions(s2, s2);
  REQUIRE(brute.size() == cls.objects.size());
  // match them up by isomorphism; the bijection must respect <=
  std::vector<int> match(brute.size(), -1);
  std::vector<bool> used(cls.objects.size(), false);
  for (size_t i = 0; i < brute.size(); ++i)
    for (size_t j = 0; j < cls.objects.size(); ++j)
      if (!used[j] && extensions_isomorphic(brute[i], functor_S(cls.objects[j]))) {
        match[i] = static_cast<int>(j);
        used[j] = true;
        break;
      }
  for (int m : match) REQUIRE(m >= 0);
  for (size_t i = 0; i < brute.size(); ++i)
    for (size_t j = 0; j < brute.size(); ++j)
      CHECK(morphism_exists(brute[i], brute[j]).has_value() ==
            cls.leq[match[i]][match[j]]);
}

TEST_CASE("brute force on group pairs finds only the product") {
  for (auto [n, h] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
    auto brute = brute_force_classify(cyclic_group(n), cyclic_group(h), n * h);
    REQUIRE(brute.size() == 1);
    CHECK(extensions_isomorphic(
        brute[0], product_extension(cyclic_group(n), cyclic_group(h))));
  }
}
