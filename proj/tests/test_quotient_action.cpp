#include <algorithm>
#include <set>

#include "doctest.h"
#include "wschreier/quotient_action.hpp"

using namespace wschreier;

namespace {

// Oracle: every fiber-wise partition of N x H (as restricted growth
// strings per fiber), filtered through is_admissible.
std::vector<std::vector<std::vector<int>>> brute_admissible(
    const FiniteMonoid& n, const FiniteMonoid& h) {
  std::vector<std::vector<int>> fiber_partitions;
  {
    std::vector<int> cur(n.order(), 0);
    auto rec = [&](auto&& self, int i, int next) -> void {
      if (i == n.order()) {
        fiber_partitions.push_back(cur);
        return;
      }
      for (int c = 0; c <= next; ++c) {
        cur[i] = c;
        self(self, i + 1, std::max(next, c + 1));
      }
    };
    rec(rec, 0, 0);
  }
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> fibers(h.order());
  auto rec = [&](auto&& self, int x) -> void {
    if (x == h.order()) {
      if (is_admissible(n, h, fibers)) out.push_back(fibers);
      return;
    }
    for (const auto& p : fiber_partitions) {
      fibers[x] = p;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Oracle: every raw map alpha: H x N -> N, filtered through is_action,
// collapsed to distinct class tables.
std::vector<std::vector<std::vector<int>>> brute_action_classes(
    const AdmissibleQuotient& q) {
  int cells = q.N.order() * q.H.order();
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= q.N.order();
  std::set<std::vector<std::vector<int>>> tables;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    PreAction a{std::vector<std::vector<int>>(
        q.H.order(), std::vector<int>(q.N.order()))};
    for (int h = 0; h < q.H.order(); ++h)
      for (int n = 0; n < q.N.order(); ++n) {
        a.alpha[h][n] = static_cast<int>(c % q.N.order());
        c /= q.N.order();
      }
    if (is_action(q, a)) tables.insert(class_table_of(q, a).class_valued);
  }
  return {tables.begin(), tables.end()};
}

}  // namespace

TEST_CASE("admissibility conditions with witnesses") {
  auto s2 = chain_semilattice(2);
  CHECK(is_admissible(s2, s2, {{0, 1}, {0, 1}}));  // discrete
  CHECK(is_admissible(s2, s2, {{0, 1}, {0, 0}}));  // coarse
  auto bad_identity = is_admissible(s2, s2, {{0, 0}, {0, 1}});
  CHECK(!bad_identity.ok);
  CHECK(bad_identity.violation.find("IdentityFiber") != std::string::npos);
  // C2 fibers cannot lump: left translation by the nonidentity separates
  auto c2 = cyclic_group(2);
  CHECK(!is_admissible(c2, c2, {{0, 1}, {0, 0}}).ok);
}

TEST_CASE("star actions are well defined on classes") {
  auto s2 = chain_semilattice(2);
  auto q = AdmissibleQuotient::from_fibers(s2, s2, {{0, 1}, {0, 0}});
  CHECK(q.total_classes() == 3);
  CHECK(q.fiber_classes == std::vector<int>{2, 1});
  CHECK(q.global_id(1, 0) == 2);
  // n * [n', h] = [n n', h] is independent of the representative n'
  for (int n = 0; n < 2; ++n)
    for (int h = 0; h < 2; ++h)
      for (int n1 = 0; n1 < 2; ++n1)
        for (int n2 = 0; n2 < 2; ++n2)
          if (q.related(n1, n2, h))
            CHECK(q.fibers[h][s2.mul(n, n1)] == q.fibers[h][s2.mul(n, n2)]);
  // [n, h] * h' = [n, h h'] likewise
  for (int h = 0; h < 2; ++h)
    for (int hp = 0; hp < 2; ++hp)
      for (int n1 = 0; n1 < 2; ++n1)
        for (int n2 = 0; n2 < 2; ++n2)
          if (q.related(n1, n2, h))
            CHECK(q.fibers[s2.mul(h, hp)][n1] == q.fibers[s2.mul(h, hp)][n2]);
  CHECK(q.star_left(1, 1, 0) == 0);
  CHECK(q.star_right(0, 1, 1) == 0);
}

TEST_CASE("quotient enumeration against the brute-force oracle") {
  auto pool = std::vector<FiniteMonoid>{trivial_monoid(), cyclic_group(2),
                                        chain_semilattice(2),
                                        cyclic_group(3), chain_semilattice(3)};
  for (const auto& n : pool) {
    for (const auto& h : pool) {
      auto fast = enumerate_admissible_quotients(n, h);
      auto brute = brute_admissible(n, h);
      REQUIRE(fast.size() == brute.size());
      std::vector<std::vector<std::vector<int>>> got;
      for (const auto& q : fast) got.push_back(q.fibers);
      std::sort(got.begin(), got.end());
      CHECK(got == brute);
    }
  }
}

TEST_CASE("quotient census on hand-checked pairs") {
  auto s2 = chain_semilattice(2);
  auto c2 = cyclic_group(2);
  CHECK(enumerate_admissible_quotients(s2, s2).size() == 2);
  CHECK(enumerate_admissible_quotients(c2, c2).size() == 1);  // discrete only
  CHECK(enumerate_admissible_quotients(c2, cyclic_group(3)).size() == 1);
  EnumerationBounds tight;
  tight.max_quotient_cells = 3;
  CHECK_THROWS_AS(enumerate_admissible_quotients(s2, s2, tight), Error);
}

TEST_CASE("the six action conditions") {
  auto s2 = chain_semilattice(2);
  auto discrete = AdmissibleQuotient::from_fibers(s2, s2, {{0, 1}, {0, 1}});
  CHECK(is_action(discrete, trivial_preaction(s2, s2)));
  // the twist: alpha(bot, n) = top for all n
  PreAction twist{{{0, 1}, {0, 0}}};
  CHECK(is_action(discrete, twist));
  // alpha(bot, 1) = 1 with alpha(bot, 1_N) = 1 violates unit preservation
  PreAction bad{{{0, 1}, {1, 1}}};
  auto r = is_action(discrete, bad);
  CHECK(!r.ok);
  CHECK(r.violation.find("Condition5") != std::string::npos);
  // a non-identity alpha(1, -) row violates the unit law in H; the
  // composition condition detects the inconsistency
  PreAction bad2{{{0, 0}, {0, 1}}};
  auto r2 = is_action(discrete, bad2);
  CHECK(!r2.ok);
  CHECK(!r2.violation.empty());
  // the direct unit-row violation is reported as Condition6
  PreAction bad3{{{0, 0}, {0, 0}}};
  auto r3 = is_action(discrete, bad3);
  CHECK(!r3.ok);
  CHECK(r3.violation.find("Condition6") != std::string::npos);
}

TEST_CASE("class tables and equivalence of actions") {
  auto s2 = chain_semilattice(2);
  auto coarse = AdmissibleQuotient::from_fibers(s2, s2, {{0, 1}, {0, 0}});
  // over the coarse quotient, both the trivial map and the twist collapse
  // to the same (unique) class table
  PreAction twist{{{0, 1}, {0, 0}}};
  CHECK(actions_equivalent(coarse, trivial_preaction(s2, s2), twist));
  auto ct = class_table_of(coarse, twist);
  CHECK(ct.class_valued == std::vector<std::vector<int>>{{0, 1}, {0, 0}});
  CHECK(check_class_table(coarse, ct.class_valued));
  auto rep = ct.representative();
  CHECK(is_action(coarse, rep));
  // over the discrete quotient they are inequivalent
  auto discrete = AdmissibleQuotient::from_fibers(s2, s2, {{0, 1}, {0, 1}});
  CHECK(!actions_equivalent(discrete, trivial_preaction(s2, s2), twist));
}

TEST_CASE("action class enumeration against the raw oracle") {
  auto pool = std::vector<std::pair<FiniteMonoid, FiniteMonoid>>{
      {chain_semilattice(2), chain_semilattice(2)},
      {cyclic_group(2), cyclic_group(2)},
      {cyclic_group(2), cyclic_group(3)},
      {chain_semilattice(2), cyclic_group(2)},
      {cyclic_group(2), chain_semilattice(2)},
      {chain_semilattice(3), chain_semilattice(2)},
  };
  for (const auto& [n, h] : pool) {
    for (const auto& q : enumerate_admissible_quotients(n, h)) {
      auto fast = enumerate_action_classes(q);
      auto brute = brute_action_classes(q);
      REQUIRE(fast.size() == brute.size());
      std::vector<std::vector<std::vector<int>>> got;
      for (const auto& a : fast) got.push_back(a.class_valued);
      std::sort(got.begin(), got.end());
      CHECK(got == brute);
      for (const auto& a : fast) CHECK(is_action(q, a.representative()));
    }
  }
}

TEST_CASE("action class census on hand-checked quotients") {
  auto s2 = chain_semilattice(2);
  auto discrete = AdmissibleQuotient::from_fibers(s2, s2, {{0, 1}, {0, 1}});
  auto coarse = AdmissibleQuotient::from_fibers(s2, s2, {{0, 1}, {0, 0}});
  CHECK(enumerate_action_classes(discrete).size() == 2);  // trivial + twist
  CHECK(enumerate_action_classes(coarse).size() == 1);
  EnumerationBounds tight;
  tight.max_action_cells = 3;
  CHECK_THROWS_AS(enumerate_action_classes(discrete, tight), Error);
}

TEST_CASE("weak semidirect product builds valid extensions") {
  auto s2 = chain_semilattice(2);
  auto discrete = AdmissibleQuotient::from_fibers(s2, s2, {{0, 1}, {0, 1}});
  auto coarse = AdmissibleQuotient::from_fibers(s2, s2, {{0, 1}, {0, 0}});
  for (const auto& q : {discrete, coarse}) {
    for (const auto& a : enumerate_action_classes(q)) {
      auto ext = weak_semidirect_product(q, a);
      CHECK(ext.G.order() == q.total_classes());
      CHECK(is_weakly_schreier(ext).weakly_schreier);
      CHECK(canonical_quotient(ext).num_classes == q.total_classes());
    }
  }
  // the coarse product of the 2-chains is the 3-chain
  auto ext = weak_semidirect_product(
      coarse, enumerate_action_classes(coarse)[0]);
  CHECK(find_isomorphism(ext.G, chain_semilattice(3)).has_value());
}
