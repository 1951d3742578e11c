#include "wschreier/quotient_action.hpp"

#include <algorithm>
#include <string>

namespace wschreier {
namespace {

std::string fmt(std::initializer_list<std::pair<const char*, int>> parts) {
  std::string out;
  for (auto& [name, v] : parts) {
    if (!out.empty()) out += ", ";
    out += name;
    out += "=";
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

AdmissibleQuotient AdmissibleQuotient::from_fibers(
    FiniteMonoid N, FiniteMonoid H, std::vector<std::vector<int>> fibers) {
  AdmissibleQuotient q;
  q.fibers.resize(H.order());
  q.fiber_classes.resize(H.order());
  q.fiber_reps.resize(H.order());
  q.offsets.assign(H.order() + 1, 0);
  for (int h = 0; h < H.order(); ++h) {
    q.fibers[h] = canonicalize_classes(fibers[h], &q.fiber_classes[h]);
    q.fiber_reps[h].assign(q.fiber_classes[h], -1);
    for (int n = 0; n < N.order(); ++n)
      if (q.fiber_reps[h][q.fibers[h][n]] < 0) q.fiber_reps[h][q.fibers[h][n]] = n;
    q.offsets[h + 1] = q.offsets[h] + q.fiber_classes[h];
  }
  q.N = std::move(N);
  q.H = std::move(H);
  return q;
}

CheckResult is_admissible(const FiniteMonoid& N, const FiniteMonoid& H,
                          const std::vector<std::vector<int>>& fibers) {
  if (static_cast<int>(fibers.size()) != H.order())
    return {false, "Shape: expected one fiber per element of H"};
  for (const auto& f : fibers)
    if (static_cast<int>(f.size()) != N.order())
      return {false, "Shape: fiber must cover N"};
  for (int n1 = 0; n1 < N.order(); ++n1)
    for (int n2 = n1 + 1; n2 < N.order(); ++n2)
      if (fibers[0][n1] == fibers[0][n2])
        return {false, "IdentityFiberNotDiscrete: " + fmt({{"n1", n1}, {"n2", n2}})};
  for (int h = 0; h < H.order(); ++h)
    for (int n1 = 0; n1 < N.order(); ++n1)
      for (int n2 = n1 + 1; n2 < N.order(); ++n2) {
        if (fibers[h][n1] != fibers[h][n2]) continue;
        for (int n = 0; n < N.order(); ++n)
          if (fibers[h][N.mul(n, n1)] != fibers[h][N.mul(n, n2)])
            return {false, "LeftStability: " +
                               fmt({{"h", h}, {"n1", n1}, {"n2", n2}, {"n", n}})};
        for (int hp = 0; hp < H.order(); ++hp)
          if (fibers[H.mul(h, hp)][n1] != fibers[H.mul(h, hp)][n2])
            return {false, "RightStability: " +
                               fmt({{"h", h}, {"n1", n1}, {"n2", n2}, {"h'", hp}})};
      }
  return {};
}

namespace {

// All partitions of n elements as restricted growth strings, with pred filter.
template <typename Pred, typename Emit>
void partitions(int n, Pred&& keep, Emit&& emit) {
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      if (keep(a)) emit(a);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  rec(rec, 1, 0);
}

std::vector<bool> right_invertible_set(const FiniteMonoid& h) {
  std::vector<bool> out(h.order(), false);
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y)
      if (h.mul(x, y) == 0) {
        out[x] = true;
        break;
      }
  return out;
}

}  // namespace

std::vector<AdmissibleQuotient> enumerate_admissible_quotients(
    const FiniteMonoid& N, const FiniteMonoid& H,
    const EnumerationBounds& bounds) {
  if (N.order() * H.order() > bounds.max_quotient_cells)
    throw Error("BoundExceeded",
                "|N|*|H| = " + std::to_string(N.order() * H.order()) +
                    " exceeds quotient bound " +
                    std::to_string(bounds.max_quotient_cells));
  std::vector<int> discrete(N.order());
  for (int n = 0; n < N.order(); ++n) discrete[n] = n;
  if (N.order() == 1 || H.order() == 1) {
    // Unique quotient: discrete fibers throughout.
    std::vector<std::vector<int>> fibers(H.order(), discrete);
    return {AdmissibleQuotient::from_fibers(N, H, std::move(fibers))};
  }

  // Per-fiber candidates: left-stable partitions of N, pruned to the
  // discrete one over right-invertible elements of H.
  std::vector<bool> rinv = right_invertible_set(H);
  auto left_stable = [&](const std::vector<int>& p) {
    for (int n1 = 0; n1 < N.order(); ++n1)
      for (int n2 = n1 + 1; n2 < N.order(); ++n2) {
        if (p[n1] != p[n2]) continue;
        for (int n = 0; n < N.order(); ++n)
          if (p[N.mul(n, n1)] != p[N.mul(n, n2)]) return false;
      }
    return true;
  };
  std::vector<std::vector<std::vector<int>>> candidates(H.order());
  for (int h = 0; h < H.order(); ++h) {
    if (h == 0 || rinv[h]) {
      candidates[h] = {discrete};
      continue;
    }
    partitions(
        N.order(), left_stable,
        [&](const std::vector<int>& p) { candidates[h].push_back(p); });
  }

  std::vector<std::vector<int>> fibers(H.order());
  fibers[0] = discrete;
  std::vector<AdmissibleQuotient> out;
  auto right_stable_pair = [&](int h, int hp) {
    // Fiber over h must refine into the fiber over h*hp.
    const auto& src = fibers[h];
    const auto& dst = fibers[H.mul(h, hp)];
    for (int n1 = 0; n1 < N.order(); ++n1)
      for (int n2 = n1 + 1; n2 < N.order(); ++n2)
        if (src[n1] == src[n2] && dst[n1] != dst[n2]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int h) -> void {
    if (h == H.order()) {
      out.push_back(AdmissibleQuotient::from_fibers(N, H, fibers));
      return;
    }
    for (const auto& cand : candidates[h]) {
      fibers[h] = cand;
      bool ok = true;
      for (int h1 = 0; h1 <= h && ok; ++h1)
        for (int hp = 0; hp < H.order() && ok; ++hp) {
          int target = H.mul(h1, hp);
          if (target <= h) ok = right_stable_pair(h1, hp);
        }
      if (ok) self(self, h + 1);
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(),
            [](const AdmissibleQuotient& a, const AdmissibleQuotient& b) {
              return a.fibers < b.fibers;
            });
  return out;
}

PreAction trivial_preaction(const FiniteMonoid& N, const FiniteMonoid& H) {
  PreAction a;
  a.alpha.resize(H.order());
  for (auto& row : a.alpha) {
    row.resize(N.order());
    for (int n = 0; n < N.order(); ++n) row[n] = n;
  }
  return a;
}

CheckResult is_action(const AdmissibleQuotient& q, const PreAction& alpha) {
  const int no = q.N.order(), ho = q.H.order();
  if (static_cast<int>(alpha.alpha.size()) != ho)
    return {false, "Shape: alpha must have one row per element of H"};
  for (const auto& row : alpha.alpha)
    if (static_cast<int>(row.size()) != no)
      return {false, "Shape: alpha row must cover N"};
  const auto& a = alpha.alpha;
  // (1) related n1, n2 act equally on the classes [alpha(h,n), h].
  for (int h = 0; h < ho; ++h)
    for (int n1 = 0; n1 < no; ++n1)
      for (int n2 = n1 + 1; n2 < no; ++n2) {
        if (!q.related(n1, n2, h)) continue;
        for (int n = 0; n < no; ++n)
          if (q.fibers[h][q.N.mul(n1, a[h][n])] !=
              q.fibers[h][q.N.mul(n2, a[h][n])])
            return {false, "Condition1: " +
                               fmt({{"h", h}, {"n1", n1}, {"n2", n2}, {"n", n}})};
      }
  // (2) related arguments give classes equal after * h'.
  for (int hp = 0; hp < ho; ++hp)
    for (int n = 0; n < no; ++n)
      for (int np = n + 1; np < no; ++np) {
        if (!q.related(n, np, hp)) continue;
        for (int h = 0; h < ho; ++h)
          if (q.fibers[q.H.mul(h, hp)][a[h][n]] !=
              q.fibers[q.H.mul(h, hp)][a[h][np]])
            return {false, "Condition2: " +
                               fmt({{"h'", hp}, {"n", n}, {"n'", np}, {"h", h}})};
      }
  // (3) multiplicativity at class level.
  for (int h = 0; h < ho; ++h)
    for (int n = 0; n < no; ++n)
      for (int np = 0; np < no; ++np)
        if (q.fibers[h][a[h][q.N.mul(n, np)]] !=
            q.fibers[h][q.N.mul(a[h][n], a[h][np])])
          return {false, "Condition3: " + fmt({{"h", h}, {"n", n}, {"n'", np}})};
  // (4) compositionality at class level.
  for (int h = 0; h < ho; ++h)
    for (int hp = 0; hp < ho; ++hp) {
      int hhp = q.H.mul(h, hp);
      for (int n = 0; n < no; ++n)
        if (q.fibers[hhp][a[hhp][n]] != q.fibers[hhp][a[h][a[hp][n]]])
          return {false, "Condition4: " + fmt({{"h", h}, {"h'", hp}, {"n", n}})};
    }
  // (5) [alpha(h,1),h] = [1,h].
  for (int h = 0; h < ho; ++h)
    if (q.fibers[h][a[h][0]] != q.fibers[h][0])
      return {false, "Condition5: " + fmt({{"h", h}})};
  // (6) [alpha(1,n),1] = [n,1]; the identity fiber is discrete.
  for (int n = 0; n < no; ++n)
    if (a[0][n] != n) return {false, "Condition6: " + fmt({{"n", n}})};
  return {};
}

PreAction ActionClass::representative() const {
  PreAction a;
  a.alpha.resize(class_valued.size());
  for (size_t h = 0; h < class_valued.size(); ++h) {
    a.alpha[h].resize(class_valued[h].size());
    for (size_t n = 0; n < class_valued[h].size(); ++n)
      a.alpha[h][n] = quotient.rep(static_cast<int>(h), class_valued[h][n]);
  }
  return a;
}

ActionClass class_table_of(const AdmissibleQuotient& q, const PreAction& alpha) {
  ActionClass ac;
  ac.quotient = q;
  ac.class_valued.resize(q.H.order());
  for (int h = 0; h < q.H.order(); ++h) {
    ac.class_valued[h].resize(q.N.order());
    for (int n = 0; n < q.N.order(); ++n)
      ac.class_valued[h][n] = q.fibers[h][alpha.alpha[h][n]];
  }
  return ac;
}

CheckResult check_class_table(const AdmissibleQuotient& q,
                              const std::vector<std::vector<int>>& cv) {
  const int no = q.N.order(), ho = q.H.order();
  for (int h = 0; h < ho; ++h)
    for (int n1 = 0; n1 < no; ++n1)
      for (int n2 = n1 + 1; n2 < no; ++n2) {
        if (!q.related(n1, n2, h)) continue;
        for (int n = 0; n < no; ++n)
          if (q.star_left(n1, h, cv[h][n]) != q.star_left(n2, h, cv[h][n]))
            return {false, "Condition1: " +
                               fmt({{"h", h}, {"n1", n1}, {"n2", n2}, {"n", n}})};
      }
  for (int hp = 0; hp < ho; ++hp)
    for (int n = 0; n < no; ++n)
      for (int np = n + 1; np < no; ++np) {
        if (!q.related(n, np, hp)) continue;
        for (int h = 0; h < ho; ++h)
          if (q.star_right(h, cv[h][n], hp) != q.star_right(h, cv[h][np], hp))
            return {false, "Condition2: " +
                               fmt({{"h'", hp}, {"n", n}, {"n'", np}, {"h", h}})};
      }
  for (int h = 0; h < ho; ++h)
    for (int n = 0; n < no; ++n)
      for (int np = 0; np < no; ++np)
        if (cv[h][q.N.mul(n, np)] !=
            q.star_left(q.rep(h, cv[h][n]), h, cv[h][np]))
          return {false, "Condition3: " + fmt({{"h", h}, {"n", n}, {"n'", np}})};
  for (int h = 0; h < ho; ++h)
    for (int hp = 0; hp < ho; ++hp) {
      int hhp = q.H.mul(h, hp);
      for (int n = 0; n < no; ++n)
        if (cv[hhp][n] != q.star_right(h, cv[h][q.rep(hp, cv[hp][n])], hp))
          return {false, "Condition4: " + fmt({{"h", h}, {"h'", hp}, {"n", n}})};
    }
  for (int h = 0; h < ho; ++h)
    if (cv[h][0] != q.fibers[h][0])
      return {false, "Condition5: " + fmt({{"h", h}})};
  for (int n = 0; n < no; ++n)
    if (cv[0][n] != n) return {false, "Condition6: " + fmt({{"n", n}})};
  return {};
}

std::vector<ActionClass> enumerate_action_classes(
    const AdmissibleQuotient& q, const EnumerationBounds& bounds) {
  const int no = q.N.order(), ho = q.H.order();
  if (no * ho > bounds.max_action_cells)
    throw Error("BoundExceeded",
                "|N|*|H| = " + std::to_string(no * ho) +
                    " exceeds action search bound " +
                    std::to_string(bounds.max_action_cells));
  std::vector<std::vector<int>> cv(ho, std::vector<int>(no, 0));
  for (int n = 0; n < no; ++n) cv[0][n] = n;        // condition (6)
  for (int h = 0; h < ho; ++h) cv[h][0] = q.fibers[h][0];  // condition (5)
  std::vector<ActionClass> out;
  auto rec = [&](auto&& self, int h, int n) -> void {
    if (h == ho) {
      if (check_class_table(q, cv)) out.push_back(ActionClass{q, cv});
      return;
    }
    int nh = n + 1 == no ? h + 1 : h;
    int nn = n + 1 == no ? 1 : n + 1;
    for (int c = 0; c < q.fiber_classes[h]; ++c) {
      cv[h][n] = c;
      self(self, nh, nn);
    }
  };
  if (no == 1 || ho == 1) {
    if (check_class_table(q, cv)) out.push_back(ActionClass{q, cv});
  } else {
    rec(rec, 1, 1);
  }
  return out;
}

bool actions_equivalent(const AdmissibleQuotient& q, const PreAction& a,
                        const PreAction& b) {
  if (auto r = is_action(q, a); !r)
    throw Error("NotAnAction", "first argument: " + r.violation);
  if (auto r = is_action(q, b); !r)
    throw Error("NotAnAction", "second argument: " + r.violation);
  return class_table_of(q, a).class_valued == class_table_of(q, b).class_valued;
}

SplitExtension weak_semidirect_product(const AdmissibleQuotient& q,
                                       const ActionClass& action) {
  if (!(action.quotient == q))
    throw Error("NotAnAction", "action class built for a different quotient");
  if (auto r = check_class_table(q, action.class_valued); !r)
    throw Error("NotAnAction", r.violation);
  const auto& cv = action.class_valued;
  const int m = q.total_classes();
  std::vector<std::pair<int, int>> loc(m);  // global id -> (h, class)
  for (int h = 0; h < q.H.order(); ++h)
    for (int c = 0; c < q.fiber_classes[h]; ++c) loc[q.global_id(h, c)] = {h, c};
  std::vector<int> table(m * m);
  for (int a = 0; a < m; ++a) {
    auto [h, c] = loc[a];
    int n = q.rep(h, c);
    for (int b = 0; b < m; ++b) {
      auto [hp, cp] = loc[b];
      int np = q.rep(hp, cp);
      int c1 = q.star_left(n, h, cv[h][np]);
      table[a * m + b] = q.global_id(q.H.mul(h, hp), q.star_right(h, c1, hp));
    }
  }
  FiniteMonoid g = FiniteMonoid::validate(m, std::move(table));
  std::vector<int> kmap(q.N.order()), emap(m), smap(q.H.order());
  for (int n = 0; n < q.N.order(); ++n) kmap[n] = q.global_id(0, q.fibers[0][n]);
  for (int a = 0; a < m; ++a) emap[a] = loc[a].first;
  for (int h = 0; h < q.H.order(); ++h) smap[h] = q.global_id(h, q.fibers[h][0]);
  return SplitExtension::validate(
      q.N, g, q.H, MonoidHom::validate(q.N, g, std::move(kmap)),
      MonoidHom::validate(g, q.H, std::move(emap)),
      MonoidHom::validate(q.H, g, std::move(smap)));
}

}  // namespace wschreier
