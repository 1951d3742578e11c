#include "wschreier/wact.hpp"

#include <algorithm>
#include <string>

#include "wschreier/parallel.hpp"

namespace wschreier {
namespace {

void require_same_signature(const FiniteMonoid& n1, const FiniteMonoid& h1,
                            const FiniteMonoid& n2, const FiniteMonoid& h2) {
  if (n1 != n2 || h1 != h2)
    throw Error("SignatureMismatch", "the two sides have different N or H");
}

/// Fiber-wise view of the canonical quotient E(e,s).
AdmissibleQuotient fiber_view(const FiniteMonoid& N, const FiniteMonoid& H,
                              const CanonicalQuotient& cq) {
  std::vector<std::vector<int>> fibers(H.order(), std::vector<int>(N.order()));
  for (int h = 0; h < H.order(); ++h)
    for (int n = 0; n < N.order(); ++n) fibers[h][n] = cq.pair_class(n, h);
  return AdmissibleQuotient::from_fibers(N, H, std::move(fibers));
}

}  // namespace

bool wact_leq(const WActObject& a, const WActObject& b) {
  require_same_signature(a.quotient.N, a.quotient.H, b.quotient.N, b.quotient.H);
  const FiniteMonoid& N = a.quotient.N;
  const FiniteMonoid& H = a.quotient.H;
  for (int h = 0; h < H.order(); ++h)
    for (int n1 = 0; n1 < N.order(); ++n1)
      for (int n2 = n1 + 1; n2 < N.order(); ++n2)
        if (a.quotient.related(n1, n2, h) && !b.quotient.related(n1, n2, h))
          return false;
  // Action agreement through Q': representative choice is immaterial once
  // the refinement above holds.
  for (int h = 0; h < H.order(); ++h)
    for (int n = 0; n < N.order(); ++n) {
      int alpha_a = a.quotient.rep(h, a.action.class_valued[h][n]);
      if (b.quotient.fibers[h][alpha_a] != b.action.class_valued[h][n])
        return false;
    }
  return true;
}

WActObject functor_T(const SplitExtension& ext) {
  auto w = is_weakly_schreier(ext);
  if (!w.weakly_schreier)
    throw Error("NotWeaklySchreier", "some g has an empty witness set");
  CanonicalQuotient cq = canonical_quotient(ext);
  AdmissibleQuotient q = fiber_view(ext.N, ext.H, cq);
  std::vector<std::vector<int>> cv(ext.H.order(),
                                   std::vector<int>(ext.N.order()));
  for (int h = 0; h < ext.H.order(); ++h)
    for (int n = 0; n < ext.N.order(); ++n) {
      int g = ext.G.mul(ext.s.map[h], ext.k.map[n]);
      const auto& choices = w.witnesses[g];
      cv[h][n] = q.fibers[h][choices.front()];
      // Every retraction picks some witness of g here; the induced class
      // must not depend on the pick.
      for (int other : choices)
        if (q.fibers[h][other] != cv[h][n])
          throw Error("RetractionDependence",
                      "witnesses of g=" + std::to_string(g) +
                          " land in different classes");
    }
  return WActObject{q, ActionClass{q, std::move(cv)}};
}

SplitExtension functor_S(const WActObject& obj) {
  return weak_semidirect_product(obj.quotient, obj.action);
}

std::optional<ExtensionMorphism> morphism_exists(const SplitExtension& ext1,
                                                 const SplitExtension& ext2) {
  require_same_signature(ext1.N, ext1.H, ext2.N, ext2.H);
  WActObject t1 = functor_T(ext1);
  WActObject t2 = functor_T(ext2);
  if (!wact_leq(t1, t2)) return std::nullopt;
  auto w = is_weakly_schreier(ext1);
  std::vector<int> map(ext1.G.order());
  for (int g = 0; g < ext1.G.order(); ++g) {
    int n = w.witnesses[g].front();
    int h = ext1.e.map[g];
    map[g] = ext2.G.mul(ext2.k.map[n], ext2.s.map[h]);
  }
  MonoidHom psi = MonoidHom::validate(ext1.G, ext2.G, std::move(map));
  // The three squares and the class action; these hold whenever
  // T(ext1) <= T(ext2), so a failure would be an internal fault.
  for (int n = 0; n < ext1.N.order(); ++n)
    if (psi.map[ext1.k.map[n]] != ext2.k.map[n])
      throw Error("InternalError", "kernel square broken");
  for (int g = 0; g < ext1.G.order(); ++g)
    if (ext2.e.map[psi.map[g]] != ext1.e.map[g])
      throw Error("InternalError", "cokernel square broken");
  for (int h = 0; h < ext1.H.order(); ++h)
    if (psi.map[ext1.s.map[h]] != ext2.s.map[h])
      throw Error("InternalError", "section square broken");
  for (int n = 0; n < ext1.N.order(); ++n)
    for (int h = 0; h < ext1.H.order(); ++h)
      if (psi.map[ext1.G.mul(ext1.k.map[n], ext1.s.map[h])] !=
          ext2.G.mul(ext2.k.map[n], ext2.s.map[h]))
        throw Error("InternalError", "class action broken");
  return ExtensionMorphism{ext1, ext2, std::move(psi)};
}

bool extensions_isomorphic(const SplitExtension& ext1,
                           const SplitExtension& ext2) {
  require_same_signature(ext1.N, ext1.H, ext2.N, ext2.H);
  WActObject t1 = functor_T(ext1);
  WActObject t2 = functor_T(ext2);
  return wact_leq(t1, t2) && wact_leq(t2, t1);
}

std::vector<MonoidHom> search_square_commuting_homs(const SplitExtension& ext1,
                                                    const SplitExtension& ext2) {
  std::vector<MonoidHom> out;
  for (auto& f : all_homs(ext1.G, ext2.G)) {
    bool ok = true;
    for (int n = 0; n < ext1.N.order() && ok; ++n)
      ok = f.map[ext1.k.map[n]] == ext2.k.map[n];
    for (int g = 0; g < ext1.G.order() && ok; ++g)
      ok = ext2.e.map[f.map[g]] == ext1.e.map[g];
    for (int h = 0; h < ext1.H.order() && ok; ++h)
      ok = f.map[ext1.s.map[h]] == ext2.s.map[h];
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

Classification classify_extensions(const FiniteMonoid& N, const FiniteMonoid& H,
                                   const EnumerationBounds& bounds,
                                   int threads) {
  auto quotients = enumerate_admissible_quotients(N, H, bounds);
  std::vector<std::vector<ActionClass>> per_quotient(quotients.size());
  parallel_for(static_cast<int>(quotients.size()), threads, [&](int i) {
    per_quotient[i] = enumerate_action_classes(quotients[i], bounds);
  });
  Classification out;
  for (size_t i = 0; i < quotients.size(); ++i)
    for (auto& ac : per_quotient[i])
      out.objects.push_back(WActObject{quotients[i], std::move(ac)});
  const int m = static_cast<int>(out.objects.size());
  out.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.leq[i][j] = wact_leq(out.objects[i], out.objects[j]);
  return out;
}

namespace {

// Orderly generation of monoid tables: fill cells (a,b), a,b >= 1, in
// row-major order, pruning by partial associativity, and keep a finished
// table only if it is lexicographically minimal among relabelings fixing 0.
class MonoidGenerator {
public:
  explicit MonoidGenerator(int order) : n_(order), table_(order * order, -1) {
    for (int a = 0; a < n_; ++a) {
      table_[a] = a;
      table_[a * n_] = a;
    }
  }

  std::vector<FiniteMonoid> run() {
    fill(1, 1);
    return std::move(out_);
  }

private:
  int at(int a, int b) const { return table_[a * n_ + b]; }

  bool partial_associative() const {
    for (int a = 1; a < n_; ++a)
      for (int b = 1; b < n_; ++b) {
        int ab = at(a, b);
        if (ab < 0) continue;
        for (int c = 1; c < n_; ++c) {
          int bc = at(b, c);
          if (bc < 0) continue;
          int l = at(ab, c), r = at(a, bc);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  bool canonical() const {
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[i] = i;
    std::vector<int> relabeled(n_ * n_);
    std::vector<int> inverse(n_);
    do {
      for (int i = 0; i < n_; ++i) inverse[perm[i]] = i;
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          relabeled[a * n_ + b] = perm[at(inverse[a], inverse[b])];
      if (relabeled < table_) return false;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return true;
  }

  void fill(int a, int b) {
    if (a == n_) {
      if (canonical()) out_.push_back(FiniteMonoid::validate(n_, table_));
      return;
    }
    int na = b + 1 == n_ ? a + 1 : a;
    int nb = b + 1 == n_ ? 1 : b + 1;
    for (int v = 0; v < n_; ++v) {
      table_[a * n_ + b] = v;
      if (partial_associative()) fill(na, nb);
    }
    table_[a * n_ + b] = -1;
  }

  int n_;
  std::vector<int> table_;
  std::vector<FiniteMonoid> out_;
};

}  // namespace

std::vector<FiniteMonoid> enumerate_monoids(int order) {
  if (order < 1 || order > 6)
    throw Error("BoundExceeded",
                "monoid enumeration supports orders 1..6, got " +
                    std::to_string(order));
  if (order == 1) return {trivial_monoid()};
  return MonoidGenerator(order).run();
}

std::vector<SplitExtension> brute_force_classify(const FiniteMonoid& N,
                                                 const FiniteMonoid& H,
                                                 int max_order, int threads) {
  if (max_order < N.order())
    throw Error("BoundExceeded", "max_order must be at least |N|");
  const int hi = std::min(max_order, N.order() * H.order());
  if (hi > 6)
    throw Error("BoundExceeded",
                "oracle needs monoids of order " + std::to_string(hi) +
                    "; capped at 6");
  std::vector<FiniteMonoid> candidates;
  for (int order = std::max(N.order(), H.order()); order <= hi; ++order)
    for (auto& g : enumerate_monoids(order)) candidates.push_back(std::move(g));

  std::vector<std::vector<SplitExtension>> found(candidates.size());
  parallel_for(static_cast<int>(candidates.size()), threads, [&](int i) {
    const FiniteMonoid& G = candidates[i];
    auto ks = all_homs(N, G);
    auto es = all_homs(G, H);
    auto ss = all_homs(H, G);
    for (const auto& k : ks) {
      if (!k.injective()) continue;
      std::vector<int> image(k.map);
      std::sort(image.begin(), image.end());
      for (const auto& e : es) {
        if (kernel(e).members != image) continue;
        if (!is_cokernel(k, e)) continue;
        for (const auto& s : ss) {
          bool splits = true;
          for (int h = 0; h < H.order() && splits; ++h)
            splits = e.map[s.map[h]] == h;
          if (!splits) continue;
          SplitExtension ext{N, G, H, k, e, s};
          if (!is_weakly_schreier(ext).weakly_schreier) continue;
          found[i].push_back(std::move(ext));
        }
      }
    }
  });
  std::vector<SplitExtension> out;
  for (auto& bucket : found)
    for (auto& ext : bucket) {
      bool fresh = true;
      for (const auto& seen : out)
        if (extensions_isomorphic(seen, ext)) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(std::move(ext));
    }
  return out;
}

}  // namespace wschreier
