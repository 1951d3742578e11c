#include "wschreier/split_ext.hpp"

#include <algorithm>
#include <string>

namespace wschreier {

SplitExtension SplitExtension::validate(FiniteMonoid N, FiniteMonoid G,
                                        FiniteMonoid H, MonoidHom k,
                                        MonoidHom e, MonoidHom s) {
  if (k.dom != N || k.cod != G || e.dom != G || e.cod != H || s.dom != H ||
      s.cod != G)
    throw Error("DomainMismatch", "homs do not type-check against N, G, H");
  if (!k.injective()) throw Error("KernelMismatch", "k is not injective");
  Submonoid ker = kernel(e);
  std::vector<int> image(k.map);
  std::sort(image.begin(), image.end());
  if (image != ker.members) {
    // Name one element on the symmetric difference.
    for (int g : ker.members)
      if (!std::binary_search(image.begin(), image.end(), g))
        throw Error("KernelMismatch",
                    "kernel element " + std::to_string(g) + " not in im(k)");
    for (int g : image)
      if (!std::binary_search(ker.members.begin(), ker.members.end(), g))
        throw Error("KernelMismatch",
                    "im(k) element " + std::to_string(g) + " not in ker(e)");
  }
  if (!is_cokernel(k, e)) throw Error("CokernelMismatch", "e is not coker(k)");
  for (int h = 0; h < H.order(); ++h)
    if (e.map[s.map[h]] != h)
      throw Error("SectionNotSplitting", "e(s(" + std::to_string(h) + ")) != " +
                                             std::to_string(h));
  return SplitExtension{std::move(N), std::move(G), std::move(H), std::move(k),
                        std::move(e), std::move(s)};
}

SplitExtension product_extension(const FiniteMonoid& n, const FiniteMonoid& h) {
  FiniteMonoid g = direct_product(n, h);
  std::vector<int> kmap(n.order()), emap(g.order()), smap(h.order());
  for (int a = 0; a < n.order(); ++a) kmap[a] = a * h.order();
  for (int x = 0; x < g.order(); ++x) emap[x] = x % h.order();
  for (int b = 0; b < h.order(); ++b) smap[b] = b;
  return SplitExtension::validate(
      n, g, h, MonoidHom::validate(n, g, std::move(kmap)),
      MonoidHom::validate(g, h, std::move(emap)),
      MonoidHom::validate(h, g, std::move(smap)));
}

WeaklySchreierWitness is_weakly_schreier(const SplitExtension& ext) {
  WeaklySchreierWitness out;
  out.witnesses.resize(ext.G.order());
  out.weakly_schreier = true;
  for (int g = 0; g < ext.G.order(); ++g) {
    int se = ext.s.map[ext.e.map[g]];
    for (int n = 0; n < ext.N.order(); ++n)
      if (ext.G.mul(ext.k.map[n], se) == g) out.witnesses[g].push_back(n);
    if (out.witnesses[g].empty()) out.weakly_schreier = false;
  }
  return out;
}

std::uint64_t count_schreier_retractions(const SplitExtension& ext,
                                         std::uint64_t cap) {
  auto w = is_weakly_schreier(ext);
  if (!w.weakly_schreier) return 0;
  std::uint64_t count = 1;
  for (const auto& ws : w.witnesses) {
    count *= ws.size();
    if (count > cap) return cap + 1;
  }
  return count;
}

std::vector<SchreierRetraction> enumerate_schreier_retractions(
    const SplitExtension& ext, std::uint64_t cap) {
  auto w = is_weakly_schreier(ext);
  if (!w.weakly_schreier)
    throw Error("NotWeaklySchreier", "some g has an empty witness set");
  std::uint64_t count = 1;
  for (const auto& ws : w.witnesses) {
    count *= ws.size();
    if (count > cap)
      throw Error("BoundExceeded", "more than " + std::to_string(cap) +
                                       " retractions; raise the cap");
  }
  std::vector<SchreierRetraction> out;
  out.reserve(count);
  RetractionCursor cursor(ext);
  while (auto q = cursor.next()) out.push_back(std::move(*q));
  return out;
}

RetractionCursor::RetractionCursor(const SplitExtension& ext) {
  auto w = is_weakly_schreier(ext);
  if (!w.weakly_schreier)
    throw Error("NotWeaklySchreier", "some g has an empty witness set");
  witnesses_ = std::move(w.witnesses);
  index_.assign(witnesses_.size(), 0);
}

std::optional<SchreierRetraction> RetractionCursor::next() {
  if (done_) return std::nullopt;
  SchreierRetraction r;
  r.q.resize(witnesses_.size());
  for (size_t g = 0; g < witnesses_.size(); ++g) r.q[g] = witnesses_[g][index_[g]];
  // Odometer step, last coordinate fastest.
  size_t i = witnesses_.size();
  while (i > 0) {
    --i;
    if (++index_[i] < witnesses_[i].size()) return r;
    index_[i] = 0;
  }
  done_ = true;
  return r;
}

bool check_retraction_properties(const SplitExtension& ext,
                                 const SchreierRetraction& r) {
  for (int n = 0; n < ext.N.order(); ++n)
    if (r.q[ext.k.map[n]] != n) return false;
  if (r.q[0] != 0) return false;
  for (int h = 0; h < ext.H.order(); ++h)
    for (int n = 0; n < ext.N.order(); ++n) {
      int shkn = ext.G.mul(ext.s.map[h], ext.k.map[n]);
      if (ext.G.mul(ext.k.map[r.q[shkn]], ext.s.map[h]) != shkn) return false;
    }
  return true;
}

CanonicalQuotient canonical_quotient(const SplitExtension& ext) {
  auto w = is_weakly_schreier(ext);
  if (!w.weakly_schreier)
    throw Error("NotWeaklySchreier", "some g has an empty witness set");
  CanonicalQuotient q;
  q.n_order = ext.N.order();
  q.h_order = ext.H.order();
  const int pairs = q.n_order * q.h_order;
  std::vector<int> by_image(pairs);
  for (int n = 0; n < q.n_order; ++n)
    for (int h = 0; h < q.h_order; ++h)
      by_image[n * q.h_order + h] = ext.G.mul(ext.k.map[n], ext.s.map[h]);
  q.class_of = canonicalize_classes(by_image, &q.num_classes);
  q.reps.resize(q.num_classes, {-1, -1});
  q.image.resize(q.num_classes, -1);
  for (int n = 0; n < q.n_order; ++n)
    for (int h = 0; h < q.h_order; ++h) {
      int c = q.class_of[n * q.h_order + h];
      if (q.reps[c].first < 0) {
        q.reps[c] = {n, h};
        q.image[c] = by_image[n * q.h_order + h];
      }
    }
  return q;
}

bool is_schreier(const SplitExtension& ext) {
  auto w = is_weakly_schreier(ext);
  if (!w.weakly_schreier) return false;
  return canonical_quotient(ext).discrete();
}

WeakSemidirectPresentation weak_semidirect_presentation(
    const SplitExtension& ext) {
  CanonicalQuotient q = canonical_quotient(ext);
  // phi-bar is a bijection classes -> G; transport the table back.
  std::vector<int> class_of_g(ext.G.order(), -1);
  for (int c = 0; c < q.num_classes; ++c) class_of_g[q.image[c]] = c;
  const int m = q.num_classes;
  std::vector<int> table(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a * m + b] = class_of_g[ext.G.mul(q.image[a], q.image[b])];
  FiniteMonoid cm = FiniteMonoid::validate(m, std::move(table));
  MonoidHom iso = MonoidHom::validate(cm, ext.G, q.image);

  std::vector<int> kmap(ext.N.order()), emap(m), smap(ext.H.order());
  for (int n = 0; n < ext.N.order(); ++n) kmap[n] = q.pair_class(n, 0);
  for (int c = 0; c < m; ++c) emap[c] = q.reps[c].second;
  for (int h = 0; h < ext.H.order(); ++h) smap[h] = q.pair_class(0, h);
  SplitExtension prim = SplitExtension::validate(
      ext.N, cm, ext.H, MonoidHom::validate(ext.N, cm, std::move(kmap)),
      MonoidHom::validate(cm, ext.H, std::move(emap)),
      MonoidHom::validate(ext.H, cm, std::move(smap)));
  return WeakSemidirectPresentation{std::move(cm), std::move(iso),
                                    std::move(prim)};
}

}  // namespace wschreier
