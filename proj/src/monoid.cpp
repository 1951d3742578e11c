#include "wschreier/monoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace wschreier {
namespace {

std::string elems(std::initializer_list<int> xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ", ";
    out += std::to_string(x);
  }
  return out;
}

// Union-find with path compression.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

private:
  std::vector<int> parent_;
};

}  // namespace

FiniteMonoid FiniteMonoid::validate(int order, std::vector<int> table) {
  if (order <= 0 || static_cast<int>(table.size()) != order * order)
    throw Error("BadShape", "table must be order x order with order >= 1");
  for (int v : table)
    if (v < 0 || v >= order)
      throw Error("BadShape", "table entry out of range: " + std::to_string(v));
  auto at = [&](int a, int b) { return table[a * order + b]; };
  for (int a = 0; a < order; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw Error("IdentityViolation", "element " + std::to_string(a));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error("AssociativityViolation", "(" + elems({a, b, c}) + ")");
  return FiniteMonoid(order, std::move(table));
}

bool FiniteMonoid::commutative() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteMonoid::idempotent() const {
  for (int a = 0; a < order_; ++a)
    if (mul(a, a) != a) return false;
  return true;
}

bool FiniteMonoid::is_group() const {
  for (int a = 0; a < order_; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < order_ && !has_inverse; ++b)
      has_inverse = mul(a, b) == 0 && mul(b, a) == 0;
    if (!has_inverse) return false;
  }
  return true;
}

MonoidHom MonoidHom::validate(FiniteMonoid dom, FiniteMonoid cod,
                              std::vector<int> map) {
  if (static_cast<int>(map.size()) != dom.order())
    throw Error("BadShape", "map must be total on the domain");
  for (int v : map)
    if (v < 0 || v >= cod.order())
      throw Error("BadShape", "map value out of range: " + std::to_string(v));
  if (map[0] != 0) throw Error("IdentityNotPreserved", "map[1] != 1");
  for (int a = 0; a < dom.order(); ++a)
    for (int b = 0; b < dom.order(); ++b)
      if (map[dom.mul(a, b)] != cod.mul(map[a], map[b]))
        throw Error("MultiplicationNotPreserved", "(" + elems({a, b}) + ")");
  return MonoidHom{std::move(dom), std::move(cod), std::move(map)};
}

bool MonoidHom::injective() const {
  std::vector<bool> seen(cod.order(), false);
  for (int v : map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool MonoidHom::surjective() const {
  std::vector<bool> seen(cod.order(), false);
  for (int v : map) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

MonoidHom identity_hom(const FiniteMonoid& m) {
  std::vector<int> map(m.order());
  std::iota(map.begin(), map.end(), 0);
  return MonoidHom{m, m, std::move(map)};
}

MonoidHom zero_hom(const FiniteMonoid& dom, const FiniteMonoid& cod) {
  return MonoidHom{dom, cod, std::vector<int>(dom.order(), 0)};
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  if (f.cod != g.dom) throw Error("DomainMismatch", "cod(f) != dom(g)");
  std::vector<int> map(f.dom.order());
  for (int a = 0; a < f.dom.order(); ++a) map[a] = g.map[f.map[a]];
  return MonoidHom{f.dom, g.cod, std::move(map)};
}

bool Congruence::compatible() const {
  const int n = monoid.order();
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      if (class_of[a] != class_of[a2]) continue;
      for (int b = 0; b < n; ++b)
        for (int b2 = 0; b2 < n; ++b2) {
          if (class_of[b] != class_of[b2]) continue;
          if (class_of[monoid.mul(a, b)] != class_of[monoid.mul(a2, b2)])
            return false;
        }
    }
  return true;
}

std::vector<int> canonicalize_classes(std::span<const int> classes,
                                      int* num_classes) {
  int max_id = -1;
  for (int c : classes) max_id = std::max(max_id, c);
  std::vector<int> rename(max_id + 1, -1);
  std::vector<int> out(classes.size());
  int next = 0;
  for (size_t i = 0; i < classes.size(); ++i) {
    if (rename[classes[i]] < 0) rename[classes[i]] = next++;
    out[i] = rename[classes[i]];
  }
  if (num_classes) *num_classes = next;
  return out;
}

Congruence congruence_closure(const FiniteMonoid& m,
                              std::span<const std::pair<int, int>> seeds) {
  const int n = m.order();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    for (int x = 0; x < n; ++x) {
      work.emplace_back(m.mul(x, a), m.mul(x, b));
      work.emplace_back(m.mul(a, x), m.mul(b, x));
    }
  }
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = uf.find(i);
  Congruence c{m, {}, 0};
  c.class_of = canonicalize_classes(raw, &c.num_classes);
  return c;
}

Congruence kernel_pair(const MonoidHom& f) {
  Congruence c{f.dom, {}, 0};
  c.class_of = canonicalize_classes(f.map, &c.num_classes);
  return c;
}

std::pair<FiniteMonoid, MonoidHom> quotient_monoid(const FiniteMonoid& m,
                                                   const Congruence& c) {
  const int q = c.num_classes;
  std::vector<int> rep(q, -1);
  for (int a = 0; a < m.order(); ++a)
    if (rep[c.class_of[a]] < 0) rep[c.class_of[a]] = a;
  std::vector<int> table(q * q);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      table[x * q + y] = c.class_of[m.mul(rep[x], rep[y])];
  FiniteMonoid quot = FiniteMonoid::validate(q, std::move(table));
  MonoidHom proj = MonoidHom::validate(m, quot, c.class_of);
  return {std::move(quot), std::move(proj)};
}

Submonoid submonoid_closure(const FiniteMonoid& m, std::vector<int> generators) {
  std::vector<bool> in(m.order(), false);
  in[0] = true;
  std::deque<int> work{0};
  for (int g : generators)
    if (!in[g]) {
      in[g] = true;
      work.push_back(g);
    }
  std::vector<int> members;
  for (int i = 0; i < m.order(); ++i)
    if (in[i]) members.push_back(i);
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) {
        int p = m.mul(members[i], members[j]);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
          grew = true;
        }
      }
  }
  std::sort(members.begin(), members.end());
  std::vector<int> index_of(m.order(), -1);
  for (size_t i = 0; i < members.size(); ++i) index_of[members[i]] = static_cast<int>(i);
  const int k = static_cast<int>(members.size());
  std::vector<int> table(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i * k + j] = index_of[m.mul(members[i], members[j])];
  FiniteMonoid sub = FiniteMonoid::validate(k, std::move(table));
  MonoidHom inc = MonoidHom::validate(sub, m, members);
  return Submonoid{m, members, std::move(sub), std::move(inc)};
}

Submonoid kernel(const MonoidHom& e) {
  std::vector<int> members;
  for (int g = 0; g < e.dom.order(); ++g)
    if (e.map[g] == 0) members.push_back(g);
  return submonoid_closure(e.dom, std::move(members));
}

bool is_cokernel(const MonoidHom& k, const MonoidHom& e) {
  if (k.cod != e.dom) throw Error("DomainMismatch", "cod(k) != dom(e)");
  if (!e.surjective()) return false;
  std::vector<std::pair<int, int>> seeds;
  for (int n = 0; n < k.dom.order(); ++n) seeds.emplace_back(k.map[n], 0);
  Congruence closure = congruence_closure(e.dom, seeds);
  return closure.class_of == kernel_pair(e).class_of;
}

namespace {

bool extend_isomorphism(const FiniteMonoid& m1, const FiniteMonoid& m2, int next,
                        std::vector<int>& map, std::vector<bool>& used) {
  const int n = m1.order();
  if (next == n) return true;
  for (int img = 1; img < n; ++img) {
    if (used[img]) continue;
    map[next] = img;
    used[img] = true;
    bool ok = true;
    // Check every product both of whose factors are already mapped.
    for (int a = 0; a <= next && ok; ++a)
      for (int b = 0; b <= next && ok; ++b) {
        int p = m1.mul(a, b);
        int q = m2.mul(map[a], map[b]);
        if (p <= next)
          ok = map[p] == q;
        else
          ok = std::find(map.begin(), map.begin() + next + 1, q) ==
               map.begin() + next + 1;
      }
    if (ok && extend_isomorphism(m1, m2, next + 1, map, used)) return true;
    used[img] = false;
  }
  map[next] = -1;
  return false;
}

}  // namespace

std::optional<MonoidHom> find_isomorphism(const FiniteMonoid& m1,
                                          const FiniteMonoid& m2) {
  if (m1.order() != m2.order()) return std::nullopt;
  const int n = m1.order();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  map[0] = 0;
  used[0] = true;
  if (!extend_isomorphism(m1, m2, 1, map, used)) return std::nullopt;
  return MonoidHom::validate(m1, m2, std::move(map));
}

namespace {

void extend_hom(const FiniteMonoid& dom, const FiniteMonoid& cod, int next,
                std::vector<int>& map, std::vector<MonoidHom>& out) {
  const int n = dom.order();
  if (next == n) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (map[dom.mul(a, b)] != cod.mul(map[a], map[b])) return;
    out.push_back(MonoidHom{dom, cod, map});
    return;
  }
  for (int img = 0; img < cod.order(); ++img) {
    map[next] = img;
    bool ok = true;
    for (int a = 0; a <= next && ok; ++a)
      for (int b = 0; b <= next && ok; ++b) {
        int p = dom.mul(a, b);
        if (p <= next) ok = map[p] == cod.mul(map[a], map[b]);
      }
    if (ok) extend_hom(dom, cod, next + 1, map, out);
  }
}

}  // namespace

std::vector<MonoidHom> all_homs(const FiniteMonoid& dom,
                                const FiniteMonoid& cod) {
  std::vector<MonoidHom> out;
  std::vector<int> map(dom.order(), 0);
  extend_hom(dom, cod, 1, map, out);
  return out;
}

FiniteMonoid trivial_monoid() { return FiniteMonoid::validate(1, {0}); }

FiniteMonoid cyclic_group(int n) {
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return FiniteMonoid::validate(n, std::move(table));
}

FiniteMonoid chain_semilattice(int n) {
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = std::max(a, b);
  return FiniteMonoid::validate(n, std::move(table));
}

FiniteMonoid diamond_lattice() {
  // 0 = top, 1 and 2 incomparable, 3 = bottom; mul = meet.
  auto meet = [](int a, int b) {
    if (a == b) return a;
    if (a == 0) return b;
    if (b == 0) return a;
    return 3;
  };
  std::vector<int> table(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a * 4 + b] = meet(a, b);
  return FiniteMonoid::validate(4, std::move(table));
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const int n = a.order() * b.order();
  std::vector<int> table(n * n);
  auto id = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          table[id(x1, y1) * n + id(x2, y2)] = id(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteMonoid::validate(n, std::move(table));
}

}  // namespace wschreier
