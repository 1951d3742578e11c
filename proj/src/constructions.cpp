#include "wschreier/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace wschreier {

bool RightInvertibleDecomposition::complement_two_sided() const {
  std::vector<bool> in(H.order(), false);
  for (int y : complement) in[y] = true;
  for (int y : complement)
    for (int x = 0; x < H.order(); ++x)
      if (!in[H.mul(x, y)]) return false;
  return true;
}

RightInvertibleDecomposition right_invertible_submonoid(const FiniteMonoid& h) {
  std::vector<int> members, complement;
  for (int x = 0; x < h.order(); ++x) {
    bool rinv = false;
    for (int y = 0; y < h.order() && !rinv; ++y) rinv = h.mul(x, y) == 0;
    (rinv ? members : complement).push_back(x);
  }
  Submonoid l = submonoid_closure(h, members);
  if (l.members != members)
    throw Error("InternalError", "right invertibles not closed");
  // Complement is a right ideal: y not right invertible forces y.x not.
  std::vector<bool> in(h.order(), false);
  for (int y : complement) in[y] = true;
  for (int y : complement)
    for (int x = 0; x < h.order(); ++x)
      if (!in[h.mul(y, x)])
        throw Error("InternalError", "complement not a right ideal");
  return RightInvertibleDecomposition{h, std::move(l), std::move(complement)};
}

namespace {

AdmissibleQuotient lump_over(const FiniteMonoid& n, const FiniteMonoid& h,
                             const std::vector<bool>& lumped) {
  std::vector<std::vector<int>> fibers(h.order(), std::vector<int>(n.order()));
  for (int x = 0; x < h.order(); ++x)
    for (int m = 0; m < n.order(); ++m) fibers[x][m] = lumped[x] ? 0 : m;
  if (auto r = is_admissible(n, h, fibers); !r)
    throw Error("InternalError", "quotient not admissible: " + r.violation);
  return AdmissibleQuotient::from_fibers(n, h, std::move(fibers));
}

}  // namespace

AdmissibleQuotient coarse_quotient(const FiniteMonoid& n,
                                   const FiniteMonoid& h) {
  auto dec = right_invertible_submonoid(h);
  std::vector<bool> lumped(h.order(), false);
  for (int y : dec.complement) lumped[y] = true;
  return lump_over(n, h, lumped);
}

bool restriction_is_action(const FiniteMonoid& n, const FiniteMonoid& h,
                           const RightInvertibleDecomposition& dec,
                           const PreAction& alpha) {
  const auto& a = alpha.alpha;
  const auto& l = dec.L.members;
  for (int m = 0; m < n.order(); ++m)
    if (a[0][m] != m) return false;
  for (int x : l) {
    if (a[x][0] != 0) return false;
    for (int m1 = 0; m1 < n.order(); ++m1)
      for (int m2 = 0; m2 < n.order(); ++m2)
        if (a[x][n.mul(m1, m2)] != n.mul(a[x][m1], a[x][m2])) return false;
  }
  for (int x : l)
    for (int xp : l) {
      int xxp = h.mul(x, xp);
      for (int m = 0; m < n.order(); ++m)
        if (a[xxp][m] != a[x][a[xp][m]]) return false;
    }
  return true;
}

bool coarse_action_compatible(const FiniteMonoid& n, const FiniteMonoid& h,
                              const PreAction& alpha) {
  if (n.order() == 1) return true;
  auto dec = right_invertible_submonoid(h);
  if (!dec.complement_two_sided()) return false;
  return restriction_is_action(n, h, dec, alpha);
}

std::pair<AdmissibleQuotient, ActionClass> glueing_quotient(const MonoidHom& f) {
  const FiniteMonoid& h = f.dom;
  const FiniteMonoid& n = f.cod;
  if (!n.commutative()) throw Error("NotCommutative", "N must be commutative");
  std::vector<std::vector<int>> fibers(h.order(), std::vector<int>(n.order()));
  for (int x = 0; x < h.order(); ++x)
    for (int m = 0; m < n.order(); ++m) fibers[x][m] = n.mul(m, f.map[x]);
  if (auto r = is_admissible(n, h, fibers); !r)
    throw Error("InternalError", "glueing quotient not admissible: " + r.violation);
  AdmissibleQuotient q = AdmissibleQuotient::from_fibers(n, h, std::move(fibers));
  PreAction triv = trivial_preaction(n, h);
  if (auto r = is_action(q, triv); !r)
    throw Error("InternalError", "trivial action rejected: " + r.violation);
  ActionClass ac = class_table_of(q, triv);
  return {std::move(q), std::move(ac)};
}

SplitExtension semilattice_glueing(const MonoidHom& f) {
  const FiniteMonoid& h = f.dom;
  const FiniteMonoid& n = f.cod;
  if (!n.commutative() || !n.idempotent())
    throw Error("NotSemilattice", "N must be a commutative idempotent monoid");
  // Pairs (m, x) with m <= f(x), lex order; (top, 1) = (0, 0) comes first.
  std::vector<std::pair<int, int>> pairs;
  for (int m = 0; m < n.order(); ++m)
    for (int x = 0; x < h.order(); ++x)
      if (n.mul(m, f.map[x]) == m) pairs.emplace_back(m, x);
  std::map<std::pair<int, int>, int> index;
  for (size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<int>(i);
  const int g = static_cast<int>(pairs.size());
  std::vector<int> table(g * g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      auto [m1, x1] = pairs[i];
      auto [m2, x2] = pairs[j];
      table[i * g + j] = index.at({n.mul(m1, m2), h.mul(x1, x2)});
    }
  FiniteMonoid gl = FiniteMonoid::validate(g, std::move(table));
  std::vector<int> kmap(n.order()), emap(g), smap(h.order());
  for (int m = 0; m < n.order(); ++m) kmap[m] = index.at({m, 0});
  for (int i = 0; i < g; ++i) emap[i] = pairs[i].second;
  for (int x = 0; x < h.order(); ++x) smap[x] = index.at({f.map[x], x});
  return SplitExtension::validate(
      n, gl, h, MonoidHom::validate(n, gl, std::move(kmap)),
      MonoidHom::validate(gl, h, std::move(emap)),
      MonoidHom::validate(h, gl, std::move(smap)));
}

SplitExtension disjoint_union_extension(const FiniteMonoid& n,
                                        const FiniteMonoid& h) {
  auto dec = right_invertible_submonoid(h);
  if (dec.L.members.size() != 1)
    throw Error("HHasRightInvertibles",
                "H has a right-invertible element besides the identity");
  const int no = n.order();
  const int g = no + h.order() - 1;
  auto hslot = [&](int x) { return no - 1 + x; };  // x >= 1
  std::vector<int> table(g * g);
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      bool an = a < no, bn = b < no;
      if (an && bn)
        table[a * g + b] = n.mul(a, b);
      else if (!an && !bn)
        table[a * g + b] = hslot(h.mul(a - no + 1, b - no + 1));
      else
        table[a * g + b] = an ? b : a;  // n.h = h = h.n
    }
  FiniteMonoid gm = FiniteMonoid::validate(g, std::move(table));
  std::vector<int> kmap(no), emap(g), smap(h.order());
  for (int a = 0; a < no; ++a) kmap[a] = a;
  for (int a = 0; a < g; ++a) emap[a] = a < no ? 0 : a - no + 1;
  smap[0] = 0;
  for (int x = 1; x < h.order(); ++x) smap[x] = hslot(x);
  return SplitExtension::validate(
      n, gm, h, MonoidHom::validate(n, gm, std::move(kmap)),
      MonoidHom::validate(gm, h, std::move(emap)),
      MonoidHom::validate(h, gm, std::move(smap)));
}

AdmissibleQuotient prime_ideal_quotient(const FiniteMonoid& n,
                                        const FiniteMonoid& h,
                                        std::vector<int> ideal) {
  std::sort(ideal.begin(), ideal.end());
  std::vector<bool> in(h.order(), false);
  for (int y : ideal) {
    if (y < 0 || y >= h.order())
      throw Error("NotAnIdeal", "element " + std::to_string(y) + " not in H");
    in[y] = true;
  }
  for (int y : ideal)
    for (int x = 0; x < h.order(); ++x)
      if (!in[h.mul(x, y)] || !in[h.mul(y, x)])
        throw Error("NotAnIdeal", "not two-sided at (" + std::to_string(x) +
                                      ", " + std::to_string(y) + ")");
  std::vector<int> comp;
  for (int x = 0; x < h.order(); ++x)
    if (!in[x]) comp.push_back(x);
  if (comp.empty() || comp[0] != 0)
    throw Error("ComplementNotSubmonoid", "complement misses the identity");
  for (int x : comp)
    for (int y : comp)
      if (in[h.mul(x, y)])
        throw Error("ComplementNotSubmonoid",
                    "complement not closed at (" + std::to_string(x) + ", " +
                        std::to_string(y) + ")");
  auto dec = right_invertible_submonoid(h);
  for (int y : ideal)
    if (std::binary_search(dec.L.members.begin(), dec.L.members.end(), y))
      throw Error("IdealContainsRightInvertible", std::to_string(y));
  return lump_over(n, h, in);
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

MatrixMonoidExample matrix_monoid(int dim, int field_size) {
  if (!is_prime(field_size))
    throw Error("UnsupportedField",
                "field size must be prime, got " + std::to_string(field_size));
  if (dim < 1) throw Error("UnsupportedField", "dim must be positive");
  long long order = 1;
  for (int i = 0; i < dim * dim; ++i) {
    order *= field_size;
    if (order > 4096)
      throw Error("BoundExceeded", "matrix monoid order exceeds 4096");
  }
  const int n = static_cast<int>(order);
  const int cells = dim * dim;
  // code -> matrix entries, row-major base-p digits.
  auto decode = [&](int code) {
    std::vector<int> m(cells);
    for (int i = cells - 1; i >= 0; --i) {
      m[i] = code % field_size;
      code /= field_size;
    }
    return m;
  };
  auto encode = [&](const std::vector<int>& m) {
    int code = 0;
    for (int v : m) code = code * field_size + v;
    return code;
  };
  std::vector<int> identity(cells, 0);
  for (int i = 0; i < dim; ++i) identity[i * dim + i] = 1;
  const int id_code = encode(identity);
  // Identity first, then remaining codes in increasing order.
  std::vector<int> code_of(n);
  std::vector<int> index_of(n);
  code_of[0] = id_code;
  int next = 1;
  for (int c = 0; c < n; ++c)
    if (c != id_code) code_of[next++] = c;
  for (int i = 0; i < n; ++i) index_of[code_of[i]] = i;

  auto matmul = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(cells, 0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        int acc = 0;
        for (int k = 0; k < dim; ++k) acc += a[i * dim + k] * b[k * dim + j];
        out[i * dim + j] = acc % field_size;
      }
    return out;
  };
  std::vector<std::vector<int>> mats(n);
  for (int i = 0; i < n; ++i) mats[i] = decode(code_of[i]);
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = index_of[encode(matmul(mats[a], mats[b]))];
  FiniteMonoid m = FiniteMonoid::validate(n, std::move(table));

  // Two-sided inverses by table scan; in a matrix monoid these are exactly
  // the right invertibles.
  std::vector<int> inverse(n, -1);
  std::vector<int> invertible;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.mul(a, b) == 0 && m.mul(b, a) == 0) {
        inverse[a] = b;
        invertible.push_back(a);
        break;
      }
  PreAction conj;
  conj.alpha.assign(n, std::vector<int>(n));
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      conj.alpha[b][a] =
          inverse[b] < 0 ? a : m.mul(m.mul(b, a), inverse[b]);
  return MatrixMonoidExample{std::move(m), std::move(conj), std::move(invertible)};
}

}  // namespace wschreier
