#ifndef WSCHREIER_MONOID_HPP
#define WSCHREIER_MONOID_HPP

#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "wschreier/error.hpp"

namespace wschreier {

/// A finite monoid given by its Cayley table. The identity is always
/// element 0; constructors and the file reader renumber to enforce this.
class FiniteMonoid {
public:
  /// Default-constructs the trivial monoid.
  FiniteMonoid() = default;

  /// Checks the identity law and associativity, throwing
  /// IdentityViolation(a) or AssociativityViolation(a,b,c) with the
  /// witnessing elements.
  static FiniteMonoid validate(int order, std::vector<int> table);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  const std::vector<int>& table() const { return table_; }

  bool commutative() const;
  bool idempotent() const;   // n*n = n for all n
  bool is_group() const;     // every element has a two-sided inverse

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;
  friend auto operator<=>(const FiniteMonoid& a, const FiniteMonoid& b) {
    return std::tie(a.order_, a.table_) <=> std::tie(b.order_, b.table_);
  }

private:
  FiniteMonoid(int order, std::vector<int> table)
      : order_(order), table_(std::move(table)) {}
  int order_ = 1;
  std::vector<int> table_{0};
};

/// A monoid homomorphism with its (validated) endpoints.
struct MonoidHom {
  FiniteMonoid dom;
  FiniteMonoid cod;
  std::vector<int> map;

  /// Throws IdentityNotPreserved or MultiplicationNotPreserved(a,b).
  static MonoidHom validate(FiniteMonoid dom, FiniteMonoid cod,
                            std::vector<int> map);

  int operator()(int a) const { return map[a]; }
  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  friend bool operator==(const MonoidHom&, const MonoidHom&) = default;
};

MonoidHom identity_hom(const FiniteMonoid& m);
MonoidHom zero_hom(const FiniteMonoid& dom, const FiniteMonoid& cod);
/// g after f; throws DomainMismatch if cod(f) != dom(g).
MonoidHom compose(const MonoidHom& g, const MonoidHom& f);

/// A congruence on a monoid, classes numbered by first occurrence.
struct Congruence {
  FiniteMonoid monoid;
  std::vector<int> class_of;
  int num_classes = 0;

  bool compatible() const;  // the congruence invariant
};

/// Canonically renumbers an arbitrary class assignment by first occurrence.
std::vector<int> canonicalize_classes(std::span<const int> classes,
                                      int* num_classes = nullptr);

/// Smallest congruence containing the seed pairs (union-find + worklist
/// propagation through left and right translations).
Congruence congruence_closure(const FiniteMonoid& m,
                              std::span<const std::pair<int, int>> seeds);

/// Kernel-pair congruence of a hom: a ~ b iff f(a) = f(b).
Congruence kernel_pair(const MonoidHom& f);

/// Quotient monoid on the classes, with the projection hom.
std::pair<FiniteMonoid, MonoidHom> quotient_monoid(const FiniteMonoid& m,
                                                   const Congruence& c);

/// A submonoid, listed as a sorted member set containing 0, plus the
/// renumbered monoid it carries and the inclusion hom.
struct Submonoid {
  FiniteMonoid ambient;
  std::vector<int> members;  // sorted, members[0] == 0
  FiniteMonoid monoid;       // table on the members
  MonoidHom inclusion;
};

/// Submonoid generated by closing the given set under the table.
Submonoid submonoid_closure(const FiniteMonoid& m, std::vector<int> generators);

/// The categorical kernel of e in the pointed category of monoids:
/// the submonoid {g : e(g) = 1} with its inclusion.
Submonoid kernel(const MonoidHom& e);

/// True iff e is the cokernel of k: e surjective and the kernel pair of e
/// equals the congruence closure of {(k(n), 1)}. Throws DomainMismatch.
bool is_cokernel(const MonoidHom& k, const MonoidHom& e);

/// First table isomorphism in lexicographic order, if any.
std::optional<MonoidHom> find_isomorphism(const FiniteMonoid& m1,
                                          const FiniteMonoid& m2);

/// All homs dom -> cod, in lexicographic order of the underlying maps.
std::vector<MonoidHom> all_homs(const FiniteMonoid& dom,
                                const FiniteMonoid& cod);

// Small stock monoids used throughout.
FiniteMonoid trivial_monoid();
FiniteMonoid cyclic_group(int n);
/// Meet-semilattice chain of n elements: 0 = top = identity, mul = max.
FiniteMonoid chain_semilattice(int n);
/// Four-element diamond lattice as a meet monoid: 0 = top, 3 = bottom.
FiniteMonoid diamond_lattice();
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

}  // namespace wschreier

#endif
