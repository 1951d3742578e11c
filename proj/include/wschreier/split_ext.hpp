#ifndef WSCHREIER_SPLIT_EXT_HPP
#define WSCHREIER_SPLIT_EXT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wschreier/monoid.hpp"

namespace wschreier {

/// A split extension N >--k--> G --e--> H with section s: e's kernel is the
/// image of k, e is the cokernel of k, and e . s = id_H.
struct SplitExtension {
  FiniteMonoid N, G, H;
  MonoidHom k, e, s;

  /// Throws KernelMismatch, CokernelMismatch or SectionNotSplitting,
  /// each naming a witness element.
  static SplitExtension validate(FiniteMonoid N, FiniteMonoid G, FiniteMonoid H,
                                 MonoidHom k, MonoidHom e, MonoidHom s);

  friend bool operator==(const SplitExtension&, const SplitExtension&) = default;
};

/// The direct product extension N x H with the injections and projections.
SplitExtension product_extension(const FiniteMonoid& n, const FiniteMonoid& h);

/// Result of the weakly Schreier test: for each g the set of n with
/// g = k(n) . s(e(g)). Weakly Schreier iff every witness set is nonempty.
struct WeaklySchreierWitness {
  bool weakly_schreier = false;
  std::vector<std::vector<int>> witnesses;  // indexed by g, sorted
};

WeaklySchreierWitness is_weakly_schreier(const SplitExtension& ext);

/// A set-theoretic map q: G -> N with g = k(q(g)) . s(e(g)) for all g.
struct SchreierRetraction {
  std::vector<int> q;
};

inline constexpr std::uint64_t kDefaultRetractionCap = 1'000'000;

/// Number of retractions (product of witness-set sizes), saturating at cap+1.
std::uint64_t count_schreier_retractions(const SplitExtension& ext,
                                         std::uint64_t cap = kDefaultRetractionCap);

/// All choice functions through the witness sets, lexicographic order.
/// Throws NotWeaklySchreier, or BoundExceeded past the cap.
std::vector<SchreierRetraction> enumerate_schreier_retractions(
    const SplitExtension& ext, std::uint64_t cap = kDefaultRetractionCap);

/// Stateless cursor over retractions, for consumers that need only a prefix.
class RetractionCursor {
public:
  explicit RetractionCursor(const SplitExtension& ext);
  std::optional<SchreierRetraction> next();

private:
  std::vector<std::vector<int>> witnesses_;
  std::vector<size_t> index_;
  bool done_ = false;
};

/// Verifies q k = 1_N, q(1) = 1 and k(q(s(h)k(n))) . s(h) = s(h) k(n).
bool check_retraction_properties(const SplitExtension& ext,
                                 const SchreierRetraction& q);

/// The equivalence on N x H identifying pairs with equal image under
/// (n,h) |-> k(n) . s(h). Pairs are indexed n * |H| + h; classes are
/// numbered by first occurrence in that scan, so class 0 holds (1,1).
struct CanonicalQuotient {
  int n_order = 0, h_order = 0;
  std::vector<int> class_of;               // size |N| * |H|
  int num_classes = 0;
  std::vector<std::pair<int, int>> reps;   // lex-least (n,h) per class
  std::vector<int> image;                  // element of G per class

  int pair_class(int n, int h) const { return class_of[n * h_order + h]; }
  bool discrete() const { return num_classes == n_order * h_order; }
};

/// Throws NotWeaklySchreier.
CanonicalQuotient canonical_quotient(const SplitExtension& ext);

/// Weakly Schreier with a discrete canonical quotient.
bool is_schreier(const SplitExtension& ext);

/// The monoid on the classes of E(e,s), the isomorphism onto G, and the
/// transported extension k'(n) = [n,1], e'([n,h]) = h, s'(h) = [1,h].
struct WeakSemidirectPresentation {
  FiniteMonoid class_monoid;
  MonoidHom iso;  // class_monoid -> G
  SplitExtension extension;
};

/// Throws NotWeaklySchreier.
WeakSemidirectPresentation weak_semidirect_presentation(const SplitExtension& ext);

}  // namespace wschreier

#endif
