#ifndef WSCHREIER_WACT_HPP
#define WSCHREIER_WACT_HPP

#include <optional>
#include <vector>

#include "wschreier/quotient_action.hpp"

namespace wschreier {

/// An object of the preorder WAct(H,N): an admissible quotient together
/// with an equivalence class of compatible actions.
struct WActObject {
  AdmissibleQuotient quotient;
  ActionClass action;

  friend bool operator==(const WActObject& a, const WActObject& b) {
    return a.quotient == b.quotient && a.action == b.action;
  }
};

/// (Q,[a]) <= (Q',[a']): Q refines Q' fiber-wise and the two action
/// classes agree through Q'. Throws SignatureMismatch if N or H differ.
bool wact_leq(const WActObject& a, const WActObject& b);

/// Sends a weakly Schreier extension to (E(e,s), [q(s(h)k(n))]). The class
/// table is independent of the retraction; this is re-verified on every
/// call by scanning the full witness sets. Throws NotWeaklySchreier.
WActObject functor_T(const SplitExtension& ext);

/// The weak semidirect product of the pair.
SplitExtension functor_S(const WActObject& obj);

/// A morphism of split extensions; acts as [n,h] |-> [n,h] on classes.
struct ExtensionMorphism {
  SplitExtension source;
  SplitExtension target;
  MonoidHom map;  // G1 -> G2
};

/// The unique morphism ext1 -> ext2 when T(ext1) <= T(ext2), else absent.
std::optional<ExtensionMorphism> morphism_exists(const SplitExtension& ext1,
                                                 const SplitExtension& ext2);

/// Mutual <= of the T-images.
bool extensions_isomorphic(const SplitExtension& ext1,
                           const SplitExtension& ext2);

/// Exhaustive search for monoid maps G1 -> G2 commuting with the three
/// squares. Test hook for morphism rigidity; independent of functor_T.
std::vector<MonoidHom> search_square_commuting_homs(const SplitExtension& ext1,
                                                    const SplitExtension& ext2);

struct Classification {
  std::vector<WActObject> objects;         // canonical order
  std::vector<std::vector<bool>> leq;      // leq[i][j] = objects[i] <= objects[j]
};

/// All weakly Schreier extensions of H by N up to isomorphism, as WAct
/// objects with the <= matrix. Throws BoundExceeded.
Classification classify_extensions(const FiniteMonoid& N, const FiniteMonoid& H,
                                   const EnumerationBounds& bounds = {},
                                   int threads = 1);

/// All monoids of the given order up to isomorphism (identity fixed at 0),
/// by orderly generation with canonical tables. Capped at order 6.
std::vector<FiniteMonoid> enumerate_monoids(int order);

/// Independent oracle: enumerates every monoid G of order <= |N|*|H| up to
/// isomorphism, every hom triple (k,e,s), filters the split-extension
/// axioms plus the weakly Schreier condition, and deduplicates by
/// extensions_isomorphic. Throws BoundExceeded if |N|*|H| or max_order is
/// out of the order-6 range.
std::vector<SplitExtension> brute_force_classify(const FiniteMonoid& N,
                                                 const FiniteMonoid& H,
                                                 int max_order, int threads = 1);

}  // namespace wschreier

#endif
