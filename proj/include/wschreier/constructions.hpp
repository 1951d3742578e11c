#ifndef WSCHREIER_CONSTRUCTIONS_HPP
#define WSCHREIER_CONSTRUCTIONS_HPP

#include <vector>

#include "wschreier/quotient_action.hpp"

namespace wschreier {

/// H split into its submonoid of right-invertible elements and the
/// complementary right ideal.
struct RightInvertibleDecomposition {
  FiniteMonoid H;
  Submonoid L;                  // right-invertible elements
  std::vector<int> complement;  // sorted; a right ideal of H

  bool complement_two_sided() const;
};

RightInvertibleDecomposition right_invertible_submonoid(const FiniteMonoid& h);

/// Fiber over h discrete when h is right invertible, lumped otherwise.
AdmissibleQuotient coarse_quotient(const FiniteMonoid& n, const FiniteMonoid& h);

/// The compatibility criterion for the coarse quotient: the complement of
/// L(H) must be a two-sided ideal and alpha restricted to L(H) x N must
/// satisfy the action laws of L(H) on N. Agrees with
/// is_action(coarse_quotient(N,H), alpha).
bool coarse_action_compatible(const FiniteMonoid& n, const FiniteMonoid& h,
                              const PreAction& alpha);

/// The action laws of alpha restricted to L(H) x N, on the nose.
bool restriction_is_action(const FiniteMonoid& n, const FiniteMonoid& h,
                           const RightInvertibleDecomposition& dec,
                           const PreAction& alpha);

/// For commutative N and a hom f: H -> N, the quotient relating (n,h) and
/// (n',h) when n.f(h) = n'.f(h), with the trivial action class.
/// Throws NotCommutative.
std::pair<AdmissibleQuotient, ActionClass> glueing_quotient(const MonoidHom& f);

/// The glueing Gl(f) of a meet-semilattice N along f: H -> N: pairs (n,h)
/// with n <= f(h), componentwise meet in N, as a split extension.
/// Throws NotSemilattice.
SplitExtension semilattice_glueing(const MonoidHom& f);

/// The monoid on N + (H - {1}) with n.h = h = h.n, as a split extension.
/// Requires H to have no right-invertible element besides the identity;
/// throws HHasRightInvertibles.
SplitExtension disjoint_union_extension(const FiniteMonoid& n,
                                        const FiniteMonoid& h);

/// Fibers over the prime ideal Y lumped, discrete elsewhere. Throws
/// NotAnIdeal, ComplementNotSubmonoid or IdealContainsRightInvertible.
AdmissibleQuotient prime_ideal_quotient(const FiniteMonoid& n,
                                        const FiniteMonoid& h,
                                        std::vector<int> ideal);

/// The monoid of dim x dim matrices over F_p with the conjugation
/// pre-action alpha(B,A) = B A B^-1 for invertible B, alpha(B,A) = A
/// otherwise. Elements are numbered with the identity matrix first, then
/// by row-major entry tuples. Throws UnsupportedField.
struct MatrixMonoidExample {
  FiniteMonoid monoid;
  PreAction conjugation;        // indexed [B][A]
  std::vector<int> invertible;  // sorted element ids with two-sided inverses
};

MatrixMonoidExample matrix_monoid(int dim, int field_size);

}  // namespace wschreier

#endif
