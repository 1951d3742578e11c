#ifndef WSCHREIER_QUOTIENT_ACTION_HPP
#define WSCHREIER_QUOTIENT_ACTION_HPP

#include <string>
#include <vector>

#include "wschreier/split_ext.hpp"

namespace wschreier {

/// A fiber-wise partition of N x H: for each h, a class-id array over N,
/// classes numbered by first occurrence. Admissibility means the fiber
/// over 1 is discrete, classes never cross fibers (structural here), and
/// the partition is stable under left multiplication in N and right
/// translation in H.
struct AdmissibleQuotient {
  FiniteMonoid N, H;
  std::vector<std::vector<int>> fibers;     // fibers[h][n] = class id in fiber h
  std::vector<int> fiber_classes;           // class count per fiber
  std::vector<std::vector<int>> fiber_reps; // least n per class per fiber
  std::vector<int> offsets;                 // global id = offsets[h] + class

  /// Builds the derived tables; the partition must already be canonical.
  static AdmissibleQuotient from_fibers(FiniteMonoid N, FiniteMonoid H,
                                        std::vector<std::vector<int>> fibers);

  int total_classes() const { return offsets.back(); }
  int global_id(int h, int c) const { return offsets[h] + c; }
  int rep(int h, int c) const { return fiber_reps[h][c]; }

  // Bi-module star actions on classes; well-defined by admissibility.
  int star_left(int n, int h, int c) const {
    return fibers[h][N.mul(n, rep(h, c))];
  }
  int star_right(int h, int c, int hp) const {
    return fibers[H.mul(h, hp)][rep(h, c)];
  }

  bool related(int n1, int n2, int h) const {
    return fibers[h][n1] == fibers[h][n2];
  }

  friend bool operator==(const AdmissibleQuotient& a,
                         const AdmissibleQuotient& b) {
    return a.N == b.N && a.H == b.H && a.fibers == b.fibers;
  }
};

struct CheckResult {
  bool ok = true;
  std::string violation;  // names the violated condition and witnesses
  explicit operator bool() const { return ok; }
};

/// The four admissibility conditions, with a witness on failure.
CheckResult is_admissible(const FiniteMonoid& N, const FiniteMonoid& H,
                          const std::vector<std::vector<int>>& fibers);

struct EnumerationBounds {
  int max_quotient_cells = 36;  // |N| * |H| for quotient enumeration
  int max_action_cells = 16;    // |N| * |H| for exhaustive action search
};

/// All admissible quotients of N x H in canonical (lexicographic) order.
/// Throws BoundExceeded.
std::vector<AdmissibleQuotient> enumerate_admissible_quotients(
    const FiniteMonoid& N, const FiniteMonoid& H,
    const EnumerationBounds& bounds = {});

/// A raw map H x N -> N, no laws assumed.
struct PreAction {
  std::vector<std::vector<int>> alpha;  // alpha[h][n] in N
};

PreAction trivial_preaction(const FiniteMonoid& N, const FiniteMonoid& H);

/// The six action conditions of an action with respect to Q, witnessed.
CheckResult is_action(const AdmissibleQuotient& q, const PreAction& alpha);

/// An equivalence class of actions, stored as the class-valued table
/// cv[h][n] = [alpha(h,n), h] (a class id in the fiber over h).
struct ActionClass {
  AdmissibleQuotient quotient;
  std::vector<std::vector<int>> class_valued;

  /// The canonical representative pre-action alpha(h,n) = rep(cv[h][n]).
  PreAction representative() const;

  friend bool operator==(const ActionClass& a, const ActionClass& b) {
    return a.quotient == b.quotient && a.class_valued == b.class_valued;
  }
};

/// Class table of a pre-action (no laws checked).
ActionClass class_table_of(const AdmissibleQuotient& q, const PreAction& alpha);

/// The six conditions evaluated purely on a class-valued table.
CheckResult check_class_table(const AdmissibleQuotient& q,
                              const std::vector<std::vector<int>>& cv);

/// All of Act_Q/~ as class tables, canonical order. Throws BoundExceeded.
std::vector<ActionClass> enumerate_action_classes(
    const AdmissibleQuotient& q, const EnumerationBounds& bounds = {});

/// True iff the two actions have equal class tables. Throws NotAnAction.
bool actions_equivalent(const AdmissibleQuotient& q, const PreAction& a,
                        const PreAction& b);

/// The weak semidirect product Q_alpha as a split extension of H by N:
/// elements are the classes of Q (global ids), [n,h][n',h'] =
/// n * [alpha(h,n'),h] * h', k(n) = [n,1], e([n,h]) = h, s(h) = [1,h].
/// Throws NotAnAction.
SplitExtension weak_semidirect_product(const AdmissibleQuotient& q,
                                       const ActionClass& action);

}  // namespace wschreier

#endif
