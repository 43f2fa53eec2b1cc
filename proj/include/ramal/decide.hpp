#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramal/algebra.hpp"
#include "ramal/term.hpp"

namespace ramal {

/// Why generator `generator` passes: `term` applied to a constant block of
/// copies of it evaluates to the idempotent.
struct GeneratorCertificate {
  int generator = 0;
  int idempotent = 0;
  OrderlyTerm term;
};

struct FiniteVerdict {
  bool ramsey = false;
  int culprit = -1;  // smallest failing generator when not ramsey
  std::vector<GeneratorCertificate> reach;
};

/// Ramsey iff every generated subuniverse meets the idempotents.
FiniteVerdict decide_finite_ramsey(const FiniteAlgebra& alg);

/// Smallest idempotent reachable from `a` by term application, with a term
/// witnessing it, or nullopt.
std::optional<std::pair<int, OrderlyTerm>> reachable_idempotent(
    const FiniteAlgebra& alg, int a);

struct CrosscheckReport {
  bool via_generated = false;    // generated subuniverses meet idempotents
  bool via_degenerate = false;   // every generator reaches a verified
                                 // idempotent, collapsing the constant
                                 // sequence to a constant one
  bool via_subalgebras = false;  // every subuniverse contains an idempotent
  bool ramsey = false;
  struct Probe {
    int generator = 0;
    bool found = false;
  };
  std::vector<Probe> probes;  // bounded homogeneous searches, evidence only
};

/// Decides the three exactly-checkable routes independently and raises
/// EquivalenceViolation if they disagree; optionally runs per-generator
/// bounded homogeneous-search probes on constant prefixes (a hit is sound
/// evidence, a miss proves nothing).
CrosscheckReport crosscheck_finite_theorem(const FiniteAlgebra& alg,
                                           int cap = 6,
                                           bool with_probes = true);

/// Total map from carrier elements to parts 1..3. Parts may be empty.
struct Partition3 {
  std::vector<int> part;
};

/// Whether part(x) != part(T(x)) for every x.
bool partition_separates(const Partition3& p, const std::vector<int>& T);

/// 3-partition with part(x) != part(T(x)) everywhere, for a fixed-point-free
/// unary table T on {0..n-1}. Even cycles alternate two parts, odd cycles
/// spend the third part on one node, tree nodes alternate off their
/// attachment.
Partition3 katetov_partition(int n, const std::vector<int>& T);

/// Elements fixed by every listed operation (which must all be unary).
ElementSet fixed_by_all(const FiniteAlgebra& alg,
                        const std::vector<int>& op_indices);

/// Partition of the carrier such that every element moved by some listed
/// unary op has that op's image in a different part. Built by adjoining a
/// fresh point alpha, mapping fixed elements to alpha, alpha to element 0,
/// and moved elements through their first moving op, then partitioning.
Partition3 build_discriminating_partition(const FiniteAlgebra& alg,
                                          const std::vector<int>& op_indices);

struct UnaryVerdict {
  bool ramsey = false;
  int culprit = -1;  // smallest element that never reaches s
  ElementSet s;      // elements fixed by every operation
  // per element, op indices applied left to right to land in s
  std::vector<std::vector<int>> words;
};

/// Ramsey iff every element reaches the all-ops fixed-point set. All
/// operations must be unary.
UnaryVerdict decide_unary_finite(const FiniteAlgebra& alg);

/// Unary shift system on the nonnegative integers: op i sends x in residue
/// class r (mod modulus) to x + shifts[i][r].
struct ResidueUnarySystem {
  int modulus = 1;
  std::vector<std::vector<long long>> shifts;

  bool operator==(const ResidueUnarySystem& other) const = default;
};

/// Checks modulus >= 1, at least one op, shift rows of length modulus, and
/// r + shifts[i][r] >= 0 so class members stay nonnegative.
void validate_residue(const ResidueUnarySystem& sys);

struct ResidueVerdict {
  bool ramsey = false;
  int culprit_class = -1;
  std::vector<int> s_classes;  // classes where every op shifts by 0
  // per class, op indices leading into an s-class
  std::vector<std::vector<int>> words;
};

/// Ramsey iff every residue class reaches a class all of whose shifts are
/// zero. Classes are sound proxies for their members: the fixed set is a
/// union of full classes and shifts act classwise.
ResidueVerdict decide_unary_residue(const ResidueUnarySystem& sys);

}  // namespace ramal
