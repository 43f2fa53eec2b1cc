#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ramal/bigint.hpp"
#include "ramal/reduction.hpp"
#include "ramal/term.hpp"

namespace ramal {

/// Strictly increasing sequence of variable indices >= 1, never empty;
/// stands for the product of those variables.
using Monomial = std::vector<int>;

/// Length first, then lexicographic.
bool monomial_less(const Monomial& a, const Monomial& b);

/// A finite set of monomials kept sorted by monomial_less; the empty set is
/// the zero polynomial. Equality is set equality.
class MonotonePolynomial {
 public:
  MonotonePolynomial() = default;
  explicit MonotonePolynomial(std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  int monomial_count() const { return static_cast<int>(monomials_.size()); }
  int total_length() const;
  int max_index() const;  // 0 when zero
  int min_index() const;  // 0 when zero
  bool contains(const Monomial& m) const;

  bool operator==(const MonotonePolynomial& other) const = default;

 private:
  std::vector<Monomial> monomials_;
};

/// Disjoint union. The summands may not share a monomial.
MonotonePolynomial mp_add(const MonotonePolynomial& m1,
                          const MonotonePolynomial& m2);

/// Pairwise concatenation. Every index of m1 must lie below every index of
/// m2 (zero factors short-circuit to zero).
MonotonePolynomial mp_mul(const MonotonePolynomial& m1,
                          const MonotonePolynomial& m2);

/// The polynomial computed by a term over {add/2, mul/2} whose leaves are
/// the variables start, start+1, ... left to right. Op 0 is add, op 1 mul.
MonotonePolynomial translate_term_to_poly(const OrderlyTerm& t,
                                          int start = 1);

/// Renames index j to new_indices[j-1]; the replacement list must be
/// strictly increasing and cover max_index entries.
MonotonePolynomial reindex_poly(const MonotonePolynomial& p,
                                std::span<const int> new_indices);

/// Variables are 1-indexed into args.
BigInt evaluate_poly(const MonotonePolynomial& p,
                     std::span<const BigInt> args);

/// M sliced at a designated top index: monomials avoiding it, the cofactors
/// of those ending in it, and whether the bare singleton is present.
struct SplitDecomposition {
  int top = 0;
  MonotonePolynomial without_top;    // monomials not containing top
  MonotonePolynomial top_cofactors;  // alpha with alpha*<top> in M, alpha nonempty
  bool has_singleton = false;        // <top> in M
};

/// Requires max_index(m) <= top.
SplitDecomposition split_at_top(const MonotonePolynomial& m, int top);

MonotonePolynomial reassemble(const SplitDecomposition& d);

/// The unique integer b (if any) making M and N collide up to epsilon when
/// the variables read prefix followed by b: solves
/// (sigma_M'' - sigma_N'' + delta) * b = (sigma_N' - sigma_M') + epsilon,
/// delta in {-1,0,1} from the singleton flags. Requires M != N over indices
/// <= prefix.size()+1 and epsilon in {0,1}.
std::optional<BigInt> solve_forbidden_b(const MonotonePolynomial& M,
                                        const MonotonePolynomial& N,
                                        std::span<const BigInt> prefix,
                                        int epsilon);

enum class WitnessMode { Greedy, Powers };

/// Integers on which all monotone polynomials over the covered indices take
/// pairwise distinct values, never differing by exactly 1.
struct WitnessSequence {
  std::vector<BigInt> values;
  WitnessMode mode = WitnessMode::Powers;
};

/// Greedy (n <= 3): a1 = 2, then the smallest integer >= 2 excluded by no
/// solve_forbidden_b solution over distinct polynomial pairs and both
/// epsilon values. Powers (n <= 8): a_i = 2^(3^i).
WitnessSequence build_witness(int n, WitnessMode mode);

/// The 2^n - 1 monomials over {1..n}, sorted by monomial_less.
std::vector<Monomial> all_monomials(int n);

/// All 2^(2^n - 1) polynomials over {1..n} including zero, ordered by
/// ascending monomial-subset bitmask. Requires n <= 4.
std::vector<MonotonePolynomial> all_polynomials(int n);

/// Whether some term over {add/2, mul/2} of arity var_count translates to p.
bool is_orderly_definable(const MonotonePolynomial& p, int var_count);

/// Whether some threshold t splits the monomials into one group entirely
/// <= t and one entirely > t, both nonempty. Sums of block-separated
/// polynomials have this shape; products never do, since every product
/// monomial spans both blocks.
bool has_sum_shape(const MonotonePolynomial& p);

struct SumProductReport {
  long long sum_instances = 0;
  long long product_instances = 0;
  long long comparisons = 0;
  long long violations = 0;
};

/// Enumerates f(block1) + g(block2) and f'(block1') * g'(block2') over all
/// term pairs (at most node_cap nodes each) and all block pairs with the
/// first block entirely before the second; counts value coincidences.
/// Requires values.size() <= 4 and node_cap <= 4.
SumProductReport check_sum_product_distinct(const WitnessSequence& w,
                                            int node_cap);

struct NonhomogeneityReport {
  int n = 0;
  int node_cap = 0;
  long long pair_count = 0;
  long long sum_in_x = 0;
  long long product_outside_x = 0;
  long long violations = 0;
};

/// Builds the powers witness of length n and checks, for every two-entry
/// reduction (b0, b1) under the node cap, that b0 + b1 lands in the
/// sum-shaped class and b0 * b1 does not. Membership is decided on the
/// polynomials themselves; witness injectivity identifies values with
/// polynomials. Requires n <= 4 and node_cap <= 4.
NonhomogeneityReport nonhomogeneity_report(int n, int node_cap);

using BitVector = std::vector<std::uint8_t>;

/// add = coordinatewise xor, mul = coordinatewise and; shorter operands are
/// zero-padded.
Interpretation<BitVector> f2_interpretation();

struct F2Reduction {
  ReductionSchedule schedule;
  std::vector<BitVector> output;
};

/// Repeatedly emits mul(x, add(x, x)) on a block [k, i, j] where (i, j) is
/// the first pair after k agreeing on the first `width` coordinates; since
/// every vector is supported there, each output entry is the zero vector.
/// Requires at least one such triple.
F2Reduction f2_reduce(const std::vector<BitVector>& vectors, int width);

}  // namespace ramal
