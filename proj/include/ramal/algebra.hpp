#pragma once

#include <span>
#include <string>
#include <vector>

namespace ramal {

/// Finitary operation on {0, ..., n-1} given by a row-major value table.
/// Table index for arguments (a_0, ..., a_{k-1}) is sum a_i * n^{k-1-i}.
struct Operation {
  std::string name;
  int arity = 0;
  std::vector<int> table;

  int apply(std::span<const int> args, int carrier_size) const;

  bool operator==(const Operation& other) const = default;
};

struct FiniteAlgebra {
  int carrier_size = 0;
  std::vector<Operation> ops;

  int max_arity() const;

  bool operator==(const FiniteAlgebra& other) const = default;
};

using ElementSet = std::vector<int>;  // strictly increasing elements

/// Checks arity >= 1, table size n^arity, entries within {0, ..., n-1}.
void validate_algebra(const FiniteAlgebra& alg);

/// Smallest subuniverse containing `a` (closure under all operations).
ElementSet generated_subuniverse(const FiniteAlgebra& alg, int a);

/// Elements e with f(e, ..., e) = e for every operation f.
ElementSet idempotents(const FiniteAlgebra& alg);

/// All nonempty subuniverses, ordered by ascending characteristic bitmask
/// (bit i set iff element i belongs). Requires carrier_size <= size_cap.
std::vector<ElementSet> all_subuniverses(const FiniteAlgebra& alg,
                                         int size_cap = 16);

/// True iff `set` (strictly increasing) is closed under all operations.
bool is_subuniverse(const FiniteAlgebra& alg, const ElementSet& set);

}  // namespace ramal
