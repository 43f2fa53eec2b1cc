#include "ramal/algebra.hpp"

#include <algorithm>
#include <cstdint>

#include "ramal/error.hpp"

namespace ramal {

int Operation::apply(std::span<const int> args, int carrier_size) const {
  if (static_cast<int>(args.size()) != arity) {
    raise(ErrorKind::ArityMismatch,
          "operation '" + name + "' expects " + std::to_string(arity) +
              " arguments, got " + std::to_string(args.size()));
  }
  std::size_t index = 0;
  for (int a : args) index = index * static_cast<std::size_t>(carrier_size) +
                             static_cast<std::size_t>(a);
  return table[index];
}

int FiniteAlgebra::max_arity() const {
  int m = 0;
  for (const auto& op : ops) m = std::max(m, op.arity);
  return m;
}

namespace {

std::size_t power(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

}  // namespace

void validate_algebra(const FiniteAlgebra& alg) {
  if (alg.carrier_size <= 0) {
    raise(ErrorKind::TableSize, "carrier size must be positive, got " +
                                    std::to_string(alg.carrier_size));
  }
  for (const auto& op : alg.ops) {
    if (op.arity < 1) {
      raise(ErrorKind::NullaryOperation,
            "operation '" + op.name + "' has arity " +
                std::to_string(op.arity) + "; every operation needs arity >= 1");
    }
    std::size_t expected = power(alg.carrier_size, op.arity);
    if (op.table.size() != expected) {
      raise(ErrorKind::TableSize,
            "operation '" + op.name + "' table has " +
                std::to_string(op.table.size()) + " entries, expected " +
                std::to_string(expected));
    }
    for (int v : op.table) {
      if (v < 0 || v >= alg.carrier_size) {
        raise(ErrorKind::EntryOutOfRange,
              "operation '" + op.name + "' table entry " + std::to_string(v) +
                  " outside carrier {0..." +
                  std::to_string(alg.carrier_size - 1) + "}");
      }
    }
  }
}

namespace {

/// Closes the indicator vector `in` under all operations.
void close_under_ops(const FiniteAlgebra& alg, std::vector<char>& in) {
  int n = alg.carrier_size;
  bool changed = true;
  std::vector<int> members;
  while (changed) {
    changed = false;
    members.clear();
    for (int i = 0; i < n; ++i)
      if (in[i]) members.push_back(i);
    for (const auto& op : alg.ops) {
      std::vector<int> args(op.arity, 0);
      std::vector<int> pick(op.arity, 0);
      while (true) {
        for (int i = 0; i < op.arity; ++i) args[i] = members[pick[i]];
        int v = op.apply(args, n);
        if (!in[v]) {
          in[v] = 1;
          changed = true;
        }
        int pos = op.arity - 1;
        while (pos >= 0 &&
               pick[pos] + 1 == static_cast<int>(members.size())) {
          pick[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++pick[pos];
      }
      if (changed) break;
    }
  }
}

}  // namespace

ElementSet generated_subuniverse(const FiniteAlgebra& alg, int a) {
  if (a < 0 || a >= alg.carrier_size) {
    raise(ErrorKind::EntryOutOfRange,
          "generator " + std::to_string(a) + " outside carrier");
  }
  std::vector<char> in(alg.carrier_size, 0);
  in[a] = 1;
  close_under_ops(alg, in);
  ElementSet out;
  for (int i = 0; i < alg.carrier_size; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

ElementSet idempotents(const FiniteAlgebra& alg) {
  ElementSet out;
  for (int e = 0; e < alg.carrier_size; ++e) {
    bool ok = true;
    for (const auto& op : alg.ops) {
      std::vector<int> args(op.arity, e);
      if (op.apply(args, alg.carrier_size) != e) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(e);
  }
  return out;
}

bool is_subuniverse(const FiniteAlgebra& alg, const ElementSet& set) {
  int n = alg.carrier_size;
  std::vector<char> in(n, 0);
  for (int v : set) in[v] = 1;
  for (const auto& op : alg.ops) {
    std::vector<int> args(op.arity, 0);
    std::vector<int> pick(op.arity, 0);
    if (set.empty()) return false;
    while (true) {
      for (int i = 0; i < op.arity; ++i) args[i] = set[pick[i]];
      if (!in[op.apply(args, n)]) return false;
      int pos = op.arity - 1;
      while (pos >= 0 && pick[pos] + 1 == static_cast<int>(set.size())) {
        pick[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++pick[pos];
    }
  }
  return true;
}

std::vector<ElementSet> all_subuniverses(const FiniteAlgebra& alg,
                                         int size_cap) {
  if (alg.carrier_size > size_cap) {
    raise(ErrorKind::CarrierTooLarge,
          "carrier size " + std::to_string(alg.carrier_size) +
              " exceeds subuniverse enumeration cap " +
              std::to_string(size_cap));
  }
  int n = alg.carrier_size;
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    ElementSet set;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) set.push_back(i);
    if (is_subuniverse(alg, set)) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ramal
