#include "ramal/reduction.hpp"

#include <algorithm>

#include "ramal/error.hpp"

namespace ramal {

void validate_schedule(const ReductionSchedule& s, int source_len) {
  int last = -1;
  for (std::size_t j = 0; j < s.entries.size(); ++j) {
    const auto& entry = s.entries[j];
    int want = term_arity(entry.term);
    if (static_cast<int>(entry.indices.size()) != want) {
      raise(ErrorKind::ArityMismatch,
            "entry " + std::to_string(j) + " pairs a term of arity " +
                std::to_string(want) + " with " +
                std::to_string(entry.indices.size()) + " indices");
    }
    for (int i : entry.indices) {
      if (i < 0 || i >= source_len) {
        raise(ErrorKind::IndexOutOfRange,
              "entry " + std::to_string(j) + " reads position " +
                  std::to_string(i) + " of a length-" +
                  std::to_string(source_len) + " prefix");
      }
      if (i <= last) {
        raise(ErrorKind::BlockOrder,
              "entry " + std::to_string(j) + " reads position " +
                  std::to_string(i) +
                  " out of order; concatenated blocks must be strictly "
                  "increasing");
      }
      last = i;
    }
  }
}

ReductionSchedule compose_schedules(const ReductionSchedule& outer,
                                    const ReductionSchedule& inner) {
  int mid_len = static_cast<int>(inner.entries.size());
  validate_schedule(outer, mid_len);
  ReductionSchedule out;
  out.entries.reserve(outer.entries.size());
  for (const auto& g : outer.entries) {
    std::vector<OrderlyTerm> grafts;
    std::vector<int> indices;
    grafts.reserve(g.indices.size());
    for (int i : g.indices) {
      const auto& e = inner.entries[static_cast<std::size_t>(i)];
      grafts.push_back(e.term);
      indices.insert(indices.end(), e.indices.begin(), e.indices.end());
    }
    out.entries.push_back(
        {substitute(g.term, grafts), std::move(indices)});
  }
  return out;
}

std::string format_schedule(const ReductionSchedule& s,
                            const Signature& sig) {
  std::string out = "[";
  for (std::size_t j = 0; j < s.entries.size(); ++j) {
    if (j) out += "; ";
    out += format_term(s.entries[j].term, sig);
    out += " @ [";
    for (std::size_t i = 0; i < s.entries[j].indices.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s.entries[j].indices[i]);
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::vector<BigInt> fs_oracle(const Prefix<BigInt>& prefix) {
  if (prefix.size() > 20) {
    raise(ErrorKind::ScaleExceeded, "subset-sum oracle capped at length 20");
  }
  std::vector<BigInt> out;
  int n = static_cast<int>(prefix.size());
  for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
    BigInt sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) sum += prefix[static_cast<std::size_t>(i)];
    out.push_back(std::move(sum));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Interpretation<int> algebra_interpretation(const FiniteAlgebra& alg) {
  Interpretation<int> interp;
  for (const auto& op : alg.ops) {
    interp.sig.ops.push_back({op.name, op.arity});
    interp.fns.push_back([op, n = alg.carrier_size](std::span<const int> a) {
      return op.apply(a, n);
    });
  }
  return interp;
}

Interpretation<BigInt> integer_interpretation(bool with_mul) {
  Interpretation<BigInt> interp;
  interp.sig.ops.push_back({"add", 2});
  interp.fns.push_back(
      [](std::span<const BigInt> a) { return a[0] + a[1]; });
  if (with_mul) {
    interp.sig.ops.push_back({"mul", 2});
    interp.fns.push_back(
        [](std::span<const BigInt> a) { return a[0] * a[1]; });
  }
  return interp;
}

Interpretation<BigInt> empty_interpretation() { return {}; }

}  // namespace ramal
