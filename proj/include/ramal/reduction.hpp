#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramal/algebra.hpp"
#include "ramal/bigint.hpp"
#include "ramal/term.hpp"

namespace ramal {

template <class V>
using Prefix = std::vector<V>;

/// One output position of a schedule: a term read on a block of source
/// positions. indices.size() must equal term_arity(term).
struct ScheduleEntry {
  OrderlyTerm term;
  std::vector<int> indices;
};

/// Maps a source prefix to a shorter one. Entry blocks must not interleave:
/// the concatenation of all index blocks is strictly increasing.
struct ReductionSchedule {
  std::vector<ScheduleEntry> entries;
};

void validate_schedule(const ReductionSchedule& s, int source_len);

/// `inner` maps a to b, `outer` maps b to c; the result maps a to c and
/// evaluates identically to applying the two in sequence.
ReductionSchedule compose_schedules(const ReductionSchedule& outer,
                                    const ReductionSchedule& inner);

std::string format_schedule(const ReductionSchedule& s, const Signature& sig);

template <class V>
Prefix<V> apply_schedule(const ReductionSchedule& s,
                         const Interpretation<V>& interp,
                         std::span<const V> source) {
  validate_schedule(s, static_cast<int>(source.size()));
  Prefix<V> out;
  out.reserve(s.entries.size());
  for (const auto& entry : s.entries) {
    std::vector<V> args;
    args.reserve(entry.indices.size());
    for (int i : entry.indices) args.push_back(source[static_cast<std::size_t>(i)]);
    out.push_back(evaluate_term(entry.term, interp, std::span<const V>(args)));
  }
  return out;
}

/// Every value of a term with at most node_cap operation nodes applied to a
/// nonempty increasing subsequence of `prefix`; sorted, duplicates removed.
template <class V>
std::vector<V> finite_reductions(const Interpretation<V>& interp,
                                 std::span<const V> prefix, int node_cap) {
  int n = static_cast<int>(prefix.size());
  if (n > 20) {
    raise(ErrorKind::ScaleExceeded,
          "finite reductions enumerate all subsequences; prefix length " +
              std::to_string(n) + " exceeds 20");
  }
  std::vector<std::vector<OrderlyTerm>> terms_by_arity(
      static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k)
    terms_by_arity[static_cast<std::size_t>(k)] =
        enumerate_terms(interp.sig, k, node_cap);
  std::vector<V> out;
  std::vector<V> args;
  for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
    args.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) args.push_back(prefix[static_cast<std::size_t>(i)]);
    for (const auto& t : terms_by_arity[args.size()])
      out.push_back(evaluate_term(t, interp, std::span<const V>(args)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Nonempty subset sums of `prefix`, sorted, duplicates removed. Independent
/// of the term machinery.
std::vector<BigInt> fs_oracle(const Prefix<BigInt>& prefix);

template <class V>
using Coloring = std::function<int(const V&)>;

namespace detail {

/// Depth-first schedule enumeration in canonical order: exact total node
/// count, blocks in lexicographic index-list order, terms in term_less order.
template <class V>
struct ScheduleSearch {
  const Interpretation<V>& interp;
  std::span<const V> source;
  int num_entries;
  int per_term_cap;
  int max_block;  // no term of a larger arity fits under per_term_cap

  std::vector<std::vector<OrderlyTerm>> terms_by_arity;
  ReductionSchedule schedule;
  std::vector<V> values;
  // returns true when the value is admissible at this output position
  std::function<bool(int, const V&)> entry_filter;
  // returns true to stop the search with the current schedule as the answer
  std::function<bool()> on_complete;

  ScheduleSearch(const Interpretation<V>& interp_, std::span<const V> source_,
                 int num_entries_, int per_term_cap_)
      : interp(interp_),
        source(source_),
        num_entries(num_entries_),
        per_term_cap(per_term_cap_) {
    int mu = 0;
    for (const auto& op : interp.sig.ops) mu = std::max(mu, op.arity);
    max_block = mu <= 1 ? 1 : per_term_cap * (mu - 1) + 1;
    max_block = std::min(max_block, static_cast<int>(source.size()));
    terms_by_arity.resize(static_cast<std::size_t>(max_block) + 1);
    for (int k = 1; k <= max_block; ++k)
      terms_by_arity[static_cast<std::size_t>(k)] =
          enumerate_terms(interp.sig, k, per_term_cap);
  }

  bool run(int total_nodes) {
    schedule.entries.clear();
    values.clear();
    return place_entry(0, 0, total_nodes);
  }

  bool place_entry(int entry, int next_free, int nodes_left) {
    if (entry == num_entries) return nodes_left == 0 && on_complete();
    std::vector<int> block;
    return extend_block(entry, block, next_free, nodes_left);
  }

  bool extend_block(int entry, std::vector<int>& block, int min_next,
                    int nodes_left) {
    if (!block.empty() && try_terms(entry, block, nodes_left)) return true;
    if (static_cast<int>(block.size()) == max_block) return false;
    for (int f = min_next; f < static_cast<int>(source.size()); ++f) {
      block.push_back(f);
      if (extend_block(entry, block, f + 1, nodes_left)) return true;
      block.pop_back();
    }
    return false;
  }

  bool try_terms(int entry, const std::vector<int>& block, int nodes_left) {
    std::vector<V> args;
    args.reserve(block.size());
    for (int i : block) args.push_back(source[static_cast<std::size_t>(i)]);
    int budget = std::min(nodes_left, per_term_cap);
    for (const auto& t : terms_by_arity[block.size()]) {
      int nd = term_nodes(t);
      if (nd > budget) break;  // term lists ascend by node count
      V v = evaluate_term(t, interp, std::span<const V>(args));
      if (entry_filter && !entry_filter(entry, v)) continue;
      schedule.entries.push_back({t, block});
      values.push_back(v);
      if (place_entry(entry + 1, block.back() + 1, nodes_left - nd))
        return true;
      values.pop_back();
      schedule.entries.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// First schedule (in canonical order) carrying `source` onto `target`, with
/// at most node_cap operation nodes per term. nullopt when none exists.
template <class V>
std::optional<ReductionSchedule> is_reduction_prefix(
    std::span<const V> target, std::span<const V> source,
    const Interpretation<V>& interp, int node_cap) {
  int m = static_cast<int>(target.size());
  if (m == 0 || target.size() > source.size()) return std::nullopt;
  detail::ScheduleSearch<V> search(interp, source, m, node_cap);
  search.entry_filter = [&target](int entry, const V& v) {
    return v == target[static_cast<std::size_t>(entry)];
  };
  search.on_complete = [] { return true; };
  for (int total = 0; total <= node_cap * m; ++total)
    if (search.run(total)) return search.schedule;
  return std::nullopt;
}

template <class V>
struct HomogeneousHit {
  Prefix<V> prefix;
  ReductionSchedule schedule;
  int color;
};

/// First reduction prefix of `source` with target_len entries whose bounded
/// finite reductions are single-colored. Schedules are tried in canonical
/// order; the same node_cap bounds both schedule terms and the finite
/// reductions of each candidate.
template <class V>
std::optional<HomogeneousHit<V>> search_homogeneous(
    const Interpretation<V>& interp, std::span<const V> source,
    const Coloring<V>& coloring, int target_len, int node_cap) {
  if (target_len <= 0 || target_len > static_cast<int>(source.size()))
    return std::nullopt;
  detail::ScheduleSearch<V> search(interp, source, target_len, node_cap);
  std::optional<HomogeneousHit<V>> hit;
  search.on_complete = [&] {
    std::vector<V> fr = finite_reductions<V>(
        interp, std::span<const V>(search.values), node_cap);
    int color = coloring(fr.front());
    for (const auto& v : fr)
      if (coloring(v) != color) return false;
    hit = HomogeneousHit<V>{search.values, search.schedule, color};
    return true;
  };
  for (int total = 0; total <= node_cap * target_len; ++total)
    if (search.run(total)) return hit;
  return std::nullopt;
}

/// Term evaluation over a finite algebra's carrier.
Interpretation<int> algebra_interpretation(const FiniteAlgebra& alg);

/// {add} or {add, mul} over arbitrary-precision integers.
Interpretation<BigInt> integer_interpretation(bool with_mul);

/// No operations; terms are the identity only.
Interpretation<BigInt> empty_interpretation();

}  // namespace ramal
