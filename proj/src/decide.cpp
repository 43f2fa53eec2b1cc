#include "ramal/decide.hpp"

#include <algorithm>
#include <string>

#include "ramal/error.hpp"
#include "ramal/reduction.hpp"

namespace ramal {

namespace {

bool intersects(const ElementSet& a, const ElementSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

std::optional<std::pair<int, OrderlyTerm>> reachable_idempotent(
    const FiniteAlgebra& alg, int a) {
  int n = alg.carrier_size;
  std::vector<std::optional<OrderlyTerm>> term_of(
      static_cast<std::size_t>(n));
  term_of[static_cast<std::size_t>(a)] = OrderlyTerm::identity();
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> known;
    for (int e = 0; e < n; ++e)
      if (term_of[static_cast<std::size_t>(e)]) known.push_back(e);
    for (std::size_t oi = 0; oi < alg.ops.size(); ++oi) {
      const Operation& op = alg.ops[oi];
      std::vector<int> pick(static_cast<std::size_t>(op.arity), 0);
      std::vector<int> args(static_cast<std::size_t>(op.arity), 0);
      while (true) {
        for (int i = 0; i < op.arity; ++i)
          args[static_cast<std::size_t>(i)] =
              known[static_cast<std::size_t>(
                  pick[static_cast<std::size_t>(i)])];
        int v = op.apply(args, n);
        if (!term_of[static_cast<std::size_t>(v)]) {
          std::vector<OrderlyTerm> children;
          children.reserve(args.size());
          for (int e : args)
            children.push_back(*term_of[static_cast<std::size_t>(e)]);
          term_of[static_cast<std::size_t>(v)] =
              OrderlyTerm::node(static_cast<int>(oi), std::move(children));
          grew = true;
        }
        int pos = op.arity - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 ==
                               static_cast<int>(known.size())) {
          pick[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
      }
    }
  }
  for (int e : idempotents(alg)) {
    if (term_of[static_cast<std::size_t>(e)])
      return std::make_pair(e, *term_of[static_cast<std::size_t>(e)]);
  }
  return std::nullopt;
}

FiniteVerdict decide_finite_ramsey(const FiniteAlgebra& alg) {
  validate_algebra(alg);
  ElementSet idem = idempotents(alg);
  FiniteVerdict verdict;
  for (int a = 0; a < alg.carrier_size; ++a) {
    if (!intersects(generated_subuniverse(alg, a), idem)) {
      verdict.ramsey = false;
      verdict.culprit = a;
      verdict.reach.clear();
      return verdict;
    }
    auto r = reachable_idempotent(alg, a);
    verdict.reach.push_back({a, r->first, r->second});
  }
  verdict.ramsey = true;
  return verdict;
}

CrosscheckReport crosscheck_finite_theorem(const FiniteAlgebra& alg, int cap,
                                           bool with_probes) {
  validate_algebra(alg);
  if (alg.carrier_size > cap) {
    raise(ErrorKind::CarrierTooLarge,
          "carrier size " + std::to_string(alg.carrier_size) +
              " exceeds the exhaustive-check cap " + std::to_string(cap));
  }
  ElementSet idem = idempotents(alg);
  Interpretation<int> interp = algebra_interpretation(alg);

  bool via_generated = true;
  for (int a = 0; a < alg.carrier_size && via_generated; ++a)
    via_generated = intersects(generated_subuniverse(alg, a), idem);

  bool via_degenerate = true;
  for (int a = 0; a < alg.carrier_size && via_degenerate; ++a) {
    auto r = reachable_idempotent(alg, a);
    if (!r) {
      via_degenerate = false;
      break;
    }
    // a two-entry schedule of the witnessing term must collapse the
    // constant sequence on a to the constant sequence on the idempotent
    int k = term_arity(r->second);
    ReductionSchedule schedule;
    std::vector<int> first(static_cast<std::size_t>(k)),
        second(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      first[static_cast<std::size_t>(i)] = i;
      second[static_cast<std::size_t>(i)] = k + i;
    }
    schedule.entries.push_back({r->second, first});
    schedule.entries.push_back({r->second, second});
    std::vector<int> constant(static_cast<std::size_t>(2 * k), a);
    Prefix<int> out =
        apply_schedule<int>(schedule, interp, std::span<const int>(constant));
    int e = r->first;
    via_degenerate = out == Prefix<int>{e, e} &&
                     generated_subuniverse(alg, e) == ElementSet{e};
  }

  bool via_subalgebras = true;
  for (const ElementSet& sub : all_subuniverses(alg, cap)) {
    if (!intersects(sub, idem)) {
      via_subalgebras = false;
      break;
    }
  }

  if (via_generated != via_degenerate ||
      via_generated != via_subalgebras) {
    raise(ErrorKind::EquivalenceViolation,
          "the generated-subuniverse, degenerate-collapse, and "
          "all-subuniverse routes disagree: " +
              std::to_string(via_generated) + "/" +
              std::to_string(via_degenerate) + "/" +
              std::to_string(via_subalgebras));
  }

  CrosscheckReport report;
  report.via_generated = via_generated;
  report.via_degenerate = via_degenerate;
  report.via_subalgebras = via_subalgebras;
  report.ramsey = via_generated;
  if (with_probes) {
    int len = std::max(4, alg.max_arity());
    for (int a = 0; a < alg.carrier_size; ++a) {
      std::vector<int> constant(static_cast<std::size_t>(len), a);
      auto hit = search_homogeneous<int>(
          interp, std::span<const int>(constant),
          [](const int& v) { return v; }, 1, 3);
      report.probes.push_back({a, hit.has_value()});
    }
  }
  return report;
}

bool partition_separates(const Partition3& p, const std::vector<int>& T) {
  for (std::size_t x = 0; x < T.size(); ++x)
    if (p.part[x] == p.part[static_cast<std::size_t>(T[x])]) return false;
  return true;
}

Partition3 katetov_partition(int n, const std::vector<int>& T) {
  if (static_cast<int>(T.size()) != n) {
    raise(ErrorKind::TableSize, "table has " + std::to_string(T.size()) +
                                    " entries for carrier size " +
                                    std::to_string(n));
  }
  for (int x = 0; x < n; ++x) {
    if (T[static_cast<std::size_t>(x)] < 0 ||
        T[static_cast<std::size_t>(x)] >= n) {
      raise(ErrorKind::EntryOutOfRange,
            "table sends " + std::to_string(x) + " outside the carrier");
    }
    if (T[static_cast<std::size_t>(x)] == x) {
      raise(ErrorKind::FixedPointPresent,
            "element " + std::to_string(x) + " is a fixed point");
    }
  }
  Partition3 p;
  p.part.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> pos_in_path(static_cast<std::size_t>(n), -1);
  std::vector<int> path;
  for (int start = 0; start < n; ++start) {
    if (p.part[static_cast<std::size_t>(start)]) continue;
    path.clear();
    int cur = start;
    while (p.part[static_cast<std::size_t>(cur)] == 0 &&
           pos_in_path[static_cast<std::size_t>(cur)] < 0) {
      pos_in_path[static_cast<std::size_t>(cur)] =
          static_cast<int>(path.size());
      path.push_back(cur);
      cur = T[static_cast<std::size_t>(cur)];
    }
    int uncolored_tail = static_cast<int>(path.size());
    if (p.part[static_cast<std::size_t>(cur)] == 0) {
      // closed a new cycle: path[cycle_from..] in successor order
      int cycle_from = pos_in_path[static_cast<std::size_t>(cur)];
      int len = static_cast<int>(path.size()) - cycle_from;
      int min_off = 0;
      for (int i = 1; i < len; ++i) {
        if (path[static_cast<std::size_t>(cycle_from + i)] <
            path[static_cast<std::size_t>(cycle_from + min_off)])
          min_off = i;
      }
      for (int i = 0; i < len; ++i) {
        int node = path[static_cast<std::size_t>(cycle_from +
                                                 (min_off + i) % len)];
        int color = (i % 2 == 0) ? 1 : 2;
        if (i == len - 1 && len % 2 == 1) color = 3;
        p.part[static_cast<std::size_t>(node)] = color;
      }
      uncolored_tail = cycle_from;
    }
    // color the remaining path backward, alternating within {1, 2}
    for (int i = uncolored_tail - 1; i >= 0; --i) {
      int node = path[static_cast<std::size_t>(i)];
      int next = T[static_cast<std::size_t>(node)];
      p.part[static_cast<std::size_t>(node)] =
          p.part[static_cast<std::size_t>(next)] == 1 ? 2 : 1;
    }
    for (int node : path) pos_in_path[static_cast<std::size_t>(node)] = -1;
  }
  return p;
}

ElementSet fixed_by_all(const FiniteAlgebra& alg,
                        const std::vector<int>& op_indices) {
  for (int i : op_indices) {
    if (i < 0 || i >= static_cast<int>(alg.ops.size())) {
      raise(ErrorKind::IndexOutOfRange,
            "operation index " + std::to_string(i) + " out of range");
    }
    if (alg.ops[static_cast<std::size_t>(i)].arity != 1) {
      raise(ErrorKind::ArityMismatch,
            "operation '" + alg.ops[static_cast<std::size_t>(i)].name +
                "' is not unary");
    }
  }
  ElementSet s;
  for (int a = 0; a < alg.carrier_size; ++a) {
    bool fixed = true;
    for (int i : op_indices) {
      if (alg.ops[static_cast<std::size_t>(i)]
              .table[static_cast<std::size_t>(a)] != a) {
        fixed = false;
        break;
      }
    }
    if (fixed) s.push_back(a);
  }
  return s;
}

Partition3 build_discriminating_partition(
    const FiniteAlgebra& alg, const std::vector<int>& op_indices) {
  ElementSet s = fixed_by_all(alg, op_indices);
  int n = alg.carrier_size;
  int alpha = n;
  std::vector<int> T(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (int e : s) in_s[static_cast<std::size_t>(e)] = 1;
  for (int a = 0; a < n; ++a) {
    if (in_s[static_cast<std::size_t>(a)]) {
      T[static_cast<std::size_t>(a)] = alpha;
      continue;
    }
    for (int i : op_indices) {
      int image = alg.ops[static_cast<std::size_t>(i)]
                      .table[static_cast<std::size_t>(a)];
      if (image != a) {
        T[static_cast<std::size_t>(a)] = image;
        break;
      }
    }
  }
  T[static_cast<std::size_t>(alpha)] = 0;
  Partition3 extended = katetov_partition(n + 1, T);
  Partition3 p;
  p.part.assign(extended.part.begin(), extended.part.begin() + n);
  return p;
}

UnaryVerdict decide_unary_finite(const FiniteAlgebra& alg) {
  validate_algebra(alg);
  std::vector<int> all_ops;
  for (std::size_t i = 0; i < alg.ops.size(); ++i) {
    if (alg.ops[i].arity != 1) {
      raise(ErrorKind::ArityMismatch,
            "operation '" + alg.ops[i].name + "' is not unary");
    }
    all_ops.push_back(static_cast<int>(i));
  }
  UnaryVerdict verdict;
  verdict.s = fixed_by_all(alg, all_ops);
  int n = alg.carrier_size;
  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  verdict.words.assign(static_cast<std::size_t>(n), {});
  for (int e : verdict.s) assigned[static_cast<std::size_t>(e)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<char> snapshot = assigned;
    for (int a = 0; a < n; ++a) {
      if (snapshot[static_cast<std::size_t>(a)]) continue;
      for (int i : all_ops) {
        int image = alg.ops[static_cast<std::size_t>(i)]
                        .table[static_cast<std::size_t>(a)];
        if (!snapshot[static_cast<std::size_t>(image)]) continue;
        verdict.words[static_cast<std::size_t>(a)].push_back(i);
        const auto& rest = verdict.words[static_cast<std::size_t>(image)];
        verdict.words[static_cast<std::size_t>(a)].insert(
            verdict.words[static_cast<std::size_t>(a)].end(), rest.begin(),
            rest.end());
        assigned[static_cast<std::size_t>(a)] = 1;
        changed = true;
        break;
      }
    }
  }
  verdict.ramsey = true;
  for (int a = 0; a < n; ++a) {
    if (!assigned[static_cast<std::size_t>(a)]) {
      verdict.ramsey = false;
      verdict.culprit = a;
      break;
    }
  }
  return verdict;
}

void validate_residue(const ResidueUnarySystem& sys) {
  if (sys.modulus < 1) {
    raise(ErrorKind::TableSize,
          "modulus must be >= 1, got " + std::to_string(sys.modulus));
  }
  if (sys.shifts.empty()) {
    raise(ErrorKind::TableSize, "a residue system needs at least one op");
  }
  for (std::size_t i = 0; i < sys.shifts.size(); ++i) {
    if (static_cast<int>(sys.shifts[i].size()) != sys.modulus) {
      raise(ErrorKind::TableSize,
            "op " + std::to_string(i) + " has " +
                std::to_string(sys.shifts[i].size()) +
                " shifts for modulus " + std::to_string(sys.modulus));
    }
    for (int r = 0; r < sys.modulus; ++r) {
      if (r + sys.shifts[i][static_cast<std::size_t>(r)] < 0) {
        raise(ErrorKind::EntryOutOfRange,
              "op " + std::to_string(i) + " maps the least member of class " +
                  std::to_string(r) + " below zero");
      }
    }
  }
}

ResidueVerdict decide_unary_residue(const ResidueUnarySystem& sys) {
  validate_residue(sys);
  int m = sys.modulus;
  auto target = [&](int r, std::size_t op) {
    long long t = (r + sys.shifts[op][static_cast<std::size_t>(r)]) % m;
    return static_cast<int>(t < 0 ? t + m : t);
  };
  ResidueVerdict verdict;
  std::vector<char> assigned(static_cast<std::size_t>(m), 0);
  verdict.words.assign(static_cast<std::size_t>(m), {});
  for (int r = 0; r < m; ++r) {
    bool fixed = true;
    for (const auto& row : sys.shifts) {
      if (row[static_cast<std::size_t>(r)] != 0) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      verdict.s_classes.push_back(r);
      assigned[static_cast<std::size_t>(r)] = 1;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<char> snapshot = assigned;
    for (int r = 0; r < m; ++r) {
      if (snapshot[static_cast<std::size_t>(r)]) continue;
      for (std::size_t op = 0; op < sys.shifts.size(); ++op) {
        int image = target(r, op);
        if (!snapshot[static_cast<std::size_t>(image)]) continue;
        verdict.words[static_cast<std::size_t>(r)].push_back(
            static_cast<int>(op));
        const auto& rest = verdict.words[static_cast<std::size_t>(image)];
        verdict.words[static_cast<std::size_t>(r)].insert(
            verdict.words[static_cast<std::size_t>(r)].end(), rest.begin(),
            rest.end());
        assigned[static_cast<std::size_t>(r)] = 1;
        changed = true;
        break;
      }
    }
  }
  verdict.ramsey = true;
  for (int r = 0; r < m; ++r) {
    if (!assigned[static_cast<std::size_t>(r)]) {
      verdict.ramsey = false;
      verdict.culprit_class = r;
      break;
    }
  }
  return verdict;
}

}  // namespace ramal
