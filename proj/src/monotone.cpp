#include "ramal/monotone.hpp"

#include <algorithm>
#include <map>

#include "ramal/error.hpp"

namespace ramal {

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

void validate_monomial(const Monomial& m) {
  if (m.empty()) {
    raise(ErrorKind::IndexOutOfRange, "a monomial needs at least one index");
  }
  int prev = 0;
  for (int i : m) {
    if (i <= prev) {
      raise(ErrorKind::IndexOutOfRange,
            "monomial indices must be positive and strictly increasing");
    }
    prev = i;
  }
}

}  // namespace

MonotonePolynomial::MonotonePolynomial(std::vector<Monomial> monomials)
    : monomials_(std::move(monomials)) {
  for (const auto& m : monomials_) validate_monomial(m);
  std::sort(monomials_.begin(), monomials_.end(), monomial_less);
  auto dup = std::adjacent_find(monomials_.begin(), monomials_.end());
  if (dup != monomials_.end()) {
    raise(ErrorKind::OverlappingMonomials,
          "duplicate monomial in polynomial");
  }
}

int MonotonePolynomial::total_length() const {
  int total = 0;
  for (const auto& m : monomials_) total += static_cast<int>(m.size());
  return total;
}

int MonotonePolynomial::max_index() const {
  int top = 0;
  for (const auto& m : monomials_) top = std::max(top, m.back());
  return top;
}

int MonotonePolynomial::min_index() const {
  if (is_zero()) return 0;
  int low = monomials_.front().front();
  for (const auto& m : monomials_) low = std::min(low, m.front());
  return low;
}

bool MonotonePolynomial::contains(const Monomial& m) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), m,
                            monomial_less);
}

MonotonePolynomial mp_add(const MonotonePolynomial& m1,
                          const MonotonePolynomial& m2) {
  for (const auto& m : m2.monomials()) {
    if (m1.contains(m)) {
      raise(ErrorKind::OverlappingMonomials,
            "summands share a monomial; the sum is not a set union");
    }
  }
  std::vector<Monomial> merged = m1.monomials();
  merged.insert(merged.end(), m2.monomials().begin(), m2.monomials().end());
  return MonotonePolynomial(std::move(merged));
}

MonotonePolynomial mp_mul(const MonotonePolynomial& m1,
                          const MonotonePolynomial& m2) {
  if (m1.is_zero() || m2.is_zero()) return {};
  if (m1.max_index() >= m2.min_index()) {
    raise(ErrorKind::IndexOverlap,
          "left factor's indices must all lie below the right factor's");
  }
  std::vector<Monomial> products;
  products.reserve(m1.monomials().size() * m2.monomials().size());
  for (const auto& a : m1.monomials()) {
    for (const auto& b : m2.monomials()) {
      Monomial ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      products.push_back(std::move(ab));
    }
  }
  return MonotonePolynomial(std::move(products));
}

MonotonePolynomial translate_term_to_poly(const OrderlyTerm& t, int start) {
  if (t.is_identity()) {
    return MonotonePolynomial(std::vector<Monomial>{{start}});
  }
  if (t.children().size() != 2 || t.op() > 1) {
    raise(ErrorKind::ArityMismatch,
          "translation is defined for terms over binary add (op 0) and mul "
          "(op 1) only");
  }
  const auto& left = t.children()[0];
  const auto& right = t.children()[1];
  MonotonePolynomial lp = translate_term_to_poly(left, start);
  MonotonePolynomial rp =
      translate_term_to_poly(right, start + term_arity(left));
  return t.op() == 0 ? mp_add(lp, rp) : mp_mul(lp, rp);
}

MonotonePolynomial reindex_poly(const MonotonePolynomial& p,
                                std::span<const int> new_indices) {
  if (p.max_index() > static_cast<int>(new_indices.size())) {
    raise(ErrorKind::IndexOutOfRange,
          "replacement list shorter than the polynomial's top index");
  }
  for (std::size_t i = 1; i < new_indices.size(); ++i) {
    if (new_indices[i] <= new_indices[i - 1]) {
      raise(ErrorKind::IndexOutOfRange,
            "replacement indices must be strictly increasing");
    }
  }
  std::vector<Monomial> out;
  out.reserve(p.monomials().size());
  for (const auto& m : p.monomials()) {
    Monomial r;
    r.reserve(m.size());
    for (int i : m) r.push_back(new_indices[static_cast<std::size_t>(i - 1)]);
    out.push_back(std::move(r));
  }
  return MonotonePolynomial(std::move(out));
}

BigInt evaluate_poly(const MonotonePolynomial& p,
                     std::span<const BigInt> args) {
  if (p.max_index() > static_cast<int>(args.size())) {
    raise(ErrorKind::IndexOutOfRange,
          "polynomial uses index " + std::to_string(p.max_index()) +
              " but only " + std::to_string(args.size()) +
              " arguments were given");
  }
  BigInt sum = 0;
  for (const auto& m : p.monomials()) {
    BigInt prod = 1;
    for (int i : m) prod *= args[static_cast<std::size_t>(i - 1)];
    sum += prod;
  }
  return sum;
}

SplitDecomposition split_at_top(const MonotonePolynomial& m, int top) {
  if (m.max_index() > top) {
    raise(ErrorKind::IndexOutOfRange,
          "split index " + std::to_string(top) +
              " lies below the polynomial's top index " +
              std::to_string(m.max_index()));
  }
  SplitDecomposition d;
  d.top = top;
  std::vector<Monomial> rest, cofactors;
  for (const auto& mono : m.monomials()) {
    if (mono.back() != top) {
      rest.push_back(mono);
    } else if (mono.size() == 1) {
      d.has_singleton = true;
    } else {
      cofactors.emplace_back(mono.begin(), mono.end() - 1);
    }
  }
  d.without_top = MonotonePolynomial(std::move(rest));
  d.top_cofactors = MonotonePolynomial(std::move(cofactors));
  return d;
}

MonotonePolynomial reassemble(const SplitDecomposition& d) {
  std::vector<Monomial> out = d.without_top.monomials();
  for (const auto& alpha : d.top_cofactors.monomials()) {
    Monomial m = alpha;
    m.push_back(d.top);
    out.push_back(std::move(m));
  }
  if (d.has_singleton) out.push_back({d.top});
  return MonotonePolynomial(std::move(out));
}

std::optional<BigInt> solve_forbidden_b(const MonotonePolynomial& M,
                                        const MonotonePolynomial& N,
                                        std::span<const BigInt> prefix,
                                        int epsilon) {
  if (epsilon != 0 && epsilon != 1) {
    raise(ErrorKind::EntryOutOfRange, "epsilon must be 0 or 1");
  }
  int top = static_cast<int>(prefix.size()) + 1;
  SplitDecomposition dm = split_at_top(M, top);
  SplitDecomposition dn = split_at_top(N, top);
  BigInt coeff = evaluate_poly(dm.top_cofactors, prefix) -
                 evaluate_poly(dn.top_cofactors, prefix) +
                 (dm.has_singleton ? 1 : 0) - (dn.has_singleton ? 1 : 0);
  BigInt rhs = evaluate_poly(dn.without_top, prefix) -
               evaluate_poly(dm.without_top, prefix) + epsilon;
  if (coeff == 0) {
    if (rhs == 0) {
      raise(ErrorKind::DegenerateEquation,
            "every value collides; the prefix already violates "
            "distinctness");
    }
    return std::nullopt;
  }
  if (rhs % coeff != 0) return std::nullopt;
  return rhs / coeff;
}

WitnessSequence build_witness(int n, WitnessMode mode) {
  WitnessSequence w;
  w.mode = mode;
  if (n <= 0) return w;
  if (mode == WitnessMode::Powers) {
    if (n > 8) {
      raise(ErrorKind::ModeScaleExceeded,
            "powers mode supports prefixes up to length 8");
    }
    int exp = 1;
    for (int i = 1; i <= n; ++i) {
      exp *= 3;
      w.values.push_back(BigInt(1) << exp);
    }
    return w;
  }
  if (n > 3) {
    raise(ErrorKind::ModeScaleExceeded,
          "greedy mode enumerates doubly exponential polynomial pairs; "
          "lengths above 3 are not supported");
  }
  w.values.push_back(2);
  for (int k = 1; k < n; ++k) {
    std::vector<MonotonePolynomial> polys = all_polynomials(k + 1);
    std::vector<BigInt> forbidden;
    std::span<const BigInt> prefix(w.values);
    for (std::size_t i = 0; i < polys.size(); ++i) {
      for (std::size_t j = 0; j < polys.size(); ++j) {
        if (i == j) continue;
        for (int eps = 0; eps <= 1; ++eps) {
          if (auto b = solve_forbidden_b(polys[i], polys[j], prefix, eps))
            forbidden.push_back(std::move(*b));
        }
      }
    }
    std::sort(forbidden.begin(), forbidden.end());
    forbidden.erase(std::unique(forbidden.begin(), forbidden.end()),
                    forbidden.end());
    BigInt b = 2;
    while (std::binary_search(forbidden.begin(), forbidden.end(), b)) ++b;
    w.values.push_back(std::move(b));
  }
  return w;
}

std::vector<Monomial> all_monomials(int n) {
  if (n < 0 || n > 20) {
    raise(ErrorKind::ScaleExceeded,
          "monomial enumeration supports 0 <= n <= 20");
  }
  std::vector<Monomial> out;
  for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
    Monomial m;
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) m.push_back(i + 1);
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

std::vector<MonotonePolynomial> all_polynomials(int n) {
  if (n < 0 || n > 4) {
    raise(ErrorKind::ScaleExceeded,
          "full polynomial enumeration supports 0 <= n <= 4");
  }
  std::vector<Monomial> monos = all_monomials(n);
  std::size_t m = monos.size();
  std::vector<MonotonePolynomial> out;
  out.reserve(1ull << m);
  for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
    std::vector<Monomial> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1ull << i)) subset.push_back(monos[i]);
    out.emplace_back(std::move(subset));
  }
  return out;
}

bool is_orderly_definable(const MonotonePolynomial& p, int var_count) {
  if (var_count > 10) {
    raise(ErrorKind::ScaleExceeded,
          "definability enumeration supports at most 10 variables");
  }
  // over binary ops a term with k leaves has exactly k-1 nodes
  std::vector<OrderlyTerm> terms =
      enumerate_terms(ring_signature(), var_count, var_count - 1);
  for (const auto& t : terms)
    if (translate_term_to_poly(t) == p) return true;
  return false;
}

bool has_sum_shape(const MonotonePolynomial& p) {
  if (p.monomial_count() < 2) return false;
  for (int t = p.min_index(); t < p.max_index(); ++t) {
    int low = 0, high = 0;
    for (const auto& m : p.monomials()) {
      if (m.back() <= t)
        ++low;
      else if (m.front() > t)
        ++high;
    }
    if (low > 0 && high > 0 && low + high == p.monomial_count()) return true;
  }
  return false;
}

namespace {

/// Nonempty position-mask pairs (m1, m2) with every m1 position below every
/// m2 position.
std::vector<std::pair<std::vector<int>, std::vector<int>>> block_pairs(
    int n) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  auto positions = [n](unsigned mask) {
    std::vector<int> p;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) p.push_back(i);
    return p;
  };
  for (unsigned m1 = 1; m1 < (1u << n); ++m1) {
    for (unsigned m2 = 1; m2 < (1u << n); ++m2) {
      std::vector<int> b1 = positions(m1), b2 = positions(m2);
      if (b1.back() < b2.front()) out.emplace_back(std::move(b1), std::move(b2));
    }
  }
  return out;
}

}  // namespace

SumProductReport check_sum_product_distinct(const WitnessSequence& w,
                                            int node_cap) {
  int n = static_cast<int>(w.values.size());
  if (n > 4 || node_cap > 4 || node_cap < 0) {
    raise(ErrorKind::ScaleExceeded,
          "sum/product census supports length <= 4 and node cap <= 4");
  }
  Interpretation<BigInt> interp = integer_interpretation(true);
  std::vector<std::vector<OrderlyTerm>> terms(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k)
    terms[static_cast<std::size_t>(k)] =
        enumerate_terms(interp.sig, k, node_cap);
  std::map<BigInt, long long> sums, products;
  SumProductReport report;
  for (const auto& [b1, b2] : block_pairs(n)) {
    std::vector<BigInt> a1, a2;
    for (int i : b1) a1.push_back(w.values[static_cast<std::size_t>(i)]);
    for (int i : b2) a2.push_back(w.values[static_cast<std::size_t>(i)]);
    for (const auto& f : terms[b1.size()]) {
      BigInt fv = evaluate_term(f, interp, std::span<const BigInt>(a1));
      for (const auto& g : terms[b2.size()]) {
        BigInt gv = evaluate_term(g, interp, std::span<const BigInt>(a2));
        ++sums[fv + gv];
        ++report.sum_instances;
        ++products[fv * gv];
        ++report.product_instances;
      }
    }
  }
  report.comparisons = report.sum_instances * report.product_instances;
  for (const auto& [value, count] : sums) {
    auto it = products.find(value);
    if (it != products.end()) report.violations += count * it->second;
  }
  return report;
}

NonhomogeneityReport nonhomogeneity_report(int n, int node_cap) {
  if (n > 4 || node_cap > 4 || node_cap < 0) {
    raise(ErrorKind::ScaleExceeded,
          "the bounded census supports length <= 4 and node cap <= 4");
  }
  NonhomogeneityReport report;
  report.n = n;
  report.node_cap = node_cap;
  build_witness(n, WitnessMode::Powers);  // instantiates the prefix checked
  Signature sig = ring_signature();
  std::vector<std::vector<OrderlyTerm>> terms(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k)
    terms[static_cast<std::size_t>(k)] = enumerate_terms(sig, k, node_cap);
  for (const auto& [b1, b2] : block_pairs(n)) {
    std::vector<int> t1, t2;
    for (int i : b1) t1.push_back(i + 1);
    for (int i : b2) t2.push_back(i + 1);
    for (const auto& f : terms[b1.size()]) {
      MonotonePolynomial p1 =
          reindex_poly(translate_term_to_poly(f), std::span<const int>(t1));
      for (const auto& g : terms[b2.size()]) {
        MonotonePolynomial p2 =
            reindex_poly(translate_term_to_poly(g), std::span<const int>(t2));
        bool sum_ok = has_sum_shape(mp_add(p1, p2));
        bool product_ok = !has_sum_shape(mp_mul(p1, p2));
        ++report.pair_count;
        if (sum_ok) ++report.sum_in_x;
        if (product_ok) ++report.product_outside_x;
        if (!sum_ok || !product_ok) ++report.violations;
      }
    }
  }
  return report;
}

Interpretation<BitVector> f2_interpretation() {
  Interpretation<BitVector> interp;
  interp.sig.ops.push_back({"add", 2});
  interp.fns.push_back([](std::span<const BitVector> a) {
    BitVector out(std::max(a[0].size(), a[1].size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::uint8_t x = i < a[0].size() ? a[0][i] : 0;
      std::uint8_t y = i < a[1].size() ? a[1][i] : 0;
      out[i] = x ^ y;
    }
    return out;
  });
  interp.sig.ops.push_back({"mul", 2});
  interp.fns.push_back([](std::span<const BitVector> a) {
    BitVector out(std::max(a[0].size(), a[1].size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::uint8_t x = i < a[0].size() ? a[0][i] : 0;
      std::uint8_t y = i < a[1].size() ? a[1][i] : 0;
      out[i] = x & y;
    }
    return out;
  });
  return interp;
}

F2Reduction f2_reduce(const std::vector<BitVector>& vectors, int width) {
  if (width < 1) {
    raise(ErrorKind::EntryOutOfRange, "width must be at least 1");
  }
  std::vector<BitVector> v;
  v.reserve(vectors.size());
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    const BitVector& raw = vectors[idx];
    for (std::size_t i = static_cast<std::size_t>(width); i < raw.size(); ++i) {
      if (raw[i]) {
        raise(ErrorKind::EntryOutOfRange,
              "vector " + std::to_string(idx) +
                  " has support beyond the stated width");
      }
    }
    BitVector norm(static_cast<std::size_t>(width), 0);
    for (std::size_t i = 0;
         i < std::min(raw.size(), static_cast<std::size_t>(width)); ++i)
      norm[i] = raw[i] ? 1 : 0;
    v.push_back(std::move(norm));
  }

  OrderlyTerm annihilator = OrderlyTerm::node(
      1, {OrderlyTerm::identity(),
          OrderlyTerm::node(0, {OrderlyTerm::identity(),
                                OrderlyTerm::identity()})});
  F2Reduction result;
  int len = static_cast<int>(v.size());
  int k = 0;
  while (k + 2 < len) {
    std::map<BitVector, int> seen;
    int hit_i = -1, hit_j = -1;
    for (int j = k + 1; j < len; ++j) {
      auto [it, fresh] = seen.emplace(v[static_cast<std::size_t>(j)], j);
      if (!fresh) {
        hit_i = it->second;
        hit_j = j;
        break;
      }
    }
    if (hit_j < 0) break;
    result.schedule.entries.push_back({annihilator, {k, hit_i, hit_j}});
    BitVector out(static_cast<std::size_t>(width), 0);
    for (int c = 0; c < width; ++c) {
      auto ci = static_cast<std::size_t>(c);
      out[ci] = v[static_cast<std::size_t>(k)][ci] &
                (v[static_cast<std::size_t>(hit_i)][ci] ^
                 v[static_cast<std::size_t>(hit_j)][ci]);
    }
    result.output.push_back(std::move(out));
    k = hit_j + 1;
  }
  if (result.output.empty()) {
    raise(ErrorKind::InsufficientVectors,
          "no block [k, i, j] with a width-window collision exists; supply "
          "more vectors");
  }
  return result;
}

}  // namespace ramal
