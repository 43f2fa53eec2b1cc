#include "ramal/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ramal/decide.hpp"
#include "ramal/error.hpp"
#include "ramal/monotone.hpp"
#include "ramal/reduction.hpp"
#include "ramal/report.hpp"
#include "ramal/inputfile.hpp"

namespace ramal {

namespace {

constexpr int kDefaultCap = 3;
constexpr int kDisplayLimit = 64;

BigInt parse_big(const std::string& s) {
  std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
  bool ok = i < s.size();
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) ok = false;
  }
  if (!ok) {
    raise(ErrorKind::ParseError, "'" + s + "' is not an integer");
  }
  return BigInt(s);
}

std::vector<BigInt> parse_prefix(const std::vector<std::string>& tokens) {
  std::vector<BigInt> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(parse_big(t));
  return out;
}

std::vector<BigInt> parse_big_list(const std::string& csv) {
  std::vector<BigInt> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_big(item));
  }
  if (out.empty()) {
    raise(ErrorKind::ParseError,
          "'" + csv + "' holds no comma-separated integers");
  }
  return out;
}

std::string big_list_str(const std::vector<BigInt>& values, int limit,
                         bool* truncated = nullptr) {
  std::string s = "[";
  int shown = std::min<int>(limit, static_cast<int>(values.size()));
  for (int i = 0; i < shown; ++i) {
    if (i) s += ", ";
    s += values[static_cast<std::size_t>(i)].str();
  }
  if (shown < static_cast<int>(values.size())) {
    s += ", ...";
    if (truncated) *truncated = true;
  }
  s += "]";
  return s;
}

std::string int_list_str(const std::vector<int>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(values[i]);
  }
  s += "]";
  return s;
}

std::string name_word_str(const FiniteAlgebra& alg,
                          const std::vector<int>& word) {
  std::string s = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ", ";
    s += alg.ops[static_cast<std::size_t>(word[i])].name;
  }
  s += "]";
  return s;
}

Interpretation<BigInt> interp_for(const std::string& ops) {
  if (ops == "none") return empty_interpretation();
  if (ops == "add") return integer_interpretation(false);
  return integer_interpretation(true);  // add-mul
}

struct ColoringChoice {
  std::string canonical;
  Coloring<BigInt> fn;
};

ColoringChoice parse_coloring(const std::string& expr) {
  std::istringstream in(expr);
  std::vector<std::string> tok;
  std::string t;
  while (in >> t) tok.push_back(t);
  auto bad = [&expr]() -> ColoringChoice {
    raise(ErrorKind::ParseError,
          "coloring '" + expr +
              "' is not in the menu: 'even', 'odd', 'mod <m> == <r>', "
              "'in <list>'");
  };
  if (tok.size() == 1 && tok[0] == "even") {
    return {"even", [](const BigInt& v) { return v % 2 == 0 ? 1 : 0; }};
  }
  if (tok.size() == 1 && tok[0] == "odd") {
    return {"odd", [](const BigInt& v) { return v % 2 != 0 ? 1 : 0; }};
  }
  if (tok.size() == 4 && tok[0] == "mod" && tok[2] == "==") {
    BigInt m = parse_big(tok[1]);
    BigInt r = parse_big(tok[3]);
    if (m < 1 || r < 0 || r >= m) bad();
    return {"mod " + m.str() + " == " + r.str(),
            [m, r](const BigInt& v) {
              BigInt c = v % m;
              if (c < 0) c += m;
              return c == r ? 1 : 0;
            }};
  }
  if (tok.size() >= 2 && tok[0] == "in") {
    std::string rest;
    for (std::size_t i = 1; i < tok.size(); ++i) rest += tok[i];
    std::vector<BigInt> values = parse_big_list(rest);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::string canon = "in ";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) canon += ",";
      canon += values[i].str();
    }
    return {canon, [values](const BigInt& v) {
              return std::binary_search(values.begin(), values.end(), v) ? 1
                                                                         : 0;
            }};
  }
  return bad();
}

FiniteAlgebra load_algebra(const std::string& path) {
  ParsedInput input = parse_input_file(path);
  if (!input.algebra) {
    raise(ErrorKind::ParseError,
          path + ": expected an algebra file (leading 'carrier'), found a "
                 "residue system");
  }
  return *input.algebra;
}

ResidueUnarySystem load_residue(const std::string& path) {
  ParsedInput input = parse_input_file(path);
  if (!input.residue) {
    raise(ErrorKind::ParseError,
          path + ": expected a residue system (leading 'modulus'), found an "
                 "algebra");
  }
  return *input.residue;
}

std::vector<BitVector> load_bitvectors(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::ParseError, path + ": cannot open file");
  }
  std::vector<BitVector> out;
  std::string token;
  int line = 1;
  char c;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    BitVector v;
    v.reserve(cur.size());
    for (char b : cur) {
      if (b != '0' && b != '1') {
        raise(ErrorKind::ParseError,
              path + ":" + std::to_string(line) +
                  ": vectors are strings over {0,1}, got '" + cur + "'");
      }
      v.push_back(b == '1' ? 1 : 0);
    }
    out.push_back(std::move(v));
    cur.clear();
  };
  while (in.get(c)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      if (c == '\n') ++line;
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

std::string bit_str(const BitVector& v) {
  std::string s;
  s.reserve(v.size());
  for (auto b : v) s += b ? '1' : '0';
  return s;
}

void verify(bool ok, const std::string& what) {
  if (!ok) {
    raise(ErrorKind::EquivalenceViolation,
          "certificate failed re-verification: " + what);
  }
}

Report run_decide_finite(const std::string& path) {
  FiniteAlgebra alg = load_algebra(path);
  FiniteVerdict v = decide_finite_ramsey(alg);
  Report r;
  r.add("verb", "decide-finite");
  r.add("input", path);
  r.add("carrier", std::to_string(alg.carrier_size));
  r.add("verdict", v.ramsey ? "Ramsey" : "NotRamsey");
  if (v.ramsey) {
    Interpretation<int> interp = algebra_interpretation(alg);
    ElementSet idem = idempotents(alg);
    std::string certs = "[";
    for (std::size_t i = 0; i < v.reach.size(); ++i) {
      const auto& cert = v.reach[i];
      std::vector<int> args(static_cast<std::size_t>(term_arity(cert.term)),
                            cert.generator);
      verify(evaluate_term(cert.term, interp, std::span<const int>(args)) ==
                 cert.idempotent,
             "term value for generator " + std::to_string(cert.generator));
      verify(std::binary_search(idem.begin(), idem.end(), cert.idempotent),
             "idempotent for generator " + std::to_string(cert.generator));
      if (i) certs += ", ";
      certs += "{generator: " + std::to_string(cert.generator) +
               ", idempotent: " + std::to_string(cert.idempotent) +
               ", term: " + format_term(cert.term, interp.sig) + "}";
    }
    certs += "]";
    r.add("certificates", certs);
    r.add("verified", "true");
  } else {
    ElementSet idem = idempotents(alg);
    ElementSet gen = generated_subuniverse(alg, v.culprit);
    bool disjoint = true;
    for (int e : gen)
      if (std::binary_search(idem.begin(), idem.end(), e)) disjoint = false;
    verify(disjoint, "culprit's generated subuniverse avoids idempotents");
    r.add("culprit", std::to_string(v.culprit));
    r.add("culprit_generates", int_list_str(gen));
    r.add("idempotents", int_list_str(idem));
    r.add("verified", "true");
    r.exit_code = 2;
  }
  return r;
}

Report run_crosscheck(const std::string& path, int cap) {
  FiniteAlgebra alg = load_algebra(path);
  CrosscheckReport c = crosscheck_finite_theorem(alg, cap, true);
  Report r;
  r.add("verb", "crosscheck");
  r.add("input", path);
  r.add("cap", std::to_string(cap));
  r.add("via_generated", c.via_generated ? "true" : "false");
  r.add("via_degenerate", c.via_degenerate ? "true" : "false");
  r.add("via_subalgebras", c.via_subalgebras ? "true" : "false");
  r.add("verdict", c.ramsey ? "Ramsey" : "NotRamsey");
  std::string probes = "[";
  for (std::size_t i = 0; i < c.probes.size(); ++i) {
    if (i) probes += ", ";
    probes += "{generator: " + std::to_string(c.probes[i].generator) +
              ", found: " + (c.probes[i].found ? "true" : "false") + "}";
  }
  probes += "]";
  r.add("probes", probes);
  r.note(
      "probes run a bounded homogeneous search on a constant prefix; a hit "
      "is evidence, a miss proves nothing");
  r.exit_code = c.ramsey ? 0 : 2;
  return r;
}

Report run_decide_unary(const std::string& path) {
  FiniteAlgebra alg = load_algebra(path);
  UnaryVerdict v = decide_unary_finite(alg);
  Report r;
  r.add("verb", "decide-unary");
  r.add("input", path);
  r.add("verdict", v.ramsey ? "Ramsey" : "NotRamsey");
  r.add("fixed_point_set", int_list_str(v.s));
  if (v.ramsey) {
    std::string words = "[";
    for (int a = 0; a < alg.carrier_size; ++a) {
      int cur = a;
      for (int op : v.words[static_cast<std::size_t>(a)])
        cur = alg.ops[static_cast<std::size_t>(op)]
                  .table[static_cast<std::size_t>(cur)];
      verify(std::binary_search(v.s.begin(), v.s.end(), cur),
             "word for element " + std::to_string(a));
      if (a) words += ", ";
      words += "{element: " + std::to_string(a) +
               ", word: " + name_word_str(alg, v.words[static_cast<std::size_t>(a)]) +
               ", lands_on: " + std::to_string(cur) + "}";
    }
    words += "]";
    r.add("words", words);
    r.add("verified", "true");
  } else {
    r.add("culprit", std::to_string(v.culprit));
    r.exit_code = 2;
  }
  return r;
}

Report run_decide_residue(const std::string& path) {
  ResidueUnarySystem sys = load_residue(path);
  ResidueVerdict v = decide_unary_residue(sys);
  Report r;
  r.add("verb", "decide-residue");
  r.add("input", path);
  r.add("modulus", std::to_string(sys.modulus));
  r.add("verdict", v.ramsey ? "Ramsey" : "NotRamsey");
  r.add("fixed_classes", int_list_str(v.s_classes));
  if (v.ramsey) {
    std::string words = "[";
    for (int c = 0; c < sys.modulus; ++c) {
      int cur = c;
      for (int op : v.words[static_cast<std::size_t>(c)]) {
        long long t =
            (cur + sys.shifts[static_cast<std::size_t>(op)]
                       [static_cast<std::size_t>(cur)]) %
            sys.modulus;
        cur = static_cast<int>(t < 0 ? t + sys.modulus : t);
      }
      verify(std::binary_search(v.s_classes.begin(), v.s_classes.end(), cur),
             "word for class " + std::to_string(c));
      if (c) words += ", ";
      words += "{class: " + std::to_string(c) +
               ", ops: " + int_list_str(v.words[static_cast<std::size_t>(c)]) +
               ", lands_on: " + std::to_string(cur) + "}";
    }
    words += "]";
    r.add("class_words", words);
    r.add("verified", "true");
  } else {
    r.add("culprit_class", std::to_string(v.culprit_class));
    r.exit_code = 2;
  }
  return r;
}

Report run_katetov(const std::string& path) {
  FiniteAlgebra alg = load_algebra(path);
  int op_index = -1;
  for (std::size_t i = 0; i < alg.ops.size(); ++i) {
    if (alg.ops[i].arity == 1) {
      op_index = static_cast<int>(i);
      break;
    }
  }
  if (op_index < 0) {
    raise(ErrorKind::ArityMismatch, path + ": no unary operation to partition against");
  }
  const Operation& op = alg.ops[static_cast<std::size_t>(op_index)];
  Partition3 p = katetov_partition(alg.carrier_size, op.table);
  verify(partition_separates(p, op.table), "partition separates the map");
  Report r;
  r.add("verb", "katetov");
  r.add("input", path);
  r.add("op", op.name);
  r.add("partition", int_list_str(p.part));
  for (int part = 1; part <= 3; ++part) {
    std::vector<int> members;
    for (int a = 0; a < alg.carrier_size; ++a)
      if (p.part[static_cast<std::size_t>(a)] == part) members.push_back(a);
    r.add("part" + std::to_string(part), int_list_str(members));
  }
  r.add("separated", "true");
  return r;
}

Report run_partition_discriminating(const std::string& path) {
  FiniteAlgebra alg = load_algebra(path);
  std::vector<int> unary;
  for (std::size_t i = 0; i < alg.ops.size(); ++i)
    if (alg.ops[i].arity == 1) unary.push_back(static_cast<int>(i));
  ElementSet s = fixed_by_all(alg, unary);
  Partition3 p = build_discriminating_partition(alg, unary);
  for (int a = 0; a < alg.carrier_size; ++a) {
    if (std::binary_search(s.begin(), s.end(), a)) continue;
    bool moved_out = false;
    for (int i : unary) {
      int image = alg.ops[static_cast<std::size_t>(i)]
                      .table[static_cast<std::size_t>(a)];
      if (p.part[static_cast<std::size_t>(image)] !=
          p.part[static_cast<std::size_t>(a)]) {
        moved_out = true;
        break;
      }
    }
    verify(moved_out, "element " + std::to_string(a) +
                          " leaves its part under some unary op");
  }
  Report r;
  r.add("verb", "partition-discriminating");
  r.add("input", path);
  std::string names = "[";
  for (std::size_t i = 0; i < unary.size(); ++i) {
    if (i) names += ", ";
    names += alg.ops[static_cast<std::size_t>(unary[i])].name;
  }
  names += "]";
  r.add("unary_ops", names);
  r.add("fixed_point_set", int_list_str(s));
  r.add("partition", int_list_str(p.part));
  r.add("discriminates", "true");
  r.note(
      "the partition certifies only this finite construction; no claim "
      "about sequences over the full algebra is implied");
  return r;
}

Report run_fr(const std::vector<std::string>& prefix_tokens,
              const std::string& ops, int cap) {
  std::vector<BigInt> prefix = parse_prefix(prefix_tokens);
  Interpretation<BigInt> interp = interp_for(ops);
  std::vector<BigInt> fr =
      finite_reductions<BigInt>(interp, std::span<const BigInt>(prefix), cap);
  Report r;
  r.add("verb", "fr");
  r.add("prefix", big_list_str(prefix, kDisplayLimit));
  r.add("ops", ops);
  r.add("cap", std::to_string(cap));
  r.add("display_limit", std::to_string(kDisplayLimit));
  r.add("count", std::to_string(fr.size()));
  bool truncated = false;
  r.add("values", big_list_str(fr, kDisplayLimit, &truncated));
  if (truncated) r.note("value list truncated to the display limit");
  return r;
}

Report run_reduce_check(const std::vector<std::string>& prefix_tokens,
                        const std::string& target_csv, const std::string& ops,
                        int cap) {
  std::vector<BigInt> source = parse_prefix(prefix_tokens);
  std::vector<BigInt> target = parse_big_list(target_csv);
  Interpretation<BigInt> interp = interp_for(ops);
  auto schedule = is_reduction_prefix<BigInt>(
      std::span<const BigInt>(target), std::span<const BigInt>(source),
      interp, cap);
  Report r;
  r.add("verb", "reduce-check");
  r.add("source", big_list_str(source, kDisplayLimit));
  r.add("target", big_list_str(target, kDisplayLimit));
  r.add("ops", ops);
  r.add("cap", std::to_string(cap));
  if (schedule) {
    Prefix<BigInt> again = apply_schedule<BigInt>(
        *schedule, interp, std::span<const BigInt>(source));
    verify(again == target, "schedule reproduces the target");
    r.add("found", "true");
    r.add("schedule", format_schedule(*schedule, interp.sig));
    r.add("verified", "true");
  } else {
    r.add("found", "false");
    r.note("no schedule within the node cap; larger caps may still succeed");
    r.exit_code = 2;
  }
  return r;
}

Report run_search_homogeneous(const std::vector<std::string>& prefix_tokens,
                              const std::string& coloring_expr,
                              const std::string& ops, int target_len,
                              int cap) {
  std::vector<BigInt> source = parse_prefix(prefix_tokens);
  ColoringChoice coloring = parse_coloring(coloring_expr);
  Interpretation<BigInt> interp = interp_for(ops);
  auto hit = search_homogeneous<BigInt>(interp,
                                        std::span<const BigInt>(source),
                                        coloring.fn, target_len, cap);
  Report r;
  r.add("verb", "search-homogeneous");
  r.add("source", big_list_str(source, kDisplayLimit));
  r.add("coloring", coloring.canonical);
  r.add("ops", ops);
  r.add("target_len", std::to_string(target_len));
  r.add("cap", std::to_string(cap));
  if (hit) {
    Prefix<BigInt> again = apply_schedule<BigInt>(
        hit->schedule, interp, std::span<const BigInt>(source));
    verify(again == hit->prefix, "schedule reproduces the prefix");
    std::vector<BigInt> fr = finite_reductions<BigInt>(
        interp, std::span<const BigInt>(hit->prefix), cap);
    for (const auto& v : fr)
      verify(coloring.fn(v) == hit->color, "single-colored reductions");
    r.add("found", "true");
    r.add("prefix", big_list_str(hit->prefix, kDisplayLimit));
    r.add("schedule", format_schedule(hit->schedule, interp.sig));
    r.add("color", std::to_string(hit->color));
    bool truncated = false;
    r.add("reductions", big_list_str(fr, kDisplayLimit, &truncated));
    r.add("verified", "true");
    if (truncated) r.note("reduction list truncated to the display limit");
  } else {
    r.add("found", "false");
    r.exit_code = 2;
  }
  r.note(
      "homogeneity is judged on the bounded finite-reduction set of the "
      "returned prefix, one term per element under the node cap");
  return r;
}

Report run_witness(int n, const std::string& mode) {
  WitnessMode m = mode == "greedy" ? WitnessMode::Greedy : WitnessMode::Powers;
  WitnessSequence w = build_witness(n, m);
  Report r;
  r.add("verb", "witness");
  r.add("n", std::to_string(n));
  r.add("mode", mode);
  r.add("values", big_list_str(w.values, kDisplayLimit));
  return r;
}

Report run_sum_product_check(int n, const std::string& mode, int cap) {
  WitnessMode m = mode == "greedy" ? WitnessMode::Greedy : WitnessMode::Powers;
  WitnessSequence w = build_witness(n, m);
  SumProductReport s = check_sum_product_distinct(w, cap);
  Report r;
  r.add("verb", "sum-product-check");
  r.add("n", std::to_string(n));
  r.add("mode", mode);
  r.add("cap", std::to_string(cap));
  r.add("witness", big_list_str(w.values, kDisplayLimit));
  r.add("sum_instances", std::to_string(s.sum_instances));
  r.add("product_instances", std::to_string(s.product_instances));
  r.add("comparisons", std::to_string(s.comparisons));
  r.add("violations", std::to_string(s.violations));
  r.add("verdict", s.violations == 0 ? "sums and products never meet"
                                     : "collision found");
  r.exit_code = s.violations == 0 ? 0 : 2;
  return r;
}

Report run_demo_integral_domain(int n, int cap) {
  NonhomogeneityReport nh = nonhomogeneity_report(n, cap);
  Report r;
  r.add("verb", "demo-integral-domain");
  r.add("n", std::to_string(n));
  r.add("cap", std::to_string(cap));
  r.add("pair_count", std::to_string(nh.pair_count));
  r.add("sum_in_x", std::to_string(nh.sum_in_x));
  r.add("product_outside_x", std::to_string(nh.product_outside_x));
  r.add("violations", std::to_string(nh.violations));
  r.add("verdict", nh.violations == 0
                       ? "no homogeneous reduction at this scale"
                       : "homogeneity violation found");
  r.note(
      "every two-block reduction of the witness sums into the sum-shaped "
      "class and multiplies out of it; membership is decided on the "
      "polynomials, which the injective witness identifies with values");
  r.exit_code = nh.violations == 0 ? 0 : 2;
  return r;
}

Report run_demo_f2(const std::string& path, int width) {
  std::vector<BitVector> vectors = load_bitvectors(path);
  F2Reduction red = f2_reduce(vectors, width);
  Interpretation<BitVector> interp = f2_interpretation();
  std::vector<BitVector> normalized;
  normalized.reserve(vectors.size());
  for (const auto& v : vectors) {
    BitVector norm(static_cast<std::size_t>(width), 0);
    for (std::size_t i = 0;
         i < std::min(v.size(), static_cast<std::size_t>(width)); ++i)
      norm[i] = v[i];
    normalized.push_back(std::move(norm));
  }
  Prefix<BitVector> again = apply_schedule<BitVector>(
      red.schedule, interp, std::span<const BitVector>(normalized));
  verify(again == red.output, "schedule reproduces the output");
  bool all_zero = true;
  for (const auto& v : red.output)
    for (auto b : v)
      if (b) all_zero = false;
  verify(all_zero, "every output entry is zero");
  Report r;
  r.add("verb", "demo-f2");
  r.add("input", path);
  r.add("width", std::to_string(width));
  r.add("vectors", std::to_string(vectors.size()));
  r.add("steps", std::to_string(red.schedule.entries.size()));
  r.add("schedule", format_schedule(red.schedule, interp.sig));
  std::string outs = "[";
  int shown = std::min<int>(kDisplayLimit,
                            static_cast<int>(red.output.size()));
  for (int i = 0; i < shown; ++i) {
    if (i) outs += ", ";
    outs += bit_str(red.output[static_cast<std::size_t>(i)]);
  }
  if (shown < static_cast<int>(red.output.size())) outs += ", ...";
  outs += "]";
  r.add("output", outs);
  r.add("all_zero", "true");
  r.add("verified", "true");
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite Ramsey-algebra workbench"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
  };

  std::string path;
  int cap = kDefaultCap;
  int crosscheck_cap = 6;
  std::vector<std::string> prefix_tokens;
  std::string ops = "add";
  std::string target_csv;
  std::string coloring_expr;
  int target_len = 3;
  int witness_n = 3;
  std::string mode = "powers";
  int width = 1;

  auto add_ops = [&ops](CLI::App* sub) {
    sub->add_option("--ops", ops, "operation menu: none, add, add-mul")
        ->check(CLI::IsMember({"none", "add", "add-mul"}))
        ->capture_default_str();
  };
  auto add_cap = [&cap](CLI::App* sub) {
    sub->add_option("--cap", cap, "node cap per term")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  CLI::App* decide_finite =
      app.add_subcommand("decide-finite", "decide a finite algebra");
  decide_finite->add_option("file", path, "algebra file")->required();
  add_format(decide_finite);

  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "decide one algebra along three routes and compare");
  crosscheck->add_option("file", path, "algebra file")->required();
  crosscheck
      ->add_option("--cap", crosscheck_cap, "largest carrier checked")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(crosscheck);

  CLI::App* decide_unary =
      app.add_subcommand("decide-unary", "decide an all-unary algebra");
  decide_unary->add_option("file", path, "algebra file")->required();
  add_format(decide_unary);

  CLI::App* decide_residue = app.add_subcommand(
      "decide-residue", "decide a residue shift system on the nonnegative "
                        "integers");
  decide_residue->add_option("file", path, "residue file")->required();
  add_format(decide_residue);

  CLI::App* katetov = app.add_subcommand(
      "katetov", "3-partition separating a fixed-point-free unary map");
  katetov->add_option("file", path, "algebra file (first unary op is used)")
      ->required();
  add_format(katetov);

  CLI::App* discriminating = app.add_subcommand(
      "partition-discriminating",
      "partition under which every moved element can leave its part");
  discriminating->add_option("file", path, "algebra file (all unary ops)")
      ->required();
  add_format(discriminating);

  CLI::App* fr = app.add_subcommand(
      "fr", "finite reductions of an integer prefix");
  fr->add_option("prefix", prefix_tokens, "prefix entries")->required();
  add_ops(fr);
  add_cap(fr);
  add_format(fr);

  CLI::App* reduce_check = app.add_subcommand(
      "reduce-check", "find a schedule carrying one prefix onto another");
  reduce_check->add_option("prefix", prefix_tokens, "source entries")
      ->required();
  reduce_check
      ->add_option("--target", target_csv, "comma-separated target prefix")
      ->required();
  add_ops(reduce_check);
  add_cap(reduce_check);
  add_format(reduce_check);

  CLI::App* search = app.add_subcommand(
      "search-homogeneous",
      "first reduction prefix with single-colored bounded reductions");
  search->add_option("prefix", prefix_tokens, "source entries")->required();
  search
      ->add_option("--coloring", coloring_expr,
                   "menu: even | odd | mod <m> == <r> | in <list>")
      ->required();
  search->add_option("--target-len", target_len, "output prefix length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_ops(search);
  add_cap(search);
  add_format(search);

  CLI::App* witness = app.add_subcommand(
      "witness", "integer sequence separating monotone polynomials");
  witness->add_option("--n", witness_n, "length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  witness->add_option("--mode", mode, "greedy or powers")
      ->check(CLI::IsMember({"greedy", "powers"}))
      ->capture_default_str();
  add_format(witness);

  CLI::App* spc = app.add_subcommand(
      "sum-product-check",
      "census of block sums against block products on a witness");
  spc->add_option("--n", witness_n, "witness length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spc->add_option("--mode", mode, "greedy or powers")
      ->check(CLI::IsMember({"greedy", "powers"}))
      ->capture_default_str();
  add_cap(spc);
  add_format(spc);

  CLI::App* demo_id = app.add_subcommand(
      "demo-integral-domain",
      "two-block reductions of the powers witness all split across the "
      "sum-shaped class");
  demo_id->add_option("--n", witness_n, "witness length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_cap(demo_id);
  add_format(demo_id);

  CLI::App* demo_f2 = app.add_subcommand(
      "demo-f2", "annihilating schedule over xor/and bit vectors");
  demo_f2->add_option("file", path, "file of 0/1 strings")->required();
  demo_f2->add_option("--width", width, "coordinates carrying support")
      ->check(CLI::PositiveNumber)
      ->required();
  add_format(demo_f2);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ramal");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Report report;
    if (*decide_finite) {
      report = run_decide_finite(path);
    } else if (*crosscheck) {
      report = run_crosscheck(path, crosscheck_cap);
    } else if (*decide_unary) {
      report = run_decide_unary(path);
    } else if (*decide_residue) {
      report = run_decide_residue(path);
    } else if (*katetov) {
      report = run_katetov(path);
    } else if (*discriminating) {
      report = run_partition_discriminating(path);
    } else if (*fr) {
      report = run_fr(prefix_tokens, ops, cap);
    } else if (*reduce_check) {
      report = run_reduce_check(prefix_tokens, target_csv, ops, cap);
    } else if (*search) {
      report = run_search_homogeneous(prefix_tokens, coloring_expr, ops,
                                      target_len, cap);
    } else if (*witness) {
      report = run_witness(witness_n, mode);
    } else if (*spc) {
      report = run_sum_product_check(witness_n, mode, cap);
    } else if (*demo_id) {
      report = run_demo_integral_domain(witness_n, cap);
    } else if (*demo_f2) {
      report = run_demo_f2(path, width);
    }
    out << report.render(format == "structured");
    return report.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ramal
