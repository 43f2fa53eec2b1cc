#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ramal/error.hpp"

namespace ramal {

struct SignatureOp {
  std::string name;
  int arity = 0;
};

/// Operation symbols available for term formation. May be empty.
struct Signature {
  std::vector<SignatureOp> ops;

  /// Index of the named symbol, or -1.
  int find(const std::string& name) const;
};

/// {add/2, mul/2}.
Signature ring_signature();

/// A term tree over a signature in which every leaf is the single variable
/// and argument positions are consumed left to right, so a term of arity k
/// reads k consecutive arguments. The bare variable is the identity term.
class OrderlyTerm {
 public:
  OrderlyTerm() = default;  // identity

  static OrderlyTerm identity();
  static OrderlyTerm node(int op_index, std::vector<OrderlyTerm> children);

  bool is_identity() const { return op_ < 0; }
  int op() const { return op_; }
  const std::vector<OrderlyTerm>& children() const { return children_; }

  /// Preorder symbol sequence: identity leaf = 0, op i = i + 1.
  std::vector<int> preorder_key() const;

  bool operator==(const OrderlyTerm& other) const;

 private:
  int op_ = -1;
  std::vector<OrderlyTerm> children_;
};

/// Number of argument positions (identity has arity 1).
int term_arity(const OrderlyTerm& t);

/// Number of operation nodes (identity has 0).
int term_nodes(const OrderlyTerm& t);

/// Canonical order: node count, then preorder key lexicographically.
bool term_less(const OrderlyTerm& a, const OrderlyTerm& b);

/// Grafts `leaves[i]` onto the i-th identity leaf of `g` (left to right).
/// leaves.size() must equal term_arity(g).
OrderlyTerm substitute(const OrderlyTerm& g,
                       std::span<const OrderlyTerm> leaves);

/// All terms of the given arity with at most node_cap operation nodes,
/// sorted by term_less. Empty when no term fits.
std::vector<OrderlyTerm> enumerate_terms(const Signature& sig,
                                         int target_arity, int node_cap);

/// "x" for identity, otherwise name(child, ..., child).
std::string format_term(const OrderlyTerm& t, const Signature& sig);

OrderlyTerm parse_term(const std::string& text, const Signature& sig);

/// A signature together with one evaluation function per symbol.
template <class V>
struct Interpretation {
  Signature sig;
  std::vector<std::function<V(std::span<const V>)>> fns;
};

/// Evaluates `t` on exactly term_arity(t) arguments, splitting the span
/// into consecutive blocks matching the children's arities.
template <class V>
V evaluate_term(const OrderlyTerm& t, const Interpretation<V>& interp,
                std::span<const V> args) {
  if (static_cast<int>(args.size()) != term_arity(t)) {
    raise(ErrorKind::ArityMismatch,
          "term of arity " + std::to_string(term_arity(t)) + " applied to " +
              std::to_string(args.size()) + " arguments");
  }
  if (t.is_identity()) return args[0];
  std::vector<V> vals;
  vals.reserve(t.children().size());
  std::size_t offset = 0;
  for (const auto& child : t.children()) {
    auto k = static_cast<std::size_t>(term_arity(child));
    vals.push_back(evaluate_term(child, interp, args.subspan(offset, k)));
    offset += k;
  }
  return interp.fns[static_cast<std::size_t>(t.op())](vals);
}

}  // namespace ramal
