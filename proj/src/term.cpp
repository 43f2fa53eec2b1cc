#include "ramal/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace ramal {

int Signature::find(const std::string& name) const {
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name == name) return static_cast<int>(i);
  return -1;
}

Signature ring_signature() { return Signature{{{"add", 2}, {"mul", 2}}}; }

OrderlyTerm OrderlyTerm::identity() { return OrderlyTerm{}; }

OrderlyTerm OrderlyTerm::node(int op_index,
                              std::vector<OrderlyTerm> children) {
  OrderlyTerm t;
  t.op_ = op_index;
  t.children_ = std::move(children);
  return t;
}

std::vector<int> OrderlyTerm::preorder_key() const {
  std::vector<int> key;
  std::vector<const OrderlyTerm*> stack{this};
  while (!stack.empty()) {
    const OrderlyTerm* t = stack.back();
    stack.pop_back();
    key.push_back(t->op_ + 1);
    for (auto it = t->children_.rbegin(); it != t->children_.rend(); ++it)
      stack.push_back(&*it);
  }
  return key;
}

bool OrderlyTerm::operator==(const OrderlyTerm& other) const {
  return op_ == other.op_ && children_ == other.children_;
}

int term_arity(const OrderlyTerm& t) {
  if (t.is_identity()) return 1;
  int total = 0;
  for (const auto& c : t.children()) total += term_arity(c);
  return total;
}

int term_nodes(const OrderlyTerm& t) {
  if (t.is_identity()) return 0;
  int total = 1;
  for (const auto& c : t.children()) total += term_nodes(c);
  return total;
}

bool term_less(const OrderlyTerm& a, const OrderlyTerm& b) {
  int na = term_nodes(a), nb = term_nodes(b);
  if (na != nb) return na < nb;
  return a.preorder_key() < b.preorder_key();
}

OrderlyTerm substitute(const OrderlyTerm& g,
                       std::span<const OrderlyTerm> leaves) {
  if (static_cast<int>(leaves.size()) != term_arity(g)) {
    raise(ErrorKind::ArityMismatch,
          "substitution into term of arity " +
              std::to_string(term_arity(g)) + " needs that many terms, got " +
              std::to_string(leaves.size()));
  }
  if (g.is_identity()) return leaves[0];
  std::vector<OrderlyTerm> rebuilt;
  rebuilt.reserve(g.children().size());
  std::size_t offset = 0;
  for (const auto& child : g.children()) {
    auto k = static_cast<std::size_t>(term_arity(child));
    rebuilt.push_back(substitute(child, leaves.subspan(offset, k)));
    offset += k;
  }
  return OrderlyTerm::node(g.op(), std::move(rebuilt));
}

namespace {

using TermList = std::vector<OrderlyTerm>;

struct TermTable {
  const Signature& sig;
  // (arity, nodes) -> terms with exactly those counts
  std::map<std::pair<int, int>, TermList> memo;

  const TermList& exact(int arity, int nodes) {
    auto key = std::make_pair(arity, nodes);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    TermList out;
    if (nodes == 0) {
      if (arity == 1) out.push_back(OrderlyTerm::identity());
    } else if (arity >= 1) {
      for (std::size_t oi = 0; oi < sig.ops.size(); ++oi) {
        int m = sig.ops[oi].arity;
        std::vector<OrderlyTerm> picked;
        build(static_cast<int>(oi), m, arity, nodes - 1, picked, out);
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  }

  // Fills children of op `oi`: `slots` children left, consuming exactly
  // `arity_left` arity and `nodes_left` nodes.
  void build(int oi, int slots, int arity_left, int nodes_left,
             std::vector<OrderlyTerm>& picked, TermList& out) {
    if (slots == 0) {
      if (arity_left == 0 && nodes_left == 0)
        out.push_back(OrderlyTerm::node(oi, picked));
      return;
    }
    // each remaining child consumes arity >= 1
    for (int a = 1; a <= arity_left - (slots - 1); ++a) {
      for (int nd = 0; nd <= nodes_left; ++nd) {
        const TermList& subs = exact(a, nd);
        for (const auto& sub : subs) {
          picked.push_back(sub);
          build(oi, slots - 1, arity_left - a, nodes_left - nd, picked, out);
          picked.pop_back();
        }
      }
    }
  }
};

}  // namespace

std::vector<OrderlyTerm> enumerate_terms(const Signature& sig,
                                         int target_arity, int node_cap) {
  if (target_arity < 1) {
    raise(ErrorKind::ArityMismatch,
          "term arity must be >= 1, got " + std::to_string(target_arity));
  }
  TermTable table{sig, {}};
  std::vector<OrderlyTerm> out;
  for (int nodes = 0; nodes <= node_cap; ++nodes) {
    const TermList& group = table.exact(target_arity, nodes);
    out.insert(out.end(), group.begin(), group.end());
  }
  std::sort(out.begin(), out.end(), term_less);
  return out;
}

std::string format_term(const OrderlyTerm& t, const Signature& sig) {
  if (t.is_identity()) return "x";
  std::string s = sig.ops[static_cast<std::size_t>(t.op())].name;
  s += '(';
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) s += ", ";
    first = false;
    s += format_term(c, sig);
  }
  s += ')';
  return s;
}

namespace {

struct TermParser {
  const std::string& text;
  const Signature& sig;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    raise(ErrorKind::ParseError,
          what + " at offset " + std::to_string(pos) + " in term '" + text +
              "'");
  }

  std::string read_name() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected a name");
    return text.substr(start, pos - start);
  }

  OrderlyTerm parse() {
    skip_ws();
    std::string name = read_name();
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') {
      if (name == "x") return OrderlyTerm::identity();
      fail("unknown leaf '" + name + "' (the only variable is x)");
    }
    int oi = sig.find(name);
    if (oi < 0) fail("unknown operation '" + name + "'");
    ++pos;  // '('
    std::vector<OrderlyTerm> children;
    while (true) {
      children.push_back(parse());
      skip_ws();
      if (pos >= text.size()) fail("unterminated argument list");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    int want = sig.ops[static_cast<std::size_t>(oi)].arity;
    if (static_cast<int>(children.size()) != want) {
      raise(ErrorKind::ArityMismatch,
            "operation '" + name + "' takes " + std::to_string(want) +
                " arguments, got " + std::to_string(children.size()));
    }
    return OrderlyTerm::node(oi, std::move(children));
  }
};

}  // namespace

OrderlyTerm parse_term(const std::string& text, const Signature& sig) {
  TermParser p{text, sig};
  OrderlyTerm t = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

}  // namespace ramal
