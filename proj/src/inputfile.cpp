#include "ramal/inputfile.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ramal/error.hpp"

namespace ramal {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

struct Tokenizer {
  const std::string& text;
  const std::string& origin;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  std::optional<Token> next() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
    if (pos >= text.size()) return std::nullopt;
    Token t;
    t.line = line;
    t.col = col;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      t.text += text[pos];
      advance();
    }
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& what) {
    raise(ErrorKind::ParseError, origin + ":" + std::to_string(at.line) +
                                     ":" + std::to_string(at.col) + ": " +
                                     what);
  }

  [[noreturn]] void fail_eof(const std::string& what) {
    raise(ErrorKind::ParseError, origin + ":" + std::to_string(line) + ":" +
                                     std::to_string(col) +
                                     ": unexpected end of input; " + what);
  }

  Token expect(const std::string& what) {
    auto t = next();
    if (!t) fail_eof("expected " + what);
    return *t;
  }

  long long expect_int(const std::string& what) {
    Token t = expect(what);
    std::size_t i = t.text[0] == '-' ? 1 : 0;
    if (i >= t.text.size()) fail(t, "expected an integer for " + what);
    for (; i < t.text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
        fail(t, "expected an integer for " + what + ", got '" + t.text + "'");
    }
    errno = 0;
    long long v = std::strtoll(t.text.c_str(), nullptr, 10);
    if (errno != 0) fail(t, "integer out of range: '" + t.text + "'");
    return v;
  }
};

FiniteAlgebra parse_algebra(Tokenizer& tz, long long carrier) {
  if (carrier < 1 || carrier > 1000000) {
    raise(ErrorKind::ParseError,
          tz.origin + ": carrier size " + std::to_string(carrier) +
              " outside 1..1000000");
  }
  FiniteAlgebra alg;
  alg.carrier_size = static_cast<int>(carrier);
  while (true) {
    auto t = tz.next();
    if (!t) break;
    if (t->text != "op") tz.fail(*t, "expected 'op', got '" + t->text + "'");
    Operation op;
    op.name = tz.expect("an operation name").text;
    long long arity = tz.expect_int("the arity");
    if (arity < 1 || arity > 16) {
      raise(ErrorKind::ParseError,
            tz.origin + ": arity " + std::to_string(arity) +
                " outside 1..16 for op '" + op.name + "'");
    }
    op.arity = static_cast<int>(arity);
    double entries_d = 1;
    for (int i = 0; i < op.arity; ++i) entries_d *= carrier;
    if (entries_d > 1e7) {
      raise(ErrorKind::ParseError,
            tz.origin + ": op '" + op.name + "' would need " +
                std::to_string(entries_d) + " table entries");
    }
    auto entries = static_cast<std::size_t>(entries_d);
    op.table.reserve(entries);
    for (std::size_t i = 0; i < entries; ++i) {
      op.table.push_back(static_cast<int>(
          tz.expect_int("table entry " + std::to_string(i) + " of op '" +
                        op.name + "'")));
    }
    alg.ops.push_back(std::move(op));
  }
  validate_algebra(alg);
  return alg;
}

ResidueUnarySystem parse_residue(Tokenizer& tz, long long modulus) {
  if (modulus < 1 || modulus > 1000000) {
    raise(ErrorKind::ParseError,
          tz.origin + ": modulus " + std::to_string(modulus) +
              " outside 1..1000000");
  }
  ResidueUnarySystem sys;
  sys.modulus = static_cast<int>(modulus);
  while (true) {
    auto t = tz.next();
    if (!t) break;
    if (t->text != "shifts")
      tz.fail(*t, "expected 'shifts', got '" + t->text + "'");
    std::vector<long long> row;
    row.reserve(static_cast<std::size_t>(sys.modulus));
    for (int r = 0; r < sys.modulus; ++r)
      row.push_back(tz.expect_int("shift for class " + std::to_string(r)));
    sys.shifts.push_back(std::move(row));
  }
  validate_residue(sys);
  return sys;
}

}  // namespace

ParsedInput parse_input_text(const std::string& text,
                           const std::string& origin) {
  Tokenizer tz{text, origin};
  Token head = tz.expect("'carrier' or 'modulus'");
  ParsedInput parsed;
  if (head.text == "carrier") {
    parsed.algebra = parse_algebra(tz, tz.expect_int("the carrier size"));
  } else if (head.text == "modulus") {
    parsed.residue = parse_residue(tz, tz.expect_int("the modulus"));
  } else {
    tz.fail(head, "expected 'carrier' or 'modulus', got '" + head.text + "'");
  }
  return parsed;
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::ParseError, path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input_text(buffer.str(), path);
}

std::string print_algebra_file(const FiniteAlgebra& alg) {
  std::ostringstream out;
  out << "carrier " << alg.carrier_size << "\n";
  for (const auto& op : alg.ops) {
    out << "op " << op.name << " " << op.arity << "\n";
    std::size_t row = static_cast<std::size_t>(alg.carrier_size);
    for (std::size_t i = 0; i < op.table.size(); ++i) {
      out << op.table[i];
      out << ((i % row == row - 1) ? '\n' : ' ');
    }
    if (op.table.size() % row != 0) out << "\n";
  }
  return out.str();
}

std::string print_residue_file(const ResidueUnarySystem& sys) {
  std::ostringstream out;
  out << "modulus " << sys.modulus << "\n";
  for (const auto& row : sys.shifts) {
    out << "shifts";
    for (long long c : row) out << " " << c;
    out << "\n";
  }
  return out.str();
}

}  // namespace ramal
