#include "naef/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace naef {

namespace {

struct Tokenizer {
  std::string_view text;
  size_t pos = 0;
  size_t line = 1;

  // Returns the next whitespace-separated token, or empty at end of input.
  // Skips comment lines wholesale.
  std::string_view next() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') {
        ++line;
        ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == 'c' && at_line_start()) {
        skip_line();
      } else {
        break;
      }
    }
    if (pos >= text.size()) return {};
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    return text.substr(start, pos - start);
  }

  bool at_line_start() const {
    return pos == 0 || text[pos - 1] == '\n';
  }

  void skip_line() {
    while (pos < text.size() && text[pos] != '\n') ++pos;
  }
};

int64_t parse_int(std::string_view tok, size_t line, const char* what) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw dimacs_error(line, std::string("invalid ") + what + " '" +
                                 std::string(tok) + "'");
  return value;
}

}  // namespace

Cnf parse_dimacs(std::string_view text) {
  Tokenizer tok{text};

  std::string_view t = tok.next();
  if (t != "p") throw dimacs_error(tok.line, "expected 'p cnf' header");
  if (tok.next() != "cnf") throw dimacs_error(tok.line, "expected 'p cnf' header");
  const int64_t n = parse_int(tok.next(), tok.line, "variable count");
  const int64_t m = parse_int(tok.next(), tok.line, "clause count");
  if (n < 0 || m < 0) throw dimacs_error(tok.line, "negative header counts");

  std::vector<Clause> clauses;
  clauses.reserve(static_cast<size_t>(m));
  Clause current;
  while (true) {
    t = tok.next();
    if (t.empty()) {
      if (!current.literals.empty())
        throw dimacs_error(tok.line, "unterminated clause at end of input");
      break;
    }
    const int64_t lit = parse_int(t, tok.line, "literal");
    if (lit == 0) {
      if (current.literals.empty())
        throw dimacs_error(tok.line, "empty clause");
      clauses.push_back(std::move(current));
      current = Clause{};
      continue;
    }
    const int64_t var = lit < 0 ? -lit : lit;
    if (var > n)
      throw dimacs_error(tok.line, "literal " + std::to_string(lit) +
                                       " out of range for " + std::to_string(n) +
                                       " variables");
    current.literals.push_back(
        Literal{static_cast<uint32_t>(var - 1), lit < 0});
  }
  if (clauses.size() != static_cast<size_t>(m))
    throw dimacs_error(tok.line,
                       "header declares " + std::to_string(m) + " clauses, found " +
                           std::to_string(clauses.size()));
  try {
    return Cnf(static_cast<uint32_t>(n), std::move(clauses));
  } catch (const std::invalid_argument& e) {
    throw dimacs_error(tok.line, e.what());
  }
}

void write_dimacs(const Cnf& f, std::ostream& os) {
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c.literals) {
      if (l.negated) os << '-';
      os << l.var + 1 << ' ';
    }
    os << "0\n";
  }
}

std::string write_dimacs(const Cnf& f) {
  std::ostringstream os;
  write_dimacs(f, os);
  return os.str();
}

}  // namespace naef
