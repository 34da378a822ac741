#include "jk/text_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "jk/errors.hpp"
#include "jk/rational.hpp"

namespace jk {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) {
    std::size_t line = 1, col = 1, i = 0;
    while (i < text.size()) {
      const char ch = text[i];
      if (ch == '\n') {
        ++line;
        col = 1;
        ++i;
      } else if (ch == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++col;
        ++i;
      } else {
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
        tokens_.push_back({text.substr(start, i - start), line, col});
        col += i - start;
      }
    }
    end_line_ = line;
    end_col_ = col;
  }

  bool done() const { return pos_ == tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

  Token next(const char* expected) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + expected, end_line_, end_col_);
    return tokens_[pos_++];
  }

  std::size_t count(const char* expected) {
    const Token t = next(expected);
    std::size_t v = 0;
    const auto* last = t.text.data() + t.text.size();
    const auto [ptr, ec] = std::from_chars(t.text.data(), last, v);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("expected " + std::string(expected) + ", got '" + std::string(t.text) + "'", t.line, t.column);
    }
    return v;
  }

  Rational rational() {
    const Token t = next("a rational");
    try {
      return parse_rational(t.text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), t.line, t.column);
    }
  }

  void literal(std::string_view word) {
    const Token t = next(std::string(word).c_str());
    if (t.text != word) {
      throw ParseError("expected '" + std::string(word) + "', got '" + std::string(t.text) + "'", t.line, t.column);
    }
  }

  void expect_end() const {
    if (!done()) {
      const Token& t = peek();
      throw ParseError("unexpected trailing token '" + std::string(t.text) + "'", t.line, t.column);
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t end_line_ = 1;
  std::size_t end_col_ = 1;
};

RatMatrix read_matrix(Lexer& lx) {
  const std::size_t rows = lx.count("row count");
  const std::size_t cols = lx.count("column count");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = lx.rational();
  }
  return m;
}

UnivarPoly read_poly(Lexer& lx) {
  const Token head = lx.peek();
  const std::size_t d = lx.count("degree");
  std::vector<Rational> c(d + 1);
  for (auto& x : c) x = lx.rational();
  if (d > 0 && is_zero(c.back())) throw ParseError("leading coefficient is zero", head.line, head.column);
  return UnivarPoly(std::move(c));
}

}  // namespace

RatMatrix parse_matrix(std::string_view text) {
  Lexer lx(text);
  RatMatrix m = read_matrix(lx);
  lx.expect_end();
  return m;
}

Vector parse_vector(std::string_view text) {
  Lexer lx(text);
  const Token head = lx.done() ? Token{"", 1, 1} : lx.peek();
  RatMatrix m = read_matrix(lx);
  lx.expect_end();
  if (m.cols() != 1) throw ParseError("a vector must have exactly one column", head.line, head.column);
  return m.column(0);
}

UnivarPoly parse_poly(std::string_view text) {
  Lexer lx(text);
  UnivarPoly p = read_poly(lx);
  lx.expect_end();
  return p;
}

FactoredCharPoly parse_factored(std::string_view text) {
  Lexer lx(text);
  FactoredCharPoly chi;
  while (!lx.done()) {
    const Token head = lx.peek();
    const std::size_t m = lx.count("multiplicity");
    lx.literal(":");
    UnivarPoly f = read_poly(lx);
    if (m == 0) throw ParseError("multiplicity must be positive", head.line, head.column);
    chi.factors.push_back({std::move(f), m});
  }
  if (chi.factors.empty()) throw ParseError("no factors given", 1, 1);
  return chi;
}

std::string format_matrix(const RatMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << to_string(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

std::string format_vector(const Vector& v) {
  return format_matrix(RatMatrix::from_columns(std::span<const Vector>(&v, 1), v.size()));
}

std::string format_poly(const UnivarPoly& p) {
  if (p.is_zero()) return "0 0";
  std::string s = std::to_string(p.degree());
  for (const auto& c : p.coefficients()) s += ' ' + to_string(c);
  return s;
}

std::string format_factored(const FactoredCharPoly& chi) {
  std::string s;
  for (const auto& fac : chi.factors) s += std::to_string(fac.multiplicity) + " : " + format_poly(fac.f) + '\n';
  return s;
}

std::string format_chain(const SymbolicChain& chain) {
  std::string s = "chain " + std::to_string(chain.length()) + '\n';
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    s += "p " + std::to_string(chain.length() - i) + '\n';
    for (const auto& e : chain.links[i].entries) s += format_poly(e) + '\n';
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace jk
