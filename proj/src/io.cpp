#include "cremona/io.hpp"

#include <cctype>
#include <sstream>

namespace cremona {

namespace {

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ValidationError(ValidationKind::ParseError,
                            std::string("expected '") + c + "' at offset " +
                                std::to_string(pos) + " in '" + std::string(s) + "'");
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos)
      throw ValidationError(ValidationKind::ParseError,
                            "expected a number at offset " + std::to_string(start));
    // Rational literal: digits '/' digits as one token.
    if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
        std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    return std::string(s.substr(start, pos - start));
  }
  unsigned natural() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos)
      throw ValidationError(ValidationKind::ParseError, "expected an exponent");
    return static_cast<unsigned>(std::stoul(std::string(s.substr(start, pos - start))));
  }
};

struct PolyParser {
  Lexer& lex;
  const CoeffDomain& dom;
  int nvars;

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (lex.accept('+')) acc = acc + term();
      else if (lex.accept('-')) acc = acc - term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (lex.accept('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (lex.accept('^')) return base.pow(lex.natural());
    return base;
  }

  MultiPoly atom() {
    char c = lex.peek();
    if (c == '(') {
      lex.expect('(');
      MultiPoly inner = expr();
      lex.expect(')');
      return inner;
    }
    if (c == '-') {
      lex.expect('-');
      return -factor();
    }
    if (c == 'x') {
      lex.expect('x');
      unsigned idx = lex.natural();
      if (static_cast<int>(idx) >= nvars)
        throw ValidationError(ValidationKind::ParseError,
                              "variable x" + std::to_string(idx) + " out of range (n+1 = " +
                                  std::to_string(nvars) + ")");
      return MultiPoly::variable(dom, nvars, static_cast<int>(idx));
    }
    if (c == 't') {
      lex.expect('t');
      if (!dom.with_parameter)
        throw ValidationError(ValidationKind::ParseError,
                              "parameter t is not allowed in this context");
      return MultiPoly::parameter(dom, nvars);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Scalar s = Scalar::parse(dom.base, lex.number());
      return MultiPoly::constant(dom, nvars, s);
    }
    throw ValidationError(ValidationKind::ParseError,
                          std::string("unexpected character '") + c + "'");
  }
};

std::string tpoly_str(const TPoly& c);

// Renders one term, sign included, e.g. "-3/2*x0^2*x1" or "(t^2 - 1)*x1".
std::string term_str(const ExpVec& ev, const TPoly& c) {
  std::string mono;
  for (std::size_t i = 0; i < ev.e.size(); ++i) {
    if (ev.e[i] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += "x" + std::to_string(i);
    if (ev.e[i] > 1) mono += "^" + std::to_string(ev.e[i]);
  }
  std::size_t nonzero = 0, deg = 0;
  for (int k = 0; k <= c.degree(); ++k)
    if (!c.coeff(static_cast<std::size_t>(k)).is_zero()) {
      ++nonzero;
      deg = static_cast<std::size_t>(k);
    }
  std::string coeff;
  if (nonzero == 1) {
    Scalar s = c.coeff(deg);
    std::string base;
    if (deg == 0) {
      base = s.str();
      if (mono.empty()) return base;
      if (s.is_one()) return mono;
      if ((-s).is_one()) return "-" + mono;
      return base + "*" + mono;
    }
    std::string tpart = deg == 1 ? "t" : "t^" + std::to_string(deg);
    if (s.is_one()) base = tpart;
    else if ((-s).is_one()) base = "-" + tpart;
    else base = s.str() + "*" + tpart;
    return mono.empty() ? base : base + "*" + mono;
  }
  coeff = "(" + tpoly_str(c) + ")";
  return mono.empty() ? coeff : coeff + "*" + mono;
}

std::string join_terms(std::vector<std::string> pieces) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) { out = pieces[i]; continue; }
    if (!pieces[i].empty() && pieces[i][0] == '-')
      out += " - " + pieces[i].substr(1);
    else
      out += " + " + pieces[i];
  }
  return out;
}

std::string tpoly_str(const TPoly& c) {
  std::vector<std::string> pieces;
  for (int k = c.degree(); k >= 0; --k) {
    Scalar s = c.coeff(static_cast<std::size_t>(k));
    if (s.is_zero()) continue;
    if (k == 0) { pieces.push_back(s.str()); continue; }
    std::string tpart = k == 1 ? "t" : "t^" + std::to_string(k);
    if (s.is_one()) pieces.push_back(tpart);
    else if ((-s).is_one()) pieces.push_back("-" + tpart);
    else pieces.push_back(s.str() + "*" + tpart);
  }
  return join_terms(std::move(pieces));
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const CoeffDomain& dom, int nvars) {
  Lexer lex{text};
  PolyParser p{lex, dom, nvars};
  MultiPoly out = p.expr();
  if (!lex.eof())
    throw ValidationError(ValidationKind::ParseError,
                          "trailing input in polynomial '" + std::string(text) + "'");
  return out;
}

std::vector<MultiPoly> parse_tuple(std::string_view text, const CoeffDomain& dom,
                                   int nvars) {
  Lexer lex{text};
  lex.expect('[');
  std::vector<MultiPoly> comps;
  PolyParser p{lex, dom, nvars};
  comps.push_back(p.expr());
  while (lex.accept(':')) comps.push_back(p.expr());
  lex.expect(']');
  if (!lex.eof())
    throw ValidationError(ValidationKind::ParseError, "trailing input after tuple");
  return comps;
}

ParsedMap parse_map_text(std::string_view text, const CoeffDomain& dom, int nvars) {
  auto sep = text.find(";;");
  ParsedMap out;
  if (sep == std::string_view::npos) {
    out.components = parse_tuple(text, dom, nvars);
    return out;
  }
  out.components = parse_tuple(text.substr(0, sep), dom, nvars);
  std::string_view rest = text.substr(sep + 2);
  std::size_t i = 0;
  while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
  const std::string_view key = "inverse=";
  if (rest.substr(i, key.size()) != key)
    throw ValidationError(ValidationKind::ParseError,
                          "expected 'inverse=[...]' after ';;'");
  out.inverse = parse_tuple(rest.substr(i + key.size()), dom, nvars);
  return out;
}

Point parse_point(std::string_view text, const Field& f) {
  Lexer lex{text};
  lex.expect('[');
  std::vector<Scalar> coords;
  auto scalar_token = [&]() {
    bool neg = lex.accept('-');
    Scalar s = Scalar::parse(f, lex.number());
    return neg ? -s : s;
  };
  coords.push_back(scalar_token());
  while (lex.accept(':')) coords.push_back(scalar_token());
  lex.expect(']');
  if (!lex.eof())
    throw ValidationError(ValidationKind::ParseError, "trailing input after point");
  return Point::make(f, std::move(coords));
}

Matrix parse_matrix(std::string_view text, const Field& f) {
  std::vector<std::vector<Scalar>> rows;
  Lexer lex{text};
  auto scalar_token = [&]() {
    bool neg = lex.accept('-');
    Scalar s = Scalar::parse(f, lex.number());
    return neg ? -s : s;
  };
  rows.emplace_back();
  rows.back().push_back(scalar_token());
  while (!lex.eof()) {
    if (lex.accept(',')) rows.back().push_back(scalar_token());
    else if (lex.accept(';')) {
      rows.emplace_back();
      rows.back().push_back(scalar_token());
    } else
      throw ValidationError(ValidationKind::ParseError, "bad matrix syntax");
  }
  std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols)
      throw ValidationError(ValidationKind::ParseError, "ragged matrix rows");
  Matrix m(f, static_cast<int>(rows.size()), static_cast<int>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

std::string poly_str(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::string> pieces;
  for (const auto& [ev, c] : f.terms()) pieces.push_back(term_str(ev, c));
  return join_terms(std::move(pieces));
}

std::string MultiPoly::str() const { return poly_str(*this); }

std::string tuple_str(std::span<const MultiPoly> comps) {
  std::string out = "[";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += " : ";
    out += poly_str(comps[i]);
  }
  return out + "]";
}

std::string point_str(const Point& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) out += " : ";
    out += p.coords()[i].str();
  }
  return out + "]";
}

std::string matrix_str(const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) out += ";";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m.at(i, j).str();
    }
  }
  return out;
}

}  // namespace cremona
