#pragma once

// The `.quiv` text format: algebras (explicit quiver with monomial relations,
// Nakayama constructors, or gluings of named components) and modules.
//
//   algebra A; vertices: 1 2; arrows: a: 2 -> 1; relations: ;
//   nakayama cyclic n=3 len=2
//   glue G { comp X = nakayama cyclic n=3 len=2; comp Y = ...; identify X.1 = Y.1;
//            connect X.2 -> Y.1 as c; triangles = 2; }
//   module M; dims: 1 1 0; map a1 = [[1]];
//
// Names are words over [A-Za-z0-9_'] or double-quoted strings. `#` starts a
// comment running to the end of the line. Scalars are integers or p/q.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gprojlab/glue.hpp"

namespace gprojlab {

class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason)
      : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
        line_(line),
        column_(column),
        reason_(reason) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_, column_;
  std::string reason_;
};

namespace qspec_detail {

enum class Tok { Word, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1, column = 1;
};

inline bool word_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; }

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (word_char(c)) {
      std::size_t j = i;
      while (j < src.size() && word_char(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Word;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      std::string text;
      while (j < src.size() && src[j] != '"') {
        if (src[j] == '\n') throw ParseError(line, col, "unterminated string");
        if (src[j] == '\\' && j + 1 < src.size()) ++j;
        text.push_back(src[j]);
        ++j;
      }
      if (j >= src.size()) throw ParseError(line, col, "unterminated string");
      if (text.empty()) throw ParseError(line, col, "empty name");
      t.kind = Tok::String;
      t.text = text;
      advance(j + 1 - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      t.kind = Tok::Punct;
      t.text = "->";
      advance(2);
    } else if (std::string_view(";:,.=[]{}-/").find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, static_cast<char>(c));
      advance(1);
    } else {
      std::ostringstream msg;
      if (c < 0x20 || c >= 0x7f)
        msg << "unexpected byte 0x" << std::hex << static_cast<int>(c);
      else
        msg << "unexpected character '" << static_cast<char>(c) << "'";
      throw ParseError(line, col, msg.str());
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

constexpr std::size_t kMaxConstructorSize = 64;

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const Token& t, const std::string& why) const { throw ParseError(t.line, t.column, why); }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::String: return "\"" + t.text + "\"";
      default: return "'" + t.text + "'";
    }
  }

  bool is_punct(const std::string& p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool is_keyword(const std::string& w, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Word && peek(ahead).text == w;
  }

  const Token& expect_punct(const std::string& p) {
    if (!is_punct(p)) fail(peek(), "expected '" + p + "', found " + describe(peek()));
    return next();
  }
  const Token& expect_keyword(const std::string& w) {
    if (!is_keyword(w)) fail(peek(), "expected '" + w + "', found " + describe(peek()));
    return next();
  }
  bool accept_punct(const std::string& p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }

  const Token& name() {
    if (peek().kind != Tok::Word && peek().kind != Tok::String) fail(peek(), "expected a name, found " + describe(peek()));
    return next();
  }

  std::size_t integer(std::size_t max) {
    const Token& t = peek();
    if (t.kind != Tok::Word || t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](unsigned char c) { return std::isdigit(c); }))
      fail(t, "expected a nonnegative integer, found " + describe(t));
    if (t.text.size() > 6 || std::stoul(t.text) > max) fail(t, "integer " + t.text + " exceeds the limit " + std::to_string(max));
    next();
    return std::stoul(t.text);
  }

  /// [-] digits [/ digits]; floats and other words are rejected.
  template <class K>
  K scalar() {
    const Token start = peek();
    std::string text;
    if (accept_punct("-")) text = "-";
    const Token& num = peek();
    if (num.kind != Tok::Word) fail(num, "expected a scalar, found " + describe(num));
    text += num.text;
    next();
    if (is_punct(".") && peek(1).kind == Tok::Word) fail(start, "floating literals are not accepted; write p/q");
    if (accept_punct("/")) {
      const Token& den = peek();
      if (den.kind != Tok::Word) fail(den, "expected a denominator, found " + describe(den));
      text += "/" + den.text;
      next();
    }
    if (std::isdigit(static_cast<unsigned char>(num.text[0])) && num.text.find_first_of("eE") != std::string::npos)
      fail(start, "floating literals are not accepted; write p/q");
    try {
      return FieldTraits<K>::parse(text);
    } catch (const std::invalid_argument& e) {
      fail(start, e.what());
    }
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline AlgebraPtr parse_raw(Cursor& c, std::string& name_out) {
  c.expect_keyword("algebra");
  name_out = c.name().text;
  c.expect_punct(";");
  Quiver q;
  c.expect_keyword("vertices");
  c.expect_punct(":");
  while (!c.is_punct(";")) {
    const Token& v = c.name();
    if (q.find_vertex(v.text)) c.fail(v, "duplicate vertex '" + v.text + "'");
    q.add_vertex(v.text);
  }
  c.expect_punct(";");
  c.expect_keyword("arrows");
  c.expect_punct(":");
  if (!c.is_punct(";")) {
    do {
      const Token& a = c.name();
      c.expect_punct(":");
      const Token& s = c.name();
      c.expect_punct("->");
      const Token& t = c.name();
      if (q.find_arrow(a.text)) c.fail(a, "duplicate arrow '" + a.text + "'");
      auto sv = q.find_vertex(s.text), tv = q.find_vertex(t.text);
      if (!sv) c.fail(s, "unknown vertex '" + s.text + "'");
      if (!tv) c.fail(t, "unknown vertex '" + t.text + "'");
      q.add_arrow(a.text, *sv, *tv);
    } while (c.accept_punct(","));
  }
  c.expect_punct(";");
  MonomialIdeal ideal;
  if (c.is_keyword("relations")) {
    c.next();
    c.expect_punct(":");
    if (!c.is_punct(";")) {
      do {
        const Token start = c.peek();
        std::vector<std::size_t> arrows;
        do {
          const Token& a = c.name();
          auto idx = q.find_arrow(a.text);
          if (!idx) c.fail(a, "unknown arrow '" + a.text + "'");
          arrows.push_back(*idx);
        } while (c.accept_punct("."));
        for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
          if (q.arrow(arrows[k]).target != q.arrow(arrows[k + 1]).source)
            c.fail(start, "relation is not a path: '" + q.arrow(arrows[k]).label + "' does not end where '" +
                              q.arrow(arrows[k + 1]).label + "' starts");
        if (arrows.size() < 2) c.fail(start, "relations must have length at least 2");
        ideal.generators.push_back(make_path(q, arrows));
      } while (c.accept_punct(","));
    }
    c.expect_punct(";");
  }
  return build_algebra(std::move(q), std::move(ideal));
}

inline AlgebraPtr parse_nakayama(Cursor& c) {
  c.expect_keyword("nakayama");
  const Token kind = c.peek();
  auto param = [&](const std::string& key) {
    c.expect_keyword(key);
    c.expect_punct("=");
    return c.integer(kMaxConstructorSize);
  };
  AlgebraPtr out;
  if (c.is_keyword("cyclic")) {
    c.next();
    const Token at = c.peek();
    auto n = param("n");
    auto len = param("len");
    if (n < 1) c.fail(at, "nakayama cyclic needs n >= 1");
    if (len < 2) c.fail(at, "nakayama cyclic needs len >= 2");
    out = nakayama_cyclic(n, len);
  } else if (c.is_keyword("linear")) {
    c.next();
    const Token at = c.peek();
    auto n = param("n");
    if (n < 1) c.fail(at, "nakayama linear needs n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> rels;
    if (c.is_keyword("len")) {
      const Token lt = c.peek();
      auto len = param("len");
      if (len < 2) c.fail(lt, "nakayama linear needs len >= 2");
      for (std::size_t s = len + 1; s <= n; ++s) rels.emplace_back(s, len);
    }
    out = nakayama_linear(n, rels);
  } else {
    c.fail(kind, "expected 'cyclic' or 'linear', found " + Cursor::describe(kind));
  }
  c.accept_punct(";");
  return out;
}

}  // namespace qspec_detail

struct ParsedAlgebra {
  enum class Kind { Raw, Nakayama, Glue };
  Kind kind = Kind::Raw;
  std::string name;
  AlgebraPtr algebra;
  std::optional<GluingSpec> gluing;
  std::optional<GluingTree> tree;
};

namespace qspec_detail {

inline GluingSpec parse_glue(Cursor& c) {
  GluingSpec spec;
  c.expect_keyword("glue");
  spec.name = c.name().text;
  c.expect_punct("{");
  auto vertex_ref = [&](std::string& comp, std::string& vertex) {
    const Token& ct = c.name();
    comp = ct.text;
    bool known = false;
    for (const auto& [n, alg] : spec.components)
      if (n == comp) {
        known = true;
        c.expect_punct(".");
        const Token& vt = c.name();
        if (!alg->quiver().find_vertex(vt.text)) c.fail(vt, "component '" + comp + "' has no vertex '" + vt.text + "'");
        vertex = vt.text;
      }
    if (!known) c.fail(ct, "unknown component '" + comp + "'");
  };
  // Tracks connected pieces so every step is checked where it is written.
  std::map<std::string, std::size_t> piece;
  auto join = [&](const Token& at, const std::string& a, const std::string& b) {
    const std::size_t pa = piece[a], pb = piece[b];
    if (pa == pb) c.fail(at, "'" + a + "' and '" + b + "' are already joined; each step must join two different pieces");
    for (auto& [n, p] : piece)
      if (p == pb) p = pa;
  };
  while (!c.is_punct("}")) {
    const Token kw = c.peek();
    if (c.is_keyword("comp")) {
      c.next();
      const Token& nt = c.name();
      for (const auto& [n, a] : spec.components)
        if (n == nt.text) c.fail(nt, "duplicate component '" + nt.text + "'");
      const std::string name = nt.text;
      c.expect_punct("=");
      AlgebraPtr alg;
      if (c.is_keyword("nakayama")) {
        alg = parse_nakayama(c);
      } else if (c.accept_punct("{")) {
        std::string inner;
        alg = parse_raw(c, inner);
        c.expect_punct("}");
        c.accept_punct(";");
      } else {
        c.fail(c.peek(), "expected a component algebra, found " + Cursor::describe(c.peek()));
      }
      piece[name] = spec.components.size();
      spec.components.emplace_back(name, alg);
    } else if (c.is_keyword("identify") || c.is_keyword("connect")) {
      const bool identify = c.is_keyword("identify");
      c.next();
      GluingStep step;
      step.kind = identify ? GluingStep::Kind::Identify : GluingStep::Kind::Connect;
      vertex_ref(step.comp1, step.vertex1);
      c.expect_punct(identify ? "=" : "->");
      vertex_ref(step.comp2, step.vertex2);
      if (!identify && c.is_keyword("as")) {
        c.next();
        step.label = c.name().text;
      }
      c.expect_punct(";");
      join(kw, step.comp1, step.comp2);
      spec.steps.push_back(step);
    } else if (c.is_keyword("triangles")) {
      c.next();
      c.expect_punct("=");
      spec.triangles = c.integer(1000);
      c.expect_punct(";");
    } else {
      c.fail(kw, "expected 'comp', 'identify', 'connect', 'triangles' or '}', found " + Cursor::describe(kw));
    }
  }
  const Token close = c.peek();
  c.expect_punct("}");
  c.accept_punct(";");
  if (spec.components.empty()) c.fail(close, "gluing has no components");
  for (const auto& [n, p] : piece)
    if (p != piece.begin()->second) c.fail(close, "gluing leaves component '" + n + "' disconnected");
  return spec;
}

template <class F>
auto wrap_errors(const Token& at, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const NotAdmissible&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(at.line, at.column, e.what());
  }
}

}  // namespace qspec_detail

/// Parses an algebra document. Throws ParseError (with line and column) or
/// NotAdmissible; never returns partial state.
inline ParsedAlgebra parse_algebra(std::string_view text) {
  using namespace qspec_detail;
  Cursor c(tokenize(text));
  ParsedAlgebra out;
  const Token first = c.peek();
  if (c.is_keyword("algebra")) {
    out.kind = ParsedAlgebra::Kind::Raw;
    out.algebra = wrap_errors(first, [&] { return parse_raw(c, out.name); });
  } else if (c.is_keyword("nakayama")) {
    out.kind = ParsedAlgebra::Kind::Nakayama;
    out.algebra = wrap_errors(first, [&] { return parse_nakayama(c); });
    out.name = "nakayama";
  } else if (c.is_keyword("glue")) {
    out.kind = ParsedAlgebra::Kind::Glue;
    auto spec = wrap_errors(first, [&] { return parse_glue(c); });
    out.name = spec.name;
    out.tree = wrap_errors(first, [&] { return GluingTree::build(spec); });
    out.algebra = out.tree->algebra();
    out.gluing = std::move(spec);
  } else {
    c.fail(first, "expected 'algebra', 'nakayama' or 'glue', found " + Cursor::describe(first));
  }
  if (!c.at_end()) c.fail(c.peek(), "unexpected " + Cursor::describe(c.peek()) + " after the algebra");
  return out;
}

/// Either a parsed algebra or an error message with its position.
struct AlgebraParseOutcome {
  std::optional<ParsedAlgebra> value;
  std::string error;
  std::size_t line = 0, column = 0;
  bool ok() const { return value.has_value(); }
};

inline AlgebraParseOutcome try_parse_algebra(std::string_view text) noexcept {
  AlgebraParseOutcome r;
  try {
    r.value = parse_algebra(text);
  } catch (const ParseError& e) {
    r.error = e.what();
    r.line = e.line();
    r.column = e.column();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

/// Parses a module over `algebra`. Dimensions are listed in vertex order;
/// arrows without a `map` line act by zero.
template <class K>
Representation<K> parse_module(std::string_view text, const AlgebraPtr& algebra) {
  using namespace qspec_detail;
  Cursor c(tokenize(text));
  const Quiver& q = algebra->quiver();
  if (c.is_keyword("module")) {
    c.next();
    c.name();
    c.expect_punct(";");
  }
  const Token dims_at = c.peek();
  c.expect_keyword("dims");
  c.expect_punct(":");
  std::vector<std::size_t> dims;
  while (!c.is_punct(";")) {
    const Token t = c.peek();
    dims.push_back(c.integer(4096));
    if (dims.size() > q.num_vertices()) c.fail(t, "more dimensions than vertices (" + std::to_string(q.num_vertices()) + ")");
  }
  c.expect_punct(";");
  if (dims.size() != q.num_vertices())
    c.fail(dims_at, "expected " + std::to_string(q.num_vertices()) + " dimensions, found " + std::to_string(dims.size()));
  std::vector<Matrix<K>> maps;
  for (const auto& arr : q.arrows()) maps.emplace_back(dims[arr.target], dims[arr.source]);
  std::vector<bool> seen(q.num_arrows(), false);
  while (!c.at_end()) {
    c.expect_keyword("map");
    const Token& at = c.name();
    auto a = q.find_arrow(at.text);
    if (!a) c.fail(at, "unknown arrow '" + at.text + "'");
    if (seen[*a]) c.fail(at, "second map for arrow '" + at.text + "'");
    seen[*a] = true;
    c.expect_punct("=");
    const std::size_t rows = dims[q.arrow(*a).target], cols = dims[q.arrow(*a).source];
    const Token open = c.expect_punct("[");
    std::vector<std::vector<K>> entries;
    if (!c.is_punct("]")) {
      do {
        const Token row_at = c.expect_punct("[");
        std::vector<K> row;
        if (!c.is_punct("]")) {
          do row.push_back(c.template scalar<K>());
          while (c.accept_punct(","));
        }
        c.expect_punct("]");
        if (row.size() != cols)
          c.fail(row_at, "arrow '" + at.text + "' needs rows of length " + std::to_string(cols) + " (source dimension), found " +
                             std::to_string(row.size()));
        entries.push_back(std::move(row));
      } while (c.accept_punct(","));
    }
    c.expect_punct("]");
    c.expect_punct(";");
    if (entries.size() != rows)
      c.fail(open, "arrow '" + at.text + "' needs " + std::to_string(rows) + " rows (target dimension), found " +
                       std::to_string(entries.size()));
    Matrix<K> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entries[i][j];
    maps[*a] = std::move(m);
  }
  Representation<K> r(algebra, std::move(dims), std::move(maps));
  if (auto bad = validate_rep(r))
    throw ParseError(dims_at.line, dims_at.column, "relation " + path_to_string(q, *bad) + " is violated");
  return r;
}

// ---------------------------------------------------------------------------
// Canonical serialization

inline std::string quote_name(const std::string& s) {
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return qspec_detail::word_char(c); })) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out + "\"";
}

/// Canonical explicit form: every algebra, including Nakayama constructors and
/// gluings, is written as its quiver with relations.
inline std::string serialize_algebra(const BoundAlgebra& a, const std::string& name = "A") {
  const Quiver& q = a.quiver();
  std::string out = "algebra " + quote_name(name) + ";\nvertices:";
  for (const auto& v : q.vertex_labels()) out += " " + quote_name(v);
  out += ";\narrows:";
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& arr = q.arrow(i);
    out += (i ? ", " : " ") + quote_name(arr.label) + ": " + quote_name(q.vertex_label(arr.source)) + " -> " +
           quote_name(q.vertex_label(arr.target));
  }
  out += ";\nrelations:";
  const auto& gens = a.ideal().generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out += i ? ", " : " ";
    for (std::size_t k = 0; k < gens[i].arrows.size(); ++k)
      out += (k ? "." : "") + quote_name(q.arrow(gens[i].arrows[k]).label);
  }
  return out + ";\n";
}

template <class K>
std::string serialize_matrix(const Matrix<K>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + to_string(m(i, j));
    out += "]";
  }
  return out + "]";
}

template <class K>
std::string serialize_module(const Representation<K>& m, const std::string& name = "M") {
  const Quiver& q = m.algebra().quiver();
  std::string out = "module " + quote_name(name) + ";\ndims:";
  for (auto d : m.dims()) out += " " + std::to_string(d);
  out += ";\n";
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    out += "map " + quote_name(q.arrow(a).label) + " = " + serialize_matrix(m.action(a)) + ";\n";
  return out;
}

}  // namespace gprojlab
