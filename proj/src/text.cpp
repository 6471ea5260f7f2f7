#include <superdom/errors.hpp>
#include <superdom/text.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace superdom {

namespace {

struct Token {
  enum Kind { number, ident, symbol, end };
  Kind kind = end;
  std::string text;
  char letter = 0;
  unsigned index = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++column;
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    std::size_t start = i;
    if (is_digit(c)) {
      while (i < text.size() && is_digit(text[i])) ++i;
      t.kind = Token::number;
    } else if (c == 'x' || c == 't' || c == 'g') {
      ++i;
      while (i < text.size() && is_digit(text[i])) ++i;
      if (i == start + 1) throw ParseError(std::string("expected an index after '") + c + "'", line, column);
      t.kind = Token::ident;
      t.letter = c;
      std::string digits(text.substr(start + 1, i - start - 1));
      if (digits.size() > 4 || std::stoul(digits) == 0)
        throw ParseError("index out of range in '" + std::string(text.substr(start, i - start)) + "'", line, column);
      t.index = static_cast<unsigned>(std::stoul(digits));
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      ++i;
      t.kind = Token::symbol;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
    t.text = std::string(text.substr(start, i - start));
    column += i - start;
    out.push_back(std::move(t));
  }
  Token e;
  e.line = line;
  e.column = column;
  out.push_back(e);
  return out;
}

template <class Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::Value;

  ExprParser(const std::vector<Token>& tokens, const Algebra& algebra) : tokens_(tokens), alg_(algebra) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at(char symbol) const { return peek().kind == Token::symbol && peek().text[0] == symbol; }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }

  Value expr() {
    Value v = term();
    while (at('+') || at('-')) {
      bool plus = next().text[0] == '+';
      Value w = term();
      v = plus ? v + w : v - w;
    }
    return v;
  }

  Value term() {
    Value v = factor();
    while (true) {
      if (at('*')) {
        next();
        v = v * factor();
      } else if (at('/')) {
        const Token& slash = next();
        v = alg_.divide(v, factor(), slash);
      } else if (peek().kind == Token::ident) {
        v = v * factor();
      } else {
        return v;
      }
    }
  }

  Value factor() {
    bool negate = at('-');
    if (negate) next();
    Value v = atom();
    if (at('^')) {
      next();
      if (peek().kind != Token::number) fail("expected an exponent");
      if (peek().text.size() > 4) fail("exponent too large");
      v = alg_.power(v, static_cast<unsigned>(std::stoul(next().text)));
    }
    return negate ? -v : v;
  }

  Value atom() {
    const Token& t = peek();
    if (t.kind == Token::number) {
      next();
      return alg_.constant(Rational(Integer(t.text)));
    }
    if (t.kind == Token::ident) {
      next();
      return alg_.variable(t);
    }
    if (at('(')) {
      next();
      Value v = expr();
      if (!at(')')) fail("expected ')'");
      next();
      return v;
    }
    if (t.kind == Token::end) fail("unexpected end of expression");
    fail("unexpected '" + t.text + "'");
  }

  const std::vector<Token>& tokens_;
  const Algebra& alg_;
  std::size_t pos_ = 0;
};

struct SuperAlgebra {
  using Value = SuperFunction;
  SuperSpace space;

  Value constant(const Rational& r) const { return SuperFunction::constant(space, r); }
  Value variable(const Token& t) const {
    if (t.letter == 'x' && t.index <= space.even_dim) return SuperFunction::even_coordinate(space, t.index - 1);
    if (t.letter == 't' && t.index <= space.odd_dim) return SuperFunction::odd_coordinate(space, t.index - 1);
    if (t.letter == 'g') throw ParseError("Grassmann generator " + t.text + " in a superfunction", t.line, t.column);
    throw ParseError(t.text + " is not a coordinate of " + space.to_string(), t.line, t.column);
  }
  Value divide(const Value& a, const Value& b, const Token& at) const {
    if (b.body().is_zero()) throw ParseError("divisor has zero body part", at.line, at.column);
    return a * sf_inverse(b);
  }
  Value power(const Value& a, unsigned e) const { return sf_power(a, e); }
};

struct GrassmannAlgebra {
  using Value = GrassmannElement;
  unsigned rank;

  Value constant(const Rational& r) const { return GrassmannElement::scalar(rank, r); }
  Value variable(const Token& t) const {
    if (t.letter != 'g') throw ParseError("coordinate " + t.text + " in a Grassmann expression", t.line, t.column);
    if (t.index > rank)
      throw ParseError(t.text + " exceeds rank " + std::to_string(rank), t.line, t.column);
    return GrassmannElement::generator(rank, t.index);
  }
  Value divide(const Value& a, const Value& b, const Token& at) const {
    if (b.body() == 0) throw ParseError("divisor has zero body part", at.line, at.column);
    return a * ginvert(b);
  }
  Value power(const Value& a, unsigned e) const { return gpow(a, e); }
};

unsigned max_index(const std::vector<Token>& tokens, char letter) {
  unsigned m = 0;
  for (const auto& t : tokens)
    if (t.kind == Token::ident && t.letter == letter) m = std::max(m, t.index);
  return m;
}

}  // namespace

SuperSpace parse_space(std::string_view text) {
  auto bar = text.find('|');
  auto number = [&](std::string_view s) -> unsigned {
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("malformed space '" + std::string(text) + "', expected p|q", 1, 1);
    return static_cast<unsigned>(std::stoul(std::string(s)));
  };
  if (bar == std::string_view::npos) throw ParseError("malformed space '" + std::string(text) + "', expected p|q", 1, 1);
  SuperSpace s{number(text.substr(0, bar)), number(text.substr(bar + 1))};
  if (s.odd_dim > kMaxRank) throw ParseError("odd dimension too large", 1, 1);
  return s;
}

SuperFunction parse_superfunction(std::string_view text, std::optional<SuperSpace> space, std::size_t line,
                                  std::size_t column) {
  auto tokens = tokenize(text, line, column);
  SuperSpace s = space ? *space : SuperSpace{max_index(tokens, 'x'), max_index(tokens, 't')};
  if (s.odd_dim > kMaxRank) throw ParseError("too many odd coordinates", line, column);
  SuperAlgebra algebra{s};
  return ExprParser<SuperAlgebra>(tokens, algebra).parse();
}

GrassmannElement parse_grassmann(std::string_view text, std::optional<unsigned> rank, std::size_t line,
                                 std::size_t column) {
  auto tokens = tokenize(text, line, column);
  unsigned n = rank ? *rank : max_index(tokens, 'g');
  if (n > kMaxRank) throw ParseError("rank exceeds " + std::to_string(kMaxRank), line, column);
  GrassmannAlgebra algebra{n};
  return ExprParser<GrassmannAlgebra>(tokens, algebra).parse();
}

Polynomial parse_polynomial(std::string_view text, unsigned nvars, std::size_t line, std::size_t column) {
  SuperFunction f = parse_superfunction(text, SuperSpace{nvars, 0}, line, column);
  CoeffFn c = f.body();
  if (!c.is_polynomial()) throw ParseError("expected a polynomial", line, column);
  return c.as_polynomial();
}

namespace {

struct Piece {
  Rational coefficient;
  std::string factors;
};

std::string join_pieces(const std::vector<Piece>& pieces, bool always_coefficient) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    bool negative = p.coefficient < 0;
    Rational magnitude = abs(p.coefficient);
    if (i == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (p.factors.empty())
      out += to_string(magnitude);
    else if (magnitude == 1 && !always_coefficient && !(i == 0 && negative))
      out += p.factors;
    else
      out += to_string(magnitude) + "*" + p.factors;
  }
  return out;
}

std::string monomial_text(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string odd_text(MultiIndex j) {
  std::string out;
  for (unsigned label : j.labels()) out += (out.empty() ? "t" : "*t") + std::to_string(label);
  return out;
}

std::string times(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

}  // namespace

std::string format_grassmann(const GrassmannElement& a) {
  std::vector<Piece> pieces;
  for (const auto& [index, c] : a.terms()) {
    std::string gens;
    for (unsigned label : index.labels()) gens += "g" + std::to_string(label);
    pieces.push_back({c, gens});
  }
  return join_pieces(pieces, true);
}

std::string format_polynomial(const Polynomial& p) {
  std::vector<Piece> pieces;
  for (const auto& [e, c] : p.terms()) pieces.push_back({c, monomial_text(e)});
  return join_pieces(pieces, false);
}

std::string format_superfunction(const SuperFunction& f) {
  std::vector<Piece> pieces;
  for (const auto& [j, c] : f.terms()) {
    std::string odd = odd_text(j);
    if (c.is_polynomial()) {
      for (const auto& [e, coefficient] : c.numerator().terms())
        pieces.push_back({coefficient, times(monomial_text(e), odd)});
      continue;
    }
    std::string q = "(" + format_polynomial(c.numerator()) + ")/(" + format_polynomial(c.denominator_base()) + ")";
    if (c.denominator_exponent() > 1) q += "^" + std::to_string(c.denominator_exponent());
    pieces.push_back({Rational(1), times(q, odd)});
  }
  return join_pieces(pieces, false);
}

std::string format_domain(const DeWittDomain& domain, std::string_view prefix) {
  std::string out;
  const unsigned p = domain.space().even_dim;
  bool whole_box = std::any_of(domain.boxes().begin(), domain.boxes().end(),
                               [&](const Box& b) { return b == Box::whole(p); });
  if (!whole_box)
    for (const auto& b : domain.boxes()) {
      out += std::string(prefix) + "box";
      for (const auto& side : b.sides) {
        out += " " + (side.lower ? to_string(*side.lower) : std::string("-inf"));
        out += " " + (side.upper ? to_string(*side.upper) : std::string("inf"));
      }
      out += "\n";
    }
  for (const auto& e : domain.excluded()) out += std::string(prefix) + "exclude " + format_polynomial(e) + "\n";
  return out;
}

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

struct Word {
  std::string text;
  std::size_t column;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) out.push_back({number, line});
    ++number;
    start = end + 1;
  }
  return out;
}

std::vector<Word> words(const std::string& text) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i == text.size()) break;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    out.push_back({text.substr(start, i - start), start + 1});
  }
  return out;
}

struct Assignment {
  std::string name;
  std::string expr;
  std::size_t column;
};

std::optional<Assignment> assignment(const Line& line) {
  auto eq = line.text.find('=');
  if (eq == std::string::npos) return std::nullopt;
  std::string name = line.text.substr(0, eq);
  name.erase(0, name.find_first_not_of(" \t"));
  name.erase(name.find_last_not_of(" \t") + 1);
  if (name.empty()) throw ParseError("missing name before '='", line.number, eq + 1);
  return Assignment{name, line.text.substr(eq + 1), eq + 2};
}

/// "y3" -> ('y', 3).
std::pair<char, unsigned> coordinate_name(const std::string& name, const Line& line) {
  bool ok = name.size() >= 2 && name.size() <= 5 &&
            std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; });
  unsigned index = ok ? static_cast<unsigned>(std::stoul(name.substr(1))) : 0;
  if (!ok || index == 0) throw ParseError("malformed coordinate name '" + name + "'", line.number, 1);
  return {name[0], index};
}

Rational bound(const Word& w, std::size_t line) {
  try {
    return parse_rational(w.text);
  } catch (const ParseError&) {
    throw ParseError("malformed bound '" + w.text + "'", line, w.column);
  }
}

struct DomainBuilder {
  SuperSpace space;
  std::vector<Box> boxes;
  std::vector<Polynomial> excluded;

  void box(const std::vector<Word>& ws, const Line& line) {
    if (ws.size() != 1 + 2 * space.even_dim)
      throw ParseError("box needs " + std::to_string(2 * space.even_dim) + " bounds", line.number, 1);
    Box b;
    for (unsigned i = 0; i < space.even_dim; ++i) {
      Interval side;
      const Word& lo = ws[1 + 2 * i];
      const Word& hi = ws[2 + 2 * i];
      if (lo.text != "-inf") side.lower = bound(lo, line.number);
      if (hi.text != "inf") side.upper = bound(hi, line.number);
      if (side.lower && side.upper && *side.lower >= *side.upper)
        throw ParseError("empty interval", line.number, lo.column);
      b.sides.push_back(side);
    }
    boxes.push_back(std::move(b));
  }

  void exclude(const Line& line, std::size_t keyword_end) {
    excluded.push_back(parse_polynomial(std::string_view(line.text).substr(keyword_end), space.even_dim, line.number,
                                        keyword_end + 1));
  }

  DeWittDomain build() const {
    if (boxes.empty()) return DeWittDomain(space).excluding(excluded);
    return DeWittDomain(space, boxes, excluded);
  }
};

/// Handles `<prefix>box` / `<prefix>exclude`; false when the line is neither.
bool domain_line(DomainBuilder& d, const Line& line, const std::vector<Word>& ws, const std::string& prefix) {
  if (ws[0].text == prefix + "box") {
    d.box(ws, line);
    return true;
  }
  if (ws[0].text == prefix + "exclude") {
    d.exclude(line, ws[0].column - 1 + ws[0].text.size());
    return true;
  }
  return false;
}

/// Component lines `y<i> = ...` / `h<j> = ...` for a map source -> target.
struct ComponentBuilder {
  SuperSpace source;
  SuperSpace target;
  std::map<std::pair<char, unsigned>, SuperFunction> parsed;

  void add(const Line& line, const Assignment& a) {
    auto key = coordinate_name(a.name, line);
    bool even = key.first == 'y';
    if ((key.first != 'y' && key.first != 'h') ||
        key.second > (even ? target.even_dim : target.odd_dim))
      throw ParseError("'" + a.name + "' is not a coordinate of the target " + target.to_string(), line.number, 1);
    if (parsed.count(key)) throw ParseError("'" + a.name + "' assigned twice", line.number, 1);
    SuperFunction f = parse_superfunction(a.expr, source, line.number, a.column);
    if (even ? !f.is_even() : !f.is_odd())
      throw ParseError("'" + a.name + "' must be " + (even ? "even" : "odd"), line.number, a.column);
    parsed.emplace(key, std::move(f));
  }

  std::vector<SuperFunction> build(std::size_t line) const {
    std::vector<SuperFunction> out;
    for (unsigned i = 1; i <= target.even_dim + target.odd_dim; ++i) {
      bool even = i <= target.even_dim;
      std::pair<char, unsigned> key{even ? 'y' : 'h', even ? i : i - target.even_dim};
      auto it = parsed.find(key);
      if (it == parsed.end())
        throw ParseError("missing assignment for " + std::string(1, key.first) + std::to_string(key.second), line, 1);
      out.push_back(it->second);
    }
    return out;
  }
};

SuperSpace space_word(const std::vector<Word>& ws, std::size_t index, const Line& line) {
  if (ws.size() <= index) throw ParseError("expected a space p|q", line.number, line.text.size() + 1);
  try {
    return parse_space(ws[index].text);
  } catch (const ParseError&) {
    throw ParseError("malformed space '" + ws[index].text + "', expected p|q", line.number, ws[index].column);
  }
}

}  // namespace

Skeleton parse_skeleton(std::string_view text) {
  auto lines = split_lines(text);
  std::optional<SuperSpace> source, target;
  std::optional<DomainBuilder> source_domain, target_domain;
  std::optional<ComponentBuilder> components;
  std::size_t last = 1;
  for (const auto& line : lines) {
    last = line.number + 1;
    auto ws = words(line.text);
    if (ws[0].text == "source" || ws[0].text == "target") {
      if (ws.size() != 2) throw ParseError("expected '" + ws[0].text + " p|q'", line.number, 1);
      auto& slot = ws[0].text == "source" ? source : target;
      if (slot) throw ParseError(ws[0].text + " given twice", line.number, 1);
      slot = space_word(ws, 1, line);
      if (ws[0].text == "source")
        source_domain = DomainBuilder{*source, {}, {}};
      else
        target_domain = DomainBuilder{*target, {}, {}};
      if (source && target) components = ComponentBuilder{*source, *target, {}};
      continue;
    }
    if (ws[0].text.rfind("target-", 0) == 0) {
      if (!target) throw ParseError("target domain before 'target'", line.number, 1);
      if (domain_line(*target_domain, line, ws, "target-")) continue;
    } else if (ws[0].text == "box" || ws[0].text == "exclude") {
      if (!source) throw ParseError("domain before 'source'", line.number, 1);
      domain_line(*source_domain, line, ws, "");
      continue;
    }
    if (auto a = assignment(line)) {
      if (!components) throw ParseError("assignment before 'source' and 'target'", line.number, 1);
      components->add(line, *a);
      continue;
    }
    throw ParseError("unrecognized line", line.number, ws[0].column);
  }
  if (!source || !target) throw ParseError("skeleton needs 'source' and 'target' lines", last, 1);
  return Skeleton(*source, source_domain->build(), *target, target_domain->build(), components->build(last));
}

std::string format_skeleton(const Skeleton& f) {
  std::string out = "source " + f.source().to_string() + "\n";
  out += "target " + f.target().to_string() + "\n";
  out += format_domain(f.source_domain());
  out += format_domain(f.target_domain(), "target-");
  for (unsigned i = 0; i < f.target().total(); ++i) {
    bool even = i < f.target().even_dim;
    out += (even ? "y" : "h") + std::to_string(even ? i + 1 : i + 1 - f.target().even_dim) + " = " +
           format_superfunction(f.component(i)) + "\n";
  }
  return out;
}

LambdaPoint parse_point(std::string_view text, std::optional<SuperSpace> space) {
  auto lines = split_lines(text);
  std::optional<unsigned> rank;
  for (const auto& line : lines) {
    auto ws = words(line.text);
    if (ws[0].text != "rank") continue;
    if (rank) throw ParseError("rank given twice", line.number, 1);
    if (ws.size() != 2 || ws[1].text.size() > 3 ||
        !std::all_of(ws[1].text.begin(), ws[1].text.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("expected 'rank N'", line.number, 1);
    rank = static_cast<unsigned>(std::stoul(ws[1].text));
    if (*rank > kMaxRank) throw ParseError("rank exceeds " + std::to_string(kMaxRank), line.number, ws[1].column);
  }
  struct Entry {
    GrassmannElement value;
    std::size_t line;
    std::size_t column;
  };
  std::map<std::pair<char, unsigned>, Entry> values;
  unsigned max_rank = rank.value_or(0);
  SuperSpace inferred;
  for (const auto& line : lines) {
    if (words(line.text)[0].text == "rank") continue;
    auto a = assignment(line);
    if (!a) throw ParseError("unrecognized line", line.number, 1);
    auto key = coordinate_name(a->name, line);
    if (key.first != 'x' && key.first != 't')
      throw ParseError("'" + a->name + "' is not a coordinate name", line.number, 1);
    if (values.count(key)) throw ParseError("'" + a->name + "' given twice", line.number, 1);
    GrassmannElement v = parse_grassmann(a->expr, rank, line.number, a->column);
    if (!rank) max_rank = std::max(max_rank, v.rank());
    (key.first == 'x' ? inferred.even_dim : inferred.odd_dim) =
        std::max(key.second, key.first == 'x' ? inferred.even_dim : inferred.odd_dim);
    values.emplace(key, Entry{std::move(v), line.number, a->column});
  }
  SuperSpace s = space.value_or(inferred);
  std::vector<GrassmannElement> even(s.even_dim, GrassmannElement(max_rank));
  std::vector<GrassmannElement> odd(s.odd_dim, GrassmannElement(max_rank));
  for (const auto& [key, entry] : values) {
    bool is_even = key.first == 'x';
    if (key.second > (is_even ? s.even_dim : s.odd_dim))
      throw ParseError(std::string(1, key.first) + std::to_string(key.second) + " is not a coordinate of " +
                           s.to_string(),
                       entry.line, 1);
    if (is_even ? !entry.value.is_even() : !entry.value.is_odd())
      throw ParseError(std::string(1, key.first) + std::to_string(key.second) + " must be " +
                           (is_even ? "even" : "odd"),
                       entry.line, entry.column);
    (is_even ? even : odd)[key.second - 1] = entry.value.with_rank(max_rank);
  }
  return LambdaPoint(s, max_rank, std::move(even), std::move(odd));
}

std::string format_point(const LambdaPoint& x) {
  std::string out = "rank " + std::to_string(x.rank()) + "\n";
  for (unsigned i = 0; i < x.space().even_dim; ++i)
    out += "x" + std::to_string(i + 1) + " = " + format_grassmann(x.even_values()[i]) + "\n";
  for (unsigned j = 0; j < x.space().odd_dim; ++j)
    out += "t" + std::to_string(j + 1) + " = " + format_grassmann(x.odd_values()[j]) + "\n";
  return out;
}

GluingData parse_manifold(std::string_view text) {
  auto lines = split_lines(text);
  struct ChartEntry {
    SuperSpace space;
    DomainBuilder domain;
  };
  std::map<std::string, ChartEntry> charts;
  std::vector<std::string> chart_order;
  std::map<ChartPair, DomainBuilder> overlaps;
  std::map<ChartPair, std::pair<ComponentBuilder, std::size_t>> transitions;
  DomainBuilder* current_domain = nullptr;
  ComponentBuilder* current_components = nullptr;
  auto known = [&](const Word& w, const Line& line) -> ChartEntry& {
    auto it = charts.find(w.text);
    if (it == charts.end()) throw ParseError("unknown chart '" + w.text + "'", line.number, w.column);
    return it->second;
  };
  for (const auto& line : lines) {
    auto ws = words(line.text);
    const std::string& head = ws[0].text;
    if (head == "chart") {
      if (ws.size() != 3) throw ParseError("expected 'chart <id> p|q'", line.number, 1);
      if (charts.count(ws[1].text)) throw ParseError("chart '" + ws[1].text + "' declared twice", line.number, 1);
      SuperSpace s = space_word(ws, 2, line);
      auto& entry = charts.emplace(ws[1].text, ChartEntry{s, DomainBuilder{s, {}, {}}}).first->second;
      chart_order.push_back(ws[1].text);
      current_domain = &entry.domain;
      current_components = nullptr;
      continue;
    }
    if (head == "overlap" || head == "transition") {
      if (ws.size() != 3) throw ParseError("expected '" + head + " <i> <j>'", line.number, 1);
      ChartEntry& from = known(ws[1], line);
      ChartEntry& to = known(ws[2], line);
      ChartPair key{ws[1].text, ws[2].text};
      if (head == "overlap") {
        if (overlaps.count(key)) throw ParseError("overlap given twice", line.number, 1);
        current_domain = &overlaps.emplace(key, DomainBuilder{from.space, {}, {}}).first->second;
        current_components = nullptr;
      } else {
        if (transitions.count(key)) throw ParseError("transition given twice", line.number, 1);
        current_components =
            &transitions.emplace(key, std::make_pair(ComponentBuilder{from.space, to.space, {}}, line.number))
                 .first->second.first;
        current_domain = nullptr;
      }
      continue;
    }
    if (head == "box" || head == "exclude") {
      if (!current_domain) throw ParseError("domain line outside a chart or overlap section", line.number, 1);
      domain_line(*current_domain, line, ws, "");
      continue;
    }
    if (auto a = assignment(line)) {
      if (!current_components) throw ParseError("assignment outside a transition section", line.number, 1);
      current_components->add(line, *a);
      continue;
    }
    throw ParseError("unrecognized line", line.number, ws[0].column);
  }
  GluingData g;
  for (const auto& id : chart_order) g.add_chart(id, charts.at(id).space, charts.at(id).domain.build());
  for (const auto& [key, d] : overlaps) g.set_overlap(key.first, key.second, d.build());
  for (const auto& [key, entry] : transitions) {
    const auto& [i, j] = key;
    DeWittDomain from = g.overlap(i, i);
    if (g.has_overlap(i, j)) from = g.overlap(i, j);
    DeWittDomain to = g.has_overlap(j, i) ? g.overlap(j, i) : g.overlap(j, j);
    g.set_transition(i, j, Skeleton(g.chart(i).space, from, g.chart(j).space, to, entry.first.build(entry.second)));
  }
  return g;
}

std::string format_manifold(const GluingData& g) {
  std::string out;
  for (const auto& id : g.chart_ids()) {
    const Chart& c = g.chart(id);
    out += "chart " + id + " " + c.space.to_string() + "\n" + format_domain(c.domain);
  }
  for (const auto& [key, d] : g.overlaps()) out += "overlap " + key.first + " " + key.second + "\n" + format_domain(d);
  for (const auto& [key, t] : g.transitions()) {
    out += "transition " + key.first + " " + key.second + "\n";
    std::string body = format_skeleton(t);
    std::istringstream in(body);
    for (std::string line; std::getline(in, line);)
      if (line.find('=') != std::string::npos) out += line + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace superdom
