#include "amphichiral/conway.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "amphichiral/error.hpp"
#include "amphichiral/polyhedra.hpp"

namespace amphi {

TangleExpr TangleExpr::integer(long n) {
  TangleExpr e;
  e.kind = Kind::Integer;
  e.value = n;
  return e;
}

TangleExpr TangleExpr::sum(TangleExpr a, TangleExpr b) {
  TangleExpr e;
  e.kind = Kind::Sum;
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(b));
  return e;
}

TangleExpr TangleExpr::product(TangleExpr a, TangleExpr b) {
  TangleExpr e;
  e.kind = Kind::Product;
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(b));
  return e;
}

TangleExpr TangleExpr::ramification(std::vector<TangleExpr> parts) {
  if (parts.size() < 2) throw Error(ErrorKind::InvalidArgument, "ramification needs at least two tangles");
  TangleExpr e;
  e.kind = Kind::Ramification;
  e.children = std::move(parts);
  return e;
}

TangleExpr TangleExpr::poly(std::string name, std::vector<TangleExpr> slots) {
  TangleExpr e;
  e.kind = Kind::Polyhedron;
  e.polyhedron = std::move(name);
  e.children = std::move(slots);
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  TangleExpr parse_link() {
    skip_ws();
    TangleExpr result = polyhedral_ahead() ? parse_polyhedral() : parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  bool polyhedral_ahead() const {
    if (at('.')) return true;
    std::size_t p = pos_;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    return p > pos_ && p < s_.size() && s_[p] == '*';
  }

  TangleExpr parse_polyhedral() {
    std::string name = "6*";
    if (!at('.')) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      ++pos_;  // '*'
      name = std::string(s_.substr(start, pos_ - start));
    }
    const std::size_t name_pos = pos_;
    const Polyhedron* poly = find_polyhedron(name);
    if (!poly) throw ParseError("unknown basic polyhedron '" + name + "'", name_pos);
    std::vector<TangleExpr> slots;
    skip_ws();
    for (;;) {
      skip_ws();
      if (at('.') || pos_ == s_.size()) {
        slots.push_back(TangleExpr::integer(1));
      } else {
        slots.push_back(parse_sum());
        skip_ws();
      }
      if (!at('.')) break;
      ++pos_;
    }
    if (static_cast<int>(slots.size()) > poly->vertex_count())
      throw ParseError("polyhedron " + name + " has " + std::to_string(poly->vertex_count()) +
                           " vertices but " + std::to_string(slots.size()) + " slots were given",
                       pos_);
    while (static_cast<int>(slots.size()) < poly->vertex_count()) slots.push_back(TangleExpr::integer(1));
    return TangleExpr::poly(name, std::move(slots));
  }

  TangleExpr parse_sum() {
    TangleExpr left = parse_product();
    for (;;) {
      skip_ws();
      if (!at('+')) return left;
      ++pos_;
      left = TangleExpr::sum(std::move(left), parse_product());
    }
  }

  bool factor_ahead() {
    skip_ws();
    return at('(') || at('-') || (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])));
  }

  TangleExpr parse_product() {
    skip_ws();
    TangleExpr left = parse_factor();
    while (factor_ahead()) left = TangleExpr::product(std::move(left), parse_factor());
    return left;
  }

  TangleExpr parse_factor() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of input");
    if (at('(')) {
      const std::size_t open = pos_;
      ++pos_;
      skip_ws();
      if (at(')')) fail("empty parentheses");
      std::vector<TangleExpr> parts;
      parts.push_back(parse_sum());
      skip_ws();
      while (at(',')) {
        ++pos_;
        skip_ws();
        if (at(',') || at(')')) fail("empty ramification entry");
        parts.push_back(parse_sum());
        skip_ws();
      }
      if (!at(')')) {
        if (pos_ == s_.size()) throw ParseError("unbalanced parenthesis", open);
        fail("expected ')' or ','");
      }
      ++pos_;
      if (parts.size() == 1) return std::move(parts.front());
      return TangleExpr::ramification(std::move(parts));
    }
    bool negative = false;
    if (at('-')) {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer tangle or '('");
    if (pos_ - start > 9) throw ParseError("integer tangle too large", start);
    const long v = std::strtol(std::string(s_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    return TangleExpr::integer(negative ? -v : v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool needs_parens_as_product_operand(const TangleExpr& e, bool right) {
  if (e.kind == TangleExpr::Kind::Sum) return true;
  return right && e.kind == TangleExpr::Kind::Product;
}

}  // namespace

TangleExpr parse(std::string_view text) { return Parser(text).parse_link(); }

std::string render(const TangleExpr& e) {
  using K = TangleExpr::Kind;
  switch (e.kind) {
    case K::Integer:
      return std::to_string(e.value);
    case K::Product: {
      std::string a = render(e.children[0]);
      std::string b = render(e.children[1]);
      if (needs_parens_as_product_operand(e.children[0], false)) a = "(" + a + ")";
      if (needs_parens_as_product_operand(e.children[1], true)) b = "(" + b + ")";
      return a + " " + b;
    }
    case K::Sum: {
      std::string b = render(e.children[1]);
      if (e.children[1].kind == K::Sum) b = "(" + b + ")";
      return render(e.children[0]) + "+" + b;
    }
    case K::Ramification: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ",";
        out += render(e.children[i]);
      }
      return out + ")";
    }
    case K::Polyhedron: {
      const TangleExpr one = TangleExpr::integer(1);
      std::size_t used = e.children.size();
      while (used > 0 && e.children[used - 1] == one) --used;
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < used; ++i)
        parts.push_back(e.children[i] == one ? std::string() : render(e.children[i]));
      std::string out;
      const bool abbreviate = e.polyhedron == "6*" && used > 1 && parts[0].empty();
      if (!abbreviate) out = e.polyhedron;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ".";
        out += parts[i];
      }
      return out;
    }
  }
  return {};
}

long leaf_magnitude(const TangleExpr& e) {
  if (e.kind == TangleExpr::Kind::Integer) return std::labs(e.value);
  long total = 0;
  for (const auto& c : e.children) total += leaf_magnitude(c);
  return total;
}

RationalTangle parse_rational(std::string_view text) {
  RationalTangle t;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("rational tangle entries must be positive integers", start);
    const int v = std::atoi(std::string(text.substr(start, i - start)).c_str());
    if (v < 1) throw ParseError("rational tangle entries must be positive integers", start);
    t.entries.push_back(v);
  }
  if (t.entries.empty()) throw ParseError("empty rational tangle", 0);
  return t;
}

std::string render(const RationalTangle& t) {
  std::string out;
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(t.entries[i]);
  }
  return out;
}

TangleExpr to_expr(const RationalTangle& t) {
  if (t.entries.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational tangle");
  TangleExpr e = TangleExpr::integer(t.entries.front());
  for (std::size_t i = 1; i < t.entries.size(); ++i)
    e = TangleExpr::product(std::move(e), TangleExpr::integer(t.entries[i]));
  return e;
}

RationalTangle reverse(const RationalTangle& t) {
  RationalTangle r = t;
  std::reverse(r.entries.begin(), r.entries.end());
  return r;
}

bool is_palindromic(const RationalTangle& t) { return reverse(t) == t; }

PretzelTangle parse_pretzel(std::string_view text) {
  PretzelTangle p;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      p.components.push_back(parse_rational(part));
    } catch (const ParseError& e) {
      throw ParseError("bad pretzel component '" + std::string(part) + "'", start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (p.components.size() < 2) throw ParseError("a pretzel tangle needs at least two components", 0);
  return p;
}

std::string render(const PretzelTangle& p) {
  std::string out;
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    if (i) out += ",";
    out += render(p.components[i]);
  }
  return out;
}

TangleExpr to_expr(const PretzelTangle& p) {
  std::vector<TangleExpr> parts;
  for (const auto& c : p.components) parts.push_back(to_expr(c));
  return TangleExpr::ramification(std::move(parts));
}

PretzelTangle reverse(const PretzelTangle& p) {
  PretzelTangle r = p;
  std::reverse(r.components.begin(), r.components.end());
  return r;
}

PretzelClass classify_pretzel(const PretzelTangle& p) {
  PretzelClass out;
  out.oriented = reverse(p) != p;
  out.integer = std::all_of(p.components.begin(), p.components.end(),
                            [](const RationalTangle& t) { return t.entries.size() == 1; });
  return out;
}

namespace {

void check_family_pretzel(const PretzelTangle& p) {
  if (p.components.size() < 2) throw Error(ErrorKind::InvalidArgument, "pretzel needs at least two components");
  for (const auto& c : p.components) {
    if (c.entries.empty()) throw Error(ErrorKind::InvalidArgument, "empty pretzel component");
    if (c.entries.front() == 1)
      throw Error(ErrorKind::InvalidArgument, "pretzel component '" + render(c) + "' begins with 1");
  }
}

}  // namespace

TangleExpr generate_family(const FamilyParams& params) {
  check_family_pretzel(params.pretzel);
  if (params.k < 1) throw Error(ErrorKind::InvalidArgument, "family parameter k must be at least 1");
  RationalTangle ones;
  ones.entries.assign(static_cast<std::size_t>(4 * params.k - 2), 1);
  return generate_sandwich(params.pretzel, ones, false);
}

TangleExpr generate_sandwich(const PretzelTangle& p, const RationalTangle& middle,
                             bool reverse_second) {
  check_family_pretzel(p);
  TangleExpr e = to_expr(p);
  for (int v : middle.entries) e = TangleExpr::product(std::move(e), TangleExpr::integer(v));
  return TangleExpr::product(std::move(e), to_expr(reverse_second ? reverse(p) : p));
}

}  // namespace amphi
