#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace amphi {

// Conway-notation expression tree. Leaves are integer tangles; 0, 1 and -1
// are the elementary ones. Product is left-associative (a b c = (a b) c).
struct TangleExpr {
  enum class Kind { Integer, Sum, Product, Ramification, Polyhedron };

  Kind kind = Kind::Integer;
  long value = 0;                     // Integer
  std::vector<TangleExpr> children;   // Sum/Product: 2, Ramification: >= 2, Polyhedron: slots
  std::string polyhedron;             // Polyhedron name, e.g. "6*"

  static TangleExpr integer(long n);
  static TangleExpr sum(TangleExpr a, TangleExpr b);
  static TangleExpr product(TangleExpr a, TangleExpr b);
  static TangleExpr ramification(std::vector<TangleExpr> parts);
  static TangleExpr poly(std::string name, std::vector<TangleExpr> slots);

  bool operator==(const TangleExpr&) const = default;
};

// Grammar: whitespace between factors is the Conway product, '+' is the sum,
// ',' inside parentheses is ramification, and "<n>*" followed by
// '.'-separated slots is polyhedral substitution. A leading '.' abbreviates
// "6*" with an empty first slot; empty and missing slots are 1.
TangleExpr parse(std::string_view text);

std::string render(const TangleExpr& expr);

// Sum of absolute values of the integer leaves.
long leaf_magnitude(const TangleExpr& expr);

// Rational tangle by its Conway symbol, e.g. {2, 1} for "2 1".
struct RationalTangle {
  std::vector<int> entries;

  bool operator==(const RationalTangle&) const = default;
};

RationalTangle parse_rational(std::string_view text);
std::string render(const RationalTangle& t);
TangleExpr to_expr(const RationalTangle& t);
RationalTangle reverse(const RationalTangle& t);
bool is_palindromic(const RationalTangle& t);

// Pretzel (Montesinos) tangle p1,...,pn with n >= 2.
struct PretzelTangle {
  std::vector<RationalTangle> components;

  bool operator==(const PretzelTangle&) const = default;
};

// Comma-separated rational tangles, e.g. "2 1,3".
PretzelTangle parse_pretzel(std::string_view text);
std::string render(const PretzelTangle& p);
TangleExpr to_expr(const PretzelTangle& p);
PretzelTangle reverse(const PretzelTangle& p);

struct PretzelClass {
  bool oriented = false;  // component list differs from its reverse
  bool integer = false;   // every component is a single integer
};

PretzelClass classify_pretzel(const PretzelTangle& p);

struct FamilyParams {
  PretzelTangle pretzel;
  int k = 1;
};

// (p1,...,pn) 1^(4k-2) (p1,...,pn). Components may not begin with 1.
TangleExpr generate_family(const FamilyParams& params);

// (p1,...,pn) t (p1,...,pn), or with the second pretzel reversed.
TangleExpr generate_sandwich(const PretzelTangle& p, const RationalTangle& middle,
                             bool reverse_second);

}  // namespace amphi
