#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "amphichiral/diagram.hpp"

namespace amphi {

// Integer Laurent polynomial in A. Zero coefficients are never stored;
// arithmetic throws on 64-bit overflow.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(int n) const;

  // A -> A^-1.
  LaurentPoly inverted() const;

  // Terms by ascending exponent, e.g. "-1*A^-4 + 1*A^0 - 2*A^3"; "0" if empty.
  std::string to_string() const;
  // {"<exp>": coeff, ...} by ascending exponent.
  std::string to_json() const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  void add_term(int exponent, std::int64_t coeff);
  std::map<int, std::int64_t> terms_;
};

inline constexpr int kBracketCrossingCap = 24;

// State sum over all 2^n smoothings: A^(a-b) * d^(loops-1) with
// d = -A^2 - A^-2. Throws CapExceeded above kBracketCrossingCap crossings.
LaurentPoly bracket(const Diagram& d, int threads = 1);

// Writhe with component i traversed forwards unless reverse[i] is set.
// Components are numbered as in components(); an empty vector means all
// forwards.
int writhe(const Diagram& d, const std::vector<bool>& reverse = {});

// (-A^3)^(-w) <D>.
LaurentPoly normalized(const Diagram& d, const std::vector<bool>& reverse = {}, int threads = 1);

// normalized(A) == normalized(A^-1). Only a necessary condition for
// amphicheirality; for links it depends on the chosen orientation.
bool mirror_symmetric(const Diagram& d, int threads = 1);

}  // namespace amphi
