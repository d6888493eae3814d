#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace chordweights {

// Sparse polynomial in a (non-negative exponents) and b (Laurent) with exact
// 64-bit integer coefficients; arithmetic throws std::overflow_error instead
// of wrapping. Polynomials in a single variable x are stored with exp_a = 0
// and x in the b slot.
class BivariatePolynomial {
public:
  // Terms ordered by exp_a descending, then exp_b descending.
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, std::int64_t, std::greater<>>;

  BivariatePolynomial() = default;
  BivariatePolynomial(std::int64_t constant); // NOLINT: integers promote implicitly

  static BivariatePolynomial monomial(std::int64_t coeff, int exp_a, int exp_b);
  static BivariatePolynomial a() { return monomial(1, 1, 0); }
  static BivariatePolynomial b() { return monomial(1, 0, 1); }
  // Univariate x^e.
  static BivariatePolynomial x_power(int e) { return monomial(1, 0, e); }

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int exp_a, int exp_b) const;
  bool has_negative_exponent() const;

  // p(x) -> p(1/x) in the b slot.
  BivariatePolynomial invert_b() const;
  // Multiply by a^ea b^eb.
  BivariatePolynomial shifted(int exp_a, int exp_b) const;

  BivariatePolynomial &operator+=(const BivariatePolynomial &o);
  BivariatePolynomial &operator-=(const BivariatePolynomial &o);
  BivariatePolynomial &operator*=(const BivariatePolynomial &o);
  BivariatePolynomial operator-() const;

  friend BivariatePolynomial operator+(BivariatePolynomial l, const BivariatePolynomial &r) {
    return l += r;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial l, const BivariatePolynomial &r) {
    return l -= r;
  }
  friend BivariatePolynomial operator*(BivariatePolynomial l, const BivariatePolynomial &r) {
    return l *= r;
  }
  friend BivariatePolynomial operator*(BivariatePolynomial l, std::int64_t k) {
    return l *= BivariatePolynomial(k);
  }

  BivariatePolynomial pow(unsigned e) const;

  // "a^2*b - a^2"; unit coefficients elided; "0" for the zero polynomial.
  std::string to_string(std::string_view a_name = "a", std::string_view b_name = "b") const;
  // Univariate rendering with the b slot named x.
  std::string to_x_string() const { return to_string("a", "x"); }

  friend bool operator==(const BivariatePolynomial &, const BivariatePolynomial &) = default;

private:
  void add_term(Exponents e, std::int64_t c);

  TermMap terms_;
};

} // namespace chordweights
