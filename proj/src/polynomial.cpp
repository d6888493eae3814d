#include "chordweights/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "chordweights/errors.hpp"

namespace chordweights {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

} // namespace

BivariatePolynomial::BivariatePolynomial(std::int64_t constant) { add_term({0, 0}, constant); }

BivariatePolynomial BivariatePolynomial::monomial(std::int64_t coeff, int exp_a, int exp_b) {
  if (exp_a < 0) throw PreconditionError("exponent of a must be non-negative");
  BivariatePolynomial p;
  p.add_term({exp_a, exp_b}, coeff);
  return p;
}

void BivariatePolynomial::add_term(Exponents e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t BivariatePolynomial::coefficient(int exp_a, int exp_b) const {
  auto it = terms_.find({exp_a, exp_b});
  return it == terms_.end() ? 0 : it->second;
}

bool BivariatePolynomial::has_negative_exponent() const {
  for (const auto &[e, c] : terms_)
    if (e.second < 0) return true;
  return false;
}

BivariatePolynomial BivariatePolynomial::invert_b() const {
  BivariatePolynomial out;
  for (const auto &[e, c] : terms_) out.add_term({e.first, -e.second}, c);
  return out;
}

BivariatePolynomial BivariatePolynomial::shifted(int exp_a, int exp_b) const {
  BivariatePolynomial out;
  for (const auto &[e, c] : terms_) {
    if (e.first + exp_a < 0) throw PreconditionError("exponent of a must be non-negative");
    out.add_term({e.first + exp_a, e.second + exp_b}, c);
  }
  return out;
}

BivariatePolynomial &BivariatePolynomial::operator+=(const BivariatePolynomial &o) {
  for (const auto &[e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivariatePolynomial &BivariatePolynomial::operator-=(const BivariatePolynomial &o) {
  for (const auto &[e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

BivariatePolynomial &BivariatePolynomial::operator*=(const BivariatePolynomial &o) {
  BivariatePolynomial out;
  for (const auto &[e1, c1] : terms_)
    for (const auto &[e2, c2] : o.terms_)
      out.add_term({e1.first + e2.first, e1.second + e2.second}, checked_mul(c1, c2));
  *this = std::move(out);
  return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial out;
  out -= *this;
  return out;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned e) const {
  BivariatePolynomial result(1);
  BivariatePolynomial base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string BivariatePolynomial::to_string(std::string_view a_name, std::string_view b_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    const bool negative = c < 0;
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const std::uint64_t mag = negative ? std::uint64_t{0} - static_cast<std::uint64_t>(c)
                                       : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    const auto factor = [&](std::string_view name, int exp) {
      if (exp == 0) return;
      mono << (any ? "*" : "") << name;
      if (exp != 1) mono << '^' << exp;
      any = true;
    };
    factor(a_name, e.first);
    factor(b_name, e.second);
    if (!any) {
      out << mag;
    } else if (mag == 1) {
      out << mono.str();
    } else {
      out << mag << '*' << mono.str();
    }
  }
  return out.str();
}

} // namespace chordweights
