#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "chordweights/polynomial.hpp"

using namespace chordweights;

using P = BivariatePolynomial;

TEST_CASE("polynomial formatting") {
  const P a = P::a();
  const P b = P::b();
  CHECK(P().to_string() == "0");
  CHECK(P(-1).to_string() == "-1");
  CHECK((a * a * 2).to_string() == "2*a^2");
  CHECK((a * a * b - a * a).to_string() == "a^2*b - a^2");
  CHECK((a * b).to_string() == "a*b");
  CHECK((P(1) - P::x_power(1)).to_x_string() == "-x + 1");
  CHECK(P::monomial(3, 0, -2).to_string() == "3*b^-2");
}

TEST_CASE("polynomial arithmetic") {
  const P a = P::a();
  const P b = P::b();
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK((a + b).pow(2) == a * a + a * b * 2 + b * b);
  CHECK(b.pow(0) == P(1));
  CHECK(a - a == P());
  CHECK((a - a).is_zero());
  CHECK(-(a * b) == P::monomial(-1, 1, 1));
  CHECK((a * b * 3).coefficient(1, 1) == 3);
  CHECK((a * b * 3).coefficient(0, 1) == 0);
  CHECK(b.shifted(2, -1) == a * a);
  CHECK_FALSE(b.has_negative_exponent());

  const P x = P::x_power(1);
  const P p = x * x - x * 3 + P(2);
  const P q = p.invert_b();
  CHECK(q.has_negative_exponent());
  CHECK(q.coefficient(0, -2) == 1);
  CHECK(q.coefficient(0, -1) == -3);
  CHECK(q.invert_b() == p);
}

TEST_CASE("polynomial overflow is detected") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(P(big) + P(1), std::overflow_error);
  CHECK_THROWS_AS(P(big) * P(2), std::overflow_error);
  CHECK_THROWS_AS(P(std::numeric_limits<std::int64_t>::min()) - P(1), std::overflow_error);
  CHECK_NOTHROW(P(big) - P(1));
}
