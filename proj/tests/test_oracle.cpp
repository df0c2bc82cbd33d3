#include <doctest.h>

#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"

using namespace aztec;

namespace {

std::vector<Rational> ints(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("x"), ConfigError);
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
}

TEST_CASE("polynomials") {
  Polynomial p(ints({1, 1}));
  Polynomial q = p * p;
  CHECK(q == Polynomial(ints({1, 2, 1})));
  CHECK(q(Rational(2)) == 9);
  Polynomial r = Polynomial::monomial(Rational(3), 2);
  r += Polynomial(ints({0, 0, -3}));
  CHECK(r.degree() == -1);
}

TEST_CASE("tiling counts") {
  CHECK(enumerate_tilings(0).size() == 1);
  CHECK(enumerate_tilings(1).size() == 2);
  CHECK(enumerate_tilings(2).size() == 8);
  CHECK(enumerate_tilings(3).size() == 64);
  CHECK(enumerate_tilings(4).size() == 1024);
  for (const Tiling& t : enumerate_tilings(3)) CHECK(validate(t));
  CHECK_THROWS_AS(enumerate_tilings(5), ConfigError);
}

TEST_CASE("one-color partition function with distinct weights") {
  auto c = ints({2, 3, 5, 17});
  auto b = ints({7, 11, 13, 19});
  for (int n = 1; n <= 4; ++n) {
    std::vector<Rational> cn(c.begin(), c.begin() + n), bn(b.begin(), b.begin() + n);
    CHECK(exact_Z_polynomial(n, 1, cn, bn) == product_formula_polynomial(n, 1, cn, bn));
  }
  // 1 + c1 b1
  CHECK(exact_Z(1, 1, {ints({5}), ints({7}), Rational(1)}) == 36);
}

TEST_CASE("frozen partition functions") {
  // Values computed once by brute force and checked against the closed form.
  CHECK(exact_Z_polynomial(1, 2, ints({1}), ints({1})) == Polynomial(ints({2, 2})));
  CHECK(exact_Z_polynomial(2, 2, ints({1, 1}), ints({1, 1})) == Polynomial(ints({8, 24, 24, 8})));
  CHECK(exact_Z(2, 3, ExactWeights::uniform(2, Rational(1, 2))) == Rational(3375, 64));
}
