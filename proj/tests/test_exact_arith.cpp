#include <doctest.h>

#include <random>
#include <string>

#include "hopfelim/error.hpp"
#include "hopfelim/lincomb.hpp"
#include "hopfelim/rational.hpp"

using namespace hopfelim;

using Comb = LinComb<std::string>;

TEST_CASE("rational values are reduced with positive denominator") {
  const Rational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(a.denominator() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).str() == "0");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-3").str() == "-3");
  CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("rational errors") {
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("big coefficients stay exact") {
  Rational x(1);
  for (int i = 0; i < 40; ++i) x *= Rational(1000003);
  for (int i = 0; i < 40; ++i) x /= Rational(1000003);
  CHECK(x.is_one());
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
}

TEST_CASE("lincomb_add") {
  CHECK(lincomb_add(Comb{{"a", 1}}, Comb{{"a", -1}}).is_zero());
  const Comb disjoint = lincomb_add(Comb{{"a", Rational(1, 2)}}, Comb{{"b", 1}});
  CHECK(disjoint.size() == 2);
  CHECK(disjoint.coefficient("a") == Rational(1, 2));
  CHECK(disjoint.coefficient("b") == Rational(1));
  CHECK(lincomb_add(Comb{{"a", Rational(1, 3)}}, Comb{{"a", Rational(1, 6)}}) == Comb{{"a", Rational(1, 2)}});
}

TEST_CASE("lincomb_scale") {
  CHECK(lincomb_scale(Rational(0), Comb{{"a", 5}}).is_zero());
  const Comb x{{"a", 2}, {"b", Rational(-1, 3)}};
  CHECK(lincomb_scale(Rational(1), x) == x);
  CHECK(lincomb_scale(Rational(2, 3), Comb{{"a", Rational(3, 4)}}) == Comb{{"a", Rational(1, 2)}});
}

TEST_CASE("zero coefficients are never stored and iteration is key ordered") {
  Comb x;
  x.add("c", 1);
  x.add("a", 2);
  x.add("b", 0);
  x.add("c", -1);
  CHECK(x.size() == 1);
  CHECK(!x.contains("b"));
  x.add("b", 3);
  std::string order;
  for (const auto& [k, c] : x) order += k;
  CHECK(order == "ab");
}

namespace {

Comb random_comb(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> key(0, 4), num(-4, 4), den(1, 5), len(0, 4);
  Comb x;
  for (int i = len(rng); i > 0; --i) x.add(std::string(1, static_cast<char>('a' + key(rng))), Rational(num(rng), den(rng)));
  return x;
}

Rational random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 7);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("vector space axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 150; ++i) {
    const Comb x = random_comb(rng), y = random_comb(rng), z = random_comb(rng);
    const Rational a = random_scalar(rng), b = random_scalar(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + y == y + x);
    CHECK(x + Comb{} == x);
    CHECK((x + (-x)).is_zero());
    CHECK(a * (x + y) == a * x + a * y);
    CHECK((a + b) * x == a * x + b * x);
    CHECK((a * b) * x == a * (b * x));
    CHECK(Rational(1) * x == x);
  }
}

TEST_CASE("rational field identities on random values") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rank by exact elimination") {
  const std::vector<Comb> rows = {Comb{{"a", 1}, {"b", 1}}, Comb{{"b", 1}, {"c", 1}}, Comb{{"a", 1}, {"c", -1}},
                                  Comb{{"c", Rational(1, 2)}}};
  CHECK(rank(std::vector<Comb>(rows.begin(), rows.begin() + 3)) == 2);
  CHECK(rank(rows) == 3);
  CHECK(rank(std::vector<Comb>{}) == 0);
}
