#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ncpfact/cyclotomic.hpp"

using namespace ncpfact;

namespace {

// small random elements across a few conductors, for the axiom tests
CyclotomicNumber random_cyc(std::mt19937_64& rng, unsigned conductor) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  CyclotomicNumber x(conductor);
  for (unsigned k = 0; k < x.degree(); ++k) {
    CyclotomicNumber t = CyclotomicNumber::zeta(conductor, k);
    Rational coeff(num(rng), den(rng));
    if (coeff == 0) continue;
    x += CyclotomicNumber(conductor, coeff) * t;
  }
  return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the classical tables") {
  auto coeffs = [](unsigned n) {
    std::vector<long> v;
    for (const auto& c : cyclotomic_polynomial(n)) v.push_back(static_cast<long>(c));
    return v;
  };
  CHECK(coeffs(1) == std::vector<long>{-1, 1});
  CHECK(coeffs(2) == std::vector<long>{1, 1});
  CHECK(coeffs(3) == std::vector<long>{1, 1, 1});
  CHECK(coeffs(4) == std::vector<long>{1, 0, 1});
  CHECK(coeffs(5) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(coeffs(6) == std::vector<long>{1, -1, 1});
  CHECK(coeffs(10) == std::vector<long>{1, -1, 1, -1, 1});
  CHECK(coeffs(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("defining relations of small roots of unity") {
  auto i = CyclotomicNumber::zeta(4);
  CHECK(i * i == CyclotomicNumber(4, -1));  // zeta_4^2 = -1

  CyclotomicNumber sum(5, 1);
  for (int k = 1; k <= 4; ++k) sum += CyclotomicNumber::zeta(5, k);
  CHECK(sum.is_zero());  // all 5th roots of unity add to zero

  std::mt19937_64 rng(7);
  auto a = random_cyc(rng, 12);
  CHECK(a + CyclotomicNumber(12) == a);  // a + 0 = a
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(42);
  for (unsigned conductor : {1u, 4u, 5u, 6u, 12u}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_cyc(rng, conductor);
      auto b = random_cyc(rng, conductor);
      auto c = random_cyc(rng, conductor);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == CyclotomicNumber(conductor, 1));
        CHECK((a / a) == CyclotomicNumber(conductor, 1));
      }
    }
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(CyclotomicNumber(6).inverse(), std::domain_error);
  CHECK_THROWS_AS(CyclotomicNumber(4, 1) + CyclotomicNumber(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(CyclotomicNumber::parse("junk"), std::invalid_argument);
  CHECK_THROWS_AS(CyclotomicNumber::parse("6:[1]"), std::invalid_argument);  // wrong arity
  CHECK_THROWS_AS(CyclotomicNumber::zeta(6).promoted(4), std::invalid_argument);
}

TEST_CASE("canonical serialization round-trips byte-identically") {
  std::mt19937_64 rng(3);
  for (unsigned conductor : {1u, 2u, 4u, 6u, 10u, 12u}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_cyc(rng, conductor);
      std::string once = a.to_string();
      std::string twice = CyclotomicNumber::parse(once).to_string();
      CHECK(once == twice);
    }
  }
  // normalization: parse reduces to lowest terms with positive denominator
  CHECK(CyclotomicNumber::parse("4:[2/4,0]").to_string() == "4:[1/2,0]");
  CHECK(CyclotomicNumber::parse("4:[-3/-6,0]").to_string() == "4:[1/2,0]");
  CHECK(CyclotomicNumber::zeta(6).to_string() == "6:[0,1]");
}

TEST_CASE("conductor promotion") {
  // zeta_3 inside Q(zeta_6)
  CHECK(CyclotomicNumber::zeta(3).promoted(6) == CyclotomicNumber::zeta(6, 2));
  CHECK(CyclotomicNumber::zeta(6, 0) == CyclotomicNumber(6, 1));
  CHECK(CyclotomicNumber::zeta(6, -1) == CyclotomicNumber::zeta(6, 5));

  // the golden ratio constant used by the H3 catalog entry: phi^2 = phi + 1
  CyclotomicNumber phi(10, 1);
  phi += CyclotomicNumber::zeta(10, 2);
  phi -= CyclotomicNumber::zeta(10, 3);
  CHECK(phi * phi == phi + CyclotomicNumber(10, 1));
}
