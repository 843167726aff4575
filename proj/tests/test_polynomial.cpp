#include "doctest.h"
#include "pdg/error.hpp"
#include "pdg/polynomial.hpp"
#include "support.hpp"

using pdg::BigInt;
using pdg::IntPolynomial;

TEST_SUITE("polynomial") {

TEST_CASE("ring operations on small values") {
  const IntPolynomial p{2, 2};
  CHECK(p * p == IntPolynomial{4, 8, 4});
  CHECK(p + IntPolynomial{} == p);
  CHECK(p - p == IntPolynomial{});
  CHECK((p - p).is_zero());
  CHECK(IntPolynomial{2, 10, 4}.coeff_sum() == 16);
  CHECK(IntPolynomial{0, 0, 0}.degree() == -1);
  CHECK(IntPolynomial{1, 0, 3}.coeff(5) == 0);
  CHECK(IntPolynomial{1, 0, 3}.eval(2) == 13);
  CHECK(IntPolynomial::monomial(3, 2) == IntPolynomial{0, 0, 3});
  CHECK(IntPolynomial{1, 2}.scaled(0).is_zero());
}

TEST_CASE("text form") {
  CHECK(IntPolynomial{2, 10, 4}.to_string() == "2 + 10z + 4z^2");
  CHECK(IntPolynomial{0, 1}.to_string() == "z");
  CHECK(IntPolynomial{0, 8, 8}.to_string() == "8z + 8z^2");
  CHECK(IntPolynomial{16}.to_string() == "16");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{1, -1, 0, -3}.to_string() == "1 - z - 3z^3");
  CHECK(IntPolynomial::parse("2 + 10z + 4z^2") == IntPolynomial{2, 10, 4});
  CHECK(IntPolynomial::parse("-z^3 + 1") == IntPolynomial{1, 0, 0, -1});
  CHECK(IntPolynomial::parse("0").is_zero());
  CHECK_THROWS_AS(IntPolynomial::parse("2 + + z"), pdg::Error);
}

TEST_CASE("json form") {
  const IntPolynomial p{2, 10, 4};
  CHECK(p.to_json().dump() == R"({"coeffs":[2,10,4]})");
  CHECK(IntPolynomial::from_json(p.to_json()) == p);
  const IntPolynomial big = IntPolynomial::monomial(BigInt(1) << 100, 1);
  CHECK(IntPolynomial::from_json(big.to_json()) == big);
  CHECK_THROWS_AS(IntPolynomial::from_json(nlohmann::json::object()), pdg::Error);
}

TEST_CASE("ring axioms on random wide coefficients") {
  const auto random_poly = [] {
    std::vector<BigInt> c(pdg::test::uniform(0, 5));
    for (auto& x : c) {
      x = BigInt(pdg::test::uniform(-1000000, 1000000));
      x <<= pdg::test::uniform(0, 90);
    }
    return IntPolynomial(std::move(c));
  };
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b).eval(3) == a.eval(3) * b.eval(3));
    CHECK(IntPolynomial::parse(a.to_string()) == a);
    CHECK(IntPolynomial::from_json(a.to_json()) == a);
  }
}

}
