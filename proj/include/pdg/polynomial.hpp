#pragma once

// Exact integer polynomials in one variable z.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace pdg {

using BigInt = boost::multiprecision::cpp_int;

/// Dense coefficients, index = degree. The zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading one.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(BigInt coefficient, int degree);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  BigInt coeff(int degree) const;

  BigInt eval(const BigInt& z) const;
  BigInt coeff_sum() const { return eval(1); }

  /// Adds c * z^degree.
  void add_term(const BigInt& c, int degree);

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial scaled(const BigInt& factor) const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }

  bool operator==(const IntPolynomial&) const = default;

  /// `2 + 10z + 4z^2`; omits zero terms and prints `0` for the zero polynomial.
  std::string to_string() const;
  /// Accepts the to_string form, e.g. `2 + 2z`, `-z^3 + 1`, `0`.
  static IntPolynomial parse(std::string_view text);

  /// `{"coeffs":[2,10,4]}`. Coefficients beyond 64 bits are written as strings.
  nlohmann::json to_json() const;
  static IntPolynomial from_json(const nlohmann::json& j);

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace pdg
