#include "pdg/polynomial.hpp"

#include <cctype>
#include <limits>

#include "pdg/error.hpp"

namespace pdg {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, int degree) {
  IntPolynomial p;
  p.add_term(coefficient, degree);
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[degree];
}

BigInt IntPolynomial::eval(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void IntPolynomial::add_term(const BigInt& c, int degree) {
  if (c == 0) return;
  if (static_cast<int>(coeffs_.size()) <= degree) coeffs_.resize(degree + 1);
  coeffs_[degree] += c;
  trim();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::scaled(const BigInt& factor) const {
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c *= factor;
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const BigInt& c = coeffs_[d];
    if (c == 0) continue;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (d == 0 || magnitude != 1) out += magnitude.str();
    if (d >= 1) out += 'z';
    if (d >= 2) out += '^' + std::to_string(d);
  }
  return out;
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  IntPolynomial p;
  std::size_t i = 0;
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto fail = [&](const char* why) {
    throw Error(ErrorCode::ParseError, std::string(why) + " in polynomial '" + std::string(text) + "'");
  };
  const auto digits = [&] {
    std::string s;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) s += text[i++];
    return s;
  };

  skip();
  if (i == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    const std::string number = digits();
    BigInt c = number.empty() ? BigInt(1) : BigInt(number);
    int degree = 0;
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    if (i < text.size() && text[i] == 'z') {
      ++i;
      degree = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        const std::string exponent = digits();
        if (exponent.empty() || exponent.size() > 6) fail("bad exponent");
        degree = std::stoi(exponent);
      }
    } else if (number.empty()) {
      fail("expected a coefficient or z");
    }
    p.add_term(sign * c, degree);
  }
  return p;
}

nlohmann::json IntPolynomial::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
      coeffs.push_back(c.convert_to<long long>());
    } else {
      coeffs.push_back(c.str());
    }
  }
  return {{"coeffs", coeffs}};
}

IntPolynomial IntPolynomial::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(ErrorCode::ParseError, "polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long long>());
    } else if (c.is_string()) {
      try {
        coeffs.emplace_back(c.get<std::string>());
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad coefficient " + c.dump());
      }
    } else {
      throw Error(ErrorCode::ParseError, "bad coefficient " + c.dump());
    }
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace pdg
