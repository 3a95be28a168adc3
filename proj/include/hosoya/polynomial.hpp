#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/arith.hpp"

namespace hosoya {

// Dense integer-coefficient polynomial. Hosoya polynomials always have a
// zero constant term; derivatives and shifted products may not, so the
// type stores coefficients from x^0 up and trims trailing zeros.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial from_coefficients(std::vector<Int> c) {
    Polynomial p;
    p.coeffs_ = std::move(c);
    p.trim();
    return p;
  }

  // Builds sum a[k-1] * x^k, the generating polynomial of a distance
  // distribution (implicit zero constant term).
  static Polynomial from_distance_counts(const std::vector<long long>& a) {
    std::vector<Int> c;
    c.reserve(a.size() + 1);
    c.emplace_back(0);
    for (long long v : a) {
      if (v < 0) throw std::invalid_argument("negative distance count");
      c.emplace_back(v);
    }
    return from_coefficients(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is 0 by convention.
  int degree() const {
    return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
  }

  Int coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Int(0);
  }

  // Exact value of the polynomial at a rational point.
  Rational eval(const Rational& x) const {
    Rational acc;  // Horner, highest term first
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + Rational(*it);
    return acc;
  }

  // Formal derivative applied `order` times.
  Polynomial derivative(unsigned order = 1) const {
    std::vector<Int> c = coeffs_;
    for (unsigned round = 0; round < order; ++round) {
      if (c.size() <= 1) {
        c.clear();
        break;
      }
      for (std::size_t k = 1; k < c.size(); ++k) c[k - 1] = c[k] * Int(k);
      c.pop_back();
    }
    return from_coefficients(std::move(c));
  }

  // Multiplies by x^power (power 1 or 2 in practice; any power accepted).
  Polynomial shift_multiply(unsigned power) const {
    if (is_zero()) return {};
    std::vector<Int> c(coeffs_.size() + power, Int(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k + power] = coeffs_[k];
    return from_coefficients(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return from_coefficients(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  // Canonical rendering: "9*x + 12*x^2", zero terms omitted, unit
  // coefficients rendered without the "1*". The zero polynomial is "0".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Int& c = coeffs_[k];
      if (c == 0) continue;
      Int mag = c < 0 ? Int(-c) : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      std::string term;
      if (k == 0) {
        term = mag.str();
      } else {
        if (mag != 1) term = mag.str() + "*";
        term += k == 1 ? "x" : "x^" + std::to_string(k);
      }
      out += term;
    }
    return out;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() == 1 && coeffs_[0] == 0) coeffs_.clear();
  }

  std::vector<Int> coeffs_;  // coeffs_[k] multiplies x^k; back() != 0
};

}  // namespace hosoya
