#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ladderprod {

/// Dense integer polynomial in q; no trailing zero coefficients, so the zero
/// polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  using Coeff = std::int64_t;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPolynomial constant(Coeff c) { return IntPolynomial(std::vector<Coeff>{c}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Coeff coeff(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : 0; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff at_one() const {
    Coeff s = 0;
    for (Coeff c : c_) s += c;
    return s;
  }

  /// this += factor * q^shift * other
  void add_scaled(const IntPolynomial& other, Coeff factor, int shift) {
    if (other.c_.size() + shift > c_.size()) c_.resize(other.c_.size() + shift, 0);
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i + shift] += factor * other.c_[i];
    trim();
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    add_scaled(o, 1, 0);
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    add_scaled(o, -1, 0);
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "0", "1 + q", "1 + 2q + q^2", "1 - q^3".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t d = 0; d < c_.size(); ++d) {
      Coeff c = c_[d];
      if (c == 0) continue;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const Coeff a = c < 0 ? -c : c;
      if (d == 0 || a != 1) out += std::to_string(a);
      if (d >= 1) out += "q";
      if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = c_.size();
    for (Coeff c : c_) h = h * 1000003u ^ static_cast<std::size_t>(c + 0x9e3779b9);
    return h;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

struct IntPolynomialHash {
  std::size_t operator()(const IntPolynomial& p) const { return p.hash(); }
};

}  // namespace ladderprod
