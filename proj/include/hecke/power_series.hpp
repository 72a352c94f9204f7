#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
/// The zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}
  static Polynomial constant(const Rational& c);
  /// (1 - a t) for each a, multiplied together.
  static Polynomial from_inverse_roots(const std::vector<Rational>& inverse_roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i; zero outside the stored range (including i < 0).
  Rational operator[](int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& t) const;
  Polynomial derivative() const;
  /// p(-t)
  Polynomial negate_variable() const;
  Polynomial monic() const;
  bool has_integer_coefficients() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// "1,-2,1" (ascending); the zero polynomial renders as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, int k);

/// Formal power series known exactly through t^order.
class TruncSeries {
 public:
  TruncSeries() = default;
  /// Coefficients a_0..a_N; order = N = coeffs.size() - 1. Requires at least one coefficient.
  explicit TruncSeries(std::vector<Rational> coeffs);
  static TruncSeries from_polynomial(const Polynomial& p, int order);
  /// Expansion of p/q; requires q(0) != 0.
  static TruncSeries from_rational(const Polynomial& p, const Polynomial& q, int order);
  static TruncSeries one(int order);
  /// (1 - a t)^{-1}
  static TruncSeries geometric(const Rational& a, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// a_i, with a_i = 0 for i < 0. Throws std::out_of_range for i > order.
  Rational operator[](int i) const;

  TruncSeries truncated(int order) const;
  /// f(a t)
  TruncSeries substitute_scale(const Rational& a) const;
  /// f(-t)
  TruncSeries substitute_negate() const;
  /// 1/f; throws Error if a_0 == 0.
  TruncSeries inverse() const;

  friend TruncSeries operator*(const TruncSeries& f, const TruncSeries& g);
  friend bool operator==(const TruncSeries& f, const TruncSeries& g) { return f.coeffs_ == g.coeffs_; }

  std::string to_string() const { return join_rationals(coeffs_); }

 private:
  std::vector<Rational> coeffs_;
};

/// Parses the series wire format "1, 2, 2, 2".
TruncSeries parse_series(const std::string& text);

}  // namespace hecke
