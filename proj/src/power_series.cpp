#include "hecke/power_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::from_inverse_roots(const std::vector<Rational>& inverse_roots) {
  Polynomial p = constant(1);
  for (const auto& a : inverse_roots) p = p * Polynomial{Rational(1), Rational(-a)};
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::negate_variable() const {
  std::vector<Rational> out = coeffs_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational lead = leading();
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c /= lead;
  return Polynomial(std::move(out));
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const { return is_zero() ? std::string("0") : join_rationals(coeffs_, ","); }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial pow(const Polynomial& p, int k) {
  Polynomial r = Polynomial::constant(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least one coefficient");
}

TruncSeries TruncSeries::from_polynomial(const Polynomial& p, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) c[static_cast<std::size_t>(i)] = p[i];
  return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::from_rational(const Polynomial& p, const Polynomial& q, int order) {
  return from_polynomial(p, order) * from_polynomial(q, order).inverse();
}

TruncSeries TruncSeries::one(int order) { return from_polynomial(Polynomial::constant(1), order); }

TruncSeries TruncSeries::geometric(const Rational& a, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order + 1));
  Rational power = 1;
  for (auto& x : c) {
    x = power;
    power *= a;
  }
  return TruncSeries(std::move(c));
}

Rational TruncSeries::operator[](int i) const {
  if (i < 0) return 0;
  if (i > order()) throw std::out_of_range("series coefficient " + std::to_string(i) + " beyond truncation order " +
                                           std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
  return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries TruncSeries::substitute_scale(const Rational& a) const {
  std::vector<Rational> c = coeffs_;
  Rational power = 1;
  for (auto& x : c) {
    x *= power;
    power *= a;
  }
  return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::substitute_negate() const { return substitute_scale(-1); }

TruncSeries TruncSeries::inverse() const {
  if (coeffs_[0] == 0) throw Error("series with zero constant term is not invertible");
  std::vector<Rational> b(coeffs_.size());
  b[0] = 1 / coeffs_[0];
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * b[n - i];
    b[n] = -acc * b[0];
  }
  return TruncSeries(std::move(b));
}

TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
  std::size_t len = std::min(f.coeffs_.size(), g.coeffs_.size());
  std::vector<Rational> c(len);
  for (std::size_t n = 0; n < len; ++n)
    for (std::size_t i = 0; i <= n; ++i) c[n] += f.coeffs_[i] * g.coeffs_[n - i];
  return TruncSeries(std::move(c));
}

TruncSeries parse_series(const std::string& text) {
  auto c = parse_rational_list(text);
  if (c.empty()) throw ParseError("empty coefficient list");
  return TruncSeries(std::move(c));
}

}  // namespace hecke
