#include "hecke/series.hpp"

#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

namespace {

// Solves the overdetermined system rows * x = rhs exactly. Returns nullopt when
// it is inconsistent or does not determine x uniquely.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < unknowns && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) return std::nullopt;
    std::swap(rows[sel], rows[pivot_row]);
    const Rational lead = rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  if (pivot_cols.size() != unknowns) return std::nullopt;
  for (std::size_t r = pivot_row; r < rows.size(); ++r)
    if (rows[r][unknowns] != 0) return std::nullopt;
  std::vector<Rational> x(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) x[i] = rows[i][unknowns];
  return x;
}

Polynomial truncate(const Polynomial& p, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree && i <= p.degree(); ++i) c.push_back(p[i]);
  return Polynomial(std::move(c));
}

void require_unit_constant(const TruncSeries& f, const char* what) {
  if (f[0] != 1) throw Error(std::string(what) + " must have constant term 1");
}

}  // namespace

std::string RationalForm::to_string() const {
  return "num=" + numerator.to_string() + "; den=" + denominator.to_string();
}

RationalForm RationalForm::parse(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("rational form needs 'num; den'", 1, 1);
  if (text.find(';', semi + 1) != std::string::npos)
    throw ParseError("rational form has more than one ';'", 1, static_cast<int>(text.find(';', semi + 1)) + 1);
  auto side = [&](std::string part, const std::string& key, std::size_t offset) {
    auto first = part.find_first_not_of(" \t");
    if (first != std::string::npos && part.compare(first, key.size(), key) == 0) part = part.substr(first + key.size());
    try {
      return Polynomial(parse_rational_list(part));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), 1, static_cast<int>(offset) + e.column());
    }
  };
  RationalForm form{side(text.substr(0, semi), "num=", 0), side(text.substr(semi + 1), "den=", semi + 1)};
  if (form.denominator[0] == 0) throw ParseError("denominator must have nonzero constant term", 1, static_cast<int>(semi) + 2);
  return form;
}

Rational hankel_minor(const TruncSeries& f, int i, int k) {
  if (k < 1 || i < 0) throw Error("hankel_minor needs i >= 0 and k >= 1");
  if (i + k - 1 > f.order())
    throw Error("truncation order " + std::to_string(f.order()) + " is too small for a " + std::to_string(k) + "x" +
                std::to_string(k) + " minor at i = " + std::to_string(i));
  const auto n = static_cast<std::size_t>(k);
  DenseMatrix m(n, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = f[i - r + c];
  return determinant(std::move(m));
}

std::optional<RationalDetection> detect_rational(const TruncSeries& f, int r_max) {
  const int n = f.order();
  if (f[0] != 1) return std::nullopt;
  for (int r = 0; r <= r_max; ++r) {
    for (int s = 0; s <= r_max && n - s >= r + 1; ++s) {
      std::vector<std::vector<Rational>> rows;
      for (int m = s + 1; m <= n; ++m) {
        std::vector<Rational> row;
        for (int j = 1; j <= r; ++j) row.push_back(f[m - j]);
        row.push_back(f[m]);
        rows.push_back(std::move(row));
      }
      auto c = solve_unique(std::move(rows), static_cast<std::size_t>(r));
      if (!c) continue;
      if (r > 0 && c->back() == 0) continue;
      std::vector<Rational> qc{Rational(1)};
      for (const auto& x : *c) qc.push_back(-x);
      Polynomial q(std::move(qc));
      Polynomial p = truncate(q * Polynomial(f.coeffs()), s);
      if (gcd(p, q).degree() != 0) continue;
      if (TruncSeries::from_rational(p, q, n) != f) continue;
      return RationalDetection{RationalForm{p, q}, r, s + 1, n};
    }
  }
  return std::nullopt;
}

std::optional<PositivityViolation> total_positivity(const TruncSeries& f, int max_weight) {
  if (max_weight > f.order())
    throw Error("max weight " + std::to_string(max_weight) + " exceeds truncation order " + std::to_string(f.order()));
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& lambda : enumerate_partitions(w)) {
      Rational v = schur_determinant(f, lambda);
      if (v < 0) return PositivityViolation{lambda, v};
    }
  return std::nullopt;
}

TruncSeries BirankCertificate::symmetric_series(int order) const {
  return TruncSeries::from_rational(f1.negate_variable(), f0, order);
}

TruncSeries BirankCertificate::exterior_series(int order) const {
  return TruncSeries::from_rational(f0.negate_variable(), f1, order);
}

std::string BirankCertificate::to_string() const {
  std::ostringstream out;
  out << "f0=" << f0.to_string() << "; f1=" << f1.to_string() << "; birank=(" << r0 << "," << r1 << ")"
      << "; roots=" << (roots_verified ? "verified" : "unverified");
  if (truncation > 0) out << "; truncation=" << truncation;
  return out.str();
}

BirankCertificate certificate_from_polynomials(const Polynomial& f0, const Polynomial& f1) {
  for (const auto* p : {&f0, &f1})
    if ((*p)[0] != 1) throw CertificateError("constant term of " + p->to_string() + " is not 1");
  for (const auto* p : {&f0, &f1})
    if (!sturm_all_roots_positive(*p))
      throw CertificateError("not all roots of " + p->to_string() + " are positive reals");
  BirankCertificate cert;
  cert.f0 = f0;
  cert.f1 = f1;
  cert.r0 = f0.degree();
  cert.r1 = f1.degree();
  cert.roots_verified = true;
  return cert;
}

BirankCertificate birank_certificate(const TruncSeries& f, int r_max) {
  if (f[0] != 1) throw CertificateError("Hilbert series must start with 1");
  if (auto bad = total_positivity(f, f.order()))
    throw CertificateError("series is not totally positive: f^(s" + bad->lambda.to_string() +
                           ") = " + hecke::to_string(bad->value));
  auto found = detect_rational(f, r_max);
  if (!found) throw InconclusiveError("inconclusive at this truncation (order " + std::to_string(f.order()) + ")");
  const Polynomial& q = found->form.denominator;
  const Polynomial f1 = found->form.numerator.negate_variable();
  for (const auto* p : {&q, &f1})
    if (!p->has_integer_coefficients())
      throw CertificateError("polynomial " + p->to_string() + " has non-integer coefficients");
  BirankCertificate cert = certificate_from_polynomials(q, f1);
  cert.truncation = f.order();
  if (f.order() >= 1 && cert.r0 + cert.r1 > f[1])
    throw CertificateError("birank (" + std::to_string(cert.r0) + "," + std::to_string(cert.r1) +
                           ") exceeds a_1 = " + hecke::to_string(f[1]));
  return cert;
}

TruncSeries exterior_from_symmetric(const TruncSeries& f) {
  require_unit_constant(f, "series");
  return f.substitute_negate().inverse();
}

TruncSeries diamond(const TruncSeries& f, const TruncSeries& g, int order) {
  require_unit_constant(f, "left operand of diamond");
  require_unit_constant(g, "right operand of diamond");
  if (f.order() < order || g.order() < order)
    throw Error("diamond to order " + std::to_string(order) + " needs both operands to that order");
  std::vector<Rational> c;
  for (int n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (const auto& lambda : enumerate_partitions(n)) {
      Rational x = schur_determinant(f, lambda);
      if (x != 0) acc += x * schur_determinant(g, lambda);
    }
    c.push_back(acc);
  }
  return TruncSeries(std::move(c));
}

std::optional<TruncSeries> closed_form_A_series(const BirankCertificate& cert, const BirankCertificate& cert2,
                                                int order) {
  auto alpha = rational_inverse_roots(cert.f0);
  auto beta = rational_inverse_roots(cert.f1);
  auto alpha2 = rational_inverse_roots(cert2.f0);
  auto beta2 = rational_inverse_roots(cert2.f1);
  if (!alpha || !beta || !alpha2 || !beta2) return std::nullopt;
  std::vector<Rational> num, den;
  for (const auto& b : *beta)
    for (const auto& a : *alpha2) num.push_back(b * a);
  for (const auto& a : *alpha)
    for (const auto& b : *beta2) num.push_back(a * b);
  for (const auto& a : *alpha)
    for (const auto& a2 : *alpha2) den.push_back(a * a2);
  for (const auto& b : *beta)
    for (const auto& b2 : *beta2) den.push_back(b * b2);
  // prod (1 + x t) = P(-t) for P = prod (1 - x t)
  return TruncSeries::from_rational(Polynomial::from_inverse_roots(num).negate_variable(),
                                    Polynomial::from_inverse_roots(den), order);
}

TruncSeries predict_A_series(const BirankCertificate& cert, const BirankCertificate& cert2, int order) {
  TruncSeries result = diamond(cert.symmetric_series(order), cert2.symmetric_series(order), order);
  if (auto closed = closed_form_A_series(cert, cert2, order); closed && *closed != result)
    throw ConsistencyError("diamond product " + result.to_string() + " disagrees with the product formula " +
                           closed->to_string());
  return result;
}

TruncSeries e_series_from_a(const TruncSeries& a_series) {
  require_unit_constant(a_series, "A-series");
  return a_series.substitute_negate().inverse();
}

}  // namespace hecke
