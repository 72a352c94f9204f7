#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/partitions.hpp"
#include "hecke/power_series.hpp"
#include "hecke/symfunc.hpp"

namespace hecke {

/// p/q with p(0) = q(0) = 1 and gcd(p, q) = 1.
struct RationalForm {
  Polynomial numerator;
  Polynomial denominator;

  TruncSeries expand(int order) const { return TruncSeries::from_rational(numerator, denominator, order); }
  /// "num=1,1; den=1,-1"
  std::string to_string() const;
  /// Accepts "num=...; den=..." as well as the short form "1,1;1,-1".
  static RationalForm parse(const std::string& text);
  friend bool operator==(const RationalForm&, const RationalForm&) = default;
};

/// The k x k minor f^(s_{(i^k)}) = det(a_{i - r + c}).
Rational hankel_minor(const TruncSeries& f, int i, int k);

struct RationalDetection {
  RationalForm form;
  int order = 0;          ///< degree of the denominator (recurrence order)
  int onset = 0;          ///< the recurrence holds for every coefficient index >= onset
  int truncation = 0;     ///< evidence window ends at this coefficient
};

/// Smallest-order rational form consistent with every coefficient of f.
///
/// For r = 0..r_max and numerator degree s = 0..r_max, the recurrence
/// a_m = c_1 a_{m-1} + ... + c_r a_{m-r} is required for all s < m <= N. The
/// pair (r, s) is admissible only if that window holds at least r + 1
/// equations, so at least one equation checks the solved coefficients. The
/// least admissible r wins, then the least s. Bounding both degrees by
/// r_max makes the answer unique once N >= 2 r_max + 2. Requires a_0 = 1;
/// returns nullopt when nothing fits.
std::optional<RationalDetection> detect_rational(const TruncSeries& f, int r_max);

struct PositivityViolation {
  Partition lambda;
  Rational value;
};

/// First partition (by weight, then descending lexicographic) with f^(s_lambda) < 0.
std::optional<PositivityViolation> total_positivity(const TruncSeries& f, int max_weight);

/// H_S(t) = f1(-t)/f0(t), where f0, f1 have constant term 1 and only positive real roots.
struct BirankCertificate {
  Polynomial f0;
  Polynomial f1;
  int r0 = 0;
  int r1 = 0;
  bool roots_verified = false;
  int truncation = 0;  ///< coefficient window the certificate was detected from (0 if built from polynomials)

  TruncSeries symmetric_series(int order) const;
  /// H_Lambda(t) = f0(-t)/f1(t)
  TruncSeries exterior_series(int order) const;
  std::string to_string() const;
};

/// Detects f = p/q, sets f0 = q and f1(t) = p(-t), and certifies integrality,
/// positive real roots (Sturm) and r0 + r1 <= a_1.
/// Throws InconclusiveError if detection fails, CertificateError otherwise.
BirankCertificate birank_certificate(const TruncSeries& f, int r_max);

/// Validated certificate from explicit polynomials (constant terms 1, positive real roots).
BirankCertificate certificate_from_polynomials(const Polynomial& f0, const Polynomial& f1);

/// H_Lambda(t) = 1/f(-t)
TruncSeries exterior_from_symmetric(const TruncSeries& f);

/// c_n = sum_{lambda in P(n)} f^(s_lambda) g^(s_lambda) = <xi_n(f), xi_n(g)>.
TruncSeries diamond(const TruncSeries& f, const TruncSeries& g, int order);

/// Hilbert series of A(R', R) as diamond of the two symmetric-algebra series.
/// When all roots are rational the four-fold product formula is also
/// evaluated; a disagreement throws ConsistencyError.
TruncSeries predict_A_series(const BirankCertificate& cert, const BirankCertificate& cert2, int order);

/// The four-fold product prod(1 + b a' t) prod(1 + a b' t) / prod(1 - a a' t) prod(1 - b b' t),
/// available when f0, f1, f0', f1' split into rational linear factors.
std::optional<TruncSeries> closed_form_A_series(const BirankCertificate& cert, const BirankCertificate& cert2,
                                                int order);

/// H_E(t) = 1/H_A(-t)
TruncSeries e_series_from_a(const TruncSeries& a_series);

/// The values a with p(t) = c * prod (1 - a t), when p splits over Q.
std::optional<std::vector<Rational>> rational_inverse_roots(const Polynomial& p);

/// Number of distinct real roots of p in the open interval (0, +inf), by Sturm sequence.
int count_positive_roots(const Polynomial& p);

/// Whether all deg(p) roots of p (with multiplicity) are real and positive.
/// Throws Error for the zero polynomial.
bool sturm_all_roots_positive(const Polynomial& p);

}  // namespace hecke
