#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/partitions.hpp"
#include "hecke/power_series.hpp"
#include "hecke/rational.hpp"

namespace hecke {

enum class Basis { m, h, e, s };

char basis_tag(Basis b);
Basis parse_basis(char tag);

/// Homogeneous symmetric function of a fixed degree expanded in one of the
/// bases m, h, e, s. Zero coefficients are never stored.
class SymElement {
 public:
  using Terms = std::map<Partition, Rational, std::greater<>>;

  SymElement(int degree, Basis basis) : degree_(degree), basis_(basis) {}
  static SymElement basis_element(Basis basis, const Partition& lambda, const Rational& coeff = 1);
  /// The unit, degree 0.
  static SymElement one(Basis basis = Basis::s) { return basis_element(basis, Partition()); }

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& lambda) const;

  /// Adds c * b_lambda. Throws std::invalid_argument if |lambda| != degree.
  void add(const Partition& lambda, const Rational& c);

  SymElement& operator+=(const SymElement& other);
  SymElement& operator*=(const Rational& c);
  friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
  friend SymElement operator-(SymElement a, const SymElement& b);
  friend bool operator==(const SymElement& a, const SymElement& b) {
    return a.degree_ == b.degree_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  /// "h: 2*[2] + 1*[1,1]" in descending lexicographic order; zero is "h: 0".
  std::string to_string() const;
  static SymElement parse(const std::string& text);

 private:
  int degree_;
  Basis basis_;
  Terms terms_;
};

/// Per-degree transition data between the four bases.
struct DegreeTables {
  int degree = 0;
  std::vector<Partition> partitions;  ///< descending lexicographic
  std::map<Partition, std::size_t> index;
  std::vector<std::size_t> conjugate;  ///< index of the conjugate partition
  DenseMatrix kostka;  ///< (i, j) = K_{p_i, p_j}, so h_{p_j} = sum_i K_{ij} s_{p_i}; upper unitriangular
  DenseMatrix kostka_inverse;
};

/// Transition data for the monomial basis, built separately because the
/// matrix counts are the expensive part.
struct MonomialTables {
  DenseMatrix counts;           ///< (i, j) = N_{p_i, p_j}, so h_{p_i} = sum_j N_{ij} m_{p_j}
  DenseMatrix counts_t_inverse; ///< (N^T)^{-1}: m-coefficients to h-coefficients
};

/// Write-once-per-degree memo of DegreeTables. Safe for concurrent readers;
/// each degree is built exactly once.
class TransitionCache {
 public:
  static constexpr int kDefaultMaxDegree = 14;
  static constexpr int kHardMaxDegree = 24;

  explicit TransitionCache(int max_degree = kDefaultMaxDegree);
  TransitionCache(const TransitionCache&) = delete;
  TransitionCache& operator=(const TransitionCache&) = delete;

  int max_degree() const { return max_degree_; }
  /// Throws CapExceeded beyond max_degree.
  const DegreeTables& at(int degree) const;
  const MonomialTables& monomial(int degree) const;

  static TransitionCache& global();

 private:
  int max_degree_;
  mutable std::array<std::once_flag, kHardMaxDegree + 1> once_;
  mutable std::array<std::unique_ptr<DegreeTables>, kHardMaxDegree + 1> tables_;
  mutable std::array<std::once_flag, kHardMaxDegree + 1> monomial_once_;
  mutable std::array<std::unique_ptr<MonomialTables>, kHardMaxDegree + 1> monomial_;
};

SymElement to_basis(const SymElement& u, Basis target, const TransitionCache& cache = TransitionCache::global());

/// Product in the s-basis through Littlewood-Richardson coefficients.
SymElement multiply(const SymElement& u, const SymElement& v, const TransitionCache& cache = TransitionCache::global());

/// Hall inner product; throws std::invalid_argument on degree mismatch.
Rational inner_product(const SymElement& u, const SymElement& v,
                       const TransitionCache& cache = TransitionCache::global());

/// The involution h_n <-> e_n. Returns the image in the basis of the argument.
SymElement omega(const SymElement& u, const TransitionCache& cache = TransitionCache::global());

/// f^(u) for the ring homomorphism h_n -> a_n, evaluated through the h-basis.
/// Throws Error when deg u exceeds the truncation order of f.
Rational hom_eval(const TruncSeries& f, const SymElement& u, const TransitionCache& cache = TransitionCache::global());

/// f^(s_lambda) as the Toeplitz determinant det(a_{lambda_i - i + j}).
Rational schur_determinant(const TruncSeries& f, const Partition& lambda);

/// xi_n(f) = sum_lambda f^(s_lambda) s_lambda.
SymElement xi(const TruncSeries& f, int n, const TransitionCache& cache = TransitionCache::global());

/// One alphabet of a super specialization: either explicit values or a
/// polynomial f with f(t) = prod (1 - x t) over the (never extracted) values x.
using AlphabetSpec = std::variant<std::vector<Rational>, Polynomial>;

/// The series sum_n h_n(alpha/beta) t^n = prod(1 + beta_j t) / prod(1 - alpha_i t).
/// Throws Error if a polynomial spec has constant term other than 1.
TruncSeries super_series(const AlphabetSpec& alpha, const AlphabetSpec& beta, int order);

/// u(alpha/beta).
Rational specialize_super(const SymElement& u, const AlphabetSpec& alpha, const AlphabetSpec& beta,
                          const TransitionCache& cache = TransitionCache::global());

/// sum over P^2(n) of m_lambda(alpha) m_mu(beta) h_lambda e_mu, expanded in the h-basis.
SymElement ch_tensor_power(const Polynomial& f0, const Polynomial& f1, int n,
                           const TransitionCache& cache = TransitionCache::global());

/// f^(s_lambda) by basis conversion and by the Toeplitz determinant; throws
/// ConsistencyError if the two disagree.
Rational dim_V_lambda(const TruncSeries& f, const Partition& lambda,
                      const TransitionCache& cache = TransitionCache::global());

}  // namespace hecke
