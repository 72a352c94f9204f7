#pragma once

#include <string>
#include <vector>

#include "hecke/rmatrix.hpp"
#include "hecke/series.hpp"

namespace hecke {

struct Check {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  bool conjectural = false;

  bool passed() const;
  /// Adds a check passing iff lhs == rhs.
  void expect_equal(std::string name, std::string lhs, std::string rhs);
  void add(std::string name, std::string lhs, std::string rhs, bool pass);

  /// Aligned table with a PASS/FAIL summary line.
  std::string render_table() const;
  /// "# suite=<name> conjectural=<bool>" followed by name TAB lhs TAB rhs TAB pass|fail per check.
  std::string render_machine() const;
};

/// dim S_n and dim Lambda_n for n <= n_max from the matrix engine.
std::vector<std::size_t> symmetric_dims(const HeckeSymmetry& r, int n_max);
std::vector<std::size_t> exterior_dims(const HeckeSymmetry& r, int n_max);

/// Certificate detected from the computed symmetric-algebra dimensions.
BirankCertificate certificate_from_symmetry(const HeckeSymmetry& r, int n_max);

/// sum over P^2(n) of m_lambda(alpha) m_mu(beta) n! / (prod lambda_i! prod mu_j!)
/// where alpha, beta are the inverse roots of f0, f1.
Rational tensor_dimension_identity(const BirankCertificate& cert, int n);

VerificationReport suite_hilbert(const HeckeSymmetry& r, int n_max);
VerificationReport suite_character(const HeckeSymmetry& r, int n_max);
/// Throws Error when the two symmetries have different q.
VerificationReport suite_homspace(const HeckeSymmetry& r2, const HeckeSymmetry& r, int n_max);
VerificationReport suite_positivity(const BirankCertificate& cert, int max_weight);

}  // namespace hecke
