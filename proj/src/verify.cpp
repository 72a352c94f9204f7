#include "hecke/verify.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/error.hpp"
#include "hecke/symfunc.hpp"

namespace hecke {

namespace {

int series_order(int n_max) { return 2 * n_max + 4; }

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? ", " : "") + std::to_string(dims[i]);
  return out;
}

std::string prefix(const TruncSeries& f, int n_max) {
  std::vector<Rational> c;
  for (int i = 0; i <= n_max; ++i) c.push_back(f[i]);
  return join_rationals(c);
}

std::string index_name(const std::string& base, int n) { return base + "[" + std::to_string(n) + "]"; }

TruncSeries dims_series(const std::vector<std::size_t>& dims) {
  std::vector<Rational> c;
  for (auto x : dims) c.emplace_back(static_cast<unsigned long>(x));
  return TruncSeries(std::move(c));
}

// Runs the certificate step as a check; returns whether a certificate was produced.
bool certify_into(VerificationReport& report, const std::string& name, const HeckeSymmetry& r, int n_max,
                  BirankCertificate& out) {
  try {
    out = certificate_from_symmetry(r, n_max);
    report.add(name, out.to_string(), "certified", true);
    return true;
  } catch (const Error& e) {
    report.add(name, e.what(), "certified", false);
    return false;
  }
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationReport::expect_equal(std::string name, std::string lhs, std::string rhs) {
  const bool pass = lhs == rhs;
  checks.push_back({std::move(name), std::move(lhs), std::move(rhs), pass});
}

void VerificationReport::add(std::string name, std::string lhs, std::string rhs, bool pass) {
  checks.push_back({std::move(name), std::move(lhs), std::move(rhs), pass});
}

std::string VerificationReport::render_table() const {
  std::size_t w_name = 5, w_lhs = 3, w_rhs = 3;
  for (const auto& c : checks) {
    w_name = std::max(w_name, c.name.size());
    w_lhs = std::max(w_lhs, c.lhs.size());
    w_rhs = std::max(w_rhs, c.rhs.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::ostringstream out;
  out << "suite " << suite << "\n";
  if (conjectural) out << "conjectural - source condition unverified\n";
  out << pad("check", w_name) << "  " << pad("lhs", w_lhs) << "  " << pad("rhs", w_rhs) << "  result\n";
  for (const auto& c : checks)
    out << pad(c.name, w_name) << "  " << pad(c.lhs, w_lhs) << "  " << pad(c.rhs, w_rhs) << "  "
        << (c.pass ? "pass" : "FAIL") << "\n";
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
  if (failed == 0) {
    out << "overall: PASS (" << checks.size() << " checks)\n";
  } else {
    out << "overall: FAIL (" << failed << " of " << checks.size() << " checks)";
    if (conjectural) out << " prediction mismatch - hypothesis may fail";
    out << "\n";
  }
  return out.str();
}

std::string VerificationReport::render_machine() const {
  std::ostringstream out;
  out << "# suite=" << suite << " conjectural=" << (conjectural ? "true" : "false") << "\n";
  for (const auto& c : checks)
    out << c.name << "\t" << c.lhs << "\t" << c.rhs << "\t" << (c.pass ? "pass" : "fail") << "\n";
  return out.str();
}

std::vector<std::size_t> symmetric_dims(const HeckeSymmetry& r, int n_max) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(dim_quotient(r, n ? Partition{n} : Partition{}, Partition{}));
  return out;
}

std::vector<std::size_t> exterior_dims(const HeckeSymmetry& r, int n_max) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(dim_quotient(r, Partition{}, n ? Partition{n} : Partition{}));
  return out;
}

BirankCertificate certificate_from_symmetry(const HeckeSymmetry& r, int n_max) {
  return birank_certificate(dims_series(symmetric_dims(r, n_max)), r.dim());
}

Rational tensor_dimension_identity(const BirankCertificate& cert, int n) {
  Rational total = 0;
  for (const auto& pair : enumerate_partition_pairs(n)) {
    const auto ma = specialize_super(SymElement::basis_element(Basis::m, pair.first), cert.f0, std::vector<Rational>{});
    if (ma == 0) continue;
    const auto mb = specialize_super(SymElement::basis_element(Basis::m, pair.second), cert.f1, std::vector<Rational>{});
    total += ma * mb * Rational(multinomial(pair));
  }
  return total;
}

VerificationReport suite_hilbert(const HeckeSymmetry& r, int n_max) {
  VerificationReport report{"hilbert", {}, r.user_supplied()};
  const auto sym = symmetric_dims(r, n_max);
  const auto ext = exterior_dims(r, n_max);
  const TruncSeries hs = dims_series(sym), hl = dims_series(ext);
  const TruncSeries product = hs * hl.substitute_negate();
  for (int n = 0; n <= n_max; ++n)
    report.expect_equal(index_name("HS(t)HL(-t)", n), to_string(product[n]), n == 0 ? "1" : "0");

  BirankCertificate cert;
  if (!certify_into(report, "certificate", r, n_max, cert)) return report;
  report.add("r0+r1<=d", std::to_string(cert.r0 + cert.r1), "<= " + std::to_string(r.dim()),
             cert.r0 + cert.r1 <= r.dim());
  report.expect_equal("sym series", join_dims(sym), prefix(cert.symmetric_series(series_order(n_max)), n_max));
  report.expect_equal("ext series", join_dims(ext), prefix(cert.exterior_series(series_order(n_max)), n_max));
  return report;
}

VerificationReport suite_character(const HeckeSymmetry& r, int n_max) {
  VerificationReport report{"character", {}, r.user_supplied()};
  BirankCertificate cert;
  if (!certify_into(report, "certificate", r, n_max, cert)) return report;
  const TruncSeries f = cert.symmetric_series(series_order(n_max));
  for (int n = 0; n <= n_max; ++n)
    for (const auto& nu : enumerate_partitions(n)) {
      const auto computed = dim_quotient(r, nu, Partition{});
      const Rational predicted = hom_eval(f, SymElement::basis_element(Basis::h, nu));
      report.expect_equal("dim S^" + nu.to_string(), std::to_string(computed), to_string(predicted));
    }
  Integer dn = 1;
  for (int n = 0; n <= n_max; ++n) {
    report.expect_equal(index_name("d^n identity", n), dn.get_str(), to_string(tensor_dimension_identity(cert, n)));
    dn *= r.dim();
  }
  return report;
}

VerificationReport suite_homspace(const HeckeSymmetry& r2, const HeckeSymmetry& r, int n_max) {
  if (r2.q() != r.q())
    throw Error("symmetries have different q: " + to_string(r2.q()) + " and " + to_string(r.q()));
  VerificationReport report{"homspace", {}, r.user_supplied() || r2.user_supplied()};
  BirankCertificate cert, cert2;
  const bool ok = certify_into(report, "certificate R", r, n_max, cert);
  const bool ok2 = certify_into(report, "certificate R'", r2, n_max, cert2);
  if (!ok || !ok2) return report;
  const int order = series_order(n_max);
  TruncSeries a_series;
  try {
    a_series = predict_A_series(cert, cert2, order);
  } catch (const ConsistencyError& e) {
    report.add("closed form", e.what(), "diamond", false);
    return report;
  }
  if (auto closed = closed_form_A_series(cert, cert2, order))
    report.expect_equal("closed form", prefix(*closed, n_max), prefix(a_series, n_max));
  const TruncSeries e_series = e_series_from_a(a_series);
  for (int n = 0; n <= n_max; ++n)
    report.expect_equal(index_name("dim A", n), std::to_string(dim_intertwiner(r2, r, n)), to_string(a_series[n]));
  for (int n = 0; n <= n_max; ++n)
    report.expect_equal(index_name("dim E", n), std::to_string(dim_e_component(r2, r, n)), to_string(e_series[n]));
  return report;
}

VerificationReport suite_positivity(const BirankCertificate& cert, int max_weight) {
  VerificationReport report{"positivity", {}, false};
  const TruncSeries f = cert.symmetric_series(max_weight);
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& lambda : enumerate_partitions(w)) {
      const Rational v = schur_determinant(f, lambda);
      const bool hook = in_hook(lambda, cert.r0, cert.r1);
      report.add("s" + lambda.to_string(), to_string(v), hook ? "> 0" : "= 0", hook ? v > 0 : v == 0);
    }
  // Once a rectangle (n^k) vanishes, every wider rectangle with k rows does too.
  for (int k = 1; k <= max_weight; ++k) {
    int first_zero = 0;
    bool monotone = true;
    for (int n = 1; n * k <= max_weight; ++n) {
      const bool zero = schur_determinant(f, Partition::rectangle(n, k)) == 0;
      if (zero && first_zero == 0) first_zero = n;
      if (!zero && first_zero != 0) monotone = false;
    }
    report.add("rectangles k=" + std::to_string(k),
               first_zero ? "vanish from width " + std::to_string(first_zero) : "none vanish",
               "monotone", monotone);
  }
  return report;
}

}  // namespace hecke
