// hecke: command-line front end for the Hilbert-series library.
//
// Exit codes: 0 success, 1 check failure or inconclusive result, 2 usage or
// parse error, 3 size cap exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "hecke/error.hpp"
#include "hecke/rmatrix.hpp"
#include "hecke/series.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

int parse_int(const std::string& text, const std::string& what) {
  const Rational v = parse_rational(text);
  if (!is_integer(v) || !v.get_num().fits_sint_p()) throw ParseError(what + " must be an integer, got '" + text + "'");
  return static_cast<int>(v.get_num().get_si());
}

// std:r=R,q=Q | super:r0,r1,q=Q | file:PATH
HeckeSymmetry parse_symmetry_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("symmetry spec needs a std:, super: or file: prefix: '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (kind == "file") return load_symmetry_file(body);
  std::optional<int> r, r0, r1;
  std::optional<Rational> q;
  std::vector<std::string> positional;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const std::string item = trim(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      positional.push_back(item);
    } else {
      const std::string key = trim(item.substr(0, eq)), value = trim(item.substr(eq + 1));
      if (key == "q") q = parse_rational(value);
      else if (key == "r") r = parse_int(value, "r");
      else if (key == "r0") r0 = parse_int(value, "r0");
      else if (key == "r1") r1 = parse_int(value, "r1");
      else throw ParseError("unknown key '" + key + "' in symmetry spec");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!q) throw ParseError("symmetry spec '" + spec + "' lacks q=");
  if (*q == 0) throw ParseError("q must be nonzero");
  if (kind == "std") {
    if (!r && positional.size() == 1) r = parse_int(positional[0], "r");
    if (!r || *r < 1) throw ParseError("std: spec needs r=R with R >= 1");
    return build_standard(*r, *q);
  }
  if (kind == "super") {
    if (positional.size() == 2) {
      r0 = parse_int(positional[0], "r0");
      r1 = parse_int(positional[1], "r1");
    }
    if (!r0 || !r1 || *r0 < 0 || *r1 < 0 || *r0 + *r1 < 1) throw ParseError("super: spec needs r0,r1 with r0 + r1 >= 1");
    return build_super(*r0, *r1, *q);
  }
  throw ParseError("unknown symmetry kind '" + kind + "'");
}

HeckeSymmetry parse_symmetry_or_path(const std::string& text) {
  for (const char* prefix : {"std:", "super:", "file:"})
    if (text.rfind(prefix, 0) == 0) return parse_symmetry_spec(text);
  return load_symmetry_file(text);
}

// Builds a certificate from the predict inputs without throwing on root location.
BirankCertificate certificate_from_inputs(const std::string& series, const std::string& alphas,
                                          const std::string& betas) {
  Polynomial f0, f1;
  if (!series.empty()) {
    const RationalForm form = RationalForm::parse(series);
    if (form.numerator[0] != 1 || form.denominator[0] != 1)
      throw ParseError("rational form must have constant terms 1");
    f0 = form.denominator;
    f1 = form.numerator.negate_variable();
  } else {
    f0 = Polynomial::from_inverse_roots(parse_rational_list(alphas));
    f1 = Polynomial::from_inverse_roots(parse_rational_list(betas));
  }
  try {
    return certificate_from_polynomials(f0, f1);
  } catch (const CertificateError&) {
    BirankCertificate cert;
    cert.f0 = f0;
    cert.f1 = f1;
    cert.r0 = f0.degree();
    cert.r1 = f1.degree();
    cert.roots_verified = false;
    return cert;
  }
}

struct PredictOptions {
  std::string series, alphas, betas;
  std::string series2, alphas2, betas2;
  std::string what = "sym";
  int degree = 12;
};

int run_predict(const PredictOptions& o) {
  if (!o.series.empty() && (!o.alphas.empty() || !o.betas.empty()))
    throw ParseError("give either --series or --alphas/--betas, not both");
  const BirankCertificate cert = certificate_from_inputs(o.series, o.alphas, o.betas);
  std::vector<const BirankCertificate*> certs{&cert};
  std::optional<BirankCertificate> cert2;
  TruncSeries out;
  if (o.what == "sym") {
    out = cert.symmetric_series(o.degree);
  } else if (o.what == "ext") {
    out = cert.exterior_series(o.degree);
  } else if (o.what == "A" || o.what == "E") {
    if (o.series2.empty() && o.alphas2.empty() && o.betas2.empty())
      throw ParseError("--what " + o.what + " needs a second series (--series2 or --alphas2/--betas2)");
    cert2 = certificate_from_inputs(o.series2, o.alphas2, o.betas2);
    certs.push_back(&*cert2);
    out = diamond(cert.symmetric_series(o.degree), cert2->symmetric_series(o.degree), o.degree);
    if (cert.roots_verified && cert2->roots_verified) out = predict_A_series(cert, *cert2, o.degree);
    if (o.what == "E") out = e_series_from_a(out);
  } else {
    throw ParseError("--what must be sym, ext, A or E");
  }
  std::cout << out.to_string() << "\n";
  bool verified = true;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    std::cout << (i == 0 ? "certificate: " : "certificate2: ") << certs[i]->to_string() << "\n";
    verified = verified && certs[i]->roots_verified;
  }
  return verified ? kExitOk : kExitFailure;
}

struct ComputeOptions {
  std::string symmetry;
  std::string what = "sym";
  int degree = 4;
  bool machine = false;
};

void print_dims(const std::vector<std::size_t>& dims, bool machine) {
  if (machine) {
    for (std::size_t n = 0; n < dims.size(); ++n) std::cout << n << "\t" << dims[n] << "\n";
    return;
  }
  for (std::size_t n = 0; n < dims.size(); ++n) std::cout << (n ? ", " : "") << dims[n];
  std::cout << "\n";
}

int run_compute(const ComputeOptions& o) {
  const HeckeSymmetry r = parse_symmetry_spec(o.symmetry);
  std::vector<std::size_t> dims;
  if (o.what == "sym") {
    dims = symmetric_dims(r, o.degree);
  } else if (o.what == "ext") {
    dims = exterior_dims(r, o.degree);
  } else if (o.what.rfind("quotient:", 0) == 0) {
    const std::string body = o.what.substr(9);
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw ParseError("quotient needs '[lambda];[mu]'");
    const Partition lambda = Partition::parse(trim(body.substr(0, semi)));
    const Partition mu = Partition::parse(trim(body.substr(semi + 1)));
    std::cout << dim_quotient(r, lambda, mu) << "\n";
    return kExitOk;
  } else if (o.what.rfind("A:", 0) == 0 || o.what.rfind("E:", 0) == 0) {
    const HeckeSymmetry r2 = parse_symmetry_or_path(o.what.substr(2));
    const bool is_a = o.what[0] == 'A';
    for (int n = 0; n <= o.degree; ++n) dims.push_back(is_a ? dim_intertwiner(r2, r, n) : dim_e_component(r2, r, n));
  } else {
    throw ParseError("--what must be sym, ext, quotient:[l];[m], A:SPEC or E:SPEC");
  }
  print_dims(dims, o.machine);
  return kExitOk;
}

struct VerifyOptions {
  std::string suite = "all";
  std::string symmetry;
  std::string symmetry2;
  int nmax = 4;
  int max_weight = 8;
  bool machine = false;
};

int run_verify(const VerifyOptions& o) {
  const HeckeSymmetry r = parse_symmetry_spec(o.symmetry);
  const HeckeSymmetry r2 = o.symmetry2.empty() ? r : parse_symmetry_spec(o.symmetry2);
  std::vector<VerificationReport> reports;
  const bool all = o.suite == "all";
  if (!all && o.suite != "hilbert" && o.suite != "character" && o.suite != "homspace" && o.suite != "positivity")
    throw ParseError("unknown suite '" + o.suite + "'");
  if (all || o.suite == "hilbert") reports.push_back(suite_hilbert(r, o.nmax));
  if (all || o.suite == "character") reports.push_back(suite_character(r, o.nmax));
  if (all || o.suite == "homspace") reports.push_back(suite_homspace(r2, r, o.nmax));
  if (all || o.suite == "positivity") {
    try {
      VerificationReport rep = suite_positivity(certificate_from_symmetry(r, o.nmax), o.max_weight);
      rep.conjectural = r.user_supplied();
      reports.push_back(std::move(rep));
    } catch (const Error& e) {
      VerificationReport rep{"positivity", {}, r.user_supplied()};
      rep.add("certificate", e.what(), "certified", false);
      reports.push_back(std::move(rep));
    }
  }
  bool pass = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i && !o.machine) std::cout << "\n";
    std::cout << (o.machine ? reports[i].render_machine() : reports[i].render_table());
    pass = pass && reports[i].passed();
  }
  return pass ? kExitOk : kExitFailure;
}

// Coefficient list, or "num;den" expanded to the given order.
TruncSeries series_argument(const std::string& text, int order) {
  if (text.find(';') != std::string::npos) return RationalForm::parse(text).expand(order);
  auto c = parse_rational_list(text);
  if (c.empty()) throw ParseError("empty coefficient list");
  if (static_cast<int>(c.size()) <= order) c.resize(static_cast<std::size_t>(order) + 1);
  return TruncSeries(std::move(c));
}

struct SeriesOptions {
  std::string coeffs, f, g;
  int degree = 12;
  int r_max = -1;
  int max_weight = 6;
};

int run_detect(const SeriesOptions& o) {
  const TruncSeries f(parse_rational_list(o.coeffs));
  if (f.coeffs().empty()) throw ParseError("empty coefficient list");
  const int r_max = o.r_max >= 0 ? o.r_max : std::max(3, (f.order() - 2) / 2);
  const auto found = detect_rational(f, r_max);
  if (!found) {
    std::cout << "not detected: inconclusive at this truncation (order " << f.order() << ", r_max " << r_max << ")\n";
    return kExitFailure;
  }
  std::cout << found->form.to_string() << "\n";
  std::cout << "evidence: recurrence of order " << found->order << " from index " << found->onset
            << " checked through order " << found->truncation << "\n";
  return kExitOk;
}

int run_diamond(const SeriesOptions& o) {
  const TruncSeries f = series_argument(o.f, o.degree), g = series_argument(o.g, o.degree);
  std::cout << diamond(f, g, o.degree).to_string() << "\n";
  return kExitOk;
}

int run_positivity(const SeriesOptions& o) {
  const TruncSeries f = series_argument(o.coeffs, o.max_weight);
  if (auto bad = total_positivity(f, o.max_weight)) {
    std::cout << "violation at " << bad->lambda.to_string() << ": " << to_string(bad->value) << "\n";
    return kExitFailure;
  }
  std::cout << "totally positive through weight " << o.max_weight << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hilbert series of algebras attached to Hecke symmetries.\n"
      "Exit codes: 0 success, 1 check failure or inconclusive, 2 usage/parse error, 3 cap exceeded.\n"
      "Machine output (--machine): one record per line, fields separated by TAB;\n"
      "verify prints 'name lhs rhs pass|fail' after a '# suite=... conjectural=...' line,\n"
      "compute prints 'n dim'."};
  app.require_subcommand(1);

  PredictOptions po;
  auto* predict = app.add_subcommand("predict", "Hilbert series predicted from f0, f1");
  predict->add_option("--series", po.series, "rational form \"num;den\" of the symmetric-algebra series");
  predict->add_option("--alphas", po.alphas, "inverse roots of f0, comma separated");
  predict->add_option("--betas", po.betas, "inverse roots of f1, comma separated");
  predict->add_option("--series2", po.series2, "second rational form (for A, E)");
  predict->add_option("--alphas2", po.alphas2, "second alphas (for A, E)");
  predict->add_option("--betas2", po.betas2, "second betas (for A, E)");
  predict->add_option("--what", po.what, "sym | ext | A | E")->check(CLI::IsMember({"sym", "ext", "A", "E"}));
  predict->add_option("--degree", po.degree, "truncation order")->check(CLI::Range(0, 60));

  ComputeOptions co;
  auto* compute = app.add_subcommand("compute", "dimensions from the matrix engine");
  compute->add_option("--symmetry", co.symmetry, "std:r=R,q=Q | super:r0,r1,q=Q | file:PATH")->required();
  compute->add_option("--what", co.what, "sym | ext | quotient:[l];[m] | A:SPEC | E:SPEC");
  compute->add_option("--degree", co.degree, "largest degree")->check(CLI::Range(0, 64));
  compute->add_flag("--machine", co.machine, "TAB-separated output");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "cross-validation suites");
  verify->add_option("--suite", vo.suite, "hilbert | character | homspace | positivity | all");
  verify->add_option("--symmetry", vo.symmetry, "symmetry spec")->required();
  verify->add_option("--symmetry2", vo.symmetry2, "second symmetry for homspace (defaults to --symmetry)");
  verify->add_option("--nmax", vo.nmax, "largest tensor degree")->check(CLI::Range(1, 16));
  verify->add_option("--max-weight", vo.max_weight, "largest weight for positivity")->check(CLI::Range(0, 20));
  verify->add_flag("--machine", vo.machine, "TAB-separated output");

  SeriesOptions so;
  auto* series = app.add_subcommand("series", "power-series tools");
  series->require_subcommand(1);
  auto* detect = series->add_subcommand("detect-rational", "find p/q matching the coefficients");
  detect->add_option("--coeffs", so.coeffs, "a_0, a_1, ...")->required();
  detect->add_option("--rmax", so.r_max, "largest denominator degree")->check(CLI::Range(0, 30));
  auto* dia = series->add_subcommand("diamond", "the diamond product f <> g");
  dia->add_option("--f", so.f, "coefficients or \"num;den\"")->required();
  dia->add_option("--g", so.g, "coefficients or \"num;den\"")->required();
  dia->add_option("--degree", so.degree, "truncation order")->check(CLI::Range(0, 30));
  auto* tp = series->add_subcommand("total-positivity", "check all Toeplitz minors are nonnegative");
  tp->add_option("--coeffs", so.coeffs, "coefficients or \"num;den\"")->required();
  tp->add_option("--max-weight", so.max_weight, "largest partition weight")->check(CLI::Range(0, 30));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*predict) return run_predict(po);
    if (*compute) return run_compute(co);
    if (*verify) return run_verify(vo);
    if (*detect) return run_detect(so);
    if (*dia) return run_diamond(so);
    if (*tp) return run_positivity(so);
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.line() > 0) std::cerr << " at line " << e.line() << ", column " << e.column();
    std::cerr << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ValidationError& e) {
    std::cerr << "invalid symmetry: " << e.what() << " (witness";
    for (int w : e.witness()) std::cerr << " " << w;
    std::cerr << ")\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
