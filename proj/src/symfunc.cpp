#include "hecke/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

char basis_tag(Basis b) {
  switch (b) {
    case Basis::m: return 'm';
    case Basis::h: return 'h';
    case Basis::e: return 'e';
    case Basis::s: return 's';
  }
  return '?';
}

Basis parse_basis(char tag) {
  switch (tag) {
    case 'm': return Basis::m;
    case 'h': return Basis::h;
    case 'e': return Basis::e;
    case 's': return Basis::s;
    default: throw ParseError(std::string("unknown basis tag '") + tag + "'");
  }
}

SymElement SymElement::basis_element(Basis basis, const Partition& lambda, const Rational& coeff) {
  SymElement u(lambda.weight(), basis);
  u.add(lambda, coeff);
  return u;
}

Rational SymElement::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymElement::add(const Partition& lambda, const Rational& c) {
  if (lambda.weight() != degree_)
    throw std::invalid_argument("partition " + lambda.to_string() + " does not have degree " +
                                std::to_string(degree_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymElement& SymElement::operator+=(const SymElement& other) {
  if (other.degree_ != degree_ || other.basis_ != basis_)
    throw std::invalid_argument("adding symmetric functions of different degree or basis");
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
  return *this;
}

SymElement& SymElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, x] : terms_) x *= c;
  return *this;
}

SymElement operator-(SymElement a, const SymElement& b) {
  SymElement neg = b;
  neg *= -1;
  return a += neg;
}

std::string SymElement::to_string() const {
  std::string out(1, basis_tag(basis_));
  out += ": ";
  if (terms_.empty()) return out + "0";
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += hecke::to_string(c) + "*" + lambda.to_string();
  }
  return out;
}

SymElement SymElement::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) throw ParseError("symmetric function needs a basis prefix");
  std::string tag = text.substr(0, colon);
  tag.erase(std::remove(tag.begin(), tag.end(), ' '), tag.end());
  if (tag.size() != 1) throw ParseError("basis tag must be one of m, h, e, s");
  Basis basis = parse_basis(tag[0]);
  std::string body = text.substr(colon + 1);
  std::vector<std::pair<Partition, Rational>> items;
  std::stringstream ss(body);
  std::string term;
  while (std::getline(ss, term, '+')) {
    auto star = term.find('*');
    if (star == std::string::npos) {
      if (term.find_first_not_of(' ') != std::string::npos && parse_rational(term) == 0) continue;
      throw ParseError("term without '*': '" + term + "'");
    }
    items.emplace_back(Partition::parse(term.substr(star + 1)), parse_rational(term.substr(0, star)));
  }
  int degree = items.empty() ? 0 : items.front().first.weight();
  SymElement u(degree, basis);
  for (const auto& [lambda, c] : items) {
    try {
      u.add(lambda, c);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return u;
}

// ---------------------------------------------------------------------------

TransitionCache::TransitionCache(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0 || max_degree > kHardMaxDegree)
    throw std::invalid_argument("degree cap must lie in [0, " + std::to_string(kHardMaxDegree) + "]");
}

TransitionCache& TransitionCache::global() {
  static TransitionCache cache;
  return cache;
}

namespace {

void check_degree(const TransitionCache& cache, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (degree > cache.max_degree())
    throw CapExceeded("symmetric-function degree " + std::to_string(degree) + " exceeds the configured cap " +
                      std::to_string(cache.max_degree()));
}

std::unique_ptr<DegreeTables> build_tables(int n) {
  auto t = std::make_unique<DegreeTables>();
  t->degree = n;
  t->partitions = enumerate_partitions(n);
  const std::size_t p = t->partitions.size();
  for (std::size_t i = 0; i < p; ++i) t->index.emplace(t->partitions[i], i);
  for (const auto& lambda : t->partitions) t->conjugate.push_back(t->index.at(conjugate(lambda)));
  t->kostka = DenseMatrix(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i; j < p; ++j)
      if (dominance_leq(t->partitions[j], t->partitions[i]))
        t->kostka(i, j) = Rational(kostka(t->partitions[i], t->partitions[j]));
  t->kostka_inverse = inverse(t->kostka);
  return t;
}

std::unique_ptr<MonomialTables> build_monomial(const DegreeTables& t) {
  auto m = std::make_unique<MonomialTables>();
  const std::size_t p = t.partitions.size();
  m->counts = DenseMatrix(p, p);
  DenseMatrix transposed(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i; j < p; ++j) {
      // N is symmetric: transposing a matrix swaps row and column sums.
      Rational c(count_row_col_matrices(t.partitions[i], t.partitions[j]));
      m->counts(i, j) = c;
      m->counts(j, i) = c;
    }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) transposed(i, j) = m->counts(j, i);
  m->counts_t_inverse = inverse(transposed);
  return m;
}

using Coeffs = std::vector<Rational>;

Coeffs mat_vec(const DenseMatrix& a, const Coeffs& x) {
  Coeffs y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

Coeffs dense_coeffs(const SymElement& u, const DegreeTables& t) {
  Coeffs c(t.partitions.size());
  for (const auto& [lambda, x] : u.terms()) c[t.index.at(lambda)] = x;
  return c;
}

SymElement from_coeffs(const Coeffs& c, Basis basis, const DegreeTables& t) {
  SymElement u(t.degree, basis);
  for (std::size_t i = 0; i < c.size(); ++i) u.add(t.partitions[i], c[i]);
  return u;
}

Coeffs permute_conjugate(const Coeffs& d, const DegreeTables& t) {
  Coeffs out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[t.conjugate[i]];
  return out;
}

Coeffs to_h_coeffs(const SymElement& u, const TransitionCache& cache) {
  const auto& t = cache.at(u.degree());
  Coeffs c = dense_coeffs(u, t);
  switch (u.basis()) {
    case Basis::h: return c;
    case Basis::s: return mat_vec(t.kostka_inverse, c);
    case Basis::e: {
      // e_mu = sum_lambda K_{lambda,mu} s_{lambda'}
      Coeffs d = mat_vec(t.kostka, c);
      return mat_vec(t.kostka_inverse, permute_conjugate(d, t));
    }
    case Basis::m: return mat_vec(cache.monomial(u.degree()).counts_t_inverse, c);
  }
  throw std::logic_error("unreachable basis");
}

SymElement from_h_coeffs(const Coeffs& c, Basis target, int degree, const TransitionCache& cache) {
  const auto& t = cache.at(degree);
  switch (target) {
    case Basis::h: return from_coeffs(c, Basis::h, t);
    case Basis::s: return from_coeffs(mat_vec(t.kostka, c), Basis::s, t);
    case Basis::e: {
      Coeffs d = mat_vec(t.kostka, c);
      return from_coeffs(mat_vec(t.kostka_inverse, permute_conjugate(d, t)), Basis::e, t);
    }
    case Basis::m: {
      const auto& n = cache.monomial(degree).counts;
      Coeffs mc(c.size());
      for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c.size(); ++i)
          if (c[i] != 0) mc[j] += n(i, j) * c[i];
      return from_coeffs(mc, Basis::m, t);
    }
  }
  throw std::logic_error("unreachable basis");
}

}  // namespace

const DegreeTables& TransitionCache::at(int degree) const {
  check_degree(*this, degree);
  auto d = static_cast<std::size_t>(degree);
  std::call_once(once_[d], [&] { tables_[d] = build_tables(degree); });
  return *tables_[d];
}

const MonomialTables& TransitionCache::monomial(int degree) const {
  const auto& t = at(degree);
  auto d = static_cast<std::size_t>(degree);
  std::call_once(monomial_once_[d], [&] { monomial_[d] = build_monomial(t); });
  return *monomial_[d];
}

SymElement to_basis(const SymElement& u, Basis target, const TransitionCache& cache) {
  if (u.basis() == target) {
    check_degree(cache, u.degree());
    return u;
  }
  return from_h_coeffs(to_h_coeffs(u, cache), target, u.degree(), cache);
}

SymElement multiply(const SymElement& u, const SymElement& v, const TransitionCache& cache) {
  const int n = u.degree() + v.degree();
  check_degree(cache, n);
  SymElement us = to_basis(u, Basis::s, cache);
  SymElement vs = to_basis(v, Basis::s, cache);
  SymElement out(n, Basis::s);
  for (const auto& nu : cache.at(n).partitions) {
    Rational total = 0;
    for (const auto& [lambda, a] : us.terms())
      for (const auto& [mu, b] : vs.terms()) {
        Integer c = lr_coeff(lambda, mu, nu);
        if (c != 0) total += a * b * Rational(c);
      }
    out.add(nu, total);
  }
  return out;
}

Rational inner_product(const SymElement& u, const SymElement& v, const TransitionCache& cache) {
  if (u.degree() != v.degree()) throw std::invalid_argument("inner product of different degrees");
  SymElement us = to_basis(u, Basis::s, cache);
  SymElement vs = to_basis(v, Basis::s, cache);
  Rational acc = 0;
  for (const auto& [lambda, a] : us.terms()) acc += a * vs.coeff(lambda);
  return acc;
}

SymElement omega(const SymElement& u, const TransitionCache& cache) {
  auto relabel = [&](Basis b) {
    SymElement out(u.degree(), b);
    for (const auto& [lambda, c] : u.terms()) out.add(lambda, c);
    return out;
  };
  switch (u.basis()) {
    case Basis::h: return relabel(Basis::e);
    case Basis::e: return relabel(Basis::h);
    case Basis::s: {
      SymElement out(u.degree(), Basis::s);
      for (const auto& [lambda, c] : u.terms()) out.add(conjugate(lambda), c);
      return out;
    }
    case Basis::m: return to_basis(omega(to_basis(u, Basis::s, cache), cache), Basis::m, cache);
  }
  throw std::logic_error("unreachable basis");
}

Rational hom_eval(const TruncSeries& f, const SymElement& u, const TransitionCache& cache) {
  if (u.degree() > f.order())
    throw Error("truncation order " + std::to_string(f.order()) + " is too small for degree " +
                std::to_string(u.degree()));
  const auto& t = cache.at(u.degree());
  Coeffs c = to_h_coeffs(u, cache);
  Rational acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rational term = c[i];
    for (int part : t.partitions[i].parts()) term *= f[part];
    acc += term;
  }
  return acc;
}

Rational schur_determinant(const TruncSeries& f, const Partition& lambda) {
  const auto k = static_cast<std::size_t>(lambda.length());
  if (lambda.weight() > f.order())
    throw Error("truncation order " + std::to_string(f.order()) + " is too small for " + lambda.to_string());
  DenseMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      int idx = lambda[static_cast<int>(i)] - static_cast<int>(i) + static_cast<int>(j);
      m(i, j) = f[idx];
    }
  return determinant(std::move(m));
}

SymElement xi(const TruncSeries& f, int n, const TransitionCache& cache) {
  if (n > f.order())
    throw Error("truncation order " + std::to_string(f.order()) + " is too small for xi_" + std::to_string(n));
  SymElement out(n, Basis::s);
  for (const auto& lambda : cache.at(n).partitions)
    out.add(lambda, hom_eval(f, SymElement::basis_element(Basis::s, lambda), cache));
  return out;
}

TruncSeries super_series(const AlphabetSpec& alpha, const AlphabetSpec& beta, int order) {
  auto check_constant = [](const Polynomial& p) {
    if (p[0] == 0) throw Error("alphabet polynomial has zero constant term");
    if (p[0] != 1) throw Error("alphabet polynomial must have constant term 1, got " + p.to_string());
  };
  TruncSeries f = TruncSeries::one(order);
  if (const auto* values = std::get_if<std::vector<Rational>>(&alpha)) {
    for (const auto& a : *values) f = f * TruncSeries::geometric(a, order);
  } else {
    const auto& f0 = std::get<Polynomial>(alpha);
    check_constant(f0);
    f = f * TruncSeries::from_polynomial(f0, order).inverse();
  }
  if (const auto* values = std::get_if<std::vector<Rational>>(&beta)) {
    for (const auto& b : *values) f = f * TruncSeries::from_polynomial(Polynomial{Rational(1), b}, order);
  } else {
    const auto& f1 = std::get<Polynomial>(beta);
    check_constant(f1);
    f = f * TruncSeries::from_polynomial(f1.negate_variable(), order);
  }
  return f;
}

Rational specialize_super(const SymElement& u, const AlphabetSpec& alpha, const AlphabetSpec& beta,
                          const TransitionCache& cache) {
  return hom_eval(super_series(alpha, beta, u.degree()), u, cache);
}

SymElement ch_tensor_power(const Polynomial& f0, const Polynomial& f1, int n, const TransitionCache& cache) {
  check_degree(cache, n);
  const AlphabetSpec none = std::vector<Rational>{};
  const TruncSeries alpha_h = super_series(f0, none, n);
  const TruncSeries beta_h = super_series(f1, none, n);
  SymElement out(n, Basis::h);
  for (const auto& [lambda, mu] : enumerate_partition_pairs(n)) {
    Rational weight = hom_eval(alpha_h, SymElement::basis_element(Basis::m, lambda), cache);
    if (weight == 0) continue;
    weight *= hom_eval(beta_h, SymElement::basis_element(Basis::m, mu), cache);
    if (weight == 0) continue;
    SymElement e_mu = to_basis(SymElement::basis_element(Basis::e, mu), Basis::h, cache);
    for (const auto& [rho, c] : e_mu.terms()) {
      std::vector<int> parts = lambda.parts();
      parts.insert(parts.end(), rho.parts().begin(), rho.parts().end());
      std::sort(parts.begin(), parts.end(), std::greater<>());
      out.add(Partition(std::move(parts)), weight * c);
    }
  }
  return out;
}

Rational dim_V_lambda(const TruncSeries& f, const Partition& lambda, const TransitionCache& cache) {
  Rational by_basis = hom_eval(f, SymElement::basis_element(Basis::s, lambda), cache);
  Rational by_determinant = schur_determinant(f, lambda);
  if (by_basis != by_determinant)
    throw ConsistencyError("f^(s" + lambda.to_string() + "): basis route gives " + to_string(by_basis) +
                           ", determinant route gives " + to_string(by_determinant));
  return by_basis;
}

}  // namespace hecke
