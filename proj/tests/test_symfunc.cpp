#include <doctest.h>

#include <thread>

#include "hecke/error.hpp"
#include "hecke/symfunc.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

SymElement s_(const Partition& l, const Rational& c = 1) { return SymElement::basis_element(Basis::s, l, c); }
SymElement h_(const Partition& l, const Rational& c = 1) { return SymElement::basis_element(Basis::h, l, c); }
SymElement e_(const Partition& l, const Rational& c = 1) { return SymElement::basis_element(Basis::e, l, c); }
SymElement m_(const Partition& l, const Rational& c = 1) { return SymElement::basis_element(Basis::m, l, c); }

SymElement random_element(oracle::Rng& rng, int degree, Basis basis) {
  SymElement u(degree, basis);
  for (const auto& l : enumerate_partitions(degree))
    if (rng.uniform(0, 2) > 0) u.add(l, rng.rational(5, 3));
  return u;
}

std::vector<Rational> random_point(oracle::Rng& rng, int k) {
  std::vector<Rational> x;
  for (int i = 0; i < k; ++i) x.push_back(rng.rational(4, 3));
  return x;
}

Rational power(const Rational& a, int n) {
  Rational out = 1;
  for (int i = 0; i < n; ++i) out *= a;
  return out;
}

// Series prod 1/(1 - x_i t), so that f^ is evaluation at x.
TruncSeries point_series(const std::vector<Rational>& x, int order) { return super_series(x, std::vector<Rational>{}, order); }

}  // namespace

TEST_CASE("text form") {
  SymElement u = h_({2}, 2) + h_({1, 1});
  CHECK(u.to_string() == "h: 2*[2] + 1*[1,1]");
  CHECK(SymElement(3, Basis::e).to_string() == "e: 0");
  CHECK(SymElement::parse("h: 2*[2] + 1*[1,1]") == u);
  CHECK(SymElement::parse("s: -1/2*[2,1]") == s_({2, 1}, Rational(-1, 2)));
  CHECK(SymElement::parse("m: 0") == SymElement(0, Basis::m));
  CHECK_THROWS_AS(SymElement::parse("x: 1*[1]"), ParseError);
  CHECK_THROWS_AS(u.add({3}, 1), std::invalid_argument);
  u.add({2}, -2);
  CHECK(u == h_({1, 1}));
}

TEST_CASE("basis conversion examples") {
  CHECK(to_basis(h_({2}), Basis::s) == s_({2}));
  CHECK(to_basis(e_({2}), Basis::s) == s_({1, 1}));
  CHECK(to_basis(s_({2, 1}), Basis::h) == h_({2, 1}) - h_({3}));
  CHECK(to_basis(h_({2}), Basis::m) == m_({2}) + m_({1, 1}));
  CHECK_THROWS_AS(to_basis(h_(Partition(std::vector<int>(15, 1))), Basis::s), CapExceeded);
}

TEST_CASE("conversions agree with brute-force evaluation and roundtrip") {
  oracle::Rng rng(11);
  const Basis all[] = {Basis::m, Basis::h, Basis::e, Basis::s};
  for (int n = 0; n <= 6; ++n)
    for (Basis from : all) {
      const SymElement u = random_element(rng, n, from);
      const auto x = random_point(rng, n);
      const Rational value = oracle::evaluate(u, x);
      for (Basis to : all) {
        const SymElement v = to_basis(u, to);
        CHECK(v.basis() == to);
        CHECK(oracle::evaluate(v, x) == value);
        CHECK(to_basis(v, from) == u);
      }
    }
  for (int n = 7; n <= 8; ++n)
    for (Basis from : all) {
      const SymElement u = random_element(rng, n, from);
      for (Basis to : all) CHECK(to_basis(to_basis(to_basis(u, to), Basis::s), from) == u);
    }
}

TEST_CASE("multiplication") {
  CHECK(multiply(s_({1}), s_({1})) == s_({2}) + s_({1, 1}));
  CHECK(multiply(s_({2, 1}), SymElement::one()) == s_({2, 1}));
  CHECK(multiply(s_({1, 1}), s_({1, 1})).coeff({2, 2}) == 1);
  oracle::Rng rng(12);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const SymElement u = random_element(rng, a, Basis::h), v = random_element(rng, b, Basis::e);
      const SymElement uv = multiply(u, v);
      CHECK(uv == multiply(v, u));
      const auto x = random_point(rng, a + b);
      CHECK(oracle::evaluate(uv, x) == oracle::evaluate(u, x) * oracle::evaluate(v, x));
      const SymElement w = random_element(rng, 2, Basis::s);
      CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    }
}

TEST_CASE("Hall inner product") {
  CHECK(inner_product(s_({2}), s_({2})) == 1);
  CHECK(inner_product(h_({1, 1}), m_({1, 1})) == 1);
  CHECK(inner_product(e_({2}), h_({2})) == 0);
  CHECK_THROWS_AS(inner_product(s_({2}), s_({1})), std::invalid_argument);
  for (int n = 0; n <= 6; ++n)
    for (const auto& l : enumerate_partitions(n))
      for (const auto& m : enumerate_partitions(n)) {
        CHECK(inner_product(h_(l), m_(m)) == (l == m ? 1 : 0));
        CHECK(inner_product(s_(l), s_(m)) == (l == m ? 1 : 0));
        // <h_l, h_m> = N_{l m}
        CHECK(inner_product(h_(l), h_(m)) == Rational(oracle::count_matrices(l.parts(), m.parts(), -1)));
      }
}

TEST_CASE("omega") {
  CHECK(omega(h_({3})) == e_({3}));
  CHECK(omega(s_({2, 1})) == s_({2, 1}));
  CHECK(omega(s_({3, 1})) == s_({2, 1, 1}));
  oracle::Rng rng(13);
  for (int n = 0; n <= 6; ++n) {
    const SymElement u = random_element(rng, n, Basis::m);
    CHECK(omega(omega(u)) == u);
  }
}

TEST_CASE("h, e and power identities") {
  // sum (-1)^i h_i e_{n-i} = 0
  for (int n = 1; n <= 8; ++n) {
    SymElement total(n, Basis::s);
    for (int i = 0; i <= n; ++i) {
      SymElement term = multiply(to_basis(h_(i ? Partition{i} : Partition{}), Basis::s),
                                 to_basis(e_(n - i ? Partition{n - i} : Partition{}), Basis::s));
      term *= (i % 2 ? -1 : 1);
      total += term;
    }
    CHECK(total.is_zero());
  }
  // h_1^n = sum d^rho s_rho
  for (int n = 0; n <= 7; ++n) {
    SymElement expected(n, Basis::s);
    for (const auto& rho : enumerate_partitions(n)) expected.add(rho, Rational(oracle::standard_tableaux(rho.parts())));
    CHECK(to_basis(h_(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))), Basis::s) == expected);
  }
}

TEST_CASE("Kostka matrix in the cache is unitriangular") {
  for (int n = 0; n <= 8; ++n) {
    const auto& t = TransitionCache::global().at(n);
    for (std::size_t i = 0; i < t.partitions.size(); ++i)
      for (std::size_t j = 0; j < t.partitions.size(); ++j) {
        if (i == j) CHECK(t.kostka(i, j) == 1);
        if (i > j) CHECK(t.kostka(i, j) == 0);
        CHECK(t.kostka(i, j) == Rational(oracle::ssyt_count(t.partitions[i], t.partitions[j].parts())));
      }
    CHECK(t.kostka * t.kostka_inverse == DenseMatrix::identity(t.partitions.size()));
  }
}

TEST_CASE("transition cache caps and concurrent first use") {
  CHECK_THROWS_AS(TransitionCache(25), std::invalid_argument);
  TransitionCache small(4);
  CHECK_THROWS_AS(small.at(5), CapExceeded);
  TransitionCache shared(9);
  std::vector<const DegreeTables*> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i) threads.emplace_back([&, i] { seen[i] = &shared.at(9); });
  for (auto& t : threads) t.join();
  for (auto* p : seen) CHECK(p == seen[0]);
}

TEST_CASE("hom_eval") {
  CHECK(hom_eval(TruncSeries::geometric(1, 4), s_({1, 1})) == 0);
  CHECK(hom_eval(TruncSeries({1, 1, 0, 0}), e_({3})) == 1);
  CHECK(hom_eval(TruncSeries({1, 7}), SymElement::one()) == 1);
  CHECK_THROWS_AS(hom_eval(TruncSeries({1, 1}), h_({2})), Error);
  oracle::Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_point(rng, 4);
    const TruncSeries f = point_series(x, 4);
    const SymElement u = random_element(rng, 4, Basis::s);
    CHECK(hom_eval(f, u) == oracle::evaluate(u, x));
  }
  // Multiplicative for arbitrary rational coefficient sequences.
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c{1};
    for (int i = 1; i <= 8; ++i) c.push_back(rng.rational(5, 4));
    const TruncSeries f(c);
    const int a = rng.uniform(0, 4), b = rng.uniform(0, 4);
    const SymElement u = random_element(rng, a, Basis::e), v = random_element(rng, b, Basis::m);
    CHECK(hom_eval(f, multiply(u, v)) == hom_eval(f, u) * hom_eval(f, v));
  }
}

TEST_CASE("Toeplitz determinant and dim_V_lambda") {
  const TruncSeries f = TruncSeries::from_rational({1}, Polynomial{1, -2, 1}, 6);
  CHECK(dim_V_lambda(f, {1, 1}) == 1);
  CHECK(dim_V_lambda(f, {1, 1, 1}) == 0);
  CHECK(dim_V_lambda(f, {5}) == f[5]);
  oracle::Rng rng(15);
  std::vector<Rational> c{1};
  for (int i = 1; i <= 7; ++i) c.push_back(rng.rational(6, 5));
  const TruncSeries g(c);
  for (int n = 0; n <= 7; ++n)
    for (const auto& l : enumerate_partitions(n)) CHECK(schur_determinant(g, l) == dim_V_lambda(g, l));
}

TEST_CASE("xi") {
  const TruncSeries f({1, 3, 2, 5});
  CHECK(xi(f, 0) == SymElement::one());
  const Rational a(2, 3);
  for (int n = 1; n <= 5; ++n)
    CHECK(to_basis(xi(TruncSeries::geometric(a, 5), n), Basis::h) == h_({n}, power(a, n)));
  CHECK(xi(TruncSeries({1, 1, 1}), 2) == s_({2}));
  oracle::Rng rng(16);
  for (int n = 0; n <= 3; ++n)
    for (const auto& l : enumerate_partitions(n)) {
      const SymElement u = random_element(rng, n, Basis::e);
      CHECK(inner_product(xi(f, n), u) == hom_eval(f, u));
      (void)l;
    }
  // xi_n(f g) = sum_i xi_i(f) xi_{n-i}(g)
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> cf{1}, cg{1};
    for (int i = 1; i <= 6; ++i) {
      cf.push_back(rng.rational(4, 3));
      cg.push_back(rng.rational(4, 3));
    }
    const TruncSeries ff(cf), gg(cg);
    const TruncSeries fg = ff * gg;
    for (int n = 0; n <= 6; ++n) {
      SymElement total(n, Basis::s);
      for (int i = 0; i <= n; ++i) total += multiply(xi(ff, i), xi(gg, n - i));
      CHECK(xi(fg, n) == total);
    }
  }
}

TEST_CASE("super specialization") {
  const std::vector<Rational> none;
  CHECK(specialize_super(s_({1, 1}), none, std::vector<Rational>{1}) == 1);
  CHECK(specialize_super(s_({2}), std::vector<Rational>{1}, std::vector<Rational>{1}) == 2);
  CHECK(specialize_super(s_({2, 1}), std::vector<Rational>{3}, none) == 0);
  CHECK_THROWS_AS(specialize_super(s_({1}), Polynomial{0, 1}, none), Error);
  CHECK_THROWS_AS(specialize_super(s_({1}), Polynomial{2, 1}, none), Error);
  // Polynomial specs give the same values as root lists.
  const std::vector<Rational> alpha{2, Rational(1, 3)}, beta{5};
  for (int n = 0; n <= 5; ++n)
    for (const auto& l : enumerate_partitions(n))
      CHECK(specialize_super(s_(l), Polynomial::from_inverse_roots(alpha), Polynomial::from_inverse_roots(beta)) ==
            specialize_super(s_(l), alpha, beta));
}

TEST_CASE("hook Schur vanishing and the skew expansion") {
  oracle::Rng rng(17);
  for (auto [r0, r1] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {0, 2}, {2, 0}}) {
    std::vector<Rational> alpha, beta;
    for (int i = 0; i < r0; ++i) alpha.push_back(Rational(rng.uniform(1, 5), rng.uniform(1, 3)));
    for (int i = 0; i < r1; ++i) beta.push_back(Rational(rng.uniform(1, 5), rng.uniform(1, 3)));
    for (auto& x : alpha) x.canonicalize();
    for (auto& x : beta) x.canonicalize();
    for (int n = 0; n <= 8; ++n)
      for (const auto& l : enumerate_partitions(n)) {
        const Rational v = specialize_super(s_(l), alpha, beta);
        CHECK((v != 0) == in_hook(l, r0, r1));
        if (n > 6) continue;
        // s_l(alpha/beta) = sum_mu s_mu(alpha) s_{l'/mu'}(beta)
        Rational expansion = 0;
        const Partition lc = conjugate(l);
        for (int k = 0; k <= n; ++k)
          for (const auto& mu : enumerate_partitions(k)) {
            if (!contains(l, mu)) continue;
            const Rational smu = oracle::schur_sym(mu, alpha);
            if (smu == 0) continue;
            Rational skew = 0;
            for (const auto& nu : enumerate_partitions(n - k))
              skew += Rational(lr_coeff(conjugate(mu), nu, lc)) * oracle::schur_sym(nu, beta);
            expansion += smu * skew;
          }
        CHECK(v == expansion);
      }
  }
}

TEST_CASE("ch of tensor powers") {
  CHECK(ch_tensor_power(Polynomial{1, -2, 1}, Polynomial{1}, 2) == h_({2}, 2) + h_({1, 1}));
  for (int n = 0; n <= 5; ++n)
    CHECK(ch_tensor_power(Polynomial{1, -1}, Polynomial{1}, n) == h_(n ? Partition{n} : Partition{}));
  CHECK(ch_tensor_power(Polynomial{1, 3, 1}, Polynomial{1, 2}, 0) == h_({}));
  // ch(V^n) = xi_n of the symmetric-algebra series.
  const Polynomial f0{1, -3, 2}, f1{1, -1};
  const TruncSeries f = TruncSeries::from_rational(f1.negate_variable(), f0, 6);
  for (int n = 0; n <= 5; ++n) CHECK(ch_tensor_power(f0, f1, n) == to_basis(xi(f, n), Basis::h));
}
